#include <doctest.h>

#include <cmath>
#include <random>

#include "lpt/engine.hpp"
#include "lpt/error.hpp"
#include "lpt/oracle.hpp"
#include "lpt/resummation.hpp"

using namespace lpt;

namespace {

EnergySeries quartic_series(const Rational& lambda, int n, int l, int order) {
  return compute_series(make_potential(1, 1, {lambda}), make_state(n, l), order).series;
}

}  // namespace

TEST_CASE("partial sums") {
  const auto harmonic = compute_series(make_potential(1, 1, {}), make_state(0, 0), 8).series;
  for (double s : partial_sums(harmonic).values) CHECK(s == 1.5);

  const auto simple = partial_sums(EnergySeries({Rational(1), Rational(-1, 2), Rational(1, 4)}));
  CHECK(simple.values == std::vector<double>{1.0, 0.5, 0.75});
  CHECK_FALSE(simple.overflow);

  const auto quartic = partial_sums(quartic_series(Rational(1, 100), 0, 0, 5));
  CHECK(quartic.values.back() == doctest::Approx(1.535642).epsilon(1e-6));

  const auto huge = partial_sums(EnergySeries({Rational(1), Rational(2).pow(1100)}));
  CHECK(huge.overflow);
  CHECK(std::isinf(huge.values.back()));
}

TEST_CASE("partial sums telescope to the rounded corrections") {
  const auto series = quartic_series(Rational(1, 7), 1, 1, 12);
  const auto sums = partial_sums(series).values;
  for (int k = 1; k < series.order(); ++k) {
    const double diff = sums[k] - sums[k - 1];
    const double ulp = std::nextafter(std::abs(sums[k]), INFINITY) - std::abs(sums[k]);
    CHECK(std::abs(diff - series.at(k + 1).to_double()) <= 2 * ulp);
  }
}

TEST_CASE("Pade reproduces rational functions") {
  const std::vector<double> geometric{1, 1, 1, 1};
  CHECK(pade_approximant(geometric, 0, 1, 0.3) == doctest::Approx(1.0 / 0.7).epsilon(1e-14));

  const std::vector<double> linear{1, 1, 0, 0, 0, 0, 0};
  for (auto [p, q] : {std::pair{1, 0}, {2, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 3}, {4, 2}}) {
    CAPTURE(p);
    CAPTURE(q);
    CHECK(pade_approximant(linear, p, q, 0.37) == doctest::Approx(1.37).epsilon(1e-14));
  }

  // (1 + 2x - x²) / (1 - 0.5x + 0.25x²), expanded to 10 terms.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> num{coef(rng), coef(rng), coef(rng)};
    const std::vector<double> den{1.0, coef(rng), coef(rng)};
    std::vector<double> series(8, 0.0);
    for (std::size_t k = 0; k < series.size(); ++k) {
      double acc = k < num.size() ? num[k] : 0.0;
      for (std::size_t j = 1; j <= std::min<std::size_t>(k, 2); ++j) acc -= den[j] * series[k - j];
      series[k] = acc;
    }
    const double x = 0.2;
    const double exact = (num[0] + x * (num[1] + x * num[2])) / (1.0 + x * (den[1] + x * den[2]));
    CHECK(pade_approximant(series, 2, 2, x) == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("Pade error paths") {
  const std::vector<double> c{1, 0, 1};
  try {
    (void)pade_approximant(c, 1, 1, 0.5);
    FAIL("expected SingularPadeSystem");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularPadeSystem);
  }
  CHECK_THROWS_AS(pade_approximant(c, 2, 1, 0.5), Error);
  CHECK_THROWS_AS(pade_approximant(c, -1, 1, 0.5), Error);
  CHECK_THROWS_AS(pade(EnergySeries({Rational(1), Rational(1)}), 0, 1, 0.0), Error);
}

TEST_CASE("Pade of the reduced quartic series beats the partial sum at lambda = 0.1") {
  const auto series = quartic_series(Rational(1, 10), 0, 0, 7);
  const auto reduced = reduced_coefficients(series, 0.1);
  CHECK(reduced[1] == doctest::Approx(15.0 / 4.0).epsilon(1e-14));
  CHECK(reduced[2] == doctest::Approx(-165.0 / 8.0).epsilon(1e-14));

  const auto pot = make_potential(1, 1, {Rational(1, 10)});
  const auto oracle = solve_radial(pot, default_oracle_config(pot, make_state(0, 0)));
  const double approximant = pade(series, 3, 3, 0.1);
  const double partial = partial_sums(series).values.back();
  CHECK(std::abs(approximant - oracle.energy) < std::abs(partial - oracle.energy));
}

TEST_CASE("divergence diagnostics") {
  SUBCASE("harmonic series has no growth") {
    const auto series = compute_series(make_potential(1, 1, {}), make_state(1, 1), 8).series;
    const auto report = divergence_diagnostics(series);
    REQUIRE(report.ratios.size() == 7);
    CHECK(report.ratios[0] == 0.0);
    for (std::size_t k = 1; k < report.ratios.size(); ++k) CHECK_FALSE(report.ratios[k].has_value());
    CHECK_FALSE(report.asymptotic_growth);
    CHECK(report.stability_flag);
    CHECK(report.partial_sums.size() == 8);
  }

  SUBCASE("quartic lambda = 1 grows and alternates") {
    const auto series = quartic_series(Rational(1), 0, 0, 15);
    const auto report = divergence_diagnostics(series);
    CHECK(report.asymptotic_growth);
    CHECK_FALSE(report.stability_flag);
    for (int k = 10; k <= 14; ++k) CHECK(*report.ratios[k - 1] > *report.ratios[k - 2]);
    for (int k = 2; k < 15; ++k) CHECK(series.at(k).sign() == -series.at(k + 1).sign());
  }

  SUBCASE("report records Pade degrees and leaves the series alone") {
    const auto series = quartic_series(Rational(1, 10), 0, 0, 8);
    const auto before = series;
    SummationOptions options;
    options.pade = PadeRequest{3, 3, 0.1};
    const auto report = divergence_diagnostics(series, options);
    CHECK(report.pade_degrees == std::pair{3, 3});
    REQUIRE(report.pade_value.has_value());
    CHECK(*report.pade_value == doctest::Approx(pade(series, 3, 3, 0.1)));
    CHECK(series == before);
  }

  SUBCASE("stability threshold") {
    const auto tiny = quartic_series(Rational(1, 1000000), 0, 0, 6);
    CHECK(divergence_diagnostics(tiny).stability_flag);
    SummationOptions strict;
    strict.stability_tolerance = 1e-40;
    CHECK_FALSE(divergence_diagnostics(tiny, strict).stability_flag);
  }

  CHECK_THROWS_AS(divergence_diagnostics(quartic_series(Rational(1), 0, 0, 5)), Error);
}
