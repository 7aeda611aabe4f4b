#include <doctest.h>

#include <chrono>
#include <random>

#include "lpt/engine.hpp"
#include "lpt/error.hpp"
#include "support/closed_forms.hpp"
#include "support/random_inputs.hpp"
#include "support/series_oracles.hpp"

using namespace lpt;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("c0 coefficients: harmonic is exactly -r") {
  const auto c0 = c0_coefficients(make_potential(1, 1, {}), 3);
  CHECK(c0.coeffs == ints({-1, 0, 0, 0}));
}

TEST_CASE("c0 coefficients match the binomial series of -sqrt(2mV)") {
  const auto quartic = make_potential(1, 1, {Rational(1)});
  CHECK(c0_coefficients(quartic, 2).coeffs ==
        std::vector<Rational>{Rational(-1), Rational(-1), Rational(1, 2)});

  const auto sextic = make_potential(1, 1, {Rational(0), Rational(3, 7)});
  CHECK(c0_coefficients(sextic, 2).coeffs ==
        std::vector<Rational>{Rational(-1), Rational(0), Rational(-3, 7)});

  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto c = testing::random_case(rng);
    CHECK(c0_coefficients(c.potential, 8).coeffs == testing::c0_by_binomial_series(c.potential, 8));
  }
}

TEST_CASE("c0 coefficients are prefix stable") {
  const auto pot = make_potential(Rational(3, 2), Rational(5, 3), {Rational(1, 3), Rational(-2, 5)});
  const auto small = c0_coefficients(pot, 4);
  const auto large = c0_coefficients(pot, 9);
  for (int i = 0; i <= 4; ++i) CHECK(small.coeffs[i] == large.coeffs[i]);
  CHECK(small.coeffs[0] == -(pot.mass() * pot.omega()));
}

TEST_CASE("quantization value is N at k = 1 and zero above") {
  CHECK(quantization_value(make_state(0, 0), 1) == Rational(1));
  CHECK(quantization_value(make_state(2, 1), 1) == Rational(6));
  CHECK(quantization_value(make_state(2, 1), 5) == Rational(0));
  CHECK_THROWS_AS(quantization_value(make_state(0, 0), 0), Error);
}

TEST_CASE("laurent entry on a harmonic table") {
  const auto pot = make_potential(1, 1, {});
  for (auto [n, expected] : {std::pair{0, 0L}, std::pair{1, 3L}}) {
    const auto state = make_state(n, 0);
    CoefficientTable table(pot, state, 3);
    table.set(1, 0, quantization_value(state, 1));
    table.set(1, 1, laurent_entry(table, 1, 1));
    table.set(1, 2, laurent_entry(table, 1, 2));
    // (N² - N - L) / (2mω)
    CHECK(laurent_entry(table, 2, 0) == Rational(expected));
  }
}

TEST_CASE("laurent entry refuses missing predecessors and the quantization slot") {
  const auto state = make_state(0, 0);
  CoefficientTable table(make_potential(1, 1, {Rational(1)}), state, 4);
  try {
    (void)laurent_entry(table, 2, 0);
    FAIL("expected IndexNotReady");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexNotReady);
  }
  CHECK_THROWS_AS(laurent_entry(table, 1, 0), Error);
  CHECK_THROWS_AS(energy_correction(table, 1), Error);
  CHECK_FALSE(table.has(1, 0));
  CHECK(table.has(0, 3));
}

TEST_CASE("quartic order-2 row satisfies the Riccati identity by direct substitution") {
  const auto state = make_state(0, 0);
  const auto result = compute_series(make_potential(1, 1, {Rational(1, 10)}), state, 4);
  // C^2_1 is the quantization slot; the r^0 identity at order 2 then fixes E_2.
  CHECK(result.table.at(2, 1) == Rational(0));
  CHECK(testing::riccati_residual(result.table, result.series, 2, 1) == Rational(0));
  CHECK(result.table.at(2, 2) != Rational(0));
  CHECK(testing::riccati_residual(result.table, result.series, 2, 2) == Rational(0));
  CHECK(testing::riccati_residual(result.table, result.series, 3, 2) == Rational(0));
}

TEST_CASE("energy corrections: E1 for any potential, E2 and E3 for the quartic") {
  const auto lambda = Rational(2, 7);
  const auto result = compute_series(make_potential(1, 1, {lambda}), make_state(0, 0), 3);
  CHECK(result.series.at(1) == Rational(3, 2));
  CHECK(result.series.at(2) == Rational(15, 4) * lambda);
  CHECK(result.series.at(3) == Rational(-165, 8) * lambda * lambda);

  const auto general = compute_series(make_potential(Rational(2, 3), Rational(7, 5), {Rational(1)}),
                                      make_state(2, 3), 1);
  const long N = 2 * 2 + 3 + 1;
  CHECK(general.series.at(1) == Rational(1 + 2 * N) * Rational(7, 5) / Rational(2));
}

TEST_CASE("compute_series: harmonic spectrum is exact") {
  const auto result = compute_series(make_potential(1, 1, {}), make_state(2, 3), 10);
  CHECK(result.series.at(1) == Rational(17, 2));
  for (int k = 2; k <= 10; ++k) CHECK(result.series.at(k) == Rational(0));
  for (int k = 1; k <= 10; ++k) {
    for (int i = 1; i <= result.table.imax(); ++i) CHECK(result.table.at(k, i) == Rational(0));
  }
}

TEST_CASE("compute_series: quartic lambda = 1/100 ground state") {
  const auto result = compute_series(make_potential(1, 1, {Rational(1, 100)}), make_state(0, 0), 5);
  const std::vector<Rational> expected{Rational(3, 2), Rational(3, 80), Rational(-33, 16000),
                                       Rational(783, 3200000), Rational(-104097, 2560000000L)};
  CHECK(std::vector<Rational>(result.series.corrections().begin(), result.series.corrections().end()) ==
        expected);
  // Ground-state coefficients of λ³ and λ⁴.
  const auto unit = compute_series(make_potential(1, 1, {Rational(1)}), make_state(0, 0), 5);
  CHECK(unit.series.at(4) == Rational(3915, 16));
  CHECK(unit.series.at(5) == Rational(-520485, 128));
}

TEST_CASE("compute_series matches the closed forms on random tuples") {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 20; ++t) {
    const auto c = testing::random_case(rng);
    const auto result = compute_series(c.potential, c.state, 5);
    const auto& p = c.potential;
    const auto expected = testing::closed_form_energies(p.mass(), p.omega(), p.v(1), p.v(2), p.v(3),
                                                        p.v(4), c.state.node_total(),
                                                        c.state.centrifugal());
    for (int k = 1; k <= 5; ++k) {
      CAPTURE(k);
      CHECK(result.series.at(k) == expected[k - 1]);
    }
  }
}

TEST_CASE("quantization invariant holds on completed tables") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    const auto c = testing::random_case(rng);
    const auto result = compute_series(c.potential, c.state, 7);
    for (int k = 1; k <= 7; ++k) {
      CHECK(result.table.at(k, k - 1) == quantization_value(c.state, k));
    }
  }
}

TEST_CASE("Riccati residual vanishes term by term") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 3; ++t) {
    const auto c = testing::random_case(rng);
    const auto result = compute_series(c.potential, c.state, 6);
    for (int k = 0; k <= 6; ++k) {
      for (int i = 0; i <= result.table.imax(); ++i) {
        CAPTURE(k);
        CAPTURE(i);
        CHECK(testing::riccati_residual(result.table, result.series, k, i) == Rational(0));
      }
    }
  }
}

TEST_CASE("pure quartic scaling: lambda -> s lambda multiplies E_k by s^(k-1)") {
  const Rational lambda(3, 11);
  const Rational s(-5, 2);
  for (auto [n, l] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{3, 1}}) {
    const auto a = compute_series(make_potential(1, 1, {lambda}), make_state(n, l), 9).series;
    const auto b = compute_series(make_potential(1, 1, {s * lambda}), make_state(n, l), 9).series;
    for (int k = 1; k <= 9; ++k) CHECK(b.at(k) == a.at(k) * s.pow(k - 1));
  }
}

TEST_CASE("prefix stability and table-size sufficiency") {
  const auto state = make_state(1, 1);
  const auto pot = make_potential(Rational(5, 4), Rational(2, 3), {Rational(1, 3), Rational(-1, 7)});
  const auto small = compute_series(pot, state, 5);
  const auto large = compute_series(pot, state, 9);
  for (int k = 1; k <= 5; ++k) CHECK(small.series.at(k) == large.series.at(k));
  for (int k = 0; k <= 5; ++k) {
    for (int i = 0; i <= small.table.imax(); ++i) CHECK(small.table.at(k, i) == large.table.at(k, i));
  }

  // E_1..E_5 only see v_1..v_4.
  auto extra = pot.anharmonic();
  extra.resize(4);
  extra.push_back(Rational(17, 3));
  extra.push_back(Rational(-9));
  const auto padded = compute_series(make_potential(pot.mass(), pot.omega(), extra), state, 5);
  CHECK(padded.series == small.series);
}

TEST_CASE("resource cap") {
  const auto pot = make_potential(1, 1, {Rational(1)});
  try {
    compute_series(pot, make_state(0, 0), 65);
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderTooLarge);
  }
  CHECK_NOTHROW(compute_series(pot, make_state(0, 0), 5, EngineLimits{5}));
  CHECK_THROWS_AS(compute_series(pot, make_state(0, 0), 6, EngineLimits{5}), Error);
  CHECK_THROWS_AS(compute_series(pot, make_state(0, 0), 0), Error);
}
