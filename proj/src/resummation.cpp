#include "lpt/resummation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "lpt/error.hpp"

namespace lpt {

PartialSums partial_sums(const EnergySeries& series) {
  PartialSums out;
  out.values.reserve(static_cast<std::size_t>(series.order()));
  Rational sum;
  for (const auto& term : series.corrections()) {
    sum += term;
    const double value = sum.to_double();
    if (!std::isfinite(value) || !std::isfinite(term.to_double())) out.overflow = true;
    out.values.push_back(value);
  }
  return out;
}

double pade_approximant(std::span<const double> coeffs, int num_degree, int den_degree, double x) {
  if (num_degree < 0 || den_degree < 0) throw Error(Errc::InvalidArgument, "Pade degrees must be >= 0");
  if (static_cast<std::size_t>(num_degree + den_degree + 1) > coeffs.size()) {
    throw Error(Errc::InvalidArgument, "[" + std::to_string(num_degree) + "/" +
                                           std::to_string(den_degree) + "] Pade needs " +
                                           std::to_string(num_degree + den_degree + 1) + " terms");
  }

  // Work with c_j x^j and evaluate at t = 1; the approximant is invariant
  // under this rescaling and the system is better balanced.
  std::vector<double> c(static_cast<std::size_t>(num_degree + den_degree + 1));
  double scale = 1.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = coeffs[j] * scale;
    scale *= x;
  }
  auto at = [&](int j) { return j < 0 ? 0.0 : c[static_cast<std::size_t>(j)]; };

  Eigen::VectorXd b = Eigen::VectorXd::Zero(den_degree + 1);
  b(0) = 1.0;
  if (den_degree > 0) {
    Eigen::MatrixXd a(den_degree, den_degree);
    Eigen::VectorXd rhs(den_degree);
    for (int r = 0; r < den_degree; ++r) {
      for (int col = 0; col < den_degree; ++col) a(r, col) = at(num_degree + r - col);
      rhs(r) = -at(num_degree + 1 + r);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();

    Eigen::VectorXd tail;
    if (cond <= kPadeConditionLimit) {
      tail = a.fullPivLu().solve(rhs);
    } else {
      svd.setThreshold(1.0 / kPadeConditionLimit);
      tail = svd.solve(rhs);
      const double scale_ref = rhs.norm() + smax * tail.norm();
      if ((a * tail - rhs).norm() > 1e-10 * std::max(scale_ref, 1e-300)) {
        throw Error(Errc::SingularPadeSystem,
                    "denominator system condition estimate " + std::to_string(cond) +
                        " exceeds 1e12; lower the degrees");
      }
    }
    b.tail(den_degree) = tail;
  }

  double numerator = 0.0;
  for (int i = 0; i <= num_degree; ++i) {
    for (int j = 0; j <= std::min(i, den_degree); ++j) numerator += b(j) * at(i - j);
  }
  const double denominator = b.sum();
  if (denominator == 0.0) throw Error(Errc::SingularPadeSystem, "approximant has a pole at the coupling");
  return numerator / denominator;
}

std::vector<double> reduced_coefficients(const EnergySeries& series, double coupling) {
  if (coupling == 0.0) throw Error(Errc::InvalidArgument, "coupling must be nonzero");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(series.order()));
  double power = 1.0;
  for (const auto& term : series.corrections()) {
    out.push_back(term.to_double() / power);
    power *= coupling;
  }
  return out;
}

double pade(const EnergySeries& series, int num_degree, int den_degree, double coupling) {
  return pade_approximant(reduced_coefficients(series, coupling), num_degree, den_degree, coupling);
}

SummationReport divergence_diagnostics(const EnergySeries& series, const SummationOptions& options) {
  if (series.order() < 6) throw Error(Errc::InvalidArgument, "diagnostics need at least 6 terms");
  return summarize(series, options);
}

SummationReport summarize(const EnergySeries& series, const SummationOptions& options) {
  SummationReport report;
  auto sums = partial_sums(series);
  report.partial_sums = std::move(sums.values);
  report.overflow = sums.overflow;

  const auto terms = series.corrections();
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    if (terms[k].is_zero()) {
      report.ratios.emplace_back(std::nullopt);
    } else {
      report.ratios.emplace_back((terms[k + 1] / terms[k]).abs().to_double());
    }
  }

  const auto count = report.ratios.size();
  const auto tail = (count + 2) / 3;
  bool growing = tail >= 2;
  for (std::size_t i = count - tail; i < count; ++i) {
    if (!report.ratios[i]) {
      growing = false;
      break;
    }
    if (i > count - tail && !(*report.ratios[i] > *report.ratios[i - 1])) growing = false;
  }
  report.asymptotic_growth = growing;

  // The change between the last two partial sums is exactly the last term;
  // taking it from the rational avoids the cancellation in S_K - S_{K-1}.
  const double change = std::abs(terms.back().to_double());
  report.stability_flag = change < options.stability_tolerance * std::abs(report.partial_sums.back());

  if (options.pade) {
    report.pade_degrees = {options.pade->num_degree, options.pade->den_degree};
    report.pade_value = pade(series, options.pade->num_degree, options.pade->den_degree,
                             options.pade->coupling);
  }
  return report;
}

}  // namespace lpt
