#include "lpt/wavefunction.hpp"

#include <cmath>
#include <string>

#include "lpt/error.hpp"

namespace lpt {

HarmonicLogDerivative harmonic_d_coefficients(const QuantumState& state, int order) {
  if (order < 2) throw Error(Errc::InvalidArgument, "harmonic d coefficients need order >= 2");
  const Rational n_total(state.node_total());

  HarmonicLogDerivative out;
  auto& d = out.d;
  d.reserve(static_cast<std::size_t>(order) + 1);
  d.emplace_back(-1);
  d.push_back(n_total);
  d.push_back((n_total * n_total - n_total - Rational(state.centrifugal())) / Rational(2));
  for (int k = 3; k <= order; ++k) {
    Rational acc = Rational(3 - 2 * k) * d[k - 1];
    for (int j = 1; j <= k - 1; ++j) acc += d[j] * d[k - j];
    d.push_back(acc / Rational(2));
  }
  return out;
}

NodePolynomial node_polynomial(const QuantumState& state, const HarmonicLogDerivative& d) {
  const int n = state.n();
  if (static_cast<int>(d.d.size()) < n + 2) {
    throw Error(Errc::InvalidArgument, "node polynomial of degree " + std::to_string(n) +
                                           " needs d up to index " + std::to_string(n + 1));
  }
  NodePolynomial out;
  out.p.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  out.p[n] = Rational(1);
  for (int m = n - 1; m >= 0; --m) {
    const Rational pivot(2 * (n - m));
    if (pivot.is_zero()) throw Error(Errc::DegenerateSystem, "zero pivot at m=" + std::to_string(m));
    Rational acc;
    for (int j = m + 1; j <= n; ++j) acc += out.p[j] * d.d[j - m + 1];
    out.p[m] = -acc / pivot;
  }
  return out;
}

double evaluate_log_derivative(const CoefficientTable& table, double r, int order) {
  if (!(r > 0.0)) throw Error(Errc::DomainError, "log-derivative needs r > 0");
  if (order < 0 || order > table.order()) {
    throw Error(Errc::InvalidArgument, "order " + std::to_string(order) + " outside table order " +
                                           std::to_string(table.order()));
  }
  const double r2 = r * r;
  double total = 0.0;
  for (int k = 0; k <= order; ++k) {
    double poly = 0.0;
    for (int i = table.imax(); i >= 0; --i) poly = poly * r2 + table.at(k, i).to_double();
    total += poly * std::pow(r, 1 - 2 * k);
  }
  return total;
}

}  // namespace lpt
