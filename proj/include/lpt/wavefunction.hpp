#pragma once

#include <vector>

#include "lpt/engine.hpp"
#include "lpt/model.hpp"
#include "lpt/rational.hpp"

namespace lpt {

/// Harmonic log-derivative in units ħ = m = ω = 1: C_0 = -r, C_k(r) = d_k r^{1-2k}.
struct HarmonicLogDerivative {
  std::vector<Rational> d;  // d_0..d_K
};

/// Radial node factor P_n(r²) = Σ_k p_k r^{2k}, normalized so p_n = 1.
struct NodePolynomial {
  std::vector<Rational> p;  // p_0..p_n

  int degree() const { return static_cast<int>(p.size()) - 1; }
};

/// d_0 = -1, d_1 = N, 2d_2 = N² - N - l(l+1), 2d_k = (3-2k)d_{k-1} + Σ_{j=1}^{k-1} d_j d_{k-j}.
HarmonicLogDerivative harmonic_d_coefficients(const QuantumState& state, int order);

/// Solves 2 p_m (n-m) + Σ_{j=m+1}^{n} p_j d_{j-m+1} = 0 downward from p_n = 1.
/// `d` must reach index n+1.
NodePolynomial node_polynomial(const QuantumState& state, const HarmonicLogDerivative& d);

/// Truncated ħ-series Σ_{k=0}^{K} C_k(r) at ħ = 1, in double precision.
/// Throws DomainError for r ≤ 0.
double evaluate_log_derivative(const CoefficientTable& table, double r, int order);

}  // namespace lpt
