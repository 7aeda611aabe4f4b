#pragma once

#include <span>
#include <vector>

#include "lpt/rational.hpp"

namespace lpt {

/// V(r) = m ω² r² / 2 + Σ_{i≥1} v_i r^{2i+2}, with every parameter exact.
///
/// Coefficients past the end of `anharmonic()` are zero. Negative v_i are
/// accepted; the formal series does not care whether the well is confining.
class PotentialSpec {
 public:
  const Rational& mass() const { return mass_; }
  const Rational& omega() const { return omega_; }
  const std::vector<Rational>& anharmonic() const { return anharmonic_; }

  /// v_i for i ≥ 1 (1-based, zero beyond the supplied list).
  Rational v(int i) const;

  /// Float evaluation of V(r).
  double evaluate(double r) const;

  bool is_harmonic() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  friend PotentialSpec make_potential(Rational, Rational, std::vector<Rational>);
  PotentialSpec(Rational m, Rational omega, std::vector<Rational> v)
      : mass_(std::move(m)), omega_(std::move(omega)), anharmonic_(std::move(v)) {}

  Rational mass_;
  Rational omega_;
  std::vector<Rational> anharmonic_;
};

/// Throws NonPositiveMass / NonPositiveFrequency.
PotentialSpec make_potential(Rational mass, Rational omega, std::vector<Rational> anharmonic);

/// Radial quantum number n and orbital quantum number l.
class QuantumState {
 public:
  int n() const { return n_; }
  int l() const { return l_; }
  /// Zeros enclosed at the origin: N = 2n + l + 1.
  int node_total() const { return 2 * n_ + l_ + 1; }
  /// L = l(l+1).
  long centrifugal() const { return static_cast<long>(l_) * (l_ + 1); }
  /// η = N(N+1).
  long eta() const { return static_cast<long>(node_total()) * (node_total() + 1); }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  friend QuantumState make_state(int, int);
  QuantumState(int n, int l) : n_(n), l_(l) {}

  int n_ = 0;
  int l_ = 0;
};

/// Throws NegativeQuantumNumber.
QuantumState make_state(int n, int l);

/// Energy corrections E_1..E_K; `corrections()[k-1]` multiplies ħ^k.
class EnergySeries {
 public:
  explicit EnergySeries(std::vector<Rational> corrections);

  int order() const { return static_cast<int>(corrections_.size()); }
  /// 1-based access, 1 ≤ k ≤ order().
  const Rational& at(int k) const;
  std::span<const Rational> corrections() const { return corrections_; }

  /// Σ_{k≤K} E_k at ħ = 1, exact.
  Rational partial_sum(int upto) const;

  friend bool operator==(const EnergySeries&, const EnergySeries&) = default;

 private:
  std::vector<Rational> corrections_;
};

}  // namespace lpt
