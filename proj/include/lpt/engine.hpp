#pragma once

#include <vector>

#include "lpt/model.hpp"
#include "lpt/rational.hpp"

namespace lpt {

/// Taylor coefficients of C_0(r) = r Σ_i C⁰_i r^{2i}, the classical momentum branch -√(2mV).
struct C0Series {
  std::vector<Rational> coeffs;
};

/// C⁰_0 = -mω and the convolution recursion for i ≥ 1. v_i past the supplied list are zero.
C0Series c0_coefficients(const PotentialSpec& potential, int imax);

/// Residue condition on the Laurent table: C^k_{k-1} = N δ_{1,k}.
Rational quantization_value(const QuantumState& state, int k);

/// Laurent coefficients C^k_i of C_k(r) = r^{1-2k} Σ_i C^k_i r^{2i}.
///
/// Row k = 0 holds the C0Series and is filled on construction. Rows 1..order
/// start empty and are filled in dependency order (ascending k, then i).
/// Reading an unfilled slot throws IndexNotReady.
class CoefficientTable {
 public:
  CoefficientTable(PotentialSpec potential, QuantumState state, int order);

  int order() const { return order_; }
  /// Largest stored power index; equals order() - 1.
  int imax() const { return order_ - 1; }

  const PotentialSpec& potential() const { return potential_; }
  const QuantumState& state() const { return state_; }
  const C0Series& c0() const { return c0_; }

  bool has(int k, int i) const;
  const Rational& at(int k, int i) const;
  void set(int k, int i, Rational value);

 private:
  std::size_t slot(int k, int i) const;

  PotentialSpec potential_;
  QuantumState state_;
  int order_;
  C0Series c0_;
  std::vector<Rational> entries_;
  std::vector<bool> filled_;
};

/// Laurent recursion for C^k_i with i ≠ k-1. Needs rows < k up to column i
/// and row k below column i.
Rational laurent_entry(const CoefficientTable& table, int k, int i);

/// E_k from the i = k-1 power-matching identity. Needs rows ≤ k up to column k-1.
Rational energy_correction(const CoefficientTable& table, int k);

struct EngineLimits {
  int max_order = 64;
};

struct SeriesResult {
  CoefficientTable table;
  EnergySeries series;
};

/// Fills the table for k = 1..order and returns it with E_1..E_order.
/// Throws OrderTooLarge past `limits.max_order`.
SeriesResult compute_series(const PotentialSpec& potential, const QuantumState& state, int order,
                            const EngineLimits& limits = {});

}  // namespace lpt
