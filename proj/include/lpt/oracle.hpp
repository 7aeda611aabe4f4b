#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lpt/model.hpp"
#include "lpt/resummation.hpp"

namespace lpt {

/// Discretization of the radial equation -u''/2m + (l(l+1)/2mr² + V) u = E u (ħ = 1).
struct OracleConfig {
  double r_max = 0.0;
  int grid_points = 20000;
  QuantumState target_state = make_state(0, 0);
  std::pair<double, double> bracket{0.0, 0.0};
  double tolerance = 1e-13;
};

/// Box radius, bracket and grid sized for `state`: the box edge sits where
/// V ≥ E_ref + 25 and the WKB tail exponent ∫√(2m(V-E_ref)) dr reaches 20.
OracleConfig default_oracle_config(const PotentialSpec& potential, const QuantumState& state);

struct OracleResult {
  double energy = 0.0;
  int node_count = 0;
  double residual_estimate = 0.0;
  bool converged = false;
};

/// Numerov shooting from u ~ r^{l+1}, node counting and bisection on E.
/// The result comes from the 2·grid_points grid; residual_estimate is its
/// difference from the grid_points result plus the bisection width.
/// Throws BracketingFailure (also for non-confining potentials) and NotConverged.
OracleResult solve_radial(const PotentialSpec& potential, const OracleConfig& config);

/// u(r) sampled at r_i = i·h, i = 0..grid_points, for a given energy.
struct RadialWavefunction {
  double h = 0.0;
  std::vector<double> u;

  int node_count() const;
  /// u'(r)/u(r) by fourth-order central differences on the grid.
  double log_derivative(double r) const;
};

RadialWavefunction radial_wavefunction(const PotentialSpec& potential, const OracleConfig& config,
                                       double energy);

/// Deviations of a summed series from an oracle eigenvalue.
struct ComparisonRecord {
  double oracle_energy = 0.0;
  std::vector<double> abs_deviation;  // per order 1..K
  std::vector<double> rel_deviation;
  std::optional<double> pade_abs_deviation;
  std::optional<double> pade_rel_deviation;
  /// Order with minimal deviation (optimal truncation point), 1-based.
  int best_order = 1;
  /// True when the deviation never increases with order.
  bool monotone_decreasing = true;
};

ComparisonRecord compare_with_series(const OracleResult& oracle, const SummationReport& report);

}  // namespace lpt
