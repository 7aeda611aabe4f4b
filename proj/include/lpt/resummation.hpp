#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lpt/model.hpp"

namespace lpt {

struct PartialSums {
  std::vector<double> values;  // values[K-1] = Σ_{k≤K} E_k at ħ = 1
  bool overflow = false;       // some term or sum fell outside double range
};

/// Exact cumulative sums, each correctly rounded to double.
PartialSums partial_sums(const EnergySeries& series);

/// Condition-number estimate above which the denominator system counts as singular.
inline constexpr double kPadeConditionLimit = 1e12;

/// [num/den] Padé approximant of Σ_j coeffs[j] x^j, evaluated at x.
///
/// Needs num + den + 1 ≤ coeffs.size(). The denominator system is solved with
/// full pivoting. When its condition estimate exceeds kPadeConditionLimit the
/// approximant is only returned if the system is consistent (a degenerate block
/// of the Padé table, e.g. the series is already a lower-degree rational
/// function); otherwise SingularPadeSystem is thrown.
double pade_approximant(std::span<const double> coeffs, int num_degree, int den_degree, double x);

/// E_{j+1} / g^j: the series re-expressed in powers of the coupling g.
std::vector<double> reduced_coefficients(const EnergySeries& series, double coupling);

/// Padé of the reduced coupling series, evaluated at the coupling itself.
double pade(const EnergySeries& series, int num_degree, int den_degree, double coupling);

struct PadeRequest {
  int num_degree = 0;
  int den_degree = 0;
  double coupling = 0.0;
};

struct SummationOptions {
  /// Relative change between the last two partial sums below which the sum is called stable.
  double stability_tolerance = 1e-9;
  std::optional<PadeRequest> pade;
};

struct SummationReport {
  std::vector<double> partial_sums;
  bool overflow = false;
  std::optional<double> pade_value;
  std::pair<int, int> pade_degrees{0, 0};
  /// |E_{k+1}/E_k| for k = 1..K-1; absent where E_k = 0.
  std::vector<std::optional<double>> ratios;
  bool stability_flag = false;
  /// Ratios strictly increasing across the final third of the available orders.
  bool asymptotic_growth = false;
};

/// Same bookkeeping as divergence_diagnostics without the length requirement.
SummationReport summarize(const EnergySeries& series, const SummationOptions& options = {});

/// Read-only summary of the series. Needs at least 6 terms.
SummationReport divergence_diagnostics(const EnergySeries& series, const SummationOptions& options = {});

}  // namespace lpt
