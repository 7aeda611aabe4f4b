#include "lpt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpt/error.hpp"

namespace lpt {

namespace {

constexpr double kRescaleAbove = 1e200;
constexpr int kBisectionCap = 400;

void check_confining(const PotentialSpec& potential) {
  const auto& v = potential.anharmonic();
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (it->is_zero()) continue;
    if (it->sign() < 0) {
      throw Error(Errc::BracketingFailure,
                  "leading anharmonic coefficient is negative; the potential is not confining");
    }
    return;
  }
}

void check_config(const OracleConfig& config) {
  if (config.grid_points < 1000) throw Error(Errc::InvalidArgument, "grid_points must be >= 1000");
  if (!(config.r_max > 0.0)) throw Error(Errc::InvalidArgument, "r_max must be > 0");
  if (!(config.tolerance > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be > 0");
  if (!(config.bracket.first < config.bracket.second)) {
    throw Error(Errc::InvalidArgument, "energy bracket must satisfy lo < hi");
  }
}

/// Numerov integrator for u'' = (g(r) - 2mE) u on a uniform grid, g = l(l+1)/r² + 2mV.
class Shooter {
 public:
  Shooter(const PotentialSpec& potential, int l, double r_max, int steps)
      : l_(l),
        mass_(potential.mass().to_double()),
        omega_(potential.omega().to_double()),
        h_(r_max / steps),
        g_(static_cast<std::size_t>(steps) + 1) {
    const long double centrifugal = static_cast<long double>(l) * (l + 1);
    g_[0] = 0.0;
    for (int i = 1; i <= steps; ++i) {
      const long double r = static_cast<long double>(i) * h_;
      g_[i] = centrifugal / (r * r) + 2.0L * mass_ * potential.evaluate(static_cast<double>(r));
    }
  }

  double h() const { return h_; }
  int steps() const { return static_cast<int>(g_.size()) - 1; }

  /// Smallest value of V on the grid, for the lower bracket default.
  double min_g() const { return static_cast<double>(*std::min_element(g_.begin() + 1, g_.end())); }

  /// Sign changes of u on (0, r_max] for energy e.
  int count_nodes(double e) const {
    int nodes = 0;
    march(e, [&nodes, last = 0.0](int, double u) mutable {
      if (u != 0.0) {
        if (last != 0.0 && (u > 0.0) != (last > 0.0)) ++nodes;
        last = u;
      }
    });
    return nodes;
  }

  std::vector<double> wavefunction(double e) const {
    std::vector<double> u(g_.size(), 0.0);
    march(e, [&u](int i, double value) { u[i] = value; }, &u);
    return u;
  }

 private:
  /// Series start u = r^{l+1}(1 + a1 r² + a2 r⁴), valid for small r.
  long double series_start(double r, double e) const {
    const double two_m_e = 2.0 * mass_ * e;
    const double a1 = -two_m_e / (2.0 * (2 * l_ + 3));
    const double a2 = (-two_m_e * a1 + mass_ * mass_ * omega_ * omega_) / (4.0 * (2 * l_ + 5));
    const long double r2 = static_cast<long double>(r) * r;
    return std::pow(static_cast<long double>(r), l_ + 1) * (1.0L + r2 * (a1 + a2 * r2));
  }

  // The recurrence runs in long double: its roundoff acts like an energy
  // perturbation of order eps/h², which limits double precision to ~1e-11.
  template <typename Visit>
  void march(double e, Visit&& visit, std::vector<double>* stored = nullptr) const {
    using Real = long double;
    const Real two_m_e = Real{2} * mass_ * e;
    const Real w = static_cast<Real>(h_) * h_ / Real{12};
    const int n = steps();
    Real prev = series_start(h_, e);
    Real curr = series_start(2 * h_, e);
    visit(0, 0.0);
    visit(1, static_cast<double>(prev));
    visit(2, static_cast<double>(curr));
    Real f_prev = g_[1] - two_m_e;
    Real f_curr = g_[2] - two_m_e;
    for (int i = 2; i < n; ++i) {
      const Real f_next = g_[i + 1] - two_m_e;
      Real next = (Real{2} * curr * (Real{1} + Real{5} * w * f_curr) - prev * (Real{1} - w * f_prev)) /
                  (Real{1} - w * f_next);
      if (std::abs(next) > kRescaleAbove) {
        next /= kRescaleAbove;
        curr /= kRescaleAbove;
        if (stored) {
          for (int j = 0; j <= i; ++j) (*stored)[j] /= kRescaleAbove;
        }
      }
      visit(i + 1, static_cast<double>(next));
      prev = curr;
      curr = next;
      f_prev = f_curr;
      f_curr = f_next;
    }
  }

  int l_;
  double mass_;
  double omega_;
  double h_;
  std::vector<long double> g_;
};

struct GridSolve {
  double energy;
  int node_count;
};

GridSolve bisect(const Shooter& shooter, const OracleConfig& config) {
  const int n = config.target_state.n();
  double lo = config.bracket.first;
  double hi = config.bracket.second;
  const int nodes_lo = shooter.count_nodes(lo);
  const int nodes_hi = shooter.count_nodes(hi);
  if (nodes_lo > n || nodes_hi <= n) {
    throw Error(Errc::BracketingFailure,
                "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "] has " +
                    std::to_string(nodes_lo) + ".." + std::to_string(nodes_hi) +
                    " nodes; state needs a transition at n=" + std::to_string(n));
  }
  int lo_nodes = nodes_lo;
  for (int iter = 0; iter < kBisectionCap; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= config.tolerance * std::max(1.0, std::abs(mid))) {
      return {mid, lo_nodes};
    }
    if (mid <= lo || mid >= hi) break;
    const int nodes = shooter.count_nodes(mid);
    if (nodes <= n) {
      lo = mid;
      lo_nodes = nodes;
    } else {
      hi = mid;
    }
  }
  throw Error(Errc::NotConverged, "bisection stalled at width " + std::to_string(hi - lo));
}

double box_radius(const PotentialSpec& potential, double e_ref) {
  const double m = potential.mass().to_double();
  const double w = potential.omega().to_double();
  const double dr = 1e-3 / std::sqrt(m * w);
  double tail = 0.0;
  double r = 0.0;
  while (r < 1e4) {
    r += dr;
    const double excess = potential.evaluate(r) - e_ref;
    if (excess > 0.0) tail += std::sqrt(2.0 * m * excess) * dr;
    if (excess >= 25.0 * w && tail >= 20.0) return r;
  }
  throw Error(Errc::BracketingFailure, "could not size the box for E_ref=" + std::to_string(e_ref));
}

}  // namespace

OracleConfig default_oracle_config(const PotentialSpec& potential, const QuantumState& state) {
  check_confining(potential);
  const double w = potential.omega().to_double();
  double e_ref = (2.0 * state.n() + state.l() + 1.5) * w;
  OracleConfig config;
  config.target_state = state;
  for (int attempt = 0; attempt < 16; ++attempt) {
    config.r_max = box_radius(potential, e_ref);
    config.bracket = {0.0, potential.evaluate(config.r_max)};
    {
      const Shooter coarse_grid(potential, state.l(), config.r_max, 4000);
      config.bracket.first = std::min(0.0, coarse_grid.min_g() / (2.0 * potential.mass().to_double()));
    }
    OracleConfig coarse = config;
    coarse.grid_points = 4000;
    coarse.tolerance = 1e-8;
    const double estimate = bisect(Shooter(potential, state.l(), coarse.r_max, coarse.grid_points), coarse).energy;
    if (estimate <= e_ref) return config;
    e_ref = 1.5 * estimate;
  }
  throw Error(Errc::BracketingFailure, "energy estimate did not settle while sizing the box");
}

OracleResult solve_radial(const PotentialSpec& potential, const OracleConfig& config) {
  check_confining(potential);
  check_config(config);
  const int l = config.target_state.l();
  const auto coarse = bisect(Shooter(potential, l, config.r_max, config.grid_points), config);
  const auto fine = bisect(Shooter(potential, l, config.r_max, 2 * config.grid_points), config);

  OracleResult result;
  result.energy = fine.energy;
  result.node_count = fine.node_count;
  // Grid-refinement difference plus the bisection width that bounds both solves.
  result.residual_estimate = std::abs(fine.energy - coarse.energy) +
                             config.tolerance * std::max(1.0, std::abs(fine.energy));
  result.converged = fine.node_count == config.target_state.n();
  return result;
}

int RadialWavefunction::node_count() const {
  int nodes = 0;
  double last = 0.0;
  for (double value : u) {
    if (value == 0.0) continue;
    if (last != 0.0 && (value > 0.0) != (last > 0.0)) ++nodes;
    last = value;
  }
  return nodes;
}

double RadialWavefunction::log_derivative(double r) const {
  const double x = r / h;
  const auto i = static_cast<long>(std::floor(x));
  if (i < 2 || i + 3 >= static_cast<long>(u.size())) {
    throw Error(Errc::DomainError, "r outside the interior of the grid");
  }
  auto at = [this](long j) {
    const double du = (-u[j + 2] + 8.0 * u[j + 1] - 8.0 * u[j - 1] + u[j - 2]) / (12.0 * h);
    return du / u[j];
  };
  const double t = x - static_cast<double>(i);
  return (1.0 - t) * at(i) + t * at(i + 1);
}

RadialWavefunction radial_wavefunction(const PotentialSpec& potential, const OracleConfig& config,
                                       double energy) {
  check_config(config);
  const Shooter shooter(potential, config.target_state.l(), config.r_max, config.grid_points);
  return RadialWavefunction{shooter.h(), shooter.wavefunction(energy)};
}

ComparisonRecord compare_with_series(const OracleResult& oracle, const SummationReport& report) {
  ComparisonRecord record;
  record.oracle_energy = oracle.energy;
  const double scale = std::abs(oracle.energy);
  for (double s : report.partial_sums) {
    const double dev = std::abs(s - oracle.energy);
    record.abs_deviation.push_back(dev);
    record.rel_deviation.push_back(scale > 0.0 ? dev / scale : dev);
  }
  if (report.pade_value) {
    const double dev = std::abs(*report.pade_value - oracle.energy);
    record.pade_abs_deviation = dev;
    record.pade_rel_deviation = scale > 0.0 ? dev / scale : dev;
  }
  const auto& devs = record.abs_deviation;
  if (!devs.empty()) {
    record.best_order =
        static_cast<int>(std::min_element(devs.begin(), devs.end()) - devs.begin()) + 1;
  }
  for (std::size_t k = 1; k < devs.size(); ++k) {
    if (devs[k] > devs[k - 1]) record.monotone_decreasing = false;
  }
  return record;
}

}  // namespace lpt
