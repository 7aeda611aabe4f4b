#include "lpt/engine.hpp"

#include <string>

#include "lpt/error.hpp"

namespace lpt {

C0Series c0_coefficients(const PotentialSpec& potential, int imax) {
  if (imax < 0) throw Error(Errc::InvalidArgument, "imax must be >= 0");
  const Rational& m = potential.mass();
  const Rational two_m_omega = Rational(2) * m * potential.omega();

  C0Series out;
  out.coeffs.reserve(static_cast<std::size_t>(imax) + 1);
  out.coeffs.push_back(-(m * potential.omega()));
  for (int i = 1; i <= imax; ++i) {
    Rational acc;
    for (int p = 1; p <= i - 1; ++p) acc += out.coeffs[p] * out.coeffs[i - p];
    acc -= Rational(2) * m * potential.v(i);
    out.coeffs.push_back(acc / two_m_omega);
  }
  return out;
}

Rational quantization_value(const QuantumState& state, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "quantization index k must be >= 1");
  return k == 1 ? Rational(state.node_total()) : Rational(0);
}

CoefficientTable::CoefficientTable(PotentialSpec potential, QuantumState state, int order)
    : potential_(std::move(potential)), state_(state), order_(order) {
  if (order_ < 1) throw Error(Errc::InvalidArgument, "order must be >= 1");
  c0_ = c0_coefficients(potential_, imax());
  const auto size = static_cast<std::size_t>(order_ + 1) * static_cast<std::size_t>(order_);
  entries_.resize(size);
  filled_.assign(size, false);
  for (int i = 0; i <= imax(); ++i) set(0, i, c0_.coeffs[i]);
}

std::size_t CoefficientTable::slot(int k, int i) const {
  if (k < 0 || k > order_ || i < 0 || i > imax()) {
    throw Error(Errc::IndexNotReady,
                "C^" + std::to_string(k) + "_" + std::to_string(i) + " is outside the table");
  }
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(i);
}

bool CoefficientTable::has(int k, int i) const {
  if (k < 0 || k > order_ || i < 0 || i > imax()) return false;
  return filled_[slot(k, i)];
}

const Rational& CoefficientTable::at(int k, int i) const {
  const auto s = slot(k, i);
  if (!filled_[s]) {
    throw Error(Errc::IndexNotReady,
                "C^" + std::to_string(k) + "_" + std::to_string(i) + " has not been computed");
  }
  return entries_[s];
}

void CoefficientTable::set(int k, int i, Rational value) {
  const auto s = slot(k, i);
  entries_[s] = std::move(value);
  filled_[s] = true;
}

Rational laurent_entry(const CoefficientTable& table, int k, int i) {
  if (k < 1) throw Error(Errc::InvalidArgument, "laurent_entry needs k >= 1");
  if (i == k - 1) {
    throw Error(Errc::InvalidArgument, "slot i = k-1 is fixed by quantization, not the recursion");
  }

  Rational bracket = Rational(3 - 2 * k + 2 * i) * table.at(k - 1, i);
  for (int j = 1; j <= k - 1; ++j) {
    for (int p = 0; p <= i; ++p) bracket += table.at(j, p) * table.at(k - j, i - p);
  }
  Rational tail;
  for (int p = 1; p <= i; ++p) tail += table.at(0, p) * table.at(k, i - p);
  bracket += Rational(2) * tail;
  if (k == 2 && i == 0) bracket -= Rational(table.state().centrifugal());

  return -bracket / (Rational(2) * table.at(0, 0));
}

Rational energy_correction(const CoefficientTable& table, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "energy_correction needs k >= 1");
  Rational rhs = -table.at(k - 1, k - 1);
  for (int j = 0; j <= k; ++j) {
    for (int p = 0; p <= k - 1; ++p) rhs -= table.at(j, p) * table.at(k - j, k - 1 - p);
  }
  return rhs / (Rational(2) * table.potential().mass());
}

SeriesResult compute_series(const PotentialSpec& potential, const QuantumState& state, int order,
                            const EngineLimits& limits) {
  if (order < 1) throw Error(Errc::InvalidArgument, "order must be >= 1");
  if (order > limits.max_order) {
    throw Error(Errc::OrderTooLarge, "order " + std::to_string(order) + " exceeds the cap of " +
                                         std::to_string(limits.max_order));
  }

  CoefficientTable table(potential, state, order);
  std::vector<Rational> energies;
  energies.reserve(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    for (int i = 0; i <= table.imax(); ++i) {
      if (i == k - 1) {
        table.set(k, i, quantization_value(state, k));
      } else {
        table.set(k, i, laurent_entry(table, k, i));
      }
    }
    energies.push_back(energy_correction(table, k));
  }
  return SeriesResult{std::move(table), EnergySeries(std::move(energies))};
}

}  // namespace lpt
