#include "lpt/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpt/error.hpp"

namespace lpt {

Rational PotentialSpec::v(int i) const {
  if (i < 1 || i > static_cast<int>(anharmonic_.size())) return Rational(0);
  return anharmonic_[i - 1];
}

double PotentialSpec::evaluate(double r) const {
  const double r2 = r * r;
  const double m = mass_.to_double();
  const double w = omega_.to_double();
  // Horner in r² over the anharmonic tail.
  double tail = 0.0;
  for (auto it = anharmonic_.rbegin(); it != anharmonic_.rend(); ++it) {
    tail = tail * r2 + it->to_double();
  }
  return 0.5 * m * w * w * r2 + tail * r2 * r2;
}

bool PotentialSpec::is_harmonic() const {
  return std::all_of(anharmonic_.begin(), anharmonic_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

PotentialSpec make_potential(Rational mass, Rational omega, std::vector<Rational> anharmonic) {
  if (mass.sign() <= 0) throw Error(Errc::NonPositiveMass, "mass must be > 0, got " + mass.to_string());
  if (omega.sign() <= 0) {
    throw Error(Errc::NonPositiveFrequency, "omega must be > 0, got " + omega.to_string());
  }
  return PotentialSpec(std::move(mass), std::move(omega), std::move(anharmonic));
}

QuantumState make_state(int n, int l) {
  if (n < 0 || l < 0) {
    throw Error(Errc::NegativeQuantumNumber,
                "n and l must be >= 0, got n=" + std::to_string(n) + " l=" + std::to_string(l));
  }
  return QuantumState(n, l);
}

EnergySeries::EnergySeries(std::vector<Rational> corrections) : corrections_(std::move(corrections)) {
  if (corrections_.empty()) throw Error(Errc::InvalidArgument, "energy series must be non-empty");
}

const Rational& EnergySeries::at(int k) const {
  if (k < 1 || k > order()) {
    throw Error(Errc::InvalidArgument, "correction index " + std::to_string(k) + " out of range");
  }
  return corrections_[k - 1];
}

Rational EnergySeries::partial_sum(int upto) const {
  Rational sum;
  for (int k = 1; k <= upto; ++k) sum += at(k);
  return sum;
}

}  // namespace lpt
