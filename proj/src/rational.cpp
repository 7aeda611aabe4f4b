#include "lpt/rational.hpp"

#include <ostream>

#include <mpfr.h>

#include "lpt/error.hpp"

namespace lpt {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (sgn(q_.get_den()) == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(Errc::InvalidRational, "cannot parse '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(mpq_class(p, q));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

double Rational::to_double() const {
  // Narrow the exponent range to binary64 so subnormals round once.
  const mpfr_exp_t old_emin = mpfr_get_emin();
  const mpfr_exp_t old_emax = mpfr_get_emax();
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_emin(-1073);
  mpfr_set_emax(1024);
  const int t = mpfr_set_q(x, q_.get_mpq_t(), MPFR_RNDN);
  mpfr_subnormalize(x, t, MPFR_RNDN);
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_set_emin(old_emin);
  mpfr_set_emax(old_emax);
  return out;
}

std::string Rational::numerator_string() const { return q_.get_num().get_str(10); }
std::string Rational::denominator_string() const { return q_.get_den().get_str(10); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lpt
