#include "slowsum/rational.hpp"

#include <stdexcept>
#include <utility>

namespace slowsum {

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  return Rational(std::move(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace slowsum
