#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace slowsum {

/// Exact rational number of unbounded size, always kept in lowest terms with
/// a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" in base 10.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;
  Rational pow(unsigned exponent) const;

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

}  // namespace slowsum
