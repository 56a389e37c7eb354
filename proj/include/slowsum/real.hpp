#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "slowsum/rational.hpp"

namespace slowsum {

/// Working precision in decimal digits. Every Real created under a context
/// carries working_digits + guard_digits decimal digits internally.
struct PrecisionContext {
  int working_digits = 50;
  int guard_digits = 10;

  /// Throws std::invalid_argument unless both digit counts are positive.
  void validate() const;
  mpfr_prec_t bits() const;
  PrecisionContext with_working_digits(int digits) const { return {digits, guard_digits}; }
};

/// Arbitrary-precision binary floating-point value. Arithmetic between two
/// values is carried out at the larger of the operand precisions, rounded to
/// nearest.
class Real {
 public:
  explicit Real(const PrecisionContext& ctx);
  Real(long value, const PrecisionContext& ctx);
  Real(const Rational& value, const PrecisionContext& ctx);
  /// Decimal literal, e.g. "38.4067" or "-1e-20".
  Real(std::string_view decimal, const PrecisionContext& ctx);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  explicit Real(mpfr_prec_t bits);
  void promote_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real abs(const Real& x);
/// Natural logarithm. Throws std::domain_error for x <= 0.
Real ln(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, long exponent);
Real pow(const Real& base, const Real& exponent);
Real sqrt(const Real& x);
Real pi(const PrecisionContext& ctx);

/// Correctly rounded conversion of an exact rational at context precision.
Real rational_to_real(const Rational& q, const PrecisionContext& ctx);

/// Fixed-point decimal rendering with exactly `decimals` digits after the
/// point, rounded to nearest with ties to even. Never uses exponent notation.
std::string to_fixed(const Real& x, int decimals);

/// Fixed-point rendering with `digits` significant decimal digits.
std::string to_significant(const Real& x, int digits);

/// Number of significant decimal digits to which a and b agree,
/// -log10(|a - b| / |b|), capped at the carried precision.
double agreeing_digits(const Real& a, const Real& b);

}  // namespace slowsum
