#include "slowsum/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace slowsum {

void PrecisionContext::validate() const {
  if (working_digits <= 0 || guard_digits <= 0) {
    throw std::invalid_argument("PrecisionContext: digit counts must be positive");
  }
}

mpfr_prec_t PrecisionContext::bits() const {
  validate();
  // log2(10) = 3.3219...; two extra bits absorb the ceil.
  return static_cast<mpfr_prec_t>(std::ceil((working_digits + guard_digits) * 3.321928094887362)) + 2;
}

Real::Real(mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real::Real(const PrecisionContext& ctx) : Real(ctx.bits()) { mpfr_set_zero(value_, 1); }

Real::Real(long value, const PrecisionContext& ctx) : Real(ctx.bits()) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, const PrecisionContext& ctx) : Real(ctx.bits()) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, const PrecisionContext& ctx) : Real(ctx.bits()) {
  const std::string text(decimal);
  char* end = nullptr;
  mpfr_strtofr(value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::invalid_argument("Real: cannot parse '" + text + "'");
  }
}

Real::Real(const Real& other) : Real(other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(MPFR_PREC_MIN) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::promote_to(mpfr_prec_t bits) {
  if (bits > precision()) {
    mpfr_prec_round(value_, bits, MPFR_RNDN);
  }
}

Real& Real::operator+=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Real: division by zero");
  }
  promote_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  if (rhs == 0) {
    throw std::domain_error("Real: division by zero");
  }
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

Real ln(const Real& x) {
  if (x.sign() <= 0) {
    throw std::domain_error("ln: argument must be positive");
  }
  Real out(x);
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x);
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base);
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(base.precision() >= exponent.precision() ? base : exponent);
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) {
    throw std::domain_error("sqrt: negative argument");
  }
  Real out(x);
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pi(const PrecisionContext& ctx) {
  Real out(ctx);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real rational_to_real(const Rational& q, const PrecisionContext& ctx) { return Real(q, ctx); }

std::string to_fixed(const Real& x, int decimals) {
  if (decimals < 0) {
    throw std::invalid_argument("to_fixed: negative decimal count");
  }
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNf", decimals, x.get()) < 0) {
    throw std::runtime_error("to_fixed: formatting failed");
  }
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  return std::string(raw);
}

std::string to_significant(const Real& x, int digits) {
  if (digits <= 0) {
    throw std::invalid_argument("to_significant: digit count must be positive");
  }
  if (x.is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
  }
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), x.get(), MPFR_RNDN);
  if (raw == nullptr) {
    throw std::runtime_error("to_significant: formatting failed");
  }
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exponent
  const auto n = static_cast<mpfr_exp_t>(mantissa.size());
  std::string body;
  if (exponent <= 0) {
    body = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + mantissa;
  } else if (exponent < n) {
    body = mantissa.substr(0, static_cast<std::size_t>(exponent)) + "." +
           mantissa.substr(static_cast<std::size_t>(exponent));
  } else {
    body = mantissa + std::string(static_cast<std::size_t>(exponent - n), '0');
  }
  return sign + body;
}

double agreeing_digits(const Real& a, const Real& b) {
  const double cap = static_cast<double>(std::max(a.precision(), b.precision())) * 0.30102999566398120;
  Real diff = abs(a - b);
  if (diff.is_zero()) return cap;
  if (b.is_zero()) return 0.0;
  Real rel = diff / abs(b);
  const double digits = -mpfr_get_d(ln(rel).get(), MPFR_RNDN) / std::log(10.0);
  return std::min(digits, cap);
}

}  // namespace slowsum
