#include "slowsum/series.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace slowsum {

char family_letter(Family family) { return family == Family::C ? 'C' : 'D'; }

Family parse_family(const std::string& text) {
  if (text == "c" || text == "C") return Family::C;
  if (text == "d" || text == "D") return Family::D;
  throw std::invalid_argument("unknown series family '" + text + "' (expected c or d)");
}

void SeriesSpec::validate() const {
  if (alpha < 2) {
    throw std::domain_error("series exponent alpha must be >= 2, got " + std::to_string(alpha));
  }
}

AtomExpression SeriesSpec::base_expression() const {
  validate();
  if (family == Family::C) return AtomExpression(Atom{1, 1, alpha});
  return AtomExpression(Atom{1, alpha, 0});
}

std::string SeriesSpec::name() const {
  return std::string(1, family_letter(family)) + "^(" + std::to_string(alpha) + ")";
}

namespace {

void require_index(const SeriesSpec& spec, long k, const char* what) {
  if (k < spec.start_index()) {
    throw std::domain_error(std::string(what) + ": index " + std::to_string(k) + " below start index " +
                            std::to_string(spec.start_index()) + " of " + spec.name());
  }
}

}  // namespace

Real term(const SeriesSpec& spec, long k, const PrecisionContext& ctx) {
  require_index(spec, k, "term");
  return evaluate(spec.base_expression(), Real(k, ctx), ctx);
}

Real partial_sum(const SeriesSpec& spec, long N, const PrecisionContext& ctx) {
  require_index(spec, N, "partial_sum");
  const AtomExpression base = spec.base_expression();
  AtomEvaluator evaluator(std::span(&base, 1), ctx);
  Real sum(ctx);
  Real value(ctx);
  Real x(ctx);
  for (long k = spec.start_index(); k <= N; ++k) {
    mpfr_set_si(x.get(), k, MPFR_RNDN);
    evaluator.evaluate(x, std::span(&value, 1));
    sum += value;
  }
  return sum;
}

Real tail_integral_from(const SeriesSpec& spec, const Real& lower, const PrecisionContext& ctx) {
  spec.validate();
  Real inner = ln(lower);
  if (spec.family == Family::C) {
    inner = ln(inner);
  }
  if (inner.sign() <= 0) {
    throw std::domain_error("tail_integral: lower limit outside the domain of " + spec.name());
  }
  Real denominator = pow(inner, spec.alpha - 1) * static_cast<long>(spec.alpha - 1);
  return Real(1, ctx) / denominator;
}

Real tail_integral(const SeriesSpec& spec, long N, const PrecisionContext& ctx) {
  spec.validate();
  require_index(spec, N, "tail_integral");
  return tail_integral_from(spec, Real(Rational(2 * N + 1, 2), ctx), ctx);
}

std::string DirectTermEstimate::render(int mantissa_digits) const {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", mantissa_digits, mantissa);
  long shown_exponent = exponent;
  if (std::strtod(buffer, nullptr) >= 10.0) {
    std::snprintf(buffer, sizeof buffer, "%.*g", mantissa_digits, mantissa / 10.0);
    ++shown_exponent;
  }
  return std::string(buffer) + "×10^" + std::to_string(shown_exponent);
}

DirectTermEstimate estimate_direct_terms(const Real& delta, const PrecisionContext& ctx) {
  if (delta.sign() <= 0) {
    throw std::domain_error("estimate_direct_terms: delta must be positive");
  }
  Real log10_terms = exp(Real(1, ctx) / delta) / ln(Real(10, ctx));
  Real whole(ctx);
  mpfr_floor(whole.get(), log10_terms.get());
  const long exponent = mpfr_get_si(whole.get(), MPFR_RNDN);
  const double fraction = (log10_terms - whole).to_double();
  return {std::move(log10_terms), std::pow(10.0, fraction), exponent};
}

}  // namespace slowsum
