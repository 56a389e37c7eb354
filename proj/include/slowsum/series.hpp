#pragma once

#include <string>

#include "slowsum/atoms.hpp"
#include "slowsum/real.hpp"

namespace slowsum {

enum class Family {
  C,  ///< sum_{k>=3} 1 / [k log k (log log k)^alpha]
  D,  ///< sum_{k>=2} 1 / [k (log k)^alpha]
};

char family_letter(Family family);
/// Accepts "c"/"C"/"d"/"D". Throws std::invalid_argument otherwise.
Family parse_family(const std::string& text);

struct SeriesSpec {
  Family family = Family::C;
  int alpha = 2;

  static SeriesSpec c(int alpha) { return {Family::C, alpha}; }
  static SeriesSpec d(int alpha) { return {Family::D, alpha}; }

  /// Throws std::domain_error when alpha < 2.
  void validate() const;
  long start_index() const { return family == Family::C ? 3 : 2; }
  /// g(1,1,alpha) for the C family, g(1,alpha,0) for the D family.
  AtomExpression base_expression() const;
  /// e.g. "C^(2)".
  std::string name() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// The k-th term. Throws std::domain_error for k < start_index.
Real term(const SeriesSpec& spec, long k, const PrecisionContext& ctx);

/// Sum of terms start_index..N in ascending order.
Real partial_sum(const SeriesSpec& spec, long N, const PrecisionContext& ctx);

/// Closed-form integral of the interpolating function from `lower` to
/// infinity: 1/((alpha-1) [log log lower]^(alpha-1)) for the C family and
/// 1/((alpha-1) [log lower]^(alpha-1)) for the D family.
Real tail_integral_from(const SeriesSpec& spec, const Real& lower, const PrecisionContext& ctx);

/// tail_integral_from(N + 1/2).
Real tail_integral(const SeriesSpec& spec, long N, const PrecisionContext& ctx);

/// How many terms a plain partial sum needs before the neglected tail of a
/// C^(2)-type series drops to `delta`: N ~ exp(exp(1/delta)).
struct DirectTermEstimate {
  Real log10_terms;  ///< exp(1/delta) / ln 10
  double mantissa;   ///< N = mantissa * 10^exponent, 1 <= mantissa < 10
  long exponent;

  /// "m×10^e" with the mantissa to `mantissa_digits` significant digits.
  std::string render(int mantissa_digits = 2) const;
};

/// Throws std::domain_error for delta <= 0.
DirectTermEstimate estimate_direct_terms(const Real& delta, const PrecisionContext& ctx);

}  // namespace slowsum
