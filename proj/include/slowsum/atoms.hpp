#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slowsum/rational.hpp"
#include "slowsum/real.hpp"

namespace slowsum {

/// g(n, l, L) = 1 / [x^n (log x)^l (log log x)^L].
struct Atom {
  int x_power = 0;
  int log_power = 0;
  int loglog_power = 0;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Finite linear combination of atoms with exact rational coefficients.
/// Canonical: keys sorted, zero coefficients never stored.
class AtomExpression {
 public:
  using Terms = std::map<Atom, Rational>;

  AtomExpression() = default;
  explicit AtomExpression(const Atom& atom, Rational coefficient = Rational(1));

  /// Adds coefficient * atom, dropping the entry if it cancels to zero.
  void add(const Atom& atom, const Rational& coefficient);
  AtomExpression& operator+=(const AtomExpression& rhs);
  AtomExpression& operator*=(const Rational& factor);

  /// Zero when the atom is absent.
  Rational coefficient(const Atom& atom) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  /// Largest exponent of each kind over all atoms.
  Atom max_exponents() const;

  friend bool operator==(const AtomExpression&, const AtomExpression&) = default;

 private:
  Terms terms_;
};

/// d/dx g(n,l,L) = -n g(n+1,l,L) - l g(n+1,l+1,L) - L g(n+1,l+1,L+1).
AtomExpression differentiate_atom(const Atom& atom);

/// Exact derivative of the given order; order 0 returns the input.
AtomExpression differentiate(const AtomExpression& expr, int order);

/// Renders like "2g(3,1,2)+3g(3,2,2)-g(2,1,2)"; non-integer coefficients are
/// parenthesised, e.g. "(1/2)g(1,0,0)".
std::string to_string(const AtomExpression& expr);

/// Evaluates several expressions at many abscissae, sharing the powers of
/// 1/x, 1/log x and 1/log log x between them. Factors with exponent zero are
/// never formed, so log log x is only required when some L > 0.
class AtomEvaluator {
 public:
  AtomEvaluator(std::span<const AtomExpression> expressions, const PrecisionContext& ctx);

  /// Writes the value of expression i into out[i]. Throws std::domain_error
  /// when a required log or log log factor is not positive.
  void evaluate(const Real& x, std::span<Real> out);

  std::size_t expression_count() const { return compiled_.size(); }

 private:
  struct Term {
    Atom atom;
    Real coefficient;
  };

  void fill_powers(const Real& base, std::vector<Real>& powers);

  PrecisionContext ctx_;
  Atom max_{};
  std::vector<std::vector<Term>> compiled_;
  std::vector<Real> inv_x_powers_;
  std::vector<Real> inv_log_powers_;
  std::vector<Real> inv_loglog_powers_;
  Real scratch_;
  Real product_;
};

/// Single evaluation of one expression.
Real evaluate(const AtomExpression& expr, const Real& x, const PrecisionContext& ctx);

}  // namespace slowsum
