#include "slowsum/atoms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slowsum {

AtomExpression::AtomExpression(const Atom& atom, Rational coefficient) { add(atom, coefficient); }

void AtomExpression::add(const Atom& atom, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(atom, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AtomExpression& AtomExpression::operator+=(const AtomExpression& rhs) {
  for (const auto& [atom, coefficient] : rhs.terms_) add(atom, coefficient);
  return *this;
}

AtomExpression& AtomExpression::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [atom, coefficient] : terms_) coefficient *= factor;
  return *this;
}

Rational AtomExpression::coefficient(const Atom& atom) const {
  const auto it = terms_.find(atom);
  return it == terms_.end() ? Rational(0) : it->second;
}

Atom AtomExpression::max_exponents() const {
  Atom out;
  for (const auto& [atom, coefficient] : terms_) {
    out.x_power = std::max(out.x_power, atom.x_power);
    out.log_power = std::max(out.log_power, atom.log_power);
    out.loglog_power = std::max(out.loglog_power, atom.loglog_power);
  }
  return out;
}

AtomExpression differentiate_atom(const Atom& atom) {
  const auto [n, l, L] = atom;
  AtomExpression out;
  out.add({n + 1, l, L}, Rational(-n));
  out.add({n + 1, l + 1, L}, Rational(-l));
  out.add({n + 1, l + 1, L + 1}, Rational(-L));
  return out;
}

AtomExpression differentiate(const AtomExpression& expr, int order) {
  if (order < 0) {
    throw std::domain_error("differentiate: negative order");
  }
  AtomExpression current = expr;
  for (int step = 0; step < order; ++step) {
    AtomExpression next;
    for (const auto& [atom, coefficient] : current) {
      AtomExpression d = differentiate_atom(atom);
      d *= coefficient;
      next += d;
    }
    current = std::move(next);
  }
  return current;
}

std::string to_string(const AtomExpression& expr) {
  if (expr.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [atom, coefficient] : expr) {
    const bool negative = coefficient.sign() < 0;
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    const Rational magnitude = coefficient.abs();
    if (magnitude.denominator() != 1) {
      out << '(' << magnitude.str() << ')';
    } else if (magnitude != Rational(1)) {
      out << magnitude.str();
    }
    out << "g(" << atom.x_power << ',' << atom.log_power << ',' << atom.loglog_power << ')';
    first = false;
  }
  return out.str();
}

AtomEvaluator::AtomEvaluator(std::span<const AtomExpression> expressions,
                             const PrecisionContext& ctx)
    : ctx_(ctx), scratch_(ctx), product_(ctx) {
  for (const auto& expr : expressions) {
    const Atom m = expr.max_exponents();
    max_.x_power = std::max(max_.x_power, m.x_power);
    max_.log_power = std::max(max_.log_power, m.log_power);
    max_.loglog_power = std::max(max_.loglog_power, m.loglog_power);
    std::vector<Term> terms;
    terms.reserve(expr.size());
    for (const auto& [atom, coefficient] : expr) {
      if (atom.x_power < 0 || atom.log_power < 0 || atom.loglog_power < 0) {
        throw std::domain_error("AtomEvaluator: negative exponent");
      }
      terms.push_back({atom, Real(coefficient, ctx)});
    }
    compiled_.push_back(std::move(terms));
  }
  inv_x_powers_.assign(static_cast<std::size_t>(max_.x_power) + 1, Real(ctx));
  inv_log_powers_.assign(static_cast<std::size_t>(max_.log_power) + 1, Real(ctx));
  inv_loglog_powers_.assign(static_cast<std::size_t>(max_.loglog_power) + 1, Real(ctx));
}

// powers[j] = 1 / base^j
void AtomEvaluator::fill_powers(const Real& base, std::vector<Real>& powers) {
  mpfr_set_ui(powers[0].get(), 1, MPFR_RNDN);
  if (powers.size() == 1) return;
  mpfr_ui_div(powers[1].get(), 1, base.get(), MPFR_RNDN);
  for (std::size_t j = 2; j < powers.size(); ++j) {
    mpfr_mul(powers[j].get(), powers[j - 1].get(), powers[1].get(), MPFR_RNDN);
  }
}

void AtomEvaluator::evaluate(const Real& x, std::span<Real> out) {
  if (out.size() < compiled_.size()) {
    throw std::invalid_argument("AtomEvaluator: output span too small");
  }
  if (x.sign() <= 0 && max_.x_power > 0) {
    throw std::domain_error("AtomEvaluator: x must be positive");
  }
  mpfr_set(scratch_.get(), x.get(), MPFR_RNDN);
  fill_powers(scratch_, inv_x_powers_);
  if (max_.log_power > 0 || max_.loglog_power > 0) {
    mpfr_log(scratch_.get(), x.get(), MPFR_RNDN);
    if (scratch_.sign() <= 0) {
      throw std::domain_error("AtomEvaluator: log x must be positive (need x > 1)");
    }
    fill_powers(scratch_, inv_log_powers_);
    if (max_.loglog_power > 0) {
      mpfr_log(scratch_.get(), scratch_.get(), MPFR_RNDN);
      if (scratch_.sign() <= 0) {
        throw std::domain_error("AtomEvaluator: log log x must be positive (need x > e)");
      }
      fill_powers(scratch_, inv_loglog_powers_);
    }
  }
  for (std::size_t i = 0; i < compiled_.size(); ++i) {
    Real& acc = out[i];
    mpfr_set_prec(acc.get(), ctx_.bits());
    mpfr_set_zero(acc.get(), 1);
    for (const auto& term : compiled_[i]) {
      mpfr_mul(product_.get(), term.coefficient.get(), inv_x_powers_[term.atom.x_power].get(), MPFR_RNDN);
      if (term.atom.log_power > 0) {
        mpfr_mul(product_.get(), product_.get(), inv_log_powers_[term.atom.log_power].get(), MPFR_RNDN);
      }
      if (term.atom.loglog_power > 0) {
        mpfr_mul(product_.get(), product_.get(), inv_loglog_powers_[term.atom.loglog_power].get(),
                 MPFR_RNDN);
      }
      mpfr_add(acc.get(), acc.get(), product_.get(), MPFR_RNDN);
    }
  }
}

Real evaluate(const AtomExpression& expr, const Real& x, const PrecisionContext& ctx) {
  AtomEvaluator evaluator(std::span(&expr, 1), ctx);
  Real out(ctx);
  evaluator.evaluate(x, std::span(&out, 1));
  return out;
}

}  // namespace slowsum
