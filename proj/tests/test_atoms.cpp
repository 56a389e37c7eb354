#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "oracles.hpp"
#include "slowsum/atoms.hpp"

using slowsum::Atom;
using slowsum::AtomExpression;
using slowsum::PrecisionContext;
using slowsum::Rational;
using slowsum::Real;

namespace {

AtomExpression expr(std::initializer_list<std::pair<Atom, long>> terms) {
  AtomExpression out;
  for (const auto& [atom, c] : terms) out.add(atom, Rational(c));
  return out;
}

}  // namespace

TEST_CASE("expression canonical form") {
  AtomExpression e;
  e.add({1, 1, 2}, Rational(3));
  e.add({1, 1, 2}, Rational(-3));
  CHECK(e.empty());
  e.add({2, 0, 0}, Rational(0));
  CHECK(e.empty());
  e.add({3, 1, 0}, Rational(1, 2));
  e.add({2, 1, 0}, Rational(-1));
  CHECK(e.begin()->first == Atom{2, 1, 0});
  CHECK(slowsum::to_string(e) == "-g(2,1,0)+(1/2)g(3,1,0)");
}

TEST_CASE("differentiate_atom") {
  CHECK(slowsum::differentiate_atom({1, 1, 2}) ==
        expr({{{2, 1, 2}, -1}, {{2, 2, 2}, -1}, {{2, 2, 3}, -2}}));
  CHECK(slowsum::differentiate_atom({4, 0, 0}) == expr({{{5, 0, 0}, -4}}));
  CHECK(slowsum::differentiate_atom({1, 2, 0}) == expr({{{2, 2, 0}, -1}, {{2, 3, 0}, -2}}));
  CHECK(slowsum::differentiate_atom({0, 0, 0}).empty());
}

TEST_CASE("differentiate order 0 and 2") {
  const AtomExpression base(Atom{1, 1, 2});
  CHECK(slowsum::differentiate(base, 0) == base);
  CHECK(slowsum::differentiate(base, 2) == expr({{{3, 1, 2}, 2},
                                                 {{3, 2, 2}, 3},
                                                 {{3, 2, 3}, 6},
                                                 {{3, 3, 2}, 2},
                                                 {{3, 3, 3}, 6},
                                                 {{3, 3, 4}, 6}}));
  CHECK(slowsum::to_string(slowsum::differentiate(base, 2)) ==
        "2g(3,1,2)+3g(3,2,2)+6g(3,2,3)+2g(3,3,2)+6g(3,3,3)+6g(3,3,4)");
  CHECK_THROWS_AS(slowsum::differentiate(base, -1), std::domain_error);
}

TEST_CASE("second derivative matches the printed display up to its last atom") {
  // The printed display puts alpha(1+alpha) on g(3,3,1+alpha); the product
  // rule puts it on g(3,3,2+alpha). The finite-difference test below settles it.
  for (long a : {2L, 3L, 4L}) {
    const int ai = static_cast<int>(a);
    const AtomExpression d2 = slowsum::differentiate(AtomExpression(Atom{1, 1, ai}), 2);
    CHECK(d2.coefficient({3, 1, ai}) == Rational(2));
    CHECK(d2.coefficient({3, 2, ai}) == Rational(3));
    CHECK(d2.coefficient({3, 2, ai + 1}) == Rational(3 * a));
    CHECK(d2.coefficient({3, 3, ai}) == Rational(2));
    CHECK(d2.coefficient({3, 3, ai + 1}) == Rational(3 * a));
    CHECK(d2.coefficient({3, 3, ai + 2}) == Rational(a * (1 + a)));
  }
}

TEST_CASE("third derivative matches the printed display") {
  for (long a : {2L, 3L, 5L}) {
    const int ai = static_cast<int>(a);
    const AtomExpression d3 = slowsum::differentiate(AtomExpression(Atom{1, 1, ai}), 3);
    CAPTURE(a);
    CHECK(d3.size() == 10);
    CHECK(d3.coefficient({4, 1, ai}) == Rational(-6));
    CHECK(d3.coefficient({4, 2, ai}) == Rational(-11));
    CHECK(d3.coefficient({4, 2, ai + 1}) == Rational(-11 * a));
    CHECK(d3.coefficient({4, 3, ai}) == Rational(-12));
    CHECK(d3.coefficient({4, 3, ai + 1}) == Rational(-18 * a));
    CHECK(d3.coefficient({4, 3, ai + 2}) == Rational(-6 * a * (1 + a)));
    CHECK(d3.coefficient({4, 4, ai}) == Rational(-6));
    CHECK(d3.coefficient({4, 4, ai + 1}) == Rational(-11 * a));
    CHECK(d3.coefficient({4, 4, ai + 2}) == Rational(-6 * a * (1 + a)));
    CHECK(d3.coefficient({4, 4, ai + 3}) == Rational(-a * (2 + 3 * a + a * a)));
  }
}

TEST_CASE("fourth derivative matches the printed display") {
  for (long a : {2L, 3L, 4L}) {
    const int ai = static_cast<int>(a);
    const AtomExpression d4 = slowsum::differentiate(AtomExpression(Atom{1, 1, ai}), 4);
    CAPTURE(a);
    CHECK(d4.size() == 15);
    CHECK(d4.coefficient({5, 1, ai}) == Rational(24));
    CHECK(d4.coefficient({5, 2, ai}) == Rational(50));
    CHECK(d4.coefficient({5, 3, ai}) == Rational(70));
    CHECK(d4.coefficient({5, 4, ai}) == Rational(60));
    CHECK(d4.coefficient({5, 5, ai}) == Rational(24));
    CHECK(d4.coefficient({5, 2, ai + 1}) == Rational(50 * a));
    CHECK(d4.coefficient({5, 3, ai + 1}) == Rational(105 * a));
    CHECK(d4.coefficient({5, 3, ai + 2}) == Rational(35 * a * (1 + a)));
    CHECK(d4.coefficient({5, 4, ai + 1}) == Rational(110 * a));
    CHECK(d4.coefficient({5, 4, ai + 2}) == Rational(60 * a * (1 + a)));
    CHECK(d4.coefficient({5, 4, ai + 3}) == Rational(10 * a * (2 + 3 * a + a * a)));
    CHECK(d4.coefficient({5, 5, ai + 1}) == Rational(50 * a));
    CHECK(d4.coefficient({5, 5, ai + 2}) == Rational(35 * a * (1 + a)));
    CHECK(d4.coefficient({5, 5, ai + 3}) == Rational(10 * a * (2 + 3 * a + a * a)));
    CHECK(d4.coefficient({5, 5, ai + 4}) == Rational(a * (6 + 11 * a + 6 * a * a + a * a * a)));
  }
}

TEST_CASE("D-family odd derivatives") {
  for (long a : {2L, 3L, 4L}) {
    const int ai = static_cast<int>(a);
    const AtomExpression base(Atom{1, ai, 0});
    // -(alpha + log x) / (x^2 (log x)^(1+alpha))
    CHECK(slowsum::differentiate(base, 1) == expr({{{2, ai, 0}, -1}, {{2, ai + 1, 0}, -a}}));
    // -(alpha(2+3alpha+alpha^2) + 6 alpha(1+alpha) log x + (11 alpha + 6 log x)(log x)^2) / (x^4 (log x)^(3+alpha)).
    // The printed closed form has 6 alpha on the linear log x term; the
    // finite-difference check of g(1,2,0) below confirms 6 alpha(1+alpha).
    CHECK(slowsum::differentiate(base, 3) == expr({{{4, ai, 0}, -6},
                                                   {{4, ai + 1, 0}, -11 * a},
                                                   {{4, ai + 2, 0}, -6 * a * (1 + a)},
                                                   {{4, ai + 3, 0}, -a * (2 + 3 * a + a * a)}}));
  }
}

TEST_CASE("atom count of the m-th derivative of g(1,1,alpha) is (m+1)(m+2)/2") {
  for (int m = 0; m <= 9; ++m) {
    CAPTURE(m);
    CHECK(slowsum::differentiate(AtomExpression(Atom{1, 1, 3}), m).size() ==
          static_cast<std::size_t>((m + 1) * (m + 2) / 2));
  }
  CHECK(slowsum::differentiate(AtomExpression(Atom{1, 1, 2}), 2).size() == 6);
  CHECK(slowsum::differentiate(AtomExpression(Atom{1, 1, 2}), 4).size() == 15);
}

TEST_CASE("evaluate at analytic points") {
  const PrecisionContext ctx;
  const Real e = slowsum::exp(Real(1, ctx));
  const Real e_to_e = slowsum::exp(e);
  const Real expected = slowsum::exp(-(e + Real(1, ctx)));
  CHECK(slowsum::agreeing_digits(slowsum::evaluate(AtomExpression(Atom{1, 1, 2}), e_to_e, ctx), expected) >= 55);
  CHECK(slowsum::agreeing_digits(slowsum::evaluate(AtomExpression(Atom{2, 0, 0}), Real(10, ctx), ctx),
                                 Real(Rational(1, 100), ctx)) >= 58);
  const Real k3 = slowsum::evaluate(AtomExpression(Atom{1, 1, 2}), Real(3, ctx), ctx);
  CHECK(slowsum::agreeing_digits(k3, slowsum::oracle::atom_direct(1, 1, 2, Real(3, ctx), ctx)) >= 55);
  CHECK(k3.to_double() == doctest::Approx(34.3).epsilon(0.002));
}

TEST_CASE("evaluate domain") {
  const PrecisionContext ctx;
  // log log 2 < 0
  CHECK_THROWS_AS(slowsum::evaluate(AtomExpression(Atom{1, 1, 2}), Real(2, ctx), ctx), std::domain_error);
  CHECK_THROWS_AS(slowsum::evaluate(AtomExpression(Atom{1, 1, 0}), Real(1, ctx), ctx), std::domain_error);
  // no log log factor needed below e
  CHECK_NOTHROW(slowsum::evaluate(AtomExpression(Atom{1, 2, 0}), Real(2, ctx), ctx));
  CHECK_NOTHROW(slowsum::evaluate(AtomExpression(Atom{3, 0, 0}), Real(Rational(1, 2), ctx), ctx));
}

TEST_CASE("symbolic derivatives agree with central finite differences") {
  const PrecisionContext ctx{70, 10};
  for (const Atom& atom : {Atom{1, 1, 2}, Atom{1, 1, 3}, Atom{2, 2, 1}, Atom{1, 2, 0}}) {
    const std::function<Real(const Real&)> f = [&](const Real& x) {
      return slowsum::oracle::atom_direct(atom.x_power, atom.log_power, atom.loglog_power, x, ctx);
    };
    for (long x0 : {10L, 100L}) {
      const Real x(x0, ctx);
      const Real h = x * Real("1e-6", ctx);
      for (int m = 1; m <= 4; ++m) {
        const Real symbolic = slowsum::evaluate(slowsum::differentiate(AtomExpression(atom), m), x, ctx);
        const Real numeric = slowsum::oracle::central_difference(f, x, h, m, ctx);
        CAPTURE(slowsum::to_string(AtomExpression(atom)));
        CAPTURE(x0);
        CAPTURE(m);
        CHECK(slowsum::agreeing_digits(symbolic, numeric) > 8.0);
      }
    }
  }
}

TEST_CASE("even derivatives of the C-family term are positive") {
  const PrecisionContext ctx;
  for (int alpha : {2, 3, 4}) {
    for (int s : {1, 2, 3}) {
      const AtomExpression d = slowsum::differentiate(AtomExpression(Atom{1, 1, alpha}), 2 * s);
      for (long k : {21L, 100L, 1000L}) {
        CHECK(slowsum::evaluate(d, Real(k, ctx), ctx).sign() > 0);
      }
    }
  }
}

TEST_CASE("order-2s derivatives decay like k^-(2s+1)") {
  const PrecisionContext ctx;
  for (int s : {1, 2, 3}) {
    const AtomExpression d = slowsum::differentiate(AtomExpression(Atom{1, 1, 2}), 2 * s);
    Real first(ctx);
    for (long k = 1000; k <= 8000; k *= 2) {
      const Real scaled = slowsum::evaluate(d, Real(k, ctx), ctx) * slowsum::pow(Real(k, ctx), 2L * s + 1);
      if (k == 1000) first = scaled;
      CAPTURE(s);
      CAPTURE(k);
      CHECK(scaled.sign() > 0);
      CHECK(scaled <= first);
    }
  }
}

TEST_CASE("AtomEvaluator shares powers across expressions") {
  const PrecisionContext ctx;
  std::vector<AtomExpression> exprs;
  for (int m = 0; m <= 6; ++m) exprs.push_back(slowsum::differentiate(AtomExpression(Atom{1, 1, 3}), m));
  slowsum::AtomEvaluator evaluator(exprs, ctx);
  std::vector<Real> out(exprs.size(), Real(ctx));
  const Real x(Rational(81, 2), ctx);
  evaluator.evaluate(x, out);
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    CHECK(out[i] == slowsum::evaluate(exprs[i], x, ctx));
  }
}
