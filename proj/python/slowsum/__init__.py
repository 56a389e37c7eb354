"""High-precision evaluation of slowly convergent log-power series.

Values come back as :class:`decimal.Decimal` (exact renderings of the
high-precision results) and exact coefficients as :class:`fractions.Fraction`.
"""

from decimal import Decimal
from fractions import Fraction

from . import _core
from ._core import ConfigError, ConvergenceError

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "bernoulli_even",
    "beta",
    "beta_via_compositions",
    "derivative",
    "estimate_direct_terms",
    "evaluate",
    "evaluate_constant",
    "partial_sum",
    "table",
    "tail_integral",
    "term",
]


def _fraction(parts):
    num, den = parts
    return Fraction(int(num), int(den))


def bernoulli_even(m):
    return _fraction(_core.bernoulli_even(m))


def beta(s):
    return _fraction(_core.beta(s))


def beta_via_compositions(s):
    return _fraction(_core.beta_via_compositions(s))


def derivative(family, alpha, order):
    """Returns (text, {(n, l, L): Fraction}) for the order-th derivative of the series term."""
    text, terms = _core.derivative(family, alpha, order)
    return text, {atom: _fraction(c) for atom, c in terms}


def term(family, alpha, k, digits=30, precision=50):
    return Decimal(_core.term(family, alpha, k, digits, precision))


def partial_sum(family, alpha, n, digits=30, precision=50):
    return Decimal(_core.partial_sum(family, alpha, n, digits, precision))


def tail_integral(family, alpha, n, digits=30, precision=50):
    return Decimal(_core.tail_integral(family, alpha, n, digits, precision))


def evaluate(family, alpha, engine="em", n=None, s_max=None, k_hat=None, digits=15, precision=50):
    record = _core.evaluate(family, alpha, engine, n, s_max, k_hat, digits, precision)
    record["value"] = Decimal(record["value"])
    record["corrections"] = [Decimal(c) for c in record["corrections"]]
    return record


def evaluate_constant(family, alpha, digits=15, precision=50):
    return Decimal(_core.evaluate_constant(family, alpha, digits, precision))


def table(which, format="plain", precision=50):
    return _core.table(which, format, precision)


def estimate_direct_terms(delta):
    """Returns (log10 N, "m×10^e") for the plain-summation cost at accuracy delta."""
    log10_terms, rendered = _core.estimate_direct_terms(str(delta))
    return Decimal(log10_terms), rendered
