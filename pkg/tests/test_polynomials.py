from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skewdomino.polynomials import (
    ONE,
    Q,
    SQRT_Q,
    X,
    Y,
    Z,
    ZERO,
    LaurentPoly,
    TruncatedSeries,
    q_binomial,
    q_factorial,
    series_exp,
)

terms = st.dictionaries(
    st.tuples(*[st.integers(-2, 2)] * 3 + [st.integers(-3, 3)]),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    max_size=5,
)


def poly(d):
    return sum((LaurentPoly.monomial(c, x=e[0], y=e[1], z=e[2], q=Fraction(e[3], 2))
                for e, c in d.items()), ZERO)


sx, sy, sz, sr = sympy.symbols("x y z r")


def to_sympy(p: LaurentPoly):
    out = 0
    for e, (re, im) in p.terms():
        out += (re + im * sympy.I) * sx ** e[0] * sy ** e[1] * sz ** e[2] * sr ** int(2 * e[3])
    return sympy.expand(out)


@settings(max_examples=60, deadline=None)
@given(terms, terms)
def test_ring_ops_match_sympy(a, b):
    p, q = poly(a), poly(b)
    assert to_sympy(p + q) == sympy.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@settings(max_examples=80, deadline=None)
@given(terms)
def test_text_round_trip(a):
    p = poly(a)
    assert LaurentPoly.parse(str(p)) == p


def test_canonical_text():
    assert str(2 * X + 2 * Y) == "2*x + 2*y"
    assert str(X + Y * SQRT_Q) == "x + y*q^1/2"
    assert str(ZERO) == "0"
    assert str(X ** -1 * Y ** -2 * Z ** -1) == "x^-1*y^-2*z^-1"


def test_inverse_and_powers():
    m = LaurentPoly.monomial(3, x=2, q=Fraction(1, 2))
    with pytest.raises((ValueError, ZeroDivisionError)):
        (X + Y).inverse()
    assert (X * Y) ** -2 * (X * Y) ** 2 == ONE
    assert LaurentPoly.monomial(x=-1) * X == ONE
    assert m ** 0 == ONE


def test_substitute_half_powers():
    p = X + Y * SQRT_Q
    assert p.substitute(roots={"q": LaurentPoly.constant((0, 1))}) == X + Y * LaurentPoly.constant((0, 1))
    with pytest.raises(ValueError):
        p.substitute(values={"q": -1})


@pytest.mark.parametrize("n", range(7))
def test_q_binomial_matches_product_formula(n):
    for k in range(n + 1):
        lhs = q_binomial(n, k) * q_factorial(k) * q_factorial(n - k)
        assert lhs == q_factorial(n)
        assert q_binomial(n, k).substitute(values={"q": 1}).to_int() == sympy.binomial(n, k)


def test_series_exp_of_t_is_all_ones():
    e = series_exp(TruncatedSeries([ZERO, ONE], 6))
    assert all(c == ONE for c in e.coeffs)


def test_series_exp_is_multiplicative():
    a = TruncatedSeries([ZERO, X, Y + Q], 6)
    b = TruncatedSeries([ZERO, Y, ONE], 6)
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


def test_series_exp_matches_sympy():
    t = sympy.symbols("t")
    s = sympy.series(sympy.exp(sx * t + t ** 2 / 2), t, 0, 7).removeO()
    e = series_exp(TruncatedSeries([ZERO, X, ONE], 6))
    for n in range(7):
        assert to_sympy(e[n]) == sympy.expand(s.coeff(t, n) * sympy.factorial(n))


def test_series_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries([ONE], 3))
