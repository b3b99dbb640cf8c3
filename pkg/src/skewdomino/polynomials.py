"""Exact Laurent polynomials in x, y, z, q and truncated exponential series.

Exponents may be half-integers and coefficients are Gaussian integers, so
quantities such as ``q**(1/2)``, ``z**(-1/2)`` and ``sqrt(-1)`` are exact.
Exponents are stored doubled (as ints) and coefficients as ``(re, im)``
pairs of Python ints.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Union

VARIABLES = ("x", "y", "z", "q")

Exponents = tuple[int, int, int, int]  # doubled exponents of x, y, z, q
Gaussian = tuple[int, int]

_ZERO_EXP: Exponents = (0, 0, 0, 0)


def _gmul(a: Gaussian, b: Gaussian) -> Gaussian:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gadd(a: Gaussian, b: Gaussian) -> Gaussian:
    return (a[0] + b[0], a[1] + b[1])


def _doubled(e) -> int:
    f = Fraction(e)
    if (2 * f).denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return int(2 * f)


def _as_coeff(c) -> Gaussian:
    if isinstance(c, tuple):
        return (int(c[0]), int(c[1]))
    if isinstance(c, complex):
        if c.real != int(c.real) or c.imag != int(c.imag):
            raise ValueError(f"coefficient {c} is not a Gaussian integer")
        return (int(c.real), int(c.imag))
    if isinstance(c, Fraction) and c.denominator != 1:
        raise ValueError(f"coefficient {c} is not an integer")
    return (int(c), 0)


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable multivariate Laurent polynomial over Z[i].

    >>> x, y = LaurentPoly.var("x"), LaurentPoly.var("y")
    >>> str((x + y) ** 2)
    'x^2 + 2*x*y + y^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Gaussian] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c != (0, 0):
                    clean[e] = c
        self._terms: dict[Exponents, Gaussian] = clean
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({_ZERO_EXP: _as_coeff(c)})

    @classmethod
    def monomial(cls, coeff=1, *, x=0, y=0, z=0, q=0) -> LaurentPoly:
        exps = (_doubled(x), _doubled(y), _doubled(z), _doubled(q))
        return cls({exps: _as_coeff(coeff)})

    @classmethod
    def var(cls, name: str) -> LaurentPoly:
        return cls.monomial(**{name: 1})

    @classmethod
    def coerce(cls, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        return cls.constant(other)

    # -- inspection ---------------------------------------------------
    def terms(self) -> Iterator[tuple[tuple[Fraction, ...], Gaussian]]:
        """Yield ``(exponents, (re, im))`` in canonical (descending) order."""
        for e in sorted(self._terms, reverse=True):
            yield tuple(Fraction(v, 2) for v in e), self._terms[e]

    def coefficient(self, *, x=0, y=0, z=0, q=0) -> Gaussian:
        e = (_doubled(x), _doubled(y), _doubled(z), _doubled(q))
        return self._terms.get(e, (0, 0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(c[1] == 0 for c in self._terms.values())

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self._terms)

    def constant_term(self) -> Gaussian:
        return self._terms.get(_ZERO_EXP, (0, 0))

    def to_int(self) -> int:
        """Return the value of a real constant polynomial as an int."""
        if not self.is_constant() or not self.is_real():
            raise ValueError(f"{self} is not a real integer constant")
        return self.constant_term()[0]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = _gadd(out.get(e, (0, 0)), c)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: (-c[0], -c[1]) for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: (c[0] * other, c[1] * other) for e, c in self._terms.items()})
        other = LaurentPoly.coerce(other)
        out: dict[Exponents, Gaussian] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = _gadd(out.get(e, (0, 0)), _gmul(c1, c2))
        return LaurentPoly(out)

    __rmul__ = __mul__

    def inverse(self) -> LaurentPoly:
        """Inverse of a monomial whose coefficient is a unit (1, -1, i, -i)."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not invertible in the Laurent ring")
        (e, c), = self._terms.items()
        units = {(1, 0): (1, 0), (-1, 0): (-1, 0), (0, 1): (0, -1), (0, -1): (0, 1)}
        if c not in units:
            raise ValueError(f"coefficient of {self} is not a unit")
        return LaurentPoly({tuple(-v for v in e): units[c]})

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, complex, tuple)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -------------------------------------------------
    def substitute(self, values: Mapping[str, Scalar] | None = None,
                   roots: Mapping[str, Scalar] | None = None) -> LaurentPoly:
        """Ring homomorphism sending each variable to a value.

        ``values[v]`` is the image of ``v``; ``roots[v]`` is the image of
        ``v**(1/2)`` and is required when ``v`` carries a half-integer
        exponent. Variables not mentioned are left alone. Negative
        exponents require an invertible (unit monomial) image.
        """
        values = {k: LaurentPoly.coerce(v) for k, v in (values or {}).items()}
        roots = {k: LaurentPoly.coerce(v) for k, v in (roots or {}).items()}
        for k, r in roots.items():
            values.setdefault(k, r * r)
        cache: dict[tuple[int, int], LaurentPoly] = {}

        def power(idx: int, doubled: int) -> LaurentPoly:
            key = (idx, doubled)
            if key not in cache:
                name = VARIABLES[idx]
                if doubled % 2:
                    if name not in roots:
                        raise ValueError(f"half-integer power of {name} needs a square root")
                    cache[key] = roots[name] ** doubled
                else:
                    cache[key] = values[name] ** (doubled // 2)
            return cache[key]

        total = LaurentPoly()
        for e, c in self._terms.items():
            kept = list(e)
            term = LaurentPoly({_ZERO_EXP: c})
            for idx, name in enumerate(VARIABLES):
                if e[idx] and name in values:
                    term = term * power(idx, e[idx])
                    kept[idx] = 0
            total = total + term * LaurentPoly({tuple(kept): (1, 0)})
        return total

    # -- text form ----------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, e in enumerate(sorted(self._terms, reverse=True)):
            s = _format_term(e, self._terms[e])
            if i == 0:
                out.append(s)
            elif s.startswith("-"):
                out.append(" - " + s[1:])
            else:
                out.append(" + " + s)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; accepts the canonical text form."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        pieces = re.split(r" ([+-]) ", text)
        total = cls()
        sign = 1
        for k, piece in enumerate(pieces):
            if k % 2 == 1:
                sign = -1 if piece == "-" else 1
                continue
            total = total + _parse_term(piece) * sign
        return total


def _format_exp(doubled: int) -> str:
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"{doubled}/2"


def _format_coeff(c: Gaussian) -> str:
    a, b = c
    if b == 0:
        return str(a)
    if a == 0:
        if b == 1:
            return "i"
        if b == -1:
            return "-i"
        return f"{b}i"
    return f"({a}{'+' if b > 0 else '-'}{abs(b)}i)"


def _format_term(e: Exponents, c: Gaussian) -> str:
    factors = []
    for name, d in zip(VARIABLES, e):
        if d == 0:
            continue
        factors.append(name if d == 2 else f"{name}^{_format_exp(d)}")
    mono = "*".join(factors)
    if not mono:
        return _format_coeff(c)
    if c == (1, 0):
        return mono
    if c == (-1, 0):
        return "-" + mono
    return f"{_format_coeff(c)}*{mono}"


_COEFF_RE = re.compile(r"^\((-?\d+)([+-]\d+)i\)$|^(-?\d*)i$|^(-?\d+)$")


def _parse_term(s: str) -> LaurentPoly:
    sign = 1
    if s.startswith("-") and not _COEFF_RE.match(s.split("*")[0]):
        sign, s = -1, s[1:]
    coeff: Gaussian = (1, 0)
    doubled = [0, 0, 0, 0]
    for factor in s.split("*"):
        m = _COEFF_RE.match(factor)
        if m:
            if m.group(1) is not None:
                coeff = _gmul(coeff, (int(m.group(1)), int(m.group(2))))
            elif m.group(4) is not None:
                coeff = _gmul(coeff, (int(m.group(4)), 0))
            else:
                b = m.group(3)
                b = 1 if b in ("", None) else (-1 if b == "-" else int(b))
                coeff = _gmul(coeff, (0, b))
            continue
        name, _, exp = factor.partition("^")
        if name not in VARIABLES:
            raise ValueError(f"cannot parse factor {factor!r}")
        doubled[VARIABLES.index(name)] += _doubled(Fraction(exp) if exp else 1)
    return LaurentPoly({tuple(doubled): (coeff[0] * sign, coeff[1] * sign)})


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
I_UNIT = LaurentPoly.constant((0, 1))
X = LaurentPoly.var("x")
Y = LaurentPoly.var("y")
Z = LaurentPoly.var("z")
Q = LaurentPoly.var("q")
SQRT_Q = LaurentPoly.monomial(q=Fraction(1, 2))


def poly_sum(items: Iterable) -> LaurentPoly:
    total = ZERO
    for it in items:
        total = total + it
    return total


# -- q-analogues ------------------------------------------------------

def q_integer(n: int) -> LaurentPoly:
    """``1 + q + ... + q^(n-1)``."""
    return poly_sum(Q ** i for i in range(n))


def q_factorial(n: int) -> LaurentPoly:
    result = ONE
    for i in range(1, n + 1):
        result = result * q_integer(i)
    return result


def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient via the q-Pascal recurrence."""
    if k < 0 or k > n:
        return ZERO
    row = [ONE]
    for i in range(1, n + 1):
        new = [ONE] * (i + 1)
        for j in range(1, i):
            new[j] = row[j - 1] + Q ** j * row[j]
        row = new
    return row[k]


# -- truncated exponential series --------------------------------------

class TruncatedSeries:
    """Power series in ``t`` up to ``t**order``, stored in exponential scaling.

    ``coeffs[n]`` holds ``n! * [t^n]``, so products and exponentials only
    ever use binomial coefficients and never divide.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [LaurentPoly.coerce(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[LaurentPoly, ...] = tuple(cs)

    @classmethod
    def from_ordinary(cls, coeffs: Iterable, order: int) -> TruncatedSeries:
        """Build from ordinary coefficients ``[t^n]`` (must be integral after n!)."""
        from math import factorial

        return cls([LaurentPoly.coerce(c) * factorial(n) for n, c in enumerate(coeffs)], order)

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def _check(self, other: TruncatedSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._check(other)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._check(other)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n)

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = self._check(other)
        out = []
        for k in range(n + 1):
            out.append(poly_sum(self.coeffs[i] * other.coeffs[k - i] * comb(k, i)
                                for i in range(k + 1)))
        return TruncatedSeries(out, n)

    def rescale(self, factor: Scalar) -> TruncatedSeries:
        """Substitute ``t -> factor * t``."""
        factor = LaurentPoly.coerce(factor)
        return TruncatedSeries([c * factor ** n for n, c in enumerate(self.coeffs)], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with zero constant term.

    Uses ``B' = A' B`` which in exponential scaling reads
    ``b_n = sum_k C(n-1, k-1) a_k b_{n-k}``.
    """
    if not s.coeffs[0].is_zero():
        raise ValueError("series_exp needs a zero constant term")
    a = s.coeffs
    b = [ONE]
    for n in range(1, s.order + 1):
        b.append(poly_sum(a[k] * b[n - k] * comb(n - 1, k - 1) for k in range(1, n + 1)))
    return TruncatedSeries(b, s.order)
