"""Sign-imbalance of skew and reversed shapes and the sums W and F.

All tableau signs are the relative convention: a straight tableau on the
inner shape is prepended before counting book-order inversions.
"""
from __future__ import annotations

from functools import cache

from .polynomials import ZERO, LaurentPoly, poly_sum
from .shapes import (
    Partition,
    SignedSkewShape,
    as_shape,
    cells_after,
    contains,
    remove_cell,
    remove_domino,
    removable_dominoes,
    removable_rows,
    shape_stats,
    size,
    subsets,
    supersets,
    two_core,
)
from .tableaux import _spin_counts, spin_polynomial


@cache
def imbalance_syt(outer: Partition, inner: Partition) -> int:
    """Sum of relative signs over SYTs of ``outer/inner``.

    Peeling the largest entry off cell ``c`` contributes the inversions
    between ``c`` and every earlier-placed cell after it in book order.
    """
    if outer == inner:
        return 1
    total = 0
    for r in removable_rows(outer):
        smaller = remove_cell(outer, r)
        if contains(smaller, inner):
            after = cells_after(smaller, (r, outer[r - 1]))
            total += (-1) ** after * imbalance_syt(smaller, inner)
    return total


@cache
def imbalance_sdt(outer: Partition, inner: Partition) -> int:
    """``sum over SDTs D of (-1)^{ev(D)}``."""
    if outer == inner:
        return 1
    total = 0
    for d in removable_dominoes(outer):
        smaller = remove_domino(outer, d)
        if contains(smaller, inner):
            sign = -1 if d.vertical and d.col % 2 == 0 else 1
            total += sign * imbalance_sdt(smaller, inner)
    return total


def _i_power(doubled_exp: int) -> tuple[int, int]:
    """``(-1)^(doubled_exp / 2) = i^doubled_exp`` as a Gaussian integer."""
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][doubled_exp % 4]


def f2_at_minus_one(outer: Partition, inner: Partition) -> tuple[int, int]:
    """``f_2(-1)`` with ``q^(1/2) -> i``, as a Gaussian integer."""
    re = im = 0
    for nv, cnt in _spin_counts(outer, inner):
        a, b = _i_power(nv)
        re += a * cnt
        im += b * cnt
    return re, im


def imbalance_via_spin(s) -> int:
    """``(-1)^{-(|s|/2 - h)/2} f_2(-1)``, asserted to be a real integer."""
    s = as_shape(s)
    st = shape_stats(s)
    if st.size % 2:
        raise ValueError("the spin formula needs an even-size shape")
    # exponent -(size/2 - h)/2, doubled: h - size/2
    phase = _i_power(st.h - st.size // 2)
    val = f2_at_minus_one(*s.normalized())
    re = phase[0] * val[0] - phase[1] * val[1]
    im = phase[0] * val[1] + phase[1] * val[0]
    if im != 0:
        raise ArithmeticError(f"imbalance of {s} has imaginary part {im}")
    return re


def sign_imbalance(s) -> int:
    """``I`` of a skew shape (any size) or a reversed shape of even size."""
    s = as_shape(s)
    if s.is_reversed:
        return imbalance_via_spin(s)
    if s.size % 2 == 0:
        return imbalance_sdt(s.outer, s.inner)
    return imbalance_syt(s.outer, s.inner)


def shape_monomial(s) -> LaurentPoly:
    """``x^v y^h z^d`` of a (possibly reversed) shape."""
    st = shape_stats(as_shape(s))
    return LaurentPoly.monomial(x=st.v, y=st.h, z=st.d)


def F_poly(alpha: Partition, n: int) -> LaurentPoly:
    """``sum over shapes of size n above alpha of x^v y^h z^d I``.

    Negative even ``n`` sums over reversed shapes ``lambda/alpha`` with
    ``lambda`` inside ``alpha``.
    """
    alpha = tuple(alpha)
    if n >= 0:
        lams = supersets(alpha, n)
    elif n % 2:
        raise ValueError("F is defined for negative indices only when even")
    else:
        lams = subsets(alpha, -n)
    total = ZERO
    for lam in lams:
        s = SignedSkewShape(lam, alpha)
        val = sign_imbalance(s)
        if val:
            total = total + shape_monomial(s) * val
    if not total.is_real():
        raise ArithmeticError("F has a nonzero imaginary part")
    return total


def weighted_sum_W(alpha: Partition, n: int) -> LaurentPoly:
    """``sum over lambda/alpha of size 2n of x^{n-v} y^{n-h} f_2(q)``.

    Negative ``n`` uses reversed shapes, whose statistics are negated.
    """
    alpha = tuple(alpha)
    lams = supersets(alpha, 2 * n) if n >= 0 else subsets(alpha, -2 * n)
    total = ZERO
    for lam in lams:
        s = SignedSkewShape(lam, alpha)
        if two_core(lam) != two_core(alpha):
            continue
        st = shape_stats(s)
        half = st.size // 2
        f2 = spin_polynomial(s)
        if not f2.is_zero():
            total = total + LaurentPoly.monomial(x=half - st.v, y=half - st.h) * f2
    return total


def colored_involution_weight_sum(n: int) -> LaurentPoly:
    """``sum over CI_n of wt`` by enumeration."""
    from .schensted import colored_perm_stats, enumerate_colored_involutions

    return poly_sum(colored_perm_stats(p).wt for p in enumerate_colored_involutions(n))


def core_excess(alpha: Partition) -> int:
    """``k`` with ``|alpha / core(alpha)| = 2k``."""
    return (size(alpha) - size(two_core(tuple(alpha)))) // 2


def decrease_F(alpha: Partition, n: int) -> LaurentPoly:
    """``F_{n+1}`` rebuilt from the one-cell covers of ``alpha``."""
    from .shapes import covers

    total = ZERO
    for nu, u in covers(tuple(alpha)):
        total = total + shape_monomial(SignedSkewShape(nu, alpha)) * F_poly(nu, n) * (-1) ** u
    return total


__all__ = [
    "F_poly",
    "colored_involution_weight_sum",
    "core_excess",
    "decrease_F",
    "f2_at_minus_one",
    "imbalance_sdt",
    "imbalance_syt",
    "imbalance_via_spin",
    "shape_monomial",
    "sign_imbalance",
    "weighted_sum_W",
]
