"""Matrices, colored permutations and the growth-diagram correspondences.

``phi`` is the skew domino Schensted correspondence: it fills a diagram
from ``(top, left, M)`` and reads the bottom row and right column.
``rs_phi`` does the same with ordinary RS local rules.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .growth import (
    DOMINO,
    RS,
    GrowthDiagram,
    chain_to_tableau,
    fill_from_boundary,
    fill_from_corner,
    tableau_to_multichain,
)
from .polynomials import LaurentPoly
from .tableaux import SDT, SYT, ChainTableau


# -- matrices ------------------------------------------------------------

@dataclass(frozen=True)
class PPM:
    """Partial permutation matrix with entries in {-1, 0, 1}, stored sparsely.

    Rows and columns are 1-based.
    """

    n: int
    m: int
    entries: tuple[tuple[int, int, int], ...] = ()

    allowed = (-1, 1)

    def __post_init__(self):
        ents = tuple(sorted((int(i), int(j), int(v)) for i, j, v in self.entries if v))
        object.__setattr__(self, "entries", ents)
        rows = [i for i, _, _ in ents]
        cols = [j for _, j, _ in ents]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("at most one nonzero entry per row and column")
        for i, j, v in ents:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise ValueError(f"entry ({i},{j}) outside a {self.n}x{self.m} matrix")
            if v not in self.allowed:
                raise ValueError(f"entry value {v} not allowed in {type(self).__name__}")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], m: int | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if m is None:
            m = len(rows[0]) if rows else 0
        ents = [(i + 1, j + 1, v) for i, r in enumerate(rows) for j, v in enumerate(r) if v]
        return cls(n, m, tuple(ents))

    @classmethod
    def parse(cls, text: str):
        """Parse ``"0 1 0; -1 0 0"``."""
        rows = [r.split() for r in text.strip().split(";")]
        return cls.from_dense([[int(v) for v in r] for r in rows if r])

    def dense(self) -> tuple[tuple[int, ...], ...]:
        mat = [[0] * self.m for _ in range(self.n)]
        for i, j, v in self.entries:
            mat[i - 1][j - 1] = v
        return tuple(tuple(r) for r in mat)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        for i, j, v in self.entries:
            if (i, j) == ij:
                return v
        return 0

    def __str__(self) -> str:
        return "; ".join(" ".join(str(v) for v in row) for row in self.dense())

    @property
    def j(self) -> int:
        return len(self.entries)

    def transpose(self):
        return type(self)(self.m, self.n, tuple((j, i, v) for i, j, v in self.entries))

    def is_symmetric(self) -> bool:
        return self.n == self.m and self == self.transpose()

    def nonzero_rows(self) -> set[int]:
        return {i for i, _, _ in self.entries}

    def nonzero_cols(self) -> set[int]:
        return {j for _, j, _ in self.entries}


class ZeroOneMatrix(PPM):
    """A PPM whose nonzero entries are all 1."""

    allowed = (1,)


# -- colored permutations ----------------------------------------------

@dataclass(frozen=True)
class ColoredPermutation:
    """One-line notation: ``images[k]`` is the (1-based) value at position
    ``k+1``; ``barred[k]`` marks it barred."""

    images: tuple[int, ...]
    barred: tuple[bool, ...] = ()

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        bars = tuple(bool(b) for b in self.barred) or (False,) * len(imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)) or len(bars) != len(imgs):
            raise ValueError(f"{imgs} is not a permutation of [{len(imgs)}]")
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "barred", bars)

    @classmethod
    def parse(cls, text: str) -> ColoredPermutation:
        """Parse ``"3~ 4 1 5~ 2"`` (``~`` marks a bar)."""
        toks = text.split()
        return cls(tuple(int(t.rstrip("~")) for t in toks), tuple(t.endswith("~") for t in toks))

    def __str__(self) -> str:
        return " ".join(f"{v}{'~' if b else ''}" for v, b in zip(self.images, self.barred))

    def __len__(self) -> int:
        return len(self.images)

    def matrix(self) -> PPM:
        n = len(self.images)
        return PPM(n, n, tuple((k + 1, v, -1 if b else 1)
                               for k, (v, b) in enumerate(zip(self.images, self.barred))))

    def is_involution(self) -> bool:
        return self.matrix().is_symmetric()

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self.images[k - 1]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        def lab(k):
            return f"{k}~" if self.barred[self.images.index(k)] else str(k)
        return "".join("(" + " ".join(lab(k) for k in c) + ")" for c in self.cycles())


def cp_of_matrix(M: PPM) -> ColoredPermutation:
    """Colored permutation of the matrix with its zero rows and columns removed."""
    cols = sorted(M.nonzero_cols())
    rank = {c: k + 1 for k, c in enumerate(cols)}
    ents = sorted(M.entries)
    return ColoredPermutation(tuple(rank[j] for _, j, _ in ents), tuple(v == -1 for _, _, v in ents))


def total_color(p: ColoredPermutation) -> int:
    return sum(p.barred)


class CPStats(NamedTuple):
    tc: int
    sigma1: int
    sigma2: int
    bar_sigma1: int
    bar_sigma2: int
    wt: LaurentPoly


def colored_perm_stats(p: ColoredPermutation) -> CPStats:
    """Cycle statistics and weight ``x^σ1 y^σ̄1 q^(tc/2)`` of a colored involution."""
    if not p.is_involution():
        raise ValueError(f"{p} is not a colored involution")
    s1 = s2 = b1 = b2 = 0
    for cyc in p.cycles():
        barred = p.barred[cyc[0] - 1]
        if len(cyc) == 1:
            if barred:
                b1 += 1
            else:
                s1 += 1
        elif barred:
            b2 += 1
        else:
            s2 += 1
    tc = total_color(p)
    wt = LaurentPoly.monomial(x=s1, y=b1, q=Fraction(tc, 2))
    return CPStats(tc, s1, s2, b1, b2, wt)


def sign_of_permutation(perm: Sequence[int]) -> int:
    return -1 if permutation_inversions(perm) % 2 else 1


def permutation_inversions(perm: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])


def perm_of_matrix(M: PPM) -> tuple[int, ...]:
    return cp_of_matrix(M).images


# -- enumeration ---------------------------------------------------------

def enumerate_matrices(n: int, m: int, j: int, kind: str = "ppm") -> Iterator[PPM]:
    """All n×m matrices of the given kind with ``j`` nonzero entries.

    ``kind`` is ``"ppm"``, ``"zero_one"`` or ``"symmetric_ppm"`` (n×n).
    """
    if kind == "symmetric_ppm":
        if m != n:
            raise ValueError("symmetric matrices must be square")
        yield from _symmetric_ppms(n, j)
        return
    if kind not in ("ppm", "zero_one"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    cls = PPM if kind == "ppm" else ZeroOneMatrix
    values = (1, -1) if kind == "ppm" else (1,)
    if j < 0 or j > min(n, m):
        return
    for rows in combinations(range(1, n + 1), j):
        for cols in permutations(range(1, m + 1), j):
            for vals in product(values, repeat=j):
                yield cls(n, m, tuple(zip(rows, cols, vals)))


def _symmetric_ppms(n: int, j: int) -> Iterator[PPM]:
    def rec(free: tuple[int, ...], left: int, acc: tuple):
        if left == 0:
            yield PPM(n, n, acc)
            return
        if len(free) < left:
            return
        first, rest = free[0], free[1:]
        yield from rec(rest, left, acc)
        for v in (1, -1):
            yield from rec(rest, left - 1, acc + ((first, first, v),))
        if left >= 2:
            for k, other in enumerate(rest):
                remaining = rest[:k] + rest[k + 1:]
                for v in (1, -1):
                    yield from rec(remaining, left - 2,
                                   acc + ((first, other, v), (other, first, v)))

    yield from rec(tuple(range(1, n + 1)), j, ())


def enumerate_colored_involutions(n: int) -> Iterator[ColoredPermutation]:
    for M in _symmetric_ppms(n, n):
        yield cp_of_matrix(M)


def enumerate_involutions(n: int) -> Iterator[tuple[int, ...]]:
    for p in enumerate_colored_involutions(n):
        if not any(p.barred):
            yield p.images


def count_involutions(m: int, colored: bool = False) -> int:
    """``t_m`` (ordinary) or ``ξ_m`` (colored) by direct enumeration."""
    if colored:
        return sum(1 for _ in enumerate_colored_involutions(m))
    return sum(1 for _ in enumerate_involutions(m))


def count_ppms(n: int, m: int, j: int) -> int:
    """``C(n,j) C(m,j) 2^j j!`` in closed form."""
    from math import comb
    return comb(n, j) * comb(m, j) * 2 ** j * factorial(j)


# -- matrix extension and sign ------------------------------------------

def matrix_extension(M: PPM) -> ZeroOneMatrix:
    """The square 0/1 matrix ``[[0, B], [C, M]]`` with identity-ordered B and C."""
    n, m, j = M.n, M.m, M.j
    top = m - j  # rows of B
    lc = n - j  # columns of C
    k = n + m - j
    ents = []
    zero_cols = [c for c in range(1, m + 1) if c not in M.nonzero_cols()]
    for r, c in enumerate(zero_cols, start=1):
        ents.append((r, lc + c, 1))
    zero_rows = [r for r in range(1, n + 1) if r not in M.nonzero_rows()]
    for c, r in enumerate(zero_rows, start=1):
        ents.append((top + r, c, 1))
    for i, jj, v in M.entries:
        if v != 1:
            raise ValueError("matrix_extension needs a 0/1 matrix")
        ents.append((top + i, lc + jj, 1))
    return ZeroOneMatrix(k, k, tuple(ents))


def matrix_inv(M: PPM) -> int:
    return permutation_inversions(perm_of_matrix(matrix_extension(M)))


def matrix_sign(M: PPM) -> int:
    return -1 if matrix_inv(M) % 2 else 1


# -- correspondences -----------------------------------------------------

def _boundaries(U: ChainTableau, V: ChainTableau, M: PPM, ruleset: str):
    kind = SDT if ruleset == DOMINO else SYT
    if U.kind != kind or V.kind != kind:
        raise ValueError(f"{ruleset} correspondence needs {kind}s")
    if U.base != V.base:
        raise ValueError(f"U and V must share their inner shape: {U.base} vs {V.base}")
    top_pattern = [j not in M.nonzero_cols() for j in range(1, M.m + 1)]
    left_pattern = [i not in M.nonzero_rows() for i in range(1, M.n + 1)]
    if sum(top_pattern) != len(U):
        raise ValueError(f"U has {len(U)} steps but M leaves {sum(top_pattern)} columns empty "
                         "(column j must be nonzero iff the top chain repeats)")
    if sum(left_pattern) != len(V):
        raise ValueError(f"V has {len(V)} steps but M leaves {sum(left_pattern)} rows empty "
                         "(row i must be nonzero iff the left chain repeats)")
    return tableau_to_multichain(U, top_pattern), tableau_to_multichain(V, left_pattern)


def phi_diagram(U: ChainTableau, V: ChainTableau, M: PPM, ruleset: str = DOMINO) -> GrowthDiagram:
    top, left = _boundaries(U, V, M, ruleset)
    return fill_from_boundary(top, left, M, ruleset)


def phi(U: ChainTableau, V: ChainTableau, M: PPM) -> tuple[ChainTableau, ChainTableau]:
    """``(P, Q)``: P on λ/α from the bottom row, Q on λ/β from the right column.

    U lives on β/μ (top row), V on α/μ (left column).
    """
    G = phi_diagram(U, V, M, DOMINO)
    return chain_to_tableau(G.bottom, SDT), chain_to_tableau(G.right, SDT)


def _inverse(P: ChainTableau, Q: ChainTableau, ruleset: str, matrix_cls):
    kind = SDT if ruleset == DOMINO else SYT
    if P.kind != kind or Q.kind != kind:
        raise ValueError(f"{ruleset} inverse needs {kind}s")
    if P.outer != Q.outer:
        raise ValueError(f"P and Q must share their outer shape: {P.outer} vs {Q.outer}")
    G = fill_from_corner(P.chain, Q.chain, ruleset)
    M = matrix_cls.from_dense(G.matrix, G.m)
    return chain_to_tableau(G.top, kind), chain_to_tableau(G.left, kind), M


def phi_inverse(P: ChainTableau, Q: ChainTableau) -> tuple[ChainTableau, ChainTableau, PPM]:
    return _inverse(P, Q, DOMINO, PPM)


def phi_sym(U: ChainTableau, M: PPM) -> ChainTableau:
    if not M.is_symmetric():
        raise ValueError("phi_sym needs a symmetric matrix")
    P, Q = phi(U, U, M)
    assert P == Q
    return P


def phi_sym_inverse(D: ChainTableau) -> tuple[ChainTableau, PPM]:
    U, V, M = phi_inverse(D, D)
    assert U == V and M.is_symmetric()
    return U, M


def rs_phi(U: ChainTableau, V: ChainTableau, M: PPM) -> tuple[ChainTableau, ChainTableau]:
    """Skew RS correspondence via growth diagrams with ordinary local rules."""
    if any(v != 1 for _, _, v in M.entries):
        raise ValueError("rs_phi needs a 0/1 matrix")
    G = phi_diagram(U, V, M, RS)
    return chain_to_tableau(G.bottom, SYT), chain_to_tableau(G.right, SYT)


def rs_phi_inverse(P: ChainTableau, Q: ChainTableau) -> tuple[ChainTableau, ChainTableau, ZeroOneMatrix]:
    return _inverse(P, Q, RS, ZeroOneMatrix)
