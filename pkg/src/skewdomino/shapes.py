"""Partitions, skew and reversed shapes, dominoes and 2-cores.

Partitions are plain tuples of positive ints in weakly decreasing order,
with no trailing zeros. Cells are ``(row, col)`` pairs, 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]
Cell = tuple[int, int]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (zeros stripped)."""
    p = tuple(int(v) for v in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(v <= 0 for v in p):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {parts!r}")
    return p


def is_partition(p: tuple[int, ...]) -> bool:
    return all(v > 0 for v in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,1"``; the empty partition is ``""``, ``"0"`` or ``"-"``."""
    text = text.strip().strip("()")
    if text in ("", "0", "-", "∅"):
        return EMPTY
    return make_partition(int(t) for t in text.split(",") if t.strip())


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "0"


def part(p: Partition, i: int) -> int:
    """The ``i``-th part (1-based); zero beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return tuple(sum(1 for v in p if v > j) for j in range(p[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` sits inside ``outer``."""
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


def union(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return tuple(max(part(a, i), part(b, i)) for i in range(1, n + 1))


def intersection(a: Partition, b: Partition) -> Partition:
    return make_partition(min(u, v) for u, v in zip(a, b))


def cells(p: Partition) -> list[Cell]:
    return [(i + 1, j + 1) for i, row in enumerate(p) for j in range(row)]


def skew_cells(outer: Partition, inner: Partition) -> list[Cell]:
    """Cells of ``outer/inner`` in book order."""
    return [(i + 1, j + 1) for i, row in enumerate(outer) for j in range(part(inner, i + 1), row)]


def cells_after(p: Partition, cell: Cell) -> int:
    """Number of cells of ``p`` strictly after ``cell`` in book order."""
    r, c = cell
    return max(part(p, r) - c, 0) + sum(p[r:])


def add_cell(p: Partition, row: int) -> Partition | None:
    """Add a cell at the end of ``row``; ``None`` if the result is not a partition."""
    if row < 1 or row > len(p) + 1 or (row > 1 and part(p, row - 1) == part(p, row)):
        return None
    lst = list(p) + [0]
    lst[row - 1] += 1
    return make_partition(lst)


def remove_cell(p: Partition, row: int) -> Partition | None:
    if row < 1 or row > len(p) or part(p, row + 1) == p[row - 1]:
        return None
    lst = list(p)
    lst[row - 1] -= 1
    return make_partition(lst)


def addable_rows(p: Partition) -> list[int]:
    return [r for r in range(1, len(p) + 2) if r == 1 or part(p, r - 1) > part(p, r)]


def removable_rows(p: Partition) -> list[int]:
    return [r for r in range(1, len(p) + 1) if p[r - 1] > part(p, r + 1)]


# -- dominoes ----------------------------------------------------------

class Domino(NamedTuple):
    """A domino anchored at its top-left cell.

    Ordering is book order on the anchor with horizontal before vertical.
    """

    row: int
    col: int
    vertical: bool

    @property
    def anchor(self) -> Cell:
        return (self.row, self.col)

    @property
    def orientation(self) -> str:
        return "vertical" if self.vertical else "horizontal"

    @property
    def cells(self) -> tuple[Cell, Cell]:
        if self.vertical:
            return ((self.row, self.col), (self.row + 1, self.col))
        return ((self.row, self.col), (self.row, self.col + 1))


def _with_cells(p: Partition, new: Iterable[Cell]) -> Partition | None:
    lst = list(p)
    for r, c in sorted(new):
        while len(lst) < r:
            lst.append(0)
        if lst[r - 1] != c - 1:
            return None
        lst[r - 1] = c
    while lst and lst[-1] == 0:
        lst.pop()
    t = tuple(lst)
    return t if is_partition(t) else None


def add_domino(p: Partition, d: Domino) -> Partition | None:
    """``p`` plus the domino, or ``None`` if that is not a partition."""
    return _with_cells(p, d.cells)


def addable_dominoes(p: Partition) -> list[Domino]:
    """All dominoes that can be added to ``p``, sorted."""
    out = []
    for r in range(1, len(p) + 2):
        c = part(p, r) + 1
        h = Domino(r, c, False)
        if add_domino(p, h) is not None:
            out.append(h)
        v = Domino(r, c, True)
        if part(p, r + 1) == part(p, r) and add_domino(p, v) is not None:
            out.append(v)
    return sorted(out)


def removable_dominoes(p: Partition) -> list[Domino]:
    out = []
    for r in range(1, len(p) + 1):
        if p[r - 1] >= 2 and p[r - 1] - 2 >= part(p, r + 1):
            out.append(Domino(r, p[r - 1] - 1, False))
        if r < len(p) and p[r - 1] == p[r] and p[r] > part(p, r + 2):
            out.append(Domino(r, p[r - 1], True))
    return sorted(out)


def remove_domino(p: Partition, d: Domino) -> Partition:
    lst = list(p)
    for r, _ in d.cells:
        lst[r - 1] -= 1
    return make_partition(lst)


def domino_between(small: Partition, big: Partition) -> Domino | None:
    """The domino ``big/small`` if it is one, else ``None``."""
    if not contains(big, small) or size(big) - size(small) != 2:
        return None
    cs = skew_cells(big, small)
    (r1, c1), (r2, c2) = cs
    if r1 == r2 and c2 == c1 + 1:
        return Domino(r1, c1, False)
    if c1 == c2 and r2 == r1 + 1:
        return Domino(r1, c1, True)
    return None


def cell_between(small: Partition, big: Partition) -> Cell | None:
    if not contains(big, small) or size(big) - size(small) != 1:
        return None
    return skew_cells(big, small)[0]


# -- 2-cores and staircases --------------------------------------------

@cache
def two_core(p: Partition) -> Partition:
    """Remove border dominoes greedily until none is removable."""
    while True:
        ds = removable_dominoes(p)
        if not ds:
            return p
        p = remove_domino(p, ds[0])


def is_staircase(p: Partition) -> bool:
    return p == tuple(range(len(p), 0, -1))


def staircase(k: int, i: int | None = None) -> Partition:
    """``(k, k-1, ..., 1)``; with ``i``, the cover adding cell ``(k+1-i, i+1)``."""
    if k < 0:
        raise ValueError("staircase size must be nonnegative")
    d = tuple(range(k, 0, -1))
    if i is None:
        return d
    if not 0 <= i <= k:
        raise ValueError(f"index {i} out of range 0..{k}")
    out = add_cell(d, k + 1 - i)
    assert out is not None and out[k - i] == i + 1
    return out


class Cover(NamedTuple):
    nu: Partition
    u: int


def covers(a: Partition) -> list[Cover]:
    """Partitions covering ``a`` by one cell, with the count of cells of ``a``
    after the new cell in book order."""
    out = []
    for r in addable_rows(a):
        nu = add_cell(a, r)
        out.append(Cover(nu, cells_after(a, (r, part(a, r) + 1))))
    return out


# -- enumeration ---------------------------------------------------------

@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(rem: int, cap: int) -> Iterator[Partition]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


@cache
def supersets(alpha: Partition, n: int) -> tuple[Partition, ...]:
    """All ``lambda`` containing ``alpha`` with ``|lambda/alpha| = n``."""
    level = {alpha}
    for _ in range(n):
        level = {add_cell(p, r) for p in level for r in addable_rows(p)}
    return tuple(sorted(level, reverse=True))


@cache
def subsets(alpha: Partition, n: int) -> tuple[Partition, ...]:
    """All ``mu`` contained in ``alpha`` with ``|alpha/mu| = n``."""
    if n > size(alpha):
        return ()
    level = {alpha}
    for _ in range(n):
        level = {remove_cell(p, r) for p in level for r in removable_rows(p)}
    return tuple(sorted(level, reverse=True))


def skew_shapes(max_outer: int, *, even: bool | None = None,
                max_inner: int | None = None, max_size: int | None = None) -> Iterator[tuple[Partition, Partition]]:
    """All ``(outer, inner)`` with ``inner ⊆ outer`` and ``|outer| <= max_outer``.

    ``even`` filters on the parity of the skew size; ``max_inner`` and
    ``max_size`` bound ``|inner|`` and ``|outer/inner|``.
    """
    for total in range(max_outer + 1):
        for outer in partitions(total):
            for k in range(total + 1):
                if max_size is not None and k > max_size:
                    break
                if max_inner is not None and total - k > max_inner:
                    continue
                if even is not None and (k % 2 == 0) != even:
                    continue
                for inner in subsets(outer, k):
                    yield outer, inner


@cache
def _tileable(outer: Partition, inner: Partition) -> bool:
    if inner == outer:
        return True
    for d in addable_dominoes(inner):
        nxt = add_domino(inner, d)
        if contains(outer, nxt) and _tileable(outer, nxt):
            return True
    return False


# -- signed skew shapes ------------------------------------------------

class ShapeStats(NamedTuple):
    size: int
    v: int
    h: int
    d: int


@dataclass(frozen=True)
class SignedSkewShape:
    """``outer/inner`` where either ``inner ⊆ outer`` (skew) or ``outer ⊆ inner``
    (reversed, negative size)."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", make_partition(self.outer))
        object.__setattr__(self, "inner", make_partition(self.inner))
        if not (contains(self.outer, self.inner) or contains(self.inner, self.outer)):
            raise ValueError(f"{self.outer} and {self.inner} are not nested")

    @classmethod
    def parse(cls, text: str) -> SignedSkewShape:
        outer, _, inner = text.partition("/")
        return cls(parse_partition(outer), parse_partition(inner))

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"

    @property
    def is_reversed(self) -> bool:
        return not contains(self.outer, self.inner)

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def normalized(self) -> tuple[Partition, Partition]:
        """``(big, small)`` in skew orientation."""
        if self.is_reversed:
            return self.inner, self.outer
        return self.outer, self.inner

    def cells(self) -> list[Cell]:
        return skew_cells(*self.normalized())


def _skew_stats(outer: Partition, inner: Partition) -> ShapeStats:
    v = h = d = 0
    cs = skew_cells(outer, inner)
    for r, c in cs:
        v += r % 2 == 0
        h += c % 2 == 0
        d += r % 2 == 0 and c % 2 == 0
    return ShapeStats(len(cs), v, h, d)


def shape_stats(s: SignedSkewShape) -> ShapeStats:
    """Size and the v, h, d statistics; all negated for reversed shapes."""
    st = _skew_stats(*s.normalized())
    if s.is_reversed:
        return ShapeStats(*(-v for v in st))
    return st


def is_domino_tileable(s: SignedSkewShape) -> bool:
    return _tileable(*s.normalized())


def as_shape(s) -> SignedSkewShape:
    """Accept a shape, a ``"outer/inner"`` string, a partition, or an (outer, inner) pair."""
    if isinstance(s, SignedSkewShape):
        return s
    if isinstance(s, str):
        return SignedSkewShape.parse(s)
    s = tuple(s)
    if len(s) == 2 and all(isinstance(v, tuple) for v in s):
        return SignedSkewShape(*s)
    return SignedSkewShape(s, EMPTY)
