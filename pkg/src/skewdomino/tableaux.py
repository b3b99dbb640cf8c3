"""Standard Young and standard domino tableaux stored as partition chains."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator, NamedTuple

from .polynomials import LaurentPoly, poly_sum
from .shapes import (
    Cell,
    Domino,
    Partition,
    SignedSkewShape,
    _tileable,
    add_cell,
    add_domino,
    addable_dominoes,
    addable_rows,
    as_shape,
    cell_between,
    contains,
    domino_between,
    make_partition,
    part,
    remove_cell,
    remove_domino,
    removable_dominoes,
    removable_rows,
)

SYT = "SYT"
SDT = "SDT"


@dataclass(frozen=True)
class ChainTableau:
    """A tableau as ``base < steps[0] < steps[1] < ...``.

    Each step adds one cell (SYT) or one domino (SDT); the piece added at
    step ``k`` carries entry ``k + 1``.
    """

    kind: str
    base: Partition
    steps: tuple[Partition, ...] = ()

    def __post_init__(self):
        if self.kind not in (SYT, SDT):
            raise ValueError(f"unknown tableau kind {self.kind!r}")
        object.__setattr__(self, "base", make_partition(self.base))
        object.__setattr__(self, "steps", tuple(make_partition(s) for s in self.steps))
        prev = self.base
        for s in self.steps:
            if self._piece(prev, s) is None:
                raise ValueError(f"{prev} -> {s} is not a single {self._unit} step")
            prev = s

    @property
    def _unit(self) -> str:
        return "cell" if self.kind == SYT else "domino"

    def _piece(self, a: Partition, b: Partition):
        return cell_between(a, b) if self.kind == SYT else domino_between(a, b)

    @classmethod
    def empty(cls, kind: str, base: Partition) -> ChainTableau:
        return cls(kind, base, ())

    # -- views -----------------------------------------------------------
    @property
    def outer(self) -> Partition:
        return self.steps[-1] if self.steps else self.base

    @property
    def shape(self) -> SignedSkewShape:
        return SignedSkewShape(self.outer, self.base)

    @property
    def chain(self) -> tuple[Partition, ...]:
        return (self.base,) + self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def pieces(self) -> list:
        """Added cell (SYT) or :class:`Domino` (SDT) for each entry."""
        return [self._piece(a, b) for a, b in zip(self.chain, self.steps)]

    def dominoes(self) -> list[Domino]:
        if self.kind != SDT:
            raise ValueError("dominoes() needs an SDT")
        return self.pieces()

    def as_syt(self) -> ChainTableau:
        """The SYT view: domino ``k`` becomes cells ``2k-1`` and ``2k``."""
        if self.kind == SYT:
            return self
        chain = []
        prev = self.base
        for d, nxt in zip(self.pieces(), self.steps):
            first = d.cells[0]
            chain.append(add_cell(prev, first[0]))
            chain.append(nxt)
            prev = nxt
        return ChainTableau(SYT, self.base, tuple(chain))

    def entries(self) -> dict[Cell, int]:
        """Cell -> entry in the SYT view."""
        syt = self.as_syt()
        return {c: k + 1 for k, c in enumerate(syt.pieces())}

    def rows(self) -> list[list[int]]:
        ent = self.entries()
        out = []
        for i, row in enumerate(self.outer):
            out.append([ent[(i + 1, j + 1)] for j in range(part(self.base, i + 1), row)])
        return out

    # -- text/json -------------------------------------------------------
    def to_text(self) -> str:
        return "".join("[" + ",".join(map(str, r)) + "]" for r in self.rows())

    def __str__(self) -> str:
        return self.to_text()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "base": list(self.base), "steps": [list(s) for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> ChainTableau:
        return cls(d["kind"], tuple(d["base"]), tuple(tuple(s) for s in d["steps"]))

    @classmethod
    def from_json(cls, text: str) -> ChainTableau:
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_rows(cls, base: Partition, rows: list[list[int]]) -> ChainTableau:
        """Build an SYT from row listings of the skew cells (entries 1..n)."""
        where = {}
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                where[e] = (i + 1, part(base, i + 1) + j + 1)
        chain = []
        prev = make_partition(base)
        for e in range(1, len(where) + 1):
            r, c = where[e]
            nxt = add_cell(prev, r)
            if nxt is None or nxt[r - 1] != c:
                raise ValueError("rows do not describe a standard tableau")
            chain.append(nxt)
            prev = nxt
        return cls(SYT, base, tuple(chain))


# -- enumeration -------------------------------------------------------

def _syt_steps(prev: Partition, outer: Partition) -> list[Partition]:
    out = []
    for r in addable_rows(prev):
        nxt = add_cell(prev, r)
        if contains(outer, nxt):
            out.append(nxt)
    return out


def _sdt_steps(prev: Partition, outer: Partition) -> list[Partition]:
    out = []
    for d in addable_dominoes(prev):
        nxt = add_domino(prev, d)
        if contains(outer, nxt) and _tileable(outer, nxt):
            out.append(nxt)
    return out


def iter_tableaux(s, kind: str = SYT) -> Iterator[ChainTableau]:
    """Lazily enumerate SYTs or SDTs of a shape (reversed shapes normalized)."""
    outer, inner = as_shape(s).normalized()
    total = sum(outer) - sum(inner)
    if kind == SDT and total % 2:
        return
    step = _syt_steps if kind == SYT else _sdt_steps
    if kind == SDT and not _tileable(outer, inner):
        return

    def rec(prev: Partition, chain: tuple[Partition, ...]):
        if prev == outer:
            yield ChainTableau(kind, inner, chain)
            return
        for nxt in step(prev, outer):
            yield from rec(nxt, chain + (nxt,))

    yield from rec(inner, ())


def enumerate_tableaux(s, kind: str = SYT) -> list[ChainTableau]:
    return list(iter_tableaux(s, kind))


@cache
def _count_syt(outer: Partition, inner: Partition) -> int:
    if outer == inner:
        return 1
    total = 0
    for r in removable_rows(outer):
        smaller = remove_cell(outer, r)
        if contains(smaller, inner):
            total += _count_syt(smaller, inner)
    return total


@cache
def _spin_counts(outer: Partition, inner: Partition) -> tuple[tuple[int, int], ...]:
    """``((number_of_vertical_dominoes, count), ...)`` over SDTs of outer/inner."""
    if outer == inner:
        return ((0, 1),)
    acc: Counter = Counter()
    for d in removable_dominoes(outer):
        smaller = remove_domino(outer, d)
        if contains(smaller, inner):
            for nv, cnt in _spin_counts(smaller, inner):
                acc[nv + d.vertical] += cnt
    return tuple(sorted(acc.items()))


def count_tableaux(s, kind: str = SYT) -> int:
    """``f^{λ/μ}`` or ``d^{λ/μ}`` without listing tableaux."""
    outer, inner = as_shape(s).normalized()
    if kind == SYT:
        return _count_syt(outer, inner)
    if (sum(outer) - sum(inner)) % 2:
        return 0
    return sum(c for _, c in _spin_counts(outer, inner))


# -- statistics --------------------------------------------------------

class SDTStats(NamedTuple):
    oh: int
    eh: int
    ov: int
    ev: int
    sp2: int


def sdt_stats(D: ChainTableau) -> SDTStats:
    """Domino counts by orientation and parity; ``sp2`` is twice the spin."""
    if D.kind != SDT:
        raise ValueError("sdt_stats needs a domino tableau")
    oh = eh = ov = ev = 0
    for d in D.pieces():
        if d.vertical:
            if d.col % 2:
                ov += 1
            else:
                ev += 1
        elif d.row % 2:
            oh += 1
        else:
            eh += 1
    return SDTStats(oh, eh, ov, ev, ov + ev)


def spin(D: ChainTableau) -> Fraction:
    return Fraction(sdt_stats(D).sp2, 2)


def _inversions(seq: list[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def book_inversions(T: ChainTableau) -> int:
    """``|{(a, b) : a before b in book order, T(a) > T(b)}|`` over the skew cells."""
    ent = T.entries()
    return _inversions([ent[c] for c in sorted(ent)])


def superstandard(p: Partition) -> ChainTableau:
    """The row-reading SYT of a straight shape (sign +1)."""
    chain = []
    prev: Partition = ()
    for i, row in enumerate(p):
        for _ in range(row):
            prev = add_cell(prev, i + 1)
            chain.append(prev)
    return ChainTableau(SYT, (), tuple(chain))


def concat(T1: ChainTableau, T2: ChainTableau) -> ChainTableau:
    """``T1 ⋄ T2``: T2's entries shifted past T1's."""
    if T1.kind != T2.kind:
        raise ValueError("cannot concatenate tableaux of different kinds")
    if T1.outer != T2.base:
        raise ValueError(f"outer shape {T1.outer} of T1 differs from base {T2.base} of T2")
    return ChainTableau(T1.kind, T1.base, T1.steps + T2.steps)


def tableau_sign(T: ChainTableau, variant: str = "relative") -> int:
    """Sign of a tableau.

    ``book`` is the parity of book-order inversions of the skew entries.
    ``relative`` prepends a straight tableau ``T0`` on the inner shape and
    returns ``sign(T0) * sign(T0 ⋄ T)``, computed with ``T0`` superstandard.
    """
    syt = T.as_syt()
    if variant == "book":
        return -1 if book_inversions(syt) % 2 else 1
    if variant != "relative":
        raise ValueError(f"unknown sign variant {variant!r}")
    full = concat(superstandard(syt.base), syt) if syt.base else syt
    return -1 if book_inversions(full) % 2 else 1


def spin_polynomial(s) -> LaurentPoly:
    """``f_2(q) = sum over SDTs of q^{spin}``."""
    outer, inner = as_shape(s).normalized()
    if (sum(outer) - sum(inner)) % 2:
        return LaurentPoly()
    return poly_sum(LaurentPoly.monomial(cnt, q=Fraction(nv, 2))
                    for nv, cnt in _spin_counts(outer, inner))

