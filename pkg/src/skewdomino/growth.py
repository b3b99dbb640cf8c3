"""Growth diagrams with domino local rules and ordinary RS local rules.

Grid orientation: ``grid[i][j]`` is the partition at row ``i`` (top-down,
``0..n``) and column ``j`` (left-right, ``0..m``). The matrix entry at
``(i, j)`` (1-based) sits in the unit square whose lower-right corner is
``grid[i][j]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .shapes import (
    Partition,
    add_cell,
    add_domino,
    cell_between,
    domino_between,
    Domino,
    intersection,
    make_partition,
    part,
    remove_cell,
    size,
    skew_cells,
    union,
)
from .tableaux import SDT, SYT, ChainTableau

DOMINO = "domino"
RS = "rs"
RULESETS = (DOMINO, RS)


class LocalRuleError(ValueError):
    """A unit square matches none of the local-rule configurations."""


def _step(ruleset: str) -> int:
    return 2 if ruleset == DOMINO else 1


def covers_by_step(small: Partition, big: Partition, ruleset: str) -> bool:
    """``small <_d big`` (domino) or ``big`` covers ``small`` by a cell (RS)."""
    if ruleset == DOMINO:
        return domino_between(small, big) is not None
    return cell_between(small, big) is not None


def le_step(small: Partition, big: Partition, ruleset: str) -> bool:
    return small == big or covers_by_step(small, big, ruleset)


def classify(nu: Partition, mu: Partition, rho: Partition, entry: int, ruleset: str = DOMINO) -> str:
    """Name of the local-rule case matching a square, or raise LocalRuleError.

    Domino cases are ``"1"``, ``"2"``, ``"3a"`` .. ``"3e"``; RS cases are
    ``"1"``, ``"0a"`` (copy), ``"0b"`` (union), ``"0c"`` (bump).
    """
    if ruleset not in RULESETS:
        raise ValueError(f"unknown ruleset {ruleset!r}")
    if not (le_step(nu, mu, ruleset) and le_step(nu, rho, ruleset)):
        raise LocalRuleError(f"adjacency fails: nu={nu}, mu={mu}, rho={rho}")
    if entry not in (-1, 0, 1) or (ruleset == RS and entry == -1):
        raise LocalRuleError(f"entry {entry} not allowed for {ruleset} rules")
    if entry != 0:
        if not nu == mu == rho:
            raise LocalRuleError(f"nonzero entry needs nu = mu = rho, got {nu}, {mu}, {rho}")
        return "1" if entry == 1 else "2"
    if ruleset == RS:
        if nu == mu or nu == rho:
            return "0a"
        return "0b" if mu != rho else "0c"
    if nu == mu or nu == rho:
        return "3a"
    if mu != rho:
        shared = set(skew_cells(mu, nu)) & set(skew_cells(rho, nu))
        return "3c" if shared else "3b"
    return "3e" if domino_between(nu, mu).vertical else "3d"


def forward_local(nu: Partition, mu: Partition, rho: Partition, entry: int = 0,
                  ruleset: str = DOMINO) -> Partition:
    """The partition ``lambda`` completing the square ``nu, mu, rho, entry``."""
    case = classify(nu, mu, rho, entry, ruleset)
    if ruleset == RS:
        if case == "1":
            return add_cell(mu, 1)
        if case == "0a":
            return rho if nu == mu else mu
        if case == "0b":
            return union(mu, rho)
        (r, _), = skew_cells(mu, nu)
        out = add_cell(mu, r + 1)
        if out is None:
            raise LocalRuleError(f"cannot add a cell to row {r + 1} of {mu}")
        return out

    if case == "1":
        return add_domino(mu, Domino(1, part(mu, 1) + 1, False))
    if case == "2":
        return add_domino(mu, Domino(len(mu) + 1, 1, True))
    if case == "3a":
        return rho if nu == mu else mu
    if case == "3b":
        return union(mu, rho)
    if case == "3c":
        (p, q), = set(skew_cells(mu, nu)) & set(skew_cells(rho, nu))
        out = add_cell(union(mu, rho), p + 1)
        if out is None or out[p] != q + 1:
            raise LocalRuleError(f"cannot add cell {(p + 1, q + 1)} to {union(mu, rho)}")
        return out
    d = domino_between(nu, mu)
    if case == "3d":
        new = Domino(d.row + 1, part(mu, d.row + 1) + 1, False)
    else:
        col = d.col + 1
        row = sum(1 for v in mu if v >= col) + 1
        new = Domino(row, col, True)
    out = add_domino(mu, new)
    if out is None:
        raise LocalRuleError(f"cannot add {new} to {mu}")
    return out


class LocalPreimage(NamedTuple):
    nu: Partition
    entry: int


def _inverse_cases(mu: Partition, rho: Partition, lam: Partition, ruleset: str) -> LocalPreimage:
    if not (le_step(mu, lam, ruleset) and le_step(rho, lam, ruleset)):
        raise LocalRuleError(f"adjacency fails: mu={mu}, rho={rho}, lambda={lam}")
    if lam == mu:
        return LocalPreimage(rho, 0)
    if lam == rho:
        return LocalPreimage(mu, 0)
    if ruleset == RS:
        if mu != rho:
            return LocalPreimage(intersection(mu, rho), 0)
        (r, _), = skew_cells(lam, mu)
        if r == 1:
            return LocalPreimage(mu, 1)
        nu = remove_cell(mu, r - 1)
        if nu is None:
            raise LocalRuleError(f"no preimage for {mu}, {rho}, {lam}")
        return LocalPreimage(nu, 0)

    if mu != rho:
        meet = intersection(mu, rho)
        if size(meet) == size(mu) - 2:
            return LocalPreimage(meet, 0)
        # 3c: lam/nu is a 2x2 block whose top-left cell lies in meet
        block = skew_cells(lam, meet)
        p = min(r for r, _ in block)
        q = min(c for _, c in block)
        if meet[p - 1] != q:
            raise LocalRuleError(f"no preimage for {mu}, {rho}, {lam}")
        nu = remove_cell(meet, p)
        if nu is None:
            raise LocalRuleError(f"no preimage for {mu}, {rho}, {lam}")
        return LocalPreimage(nu, 0)
    d = domino_between(mu, lam)
    if not d.vertical:
        if d.row == 1:
            return LocalPreimage(mu, 1)
        lst = list(mu)
        lst[d.row - 2] -= 2
    else:
        if d.col == 1:
            return LocalPreimage(mu, -1)
        lst = list(mu)
        rows = [r for r in range(1, len(mu) + 1) if mu[r - 1] == d.col - 1]
        if len(rows) < 2:
            raise LocalRuleError(f"no preimage for {mu}, {rho}, {lam}")
        lst[rows[-1] - 1] -= 1
        lst[rows[-2] - 1] -= 1
    try:
        nu = make_partition(lst)
    except ValueError:
        raise LocalRuleError(f"no preimage for {mu}, {rho}, {lam}") from None
    return LocalPreimage(nu, 0)


def _candidate_nus(mu: Partition, rho: Partition, ruleset: str) -> set[Partition]:
    from .shapes import removable_dominoes, remove_domino, removable_rows

    def below(p: Partition) -> set[Partition]:
        if ruleset == DOMINO:
            return {p} | {remove_domino(p, d) for d in removable_dominoes(p)}
        return {p} | {remove_cell(p, r) for r in removable_rows(p)}

    return below(mu) & below(rho)


def inverse_local(mu: Partition, rho: Partition, lam: Partition, ruleset: str = DOMINO,
                  check: bool = False) -> LocalPreimage:
    """The unique ``(nu, entry)`` with ``forward_local(nu, mu, rho, entry) == lam``.

    With ``check=True`` every candidate ``nu`` is tried forward and the
    preimage is confirmed unique.
    """
    pre = _inverse_cases(mu, rho, lam, ruleset)
    try:
        ok = forward_local(pre.nu, mu, rho, pre.entry, ruleset) == lam
    except LocalRuleError:
        ok = False
    if not ok:
        raise LocalRuleError(f"no preimage for mu={mu}, rho={rho}, lambda={lam}")
    if check:
        found = []
        for nu in _candidate_nus(mu, rho, ruleset):
            for e in ((-1, 0, 1) if ruleset == DOMINO else (0, 1)):
                try:
                    if forward_local(nu, mu, rho, e, ruleset) == lam:
                        found.append(LocalPreimage(nu, e))
                except LocalRuleError:
                    pass
        if found != [pre]:
            raise AssertionError(f"inverse not unique for {mu}, {rho}, {lam}: {found}")
    return pre


# -- diagrams ----------------------------------------------------------

def _dense(matrix, n: int | None = None, m: int | None = None) -> tuple[tuple[int, ...], ...]:
    if hasattr(matrix, "dense"):
        return matrix.dense()
    rows = tuple(tuple(int(v) for v in row) for row in matrix)
    if n is not None and len(rows) != n:
        raise ValueError(f"matrix has {len(rows)} rows, expected {n}")
    if m is not None and any(len(r) != m for r in rows):
        raise ValueError(f"matrix rows must have {m} entries")
    return rows


@dataclass(frozen=True)
class GrowthDiagram:
    ruleset: str
    grid: tuple[tuple[Partition, ...], ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.grid) - 1

    @property
    def m(self) -> int:
        return len(self.grid[0]) - 1

    @property
    def top(self) -> tuple[Partition, ...]:
        return self.grid[0]

    @property
    def bottom(self) -> tuple[Partition, ...]:
        return self.grid[-1]

    @property
    def left(self) -> tuple[Partition, ...]:
        return tuple(row[0] for row in self.grid)

    @property
    def right(self) -> tuple[Partition, ...]:
        return tuple(row[-1] for row in self.grid)

    @property
    def is_full(self) -> bool:
        return is_strict_chain(self.bottom, self.ruleset) and is_strict_chain(self.right, self.ruleset)

    def validate(self) -> None:
        """Raise unless every unit square obeys the forward local rule."""
        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                g = self.grid
                lam = forward_local(g[i - 1][j - 1], g[i - 1][j], g[i][j - 1],
                                    self.matrix[i - 1][j - 1], self.ruleset)
                if lam != g[i][j]:
                    raise LocalRuleError(f"square ({i},{j}) violates the local rule")

    def transpose(self) -> GrowthDiagram:
        grid = tuple(tuple(self.grid[i][j] for i in range(self.n + 1)) for j in range(self.m + 1))
        mat = tuple(tuple(self.matrix[i][j] for i in range(self.n)) for j in range(self.m))
        return GrowthDiagram(self.ruleset, grid, mat)

    def to_dict(self) -> dict:
        return {
            "ruleset": self.ruleset,
            "orientation": "rows top-down, columns left-right",
            "n": self.n,
            "m": self.m,
            "grid": [[list(p) for p in row] for row in self.grid],
            "entries": [[i + 1, j + 1, v] for i, row in enumerate(self.matrix)
                        for j, v in enumerate(row) if v],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> GrowthDiagram:
        mat = [[0] * d["m"] for _ in range(d["n"])]
        for i, j, v in d["entries"]:
            mat[i - 1][j - 1] = v
        grid = tuple(tuple(make_partition(p) for p in row) for row in d["grid"])
        return cls(d["ruleset"], grid, tuple(tuple(r) for r in mat))


def is_strict_chain(chain: Sequence[Partition], ruleset: str = DOMINO) -> bool:
    return all(covers_by_step(a, b, ruleset) for a, b in zip(chain, chain[1:]))


def is_multichain(chain: Sequence[Partition], ruleset: str = DOMINO) -> bool:
    return all(le_step(a, b, ruleset) for a, b in zip(chain, chain[1:]))


def check_full_conditions(top: Sequence[Partition], left: Sequence[Partition], matrix) -> None:
    """Raise if a nonzero row/column of the matrix disagrees with an equal step."""
    for i, row in enumerate(matrix, start=1):
        if any(row) != (left[i - 1] == left[i]):
            raise ValueError(f"row {i}: nonzero entry iff left chain repeats "
                             f"({left[i - 1]} vs {left[i]})")
    for j in range(1, len(top)):
        col = any(row[j - 1] for row in matrix)
        if col != (top[j - 1] == top[j]):
            raise ValueError(f"column {j}: nonzero entry iff top chain repeats "
                             f"({top[j - 1]} vs {top[j]})")


def fill_from_boundary(top: Sequence[Partition], left: Sequence[Partition], matrix,
                       ruleset: str = DOMINO, require_full: bool = True) -> GrowthDiagram:
    """Complete a diagram from its top row, left column and matrix."""
    top = tuple(make_partition(p) for p in top)
    left = tuple(make_partition(p) for p in left)
    n, m = len(left) - 1, len(top) - 1
    mat = _dense(matrix, n, m)
    if top[0] != left[0]:
        raise ValueError(f"corner mismatch: top starts at {top[0]}, left at {left[0]}")
    for name, chain in (("top", top), ("left", left)):
        if not is_multichain(chain, ruleset):
            raise ValueError(f"{name} boundary is not a {ruleset} multichain")
    if require_full:
        check_full_conditions(top, left, mat)
    grid = [list(top)] + [[left[i]] + [None] * m for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            grid[i][j] = forward_local(grid[i - 1][j - 1], grid[i - 1][j], grid[i][j - 1],
                                       mat[i - 1][j - 1], ruleset)
    return GrowthDiagram(ruleset, tuple(tuple(r) for r in grid), mat)


def fill_from_corner(bottom: Sequence[Partition], right: Sequence[Partition],
                     ruleset: str = DOMINO) -> GrowthDiagram:
    """Rebuild the diagram with the given strict bottom row and right column."""
    bottom = tuple(make_partition(p) for p in bottom)
    right = tuple(make_partition(p) for p in right)
    if bottom[-1] != right[-1]:
        raise ValueError(f"corner mismatch: bottom ends at {bottom[-1]}, right at {right[-1]}")
    for name, chain in (("bottom", bottom), ("right", right)):
        if not is_strict_chain(chain, ruleset):
            raise ValueError(f"{name} boundary is not a strict {ruleset} chain")
    n, m = len(right) - 1, len(bottom) - 1
    grid = [[None] * (m + 1) for _ in range(n + 1)]
    grid[n] = list(bottom)
    for i in range(n + 1):
        grid[i][m] = right[i]
    mat = [[0] * m for _ in range(n)]
    for i in range(n, 0, -1):
        for j in range(m, 0, -1):
            pre = inverse_local(grid[i - 1][j], grid[i][j - 1], grid[i][j], ruleset)
            grid[i - 1][j - 1] = pre.nu
            mat[i - 1][j - 1] = pre.entry
    return GrowthDiagram(ruleset, tuple(tuple(r) for r in grid), tuple(tuple(r) for r in mat))


# -- chains and tableaux -------------------------------------------------

def chain_to_tableau(chain: Sequence[Partition], kind: str = SDT) -> ChainTableau:
    """Drop repeated steps of a multichain and read off the tableau."""
    chain = [make_partition(p) for p in chain]
    steps = tuple(b for a, b in zip(chain, chain[1:]) if a != b)
    return ChainTableau(kind, chain[0], steps)


def tableau_to_multichain(T: ChainTableau, pattern: Sequence[bool]) -> tuple[Partition, ...]:
    """Re-insert equal steps: ``pattern[k]`` is True where step ``k`` is strict."""
    if sum(bool(p) for p in pattern) != len(T.steps):
        raise ValueError(f"pattern has {sum(map(bool, pattern))} strict positions "
                         f"but the tableau has {len(T.steps)} steps")
    out = [T.base]
    it = iter(T.steps)
    for strict in pattern:
        out.append(next(it) if strict else out[-1])
    return tuple(out)


def kind_of(ruleset: str) -> str:
    return SDT if ruleset == DOMINO else SYT
