from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import row_insert
from skewdomino.growth import (
    DOMINO,
    RS,
    GrowthDiagram,
    LocalRuleError,
    chain_to_tableau,
    classify,
    fill_from_boundary,
    fill_from_corner,
    forward_local,
    inverse_local,
    is_strict_chain,
    tableau_to_multichain,
)
from skewdomino.shapes import (
    add_cell,
    add_domino,
    addable_dominoes,
    addable_rows,
    partitions,
    removable_dominoes,
    removable_rows,
    remove_cell,
    remove_domino,
)
from skewdomino.tableaux import SDT, SYT


def up(p, ruleset):
    if ruleset == DOMINO:
        return [add_domino(p, d) for d in addable_dominoes(p)]
    return [add_cell(p, r) for r in addable_rows(p)]


def down(p, ruleset):
    if ruleset == DOMINO:
        return [remove_domino(p, d) for d in removable_dominoes(p)]
    return [remove_cell(p, r) for r in removable_rows(p)]


def legal_squares(max_size, ruleset):
    entries = (-1, 1) if ruleset == DOMINO else (1,)
    for n in range(max_size + 1):
        for nu in partitions(n):
            for e in entries:
                yield nu, nu, nu, e
            nbrs = [nu] + up(nu, ruleset)
            for mu in nbrs:
                for rho in nbrs:
                    yield nu, mu, rho, 0


def test_forward_examples():
    assert forward_local((1,), (1,), (1,), 1) == (3,)
    assert forward_local((), (2,), (1, 1), 0) == (2, 2)
    assert forward_local((), (2,), (2,), 0) == (2, 2)
    assert forward_local((), (1, 1), (1, 1), 0) == (2, 2)
    assert forward_local((), (), (), -1) == (1, 1)


def test_inverse_examples():
    assert inverse_local((1,), (1,), (3,)) == ((1,), 1)
    assert inverse_local((2,), (1, 1), (2, 2)) == ((), 0)


def test_illegal_configuration_rejected():
    with pytest.raises(LocalRuleError):
        forward_local((), (2,), (2,), 1)


@pytest.mark.parametrize("ruleset, max_size", [(DOMINO, 8), (RS, 6)])
def test_forward_inverse_round_trip_exhaustive(ruleset, max_size):
    seen = 0
    for nu, mu, rho, e in legal_squares(max_size, ruleset):
        classify(nu, mu, rho, e, ruleset)
        lam = forward_local(nu, mu, rho, e, ruleset)
        assert lam in up(mu, ruleset) + [mu] and lam in up(rho, ruleset) + [rho]
        assert inverse_local(mu, rho, lam, ruleset, check=True) == (nu, e)
        seen += 1
    assert seen > 100


def test_fill_from_boundary_examples():
    G = fill_from_boundary([(), ()], [(), ()], [[1]])
    assert G.grid[1][1] == (2,)
    G = fill_from_boundary([(2, 1), (2, 1)], [(2, 1), (2, 1)], [[-1]])
    assert G.grid[1][1] == (2, 1, 1, 1)
    G = fill_from_boundary([(), (), (2,)], [(), ()], [[0, 0]], require_full=False)
    assert G.bottom == ((), (), (2,)) and G.right == ((2,), (2,))


def test_fill_from_boundary_errors():
    with pytest.raises(ValueError, match="corner"):
        fill_from_boundary([(), ()], [(1, 1), (1, 1)], [[1]])
    with pytest.raises(ValueError, match="row 1"):
        fill_from_boundary([(), (2,)], [(), ()], [[0]])


def _chains_down(lam, steps, ruleset):
    if steps == 0:
        yield (lam,)
        return
    for p in down(lam, ruleset):
        for c in _chains_down(p, steps - 1, ruleset):
            yield c + (lam,)


@pytest.mark.parametrize("ruleset, max_size", [(DOMINO, 8), (RS, 4)])
def test_full_2x2_round_trip(ruleset, max_size):
    count = 0
    for n in range(max_size + 1):
        for lam in partitions(n):
            for bottom in _chains_down(lam, 2, ruleset):
                for right in _chains_down(lam, 2, ruleset):
                    G = fill_from_corner(bottom, right, ruleset)
                    G.validate()
                    H = fill_from_boundary(G.top, G.left, G.matrix, ruleset)
                    assert H == G and H.is_full
                    count += 1
    assert count > 0


@pytest.mark.parametrize("n", range(6))
def test_rs_rules_match_row_insertion(n):
    for perm in permutations(range(1, n + 1)):
        mat = [[1 if perm[i] == j + 1 else 0 for j in range(n)] for i in range(n)]
        top = [()] * (n + 1)
        G = fill_from_boundary(top, top, mat, RS)
        P = chain_to_tableau(G.bottom, SYT).rows()
        Q = chain_to_tableau(G.right, SYT).rows()
        ins_P, ins_Q = row_insert(perm)
        # bottom row records the inserted values, right column the positions
        assert (P, Q) == row_insert(perm)


def test_transpose_swaps_bottom_and_right():
    G = fill_from_boundary([(), (), ()], [(), (), ()], [[0, 1], [-1, 0]])
    T = fill_from_boundary(G.left, G.top, [[0, -1], [1, 0]])
    assert T == G.transpose()
    assert T.bottom == G.right


def test_diagram_json_round_trip():
    G = fill_from_boundary([(), (), ()], [(), (), ()], [[0, 1], [-1, 0]])
    assert GrowthDiagram.from_dict(G.to_dict()) == G
    assert G.to_dict()["orientation"] == "rows top-down, columns left-right"


def test_chain_to_tableau_drops_repeats():
    T = chain_to_tableau([(), (), (2,)], SDT)
    assert T.steps == ((2,),) and T.to_text() == "[1,2]"


@given(st.lists(st.booleans(), max_size=6))
def test_multichain_pattern_round_trip(pattern):
    k = sum(pattern)
    chain = tuple((2 * i,) for i in range(1, k + 1))
    T = chain_to_tableau(((),) + chain, SDT)
    multi = tableau_to_multichain(T, pattern)
    assert len(multi) == len(pattern) + 1
    assert chain_to_tableau(multi, SDT) == T


def test_multichain_pattern_mismatch():
    T = chain_to_tableau([(), (2,)], SDT)
    with pytest.raises(ValueError):
        tableau_to_multichain(T, [False, False])


def test_strict_chain():
    assert is_strict_chain([(), (2,), (2, 2)])
    assert not is_strict_chain([(), (), (2,)])
