import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hook_length_count, relative_sign, syt_fillings
from skewdomino.polynomials import ONE, Q, SQRT_Q
from skewdomino.shapes import SignedSkewShape, partitions, skew_shapes
from skewdomino.tableaux import (
    SDT,
    SYT,
    ChainTableau,
    concat,
    count_tableaux,
    enumerate_tableaux,
    sdt_stats,
    spin_polynomial,
    superstandard,
    tableau_sign,
)


def _is_domino_filling(f):
    where = {v: c for c, v in f.items()}
    for k in range(1, len(f) // 2 + 1):
        (r1, c1), (r2, c2) = where[2 * k - 1], where[2 * k]
        if abs(r1 - r2) + abs(c1 - c2) != 1:
            return False
    return True


@pytest.mark.parametrize("lam", [p for n in range(9) for p in partitions(n)])
def test_syt_count_matches_hook_length(lam):
    assert count_tableaux(lam, SYT) == hook_length_count(lam)
    assert len(enumerate_tableaux(lam, SYT)) == hook_length_count(lam)


SMALL_SKEW = list(skew_shapes(6, max_size=6))


@pytest.mark.parametrize("outer, inner", SMALL_SKEW)
def test_fillings_and_signs_match_brute_force(outer, inner):
    fills = syt_fillings(outer, inner)
    ts = enumerate_tableaux(SignedSkewShape(outer, inner), SYT)
    assert sorted(sorted(T.entries().items()) for T in ts) == sorted(sorted(f.items()) for f in fills)
    for T in ts:
        assert tableau_sign(T) == relative_sign(T.entries(), inner)
    if (sum(outer) - sum(inner)) % 2 == 0:
        sdts = enumerate_tableaux(SignedSkewShape(outer, inner), SDT)
        assert len(sdts) == sum(1 for f in fills if _is_domino_filling(f))


def test_spin_polynomial_examples():
    assert spin_polynomial((2, 2)) == ONE + Q
    assert spin_polynomial((2,)) == ONE
    assert spin_polynomial((1, 1)) == SQRT_Q
    assert spin_polynomial((2, 1)).is_zero()


def test_sdt_stats_of_vertical_pair():
    D = ChainTableau(SDT, (), ((1, 1), (2, 2)))
    assert sdt_stats(D) == (0, 0, 1, 1, 2)


def test_chain_validation():
    with pytest.raises(ValueError):
        ChainTableau(SYT, (), ((2,),))
    with pytest.raises(ValueError):
        ChainTableau(SDT, (), ((1,),))


def test_from_rows_matches_chain():
    T = ChainTableau.from_rows((1,), [[1, 3], [2]])
    assert T.chain == ((1,), (2,), (2, 1), (3, 1))
    assert T.to_text() == "[1,3][2]"
    with pytest.raises(ValueError):
        ChainTableau.from_rows((), [[2, 1]])


def test_superstandard_and_concat():
    S = superstandard((2, 1))
    assert S.to_text() == "[1,2][3]"
    T = ChainTableau(SYT, (2, 1), ((3, 1),))
    assert concat(S, T).outer == (3, 1)
    assert tableau_sign(S, "book") == 1


def test_unknown_sign_variant():
    with pytest.raises(ValueError):
        tableau_sign(superstandard((1,)), "other")


all_tableaux = st.sampled_from([
    T for outer, inner in skew_shapes(5) for kind in (SYT, SDT)
    for T in enumerate_tableaux(SignedSkewShape(outer, inner), kind)
])


@settings(max_examples=100)
@given(all_tableaux)
def test_json_round_trip(T):
    assert ChainTableau.from_json(T.to_json()) == T
    if T.kind == SYT:
        assert ChainTableau.from_rows(T.base, T.rows()) == T
