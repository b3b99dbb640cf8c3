import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import skew_cell_set, tileable_brute, two_core_abacus
from skewdomino.shapes import (
    Domino,
    SignedSkewShape,
    add_domino,
    addable_dominoes,
    conjugate,
    covers,
    domino_between,
    format_partition,
    is_domino_tileable,
    is_staircase,
    make_partition,
    parse_partition,
    partitions,
    removable_dominoes,
    remove_domino,
    shape_stats,
    skew_cells,
    skew_shapes,
    staircase,
    subsets,
    supersets,
    two_core,
)

# OEIS A000041
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]

small_partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions(n)))


def test_partition_counts():
    assert [len(partitions(n)) for n in range(13)] == PARTITION_COUNTS


@pytest.mark.parametrize("bad", [(1, 2), (2, -1), (0, 1)])
def test_make_partition_rejects(bad):
    with pytest.raises(ValueError):
        make_partition(bad)


def test_make_partition_strips_zeros():
    assert make_partition([3, 1, 0, 0]) == (3, 1)


@given(small_partitions)
def test_parse_format_round_trip(p):
    assert parse_partition(format_partition(p)) == p


@given(small_partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


@settings(max_examples=200)
@given(small_partitions)
def test_two_core_matches_abacus(p):
    core = two_core(p)
    assert core == two_core_abacus(p)
    assert is_staircase(core)
    assert (sum(p) - sum(core)) % 2 == 0


@pytest.mark.parametrize("outer, inner", list(skew_shapes(7)))
def test_tileability_matches_backtracking(outer, inner):
    assert is_domino_tileable(SignedSkewShape(outer, inner)) == tileable_brute(outer, inner)


@given(small_partitions)
def test_domino_add_remove_inverse(p):
    for d in addable_dominoes(p):
        big = add_domino(p, d)
        assert domino_between(p, big) == d
        assert d in removable_dominoes(big)
        assert remove_domino(big, d) == p


def test_domino_orientation():
    d = Domino(2, 3, True)
    assert d.cells == ((2, 3), (3, 3))
    assert Domino(1, 1, False).cells == ((1, 1), (1, 2))


@pytest.mark.parametrize("k, n", [(k, n) for k in range(4) for n in range(5)])
def test_supersets_and_subsets_are_dual(k, n):
    alpha = staircase(k)
    for lam in supersets(alpha, n):
        assert alpha in subsets(lam, n)
        assert len(skew_cells(lam, alpha)) == n


def test_shape_stats_example():
    s = SignedSkewShape((4, 3, 1), (2, 1))
    assert shape_stats(s) == (5, 2, 2, 1)
    cells = skew_cell_set((4, 3, 1), (2, 1))
    assert sum(r % 2 == 0 for r, _ in cells) == 2


def test_reversed_shape_negates_stats():
    fwd = shape_stats(SignedSkewShape((2, 2), (1, 1)))
    rev = shape_stats(SignedSkewShape((1, 1), (2, 2)))
    assert rev == tuple(-v for v in fwd)
    assert SignedSkewShape((1, 1), (2, 2)).is_reversed


def test_unnested_shape_rejected():
    with pytest.raises(ValueError):
        SignedSkewShape((2, 1), (3,))


def test_staircase_and_covers():
    assert staircase(3) == (3, 2, 1)
    assert staircase(2, 0) == (2, 1, 1)
    assert staircase(2, 2) == (3, 1)
    u = {c.nu: c.u for c in covers((7, 5, 5, 2))}
    assert u[(7, 6, 5, 2)] == 7
    assert u[(7, 5, 5, 3)] == 0
    assert u[(8, 5, 5, 2)] == 12
    assert u[(7, 5, 5, 2, 1)] == 0
    assert covers(()) == [((1,), 0)]
    assert dict(covers((1,)))[(1, 1)] == 0
