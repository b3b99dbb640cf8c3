import pytest

from oracles import imbalance_brute
from skewdomino.imbalance import (
    F_poly,
    decrease_F,
    imbalance_sdt,
    imbalance_syt,
    imbalance_via_spin,
    sign_imbalance,
    weighted_sum_W,
)
from skewdomino.polynomials import ONE, Q, SQRT_Q, X, Y, Z, ZERO
from skewdomino.shapes import SignedSkewShape, partitions, skew_shapes

# Frozen from the brute-force filling oracle (tests/oracles.py).
STRAIGHT_6 = {(6,): 1, (5, 1): 1, (4, 2): 1, (4, 1, 1): 2, (3, 3): 1, (3, 2, 1): 0,
              (3, 1, 1, 1): 2, (2, 2, 2): -1, (2, 2, 1, 1): -1, (2, 1, 1, 1, 1): 1,
              (1, 1, 1, 1, 1, 1): 1}
STRAIGHT_7 = {(7,): 1, (6, 1): 0, (5, 2): 2, (5, 1, 1): 3, (4, 3): 0, (4, 2, 1): -1,
              (4, 1, 1, 1): 0, (3, 3, 1): 1, (3, 2, 2): -1, (3, 2, 1, 1): 1,
              (3, 1, 1, 1, 1): 3, (2, 2, 2, 1): 0, (2, 2, 1, 1, 1): -2,
              (2, 1, 1, 1, 1, 1): 0, (1, 1, 1, 1, 1, 1, 1): 1}


@pytest.mark.parametrize("table", [STRAIGHT_6, STRAIGHT_7])
def test_frozen_straight_values(table):
    assert {lam: sign_imbalance(lam) for lam in table} == table


@pytest.mark.parametrize("outer, inner", list(skew_shapes(7, max_size=6)))
def test_matches_brute_force(outer, inner):
    assert sign_imbalance(SignedSkewShape(outer, inner)) == imbalance_brute(outer, inner)


@pytest.mark.parametrize("outer, inner", list(skew_shapes(8, even=True)))
def test_three_routes_agree_on_even_shapes(outer, inner):
    s = SignedSkewShape(outer, inner)
    assert imbalance_syt(outer, inner) == imbalance_sdt(outer, inner) == imbalance_via_spin(s)


def test_worked_example_values():
    assert sign_imbalance("2,2/0") == 0
    assert sign_imbalance("2,2/2") == 1
    assert sign_imbalance("2,2/1,1") == -1
    assert sign_imbalance("0/2,2") == 0
    assert sign_imbalance("2/2,2") == 1
    assert sign_imbalance("1,1/2,2") == 1


def test_reversed_odd_shape_rejected():
    with pytest.raises(ValueError):
        sign_imbalance("2/2,1")


@pytest.mark.parametrize("n", range(9))
def test_F_of_empty_core(n):
    assert F_poly((), n) == (X + Y) ** (n // 2)


def test_F_worked_example():
    assert F_poly((2, 2), 2) == 2 * X + 2 * Y
    assert F_poly((2, 2), -2) == X ** -2 * Y ** -2 * Z ** -1 * (X + Y)
    assert F_poly((2, 2), -4) == ZERO
    for n in range(6):
        assert F_poly((2, 2), 2 * n) == (n + 1) * (X + Y) ** n


def test_F_rejects_negative_odd_index():
    with pytest.raises(ValueError):
        F_poly((2, 2), -1)


@pytest.mark.parametrize("alpha", [(), (1,), (2, 2), (2, 1)])
@pytest.mark.parametrize("n", range(5))
def test_decrease_matches_direct(alpha, n):
    assert decrease_F(alpha, n) == F_poly(alpha, n + 1)


def test_W_examples():
    assert weighted_sum_W((), 0) == ONE
    assert weighted_sum_W((), 1) == X + Y * SQRT_Q
    assert weighted_sum_W((2, 2), -2) == ONE + Q


def test_plain_sum_over_partitions():
    # F at x = y = z = 1
    for n in range(9):
        total = sum(sign_imbalance(lam) for lam in partitions(n))
        assert total == 2 ** (n // 2)
