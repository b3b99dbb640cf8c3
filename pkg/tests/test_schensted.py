from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import colored_involution_weights, row_insert
from skewdomino.polynomials import LaurentPoly, poly_sum
from skewdomino.schensted import (
    PPM,
    ColoredPermutation,
    ZeroOneMatrix,
    colored_perm_stats,
    count_involutions,
    count_ppms,
    cp_of_matrix,
    enumerate_colored_involutions,
    enumerate_matrices,
    matrix_extension,
    matrix_inv,
    matrix_sign,
    perm_of_matrix,
    phi,
    phi_inverse,
    phi_sym,
    phi_sym_inverse,
    rs_phi,
    rs_phi_inverse,
    sign_of_permutation,
)
from skewdomino.shapes import partitions, two_core
from skewdomino.tableaux import SDT, SYT, ChainTableau, enumerate_tableaux, sdt_stats

EMPTY_SDT = ChainTableau.empty(SDT, ())


def test_matrix_parse_and_text():
    M = PPM.parse("0 1; -1 0")
    assert M.entries == ((1, 2, 1), (2, 1, -1))
    assert str(M) == "0 1; -1 0"
    assert PPM.parse(str(M)) == M


@pytest.mark.parametrize("text", ["1 1; 0 0", "1 0; 1 0", "2"])
def test_matrix_rejects_bad_entries(text):
    with pytest.raises(ValueError):
        PPM.parse(text)


def test_zero_one_matrix_rejects_minus_one():
    with pytest.raises(ValueError):
        ZeroOneMatrix.parse("-1")


def test_colored_permutation_of_matrix():
    p = cp_of_matrix(PPM.parse("0 1; -1 0"))
    assert p.images == (2, 1) and p.barred == (False, True)
    assert cp_of_matrix(PPM(2, 3)).images == ()
    pi = ColoredPermutation.parse("3~ 4 1 5~ 2")
    assert cp_of_matrix(pi.matrix()) == pi
    assert ColoredPermutation.parse(str(pi)) == pi


def test_cycle_statistics_example():
    pi = ColoredPermutation((4, 2, 6, 1, 5, 3, 7), (False, True, True, False, False, True, False))
    st_ = colored_perm_stats(pi)
    assert (st_.sigma1, st_.bar_sigma1, st_.sigma2, st_.bar_sigma2) == (2, 1, 1, 1)
    ident = colored_perm_stats(ColoredPermutation((1, 2, 3)))
    assert ident.wt == LaurentPoly.monomial(x=3)


@pytest.mark.parametrize("n", range(6))
def test_colored_involution_weights_match_brute_force(n):
    counts = colored_involution_weights(n)
    ours = poly_sum(colored_perm_stats(p).wt for p in enumerate_colored_involutions(n))
    expected = poly_sum(LaurentPoly.monomial(c, x=a, y=b, q=t / 2) for (a, b, t), c in counts.items())
    assert ours == expected
    assert count_involutions(n, colored=True) == sum(counts.values())


@pytest.mark.parametrize("n, m", [(n, m) for n in range(4) for m in range(4)])
def test_matrix_counts(n, m):
    for j in range(min(n, m) + 1):
        expected = comb(n, j) * comb(m, j) * factorial(j) * 2 ** j
        mats = list(enumerate_matrices(n, m, j, "ppm"))
        assert len(mats) == len(set(mats)) == expected == count_ppms(n, m, j)
        assert len(list(enumerate_matrices(n, m, j, "zero_one"))) == expected // 2 ** j


def test_matrix_extension_example():
    M = ZeroOneMatrix.parse("0 1 0 0; 0 0 0 0; 0 0 0 0")
    expected = ZeroOneMatrix.parse(
        "0 0 1 0 0 0; 0 0 0 0 1 0; 0 0 0 0 0 1; 0 0 0 1 0 0; 1 0 0 0 0 0; 0 1 0 0 0 0")
    assert matrix_extension(M) == expected


def test_matrix_inv_of_empty_one_by_one():
    M = ZeroOneMatrix(1, 1)
    assert matrix_extension(M).dense() == ((0, 1), (1, 0))
    assert matrix_inv(M) == 1 and matrix_sign(M) == -1


def test_phi_one_by_one():
    P, Q = phi(EMPTY_SDT, EMPTY_SDT, PPM.parse("1"))
    assert P == Q and P.steps == ((2,),)
    P, Q = phi(EMPTY_SDT, EMPTY_SDT, PPM.parse("-1"))
    assert P == Q and P.steps == ((1, 1),)


def test_phi_rejects_incompatible_boundaries():
    U = ChainTableau(SDT, (), ((2,),))
    with pytest.raises(ValueError, match="columns"):
        phi(U, EMPTY_SDT, PPM.parse("1"))
    with pytest.raises(ValueError, match="inner shape"):
        phi(EMPTY_SDT, ChainTableau.empty(SDT, (1,)), PPM(0, 0))


def _phi_inputs(max_core, max_nm):
    out = []
    for k in range(max_core + 1):
        for mu in partitions(k):
            for n in range(max_nm + 1):
                for m in range(max_nm + 1):
                    for j in range(min(n, m) + 1):
                        for M in enumerate_matrices(n, m, j, "ppm"):
                            for lam_b in _ups(mu, m - j):
                                for lam_a in _ups(mu, n - j):
                                    for U in enumerate_tableaux((lam_b, mu), SDT):
                                        for V in enumerate_tableaux((lam_a, mu), SDT):
                                            out.append((U, V, M))
    return out


def _ups(mu, steps):
    from skewdomino.shapes import supersets

    return [lam for lam in supersets(mu, 2 * steps) if two_core(lam) == two_core(mu)]


PHI_INPUTS = _phi_inputs(2, 2)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PHI_INPUTS))
def test_phi_round_trip(triple):
    U, V, M = triple
    P, Q = phi(U, V, M)
    assert P.outer == Q.outer
    assert phi_inverse(P, Q) == (U, V, M)
    assert phi(V, U, M.transpose()) == (Q, P)


SYM_INPUTS = [(U, M) for U, V, M in PHI_INPUTS if U == V and M.is_symmetric()]


@pytest.mark.parametrize("U, M", SYM_INPUTS[:60])
def test_phi_sym_round_trip(U, M):
    D = phi_sym(U, M)
    assert phi_sym_inverse(D) == (U, M)


def test_phi_sym_vertical_domino_weight():
    D = phi_sym(EMPTY_SDT, PPM.parse("-1"))
    st_ = sdt_stats(D)
    assert st_.ov - st_.ev == 1
    assert colored_perm_stats(cp_of_matrix(PPM.parse("-1"))).bar_sigma1 == 1


def test_phi_sym_rejects_asymmetric():
    with pytest.raises(ValueError):
        phi_sym(EMPTY_SDT, PPM.parse("0 1; -1 0"))


@pytest.mark.parametrize("n", range(6))
def test_rs_phi_matches_insertion(n):
    empty = ChainTableau.empty(SYT, ())
    for perm in permutations(range(1, n + 1)):
        M = ZeroOneMatrix(n, n, tuple((i + 1, v, 1) for i, v in enumerate(perm)))
        P, Q = rs_phi(empty, empty, M)
        assert (P.rows(), Q.rows()) == row_insert(perm)
        assert perm_of_matrix(M) == perm
        assert rs_phi_inverse(P, Q) == (empty, empty, M)


def test_sign_of_permutation():
    assert sign_of_permutation((2, 1, 3)) == -1
    assert sign_of_permutation((2, 3, 1)) == 1
