from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hurwitzkit.characters import phi
from hurwitzkit.exactcore import Partition, enumerate_partitions
from hurwitzkit.matrices import ExactMatrix, seeded_matrix
from hurwitzkit.symfunc import (
    PowerSumPoly, cut_and_join_apply, cut_and_join_eigenvalue, evaluate_at_matrix,
    jacobi_trudi_schur, one_row_schur, powersum_in_schur, powersum_monomial,
    schur_bialternant, schur_in_powersums,
)
from oracles import content_eigenvalue

P = Partition
half = Fraction(1, 2)


def p(*parts):
    return powersum_monomial(parts)


def test_powersum_monomials():
    assert p(2, 1).terms == {P([2, 1]): 1}
    assert p().terms == {P(()): 1}
    assert p(3).terms == {P([3]): 1}
    assert p(1) * p(2) == p(2, 1)


def test_schur_small():
    assert schur_in_powersums([1]) == p(1)
    assert schur_in_powersums([2]) == (p(1, 1) + p(2)).scale(half)
    assert schur_in_powersums([1, 1]) == (p(1, 1) - p(2)).scale(half)


def test_powersum_in_schur_small():
    assert powersum_in_schur([1]) == {P([1]): 1}
    assert powersum_in_schur([2]) == {P([2]): 1, P([1, 1]): -1}
    assert powersum_in_schur([1, 1]) == {P([2]): 1, P([1, 1]): 1}


@pytest.mark.parametrize("d", range(0, 7))
def test_roundtrip(d):
    for delta in enumerate_partitions(d):
        total = PowerSumPoly()
        for lam, c in powersum_in_schur(delta).items():
            total = total + schur_in_powersums(lam).scale(c)
        assert total == powersum_monomial(delta)


def test_jacobi_trudi_examples():
    assert jacobi_trudi_schur([1], 1) == p(1)
    assert jacobi_trudi_schur([2], 2) == (p(1, 1) + p(2)).scale(half)
    for d in range(1, 6):
        assert jacobi_trudi_schur([d], 1) == one_row_schur(d)
    with pytest.raises(ValueError):
        jacobi_trudi_schur([1, 1], 1)


@pytest.mark.parametrize("d", range(1, 7))
def test_jacobi_trudi_agrees_with_character_map(d):
    for lam in enumerate_partitions(d):
        s = schur_in_powersums(lam)
        assert jacobi_trudi_schur(lam, len(lam)) == s
        assert jacobi_trudi_schur(lam, d) == s


def test_evaluate_examples():
    for n in (1, 2, 3):
        assert evaluate_at_matrix(p(1), ExactMatrix.identity(n)) == n
    assert evaluate_at_matrix(schur_in_powersums([1, 1]), ExactMatrix([[5]])) == 0
    assert evaluate_at_matrix(schur_in_powersums([2]), ExactMatrix.diagonal([1, 2])) == 7


def test_evaluate_rejects_non_square():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])
    with pytest.raises(TypeError):
        ExactMatrix([[0.5]])


def test_bialternant_examples():
    a = Fraction(3, 7)
    assert schur_bialternant([1], [a]) == a
    assert schur_bialternant([2], [1, 2]) == 7
    assert schur_bialternant([1, 1, 1], [1, 2]) == 0
    with pytest.raises(ValueError):
        schur_bialternant([1], [2, 2])


@pytest.mark.parametrize("d", range(1, 6))
def test_bialternant_matches_evaluation(d):
    points = ([Fraction(1, 2), 2, -1], [3, Fraction(-2, 3), Fraction(5, 4)], [1, 2, 3, 4, 5])
    for x in points:
        X = ExactMatrix.diagonal(x)
        for lam in enumerate_partitions(d):
            assert evaluate_at_matrix(schur_in_powersums(lam), X) == schur_bialternant(lam, x)


def test_evaluate_nondiagonal_is_conjugation_invariant():
    X = seeded_matrix(3, 11, max_den=3)
    Q = seeded_matrix(3, 12)
    Y = Q @ X @ Q.inverse()
    for lam in enumerate_partitions(4):
        s = schur_in_powersums(lam)
        assert evaluate_at_matrix(s, X) == evaluate_at_matrix(s, Y)


def test_cut_and_join_examples():
    assert cut_and_join_apply(schur_in_powersums([2])) == schur_in_powersums([2]).scale(2)
    assert cut_and_join_apply(schur_in_powersums([1, 1])) == schur_in_powersums([1, 1]).scale(-2)
    assert cut_and_join_apply(p(1)) == PowerSumPoly()


@pytest.mark.parametrize("d", range(1, 7))
def test_cut_and_join_diagonal_with_content_eigenvalue(d):
    for lam in enumerate_partitions(d):
        s = schur_in_powersums(lam)
        e = content_eigenvalue(lam)
        assert cut_and_join_apply(s) == s.scale(e)
        assert cut_and_join_eigenvalue(lam) == e
        if d >= 2:
            transposition = P([2] + [1] * (d - 2))
            assert e == 2 * phi(lam, transposition)


def test_cut_and_join_preserves_degree_and_linearity():
    f = p(3, 1) + p(2, 2).scale(3) - p(4)
    g = p(4).scale(Fraction(2, 5))
    assert cut_and_join_apply(f + g) == cut_and_join_apply(f) + cut_and_join_apply(g)
    assert cut_and_join_apply(f).degrees() <= {4}


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(1, 3), min_size=0, max_size=3), min_size=1, max_size=4),
       st.lists(st.fractions(max_denominator=5), min_size=4, max_size=4))
def test_ring_axioms(monos, coeffs):
    polys = [powersum_monomial(m).scale(c) for m, c in zip(monos, coeffs)]
    a = polys[0]
    b = polys[1] if len(polys) > 1 else PowerSumPoly.constant(2)
    c = polys[2] if len(polys) > 2 else PowerSumPoly.constant(-1)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a) == PowerSumPoly()
    assert all(v != 0 for v in (a * b).terms.values())
    for k in (1, 2):
        assert (a * b).derivative(k) == a.derivative(k) * b + a * b.derivative(k)


def test_to_json():
    data = schur_in_powersums([2]).to_json()
    assert {"monomial": "[2]", "coeff": "1/2"} in data
    assert {"monomial": "[1,1]", "coeff": "1/2"} in data
