from fractions import Fraction
from math import factorial
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from hurwitzkit.exactcore import CapacityError, Partition, enumerate_partitions, zeta
from hurwitzkit.hurwitz import (
    BranchingData, hurwitz_character, hurwitz_permutation_naive, hurwitz_permutation_oracle,
    oracle_work_estimate, riemann_hurwitz_euler, three_point_sphere,
)
from oracles import brute_h_two_point

P = Partition


def bd(d, *profiles, **base):
    return BranchingData(d, tuple(P(p) for p in profiles), **base)


def test_character_formula_examples():
    assert hurwitz_character(bd(3, [1, 1, 1], euler=1)) == Fraction(2, 3)
    assert hurwitz_character(bd(3, [3], [3], euler=2)) == Fraction(1, 3)
    assert hurwitz_character(bd(6, [3, 3], [3, 3], euler=2)) == Fraction(1, 18)


def test_oracle_examples():
    assert hurwitz_permutation_oracle(bd(3, handles=0, crosscaps=1)) == Fraction(2, 3)
    assert hurwitz_permutation_oracle(bd(3, [3], [3], handles=0, crosscaps=0)) == Fraction(1, 3)
    assert hurwitz_permutation_oracle(bd(3, [2, 1], handles=0, crosscaps=0)) == 0


def test_unbranched_projective_plane_counts_square_roots():
    # 1 identity + 3 transpositions square to the identity; 3-cycles do not.
    assert hurwitz_permutation_naive(bd(3, crosscaps=1)) == Fraction(4, 6)


def test_three_point_examples():
    assert three_point_sphere([1], [1], [1]) == 1
    assert three_point_sphere([2], [1, 1], [2]) == Fraction(1, 2)
    assert three_point_sphere([2], [1, 1], [1, 1]) == 0
    with pytest.raises(ValueError):
        three_point_sphere([2], [1], [1])


def test_three_point_uses_squared_dimension_ratio():
    # The oracle fixes the exponent: one solution pair in S_2 over 2!.
    oracle = hurwitz_permutation_oracle(bd(2, [2], [1, 1], [2], handles=0, crosscaps=0))
    assert oracle == three_point_sphere([2], [1, 1], [2]) == Fraction(1, 2)


@pytest.mark.parametrize("e_base, d, profiles, out", [
    (2, 1, [], 2), (2, 3, [[3], [3]], 2), (2, 2, [[2], [2]], 2),
])
def test_riemann_hurwitz(e_base, d, profiles, out):
    assert riemann_hurwitz_euler(e_base, d, [P(p) for p in profiles]) == out


def test_riemann_hurwitz_weight_mismatch():
    with pytest.raises(ValueError):
        riemann_hurwitz_euler(2, 3, [P([2])])


def test_branching_data_validation():
    with pytest.raises(ValueError):
        bd(3, [2], euler=2)
    with pytest.raises(ValueError):
        bd(3, euler=3)
    with pytest.raises(ValueError):
        bd(3, euler=0, handles=0, crosscaps=1)
    with pytest.raises(ValueError):
        bd(3)
    b = bd(3, euler=-1)
    assert (b.handles, b.crosscaps) == (1, 1)
    assert bd(3, handles=1).euler == 0


def test_capacity_errors():
    with pytest.raises(CapacityError):
        hurwitz_character(bd(13, euler=2))
    with pytest.raises(CapacityError, match="about"):
        hurwitz_permutation_oracle(bd(8, euler=2))
    with pytest.raises(CapacityError):
        hurwitz_permutation_oracle(bd(5, [5], euler=2), max_work=10)
    assert oracle_work_estimate(bd(4, [4], euler=1)) > 0
    with pytest.raises(CapacityError):
        hurwitz_permutation_naive(bd(5, handles=2))


@pytest.mark.parametrize("d", range(1, 6))
def test_two_point_law(d):
    parts = enumerate_partitions(d)
    for p1 in parts:
        for p2 in parts:
            expected = Fraction(int(p1 == p2), zeta(p1))
            assert hurwitz_character(bd(d, p1, p2, euler=2)) == expected
    if d <= 4:
        for p1 in parts:
            for p2 in parts:
                assert brute_h_two_point(d, p1, p2) == Fraction(int(p1 == p2), zeta(p1))


SURFACES = [(0, 0), (0, 1), (1, 0), (0, 2), (0, 3)]


@pytest.mark.parametrize("d", range(1, 4))
@pytest.mark.parametrize("h, m", SURFACES)
def test_oracle_matches_naive_enumeration(d, h, m):
    parts = enumerate_partitions(d)
    for k in range(0, 3):
        for profiles in combinations_with_replacement(parts, k):
            data = BranchingData(d, profiles, handles=h, crosscaps=m)
            assert hurwitz_permutation_oracle(data) == hurwitz_permutation_naive(data)


def test_oracle_matches_naive_torus_d4():
    for profile in enumerate_partitions(4):
        data = bd(4, profile, handles=1)
        assert hurwitz_permutation_oracle(data) == hurwitz_permutation_naive(data)


def test_euler_characteristic_determines_value():
    # Torus and Klein bottle share e = 0.
    for d in (2, 3, 4):
        for profile in enumerate_partitions(d):
            torus = hurwitz_permutation_oracle(bd(d, profile, handles=1))
            klein = hurwitz_permutation_oracle(bd(d, profile, crosscaps=2))
            assert torus == klein == hurwitz_character(bd(d, profile, euler=0))


profile_lists = st.integers(1, 5).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.sampled_from(enumerate_partitions(d)), max_size=4))
)


@settings(max_examples=60, deadline=None)
@given(profile_lists, st.sampled_from([2, 1, 0, -1, -2]), st.randoms(use_true_random=False))
def test_symmetric_in_profiles(dp, e, rnd):
    d, profiles = dp
    shuffled = list(profiles)
    rnd.shuffle(shuffled)
    assert hurwitz_character(bd(d, *profiles, euler=e)) == hurwitz_character(bd(d, *shuffled, euler=e))


@settings(max_examples=60, deadline=None)
@given(profile_lists, st.sampled_from([2, 1, 0, -1]))
def test_trivial_profile_is_neutral(dp, e):
    d, profiles = dp
    with_trivial = profiles + [P.ones(d)]
    assert hurwitz_character(bd(d, *with_trivial, euler=e)) == hurwitz_character(bd(d, *profiles, euler=e))


@settings(max_examples=40, deadline=None)
@given(profile_lists)
def test_parity_obstruction(dp):
    d, profiles = dp
    # On the sphere a product of permutations is the identity only if it is even.
    odd = sum(sum(p) - len(p) for p in profiles) % 2
    if odd:
        assert hurwitz_character(bd(d, *profiles, euler=2)) == 0


@pytest.mark.parametrize("d", range(1, 6))
def test_single_profile_sphere(d):
    for p in enumerate_partitions(d):
        expected = Fraction(1, zeta(p)) if p == P.ones(d) else 0
        assert hurwitz_character(bd(d, p, euler=2)) == expected


def test_three_point_symmetric():
    for d in (2, 3, 4):
        parts = enumerate_partitions(d)
        for a in parts:
            for b in parts:
                for c in parts:
                    x = three_point_sphere(a, b, c)
                    assert x == three_point_sphere(b, c, a) == three_point_sphere(c, a, b)
                    assert x == three_point_sphere(b, a, c)


@pytest.mark.parametrize("e", [2, 1, 0, -1])
def test_times_factorial_is_a_tuple_count(e):
    for d in (3, 4):
        for p in enumerate_partitions(d):
            h = hurwitz_character(bd(d, p, p, euler=e))
            assert (h * factorial(d)).denominator == 1
