from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitzkit.exactcore import (
    Partition, class_size, enumerate_partitions, exact, format_scalar, parse_scalar,
    partition_count, zeta,
)
from oracles import count_partitions


def test_empty_partition():
    assert enumerate_partitions(0) == [Partition(())]


@pytest.mark.parametrize("d, n", [(4, 5), (5, 7)])
def test_partition_counts_examples(d, n):
    assert len(enumerate_partitions(d)) == n == count_partitions(d)


@pytest.mark.parametrize("d", range(0, 16))
def test_partition_count_matches_recursion(d):
    parts = enumerate_partitions(d)
    assert len(parts) == count_partitions(d) == partition_count(d)
    assert len(set(parts)) == len(parts)
    assert all(p.weight == d for p in parts)
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("delta, z", [((3, 3), 18), ((1,), 1), ((2, 1, 1), 4), ((), 1)])
def test_zeta(delta, z):
    assert zeta(Partition(delta)) == z


@pytest.mark.parametrize("delta, size", [((2,), 1), ((3,), 2), ((2, 1), 3)])
def test_class_size(delta, size):
    assert class_size(Partition(delta)) == size


@pytest.mark.parametrize("d", range(1, 9))
def test_class_sizes_partition_group(d):
    from math import factorial
    assert sum(class_size(p) for p in enumerate_partitions(d)) == factorial(d)


def test_partition_normalizes_and_validates():
    assert Partition([1, 3, 1]) == (3, 1, 1)
    assert str(Partition([2, 1])) == "[2,1]"
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition([-1])


@pytest.mark.parametrize("text, parts", [("[3,1,1]", (3, 1, 1)), ("[]", ()), (" [ 2 , 2 ] ", (2, 2))])
def test_partition_parse(text, parts):
    assert Partition.parse(text) == parts


@pytest.mark.parametrize("text", ["[1,2]", "[2,0]", "3,1", "[a]", "[1,,1]"])
def test_partition_parse_rejects(text):
    with pytest.raises(ValueError):
        Partition.parse(text)


@given(st.lists(st.integers(1, 6), max_size=7))
def test_conjugate_is_involution(parts):
    p = Partition(parts)
    assert p.conjugate().conjugate() == p
    assert p.conjugate().weight == p.weight


@given(st.fractions(max_denominator=50))
def test_scalar_roundtrip(x):
    text = format_scalar(x)
    assert "." not in text
    assert parse_scalar(text) == x


def test_exact_collapses_integers():
    assert type(exact(Fraction(4, 2))) is int
    assert exact(Fraction(1, 2)) == Fraction(1, 2)
    assert format_scalar(Fraction(-3, 6)) == "-1/2"
    assert format_scalar(5) == "5"


def test_format_rejects_floats():
    with pytest.raises(TypeError):
        format_scalar(0.5)
