"""Exact scalars, integer partitions and small counting utilities.

Every rational value in the package is a :class:`fractions.Fraction`; the
helpers here give it the textual form used on the command line and in
fixture files (``"num/den"``, or ``"n"`` when the denominator is 1).
"""
from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Union

ExactScalar = Fraction
Number = Union[int, Fraction]

__all__ = [
    "CapacityError",
    "ExactScalar",
    "Partition",
    "class_size",
    "enumerate_partitions",
    "format_scalar",
    "parse_scalar",
    "partition_count",
    "zeta",
]


class CapacityError(RuntimeError):
    """Raised when a request exceeds a configured size cap."""


def format_scalar(x: Number) -> str:
    if isinstance(x, float):
        raise TypeError(f"refusing to format inexact value {x!r}")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def exact(x: Number) -> Number:
    """Collapse an integral Fraction to int so hot loops stay in int arithmetic."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


_PARTITION_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor sorts its input, so ``Partition([1, 3, 1])`` is
    ``(3, 1, 1)``. The empty partition is the unique partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the bracketed form ``"[3,1,1]"``; ``"[]"`` is the empty partition."""
        text = text.strip()
        if not _PARTITION_RE.match(text):
            raise ValueError(f"malformed partition literal {text!r}")
        body = text[1:-1].strip()
        parts = [int(p) for p in body.split(",")] if body else []
        if any(p == 0 for p in parts):
            raise ValueError(f"malformed partition literal {text!r}: zero part")
        if parts != sorted(parts, reverse=True):
            raise ValueError(f"partition literal {text!r} is not weakly decreasing")
        return cls(parts)

    @classmethod
    def ones(cls, d: int) -> "Partition":
        return cls([1] * d)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def without_part(self, part: int) -> "Partition":
        parts = list(self)
        parts.remove(part)
        return Partition(parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def _partitions_bounded(d: int, largest: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(d, d))


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order, e.g. [4], [3,1], [2,2], ..."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return list(_partitions_cached(d))


@lru_cache(maxsize=None)
def partition_count(d: int) -> int:
    """Number of partitions of ``d`` through Euler's pentagonal recurrence."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > d:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(d - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= d:
            total += sign * partition_count(d - g2)
        k += 1
    return total


def zeta(delta: Iterable[int]) -> int:
    """Order of the centraliser of a permutation with cycle type ``delta``: prod m_k! k^m_k."""
    counts = Counter(delta)
    return prod(factorial(m) * k**m for k, m in counts.items())


def class_size(delta: Iterable[int]) -> int:
    delta = Partition(delta)
    return factorial(delta.weight) // zeta(delta)
