"""Irreducible characters of S_d and the normalized characters phi.

``character`` is the Murnaghan-Nakayama rule phrased on beta-sets: removing
a border strip of length r from a diagram is the same as moving one bead
of its beta-set down by r positions into a free slot, with sign
``(-1)**(number of beads jumped over)``.
"""
from __future__ import annotations

import csv
import io
import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .exactcore import CapacityError, Partition, enumerate_partitions, zeta

__all__ = [
    "CharacterTable",
    "DEFAULT_TABLE_CAP",
    "character",
    "character_table",
    "dimension",
    "dim_over_factorial",
    "phi",
]

DEFAULT_TABLE_CAP = 12


def dim_over_factorial(lam: Partition) -> Fraction:
    """dim(lam)/|lam|! by the product formula, taken with N = len(lam)."""
    lam = Partition(lam)
    n = len(lam)
    h = [lam[i] - i + n - 1 for i in range(n)]  # lam_i - i + N with 1-based i
    num = prod(h[i] - h[j] for i in range(n) for j in range(i + 1, n))
    den = prod(factorial(x) for x in h)
    return Fraction(num, den)


def dimension(lam: Partition) -> int:
    lam = Partition(lam)
    value = dim_over_factorial(lam) * factorial(lam.weight)
    assert value.denominator == 1
    return value.numerator


def _check_weights(lam: Partition, delta: Partition) -> None:
    if sum(lam) != sum(delta):
        raise ValueError(
            f"incompatible degree: |{Partition(lam)}| = {sum(lam)} but |{Partition(delta)}| = {sum(delta)}"
        )


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], delta: tuple[int, ...]) -> int:
    if not delta:
        return 1
    r, rest = delta[0], delta[1:]
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        moved = (beta - {b}) | {target}
        term = _mn(moved, rest)
        total += -term if jumped % 2 else term
    return total


def character(lam: Partition, delta: Partition) -> int:
    """chi_lam evaluated on the conjugacy class with cycle type delta."""
    lam, delta = Partition(lam), Partition(delta)
    _check_weights(lam, delta)
    n = len(lam)
    beta = frozenset(lam[i] + (n - 1 - i) for i in range(n))
    return _mn(beta, tuple(delta))


def phi(lam: Partition, delta: Partition) -> Fraction:
    """chi_lam(delta) * d! / (dim(lam) * zeta(delta))."""
    lam, delta = Partition(lam), Partition(delta)
    _check_weights(lam, delta)
    d = lam.weight
    return Fraction(character(lam, delta) * factorial(d), dimension(lam) * zeta(delta))


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    partitions: tuple[Partition, ...]
    entries: dict = field(repr=False)

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, delta = key
        return self.entries[(Partition(lam), Partition(delta))]

    def row(self, lam: Partition) -> list[int]:
        return [self.entries[(Partition(lam), delta)] for delta in self.partitions]

    def to_json(self) -> str:
        payload = {
            "degree": self.degree,
            "partitions": [str(p) for p in self.partitions],
            "rows": [
                {"lambda": str(lam),
                 "values": {str(delta): self.entries[(lam, delta)] for delta in self.partitions}}
                for lam in self.partitions
            ],
        }
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda"] + [str(p) for p in self.partitions])
        for lam in self.partitions:
            writer.writerow([str(lam)] + self.row(lam))
        return buf.getvalue()


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def character_table(d: int, cap: int = DEFAULT_TABLE_CAP) -> CharacterTable:
    """Full table for S_d, built once per degree and then shared read-only."""
    if d < 1:
        raise ValueError("degree must be positive")
    if d > cap:
        raise CapacityError(f"character table degree {d} exceeds cap {cap}")
    with _tables_lock:
        table = _tables.get(d)
        if table is None:
            parts = tuple(enumerate_partitions(d))
            entries = {(lam, delta): character(lam, delta) for lam in parts for delta in parts}
            table = CharacterTable(d, parts, entries)
            _tables[d] = table
    return table
