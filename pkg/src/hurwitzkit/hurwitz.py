"""Hurwitz numbers of closed surfaces.

Two independent routes:

* :func:`hurwitz_character` sums (dim lam / d!)^e * prod_i phi_lam(profile_i)
  over partitions lam of d.
* :func:`hurwitz_permutation_oracle` counts solutions of
  sigma_1...sigma_f rho_1^2...rho_m^2 [alpha_1, beta_1]...[alpha_h, beta_h] = 1
  in S_d with sigma_i in the class of profile i, and divides by d!.

The oracle never touches characters. It runs the equation left to right as
a walk on the group: a vector of counts indexed by S_d starts at the
identity and is convolved with one weight vector per factor (a class
indicator, the square-root counts, or the commutator counts).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .characters import DEFAULT_TABLE_CAP, character_table, dim_over_factorial, phi
from .exactcore import CapacityError, Partition, class_size, enumerate_partitions

__all__ = [
    "BranchingData",
    "ORACLE_MAX_DEGREE",
    "hurwitz_character",
    "hurwitz_permutation_naive",
    "hurwitz_permutation_oracle",
    "riemann_hurwitz_euler",
    "three_point_sphere",
]

ORACLE_MAX_DEGREE = 7
ORACLE_MAX_WORK = 5 * 10**9
_INT64_SAFE = 2**62


def _canonical_surface(euler: int) -> tuple[int, int]:
    if euler > 2:
        raise ValueError(f"euler characteristic {euler} > 2")
    if euler % 2 == 0:
        return (2 - euler) // 2, 0
    return (1 - euler) // 2, 1


@dataclass(frozen=True)
class BranchingData:
    """Degree, ramification profiles and base surface of a branched covering.

    Give either ``euler`` or ``handles``/``crosscaps``; the missing side is
    filled in. From ``euler`` alone the orientable surface is chosen when
    ``euler`` is even, otherwise one cross-cap is used.
    """

    degree: int
    profiles: tuple[Partition, ...] = ()
    euler: int | None = None
    handles: int | None = None
    crosscaps: int | None = None
    base_from_euler: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        profiles = tuple(Partition(p) for p in self.profiles)
        for p in profiles:
            if p.weight != self.degree:
                raise ValueError(f"profile {p} has weight {p.weight}, expected degree {self.degree}")
        object.__setattr__(self, "profiles", profiles)
        h, m, e = self.handles, self.crosscaps, self.euler
        if h is None and m is None:
            if e is None:
                raise ValueError("give either euler or handles/crosscaps")
            h, m = _canonical_surface(e)
            object.__setattr__(self, "base_from_euler", True)
        else:
            h, m = h or 0, m or 0
            if h < 0 or m < 0:
                raise ValueError("handles and crosscaps must be nonnegative")
            if e is not None and e != 2 - 2 * h - m:
                raise ValueError(f"euler={e} inconsistent with handles={h}, crosscaps={m}")
            e = 2 - 2 * h - m
        if e > 2:
            raise ValueError(f"euler characteristic {e} > 2")
        object.__setattr__(self, "handles", h)
        object.__setattr__(self, "crosscaps", m)
        object.__setattr__(self, "euler", e)


def hurwitz_character(data: BranchingData, cap: int = DEFAULT_TABLE_CAP) -> Fraction:
    d = data.degree
    if d > cap:
        raise CapacityError(f"degree {d} exceeds character table cap {cap}")
    character_table(d, cap)
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        term = dim_over_factorial(lam) ** data.euler
        for profile in data.profiles:
            term *= phi(lam, profile)
            if not term:
                break
        total += term
    return total


def three_point_sphere(delta: Iterable[int], nu: Iterable[int], mu: Iterable[int]) -> Fraction:
    """H on the sphere with three profiles, sum_lam (dim lam/d!)^2 phi phi phi."""
    delta, nu, mu = Partition(delta), Partition(nu), Partition(mu)
    if not delta.weight == nu.weight == mu.weight:
        raise ValueError(f"profiles {delta}, {nu}, {mu} have different weights")
    return _three_point_cached(delta, nu, mu)


@lru_cache(maxsize=None)
def _three_point_cached(delta, nu, mu) -> Fraction:
    return hurwitz_character(BranchingData(delta.weight, (delta, nu, mu), euler=2))


def riemann_hurwitz_euler(e_base: int, d: int, profiles: Sequence[Iterable[int]]) -> int:
    """Euler characteristic of the covering surface: e_base*d + sum(len(profile) - d)."""
    total = e_base * d
    for p in profiles:
        p = Partition(p)
        if p.weight != d:
            raise ValueError(f"profile {p} has weight {p.weight}, expected degree {d}")
        total += p.length - d
    return total


@lru_cache(maxsize=None)
def _cycle_types(d: int) -> tuple[Partition, ...]:
    perms, _, _ = _kernels.permutation_table(d)
    out = []
    for row in perms.tolist():
        seen = [False] * d
        lengths = []
        for start in range(d):
            if seen[start]:
                continue
            n, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = row[j]
                n += 1
            lengths.append(n)
        out.append(Partition(lengths))
    return tuple(out)


def _class_indicator(profile: Partition) -> np.ndarray:
    types = _cycle_types(profile.weight)
    return np.fromiter((t == profile for t in types), dtype=np.int64, count=len(types))


def oracle_work_estimate(data: BranchingData) -> int:
    n = factorial(data.degree)
    factors = len(data.profiles) + data.crosscaps + data.handles
    return n * n * (factors + (1 if data.handles else 0))


def hurwitz_permutation_oracle(data: BranchingData, max_degree: int = ORACLE_MAX_DEGREE,
                               max_work: int = ORACLE_MAX_WORK) -> Fraction:
    d = data.degree
    work = oracle_work_estimate(data)
    if d > max_degree or work > max_work:
        raise CapacityError(
            f"permutation search over S_{d} too large: about {work} group operations "
            f"(caps: degree {max_degree}, work {max_work})"
        )
    n = factorial(d)
    weights: list[np.ndarray] = [_class_indicator(p) for p in data.profiles]
    if data.crosscaps:
        weights += [_kernels.square_weights(d)] * data.crosscaps
    if data.handles:
        weights += [_kernels.commutator_weights(d)] * data.handles

    # Total number of tuples bounds every intermediate count.
    bound = 1
    for w in weights:
        bound *= int(w.sum())
    dtype = np.int64 if bound < _INT64_SAFE else object

    v = np.zeros(n, dtype=dtype)
    v[0] = 1  # row 0 is the identity
    for w in weights:
        v = _kernels.convolve(v, w.astype(dtype), d)
    return Fraction(int(v[0]), n)


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[i] for i in q)


def _inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def hurwitz_permutation_naive(data: BranchingData, max_tuples: int = 5 * 10**6) -> Fraction:
    """Plain enumeration of every tuple; used to check the oracle at small degree."""
    d = data.degree
    group = list(itertools.permutations(range(d)))
    types = dict(zip(group, _cycle_types(d)))
    classes = [[g for g in group if types[g] == p] for p in data.profiles]
    ranges = classes + [group] * (data.crosscaps + 2 * data.handles)
    size = 1
    for r in ranges:
        size *= len(r)
    if size > max_tuples:
        raise CapacityError(f"naive search needs {size} tuples (cap {max_tuples})")
    identity = tuple(range(d))
    f, m = len(classes), data.crosscaps
    count = 0
    for tup in itertools.product(*ranges):
        acc = identity
        for s in tup[:f]:
            acc = _compose(acc, s)
        for r in tup[f:f + m]:
            acc = _compose(acc, _compose(r, r))
        rest = tup[f + m:]
        for a, b in zip(rest[::2], rest[1::2]):
            acc = _compose(acc, _compose(_compose(a, b), _compose(_inverse(a), _inverse(b))))
        count += acc == identity
    return Fraction(count, factorial(d))

