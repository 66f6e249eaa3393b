"""Small exact matrices over the rationals.

Sizes here never exceed a handful of rows, so plain Gaussian elimination
over :class:`~fractions.Fraction` is all that is needed.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .exactcore import Number, exact

__all__ = [
    "ExactMatrix",
    "det",
    "fixed_space_pair",
    "seeded_matrix",
    "solve_combination",
]


def _entry(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"matrix entries must be exact, got {x!r}")
    return Fraction(x)


class ExactMatrix:
    """Immutable square matrix with exact entries."""

    __slots__ = ("rows", "size")

    def __init__(self, rows: Iterable[Iterable[Number]]):
        rows = tuple(tuple(exact(_entry(x)) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("ExactMatrix must be square")
        self.rows = rows
        self.size = n

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Number:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix([{body}])"

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.size != self.size:
            raise ValueError("matrix size mismatch")
        n = self.size
        cols = list(zip(*other.rows))
        return ExactMatrix(
            [[sum(a * b for a, b in zip(self.rows[i], cols[j])) for j in range(n)] for i in range(n)]
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c: Number) -> "ExactMatrix":
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def __pow__(self, k: int) -> "ExactMatrix":
        result, base = ExactMatrix.identity(self.size), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> Number:
        return sum(self.rows[i][i] for i in range(self.size))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows))

    def det(self) -> Fraction:
        return det(self.rows)

    def inverse(self) -> "ExactMatrix":
        n = self.size
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.rows)]
        _, pivots = _rref(aug, n)
        if len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix([row[n:] for row in aug])

    def to_json(self) -> list[list[str]]:
        from .exactcore import format_scalar
        return [[format_scalar(x) for x in r] for r in self.rows]


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduce ``rows`` in place over the first ``ncols`` columns; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / Fraction(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def det(rows: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant by fraction-exact elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def solve_combination(columns: Sequence[dict], target: dict) -> list[Fraction] | None:
    """Find x with sum_k x_k * columns[k] == target, the vectors given as sparse dicts.

    Returns None when the system is inconsistent. If the columns are
    dependent the free coordinates are set to zero.
    """
    keys = sorted(set().union(target, *columns))
    n = len(columns)
    rows = [[Fraction(col.get(key, 0)) for col in columns] + [Fraction(target.get(key, 0))]
            for key in keys]
    _, pivots = _rref(rows, n)
    for row in rows[len(pivots):]:
        if row[n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return x


def rank(columns: Sequence[dict]) -> int:
    keys = sorted(set().union(*columns)) if columns else []
    rows = [[Fraction(col.get(key, 0)) for col in columns] for key in keys]
    _, pivots = _rref(rows, len(columns))
    return len(pivots)


def seeded_matrix(n: int, seed: int, *, lo: int = -3, hi: int = 3, max_den: int = 1,
                  invertible: bool = True) -> ExactMatrix:
    """Pseudo-random small rational matrix, reproducible across platforms.

    Only ``random.Random.random()`` is used, whose output sequence for a
    given seed is stable across Python versions.
    """
    rng = random.Random(seed)

    def draw(a: int, b: int) -> int:
        return a + int(rng.random() * (b - a + 1))

    while True:
        m = ExactMatrix(
            [[Fraction(draw(lo, hi), draw(1, max_den)) for _ in range(n)] for _ in range(n)]
        )
        if not invertible or m.det() != 0:
            return m


def fixed_space_pair(n: int, seed: int, k: int | None = None) -> tuple[ExactMatrix, ExactMatrix]:
    """Return (A, C) with A @ C == C exactly and A generally not the identity.

    A = P diag(I_k, R) P^-1 with R upper triangular, diagonal avoiding 1;
    C = P [B; 0] with B a random k-row block.
    """
    rng = random.Random(seed)

    def draw(a: int, b: int) -> int:
        return a + int(rng.random() * (b - a + 1))

    if k is None:
        k = draw(1, n)
    if not 0 <= k <= n:
        raise ValueError("k must lie in 0..n")
    p = seeded_matrix(n, seed * 7919 + 17)
    block = [[0] * n for _ in range(n)]
    for i in range(n):
        block[i][i] = 1 if i < k else (draw(2, 4) * (1 if rng.random() < 0.5 else -1))
        if i >= k:
            for j in range(i + 1, n):
                block[i][j] = draw(-2, 2)
    a = p @ ExactMatrix(block) @ p.inverse()
    lower = [[draw(-3, 3) for _ in range(n)] if i < k else [0] * n for i in range(n)]
    c = p @ ExactMatrix(lower)
    if a @ c != c:
        raise AssertionError("fixed_space_pair construction failed")
    return a, c
