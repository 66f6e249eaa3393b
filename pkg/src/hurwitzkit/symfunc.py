"""Polynomials in power sums p_1, p_2, ..., Schur functions and cut-and-join.

A monomial p_{D_1} p_{D_2} ... is keyed by the partition D, so
commutativity of the generators comes for free.

Three independent routes to s_lam are provided: the character map
(:func:`schur_in_powersums`), the Jacobi-Trudi determinant
(:func:`jacobi_trudi_schur`) and, for numeric arguments, the ratio of
alternants (:func:`schur_bialternant`).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .characters import character, dim_over_factorial, phi
from .exactcore import Number, Partition, enumerate_partitions, exact, format_scalar, zeta
from .matrices import ExactMatrix, det

__all__ = [
    "PowerSumPoly",
    "cut_and_join_apply",
    "cut_and_join_eigenvalue",
    "evaluate_at_matrix",
    "jacobi_trudi_schur",
    "one_row_schur",
    "powersum_in_schur",
    "powersum_monomial",
    "schur_bialternant",
    "schur_in_powersums",
]


class PowerSumPoly:
    """Finite linear combination of power-sum monomials with exact coefficients.

    Zero coefficients are never stored. ``p_m`` has degree m, so the monomial
    keyed by D is homogeneous of degree |D|.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], Number] | None = None):
        clean: dict[Partition, Number] = {}
        for mono, c in (terms or {}).items():
            mono = Partition(mono)
            c = clean.get(mono, 0) + c
            if c:
                clean[mono] = exact(c)
            else:
                clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def constant(cls, c: Number) -> "PowerSumPoly":
        return cls({(): c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PowerSumPoly.constant(other)
        return isinstance(other, PowerSumPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return PowerSumPoly(out)

    def __neg__(self) -> "PowerSumPoly":
        return PowerSumPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        return self + (-other)

    def scale(self, c: Number) -> "PowerSumPoly":
        return PowerSumPoly({m: c * v for m, v in self.terms.items()}) if c else PowerSumPoly()

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Partition, Number] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = Partition(m1 + m2)
                out[key] = out.get(key, 0) + c1 * c2
        return PowerSumPoly(out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def homogeneous_part(self, d: int) -> "PowerSumPoly":
        return PowerSumPoly({m: c for m, c in self.terms.items() if sum(m) == d})

    def derivative(self, k: int) -> "PowerSumPoly":
        """Partial derivative with respect to p_k."""
        out: dict[Partition, Number] = {}
        for m, c in self.terms.items():
            mult = m.count(k)
            if mult:
                key = m.without_part(k)
                out[key] = out.get(key, 0) + c * mult
        return PowerSumPoly(out)

    def to_json(self) -> list[dict[str, str]]:
        return [{"monomial": str(m), "coeff": format_scalar(c)}
                for m, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"p{k}" for k in m) or "1"
            parts.append(f"{format_scalar(c)}*{mono}")
        return " + ".join(parts)


def powersum_monomial(delta: Iterable[int]) -> PowerSumPoly:
    return PowerSumPoly({Partition(delta): 1})


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition) -> tuple:
    d = lam.weight
    scale = dim_over_factorial(lam)
    return tuple((delta, scale * phi(lam, delta)) for delta in enumerate_partitions(d))


def schur_in_powersums(lam: Iterable[int]) -> PowerSumPoly:
    """s_lam = (dim lam / d!) sum_D phi_lam(D) p_D."""
    return PowerSumPoly(dict(_schur_terms(Partition(lam))))


def powersum_in_schur(delta: Iterable[int]) -> dict[Partition, Fraction]:
    """Coefficients c_lam of p_D = sum c_lam s_lam; c_lam = (dim/d!) zeta_D phi_lam(D)."""
    delta = Partition(delta)
    z = zeta(delta)
    out = {}
    for lam in enumerate_partitions(delta.weight):
        c = dim_over_factorial(lam) * z * phi(lam, delta)
        if c:
            out[lam] = c
    return out


@lru_cache(maxsize=None)
def one_row_schur(k: int) -> PowerSumPoly:
    """s_(k), the z^k coefficient of exp(sum_m p_m z^m / m).

    Differentiating the generating function in z gives k s_(k) = sum_{m=1..k} p_m s_(k-m).
    """
    if k < 0:
        return PowerSumPoly()
    if k == 0:
        return PowerSumPoly.constant(1)
    acc = PowerSumPoly()
    for m in range(1, k + 1):
        acc = acc + powersum_monomial([m]) * one_row_schur(k - m)
    return acc.scale(Fraction(1, k))


def _poly_det(matrix: Sequence[Sequence[PowerSumPoly]]) -> PowerSumPoly:
    n = len(matrix)
    memo: dict[tuple[int, frozenset], PowerSumPoly] = {}

    def minor(row: int, cols: frozenset) -> PowerSumPoly:
        if row == n:
            return PowerSumPoly.constant(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = PowerSumPoly()
        free = sorted(cols)
        for pos, c in enumerate(free):
            entry = matrix[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols - {c})
            if not sub:
                continue
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, frozenset(range(n)))


def jacobi_trudi_schur(lam: Iterable[int], n: int) -> PowerSumPoly:
    """det[s_(h_i + j - N)] with h_i = lam_i - i + N, for N >= len(lam)."""
    lam = Partition(lam)
    if n < len(lam):
        raise ValueError(f"N={n} is smaller than the length of {lam}")
    parts = list(lam) + [0] * (n - len(lam))
    matrix = [[one_row_schur(parts[i] - i + j) for j in range(n)] for i in range(n)]
    return _poly_det(matrix)


def evaluate_at_matrix(f: PowerSumPoly, x: ExactMatrix) -> Number:
    """Substitute p_m -> tr(X^m)."""
    if not isinstance(x, ExactMatrix):
        raise ValueError("evaluate_at_matrix needs a square ExactMatrix")
    top = max((max(m) for m in f.terms if m), default=0)
    traces = {}
    power = ExactMatrix.identity(x.size)
    for m in range(1, top + 1):
        power = power @ x
        traces[m] = power.trace()
    total: Number = 0
    for mono, c in f.terms.items():
        term = c
        for k in mono:
            term *= traces[k]
        total += term
    return exact(Fraction(total))


def schur_bialternant(lam: Iterable[int], x: Sequence[Number]) -> Fraction:
    """det[x_j^(lam_i - i + N)] / det[x_j^(N - i)]; zero when len(lam) > N."""
    lam = Partition(lam)
    x = [Fraction(v) for v in x]
    n = len(x)
    if len(set(x)) != n:
        raise ValueError("schur_bialternant needs pairwise distinct arguments")
    if len(lam) > n:
        return Fraction(0)
    parts = list(lam) + [0] * (n - len(lam))
    num = det([[xj ** (parts[i] - i + n - 1) for xj in x] for i in range(n)])
    den = det([[xj ** (n - 1 - i) for xj in x] for i in range(n)])
    return num / den


def cut_and_join_apply(f: PowerSumPoly) -> PowerSumPoly:
    """Apply sum over ordered pairs (n, m) of

        p_n p_m (n+m) d/dp_{n+m}  +  p_{n+m} n m d^2/(dp_n dp_m),

    i.e. the alpha = 1 cut-and-join operator with p_{-k} acting as k d/dp_k.
    No 1/2 is inserted, so s_lam has eigenvalue sum_i lam_i (lam_i - 2i + 1)
    (twice the content sum).
    """
    out = PowerSumPoly()
    for d in f.degrees():
        part = f.homogeneous_part(d)
        for total in range(2, d + 1):
            cut = part.derivative(total)
            if cut:
                for n in range(1, total):
                    out = out + (cut * powersum_monomial([n, total - n])).scale(total)
        for n in range(1, d):
            dn = part.derivative(n)
            if not dn:
                continue
            for m in range(1, d - n + 1):
                dnm = dn.derivative(m)
                if dnm:
                    out = out + (dnm * powersum_monomial([n + m])).scale(n * m)
    return out


def cut_and_join_eigenvalue(lam: Iterable[int]) -> int:
    """sum_i lam_i (lam_i - 2i + 1), i counted from 1."""
    return sum(p * (p - 2 * i - 1) for i, p in enumerate(Partition(lam)))
