"""Normal-ordered differential operators on Fock polynomials.

Pairing convention: Zdag[m][i, j] acts as d/dZ[m][j, i], so that
<Zdag[i, j] Z[k, l]> = delta(i, l) delta(j, k) and
<tr(Zdag F) tr(Z C)> = tr(F C).

A term ``(mult, deriv) -> c`` stands for c * Z^mult * d^deriv with every
derivative acting before every multiplication. Inside a normal ordering the
factors commute, so an operator is built by multiplying commuting symbols
and only turned into an action at the end.

Worked anchor, N arbitrary::

    :tr((Zdag Z)^2): = sum Z[b, c] Z[d, a] d/dZ[b, a] d/dZ[d, c]
    (tr Z)^2  ->  2 tr(Z^2)
    tr(Z^2)   ->  2 (tr Z)^2

so s_(2) -> 2 s_(2) and s_(1,1) -> -2 s_(1,1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, perm
from operator import add, sub
from typing import Iterable, Iterator, Mapping, Sequence

from ..exactcore import CapacityError, Number, Partition, exact
from ..matrices import ExactMatrix
from ..symfunc import PowerSumPoly, powersum_monomial, schur_in_powersums
from .fock import FockPoly, Token, VarSpace, Z, Zdag, monomial_basis, substitute_powersums

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "NormalOp",
    "apply_normal_op",
    "build_powersum_hamiltonian",
    "build_schur_hamiltonian",
    "trace_operator",
    "wick_pair",
]


@dataclass(frozen=True)
class Caps:
    """Size limits for eager operator expansion; exceeding one is a CapacityError."""
    max_size: int = 3
    max_weight: int = 4
    max_basis: int = 2500

    def check(self, n: int, weight: int) -> None:
        if n > self.max_size:
            raise CapacityError(f"matrix size {n} exceeds cap {self.max_size}")
        if weight > self.max_weight:
            raise CapacityError(f"operator weight {weight} exceeds cap {self.max_weight}")


DEFAULT_CAPS = Caps()


def _sub_exponents(e: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    """Exponent tuples d <= e (componentwise) with sum(d) == total."""
    n = len(e)
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + e[k]
    if total > suffix[0]:
        return
    cur = [0] * n

    def rec(k: int, left: int):
        if k == n:
            if left == 0:
                yield tuple(cur)
            return
        lo = max(0, left - suffix[k + 1])
        for x in range(min(e[k], left), lo - 1, -1):
            cur[k] = x
            yield from rec(k + 1, left - x)
        cur[k] = 0

    yield from rec(0, total)


def _falling(e: tuple[int, ...], d: tuple[int, ...]) -> int:
    out = 1
    for a, b in zip(e, d):
        if b:
            out *= perm(a, b)
    return out


class NormalOp:
    """Finite sum of normal-ordered terms c * Z^mult * d^deriv over a VarSpace."""

    __slots__ = ("space", "terms", "_by_deriv", "_graded")

    def __init__(self, space: VarSpace, terms: Mapping[tuple[tuple[int, ...], tuple[int, ...]], Number]):
        self.space = space
        self.terms = {k: exact(c) for k, c in terms.items() if c}
        self._by_deriv = None
        self._graded: dict = {}

    @classmethod
    def from_symbol(cls, space: VarSpace, symbol: Mapping[tuple[int, ...], Number]) -> "NormalOp":
        """Read a commuting symbol over (Z slots, Zdag slots) as a normal-ordered operator."""
        v = space.n_vars
        tmap = space.transpose_map()
        terms: dict = {}
        for e, c in symbol.items():
            mult = e[:v]
            deriv = [0] * v
            for k, p in enumerate(e[v:]):
                if p:
                    deriv[tmap[k]] += p
            key = (mult, tuple(deriv))
            terms[key] = terms.get(key, 0) + c
        return cls(space, terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NormalOp) and self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _combine(self, other: "NormalOp", sign: int) -> "NormalOp":
        if other.space != self.space:
            raise ValueError("variable-space mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + sign * c
        return NormalOp(self.space, out)

    def __add__(self, other: "NormalOp") -> "NormalOp":
        return self._combine(other, 1)

    def __sub__(self, other: "NormalOp") -> "NormalOp":
        return self._combine(other, -1)

    def scale(self, c: Number) -> "NormalOp":
        return NormalOp(self.space, {k: c * v for k, v in self.terms.items()})

    def degree_pairs(self) -> set[tuple[int, int]]:
        """{(multiplication degree, derivative degree)} over all terms."""
        return {(sum(m), sum(d)) for m, d in self.terms}

    def is_degree_preserving(self) -> bool:
        return all(a == b for a, b in self.degree_pairs())

    def _index(self):
        if self._by_deriv is None:
            index: dict = {}
            for (m, d), c in self.terms.items():
                index.setdefault(d, []).append((m, c))
            degrees = sorted({sum(d) for d in index})
            self._by_deriv = (index, degrees)
        return self._by_deriv

    def apply(self, f: FockPoly) -> FockPoly:
        if f.space != self.space:
            raise ValueError(f"variable-space mismatch: {self.space} vs {f.space}")
        index, degrees = self._index()
        out: dict = {}
        for e, fc in f.terms.items():
            total = sum(e)
            for t in degrees:
                if t > total:
                    break
                for d in _sub_exponents(e, t):
                    hits = index.get(d)
                    if not hits:
                        continue
                    base = tuple(map(sub, e, d))
                    w = fc * _falling(e, d)
                    for m, c in hits:
                        key = tuple(map(add, base, m))
                        out[key] = out.get(key, 0) + w * c
        return FockPoly(self.space, out)

    __call__ = apply

    def compose_graded(self, other: "NormalOp") -> dict[int, "NormalOp"]:
        """Normal-ordered form of self o other, split by number of contractions.

        Z^m1 d^d1 Z^m2 d^d2 = sum_k prod_v C(d1_v, k_v) m2_v!/(m2_v - k_v)!
                               Z^(m1 + m2 - k) d^(d1 - k + d2)
        and the k = 0 piece is the plain commuting product of symbols.
        """
        if other.space != self.space:
            raise ValueError("variable-space mismatch")
        graded: dict[int, dict] = {}
        for (m1, d1), c1 in self.terms.items():
            for (m2, d2), c2 in other.terms.items():
                cap = tuple(min(a, b) for a, b in zip(d1, m2))
                for k in range(sum(cap) + 1):
                    bucket = graded.setdefault(k, {})
                    for kk in _sub_exponents(cap, k):
                        w = c1 * c2
                        for a, b, x in zip(d1, m2, kk):
                            if x:
                                w *= comb(a, x) * perm(b, x)
                        key = (tuple(p + q - x for p, q, x in zip(m1, m2, kk)),
                               tuple(p - x + q for p, q, x in zip(d1, d2, kk)))
                        bucket[key] = bucket.get(key, 0) + w
        return {k: NormalOp(self.space, t) for k, t in sorted(graded.items())}

    def __matmul__(self, other: "NormalOp") -> "NormalOp":
        out = NormalOp(self.space, {})
        for piece in self.compose_graded(other).values():
            out = out + piece
        return out

    def graded_matrix(self, degree: int) -> tuple[list[tuple[int, ...]], list[dict[int, Number]]]:
        """Columns of the action on the degree-``degree`` monomial basis (degree preserving ops)."""
        if degree in self._graded:
            return self._graded[degree]
        if not self.is_degree_preserving():
            raise ValueError("graded_matrix needs a degree-preserving operator")
        basis = monomial_basis(self.space, degree)
        pos = {e: r for r, e in enumerate(basis)}
        columns = []
        for e in basis:
            image = self.apply(FockPoly(self.space, {e: 1}))
            columns.append({pos[k]: c for k, c in image.terms.items()})
        self._graded[degree] = (basis, columns)
        return basis, columns


def apply_normal_op(op: NormalOp, f: FockPoly) -> FockPoly:
    return op.apply(f)


def trace_operator(f: PowerSumPoly, word: Sequence[Token], space: VarSpace) -> NormalOp:
    """:f(W): with p_k -> tr(W^k), all factors inside a single normal ordering."""
    width = 2 * space.n_vars
    return NormalOp.from_symbol(space, substitute_powersums(f, word, space, width))


def _hamiltonian_word(a: ExactMatrix, m: int) -> list[Token]:
    return [Zdag(m), Z(m), a]


def build_powersum_hamiltonian(mu: Iterable[int], a: ExactMatrix, n: int, *,
                               space: VarSpace | None = None, matrix_id: int = 0,
                               caps: Caps = DEFAULT_CAPS) -> NormalOp:
    """:p_mu(Zdag Z A): expanded over index tuples."""
    mu = Partition(mu)
    if a.size != n:
        raise ValueError(f"matrix A has size {a.size}, expected {n}")
    caps.check(n, mu.weight)
    return _powersum_hamiltonian(mu, a, space or VarSpace(n), matrix_id)


@lru_cache(maxsize=512)
def _powersum_hamiltonian(mu: Partition, a: ExactMatrix, space: VarSpace, matrix_id: int) -> NormalOp:
    return trace_operator(powersum_monomial(mu), _hamiltonian_word(a, matrix_id), space)


def build_schur_hamiltonian(lam: Iterable[int], a: ExactMatrix, n: int, *,
                            space: VarSpace | None = None, matrix_id: int = 0,
                            caps: Caps = DEFAULT_CAPS) -> NormalOp:
    """:s_lam(Zdag Z A): with s_lam written in power sums."""
    lam = Partition(lam)
    if a.size != n:
        raise ValueError(f"matrix A has size {a.size}, expected {n}")
    caps.check(n, lam.weight)
    space = space or VarSpace(n)
    return trace_operator(schur_in_powersums(lam), _hamiltonian_word(a, matrix_id), space)


def wick_pair(f: NormalOp, g: FockPoly) -> Fraction:
    """<f g>: apply f (its Zdag slots as derivatives) to g and read off the vacuum part."""
    if f.space != g.space:
        raise ValueError("variable-space mismatch")
    return Fraction(f.apply(g).constant_term())
