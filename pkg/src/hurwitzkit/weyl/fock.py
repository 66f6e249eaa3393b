"""Fock polynomials in the oscillator variables Z[m][i, j].

One variable per slot (matrix id m, row i, column j). A monomial is a dense
exponent tuple of length ``space.n_vars``. The constant polynomial 1 is the
vacuum.

Operator symbols live in a doubled space: the first ``n_vars`` exponents
belong to the Z slots, the last ``n_vars`` to the Z-dagger slots. Plain
dicts mapping exponent tuples to coefficients are used for symbols to keep
the inner loops cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import add
from typing import Iterable, Iterator, Mapping, Sequence, Union

from ..exactcore import Number, exact, format_scalar
from ..matrices import ExactMatrix
from ..symfunc import PowerSumPoly

__all__ = ["FockPoly", "VarSpace", "Z", "Zdag", "monomial_basis"]

SymDict = dict


@dataclass(frozen=True)
class VarSpace:
    size: int
    n_matrices: int = 1

    def __post_init__(self):
        if self.size < 1 or self.n_matrices < 1:
            raise ValueError("VarSpace needs size >= 1 and at least one matrix")

    @property
    def n_vars(self) -> int:
        return self.n_matrices * self.size * self.size

    def index(self, m: int, i: int, j: int) -> int:
        n = self.size
        return (m * n + i) * n + j

    def slot(self, k: int) -> tuple[int, int, int]:
        n = self.size
        m, rest = divmod(k, n * n)
        return m, rest // n, rest % n

    @lru_cache(maxsize=None)
    def transpose_map(self) -> tuple[int, ...]:
        """k -> index of the slot with row and column swapped (same matrix)."""
        out = []
        for k in range(self.n_vars):
            m, i, j = self.slot(k)
            out.append(self.index(m, j, i))
        return tuple(out)

    def var_name(self, k: int) -> str:
        m, i, j = self.slot(k)
        prefix = "Z" if self.n_matrices == 1 else f"Z{m + 1}_"
        return f"{prefix}{i + 1}{j + 1}"


@dataclass(frozen=True)
class Z:
    """Word token: the matrix of creation variables of matrix ``m``."""
    m: int = 0


@dataclass(frozen=True)
class Zdag:
    """Word token: the matrix of annihilators, Zdag[i, j] pairing with Z[j, i]."""
    m: int = 0


Token = Union[Z, Zdag, ExactMatrix]


# -- dict polynomial helpers -------------------------------------------------

def sym_add(a: SymDict, b: SymDict, scale: Number = 1) -> SymDict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def sym_mul(a: SymDict, b: SymDict) -> SymDict:
    out: SymDict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(add, ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _unit(width: int, k: int) -> tuple[int, ...]:
    e = [0] * width
    e[k] = 1
    return tuple(e)


def token_matrix(token: Token, space: VarSpace, width: int) -> list[list[SymDict]]:
    n, zero = space.size, (0,) * width
    if isinstance(token, ExactMatrix):
        if token.size != n:
            raise ValueError(f"constant matrix of size {token.size} in a size-{n} word")
        return [[({zero: token[i, j]} if token[i, j] else {}) for j in range(n)] for i in range(n)]
    if isinstance(token, Z):
        return [[{_unit(width, space.index(token.m, i, j)): 1} for j in range(n)] for i in range(n)]
    if isinstance(token, Zdag):
        if width != 2 * space.n_vars:
            raise ValueError("Zdag tokens need the doubled symbol space")
        off = space.n_vars
        return [[{_unit(width, off + space.index(token.m, i, j)): 1} for j in range(n)] for i in range(n)]
    raise TypeError(f"unknown word token {token!r}")


def matmul_sym(a: list[list[SymDict]], b: list[list[SymDict]]) -> list[list[SymDict]]:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc: SymDict = {}
            for k in range(n):
                if a[i][k] and b[k][j]:
                    acc = sym_add(acc, sym_mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(row)
    return out


def word_matrix(word: Sequence[Token], space: VarSpace, width: int) -> list[list[SymDict]]:
    if not word:
        raise ValueError("empty matrix word")
    mats = [token_matrix(t, space, width) for t in word]
    acc = mats[0]
    for m in mats[1:]:
        acc = matmul_sym(acc, m)
    return acc


def trace_powers(mat: list[list[SymDict]], top: int) -> dict[int, SymDict]:
    """{k: tr(mat^k)} for k = 1..top."""
    out = {}
    power = mat
    for k in range(1, top + 1):
        if k > 1:
            power = matmul_sym(power, mat)
        acc: SymDict = {}
        for i in range(len(mat)):
            acc = sym_add(acc, power[i][i])
        out[k] = acc
    return out


def substitute_powersums(f: PowerSumPoly, word: Sequence[Token], space: VarSpace,
                         width: int) -> SymDict:
    """Replace p_k by tr(W^k) in f, multiplying commutatively."""
    top = max((max(m) for m in f.terms if m), default=0)
    traces = trace_powers(word_matrix(word, space, width), top) if top else {}
    one = {(0,) * width: 1}
    out: SymDict = {}
    cache: dict[tuple, SymDict] = {(): one}
    for mono, c in f.terms.items():
        key = tuple(mono)
        if key not in cache:
            acc = one
            for k in mono:
                acc = sym_mul(acc, traces[k])
            cache[key] = acc
        out = sym_add(out, cache[key], c)
    return out


# -- Fock polynomials ----------------------------------------------------------

class FockPoly:
    """Polynomial in the Z variables of a :class:`VarSpace`, exact coefficients."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VarSpace, terms: Mapping[tuple[int, ...], Number] | None = None):
        self.space = space
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != space.n_vars:
                raise ValueError("exponent length does not match the variable space")
            if c:
                clean[tuple(e)] = exact(c)
        self.terms = clean

    @classmethod
    def constant(cls, space: VarSpace, c: Number = 1) -> "FockPoly":
        return cls(space, {(0,) * space.n_vars: c})

    @classmethod
    def variable(cls, space: VarSpace, m: int, i: int, j: int) -> "FockPoly":
        return cls(space, {_unit(space.n_vars, space.index(m, i, j)): 1})

    @classmethod
    def from_word(cls, f: PowerSumPoly, word: Sequence[Token], space: VarSpace) -> "FockPoly":
        """f with p_k -> tr(W^k), W a product of Z tokens and constant matrices."""
        if any(isinstance(t, Zdag) for t in word):
            raise ValueError("Fock polynomials cannot contain Zdag")
        return cls(space, substitute_powersums(f, word, space, space.n_vars))

    def _check(self, other: "FockPoly") -> None:
        if other.space != self.space:
            raise ValueError(f"variable-space mismatch: {self.space} vs {other.space}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockPoly) and self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "FockPoly") -> "FockPoly":
        self._check(other)
        return FockPoly(self.space, sym_add(self.terms, other.terms))

    def __sub__(self, other: "FockPoly") -> "FockPoly":
        self._check(other)
        return FockPoly(self.space, sym_add(self.terms, other.terms, -1))

    def __neg__(self) -> "FockPoly":
        return self.scale(-1)

    def scale(self, c: Number) -> "FockPoly":
        return FockPoly(self.space, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return FockPoly(self.space, sym_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def constant_term(self) -> Number:
        return self.terms.get((0,) * self.space.n_vars, 0)

    def ratio_to(self, other: "FockPoly") -> Fraction | None:
        """The scalar c with self == c * other, or None if there is none."""
        self._check(other)
        if not other:
            return Fraction(0) if not self else None
        e, c = next(iter(other.terms.items()))
        ratio = Fraction(self.terms.get(e, 0)) / c
        return ratio if self == other.scale(ratio) else None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                self.space.var_name(k) + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p
            ) or "1"
            parts.append(f"{format_scalar(c)}*{mono}")
        return " + ".join(parts)


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def monomial_basis(space: VarSpace, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in a fixed order."""
    return list(_compositions(degree, space.n_vars))
