"""Exact checks of the operator identities, each returning a VerificationReport.

All checks compare exact polynomials or exact scalars; a report's status is
``"exact-zero"`` when the residual vanishes identically and ``"mismatch"``
otherwise.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence

import numpy as np

from .. import _kernels
from ..characters import character, dim_over_factorial
from ..exactcore import CapacityError, Partition, enumerate_partitions, format_scalar, zeta
from ..hurwitz import three_point_sphere
from ..matrices import ExactMatrix, rank, solve_combination
from ..symfunc import evaluate_at_matrix, powersum_monomial, schur_in_powersums
from .fock import FockPoly, VarSpace, Z, Zdag, monomial_basis, substitute_powersums, sym_mul
from .normal import (
    DEFAULT_CAPS,
    Caps,
    NormalOp,
    build_powersum_hamiltonian,
    trace_operator,
    wick_pair,
)

__all__ = [
    "PreconditionError",
    "VerificationReport",
    "commutator_residual",
    "verify_commutator",
    "verify_lemma_L1",
    "verify_mmn_eigen",
    "verify_schur_pairing",
    "verify_star",
    "verify_three_point_action",
]

_INT64_SAFE = float(2**62)


class PreconditionError(ValueError):
    """Inputs violate a stated precondition of the identity being checked."""


@dataclass
class VerificationReport:
    identity: str
    parameters: dict
    status: str
    residual_terms: int
    elapsed_ms: float
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "exact-zero"

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "parameters": self.parameters,
            "status": self.status,
            "residual_terms": self.residual_terms,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        out["details"] = self.details
        return out


def _report(identity, parameters, residual_terms, t0, details=None) -> VerificationReport:
    status = "exact-zero" if residual_terms == 0 else "mismatch"
    return VerificationReport(identity, parameters, status, residual_terms,
                              (time.perf_counter() - t0) * 1000.0, details or {})


def _fmt(x) -> str:
    return format_scalar(x)


def _mat(m: ExactMatrix) -> list:
    return m.to_json()


def _same_size(*mats: ExactMatrix) -> int:
    sizes = {m.size for m in mats}
    if len(sizes) != 1:
        raise PreconditionError(f"matrix sizes differ: {sorted(sizes)}")
    return sizes.pop()


def genmmn_eigenvalue(delta: Partition, lam: Partition) -> Fraction:
    """(dim lam / |lam|!)^-1 chi_lam(delta)."""
    return character(lam, delta) / dim_over_factorial(lam)


# -- commutators ---------------------------------------------------------------

def _integer_matrix(columns: list[dict], size: int) -> np.ndarray:
    den = 1
    for col in columns:
        for c in col.values():
            den = lcm(den, Fraction(c).denominator)
    out = np.zeros((size, size), dtype=object)
    for j, col in enumerate(columns):
        for i, c in col.items():
            out[i, j] = int(Fraction(c) * den)
    return out


def commutator_residual(op_a: NormalOp, op_b: NormalOp, degree: int) -> int:
    """Nonzero entries of [op_a, op_b] on the degree-``degree`` monomial basis.

    Both graded matrices are scaled to integers (scaling cannot change which
    entries vanish). The int64 kernel runs only when an entrywise bound on
    both products stays below 2**62; otherwise exact Python ints are used.
    """
    basis, cols_a = op_a.graded_matrix(degree)
    _, cols_b = op_b.graded_matrix(degree)
    size = len(basis)
    ma, mb = _integer_matrix(cols_a, size), _integer_matrix(cols_b, size)
    fa, fb = np.abs(ma.astype(float)), np.abs(mb.astype(float))
    bound = max(float((fa @ fb).max(initial=0.0)), float((fb @ fa).max(initial=0.0)),
                float(fa.max(initial=0.0)), float(fb.max(initial=0.0)))
    if bound < _INT64_SAFE:
        return _kernels.int_commutator_nnz(ma.astype(np.int64), mb.astype(np.int64))
    return int(np.count_nonzero(ma @ mb - mb @ ma))


def verify_commutator(mu: Iterable[int], nu: Iterable[int], a: ExactMatrix, b: ExactMatrix,
                      n: int, dmax: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """[:p_mu(Zdag Z A):, :p_nu(Zdag Z B):] on every monomial of degree <= dmax."""
    t0 = time.perf_counter()
    mu, nu = Partition(mu), Partition(nu)
    if _same_size(a, b) != n:
        raise PreconditionError(f"matrices have size {a.size}, expected {n}")
    space = VarSpace(n)
    largest = len(monomial_basis(space, dmax)) if dmax >= 0 else 0
    if largest > caps.max_basis:
        raise CapacityError(f"degree-{dmax} basis has {largest} monomials (cap {caps.max_basis})")
    h_mu = build_powersum_hamiltonian(mu, a, n, caps=caps)
    h_nu = build_powersum_hamiltonian(nu, b, n, caps=caps)
    per_degree = {}
    for d in range(dmax + 1):
        per_degree[d] = 0 if d < max(mu.weight, nu.weight) else commutator_residual(h_mu, h_nu, d)
    claim = "claimed" if b == ExactMatrix.identity(n) or b == a else "exploratory"
    params = {"mu": str(mu), "nu": str(nu), "size": n, "dmax": dmax, "A": _mat(a), "B": _mat(b)}
    details = {"claim": claim, "backend": _kernels.backend(),
               "residual_by_degree": {str(k): v for k, v in per_degree.items()},
               "operator_terms": [len(h_mu), len(h_nu)]}
    return _report("commute", params, sum(per_degree.values()), t0, details)


# -- Wick / gluing lemmas --------------------------------------------------------

def _fock(f, word, space) -> FockPoly:
    return FockPoly.from_word(f, word, space)


def verify_lemma_L1(mu1: Iterable[int], mu2: Iterable[int], f: ExactMatrix, c: ExactMatrix,
                    caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """<p_mu1(Zdag F) p_mu2(Z C)> / (zeta zeta) == sum_nu H(mu1, mu2, nu) p_nu(F C)."""
    t0 = time.perf_counter()
    mu1, mu2 = Partition(mu1), Partition(mu2)
    n = _same_size(f, c)
    caps.check(n, max(mu1.weight, mu2.weight))
    space = VarSpace(n)
    pairing = wick_pair(trace_operator(powersum_monomial(mu1), [Zdag(), f], space),
                        _fock(powersum_monomial(mu2), [Z(), c], space))
    lhs = pairing / (zeta(mu1) * zeta(mu2))
    rhs = Fraction(0)
    coefficients = {}
    if mu1.weight == mu2.weight:
        fc = f @ c
        for nu in enumerate_partitions(mu1.weight):
            h = three_point_sphere(mu1, mu2, nu)
            if h:
                coefficients[str(nu)] = _fmt(h)
                rhs += h * evaluate_at_matrix(powersum_monomial(nu), fc)
    params = {"mu1": str(mu1), "mu2": str(mu2), "size": n, "F": _mat(f), "C": _mat(c)}
    details = {"lhs": _fmt(lhs), "rhs": _fmt(rhs), "difference": _fmt(lhs - rhs),
               "hurwitz_coefficients": coefficients}
    return _report("l1", params, int(lhs != rhs), t0, details)


def verify_schur_pairing(lam: Iterable[int], mu: Iterable[int], c: ExactMatrix, f: ExactMatrix,
                         caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """<s_lam(Z C) s_mu(Zdag F)> == delta(lam, mu) |lam|! s_lam(C F) / dim lam."""
    t0 = time.perf_counter()
    lam, mu = Partition(lam), Partition(mu)
    n = _same_size(c, f)
    caps.check(n, max(lam.weight, mu.weight))
    space = VarSpace(n)
    lhs = wick_pair(trace_operator(schur_in_powersums(mu), [Zdag(), f], space),
                    _fock(schur_in_powersums(lam), [Z(), c], space))
    rhs = Fraction(0)
    if lam == mu:
        rhs = evaluate_at_matrix(schur_in_powersums(lam), c @ f) / dim_over_factorial(lam)
    params = {"lambda": str(lam), "mu": str(mu), "size": n, "C": _mat(c), "F": _mat(f)}
    details = {"lhs": _fmt(lhs), "rhs": _fmt(rhs), "difference": _fmt(lhs - rhs)}
    return _report("schur-pair", params, int(lhs != rhs), t0, details)


# -- Hamiltonian actions ---------------------------------------------------------

def verify_three_point_action(delta: Iterable[int], nu: Iterable[int], a: ExactMatrix,
                              c: ExactMatrix, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """:p_D(Zdag Z A): p_nu(Z C) / (zeta_D zeta_nu) == sum_mu H(D, nu, mu) p_mu(Z A C).

    With N >= |D| the p_mu(Z A C) are checked for independence and the
    coefficients are also extracted and compared one by one.
    """
    t0 = time.perf_counter()
    delta, nu = Partition(delta), Partition(nu)
    if delta.weight != nu.weight:
        raise PreconditionError(f"|{delta}| = {delta.weight} differs from |{nu}| = {nu.weight}")
    n = _same_size(a, c)
    d = delta.weight
    space = VarSpace(n)
    h = build_powersum_hamiltonian(delta, a, n, caps=caps)
    lhs = h(_fock(powersum_monomial(nu), [Z(), c], space)).scale(Fraction(1, zeta(delta) * zeta(nu)))
    mus = enumerate_partitions(d)
    basis = [_fock(powersum_monomial(m), [Z(), a, c], space) for m in mus]
    expected = [three_point_sphere(delta, nu, m) for m in mus]
    rhs = FockPoly(space)
    for coeff, poly in zip(expected, basis):
        rhs = rhs + poly.scale(coeff)
    residual = lhs - rhs
    details = {"normalization": "1/(zeta_D zeta_nu) on the left; H with (dim/d!)^2",
               "expected_coefficients": {str(m): _fmt(x) for m, x in zip(mus, expected)}}
    mismatched = len(residual)
    independent = n >= d and rank([p.terms for p in basis]) == len(basis)
    if independent:
        details["mode"] = "coefficient"
        found = solve_combination([p.terms for p in basis], lhs.terms)
        if found is None:
            details["extracted_coefficients"] = None
            mismatched = max(mismatched, 1)
        else:
            details["extracted_coefficients"] = {str(m): _fmt(x) for m, x in zip(mus, found)}
            mismatched += sum(1 for x, y in zip(found, expected) if x != y)
    else:
        details["mode"] = "evaluated"
    params = {"delta": str(delta), "nu": str(nu), "size": n, "A": _mat(a), "C": _mat(c)}
    return _report("three-point", params, mismatched, t0, details)


def verify_mmn_eigen(delta: Iterable[int], lam: Iterable[int], a: ExactMatrix, c: ExactMatrix,
                     caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """:p_D(Zdag Z A): s_lam(Z C) == E s_lam(Z C) with E = (dim/|lam|!)^-1 chi_lam(D), given A C = C."""
    t0 = time.perf_counter()
    delta, lam = Partition(delta), Partition(lam)
    n = _same_size(a, c)
    if a @ c != c:
        raise PreconditionError("A C != C")
    if delta.weight != lam.weight:
        raise PreconditionError(f"|{delta}| = {delta.weight} differs from |{lam}| = {lam.weight}")
    if n < len(lam):
        raise PreconditionError(f"N = {n} is smaller than the length of {lam}")
    space = VarSpace(n)
    h = build_powersum_hamiltonian(delta, a, n, caps=caps)
    f = _fock(schur_in_powersums(lam), [Z(), c], space)
    image = h(f)
    e = genmmn_eigenvalue(delta, lam)
    residual = image - f.scale(e)
    measured = image.ratio_to(f) if f else None
    params = {"delta": str(delta), "lambda": str(lam), "size": n, "A": _mat(a), "C": _mat(c)}
    details = {"eigenvalue": _fmt(e),
               "measured_eigenvalue": None if measured is None else _fmt(measured),
               "eigenfunction_vanishes": not f, "eigenfunction_terms": len(f)}
    return _report("mmn", params, len(residual), t0, details)


def verify_star(n_legs: int, mus: Sequence[Iterable[int]], a_list: Sequence[ExactMatrix],
                c_list: Sequence[ExactMatrix], lam: Iterable[int],
                caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """:prod_i p_mu_i(Z_i A_i Zdag_i): s_lam(Z_1 C_1 ... Z_n C_n) vs s_lam(Z_1 A_1 C_1 ... Z_n A_n C_n).

    The scale factor is measured. It is compared with the product of the
    single-leg eigenvalues (the check's pass criterion) and with the
    alternative prefactor (dim lam/|lam|!)^(+1) prod chi.
    """
    t0 = time.perf_counter()
    lam = Partition(lam)
    mus = [Partition(m) for m in mus]
    if not (len(mus) == len(a_list) == len(c_list) == n_legs) or n_legs < 1:
        raise PreconditionError("need one partition, one A and one C per leg")
    n = _same_size(*a_list, *c_list)
    for m in mus:
        if m.weight != lam.weight:
            raise PreconditionError(f"|{m}| = {m.weight} differs from |{lam}| = {lam.weight}")
    caps.check(n, lam.weight * n_legs)
    space = VarSpace(n, n_legs)
    width = 2 * space.n_vars
    symbol = {(0,) * width: 1}
    for i, (m, a) in enumerate(zip(mus, a_list)):
        symbol = sym_mul(symbol, substitute_powersums(powersum_monomial(m), [Z(i), a, Zdag(i)], space, width))
    op = NormalOp.from_symbol(space, symbol)
    schur = schur_in_powersums(lam)
    source_word, target_word = [], []
    for i, (a, c) in enumerate(zip(a_list, c_list)):
        source_word += [Z(i), c]
        target_word += [Z(i), a, c]
    source = _fock(schur, source_word, space)
    target = _fock(schur, target_word, space)
    image = op(source)
    legs = [genmmn_eigenvalue(m, lam) for m in mus]
    predicted = Fraction(1)
    for x in legs:
        predicted *= x
    positive_power = dim_over_factorial(lam)
    for m in mus:
        positive_power *= character(lam, m)
    measured = image.ratio_to(target) if target else None
    residual = image - target.scale(predicted)
    params = {"legs": n_legs, "mus": [str(m) for m in mus], "lambda": str(lam), "size": n,
              "A": [_mat(a) for a in a_list], "C": [_mat(c) for c in c_list]}
    details = {
        "per_leg_eigenvalues": [_fmt(x) for x in legs],
        "predicted_prefactor": _fmt(predicted),
        "positive_power_prefactor": _fmt(positive_power),
        "measured_prefactor": None if measured is None else _fmt(measured),
        "matches_positive_power": measured is not None and measured == positive_power,
        "eigen_form": all(a @ c == c for a, c in zip(a_list, c_list)),
        "target_vanishes": not target,
    }
    return _report("star", params, len(residual), t0, details)
