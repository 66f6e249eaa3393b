"""The N^2-oscillator algebra: Fock polynomials, normal-ordered Hamiltonians, Wick pairing."""
from .fock import FockPoly, VarSpace, Z, Zdag, monomial_basis
from .normal import (
    DEFAULT_CAPS,
    Caps,
    NormalOp,
    apply_normal_op,
    build_powersum_hamiltonian,
    build_schur_hamiltonian,
    trace_operator,
    wick_pair,
)
from .verify import (
    PreconditionError,
    VerificationReport,
    commutator_residual,
    genmmn_eigenvalue,
    verify_commutator,
    verify_lemma_L1,
    verify_mmn_eigen,
    verify_schur_pairing,
    verify_star,
    verify_three_point_action,
)

__all__ = [
    "Caps", "DEFAULT_CAPS", "FockPoly", "NormalOp", "PreconditionError", "VarSpace",
    "VerificationReport", "Z", "Zdag", "apply_normal_op", "build_powersum_hamiltonian",
    "build_schur_hamiltonian", "commutator_residual", "genmmn_eigenvalue", "monomial_basis",
    "trace_operator", "verify_commutator", "verify_lemma_L1", "verify_mmn_eigen",
    "verify_schur_pairing", "verify_star", "verify_three_point_action", "wick_pair",
]
