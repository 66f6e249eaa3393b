"""Exact symmetric-group characters, Schur functions, Hurwitz numbers and
normal-ordered matrix-oscillator Hamiltonians."""
from .characters import CharacterTable, character, character_table, dimension, phi
from .exactcore import (
    CapacityError,
    ExactScalar,
    Partition,
    class_size,
    enumerate_partitions,
    format_scalar,
    parse_scalar,
    zeta,
)
from .hurwitz import (
    BranchingData,
    hurwitz_character,
    hurwitz_permutation_naive,
    hurwitz_permutation_oracle,
    riemann_hurwitz_euler,
    three_point_sphere,
)
from .matrices import ExactMatrix, fixed_space_pair, seeded_matrix
from .symfunc import (
    PowerSumPoly,
    cut_and_join_apply,
    evaluate_at_matrix,
    jacobi_trudi_schur,
    powersum_in_schur,
    powersum_monomial,
    schur_bialternant,
    schur_in_powersums,
)

__version__ = "0.1.0"
