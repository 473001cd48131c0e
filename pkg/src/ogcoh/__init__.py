"""Exact rational cohomology of the singular symplectic varieties M and K."""

from .algebra import AlgebraMorphism, PresentedAlgebra, hilbert_function, morphism_matrix
from .blockmap import BlockMap, DecomposedSpace, RankInterval, Summand
from .bounds import BettiReport, betti_bounds, theorem_check
from .graded import (GradedDims, bundle_dims, exterior_invariants_abelian, goettsche_k3_hilb2,
                     sym_square_invariants)
from .linalg import RationalMatrix
from .spectral import SpectralPage, assemble_e1, euler_characteristic, verify_d1_surjective
from .towers import betti_tables, fact_ledger, local_model_suite, omega_tower, sigma_tower

__version__ = "0.1.0"

__all__ = [
    "AlgebraMorphism", "PresentedAlgebra", "hilbert_function", "morphism_matrix",
    "BlockMap", "DecomposedSpace", "RankInterval", "Summand",
    "BettiReport", "betti_bounds", "theorem_check",
    "GradedDims", "bundle_dims", "exterior_invariants_abelian", "goettsche_k3_hilb2",
    "sym_square_invariants", "RationalMatrix",
    "SpectralPage", "assemble_e1", "euler_characteristic", "verify_d1_surjective",
    "betti_tables", "fact_ledger", "local_model_suite", "omega_tower", "sigma_tower",
]
