"""Exact-arithmetic calculator for twisted Leibniz-Rinehart structure.

Everything runs over the rationals with zero tolerance: axiom validation,
root and weight decompositions against a chosen abelian subalgebra,
connection partitions, class ideals, and mechanical verification of the
decomposition and simplicity statements on concrete instances.
"""

from .claims import CLAIM_TITLES, ClaimResult, FAIL, INFO, PASS, REFUSED, title
from .connections import (
    ConnectionPartition,
    brute_force_root_connected,
    brute_force_weight_connected,
    root_partition,
    roots_connected,
    validate_root_chain,
    validate_weight_chain,
    weight_partition,
    weights_connected,
)
from .decomposition import (
    DecompositionReport,
    build_root_ideal,
    build_weight_ideal,
    enumerate_ideals,
    run_decomposition,
    simplicity_check,
)
from .fileio import (
    ParseError,
    canonical_dumps,
    dumps_algebra,
    from_document,
    load_algebra,
    loads_algebra,
    save_algebra,
    to_document,
)
from .linalg import Subspace
from .model import (
    CheckResult,
    FiberClosureError,
    HLRAlgebra,
    InputError,
    JReport,
    RELAXED,
    STRICT,
    TwistError,
    ValidationReport,
    annihilator_Z,
    center_ZA,
    check_morphism,
    compute_J,
    fiber_product,
    ideal_closure,
    is_ideal,
    sub_algebra,
    twist_by_endomorphism,
    validate_hlr,
)
from .roots import (
    CartanError,
    RootDecomposition,
    WeightDecomposition,
    root_decomposition,
    verify_lemma_closures,
    weight_decomposition,
)
from .structure import (
    StructureReport,
    j_split,
    run_structure,
    structure_profile,
    verify_cor_5_13,
    verify_theorem_5_12,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIM_TITLES",
    "CartanError",
    "CheckResult",
    "ClaimResult",
    "ConnectionPartition",
    "DecompositionReport",
    "FAIL",
    "FiberClosureError",
    "HLRAlgebra",
    "INFO",
    "InputError",
    "JReport",
    "PASS",
    "ParseError",
    "REFUSED",
    "RELAXED",
    "RootDecomposition",
    "STRICT",
    "StructureReport",
    "Subspace",
    "TwistError",
    "ValidationReport",
    "WeightDecomposition",
    "annihilator_Z",
    "brute_force_root_connected",
    "brute_force_weight_connected",
    "build_root_ideal",
    "build_weight_ideal",
    "canonical_dumps",
    "center_ZA",
    "check_morphism",
    "compute_J",
    "dumps_algebra",
    "enumerate_ideals",
    "fiber_product",
    "from_document",
    "ideal_closure",
    "is_ideal",
    "j_split",
    "load_algebra",
    "loads_algebra",
    "root_decomposition",
    "root_partition",
    "roots_connected",
    "run_decomposition",
    "run_structure",
    "save_algebra",
    "simplicity_check",
    "structure_profile",
    "sub_algebra",
    "title",
    "to_document",
    "twist_by_endomorphism",
    "validate_hlr",
    "validate_root_chain",
    "validate_weight_chain",
    "verify_cor_5_13",
    "verify_lemma_closures",
    "verify_theorem_5_12",
    "weight_decomposition",
    "weight_partition",
    "weights_connected",
]
