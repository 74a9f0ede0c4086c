"""Constructive verifiers for the clean/r-clean theorems."""
from .registry import THEOREM_IDS, VerifyOptions, central_idempotent_atoms, run_theorem
from .report import (
    OUTCOME_COUNTEREXAMPLE,
    OUTCOME_NOT_APPLICABLE,
    OUTCOME_VERIFIED,
    HypothesisCheck,
    ReportBuilder,
    VerifyReport,
)
from .transfers import (
    SqrtWitness,
    check_rclean_witness,
    check_sqrt_witness,
    rclean_from_sqrt,
    sqrt_decompose,
    sqrt_from_rclean,
    transfer_one_minus_x,
    two_inverse,
)
from .verifiers import (
    assemble_pierce,
    group_ring_c2_iso,
    project_triangular,
    verify_clean_from_rclean,
    verify_factor,
    verify_factor_all_principal,
    verify_jacobson_rclean,
    verify_local_corollary,
    verify_matrix_ring,
    verify_one_minus_x,
    verify_orthogonal_idempotent_clean,
    verify_orthogonal_set,
    verify_pierce_all,
    verify_poly_lemma,
    verify_product,
    verify_semiperfect_group_ring,
    verify_sqrt_characterization,
    verify_triangular_n,
    verify_x_not_rclean,
)

__all__ = [
    "THEOREM_IDS",
    "VerifyOptions",
    "VerifyReport",
    "HypothesisCheck",
    "ReportBuilder",
    "SqrtWitness",
    "OUTCOME_VERIFIED",
    "OUTCOME_NOT_APPLICABLE",
    "OUTCOME_COUNTEREXAMPLE",
    "assemble_pierce",
    "central_idempotent_atoms",
    "check_rclean_witness",
    "check_sqrt_witness",
    "group_ring_c2_iso",
    "project_triangular",
    "rclean_from_sqrt",
    "run_theorem",
    "sqrt_decompose",
    "sqrt_from_rclean",
    "transfer_one_minus_x",
    "two_inverse",
    "verify_clean_from_rclean",
    "verify_factor",
    "verify_factor_all_principal",
    "verify_jacobson_rclean",
    "verify_local_corollary",
    "verify_matrix_ring",
    "verify_one_minus_x",
    "verify_orthogonal_idempotent_clean",
    "verify_orthogonal_set",
    "verify_pierce_all",
    "verify_poly_lemma",
    "verify_product",
    "verify_semiperfect_group_ring",
    "verify_sqrt_characterization",
    "verify_triangular_n",
    "verify_x_not_rclean",
]
