"""Almost contact B-metric structures on 3-dimensional Lie algebras.

Structure constants live in an adapted basis (E0, E1, E2) with E0 the Reeb
direction; the package classifies algebras into the basic classes F1, F4, F5,
F8, F9, F10, F11, builds canonical representatives, evaluates closed-form
matrix exponentials for the associated Lie groups, and arbitrates the printed
component/coefficient tables against independently derived oracles.
"""

from .algebra import (
    ETA,
    METRIC,
    PHI,
    SIGNS,
    JacobiReport,
    LeeForms,
    StructureConstants,
    bracket,
    change_basis,
    derived_dimensions,
    f_from_connection,
    f_from_structure,
    lee_forms,
    lee_forms_from_tensor,
    levi_civita,
    validate_jacobi,
)
from .classify import (
    BASIC_CLASSES,
    ClassProfile,
    ClassSignature,
    canonical_algebra,
    classify,
    constants_from_profile,
    extract_profile,
    profile_from_tensor,
    reconstruct_F,
    recover_parameters,
)
from .expgroups import (
    ExpCoefficients,
    FamilyViolationError,
    GroupSample,
    basis_matrices,
    closed_form_exp,
    reference_expm,
    spectral_exp,
    table1_coefficients,
    table1_matrix,
    verify_sample,
)
from .fixtures import (
    ExampleRecord,
    example_algebra,
    example_group_element,
    fixture_exp_consistency,
    rodrigues,
    skew,
)
from .verify import CLASS_BRANCHES, arbitrate_f_maps, run_verification

__version__ = "0.1.0"

__all__ = [
    "BASIC_CLASSES",
    "CLASS_BRANCHES",
    "ClassProfile",
    "ClassSignature",
    "ETA",
    "ExampleRecord",
    "ExpCoefficients",
    "FamilyViolationError",
    "GroupSample",
    "JacobiReport",
    "LeeForms",
    "METRIC",
    "PHI",
    "SIGNS",
    "StructureConstants",
    "arbitrate_f_maps",
    "basis_matrices",
    "bracket",
    "canonical_algebra",
    "change_basis",
    "classify",
    "closed_form_exp",
    "constants_from_profile",
    "derived_dimensions",
    "example_algebra",
    "example_group_element",
    "extract_profile",
    "f_from_connection",
    "f_from_structure",
    "fixture_exp_consistency",
    "lee_forms",
    "lee_forms_from_tensor",
    "levi_civita",
    "profile_from_tensor",
    "reconstruct_F",
    "recover_parameters",
    "reference_expm",
    "rodrigues",
    "run_verification",
    "skew",
    "spectral_exp",
    "table1_coefficients",
    "table1_matrix",
    "validate_jacobi",
    "verify_sample",
]
