"""Exact heights of pencils of projective hypersurfaces.

Closed-form stable Griffiths heights, GIT semistability tests for
hypersurface forms, and fully concrete GIT heights for pencils of binary
cubics and quartics over the projective line.  Every computation is exact
rational arithmetic; nothing is floating point.
"""
from .algebra import (
    HomPoly2,
    MultiForm,
    UniPoly,
    binary_form,
    format_rat,
    gcd_hompoly2,
    gcd_unipoly,
    rat,
    resultant_binary,
    squarefree_decomposition,
)
from .coeffs import check_f_equals_fstab, classify_equality_case, f_stab, g, w
from .git_binary import (
    BinaryPencil,
    GitHeightReport,
    fiber_semistability_profile,
    git_height,
    invariant_cubic_disc,
    invariants_quartic,
    verify_contact_identity,
)
from .pencils import (
    HeightReport,
    PencilDescriptor,
    SingularFiberRecord,
    full_report,
    generization_condition,
    genericity_bound,
    ht_gk_stab,
    ht_int,
    singularity_budget_check,
    upper_bound_verdict,
)
from .semistability import (
    SingularityProfile,
    Stability,
    StabilityVerdict,
    binary_semistable,
    criteria_engine,
    destabilizing_weight_by_enumeration,
    hm_weight,
    torus_semistable,
    torus_status_by_enumeration,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryPencil",
    "GitHeightReport",
    "HeightReport",
    "HomPoly2",
    "MultiForm",
    "PencilDescriptor",
    "SingularFiberRecord",
    "SingularityProfile",
    "Stability",
    "StabilityVerdict",
    "UniPoly",
    "binary_form",
    "binary_semistable",
    "check_f_equals_fstab",
    "classify_equality_case",
    "criteria_engine",
    "destabilizing_weight_by_enumeration",
    "f_stab",
    "fiber_semistability_profile",
    "format_rat",
    "full_report",
    "g",
    "gcd_hompoly2",
    "gcd_unipoly",
    "generization_condition",
    "genericity_bound",
    "git_height",
    "hm_weight",
    "ht_gk_stab",
    "ht_int",
    "invariant_cubic_disc",
    "invariants_quartic",
    "rat",
    "resultant_binary",
    "singularity_budget_check",
    "squarefree_decomposition",
    "torus_semistable",
    "torus_status_by_enumeration",
    "upper_bound_verdict",
    "verify_contact_identity",
    "w",
]
