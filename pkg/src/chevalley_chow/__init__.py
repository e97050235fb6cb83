"""Picard groups, Neron-Severi groups and Chow presentations of connected
algebraic groups and their homogeneous spaces, computed exactly from finite
descriptors (root datum + abelian variety invariants + anti-affine gluing).
"""

from .chow import (
    FormalPicardZero,
    GradedPresentation,
    HomogeneousNSReport,
    HomogeneousPicardReport,
    PicardReport,
    chow_presentation,
    homogeneous_ns,
    homogeneous_picard,
    homogeneous_rational_chow,
    ns_group,
    picard_group,
    rational_chow,
)
from .descriptors import (
    AbelianVarietyData,
    AntiAffineGluing,
    GroupDescriptor,
    SubgroupDescriptor,
    ValidationReport,
    derived_attributes,
    validate_group,
    validate_subgroup,
)
from .errors import (
    ChevalleyChowError,
    DegreeTooLarge,
    DescriptorSyntaxError,
    GroupTooLarge,
    ModeUnsupported,
    SchemaError,
)
from .formats import DescriptorDocument, emit_report, parse_descriptor
from .invariants import linear_poly, poly_mul, truncated_quotient
from .lattice import FGAbelianGroup, IntMatrix, Presentation
from .rootdata import (
    RootDatum,
    characters_of_group,
    factorial_cover_datum,
    flag_picard_map,
    root_system,
    validate_root_datum,
    weyl_group,
)
from .schubert import (
    SchubertExpansion,
    chevalley_multiply,
    codegree_histogram,
    expand_in_schubert_basis,
    schubert_basis,
    schubert_product,
    schubert_representatives,
)
from .structure import (
    AffinizationReport,
    FibrationReport,
    Verdict,
    affine_test,
    affinization_test,
    albanese_split_test,
    completeness_test,
    construct_cover,
    fibration_report,
    phi_local_triviality_test,
)

__all__ = [
    "AbelianVarietyData",
    "AffinizationReport",
    "AntiAffineGluing",
    "ChevalleyChowError",
    "DegreeTooLarge",
    "DescriptorDocument",
    "DescriptorSyntaxError",
    "FGAbelianGroup",
    "FibrationReport",
    "FormalPicardZero",
    "GradedPresentation",
    "GroupDescriptor",
    "GroupTooLarge",
    "HomogeneousNSReport",
    "HomogeneousPicardReport",
    "IntMatrix",
    "ModeUnsupported",
    "PicardReport",
    "Presentation",
    "RootDatum",
    "SchemaError",
    "SchubertExpansion",
    "SubgroupDescriptor",
    "ValidationReport",
    "Verdict",
    "affine_test",
    "affinization_test",
    "albanese_split_test",
    "characters_of_group",
    "chevalley_multiply",
    "chow_presentation",
    "codegree_histogram",
    "completeness_test",
    "construct_cover",
    "derived_attributes",
    "emit_report",
    "expand_in_schubert_basis",
    "factorial_cover_datum",
    "fibration_report",
    "flag_picard_map",
    "homogeneous_ns",
    "homogeneous_picard",
    "homogeneous_rational_chow",
    "linear_poly",
    "ns_group",
    "parse_descriptor",
    "phi_local_triviality_test",
    "picard_group",
    "poly_mul",
    "rational_chow",
    "root_system",
    "schubert_basis",
    "schubert_product",
    "schubert_representatives",
    "truncated_quotient",
    "validate_group",
    "validate_root_datum",
    "validate_subgroup",
    "weyl_group",
]

__version__ = "1.0.0"
