"""Motives of toric varieties from fan combinatorics, in exact integer arithmetic."""

from .cellularity import (
    CellularityCertificate,
    OrbitGraph,
    Status,
    certify_cellular,
    hilbert_basis,
    regular_vector_search,
    singular_locus_graph,
    star_shaped_test,
    star_shaping_set,
)
from .fan import (
    Fan,
    FanProfile,
    cone_multiplicity,
    dual_cone,
    is_smooth_cone,
    minimal_singular_cones,
    validate_fan,
)
from .homology import (
    FGAbelianGroup,
    GradedGroups,
    cellular_bm_homology,
    normalize_group,
    surface_bm_homology,
    tree_exceptional_homology,
)
from .lattice import (
    det2,
    hj_expand,
    primitive,
    smith_normal_form,
)
from .motive import (
    Motive,
    MotiveSummand,
    assemble_motive,
    cellular_motive,
    cofiber_diagnostic,
    curve_motive,
    exceptional_motive,
    is_pure_tate,
    toric_surface_motive,
)
from .resolution import (
    ExceptionalModel,
    ResolutionResult,
    resolve_cone_2d,
    resolve_fan_2d,
)

__version__ = "0.1.0"

__all__ = [
    "CellularityCertificate",
    "OrbitGraph",
    "Status",
    "certify_cellular",
    "hilbert_basis",
    "regular_vector_search",
    "singular_locus_graph",
    "star_shaped_test",
    "star_shaping_set",
    "Fan",
    "FanProfile",
    "cone_multiplicity",
    "dual_cone",
    "is_smooth_cone",
    "minimal_singular_cones",
    "validate_fan",
    "FGAbelianGroup",
    "GradedGroups",
    "cellular_bm_homology",
    "normalize_group",
    "surface_bm_homology",
    "tree_exceptional_homology",
    "det2",
    "hj_expand",
    "primitive",
    "smith_normal_form",
    "Motive",
    "MotiveSummand",
    "assemble_motive",
    "cellular_motive",
    "cofiber_diagnostic",
    "curve_motive",
    "exceptional_motive",
    "is_pure_tate",
    "toric_surface_motive",
    "ExceptionalModel",
    "ResolutionResult",
    "resolve_cone_2d",
    "resolve_fan_2d",
]
