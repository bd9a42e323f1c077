"""Exact-arithmetic library for labeled rational polytopes, the
combinatorial data classifying symplectic toric orbifolds."""

from .bundle import (
    BundleData,
    SimplexTwist,
    build_simplex_bundle,
    extract_twist,
    normalize_twist,
    recognize_bundle,
)
from .cohomology import (
    BundleRing,
    FHVector,
    ProductDecision,
    SRPresentation,
    betti_numbers,
    bundle_ring,
    fh_transform,
    find_product_generators,
    h_vector,
    is_ring_product,
    sr_presentation,
)
from .constructors import (
    SPData,
    WeightVector,
    football,
    labeled_projective_space,
    orbifold_projective_local_groups,
    product,
    simplex,
    weighted_projective_polytope,
    wps_labels,
    wps_slant,
)
from .errors import TorbError
from .labeled import (
    DelzantData,
    LabeledPolytope,
    SingularityProfile,
    delzant_data,
    equivalent,
    make_labeled,
    orbifold_group_of_face,
    singularity_profile,
    translate,
    unimodular_image,
    validate,
)
from .lattice import (
    FiniteAbelianGroup,
    SmithDecomposition,
    cokernel,
    lattice_basis_from_generators,
    smith_normal_form,
)
from .polytope import (
    Halfspace,
    HPolytope,
    VertexData,
    combinatorially_equivalent,
    enumerate_vertices,
    f_vector,
    factor_as_simplex_product,
    volume,
)
from .quotient import (
    TorusSubgroup,
    cover_polytope,
    quotient_polytope,
    subgroup_of_cover,
    subgroup_order,
)

__version__ = "0.1.0"

__all__ = [
    "BundleData",
    "BundleRing",
    "DelzantData",
    "FHVector",
    "FiniteAbelianGroup",
    "Halfspace",
    "HPolytope",
    "LabeledPolytope",
    "ProductDecision",
    "SPData",
    "SRPresentation",
    "SimplexTwist",
    "SingularityProfile",
    "SmithDecomposition",
    "TorbError",
    "TorusSubgroup",
    "VertexData",
    "WeightVector",
    "betti_numbers",
    "build_simplex_bundle",
    "bundle_ring",
    "cokernel",
    "combinatorially_equivalent",
    "cover_polytope",
    "delzant_data",
    "enumerate_vertices",
    "equivalent",
    "extract_twist",
    "f_vector",
    "factor_as_simplex_product",
    "fh_transform",
    "find_product_generators",
    "football",
    "h_vector",
    "is_ring_product",
    "labeled_projective_space",
    "lattice_basis_from_generators",
    "make_labeled",
    "normalize_twist",
    "orbifold_group_of_face",
    "orbifold_projective_local_groups",
    "product",
    "quotient_polytope",
    "recognize_bundle",
    "simplex",
    "singularity_profile",
    "smith_normal_form",
    "sr_presentation",
    "subgroup_of_cover",
    "subgroup_order",
    "translate",
    "unimodular_image",
    "validate",
    "volume",
    "weighted_projective_polytope",
    "wps_labels",
    "wps_slant",
]
