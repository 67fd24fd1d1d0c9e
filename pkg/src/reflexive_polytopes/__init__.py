"""Exact lattice polytopes, reflexive Delzant polygons, DH functions and toric extensions."""
from .catalog import named_polytope
from .classify import (
    AdmissibleQuadruple,
    ClassificationReport,
    DHFunction,
    Verdict,
    check_admissible,
    classify,
    dh_eval,
    dh_function,
    dh_polytope,
    enumerate_admissible,
)
from .enumeration import Atlas, build_atlas, enumerate_reflexive_polygons
from .extension import BlowUpSpec, blow_up, build_extension, height, project, verify_extension
from .lattice import (
    NormalForm,
    VertexWeights,
    edge_out_of_facet,
    gl_equivalent,
    is_delzant,
    is_integral,
    is_reflexive,
    is_smooth,
    normal_form,
    vertex_weights,
    weight_sum_holds,
)
from .polytope import (
    Edge,
    HalfSpace,
    Polytope,
    contains,
    edges,
    facet_of,
    from_halfspaces,
    from_vertices,
    interior_lattice_points,
    lattice_points,
)

__version__ = "0.1.0"
