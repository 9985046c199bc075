from .families import (
    LineFamily,
    Transversal,
    subsumed,
    is_seriating,
    build_seriating,
    boundary_ring,
    family_between,
    family_concat,
    family_split,
    reseriate,
    family_from_seriating,
    grid_family,
)
from .paths import GridPath, SegmentClass, crossing_rows, catenate, minimal_segment_count
from .areas import (
    LatticeArea,
    area_from_cells,
    area_union,
    area_split,
    area_from_ring,
    crossing_boundary,
    theta_nesting,
    triple_point_check,
    vertex_id,
    vertex_rc,
)
from .fivemap import AdjacencyReport, five_map_check

__all__ = [
    "LineFamily", "Transversal", "subsumed", "is_seriating", "build_seriating",
    "boundary_ring", "family_between", "family_concat", "family_split",
    "reseriate", "family_from_seriating", "grid_family",
    "GridPath", "SegmentClass", "crossing_rows", "catenate", "minimal_segment_count",
    "LatticeArea", "area_from_cells", "area_union", "area_split", "area_from_ring",
    "crossing_boundary", "theta_nesting", "triple_point_check", "vertex_id", "vertex_rc",
    "AdjacencyReport", "five_map_check",
]
