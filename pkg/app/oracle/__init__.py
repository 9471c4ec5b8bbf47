from .numeric import (
    build_trisector,
    common_tangent_planes,
    distance_numeric,
    edge_conflict_numeric,
    existence_numeric,
    incone_numeric,
    insphere_numeric,
    order_numeric,
    shadow_classify_numeric,
    shadow_on_trisector,
    tangent_spheres_numeric,
    trisector_numeric,
    trisector_sample,
    validate_edge,
    vertex_maps,
    vertex_maps_on,
)

__all__ = [
    "build_trisector",
    "common_tangent_planes",
    "distance_numeric",
    "edge_conflict_numeric",
    "existence_numeric",
    "incone_numeric",
    "insphere_numeric",
    "order_numeric",
    "shadow_classify_numeric",
    "shadow_on_trisector",
    "tangent_spheres_numeric",
    "trisector_numeric",
    "trisector_sample",
    "validate_edge",
    "vertex_maps",
    "vertex_maps_on",
]
