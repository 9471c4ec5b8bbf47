from .distance import distance, require_hyperbolic
from .edge_conflict import edge_conflict
from .existence import existence
from .incone import incone, trisector
from .insphere import classify_tangent_planes, insphere
from .order import order, order_trace
from .shadow import shadow

__all__ = [
    "classify_tangent_planes",
    "distance",
    "edge_conflict",
    "existence",
    "incone",
    "insphere",
    "order",
    "order_trace",
    "require_hyperbolic",
    "shadow",
    "trisector",
]
