from .inversion import (
    Barred,
    barred,
    check_not_contained,
    checked_barred,
    det,
    invert_point,
    orient3d,
    reduce_and_invert,
    select_pole,
)
from .tangent_system import TangentSystem, build_system, shifted_system, system_from_barred

__all__ = [
    "Barred",
    "TangentSystem",
    "barred",
    "build_system",
    "check_not_contained",
    "checked_barred",
    "det",
    "invert_point",
    "orient3d",
    "reduce_and_invert",
    "select_pole",
    "shifted_system",
    "system_from_barred",
]
