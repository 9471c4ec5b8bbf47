from .evaluator import PREDICATES, EvalResult, PredicateEvaluator, PredicateSpec
from .fuzz import DEGREE_TARGETS, FuzzReport, FuzzService

__all__ = [
    "DEGREE_TARGETS",
    "PREDICATES",
    "EvalResult",
    "FuzzReport",
    "FuzzService",
    "PredicateEvaluator",
    "PredicateSpec",
]
