from .config import settings
from .exceptions import (
    ApolloniusException,
    DegenerateConfiguration,
    InputError,
    OracleFailure,
    PreconditionViolation,
)

__all__ = [
    "settings",
    "ApolloniusException",
    "DegenerateConfiguration",
    "InputError",
    "OracleFailure",
    "PreconditionViolation",
]
