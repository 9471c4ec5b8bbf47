from .audit import SignTest, degree_audit_report, record, recording
from .linalg import cross, det, dot, norm2, replace_column
from .quadext import QuadExtScalar, sign_of_quadext
from .sign import Sign, sign_of
from .tagged import DegreeTagged

__all__ = [
    "DegreeTagged",
    "QuadExtScalar",
    "Sign",
    "SignTest",
    "cross",
    "degree_audit_report",
    "det",
    "dot",
    "norm2",
    "record",
    "recording",
    "replace_column",
    "sign_of",
    "sign_of_quadext",
]
