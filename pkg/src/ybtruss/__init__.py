"""Finite set-theoretic Yang-Baxter solutions and YB-semitrusses."""

from .errors import InputError, InvariantError, PreconditionError, ResourceError, YBError
from .semitruss import SemiTruss, associated_derived, associated_solution, opposite, verify_semitruss
from .solution import (
    Solution,
    are_isomorphic,
    check_ybe,
    classify,
    derived_solution,
    diagonal,
    inverse_solution,
    retract_solution,
)

__all__ = [
    "Solution", "SemiTruss", "check_ybe", "classify", "derived_solution", "inverse_solution",
    "diagonal", "are_isomorphic", "retract_solution", "verify_semitruss", "associated_solution",
    "associated_derived", "opposite", "YBError", "InputError", "PreconditionError",
    "ResourceError", "InvariantError",
]
