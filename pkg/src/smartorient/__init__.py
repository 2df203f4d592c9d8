"""On-line transitive reorientation of pseudo-transitive ographs.

Vertices arrive one at a time with their arrows to earlier vertices; the
engine keeps a strict partial order on the same comparability graph and
never revises a pair it has already emitted.
"""

from .engine import SmartReorienter, smart_extend, smart_extend_step, smart_reorient, smart_reorient_stream
from .errors import (
    InvariantError,
    ParseError,
    PseudoTransitivityError,
    ResourceGuardError,
    Violation,
    ViolationError,
)
from .ograph import (
    ExtensionDelta,
    Ght,
    OGraph,
    Orientation,
    Rel,
    check_ght,
    delta_is_pseudo_transitive,
    is_pseudo_transitive,
)
from .predicates import check_lambda, check_phi, check_psi, check_sigma, check_theta, is_lazy

__version__ = "0.1.0"

__all__ = [
    "ExtensionDelta",
    "Ght",
    "InvariantError",
    "OGraph",
    "Orientation",
    "ParseError",
    "PseudoTransitivityError",
    "Rel",
    "ResourceGuardError",
    "SmartReorienter",
    "Violation",
    "ViolationError",
    "check_ght",
    "check_lambda",
    "check_phi",
    "check_psi",
    "check_sigma",
    "check_theta",
    "delta_is_pseudo_transitive",
    "is_lazy",
    "is_pseudo_transitive",
    "smart_extend",
    "smart_extend_step",
    "smart_reorient",
    "smart_reorient_stream",
]
