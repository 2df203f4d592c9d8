"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass

VIOLATION_KINDS = frozenset({
    "pseudo_transitivity",
    "transitivity",
    "reorientation",
    "phi",
    "psi",
    "theta",
    "sigma",
    "lazy",
    "lambda",
    "s_overlap",
    "internal",
})


@dataclass(frozen=True)
class Violation:
    """A failed property together with the vertices that exhibit the failure."""

    kind: str
    witnesses: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in VIOLATION_KINDS:
            raise ValueError(f"unknown violation kind {self.kind!r}")
        object.__setattr__(self, "witnesses", tuple(self.witnesses))

    def __str__(self):
        return f"{self.kind} " + " ".join(map(str, self.witnesses))


class ViolationError(Exception):
    """Raised when an operation cannot proceed because a property fails."""

    def __init__(self, violation: Violation, message: str | None = None):
        super().__init__(message or f"{violation.kind} violated at {list(violation.witnesses)}")
        self.violation = violation


class PseudoTransitivityError(ViolationError):
    pass


class InvariantError(ViolationError):
    """An internal invariant broke; with valid inputs this signals a bug."""


class ResourceGuardError(RuntimeError):
    """An exhaustive routine was asked for an instance above its size guard."""


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno
