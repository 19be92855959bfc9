"""Exception hierarchy shared by every laq sub-package."""

from __future__ import annotations

from typing import Any, Mapping, Optional


class LAQError(RuntimeError):
    """Raised when an engine precondition is violated."""

    def __init__(self, message: str, *, witness: Optional[Mapping[str, Any]] = None) -> None:
        super().__init__(message)
        self.witness = dict(witness or {})


class ContainmentViolation(LAQError):
    """A subspace (or vector) is not contained where it must be."""


class AmbientMismatch(LAQError):
    """Two subspaces or vectors live in ambient spaces of different dimension."""


class FrameMismatch(LAQError):
    """Exterior-algebra elements or derivations over different frames were combined."""


class DegreeMismatch(LAQError):
    """A derivation has the wrong degree for the requested operation."""


class IndexOutOfRange(LAQError):
    """A face/degeneracy index or level is outside its admissible range."""


class WindowTooSmall(LAQError):
    """A double-complex window cannot certify the requested degrees."""


class ActionNotCompatible(LAQError):
    """The vectors fixed by action data do not form a subcomplex."""


class ActionInvalid(LAQError):
    """A group or groupoid action on a bundle violates its axioms."""


class EmptySet(LAQError):
    """A construction that needs a non-empty set was given none."""


class JacobiError(LAQError):
    """Structure constants violating the Jacobi identity were refused."""


class NotValidated(LAQError):
    """A structure failed the validation an operation requires."""

    def __init__(self, message: str, *, result: Any = None) -> None:
        failure = getattr(result, "failure", None)
        super().__init__(message, witness=getattr(failure, "witness", None))
        self.result = result


class IdentityViolationError(LAQError):
    """An assembled double complex broke δ² = 0, ψ² = 0 or ψδ = δψ."""


class ModelParseError(LAQError):
    """A model document could not be parsed; carries a position."""

    def __init__(
        self,
        message: str,
        *,
        line: Optional[int] = None,
        column: Optional[int] = None,
        path: Optional[str] = None,
    ) -> None:
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if path:
            location.append(f"at {path}")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}", witness={"line": line, "column": column, "path": path})
        self.line = line
        self.column = column
        self.path = path


__all__ = [
    "LAQError",
    "ContainmentViolation",
    "AmbientMismatch",
    "FrameMismatch",
    "DegreeMismatch",
    "IndexOutOfRange",
    "WindowTooSmall",
    "ActionNotCompatible",
    "ActionInvalid",
    "EmptySet",
    "JacobiError",
    "NotValidated",
    "IdentityViolationError",
    "ModelParseError",
]
