"""Verdict records shared by every validation and checking routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional


def jsonable(value: Any) -> Any:
    """Convert witness payloads (fractions, tuples, dataclass-ish values) to JSON-native data."""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return str(value)


@dataclass(frozen=True)
class Failure:
    """A named check that did not hold, with the elements that witness it."""

    check: str
    message: str
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": type(self).__name__,
            "check": self.check,
            "message": self.message,
            "witness": jsonable(self.witness),
        }


class JacobiFailure(Failure):
    """Jacobi identity defect on an index triple."""


class MorphismFailure(Failure):
    """A linear map does not intertwine brackets on some basis pair."""


class HomologicalFailure(Failure):
    """A degree +1 derivation does not square to zero on some generator."""


class AxiomFailure(Failure):
    """A groupoid axiom does not hold."""


class IdentityFailure(Failure):
    """A simplicial identity does not hold on some tuple."""


class LAFailure(Failure):
    """One of the LA-groupoid checks (a)-(d) does not hold."""


class RelatednessFailure(Failure):
    """Two homological fields are not related along a structure map."""


class IdentityViolation(Failure):
    """A double-complex identity does not hold on some block."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a check: ok, or a single failure record."""

    failure: Optional[Failure] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls()

    @classmethod
    def failed(cls, failure: Failure) -> "CheckResult":
        return cls(failure=failure)


__all__ = [
    "jsonable",
    "Failure",
    "JacobiFailure",
    "MorphismFailure",
    "HomologicalFailure",
    "AxiomFailure",
    "IdentityFailure",
    "LAFailure",
    "RelatednessFailure",
    "IdentityViolation",
    "CheckResult",
]
