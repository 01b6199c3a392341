"""Exceptions raised across planeauto.

Every error derives from ``PlaneAutoError`` so the command line can map whole
families of failures onto exit codes.
"""
from __future__ import annotations

from typing import Any, Optional, Sequence


class PlaneAutoError(Exception):
    """Base class for all planeauto errors."""

    def __init__(self, message: str, **data: Any):
        super().__init__(message)
        self.message = message
        self.data = data

    def to_dict(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message}


class InvalidInput(PlaneAutoError):
    """Malformed user input: bad map JSON, field descriptions or flags."""


class SpecMismatch(PlaneAutoError):
    """Operands live over different fields."""


class DivisionByZero(PlaneAutoError, ZeroDivisionError):
    pass


class RootIsolationError(PlaneAutoError):
    """The embedding root of a minimal polynomial could not be isolated."""


class PolySyntaxError(InvalidInput):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", position=position)
        self.position = position
        self.text = text


class ResourceCapExceeded(PlaneAutoError):
    """A configured resource cap (exponents, terms, grid size, unknowns) was hit."""

    def __init__(self, message: str, cap: str, limit: Any = None):
        super().__init__(message, cap=cap, limit=limit)
        self.cap = cap
        self.limit = limit


class NotAnAutomorphism(PlaneAutoError):
    pass


class NotLoxodromic(PlaneAutoError):
    pass


class FieldExtensionNeeded(PlaneAutoError):
    """An exact root outside the current field is required.

    ``minpoly`` is the suggested monic integer minimal polynomial, lowest
    coefficient first.
    """

    def __init__(self, message: str, minpoly: Optional[Sequence[int]] = None):
        super().__init__(message, minpoly=list(minpoly) if minpoly else None)
        self.minpoly = list(minpoly) if minpoly else None

    def to_dict(self) -> dict[str, Any]:
        return super().to_dict() | {"minpoly": self.minpoly}


class ReducibleRadical(PlaneAutoError):
    def __init__(self, message: str, factors: Sequence[Sequence[int]] = ()):
        super().__init__(message, factors=[list(f) for f in factors])
        self.factors = [list(f) for f in factors]


class InvalidEscapeRadius(PlaneAutoError):
    pass


class NonFiniteInput(PlaneAutoError):
    pass


class IllConditionedCluster(PlaneAutoError):
    pass


class UndecidedAtCap(PlaneAutoError):
    """A Gröbner computation stopped at a cap; this is never a refutation."""

    def __init__(self, message: str, cap: str, limit: Any = None):
        super().__init__(message, cap=cap, limit=limit)
        self.cap = cap
        self.limit = limit


class NotConjugacyPair(NotLoxodromic):
    """f or g is elliptic, so the pair is outside the conjugacy search."""
