"""Minkowski events as 2x2 Hermitian matrices (Penrose coordinates)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

from .config import get_tolerances
from .errors import NotHermitian
from .matrix2 import Matrix2C


@dataclass(frozen=True, slots=True)
class MinkowskiEvent:
    x0: float
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"event coordinate {name}={value!r} is not finite")
            object.__setattr__(self, name, value)

    @classmethod
    def from_sequence(cls, xs) -> MinkowskiEvent:
        xs = list(xs)
        if len(xs) != 4:
            raise ValueError(f"an event has 4 coordinates, got {len(xs)}")
        return cls(*xs)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def spatial(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def euclidean_norm_sq(self) -> float:
        return self.x0 ** 2 + self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2

    def __add__(self, other: MinkowskiEvent) -> MinkowskiEvent:
        return MinkowskiEvent(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: MinkowskiEvent) -> MinkowskiEvent:
        return MinkowskiEvent(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __mul__(self, c: float) -> MinkowskiEvent:
        return MinkowskiEvent(*(c * a for a in self.as_tuple()))

    __rmul__ = __mul__


@dataclass(frozen=True, slots=True)
class CausalClass:
    """Causal character of an event relative to the origin.

    ``future`` is True/False for timelike and null events with nonzero time
    component, and None for spacelike events and the origin itself.
    """

    kind: Literal["timelike", "null", "spacelike"]
    future: Optional[bool] = None


def event_to_matrix(e: MinkowskiEvent) -> Matrix2C:
    """[[x0 + x1, x2 - i x3], [x2 + i x3, x0 - x1]]."""
    return Matrix2C(
        complex(e.x0 + e.x1, 0.0),
        complex(e.x2, -e.x3),
        complex(e.x2, e.x3),
        complex(e.x0 - e.x1, 0.0),
    )


def matrix_to_event(m: Matrix2C, tol: float | None = None) -> MinkowskiEvent:
    """Invert :func:`event_to_matrix` on the Hermitian part of ``m``.

    Raises :class:`NotHermitian` when the Frobenius norm of ``m - m*`` exceeds
    ``tol`` (default: the active hermitian tolerance).
    """
    if tol is None:
        tol = get_tolerances().hermitian
    defect = m.hermiticity_defect()
    if defect > tol:
        raise NotHermitian(f"|M - M*| = {defect:.3e} exceeds {tol:.3e}")
    h = m.hermitian_part()
    rho_plus, rho_minus, w = h.m11.real, h.m22.real, h.m21
    return MinkowskiEvent(
        (rho_plus + rho_minus) / 2,
        (rho_plus - rho_minus) / 2,
        w.real,
        w.imag,
    )


def pseudometric(e: MinkowskiEvent) -> float:
    """x0^2 - (x1^2 + x2^2 + x3^2)."""
    return e.x0 * e.x0 - (e.x1 * e.x1 + e.x2 * e.x2 + e.x3 * e.x3)


def causal_class(e: MinkowskiEvent, tol: float | None = None) -> CausalClass:
    if tol is None:
        tol = 1e-12 * (1.0 + e.euclidean_norm_sq())
    q = pseudometric(e)
    future = None if e.x0 == 0 else e.x0 > 0
    if q > tol:
        return CausalClass("timelike", future)
    if q < -tol:
        return CausalClass("spacelike", None)
    return CausalClass("null", future)
