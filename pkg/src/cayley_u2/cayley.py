"""The Cayley transform M -> (M - i)(M + i)^-1 and the stratification of U(2).

U(2) splits into three disjoint pieces:

* the interior, the image of Minkowski space under the transform (unitaries
  without eigenvalue 1);
* the light cone at infinity (eigenvalue 1, other eigenvalue not -1);
* the bubble, a two-sphere of unitaries with spectrum {+1, -1}.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional

from .config import get_tolerances
from .errors import NotHermitian, NotUnitary, OnBoundary
from .matrix2 import IDENTITY, Matrix2C
from .spacetime import MinkowskiEvent, matrix_to_event

_I = Matrix2C.scalar(1j)


class Stratum(str, enum.Enum):
    INTERIOR = "interior"
    LIGHTCONE_INFINITY = "lightcone_infinity"
    BUBBLE = "bubble"


@dataclass(frozen=True, slots=True)
class StratumLabel:
    stratum: Stratum
    event: Optional[MinkowskiEvent] = None

    def __post_init__(self):
        if (self.stratum is Stratum.INTERIOR) != (self.event is not None):
            raise ValueError("exactly the interior stratum carries an event")


@dataclass(frozen=True, slots=True)
class UnitaryDecomposition:
    """U = [[u, v], [-lam * conj(v), lam * conj(u)]] with |u|^2 + |v|^2 = 1, lam = exp(i alpha)."""

    u: complex
    v: complex
    lam: complex
    alpha: float

    def to_matrix(self) -> Matrix2C:
        return Matrix2C(self.u, self.v,
                        -self.lam * self.v.conjugate(), self.lam * self.u.conjugate())


def _require_hermitian(m: Matrix2C, tol: float | None) -> None:
    if tol is None:
        tol = get_tolerances().hermitian
    defect = m.hermiticity_defect()
    if defect > tol:
        raise NotHermitian(f"|M - M*| = {defect:.3e} exceeds {tol:.3e}")


def require_unitary(u: Matrix2C, tol: float | None = None) -> None:
    if tol is None:
        tol = get_tolerances().unitary
    defect = u.unitarity_defect()
    if defect > tol:
        raise NotUnitary(f"|U*U - 1| = {defect:.3e} exceeds {tol:.3e}")


def cayley(m: Matrix2C, tol: float | None = None) -> Matrix2C:
    """sigma(M) = (M - i)(M + i)^-1 for Hermitian M."""
    _require_hermitian(m, tol)
    return (m - _I) @ (m + _I).inverse()


def cayley_inverse(u: Matrix2C, tol: float | None = None,
                   eigtol: float | None = None) -> Matrix2C:
    """i (1 + U)(1 - U)^-1, defined when 1 is not an eigenvalue of U."""
    require_unitary(u, tol)
    if eigtol is None:
        eigtol = get_tolerances().eigen
    one_minus = IDENTITY - u
    d = abs(one_minus.det())
    if d <= eigtol:
        raise OnBoundary(f"|det(U - 1)| = {d:.3e} <= {eigtol:.3e}: 1 is an eigenvalue")
    return ((IDENTITY + u) @ one_minus.inverse()) * 1j


def trace_det_identity_residual(u: Matrix2C) -> float:
    """|Tr U - 1 - det U|; vanishes exactly on the eigenvalue-1 locus."""
    return abs(u.trace() - 1 - u.det())


def classify_stratum(u: Matrix2C, tol: float | None = None,
                     eigtol: float | None = None) -> StratumLabel:
    require_unitary(u, tol)
    if eigtol is None:
        eigtol = get_tolerances().eigen
    if trace_det_identity_residual(u) > eigtol:
        event = matrix_to_event(cayley_inverse(u, tol, eigtol), tol=math.inf)
        return StratumLabel(Stratum.INTERIOR, event)
    # one eigenvalue is 1, so the other equals det U
    if abs(u.det() + 1) <= eigtol:
        return StratumLabel(Stratum.BUBBLE)
    return StratumLabel(Stratum.LIGHTCONE_INFINITY)


def decompose_unitary(u: Matrix2C, tol: float | None = None) -> UnitaryDecomposition:
    require_unitary(u, tol)
    d = u.det()
    lam = d / abs(d)
    alpha = cmath.phase(lam)
    if alpha <= -math.pi:
        alpha = math.pi
    return UnitaryDecomposition(u.m11, u.m12, lam, alpha)
