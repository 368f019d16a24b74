"""The light cone, its image at infinity and the bubble.

Conventions
-----------
The complex coordinate of R^3 = R x C is the off-diagonal entry ``x2 - i x3``
of the Penrose matrix, so the light-cone point over ``z`` has ``z`` (not its
conjugate) in its upper-right corner and ``(z, 1)`` is the eigenvector of the
associated projection.

The angle of a cone point is ``alpha = 2 atan(2 x0)``, the argument of
``det sigma_perp(x0, z) = (1 + 2i x0) / (1 - 2i x0)``.  Hence
``x0 = tan(alpha / 2) / 2`` and ``sigma_perp = exp(i alpha P) = 1 - beta P``
with ``beta = 1 - exp(i alpha)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import scipy.linalg

from .cayley import Stratum, cayley, classify_stratum
from .config import get_tolerances
from .errors import NotOnBoundary
from .matrix2 import EPSILON, IDENTITY, Matrix2C
from .spacetime import MinkowskiEvent, event_to_matrix


@dataclass(frozen=True, slots=True)
class ExtendedComplex:
    """A point of the Riemann sphere; ``value is None`` is the point at infinity."""

    value: complex | None

    def __post_init__(self):
        if self.value is not None:
            z = complex(self.value)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError("use ExtendedComplex.infinity() for the point at infinity")
            object.__setattr__(self, "value", z)

    @classmethod
    def infinity(cls) -> ExtendedComplex:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __repr__(self):
        return "ExtendedComplex(inf)" if self.value is None else f"ExtendedComplex({self.value})"


INFINITY = ExtendedComplex.infinity()
ZLike = Union[ExtendedComplex, complex, float, int, str, None]


def as_extended(z: ZLike) -> ExtendedComplex:
    """Coerce a number, ``None``/``"inf"`` or an :class:`ExtendedComplex`."""
    if isinstance(z, ExtendedComplex):
        return z
    if z is None or (isinstance(z, str) and z.lower() in ("inf", "infinity")):
        return INFINITY
    if isinstance(z, str):
        return ExtendedComplex(complex(z.replace(" ", "")))
    z = complex(z)
    if cmath.isinf(z):
        return INFINITY
    return ExtendedComplex(z)


@dataclass(frozen=True, slots=True)
class Vertex:
    """The collapsed point {0} x C+ of the cone; maps to the identity."""


@dataclass(frozen=True, slots=True)
class Cone:
    x0: float
    z: ExtendedComplex

    def __post_init__(self):
        x0 = float(self.x0)
        if x0 == 0 or not math.isfinite(x0):
            raise ValueError("a cone coordinate needs finite nonzero x0")
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "z", as_extended(self.z))


@dataclass(frozen=True, slots=True)
class BubblePoint:
    """x0 at infinity (a single point of the compactified line) over ``z``."""

    z: ExtendedComplex

    def __post_init__(self):
        object.__setattr__(self, "z", as_extended(self.z))


BoundaryCoordinate = Union[Vertex, Cone, BubblePoint]


@dataclass(frozen=True, slots=True)
class ProjectionPoint:
    """A rank-one orthogonal projection (trace one, determinant zero)."""

    P: Matrix2C

    def check(self, tol: float = 1e-10) -> bool:
        p = self.P
        return (p.is_projection(tol) and abs(p.trace() - 1) <= tol
                and abs(p.det()) <= tol)


# --- the cone -----------------------------------------------------------------


def stereographic(z: ZLike) -> tuple[float, float, float]:
    """s(z) = (|z|^2 - 1, 2z) / (1 + |z|^2) written as (s1, Re w, -Im w).

    The last two components are the Penrose spatial coordinates (x2, x3) whose
    off-diagonal entry ``x2 - i x3`` is ``w = 2z / (1 + |z|^2)``.
    """
    z = as_extended(z)
    if z.is_infinite:
        return (1.0, 0.0, 0.0)
    zv = z.value
    r = abs(zv)
    if r <= 1:
        d = 1 + r * r
        s1 = (r * r - 1) / d
        w = 2 * zv / d
    else:
        # divide through by |z|^2 to avoid overflow for huge |z|
        rinv = 1 / r
        d = 1 + rinv * rinv
        s1 = (1 - rinv * rinv) / d
        w = 2 * (zv / r) * rinv / d
    return (s1, w.real, -w.imag)


def inverse_stereographic(s) -> ExtendedComplex:
    """Inverse of :func:`stereographic` on the unit sphere."""
    s1, s2, s3 = (float(c) for c in s)
    if s1 >= 1:
        return INFINITY
    # w = 2z/(1+|z|^2) and 1 - s1 = 2/(1+|z|^2)  =>  z = w / (1 - s1)
    return ExtendedComplex(complex(s2, -s3) / (1 - s1))


def lightcone_point(x0: float, z: ZLike) -> Matrix2C:
    """M0(x0, z) = event_to_matrix((x0, x0 s(z))), a null Hermitian matrix."""
    s = stereographic(z)
    return event_to_matrix(MinkowskiEvent(x0, x0 * s[0], x0 * s[1], x0 * s[2]))


def sigma_perp(x0: float, z: ZLike) -> Matrix2C:
    """(1 + i M0)(1 - i M0)^-1 = -cayley(M0(x0, z))."""
    return -cayley(lightcone_point(x0, z))


# --- the bubble -----------------------------------------------------------------


def bubble_v(z: ZLike) -> Matrix2C:
    """V(z): Hermitian, traceless, V^2 = 1; V(0) = -eps and V(inf) = eps."""
    z = as_extended(z)
    if z.is_infinite:
        return EPSILON
    zv = z.value
    r = abs(zv)
    if r <= 1:
        d = 1 + r * r
        a = (r * r - 1) / d
        w = 2 * zv / d
    else:
        rinv = 1 / r
        d = 1 + rinv * rinv
        a = (1 - rinv * rinv) / d
        w = 2 * (zv / r) * rinv / d
    return Matrix2C(a, w, w.conjugate(), -a)


def projection_at(z: ZLike) -> ProjectionPoint:
    """P = (1 + V(z)) / 2, the projection onto the line through (z, 1)."""
    return ProjectionPoint((IDENTITY + bubble_v(z)) * 0.5)


def alpha_of(x0: float) -> float:
    """arg det sigma_perp(x0, .) = 2 atan(2 x0), in (-pi, pi); +-inf give +-pi."""
    return 2 * math.atan(2 * x0)


def x0_of_alpha(alpha: float) -> float:
    """Inverse of :func:`alpha_of`: x0 = tan(alpha / 2) / 2."""
    return math.tan(alpha / 2) / 2


def beta_of(x0: float) -> complex:
    """beta = 1 - exp(i alpha) = -4i x0 / (1 - 2i x0), so sigma_perp = 1 - beta P."""
    return -4j * x0 / (1 - 2j * x0)


def exp_form(x0: float, z: ZLike) -> Matrix2C:
    """sigma_perp(x0, z) evaluated as the matrix exponential of i alpha P.

    Computed with :func:`scipy.linalg.expm` so it is independent of the
    rational formula in :func:`sigma_perp`.
    """
    p = projection_at(z).P.to_array()
    return Matrix2C.from_array(scipy.linalg.expm(1j * alpha_of(x0) * p))


def projection_form(x0: float, z: ZLike) -> Matrix2C:
    """sigma_perp(x0, z) evaluated as 1 - beta P."""
    return IDENTITY - projection_at(z).P * beta_of(x0)


# --- charts on the closure of the light cone at infinity ------------------------


def boundary_point(coord: BoundaryCoordinate) -> Matrix2C:
    """The extended embedding of the compactified cone onto the eigenvalue-1 locus."""
    if isinstance(coord, Vertex):
        return IDENTITY
    if isinstance(coord, Cone):
        return sigma_perp(coord.x0, coord.z)
    if isinstance(coord, BubblePoint):
        return -bubble_v(coord.z)
    raise TypeError(f"not a boundary coordinate: {coord!r}")


def _line_of_projection(p: Matrix2C) -> ExtendedComplex:
    # P is rank one, so each nonzero column spans its image; take the longer one
    c1 = (p.m11, p.m21)
    c2 = (p.m12, p.m22)
    n1 = abs(c1[0]) ** 2 + abs(c1[1]) ** 2
    n2 = abs(c2[0]) ** 2 + abs(c2[1]) ** 2
    e1, e2 = c1 if n1 >= n2 else c2
    if abs(e2) < 1e-12 * abs(e1):
        return INFINITY
    return ExtendedComplex(e1 / e2)


def boundary_coordinates(u: Matrix2C, tol: float | None = None,
                         eigtol: float | None = None) -> BoundaryCoordinate:
    """Invert :func:`boundary_point` on a unitary with eigenvalue 1."""
    if eigtol is None:
        eigtol = get_tolerances().eigen
    label = classify_stratum(u, tol, eigtol)
    if label.stratum is Stratum.INTERIOR:
        raise NotOnBoundary("unitary lies in the image of the Cayley transform")
    if label.stratum is Stratum.BUBBLE:
        # U = -V(z) = 1 - 2P
        return BubblePoint(_line_of_projection((IDENTITY - u) * 0.5))
    if u.distance(IDENTITY) <= eigtol:
        return Vertex()
    lam = u.det()
    alpha = cmath.phase(lam / abs(lam))
    beta = 1 - cmath.exp(1j * alpha)
    p = (IDENTITY - u) / beta
    return Cone(x0_of_alpha(alpha), _line_of_projection(p))


def lightcone_matrix_k_form(x0: float, z: complex) -> Matrix2C:
    """The chart k [[|z|, u], [conj(u), 1/|z|]] with u = z/|z|, k = 2 x0 / (|z| + 1/|z|).

    Singular at z = 0 and z = inf; :func:`lightcone_point` is the total chart.
    """
    z = complex(z)
    r = abs(z)
    if r == 0:
        raise ZeroDivisionError("the k-chart is singular at z = 0")
    u = z / r
    k = 2 * x0 / (r + 1 / r)
    return Matrix2C(k * r, k * u, k * u.conjugate(), k / r)
