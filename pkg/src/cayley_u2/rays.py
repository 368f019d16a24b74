"""Light rays and where the Cayley transform sends them as t -> infinity.

For the ray X(t) = (0, x) + t (1, v) with |v| = 1, write omega = x.v,
z = v1 + i omega and nu = v2 + i v3.  Then

    sigma(X(t)) -> (1 / (1 + i omega)) [[z, conj(nu)], [nu, -conj(z)]]

with determinant (omega + i) / (omega - i).  The limit has eigenvalue 1, so
it lies on the closure of the light cone at infinity, and it is on the bubble
exactly when omega = 0.  The error decays like 1/t; that rate is checked
empirically, not claimed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cayley import cayley
from .errors import DegenerateDirection
from .matrix2 import Matrix2C
from .spacetime import MinkowskiEvent, event_to_matrix


@dataclass(frozen=True)
class LightRay:
    x: tuple[float, float, float]
    v: tuple[float, float, float]

    def __post_init__(self):
        x = tuple(float(c) for c in self.x)
        v = tuple(float(c) for c in self.v)
        if len(x) != 3 or len(v) != 3:
            raise ValueError("offset and direction are 3-vectors")
        if not all(math.isfinite(c) for c in x + v):
            raise ValueError("ray data must be finite")
        norm = math.sqrt(sum(c * c for c in v))
        if abs(norm - 1) > 1e-12:
            raise ValueError(f"direction must be a unit vector, |v| = {norm!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "v", v)

    @classmethod
    def normalized(cls, x, v) -> LightRay:
        v = np.asarray(v, dtype=float)
        n = np.linalg.norm(v)
        if n == 0:
            raise ValueError("zero direction")
        return cls(tuple(x), tuple(v / n))

    @property
    def omega(self) -> float:
        return sum(a * b for a, b in zip(self.x, self.v))


def ray_at(r: LightRay, t: float) -> MinkowskiEvent:
    return MinkowskiEvent(t, *(a + t * b for a, b in zip(r.x, r.v)))


def ray_limit(r: LightRay) -> Matrix2C:
    w = r.omega
    v1, v2, v3 = r.v
    z = complex(v1, w)
    nu = complex(v2, v3)
    return Matrix2C(z, nu.conjugate(), nu, -z.conjugate()) / complex(1, w)


def limit_determinant(omega: float) -> complex:
    """(omega + i) / (omega - i)."""
    return complex(omega, 1) / complex(omega, -1)


def distance_to_limit(r: LightRay, t: float) -> float:
    return cayley(event_to_matrix(ray_at(r, t))).distance(ray_limit(r))


def convergence_table(r: LightRay, ts) -> list[tuple[float, float]]:
    limit = ray_limit(r)
    return [(float(t), cayley(event_to_matrix(ray_at(r, t))).distance(limit)) for t in ts]


def decay_slope(r: LightRay, ts=(1e3, 1e4, 1e5, 1e6)) -> float:
    """Least-squares slope of log distance against log t."""
    table = convergence_table(r, ts)
    lt = np.log([t for t, _ in table])
    ld = np.log([d for _, d in table])
    return float(np.polyfit(lt, ld, 1)[0])


def _line_coefficient(r: LightRay, tol: float) -> complex:
    v1, v2, v3 = r.v
    if abs(1 - v1) <= tol:
        raise DegenerateDirection("direction (1, 0, 0): every such ray ends at u = 1, v = 0")
    return complex(v2, -v3) / (1 - v1)


def end_line(r: LightRay, u: complex, tol: float = 1e-12) -> complex:
    """v-coordinate on the line v = (conj(nu) / (1 - v1)) (1 - u).

    Every ray with direction ``r.v`` (any offset) has a limit whose first row
    (u, v) lies on this complex line.
    """
    return _line_coefficient(r, tol) * (1 - complex(u))


def end_circle(r: LightRay, re_u: float, tol: float = 1e-12) -> tuple[complex, ...]:
    """Points u = re_u + i b of the line that also satisfy |u|^2 + |v|^2 = 1.

    Solves the quadratic for b and returns both roots (one if they coincide,
    none if ``re_u`` is off the circle).
    """
    k = abs(_line_coefficient(r, tol)) ** 2
    a = float(re_u)
    rhs = (1 - a * a - k * (1 - a) ** 2) / (1 + k)
    if rhs < -tol:
        return ()
    b = math.sqrt(max(rhs, 0.0))
    if b == 0:
        return (complex(a, 0.0),)
    return (complex(a, b), complex(a, -b))
