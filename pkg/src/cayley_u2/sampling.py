"""Random samplers used by the CLI and the test-suite.

All samplers take a :class:`numpy.random.Generator` so that results are
reproducible from a seed.
"""
from __future__ import annotations

import math

import numpy as np

from .boundary import ExtendedComplex, inverse_stereographic, x0_of_alpha
from .matrix2 import Matrix2C
from .rays import LightRay
from .spacetime import MinkowskiEvent


def random_event(rng: np.random.Generator, scale: float = 10.0) -> MinkowskiEvent:
    return MinkowskiEvent(*rng.uniform(-scale, scale, 4))


def random_hermitian(rng: np.random.Generator, scale: float = 10.0) -> Matrix2C:
    """Hermitian matrix with real and imaginary parts of each entry in [-scale, scale]."""
    a, d, br, bi = rng.uniform(-scale, scale, 4)
    return Matrix2C(a, complex(br, bi), complex(br, -bi), d)


def random_sphere_point(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_z(rng: np.random.Generator) -> ExtendedComplex:
    """A point of the Riemann sphere, uniform for the round metric."""
    return inverse_stereographic(random_sphere_point(rng))


def random_cone_x0(rng: np.random.Generator) -> float:
    """x0 with alpha uniform on (-pi, pi), excluding the vertex x0 = 0."""
    while True:
        x0 = x0_of_alpha(rng.uniform(-math.pi, math.pi))
        if x0 != 0 and math.isfinite(x0):
            return x0


def random_unitary(rng: np.random.Generator) -> Matrix2C:
    """Haar-distributed U(2) element (QR of a complex Ginibre matrix)."""
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return Matrix2C.from_array(q * (d / np.abs(d)))


def random_su2(rng: np.random.Generator) -> Matrix2C:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    u, v = complex(q[0], q[1]), complex(q[2], q[3])
    return Matrix2C(u, v, -v.conjugate(), u.conjugate())


def random_sl2c(rng: np.random.Generator, max_norm: float = 10.0) -> Matrix2C:
    """Gaussian matrix scaled by the principal square root of its determinant.

    Rejection keeps the Frobenius norm at most ``max_norm``.
    """
    while True:
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        if abs(det) < 1e-3:
            continue
        t = Matrix2C.from_array(a / np.sqrt(det))
        if t.frobenius() <= max_norm:
            return t


def random_ray(rng: np.random.Generator, offset_scale: float = 1.0) -> LightRay:
    return LightRay(tuple(rng.uniform(-offset_scale, offset_scale, 3)),
                    tuple(random_sphere_point(rng)))
