"""Closed-form 2x2 complex matrices.

Everything here is exact 2x2 arithmetic on Python complex scalars, which is
both faster than dispatching to numpy for a single matrix and keeps the
determinant/inverse formulas explicit.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np


def _check_finite(z: complex, name: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"matrix entry {name}={z!r} is not finite")


@dataclass(frozen=True, slots=True)
class Matrix2C:
    """The matrix [[m11, m12], [m21, m22]]."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22"):
            z = complex(getattr(self, name))
            _check_finite(z, name)
            object.__setattr__(self, name, z)

    # construction -----------------------------------------------------------

    @classmethod
    def identity(cls) -> Matrix2C:
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> Matrix2C:
        return cls(0, 0, 0, 0)

    @classmethod
    def diag(cls, a: complex, b: complex) -> Matrix2C:
        return cls(a, 0, 0, b)

    @classmethod
    def scalar(cls, c: complex) -> Matrix2C:
        return cls(c, 0, 0, c)

    @classmethod
    def from_array(cls, a) -> Matrix2C:
        a = np.asarray(a, dtype=complex)
        if a.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {a.shape}")
        return cls(a[0, 0], a[0, 1], a[1, 0], a[1, 1])

    def to_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.m11, self.m12, self.m21, self.m22)

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: Matrix2C) -> Matrix2C:
        if not isinstance(other, Matrix2C):
            return NotImplemented
        return Matrix2C(self.m11 + other.m11, self.m12 + other.m12,
                        self.m21 + other.m21, self.m22 + other.m22)

    def __sub__(self, other: Matrix2C) -> Matrix2C:
        if not isinstance(other, Matrix2C):
            return NotImplemented
        return Matrix2C(self.m11 - other.m11, self.m12 - other.m12,
                        self.m21 - other.m21, self.m22 - other.m22)

    def __neg__(self) -> Matrix2C:
        return Matrix2C(-self.m11, -self.m12, -self.m21, -self.m22)

    def __mul__(self, c) -> Matrix2C:
        if isinstance(c, Matrix2C):
            return NotImplemented
        c = complex(c)
        return Matrix2C(c * self.m11, c * self.m12, c * self.m21, c * self.m22)

    __rmul__ = __mul__

    def __truediv__(self, c) -> Matrix2C:
        return self * (1 / complex(c))

    def __matmul__(self, other: Matrix2C) -> Matrix2C:
        if not isinstance(other, Matrix2C):
            return NotImplemented
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Matrix2C(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def adjoint(self) -> Matrix2C:
        return Matrix2C(self.m11.conjugate(), self.m21.conjugate(),
                        self.m12.conjugate(), self.m22.conjugate())

    def conj(self) -> Matrix2C:
        return Matrix2C(self.m11.conjugate(), self.m12.conjugate(),
                        self.m21.conjugate(), self.m22.conjugate())

    def transpose(self) -> Matrix2C:
        return Matrix2C(self.m11, self.m21, self.m12, self.m22)

    def trace(self) -> complex:
        return self.m11 + self.m22

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> Matrix2C:
        d = self.det()
        if d == 0:
            raise ZeroDivisionError("singular 2x2 matrix")
        return Matrix2C(self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d)

    def apply(self, x: complex, y: complex) -> tuple[complex, complex]:
        """Matrix times the column vector (x, y)."""
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)

    # norms and predicates ---------------------------------------------------

    def frobenius(self) -> float:
        return math.sqrt(sum(abs(z) ** 2 for z in self.entries))

    def distance(self, other: Matrix2C) -> float:
        return (self - other).frobenius()

    def hermitian_part(self) -> Matrix2C:
        return (self + self.adjoint()) * 0.5

    def hermiticity_defect(self) -> float:
        return self.distance(self.adjoint())

    def unitarity_defect(self) -> float:
        return (self.adjoint() @ self).distance(IDENTITY)

    def is_hermitian(self, tol: float = 1e-9) -> bool:
        return self.hermiticity_defect() <= tol

    def is_unitary(self, tol: float = 1e-9) -> bool:
        return self.unitarity_defect() <= tol

    def is_projection(self, tol: float = 1e-9) -> bool:
        return self.is_hermitian(tol) and (self @ self).distance(self) <= tol

    def eigenvalues(self) -> tuple[complex, complex]:
        """Roots of the characteristic polynomial, larger real part first."""
        half_tr = self.trace() / 2
        disc = cmath.sqrt(half_tr * half_tr - self.det())
        a, b = half_tr + disc, half_tr - disc
        return (a, b) if a.real >= b.real else (b, a)

    def allclose(self, other: Matrix2C, tol: float = 1e-9) -> bool:
        return self.distance(other) <= tol

    def __repr__(self):
        return f"Matrix2C([[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]])"


IDENTITY = Matrix2C.identity()
ZERO = Matrix2C.zero()
#: The bubble point diag(1, -1).
EPSILON = Matrix2C.diag(1, -1)
