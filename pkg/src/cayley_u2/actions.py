"""SL2(C) acting on Hermitian matrices by T(M) = T M T*.

The action preserves the determinant, hence the Lorentz pseudometric; the
induced 4x4 real matrices form the proper orthochronous Lorentz group, with
T and -T giving the same Lorentz matrix.  SU(2) acts on U(2) by conjugation
and the Cayley transform intertwines the two actions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley import require_unitary
from .config import get_tolerances
from .errors import InvalidSpinTransform, NotHermitian, NotSpecialUnitary
from .matrix2 import IDENTITY, Matrix2C
from .spacetime import MinkowskiEvent, event_to_matrix, matrix_to_event

#: diag(1, -1, -1, -1)
ETA = np.diag([1.0, -1.0, -1.0, -1.0])

_BASIS = [event_to_matrix(MinkowskiEvent(*row)) for row in np.eye(4)]


@dataclass(frozen=True, slots=True)
class SpinTransform:
    T: Matrix2C

    def __post_init__(self):
        tol = get_tolerances().sl2
        err = abs(self.T.det() - 1)
        if err > tol:
            raise InvalidSpinTransform(f"|det T - 1| = {err:.3e} exceeds {tol:.3e}")

    def is_special_unitary(self, tol: float | None = None) -> bool:
        if tol is None:
            tol = get_tolerances().su2
        return self.T.unitarity_defect() <= tol and abs(self.T.det() - 1) <= tol

    def __matmul__(self, other: SpinTransform) -> SpinTransform:
        return SpinTransform(self.T @ other.T)

    def __neg__(self) -> SpinTransform:
        return SpinTransform(-self.T)


@dataclass(frozen=True)
class LorentzMatrix:
    L: np.ndarray

    def metric_defect(self) -> float:
        return float(np.max(np.abs(self.L.T @ ETA @ self.L - ETA)))

    def is_proper_orthochronous(self, tol: float = 1e-10) -> bool:
        # the metric condition forces det = +-1, so only its sign is tested
        return (self.metric_defect() <= tol and np.linalg.det(self.L) > 0
                and self.L[0, 0] >= 1 - tol)

    def __matmul__(self, other: LorentzMatrix) -> LorentzMatrix:
        return LorentzMatrix(self.L @ other.L)


def _as_spin(t) -> SpinTransform:
    return t if isinstance(t, SpinTransform) else SpinTransform(t)


def act(t: SpinTransform | Matrix2C, m: Matrix2C, tol: float | None = None) -> Matrix2C:
    """T M T* for Hermitian M."""
    t = _as_spin(t)
    if tol is None:
        tol = get_tolerances().hermitian
    if m.hermiticity_defect() > tol:
        raise NotHermitian("act() needs a Hermitian matrix")
    return t.T @ m @ t.T.adjoint()


def act_on_event(t: SpinTransform | Matrix2C, e: MinkowskiEvent) -> MinkowskiEvent:
    return matrix_to_event(act(t, event_to_matrix(e)), tol=np.inf)


def lorentz_matrix(t: SpinTransform | Matrix2C) -> LorentzMatrix:
    """Column k is the event of T(basis_k)."""
    t = _as_spin(t)
    cols = [matrix_to_event(act(t, b), tol=np.inf).as_tuple() for b in _BASIS]
    return LorentzMatrix(np.array(cols, dtype=float).T)


def conjugate_unitary(t: SpinTransform | Matrix2C, u: Matrix2C,
                      tol: float | None = None) -> Matrix2C:
    """T U T* for T in SU(2)."""
    t = _as_spin(t)
    if not t.is_special_unitary():
        raise NotSpecialUnitary("conjugation equivariance needs T in SU(2)")
    require_unitary(u, tol)
    return t.T @ u @ t.T.adjoint()


def boost(rapidity: float) -> SpinTransform:
    """diag(e^{t/2}, e^{-t/2}): a boost along x1."""
    h = np.exp(rapidity / 2)
    return SpinTransform(Matrix2C.diag(h, 1 / h))


def rotation(axis, angle: float) -> SpinTransform:
    """exp(-i angle/2 n.sigma') in the Penrose frame, rotating space by ``angle`` about ``axis``."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    # Penrose basis: x1 -> diag(1,-1), x2 -> [[0,1],[1,0]], x3 -> [[0,-i],[i,0]]
    gen = event_to_matrix(MinkowskiEvent(0.0, *n))
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return SpinTransform(IDENTITY * c - gen * (1j * s))
