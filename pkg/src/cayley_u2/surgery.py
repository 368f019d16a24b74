"""Homology of a 3-manifold obtained by surgery on a framed link.

The input is the linking matrix Q (framings on the diagonal), which is also
the intersection form of the simply-connected 4-dimensional handlebody X
bounded by Y.  Then H1(Y) = coker Q and H2(Y) = ker Q, coming from the
exact sequence

    0 -> H2(Y) -> H2(X) --Q--> H2(X, Y) -> H1(Y) -> 0.

Simple connectivity of X cannot be checked from Q and is assumed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    FgAbelianGroup,
    GroupHom,
    IntegerMatrix,
    PresentedGroup,
    as_integer_matrix,
    cokernel,
    kernel,
    sequence_exactness,
)
from .errors import ExactnessError, NotSymmetric


def framed_link_matrix(q) -> IntegerMatrix:
    q = as_integer_matrix(q)
    if not q.is_symmetric():
        raise NotSymmetric(f"linking matrix must be square and symmetric, got {q.tolist()}")
    return q


def surgery_homology(q) -> tuple[FgAbelianGroup, FgAbelianGroup]:
    """(H1, H2) of the surgered manifold."""
    q = framed_link_matrix(q)
    h1 = cokernel(q)
    h2, _ = kernel(q)
    if h1.rank != h2.rank:
        raise ArithmeticError(f"Poincare duality violated: rank H1 = {h1.rank}, rank H2 = {h2.rank}")
    return h1, h2


def mod2_form(q) -> IntegerMatrix:
    """Q tensor Z/2, entries in {0, 1}."""
    return framed_link_matrix(q).mod(2)


@dataclass(frozen=True)
class ResolutionReport:
    h2y: FgAbelianGroup
    h2x: FgAbelianGroup
    h2xy: FgAbelianGroup
    h1y: FgAbelianGroup
    #: exactness at H2Y, H2X, H2(X,Y), H1Y in that order
    exact_at: tuple[bool, bool, bool, bool]

    @property
    def exact(self) -> bool:
        return all(self.exact_at)


def resolution_maps(q) -> list[GroupHom]:
    """ker Q -> Z^n --Q--> Z^n -> coker Q as presented-group homomorphisms."""
    q = framed_link_matrix(q)
    n = q.nrows
    _, basis = kernel(q)
    kernel_group = PresentedGroup.free(basis.ncols)
    free = PresentedGroup.free(n)
    coker = PresentedGroup(n, q)
    return [
        GroupHom(kernel_group, free, basis),
        GroupHom(free, free, q),
        GroupHom(free, coker, IntegerMatrix.identity(n)),
    ]


def resolution_report(q) -> ResolutionReport:
    maps = resolution_maps(q)
    exact = tuple(sequence_exactness(maps))
    report = ResolutionReport(
        h2y=maps[0].source.group(),
        h2x=maps[1].source.group(),
        h2xy=maps[1].target.group(),
        h1y=maps[2].target.group(),
        exact_at=exact,
    )
    if not report.exact:
        raise ExactnessError(f"resolution not exact at positions {exact}")
    return report
