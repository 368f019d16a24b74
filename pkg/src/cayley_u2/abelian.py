"""Exact integer matrices, Smith normal form and finitely generated abelian groups.

Matrices act on column vectors: an m x n matrix is a map Z^n -> Z^m, its
cokernel is Z^m / A Z^n and its kernel is a sublattice of Z^n.  All arithmetic
is on Python ints, so there is no overflow.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CompositionNonzero, ExactnessError, IllDefinedHom


# --- integer matrices -----------------------------------------------------------


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        if not x.is_integer():
            raise ValueError(f"non-integral entry {x!r}")
        return int(x)
    try:
        return int(x.__index__())
    except AttributeError:
        raise TypeError(f"not an integer: {x!r}") from None


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> IntegerMatrix:
        data = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ValueError("matrix rows have different lengths")
        return cls(data, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> IntegerMatrix:
        cols = [tuple(_as_int(x) for x in c) for c in cols]
        if any(len(c) != nrows for c in cols):
            raise ValueError("columns have different lengths")
        return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def zeros(cls, m: int, n: int) -> IntegerMatrix:
        return cls(tuple((0,) * n for _ in range(m)), n)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], m: int | None = None,
                 n: int | None = None) -> IntegerMatrix:
        k = len(entries)
        m = k if m is None else m
        n = k if n is None else n
        return cls(tuple(tuple(entries[i] if i == j and i < k else 0 for j in range(n))
                         for i in range(m)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def transpose(self) -> IntegerMatrix:
        if self.ncols == 0:
            return IntegerMatrix((), self.nrows)
        return IntegerMatrix(tuple(tuple(r) for r in zip(*self.rows)) if self.rows
                             else tuple(() for _ in range(self.ncols)), self.nrows)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntegerMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in cols) for row in self.rows),
            other.ncols,
        )

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, x)) for row in self.rows)

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntegerMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                   for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def hstack(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return IntegerMatrix(tuple(r + s for r, s in zip(self.rows, other.rows)),
                             self.ncols + other.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(self.rows[i][j] == self.rows[j][i]
                                        for i in range(self.nrows) for j in range(i))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.rows for a in row)

    def det(self) -> int:
        """Fraction-free Bareiss determinant."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def block_diag(self, other: IntegerMatrix) -> IntegerMatrix:
        top = tuple(r + (0,) * other.ncols for r in self.rows)
        bottom = tuple((0,) * self.ncols + r for r in other.rows)
        return IntegerMatrix(top + bottom, self.ncols + other.ncols)

    def mod(self, p: int) -> IntegerMatrix:
        return IntegerMatrix(tuple(tuple(a % p for a in r) for r in self.rows), self.ncols)


def as_integer_matrix(a) -> IntegerMatrix:
    if isinstance(a, IntegerMatrix):
        return a
    return IntegerMatrix.from_rows(a)


# --- Smith normal form ---------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """A = U D V with U, V unimodular and D diagonal with d1 | d2 | ... >= 0.

    ``L`` and ``R`` are the inverses of ``U`` and ``V``, so that L A R = D.
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    L: IntegerMatrix = field(repr=False)
    R: IntegerMatrix = field(repr=False)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _pivot(a: list[list[int]], s: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(s, len(a)):
        row = a[i]
        for j in range(s, len(row)):
            x = abs(row[j])
            if x and (best is None or x < best_abs):
                best, best_abs = (i, j), x
    return best


@functools.lru_cache(maxsize=4096)
def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form by pivoting on the smallest nonzero entry (ties row-major)."""
    a = as_integer_matrix(a)
    m, n = a.shape
    A = [list(r) for r in a.rows]
    L = [[int(i == j) for j in range(m)] for i in range(m)]
    Linv = [[int(i == j) for j in range(m)] for i in range(m)]
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    Rinv = [[int(i == j) for j in range(n)] for i in range(n)]

    # Each helper updates A and keeps L A0 R = A, Linv = L^-1, Rinv = R^-1.
    def row_add(i, j, c):  # row_i += c row_j
        A[i] = [x + c * y for x, y in zip(A[i], A[j])]
        L[i] = [x + c * y for x, y in zip(L[i], L[j])]
        for row in Linv:
            row[j] -= c * row[i]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]
        for row in Linv:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        L[i] = [-x for x in L[i]]
        for row in Linv:
            row[i] = -row[i]

    def col_add(j, i, c):  # col_j += c col_i
        for row in A:
            row[j] += c * row[i]
        for row in R:
            row[j] += c * row[i]
        Rinv[i] = [x - c * y for x, y in zip(Rinv[i], Rinv[j])]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]
        Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    for s in range(min(m, n)):
        while True:
            p = _pivot(A, s)
            if p is None:
                break
            i, j = p
            if i != s:
                row_swap(s, i)
            if j != s:
                col_swap(s, j)
            d = A[s][s]
            dirty = False
            for i in range(s + 1, m):
                if A[i][s]:
                    row_add(i, s, -(A[i][s] // d))
                    dirty = dirty or A[i][s] != 0
            for j in range(s + 1, n):
                if A[s][j]:
                    col_add(j, s, -(A[s][j] // d))
                    dirty = dirty or A[s][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(s + 1, m)
                        if any(A[i][j] % d for j in range(s + 1, n))), None)
            if bad is None:
                break
            row_add(s, bad, 1)
        if A[s][s] < 0:
            row_neg(s)
        if _pivot(A, s) is None:
            break

    def mk(rows, ncols):
        return IntegerMatrix(tuple(tuple(r) for r in rows), ncols)

    return SmithDecomposition(U=mk(Linv, m), D=mk(A, n), V=mk(Rinv, n),
                              L=mk(L, m), R=mk(R, n))


def determinantal_invariants(a: IntegerMatrix) -> tuple[int, ...]:
    """Invariant factors from gcds of k x k minors.

    Exponential in the matrix size; intended as an independent check of
    :func:`smith_normal_form` on small matrices.
    """
    from itertools import combinations

    a = as_integer_matrix(a)
    m, n = a.shape
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                minor = IntegerMatrix(tuple(tuple(a[i, j] for j in cs) for i in rs), k)
                g = math.gcd(g, minor.det())
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]
    return tuple(factors) + (0,) * (min(m, n) - len(factors))


# --- abelian groups ------------------------------------------------------------


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/t1 + ... + Z/tk with 1 < t1 | t2 | ... | tk."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(_as_int(t) for t in self.torsion)
        if self.rank < 0:
            raise ValueError("negative rank")
        if any(t <= 1 for t in torsion):
            raise ValueError(f"torsion coefficients must exceed 1: {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion coefficients must form a divisor chain: {torsion}")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def from_invariants(cls, diagonal: Iterable[int], free: int = 0) -> FgAbelianGroup:
        """Canonical group Z^free + sum Z/d over the given diagonal (0 means Z)."""
        ds = [abs(_as_int(d)) for d in diagonal]
        free += sum(1 for d in ds if d == 0)
        nonzero = [d for d in ds if d > 1]
        if len(nonzero) > 1 and any(b % a for a, b in zip(nonzero, nonzero[1:])):
            nonzero = [d for d in smith_normal_form(IntegerMatrix.diagonal(nonzero)).diagonal
                       if d > 1]
        return cls(free, tuple(nonzero))

    @classmethod
    def free(cls, n: int) -> FgAbelianGroup:
        return cls(n, ())

    @classmethod
    def cyclic(cls, n: int) -> FgAbelianGroup:
        return cls.from_invariants([n])

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        return math.prod(self.torsion) if self.rank == 0 else None

    def direct_sum(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return FgAbelianGroup.from_invariants(self.torsion + other.torsion,
                                              self.rank + other.rank)

    __add__ = direct_sum

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel(a) -> FgAbelianGroup:
    """Z^rows / A Z^cols."""
    a = as_integer_matrix(a)
    snf = smith_normal_form(a)
    return FgAbelianGroup.from_invariants([d for d in snf.diagonal if d != 0],
                                          a.nrows - snf.rank)


def _hnf_rows(vectors: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    out = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col] != 0]
        if not live:
            col += 1
            continue
        while len([r for r in rows if r[col] != 0]) > 1:
            live = sorted((r for r in rows if r[col] != 0), key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                r[:] = [x - q * y for x, y in zip(r, piv)]
        piv = next(r for r in rows if r[col] != 0)
        rows = [r for r in rows if r is not piv and any(r)]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        for prev in out:
            q = prev[col] // piv[col]
            prev[:] = [x - q * y for x, y in zip(prev, piv)]
        out.append(piv)
        col += 1
    return out


def kernel(a) -> tuple[FgAbelianGroup, IntegerMatrix]:
    """Kernel of A: Z^cols -> Z^rows as a free group plus a basis (as columns).

    The basis is put in Hermite normal form so that it is canonical.
    """
    a = as_integer_matrix(a)
    snf = smith_normal_form(a)
    r = snf.rank
    vecs = [list(snf.R.column(j)) for j in range(r, a.ncols)]
    basis = _hnf_rows(vecs)
    return FgAbelianGroup.free(len(basis)), IntegerMatrix.from_columns(basis, a.ncols)


def in_lattice(x: Sequence[int], a: IntegerMatrix) -> bool:
    """Whether the vector ``x`` is an integer combination of the columns of ``a``."""
    if len(x) != a.nrows:
        raise ValueError("vector length does not match row count")
    snf = smith_normal_form(a)
    lx = snf.L.apply(tuple(x))
    diag = snf.diagonal
    for i, c in enumerate(lx):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c != 0:
                return False
        elif c % d:
            return False
    return True


# --- presented groups and homomorphisms ----------------------------------------


@dataclass(frozen=True)
class PresentedGroup:
    """Z^generators modulo the column span of ``relations``."""

    generators: int
    relations: IntegerMatrix

    def __post_init__(self):
        if self.relations.nrows != self.generators:
            raise ValueError("relations must have one row per generator")

    @classmethod
    def free(cls, n: int) -> PresentedGroup:
        return cls(n, IntegerMatrix.zeros(n, 0))

    @classmethod
    def trivial(cls) -> PresentedGroup:
        return cls.free(0)

    @classmethod
    def from_relations(cls, relations) -> PresentedGroup:
        relations = as_integer_matrix(relations)
        return cls(relations.nrows, relations)

    @classmethod
    def cyclic(cls, n: int) -> PresentedGroup:
        return cls(1, IntegerMatrix.from_rows([[n]]))

    @classmethod
    def of(cls, group: FgAbelianGroup) -> PresentedGroup:
        orders = [0] * group.rank + list(group.torsion)
        return cls(len(orders), IntegerMatrix.diagonal(orders) if orders
                   else IntegerMatrix.zeros(0, 0))

    def group(self) -> FgAbelianGroup:
        return cokernel(self.relations)

    def is_zero(self, x: Sequence[int]) -> bool:
        return in_lattice(x, self.relations)


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism between presented groups given by a target x source integer matrix."""

    source: PresentedGroup
    target: PresentedGroup
    matrix: IntegerMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.generators, self.source.generators):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match "
                             f"{self.target.generators} x {self.source.generators}")
        image_of_relations = self.matrix @ self.source.relations
        for col in image_of_relations.columns():
            if not self.target.is_zero(col):
                raise IllDefinedHom(f"relation maps to nonzero element {col}")

    @classmethod
    def zero(cls, source: PresentedGroup, target: PresentedGroup) -> GroupHom:
        return cls(source, target, IntegerMatrix.zeros(target.generators, source.generators))

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.matrix.apply(x)

    def then(self, g: GroupHom) -> GroupHom:
        """g o self."""
        return GroupHom(self.source, g.target, g.matrix @ self.matrix)

    def kernel_generators(self) -> list[tuple[int, ...]]:
        """Vectors of Z^source.generators generating the preimage of 0 (including relations)."""
        n = self.source.generators
        stacked = self.matrix.hstack(self.target.relations)
        _, basis = kernel(stacked)
        gens = [col[:n] for col in basis.columns()]
        return [g for g in gens if any(g)]

    def image_lattice(self) -> IntegerMatrix:
        """Generators of image + target relations, as columns in Z^target.generators."""
        return self.matrix.hstack(self.target.relations)


@dataclass(frozen=True)
class ExactnessReport:
    composition_zero: bool
    kernel_in_image: bool
    offending: tuple[int, ...] | None = None

    @property
    def exact(self) -> bool:
        return self.composition_zero and self.kernel_in_image


def exactness_report(f: GroupHom, g: GroupHom) -> ExactnessReport:
    """Compare image(f) with kernel(g) inside g's source."""
    if f.target != g.source:
        raise ValueError("codomain of f is not the domain of g")
    for col in (g.matrix @ f.matrix).columns():
        if not g.target.is_zero(col):
            return ExactnessReport(False, False, col)
    im = f.image_lattice()
    for x in g.kernel_generators():
        if not in_lattice(x, im):
            return ExactnessReport(True, False, x)
    return ExactnessReport(True, True)


def is_exact_at(f: GroupHom, g: GroupHom) -> bool:
    return exactness_report(f, g).exact


def check_exact_at(f: GroupHom, g: GroupHom) -> None:
    """Raise :class:`CompositionNonzero` or :class:`ExactnessError` unless image f = ker g."""
    rep = exactness_report(f, g)
    if not rep.composition_zero:
        raise CompositionNonzero(f"g(f(x)) = {rep.offending} is nonzero")
    if not rep.kernel_in_image:
        raise ExactnessError(f"kernel element {rep.offending} is not in the image")


def sequence_exactness(maps: Sequence[GroupHom]) -> list[bool]:
    """Exactness of 0 -> G0 -> G1 -> ... -> Gk -> 0 at every group Gi.

    ``maps`` are the inner arrows G0 -> G1, ..., G(k-1) -> Gk; the zero maps at
    both ends are added here.
    """
    if not maps:
        raise ValueError("need at least one map")
    for a, b in zip(maps, maps[1:]):
        if a.target != b.source:
            raise ValueError("consecutive maps do not compose")
    zero = PresentedGroup.trivial()
    full = [GroupHom.zero(zero, maps[0].source), *maps, GroupHom.zero(maps[-1].target, zero)]
    return [is_exact_at(a, b) for a, b in zip(full, full[1:])]
