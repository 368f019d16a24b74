"""Brauer-Wall group arithmetic and a registry of spaces.

An element of BW(Z) is a pair (b, s) with b in H^3(Z; Z) and s in
H^1(Z; Z/2), composed by

    (b, s) + (b', s') = (b + beta(s . s') + b', s + s')

where s . s' is the cup product into H^2(Z; Z/2) and beta is the Bockstein
H^2(Z; Z/2) -> H^3(Z; Z).  Cohomology of the spaces in :func:`registry` is
curated data, not computed.  The maps in :func:`sequence_model` are models
chosen to satisfy the stated constraints; the underlying topological maps are
not constructed.
"""
from __future__ import annotations

import itertools
from operator import add, xor
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

import numpy as np

from .abelian import (
    FgAbelianGroup,
    GroupHom,
    IntegerMatrix,
    PresentedGroup,
    cokernel,
    sequence_exactness,
)
from .errors import ExactnessError, InvalidDescriptor, SpaceMismatch

EXHAUSTIVE_LIMIT = 4096
#: exhaustive triple checks are run only below this many elements
TRIPLE_LIMIT = 200


def _z2(n: int) -> FgAbelianGroup:
    return FgAbelianGroup(0, (2,) * n)


@dataclass(frozen=True)
class SpaceDescriptor:
    """Cohomological data needed for the composition law.

    ``cup[i][j]`` is the cup product of the i-th and j-th generators of
    H^1(Z/2) as a 0/1 vector in H^2(Z/2).  Column t of ``bockstein`` is the
    image of the t-th generator of H^2(Z/2), in the coordinates of ``h3_int``
    (free coordinates first, then one per torsion coefficient).
    """

    name: str
    h1_dim: int
    h2_dim: int
    h3_int: FgAbelianGroup
    cup: tuple[tuple[tuple[int, ...], ...], ...]
    bockstein: IntegerMatrix
    _twists: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n1, n2 = self.h1_dim, self.h2_dim
        k3 = self.h3_int.rank + len(self.h3_int.torsion)
        cup = tuple(tuple(tuple(int(c) % 2 for c in vec) for vec in row) for row in self.cup)
        object.__setattr__(self, "cup", cup)
        if len(cup) != n1 or any(len(row) != n1 for row in cup) or \
                any(len(vec) != n2 for row in cup for vec in row):
            raise InvalidDescriptor(f"{self.name}: cup table must be {n1} x {n1} x {n2}")
        if any(cup[i][j] != cup[j][i] for i in range(n1) for j in range(n1)):
            raise InvalidDescriptor(f"{self.name}: cup product is not symmetric")
        if self.bockstein.shape != (k3, n2):
            raise InvalidDescriptor(f"{self.name}: bockstein must be {k3} x {n2}")
        for t, col in enumerate(self.bockstein.columns()):
            if any(self.reduce_h3(tuple(2 * c for c in col))):
                raise InvalidDescriptor(f"{self.name}: bockstein of generator {t} is not 2-torsion")
        object.__setattr__(self, "_twists", {})

    def twist(self, s: tuple[int, ...], s2: tuple[int, ...]) -> tuple[int, ...]:
        """beta(s . s'), memoized."""
        key = (s, s2)
        out = self._twists.get(key)
        if out is None:
            out = self.beta(self.cup_product(s, s2))
            if len(self._twists) < 1 << 16:
                self._twists[key] = out
        return out

    @property
    def h1_mod2(self) -> FgAbelianGroup:
        return _z2(self.h1_dim)

    @property
    def h2_mod2(self) -> FgAbelianGroup:
        return _z2(self.h2_dim)

    @property
    def h3_coords(self) -> int:
        return self.h3_int.rank + len(self.h3_int.torsion)

    def reduce_h3(self, b: Sequence[int]) -> tuple[int, ...]:
        tors = self.h3_int.torsion
        if not tors:
            return tuple(b)
        r = self.h3_int.rank
        return tuple(b[:r]) + tuple(x % t for x, t in zip(b[r:], tors))

    def cup_product(self, s: Sequence[int], s2: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.h2_dim
        for i, a in enumerate(s):
            if not a:
                continue
            for j, c in enumerate(s2):
                if c:
                    out = [(x + y) % 2 for x, y in zip(out, self.cup[i][j])]
        return tuple(out)

    def beta(self, t: Sequence[int]) -> tuple[int, ...]:
        return self.reduce_h3(self.bockstein.apply(tuple(t)))

    def twist_is_trivial(self) -> bool:
        return all(not any(self.beta(self.cup[i][j]))
                   for i in range(self.h1_dim) for j in range(self.h1_dim))

    def element(self, b, s) -> BwElement:
        return BwElement(self, b, s)

    def zero(self) -> BwElement:
        return BwElement(self, (0,) * self.h3_coords, (0,) * self.h1_dim)

    @property
    def is_finite(self) -> bool:
        return self.h3_int.rank == 0

    @property
    def order(self) -> Optional[int]:
        return (self.h3_int.order * 2 ** self.h1_dim) if self.is_finite else None

    def elements(self):
        """All elements; only for finite groups."""
        if not self.is_finite:
            raise ValueError(f"BW({self.name}) is infinite")
        for b in itertools.product(*(range(t) for t in self.h3_int.torsion)):
            for s in itertools.product((0, 1), repeat=self.h1_dim):
                yield BwElement(self, b, s)


def _coords(x) -> tuple[int, ...]:
    if isinstance(x, (int, np.integer)):
        return (int(x),)
    return tuple(int(c) for c in x)


class BwElement:
    """A pair (b, s) in BW(space); immutable and hashable."""

    __slots__ = ("space", "b", "s")

    def __init__(self, space: SpaceDescriptor, b, s):
        b, s = _coords(b), tuple(c % 2 for c in _coords(s))
        if len(b) != space.h3_coords:
            raise ValueError(f"b needs {space.h3_coords} coordinates, got {len(b)}")
        if len(s) != space.h1_dim:
            raise ValueError(f"s needs {space.h1_dim} coordinates, got {len(s)}")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "b", space.reduce_h3(b))
        object.__setattr__(self, "s", s)

    @classmethod
    def _make(cls, space, b, s) -> BwElement:
        # b already reduced, s already mod 2
        obj = _new(cls)
        _set_space(obj, space)
        _set_b(obj, b)
        _set_s(obj, s)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("BwElement is immutable")

    def __eq__(self, other):
        if not isinstance(other, BwElement):
            return NotImplemented
        return (self.b == other.b and self.s == other.s
                and (self.space is other.space or self.space == other.space))

    def __hash__(self):
        return hash((self.space.name, self.b, self.s))

    def __repr__(self):
        return f"BwElement({self.space.name}: b={self.b}, s={self.s})"

    def __add__(self, other: BwElement) -> BwElement:
        return bw_compose(self, other)

    def __neg__(self) -> BwElement:
        return bw_inverse(self)


_new = object.__new__
_set_space = BwElement.space.__set__
_set_b = BwElement.b.__set__
_set_s = BwElement.s.__set__


def bw_compose(x: BwElement, y: BwElement) -> BwElement:
    sp = x.space
    if y.space is not sp and y.space != sp:
        raise SpaceMismatch(f"cannot compose elements of BW({sp.name}) and BW({y.space.name})")
    xs, ys = x.s, y.s
    twist = sp._twists.get((xs, ys))
    if twist is None:
        twist = sp.twist(xs, ys)
    b = tuple(map(add, x.b, y.b))
    if any(twist):
        b = tuple(map(add, b, twist))
    if sp.h3_int.torsion:
        b = sp.reduce_h3(b)
    return BwElement._make(sp, b, tuple(map(xor, xs, ys)))


def bw_inverse(x: BwElement) -> BwElement:
    sp = x.space
    twist = sp.twist(x.s, x.s)
    return BwElement._make(sp, sp.reduce_h3([-p - q for p, q in zip(x.b, twist)]), x.s)


def element_order(x: BwElement, limit: int = 10_000) -> Optional[int]:
    """Order of ``x``, or None if it exceeds ``limit`` (e.g. infinite order)."""
    zero = x.space.zero()
    acc = x
    for n in range(1, limit + 1):
        if acc == zero:
            return n
        acc = acc + x
    return None


def bw_structure(space: SpaceDescriptor) -> FgAbelianGroup:
    """Isomorphism type of BW(space) from a presentation of the extension.

    Generators: the coordinates of H^3 and lifts g_i = (0, e_i).  Relations:
    the torsion of H^3 and 2 g_i = beta(e_i . e_i).
    """
    k3, n1 = space.h3_coords, space.h1_dim
    r = space.h3_int.rank
    cols = []
    for idx, t in enumerate(space.h3_int.torsion):
        col = [0] * (k3 + n1)
        col[r + idx] = t
        cols.append(col)
    for i in range(n1):
        e = tuple(int(j == i) for j in range(n1))
        tw = space.beta(space.cup_product(e, e))
        col = [-c for c in tw] + [0] * n1
        col[k3 + i] = 2
        cols.append(col)
    return cokernel(IntegerMatrix.from_columns(cols, k3 + n1))


def split_isomorphism(space: SpaceDescriptor):
    """Mutually inverse maps BW(space) <-> H^3 x H^1(Z/2) when beta o cup = 0.

    With a trivial twist the composition is componentwise, so (b, s) -> (b, s)
    is a homomorphism onto the direct product with the obvious inverse.
    """
    if not space.twist_is_trivial():
        raise ValueError(f"BW({space.name}) has a nontrivial twist; it need not split")

    def forward(x: BwElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if x.space != space:
            raise SpaceMismatch(f"element of BW({x.space.name}), expected BW({space.name})")
        return x.b, x.s

    def backward(pair) -> BwElement:
        b, s = pair
        return BwElement(space, b, s)

    return forward, backward


@dataclass(frozen=True)
class GroupCheckReport:
    space: str
    structure: FgAbelianGroup
    exhaustive: bool
    identity: bool
    inverses: bool
    associative: bool
    commutative: bool
    failing: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.identity and self.inverses and self.associative


def _random_elements(space: SpaceDescriptor, rng: np.random.Generator, bound: int,
                     n: int) -> list[BwElement]:
    r = space.h3_int.rank
    cols = [rng.integers(-bound, bound + 1, (n, r))]
    cols += [rng.integers(0, t, (n, 1)) for t in space.h3_int.torsion]
    bs = np.hstack(cols).tolist()
    ss = rng.integers(0, 2, (n, space.h1_dim)).tolist()
    make = BwElement._make
    return [make(space, tuple(b), tuple(s)) for b, s in zip(bs, ss)]


def bw_group_check(space: SpaceDescriptor, samples: int = 10_000,
                   seed: int = 0, bound: int = 50) -> GroupCheckReport:
    """Verify the group axioms for the composition law on ``space``.

    Finite groups up to :data:`EXHAUSTIVE_LIMIT` elements are enumerated:
    identity, inverses and commutativity over all elements and pairs, and
    associativity over all triples when the group has at most
    :data:`TRIPLE_LIMIT` elements.  Everything else is checked on ``samples``
    random triples.
    """
    rng = np.random.default_rng(seed)
    zero = space.zero()
    finite = space.is_finite and space.order <= EXHAUSTIVE_LIMIT
    if finite:
        elems = list(space.elements())
        singles = elems
        pairs = list(itertools.product(elems, repeat=2))
        if len(elems) <= TRIPLE_LIMIT:
            triples = itertools.product(elems, repeat=3)
        else:
            triples = (tuple(elems[i] for i in rng.integers(0, len(elems), 3))
                       for _ in range(samples))
    else:
        singles = _random_elements(space, rng, bound, samples)
        pairs = list(zip(singles, _random_elements(space, rng, bound, samples)))
        triples = ((x, y, z) for (x, y), z in
                   zip(pairs, _random_elements(space, rng, bound, samples)))

    def fail(name, items, **flags):
        return GroupCheckReport(space.name, bw_structure(space), finite,
                                failing=(name, items), **flags)

    for x in singles:
        if x + zero != x or zero + x != x:
            return fail("identity", (x,), identity=False, inverses=False,
                        associative=False, commutative=False)
        if x + (-x) != zero:
            return fail("inverse", (x,), identity=True, inverses=False,
                        associative=False, commutative=False)
    commutative = all(x + y == y + x for x, y in pairs)
    for x, y, z in triples:
        if (x + y) + z != x + (y + z):
            return fail("associativity", (x, y, z), identity=True, inverses=True,
                        associative=False, commutative=commutative)
    return GroupCheckReport(space.name, bw_structure(space), finite,
                            identity=True, inverses=True, associative=True,
                            commutative=commutative)


# --- spaces ----------------------------------------------------------------------


def _descriptor(name: str, h1: int, h2: int, h3: FgAbelianGroup,
                cup=None, bockstein=None) -> SpaceDescriptor:
    if cup is None:
        cup = tuple(tuple((0,) * h2 for _ in range(h1)) for _ in range(h1))
    k3 = h3.rank + len(h3.torsion)
    if bockstein is None:
        bockstein = IntegerMatrix.zeros(k3, h2)
    return SpaceDescriptor(name, h1, h2, h3, cup, bockstein)


def twisted_example() -> SpaceDescriptor:
    """H^1 = Z/2<s>, H^2 = Z/2<t>, s.s = t, H^3 = Z/2, beta(t) = 1: BW is Z/4."""
    return _descriptor("twisted", 1, 1, FgAbelianGroup(0, (2,)),
                       cup=(((1,),),), bockstein=IntegerMatrix.from_rows([[1]]))


def trivial_space() -> SpaceDescriptor:
    return _descriptor("point", 0, 0, FgAbelianGroup())


@dataclass(frozen=True)
class SpaceEntry:
    name: str
    title: str
    descriptor: Optional[SpaceDescriptor] = None
    bw: Optional[FgAbelianGroup] = None
    cohomology: Mapping[int, FgAbelianGroup] = field(default_factory=dict)
    compact_support: Mapping[int, FgAbelianGroup] = field(default_factory=dict)
    compact_support_mod2: Mapping[int, FgAbelianGroup] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def h_c(self) -> Mapping[int, FgAbelianGroup]:
        return self.compact_support

    @property
    def h2_c(self) -> Optional[FgAbelianGroup]:
        return self.compact_support.get(2)


Z = FgAbelianGroup.free(1)
Z2 = FgAbelianGroup.free(2)
C2 = FgAbelianGroup.cyclic(2)


def _build_registry() -> dict[str, SpaceEntry]:
    entries = [
        SpaceEntry(
            "U2", "the unitary group U(2), homeomorphic to S^1 x S^3",
            descriptor=_descriptor("U2", 1, 0, Z),
            bw=FgAbelianGroup(1, (2,)),
            cohomology={0: Z, 1: Z, 3: Z, 4: Z},
            notes=("Bockstein trivial",
                   "distinguished class (-1, +1): s nontrivial, b = +1",
                   "b = 1 normalizes the orientation class (convention only)"),
        ),
        SpaceEntry(
            "Mbar_inf", "closure of the light cone at infinity (eigenvalue-1 locus)",
            descriptor=_descriptor("Mbar_inf", 1, 0, Z),
            bw=FgAbelianGroup(1, (2,)),
            notes=("inclusion into U(2) is a cohomology isomorphism below degree 4",
                   "restriction BW(U2) -> BW(Mbar_inf) is an isomorphism",
                   "Mbar_inf - M_inf is the bubble, a 2-sphere",
                   "U2 / Mbar_inf is homeomorphic to S^4"),
        ),
        SpaceEntry(
            "M_inf_plus", "Mbar_inf with the bubble collapsed to a point",
            descriptor=_descriptor("M_inf_plus", 0, 0, Z2),
            bw=Z2,
        ),
        SpaceEntry(
            "B", "the bubble: unitaries with spectrum {+1, -1}, a 2-sphere",
            descriptor=_descriptor("B", 0, 1, FgAbelianGroup()),
            bw=FgAbelianGroup(),
            cohomology={0: Z, 2: Z},
            compact_support={0: Z, 2: Z},
            compact_support_mod2={0: C2, 2: C2},
        ),
        SpaceEntry(
            "M0", "the light cone in Minkowski space",
            compact_support={1: Z, 3: Z2},
            notes=("contractible, with two ends",),
        ),
        SpaceEntry(
            "M_inf", "the light cone at infinity",
            compact_support={1: Z, 3: Z2},
            notes=("same compactly supported cohomology as M0, via sigma_perp",
                   "collapsing the bubble sends H^3_c(M_inf) = Z^2 to H^3_c = Z"),
        ),
        SpaceEntry(
            "U2/B", "U(2) with the bubble collapsed",
            cohomology={3: Z, 4: Z},
            notes=("reduced cohomology: Z in degrees 3 and 4, zero otherwise",),
        ),
        SpaceEntry(
            "M_plus", "one-point compactification of Minkowski space (S^4)",
            descriptor=_descriptor("M_plus", 0, 0, FgAbelianGroup()),
            bw=FgAbelianGroup(),
            notes=("BW(M_plus) = 0, so the algebra bundle is trivial on Minkowski space",),
        ),
    ]
    return {e.name: e for e in entries}


_REGISTRY = MappingProxyType(_build_registry())


def registry() -> Mapping[str, SpaceEntry]:
    return _REGISTRY


def lookup(name: str) -> SpaceEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown space {name!r}; known: {', '.join(_REGISTRY)}") from None


def resolve_descriptor(name: str) -> SpaceDescriptor:
    """Descriptor for a registry space or one of the synthetic examples."""
    if name == "twisted":
        return twisted_example()
    if name == "point":
        return trivial_space()
    entry = lookup(name)
    if entry.descriptor is None:
        raise KeyError(f"space {name!r} has no BW descriptor")
    return entry.descriptor


def distinguished_class() -> BwElement:
    """The class (-1, +1) in Z/2 x Z = BW(U(2))."""
    return BwElement(lookup("U2").descriptor, (1,), (1,))


# --- the exact sequence model ---------------------------------------------------


def sequence_model() -> list[GroupHom]:
    """0 -> H^2_c(B) = Z -> BW(M_inf_plus) = Z^2 -> BW(Mbar_inf) = Z/2 x Z -> H^2_c(B; Z/2) -> 0.

    BW(Mbar_inf) is presented on generators (s, b) with relation 2s = 0.
    Model maps: n -> (n, 0); (a, b) -> (b mod 2, b); (s, b) -> s + b mod 2.
    """
    h2c = PresentedGroup.free(1)
    bw_plus = PresentedGroup.free(2)
    bw_bar = PresentedGroup(2, IntegerMatrix.from_rows([[2], [0]]))
    h2c_mod2 = PresentedGroup.cyclic(2)
    return [
        GroupHom(h2c, bw_plus, IntegerMatrix.from_rows([[1], [0]])),
        GroupHom(bw_plus, bw_bar, IntegerMatrix.from_rows([[0, 1], [0, 1]])),
        GroupHom(bw_bar, h2c_mod2, IntegerMatrix.from_rows([[1, 1]])),
    ]


def sequence_model_exactness() -> list[bool]:
    return sequence_exactness(sequence_model())


def sequence_model_check() -> bool:
    exact = sequence_model_exactness()
    if not all(exact):
        raise ExactnessError(f"model sequence not exact: {exact}")
    return True


def restriction_is_isomorphism() -> bool:
    """BW(U2) -> BW(Mbar_inf), modelled as the identity on Z/2 x Z."""
    g = PresentedGroup(2, IntegerMatrix.from_rows([[2], [0]]))
    return all(sequence_exactness([GroupHom(g, g, IntegerMatrix.identity(2))]))
