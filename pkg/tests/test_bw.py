import itertools

import pytest

from cayley_u2.abelian import FgAbelianGroup, IntegerMatrix
from cayley_u2.bw import (
    BwElement,
    SpaceDescriptor,
    bw_compose,
    bw_group_check,
    bw_structure,
    distinguished_class,
    element_order,
    lookup,
    registry,
    resolve_descriptor,
    restriction_is_isomorphism,
    sequence_model,
    sequence_model_check,
    sequence_model_exactness,
    split_isomorphism,
    trivial_space,
    twisted_example,
)
from cayley_u2.errors import InvalidDescriptor, SpaceMismatch

Z = FgAbelianGroup.free(1)
Z2xZ = FgAbelianGroup(1, (2,))


def test_identity_example():
    sp = lookup("U2").descriptor
    x = sp.element(5, 1)
    assert sp.zero() + x == x and x + sp.zero() == x


def test_u2_composition_is_componentwise():
    sp = lookup("U2").descriptor
    assert sp.element(1, 1) + sp.element(1, 1) == sp.element(2, 0)
    assert sp.twist_is_trivial()
    for b1, s1, b2, s2 in itertools.product(range(-3, 4), (0, 1), range(-3, 4), (0, 1)):
        got = sp.element(b1, s1) + sp.element(b2, s2)
        assert (got.b, got.s) == ((b1 + b2,), ((s1 + s2) % 2,))


def test_twisted_example_table():
    sp = twisted_example()
    s = sp.element(0, 1)
    assert s + s == sp.element(1, 0)
    assert element_order(s) == 4
    elems = list(sp.elements())
    assert len(elems) == 4
    # the full table is that of Z/4 generated by (0, s)
    powers = [sp.zero()]
    for _ in range(3):
        powers.append(powers[-1] + s)
    assert set(powers) == set(elems)
    for i, j in itertools.product(range(4), repeat=2):
        assert powers[i] + powers[j] == powers[(i + j) % 4]


def test_twisted_example_does_not_split():
    sp = twisted_example()
    assert max(element_order(x) for x in sp.elements()) == 4
    assert bw_structure(sp) == FgAbelianGroup.cyclic(4)
    with pytest.raises(ValueError):
        split_isomorphism(sp)


def test_split_isomorphism_when_untwisted():
    for name in ("U2", "Mbar_inf", "M_inf_plus"):
        sp = resolve_descriptor(name)
        fwd, back = split_isomorphism(sp)
        pts = [sp.element(b, s) for b in range(-2, 3) for s in range(2)] if sp.h1_dim else \
            [sp.element((a, b), ()) for a in range(-2, 3) for b in range(-2, 3)]
        for x, y in itertools.product(pts, repeat=2):
            bx, sx = fwd(x)
            by, sy = fwd(y)
            assert fwd(x + y) == (tuple(p + q for p, q in zip(bx, by)),
                                  tuple((p + q) % 2 for p, q in zip(sx, sy)))
            assert back(fwd(x)) == x


def test_group_check_examples():
    rep = bw_group_check(lookup("U2").descriptor)
    assert rep.ok and rep.structure == Z2xZ and not rep.exhaustive
    rep = bw_group_check(twisted_example())
    assert rep.ok and rep.exhaustive and rep.structure == FgAbelianGroup.cyclic(4)
    rep = bw_group_check(trivial_space())
    assert rep.ok and rep.structure.is_trivial


def test_group_check_every_descriptor():
    for entry in registry().values():
        if entry.descriptor is None:
            continue
        rep = bw_group_check(entry.descriptor)
        assert rep.ok, (entry.name, rep.failing)
        assert rep.commutative
        assert rep.structure == entry.bw


def test_group_check_reports_failures():
    # a descriptor whose cup table is not symmetric is refused up front
    with pytest.raises(InvalidDescriptor):
        SpaceDescriptor("bad", 2, 1, FgAbelianGroup(0, (2,)),
                        cup=(((0,), (1,)), ((0,), (0,))),
                        bockstein=IntegerMatrix.from_rows([[1]]))
    with pytest.raises(InvalidDescriptor):
        SpaceDescriptor("bad", 0, 1, Z, cup=(), bockstein=IntegerMatrix.from_rows([[1]]))


def test_inverse():
    for sp in (twisted_example(), lookup("U2").descriptor):
        for x in ([sp.element(0, 1), sp.element(1, 1)]):
            assert x + (-x) == sp.zero()


def test_space_mismatch():
    a = lookup("U2").descriptor.element(1, 1)
    b = twisted_example().element(1, 1)
    with pytest.raises(SpaceMismatch):
        bw_compose(a, b)


def test_element_validation():
    sp = lookup("U2").descriptor
    with pytest.raises(ValueError):
        BwElement(sp, (1, 2), (0,))
    # torsion coordinates are reduced
    assert twisted_example().element(3, 3) == twisted_example().element(1, 1)


def test_registry_facts():
    assert lookup("U2").bw == Z2xZ
    assert lookup("Mbar_inf").bw == Z2xZ
    assert lookup("M_inf_plus").bw == FgAbelianGroup.free(2)
    assert lookup("M0").h_c == {1: Z, 3: FgAbelianGroup.free(2)}
    assert lookup("M_inf").h_c == {1: Z, 3: FgAbelianGroup.free(2)}
    assert lookup("B").h2_c == Z
    assert lookup("U2/B").cohomology == {3: Z, 4: Z}
    with pytest.raises(KeyError):
        lookup("nowhere")


def test_distinguished_class():
    x = distinguished_class()
    assert x.space.name == "U2"
    assert (x.b, x.s) == ((1,), (1,))
    assert element_order(x, 100) is None


def test_sequence_model():
    assert sequence_model_exactness() == [True, True, True, True]
    assert sequence_model_check()
    groups = [sequence_model()[0].source] + [f.target for f in sequence_model()]
    ranks = [g.group().rank for g in groups]
    assert ranks == [1, 2, 1, 0]
    assert ranks[0] - ranks[1] + ranks[2] - ranks[3] == 0
    assert [g.group() for g in groups] == [Z, FgAbelianGroup.free(2), Z2xZ, FgAbelianGroup.cyclic(2)]
    assert restriction_is_isomorphism()
