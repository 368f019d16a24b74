import numpy as np
import pytest

from cayley_u2.abelian import FgAbelianGroup, IntegerMatrix
from cayley_u2.errors import NotSymmetric
from cayley_u2.surgery import mod2_form, resolution_report, surgery_homology

from oracles import cokernel_order_profile, cyclic_product_profile

Z = FgAbelianGroup.free(1)
TRIVIAL = FgAbelianGroup()


def _random_symmetric(rng, n, lo=-4, hi=4):
    a = rng.integers(lo, hi + 1, (n, n))
    return np.triu(a) + np.triu(a, 1).T


def _random_unimodular(rng, n, moves=20):
    p = np.eye(n, dtype=object)
    if n == 1:
        return p * int(rng.choice([-1, 1]))
    for _ in range(moves):
        i, j = rng.choice(n, 2, replace=False)
        e = np.eye(n, dtype=object)
        e[i, j] = int(rng.choice([-1, 1]))
        p = p @ e
    return p


def test_examples():
    assert surgery_homology([[0]]) == (Z, Z)
    assert surgery_homology([[1]]) == (TRIVIAL, TRIVIAL)
    assert surgery_homology([[2, 1], [1, 2]]) == (FgAbelianGroup.cyclic(3), TRIVIAL)


def test_lens_space_family():
    # p-framed unknot gives the lens space L(p, 1)
    for p in range(2, 12):
        h1, h2 = surgery_homology([[p]])
        assert h1 == FgAbelianGroup.cyclic(p) and h2 == TRIVIAL


def test_matches_brute_force_quotient():
    rng = np.random.default_rng(0)
    cases = [[[2, 1], [1, 2]], [[2, 0], [0, 2]], [[4, 2], [2, 4]], [[-2, 1], [1, -3]]]
    while len(cases) < 30:
        q = _random_symmetric(rng, int(rng.integers(1, 4)), -3, 3).tolist()
        m = np.array(q, dtype=float)
        if abs(round(np.linalg.det(m))) in range(1, 40):
            cases.append(q)
    for q in cases:
        h1, _ = surgery_homology(q)
        assert h1.rank == 0
        assert cyclic_product_profile(h1.torsion) == cokernel_order_profile(q)


def test_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        surgery_homology([[1, 2], [3, 4]])
    with pytest.raises(NotSymmetric):
        surgery_homology([[1, 2]])


def test_mod2_form_examples():
    assert mod2_form([[2, 1], [1, 2]]).tolist() == [[0, 1], [1, 0]]
    assert mod2_form([[0]]).tolist() == [[0]]
    assert mod2_form([[3, 2], [2, -1]]).tolist() == [[1, 0], [0, 1]]


def test_resolution_examples():
    for q in ([[0]], [[2, 1], [1, 2]]):
        assert resolution_report(q).exact
    rep = resolution_report(IntegerMatrix.identity(3).tolist())
    assert rep.exact and rep.h2y.is_trivial and rep.h1y.is_trivial
    assert rep.h2x == FgAbelianGroup.free(3)


def test_resolution_random():
    rng = np.random.default_rng(1)
    for _ in range(100):
        q = _random_symmetric(rng, int(rng.integers(1, 5)))
        rep = resolution_report(q.tolist())
        assert rep.exact_at == (True, True, True, True)


def test_congruence_invariance():
    rng = np.random.default_rng(2)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        q = _random_symmetric(rng, n).astype(object)
        p = _random_unimodular(rng, n)
        q2 = (p.T @ q @ p).tolist()
        assert surgery_homology(q2) == surgery_homology(q.tolist())


def test_unimodular_gives_homology_sphere():
    rng = np.random.default_rng(3)
    for _ in range(20):
        p = _random_unimodular(rng, 3)
        q = (p.T @ np.diag([1, -1, 1]).astype(object) @ p).tolist()
        assert surgery_homology(q) == (TRIVIAL, TRIVIAL)


def test_block_sum():
    rng = np.random.default_rng(4)
    for _ in range(30):
        a = _random_symmetric(rng, int(rng.integers(1, 4)))
        b = _random_symmetric(rng, int(rng.integers(1, 4)))
        block = IntegerMatrix.from_rows(a.tolist()).block_diag(IntegerMatrix.from_rows(b.tolist()))
        h1a, h2a = surgery_homology(a.tolist())
        h1b, h2b = surgery_homology(b.tolist())
        assert surgery_homology(block) == (h1a + h1b, h2a + h2b)
