import math

import numpy as np
import pytest

from cayley_u2.actions import conjugate_unitary, lorentz_matrix
from cayley_u2.cayley import Stratum, cayley, classify_stratum, decompose_unitary
from cayley_u2.errors import DegenerateDirection
from cayley_u2.matrix2 import EPSILON, IDENTITY, Matrix2C
from cayley_u2.rays import (
    LightRay,
    decay_slope,
    distance_to_limit,
    end_circle,
    end_line,
    limit_determinant,
    ray_at,
    ray_limit,
)
from cayley_u2.sampling import random_ray, random_su2
from cayley_u2.spacetime import event_to_matrix, pseudometric


def _rays(n, seed=0):
    rng = np.random.default_rng(seed)
    return [random_ray(rng) for _ in range(n)]


def test_ray_at_examples():
    assert ray_at(LightRay((0, 0, 0), (1, 0, 0)), 1).as_tuple() == (1, 1, 0, 0)
    assert ray_at(LightRay((1, 0, 0), (0, 1, 0)), 0).as_tuple() == (0, 1, 0, 0)
    assert ray_at(LightRay((1, 0, 0), (0, 1, 0)), 2).as_tuple() == (2, 1, 2, 0)


def test_ray_points_are_null_separated():
    for r in _rays(50):
        assert abs(pseudometric(ray_at(r, 7.5) - ray_at(r, -2.0))) <= 1e-12


def test_direction_must_be_unit():
    with pytest.raises(ValueError):
        LightRay((0, 0, 0), (1, 1, 0))
    r = LightRay.normalized((0, 0, 0), (3, 4, 0))
    assert r.v == pytest.approx((0.6, 0.8, 0))


def test_limit_examples():
    assert ray_limit(LightRay((0, 0, 0), (1, 0, 0))).allclose(EPSILON, 1e-15)
    # direction x2: z = 0, nu = 1
    assert ray_limit(LightRay((0, 0, 0), (0, 1, 0))).allclose(Matrix2C(0, 1, 1, 0), 1e-15)


def test_limit_matches_numerical_oracle():
    # the oracle is sigma evaluated far along the ray
    for r in _rays(100, 1):
        far = cayley(event_to_matrix(ray_at(r, 1e8)))
        assert far.distance(ray_limit(r)) <= 1e-7


def test_printed_limit_is_off_the_boundary():
    # (1/(1 - i w)) [[z, -nu], [-conj(nu), -conj(z)]] lacks eigenvalue 1 once w != 0
    r = LightRay((0.4, 0.3, -0.2), (0.0, 0.6, 0.8))
    w = r.omega
    z, nu = complex(r.v[0], w), complex(r.v[1], r.v[2])
    printed = Matrix2C(z, -nu, -nu.conjugate(), -z.conjugate()) / complex(1, -w)
    assert abs((printed - IDENTITY).det()) > 0.01
    assert printed.distance(ray_limit(r)) > 0.1


def test_limit_properties():
    for r in _rays(100, 2):
        u = ray_limit(r)
        assert u.unitarity_defect() <= 1e-12
        assert abs((u - IDENTITY).det()) <= 1e-12
        assert abs(u.det() - limit_determinant(r.omega)) <= 1e-12
        assert abs(limit_determinant(r.omega) - complex(r.omega, 1) / complex(r.omega, -1)) == 0


def test_limit_stratum():
    for r in _rays(50, 3):
        assert classify_stratum(ray_limit(r)).stratum is Stratum.LIGHTCONE_INFINITY
    # omega = 0: offset orthogonal to the direction
    r = LightRay((0, 2, -1), (1, 0, 0))
    u = ray_limit(r)
    assert classify_stratum(u).stratum is Stratum.BUBBLE
    assert u.det() == pytest.approx(-1) and abs(u.trace()) < 1e-15


def test_first_order_decay():
    for r in _rays(20, 4):
        assert decay_slope(r) == pytest.approx(-1, abs=0.1)
        for t in (1e3, 1e4, 1e5, 1e6):
            # distance is about (1 + |x|^2) / t
            assert distance_to_limit(r, t) * t <= 2 * (1 + sum(c * c for c in r.x))


def test_rotation_covariance():
    rng = np.random.default_rng(5)
    for r in _rays(50, 6):
        t = random_su2(rng)
        rot = lorentz_matrix(t).L[1:, 1:]
        rotated = LightRay(tuple(rot @ r.x), tuple(rot @ r.v))
        assert ray_limit(rotated).distance(conjugate_unitary(t, ray_limit(r))) <= 1e-9


def test_end_line_examples():
    r = LightRay((0, 0, 0), (1, 0, 0))
    with pytest.raises(DegenerateDirection):
        end_line(r, 0.3)
    d = decompose_unitary(EPSILON)
    assert d.v == 0
    r = LightRay((0, 0, 0), (0, 1, 0))
    # limit [[0, 1], [1, 0]]: u = 0, v = 1 on the line v = (1 - u)
    assert end_line(r, 0) == 1
    roots = end_circle(r, 0.0)
    assert any(abs(end_line(r, u)) ** 2 + abs(u) ** 2 == pytest.approx(1) for u in roots)


def test_end_line_contains_limits():
    for r in _rays(100, 7):
        d = decompose_unitary(ray_limit(r))
        assert abs(end_line(r, d.u) - d.v) <= 1e-10
        roots = end_circle(r, d.u.real)
        assert min(abs(u - d.u) for u in roots) <= 1e-8


def test_end_line_is_independent_of_offset():
    rng = np.random.default_rng(8)
    v = (0.0, 0.6, 0.8)
    for _ in range(20):
        r = LightRay(tuple(rng.uniform(-3, 3, 3)), v)
        d = decompose_unitary(ray_limit(r))
        assert abs(end_line(r, d.u) - d.v) <= 1e-10


def test_end_circle_points_are_normalized():
    r = LightRay((0.2, 0.1, 0.0), (0.0, 0.6, 0.8))
    for a in np.linspace(-0.9, 0.9, 13):
        for u in end_circle(r, a):
            assert abs(u) ** 2 + abs(end_line(r, u)) ** 2 == pytest.approx(1, abs=1e-10)
    assert end_circle(r, -1.5) == ()
    assert math.isclose(end_circle(r, 1.0)[0].real, 1.0)
