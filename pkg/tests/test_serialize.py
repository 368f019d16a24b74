import json

import numpy as np
import pytest

from cayley_u2 import serialize as ser
from cayley_u2.abelian import FgAbelianGroup
from cayley_u2.boundary import INFINITY, BubblePoint, Cone, Vertex
from cayley_u2.bw import lookup, twisted_example
from cayley_u2.cayley import Stratum, StratumLabel
from cayley_u2.sampling import random_event, random_unitary
from cayley_u2.spacetime import MinkowskiEvent


def _through_json(obj):
    return json.loads(json.dumps(obj))


def test_event_round_trip():
    rng = np.random.default_rng(0)
    for _ in range(20):
        e = random_event(rng)
        assert ser.event_from_json(_through_json(ser.event_to_json(e))) == e
    assert ser.event_to_json(MinkowskiEvent(1, 2, 3, 4)) == {"x": [1, 2, 3, 4]}


def test_matrix_round_trip():
    rng = np.random.default_rng(1)
    u = random_unitary(rng)
    assert ser.matrix_from_json(_through_json(ser.matrix_to_json(u))) == u
    assert ser.matrix_from_json([[1, 0], [0, 0], [0, 0], [1, 0]]) == ser.matrix_from_json([[1, 0], [0, 1]])
    with pytest.raises(ser.SchemaError):
        ser.matrix_from_json([[1, 0]])


def test_stratum_round_trip():
    for label in (StratumLabel(Stratum.BUBBLE), StratumLabel(Stratum.LIGHTCONE_INFINITY),
                  StratumLabel(Stratum.INTERIOR, MinkowskiEvent(0, 1, 0, 0))):
        assert ser.stratum_from_json(_through_json(ser.stratum_to_json(label))) == label
    assert ser.stratum_to_json(StratumLabel(Stratum.BUBBLE)) == {"stratum": "bubble"}


def test_boundary_round_trip():
    for c in (Vertex(), Cone(0.3, 1 - 2j), Cone(-2, INFINITY), BubblePoint(INFINITY), BubblePoint(0.5j)):
        assert ser.boundary_from_json(_through_json(ser.boundary_to_json(c))) == c
    assert ser.boundary_to_json(BubblePoint(INFINITY)) == {"kind": "bubble", "z": "inf"}
    with pytest.raises(ser.SchemaError):
        ser.boundary_from_json({"kind": "corner"})


def test_group_round_trip():
    g = FgAbelianGroup(2, (2, 6))
    assert ser.group_to_json(g) == {"rank": 2, "torsion": [2, 6]}
    assert ser.group_from_json(_through_json(ser.group_to_json(g))) == g


def test_integer_matrix_parsing():
    assert ser.integer_matrix_from_json([[1, 2], [3, 4]]).tolist() == [[1, 2], [3, 4]]
    with pytest.raises(ser.SchemaError):
        ser.integer_matrix_from_json([[1.5]])
    with pytest.raises(ser.SchemaError):
        ser.integer_matrix_from_json([[True]])


def test_bw_elements():
    sp = lookup("U2").descriptor
    x = sp.element(2, 1)
    assert ser.bw_element_from_json(sp, _through_json(ser.bw_element_to_json(x))) == x
    assert ser.parse_bw_pair(sp, "(1,1)") == sp.element(1, 1)
    assert ser.parse_bw_pair(sp, "-3;1") == sp.element(-3, 1)
    assert ser.parse_bw_pair(twisted_example(), "(0, 1)") == twisted_example().element(0, 1)
    with pytest.raises(ser.SchemaError):
        ser.parse_bw_pair(sp, "(1,1,1)")
