"""JSON forms shared by the library and the command line.

Schemas
-------
event              {"x": [x0, x1, x2, x3]}
matrix             [[re, im], [re, im], [re, im], [re, im]]   (row-major m11, m12, m21, m22)
stratum label      {"stratum": "interior" | "lightcone_infinity" | "bubble", "event": [x0, x1, x2, x3]}
                   ("event" only for the interior)
boundary point     {"kind": "vertex"} | {"kind": "cone", "x0": x0, "z": [re, im] | "inf"}
                   | {"kind": "bubble", "z": [re, im] | "inf"}
group              {"rank": r, "torsion": [t1, ...]}
integer matrix     [[a11, ..., a1n], ...]
BW element         {"b": [...], "s": [...]}
"""
from __future__ import annotations

import math
from typing import Any

from .abelian import FgAbelianGroup, IntegerMatrix, SmithDecomposition, as_integer_matrix
from .boundary import INFINITY, BoundaryCoordinate, BubblePoint, Cone, ExtendedComplex, Vertex
from .bw import BwElement, SpaceDescriptor, SpaceEntry
from .cayley import Stratum, StratumLabel
from .matrix2 import Matrix2C
from .spacetime import MinkowskiEvent


class SchemaError(ValueError):
    """Input does not match the documented JSON form."""


def _number(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise SchemaError(f"expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise SchemaError("numbers must be finite")
    return x


def _complex(pair) -> complex:
    if isinstance(pair, (int, float)) and not isinstance(pair, bool):
        return complex(_number(pair))
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise SchemaError(f"expected [re, im], got {pair!r}")
    return complex(_number(pair[0]), _number(pair[1]))


def complex_to_json(z: complex) -> list[float]:
    return [z.real, z.imag]


# --- events and matrices --------------------------------------------------------


def event_to_json(e: MinkowskiEvent) -> dict:
    return {"x": list(e.as_tuple())}


def event_from_json(obj) -> MinkowskiEvent:
    xs = obj.get("x") if isinstance(obj, dict) else obj
    if not isinstance(xs, (list, tuple)) or len(xs) != 4:
        raise SchemaError(f"an event is {{'x': [x0, x1, x2, x3]}}, got {obj!r}")
    return MinkowskiEvent(*(_number(c) for c in xs))


def matrix_to_json(m: Matrix2C) -> list[list[float]]:
    return [complex_to_json(c) for c in m.entries]


def matrix_from_json(obj) -> Matrix2C:
    """Accepts the flat row-major form or a nested 2 x 2 array of entries."""
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(
            isinstance(r, (list, tuple)) and len(r) == 2 for r in obj):
        return Matrix2C(*(_complex(c) for r in obj for c in r))
    if not isinstance(obj, (list, tuple)) or len(obj) != 4:
        raise SchemaError("a matrix is a row-major list of four [re, im] pairs")
    return Matrix2C(*(_complex(c) for c in obj))


# --- strata and boundary coordinates ----------------------------------------------


def stratum_to_json(label: StratumLabel) -> dict:
    out: dict[str, Any] = {"stratum": label.stratum.value}
    if label.event is not None:
        out["event"] = list(label.event.as_tuple())
    return out


def stratum_from_json(obj) -> StratumLabel:
    try:
        stratum = Stratum(obj["stratum"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad stratum record {obj!r}") from exc
    event = obj.get("event")
    return StratumLabel(stratum, None if event is None else event_from_json(event))


def extended_to_json(z: ExtendedComplex):
    return "inf" if z.is_infinite else complex_to_json(z.value)


def extended_from_json(obj) -> ExtendedComplex:
    if obj == "inf":
        return INFINITY
    return ExtendedComplex(_complex(obj))


def boundary_to_json(coord: BoundaryCoordinate) -> dict:
    if isinstance(coord, Vertex):
        return {"kind": "vertex"}
    if isinstance(coord, Cone):
        return {"kind": "cone", "x0": coord.x0, "z": extended_to_json(coord.z)}
    if isinstance(coord, BubblePoint):
        return {"kind": "bubble", "z": extended_to_json(coord.z)}
    raise TypeError(f"not a boundary coordinate: {coord!r}")


def boundary_from_json(obj) -> BoundaryCoordinate:
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {obj!r}")
    kind = obj.get("kind")
    if kind == "vertex":
        return Vertex()
    try:
        if kind == "cone":
            return Cone(_number(obj["x0"]), extended_from_json(obj["z"]))
        if kind == "bubble":
            return BubblePoint(extended_from_json(obj["z"]))
    except KeyError as exc:
        raise SchemaError(f"missing field {exc} in {obj!r}") from exc
    raise SchemaError(f"unknown boundary kind {kind!r}")


# --- integer algebra ----------------------------------------------------------------


def group_to_json(g: FgAbelianGroup) -> dict:
    return {"rank": g.rank, "torsion": list(g.torsion)}


def group_from_json(obj) -> FgAbelianGroup:
    try:
        return FgAbelianGroup(int(obj["rank"]), tuple(int(t) for t in obj["torsion"]))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"a group is {{'rank': r, 'torsion': [...]}}, got {obj!r}") from exc


def integer_matrix_from_json(obj) -> IntegerMatrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise SchemaError("an integer matrix is an array of arrays")
    for row in obj:
        for c in row:
            if isinstance(c, bool) or not (isinstance(c, int) or
                                           (isinstance(c, float) and c.is_integer())):
                raise SchemaError(f"non-integer entry {c!r}")
    try:
        return as_integer_matrix([[int(c) for c in row] for row in obj])
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def snf_to_json(snf: SmithDecomposition, coker: FgAbelianGroup,
                ker: FgAbelianGroup, basis: IntegerMatrix) -> dict:
    return {
        "U": snf.U.tolist(),
        "D": snf.D.tolist(),
        "V": snf.V.tolist(),
        "cokernel": group_to_json(coker),
        "kernel": dict(group_to_json(ker), basis=basis.transpose().tolist()),
    }


def surgery_to_json(h1: FgAbelianGroup, h2: FgAbelianGroup) -> dict:
    return {"H1": group_to_json(h1), "H2": group_to_json(h2)}


# --- Brauer-Wall ------------------------------------------------------------------


def bw_element_to_json(x: BwElement) -> dict:
    return {"b": list(x.b), "s": list(x.s)}


def bw_element_from_json(space: SpaceDescriptor, obj) -> BwElement:
    try:
        return BwElement(space, obj["b"], obj["s"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"a BW element is {{'b': [...], 's': [...]}}, got {obj!r}") from exc


def parse_bw_pair(space: SpaceDescriptor, text: str) -> BwElement:
    """Parse ``"(b, s)"`` for spaces with one b and one s coordinate,
    or ``"b1,b2;s1"`` in general (either side may be empty)."""
    t = text.strip()
    if ";" in t:
        left, right = t.split(";", 1)
        b = [int(c) for c in left.strip("() ").split(",") if c.strip()]
        s = [int(c) for c in right.strip("() ").split(",") if c.strip()]
        return BwElement(space, b, s)
    parts = [c for c in t.strip("()[] ").split(",") if c.strip()]
    try:
        nums = [int(c) for c in parts]
    except ValueError as exc:
        raise SchemaError(f"cannot parse BW element {text!r}") from exc
    k = space.h3_coords
    if len(nums) != k + space.h1_dim:
        raise SchemaError(f"BW({space.name}) elements have {k} + {space.h1_dim} coordinates")
    return BwElement(space, nums[:k], nums[k:])


def space_entry_to_json(entry: SpaceEntry) -> dict:
    def table(t):
        return {str(k): group_to_json(v) for k, v in sorted(t.items())}

    out: dict[str, Any] = {"name": entry.name, "title": entry.title}
    out["bw"] = None if entry.bw is None else group_to_json(entry.bw)
    d = entry.descriptor
    out["descriptor"] = None if d is None else {
        "h1_dim": d.h1_dim,
        "h2_dim": d.h2_dim,
        "h3": group_to_json(d.h3_int),
        "twist_trivial": d.twist_is_trivial(),
    }
    out["cohomology"] = table(entry.cohomology)
    out["compact_support"] = table(entry.compact_support)
    out["compact_support_mod2"] = table(entry.compact_support_mod2)
    out["notes"] = list(entry.notes)
    return out
