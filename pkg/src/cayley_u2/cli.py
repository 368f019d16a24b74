"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 domain error.  Errors are
written to stderr as ``{"error": code, "message": text}``.

Configuration is read from a JSON file (``--config`` or the
``CAYLEY_U2_CONFIG`` environment variable) with optional keys
``hermitian_tol``, ``unitary_tol``, ``eigtol``, ``output_format`` and
``seed``; command-line flags take precedence.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import bw, serialize
from .abelian import cokernel, kernel, smith_normal_form
from .boundary import boundary_coordinates, bubble_v, sigma_perp
from .cayley import Stratum, cayley, cayley_inverse, classify_stratum, trace_det_identity_residual
from .config import Tolerances, tolerances
from .errors import DomainError
from .rays import LightRay, convergence_table, ray_limit
from .sampling import random_cone_x0, random_hermitian, random_z
from .spacetime import MinkowskiEvent, event_to_matrix, matrix_to_event
from .surgery import mod2_form, resolution_report, surgery_homology

CONFIG_ENV = "CAYLEY_U2_CONFIG"
MAX_SAMPLES = 10**7

SAMPLE_HEADER = [
    "index", "region", "x0", "x1", "x2", "x3", "z_re", "z_im",
    "u11_re", "u11_im", "u12_re", "u12_im", "u21_re", "u21_im", "u22_re", "u22_im",
    "trace_det_residual", "det_re", "det_im",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class Config:
    hermitian_tol: float = 1e-9
    unitary_tol: float = 1e-9
    eigtol: float = 1e-9
    output_format: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        # reuse the range check of the library tolerances
        try:
            Tolerances(hermitian=self.hermitian_tol, unitary=self.unitary_tol, eigen=self.eigtol)
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        if self.output_format not in (None, "json", "csv"):
            raise UsageError(f"unknown output format {self.output_format!r}")


_CONFIG_KEYS = {"hermitian_tol": float, "unitary_tol": float, "eigtol": float,
                "output_format": str, "seed": int}


def load_config(args) -> Config:
    values = {}
    path = args.config or os.environ.get(CONFIG_ENV)
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(data) - set(_CONFIG_KEYS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        try:
            values = {k: _CONFIG_KEYS[k](v) for k, v in data.items()}
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad config value: {exc}") from exc
    for key, flag in (("hermitian_tol", "tol_hermitian"), ("unitary_tol", "tol_unitary"),
                      ("eigtol", "eigtol"), ("output_format", "format"), ("seed", "seed")):
        value = getattr(args, flag, None)
        if value is not None:
            values[key] = value
    return Config(**values)


# --- parsing helpers --------------------------------------------------------------


def _floats(text: str, n: int, what: str) -> list[float]:
    try:
        xs = [float(c) for c in text.replace(" ", "").strip("()[]").split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}") from exc
    if len(xs) != n or not all(math.isfinite(x) for x in xs):
        raise UsageError(f"{what} needs {n} finite comma-separated numbers, got {text!r}")
    return xs


def _json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from exc


def _matrix(text: str):
    try:
        return serialize.matrix_from_json(_json(text, "--matrix"))
    except serialize.SchemaError as exc:
        raise UsageError(str(exc)) from exc


def _int_matrix(text: str):
    try:
        return serialize.integer_matrix_from_json(_json(text, "--matrix"))
    except serialize.SchemaError as exc:
        raise UsageError(str(exc)) from exc


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _json_only(cfg: Config, command: str) -> None:
    if cfg.output_format == "csv":
        raise UsageError(f"{command} produces JSON only")


# --- commands -------------------------------------------------------------------------


def cmd_transform(args, cfg: Config, out) -> None:
    _json_only(cfg, "transform")
    if (args.event is None) == (args.matrix is None):
        raise UsageError("give exactly one of --event or --matrix")
    if args.inverse:
        if args.event is not None:
            raise UsageError("--inverse takes a unitary --matrix")
        u = _matrix(args.matrix)
        label = classify_stratum(u, cfg.unitary_tol, cfg.eigtol)
        m = cayley_inverse(u, cfg.unitary_tol, cfg.eigtol)
        event = matrix_to_event(m, tol=math.inf)
        _emit_json({"direction": "inverse", "input": serialize.matrix_to_json(u),
                    "matrix": serialize.matrix_to_json(m),
                    "event": serialize.event_to_json(event),
                    "stratum": serialize.stratum_to_json(label)}, out)
        return
    if args.event is not None:
        m = event_to_matrix(MinkowskiEvent(*_floats(args.event, 4, "--event")))
    else:
        m = _matrix(args.matrix)
    event = matrix_to_event(m, cfg.hermitian_tol)
    u = cayley(m, cfg.hermitian_tol)
    label = classify_stratum(u, cfg.unitary_tol, cfg.eigtol)
    _emit_json({"direction": "forward", "input": serialize.event_to_json(event),
                "matrix": serialize.matrix_to_json(u),
                "stratum": serialize.stratum_to_json(label)}, out)


def cmd_classify(args, cfg: Config, out) -> None:
    _json_only(cfg, "classify")
    u = _matrix(args.matrix)
    label = classify_stratum(u, cfg.unitary_tol, cfg.eigtol)
    record = serialize.stratum_to_json(label)
    record["trace_det_residual"] = trace_det_identity_residual(u)
    if label.stratum is not Stratum.INTERIOR:
        record["boundary"] = serialize.boundary_to_json(
            boundary_coordinates(u, cfg.unitary_tol, cfg.eigtol))
    _emit_json(record, out)


def _sample_rows(region: str, n: int, seed: int):
    rng = np.random.default_rng(seed)
    for i in range(n):
        x = [""] * 4
        z = ["", ""]
        if region == "interior":
            m = random_hermitian(rng)
            x = list(matrix_to_event(m).as_tuple())
            u = cayley(m)
        else:
            zz = random_z(rng)
            z = ["inf", ""] if zz.is_infinite else [zz.value.real, zz.value.imag]
            if region == "cone":
                x0 = random_cone_x0(rng)
                x[0] = x0
                u = sigma_perp(x0, zz)
            else:
                u = -bubble_v(zz)
        d = u.det()
        entries = [c for e in u.entries for c in (e.real, e.imag)]
        yield [i, region, *x, *z, *entries, trace_det_identity_residual(u), d.real, d.imag]


def cmd_sample(args, cfg: Config, out) -> None:
    if args.n < 0 or args.n > MAX_SAMPLES:
        raise UsageError(f"n must be between 0 and {MAX_SAMPLES}")
    rows = _sample_rows(args.region, args.n, cfg.seed)
    if cfg.output_format == "json":
        _emit_json([dict(zip(SAMPLE_HEADER, r)) for r in rows], out)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(SAMPLE_HEADER)
    for r in rows:
        w.writerow([repr(c) if isinstance(c, float) else c for c in r])


def cmd_ray(args, cfg: Config, out) -> None:
    x = _floats(args.x, 3, "--x")
    v = _floats(args.v, 3, "--v")
    if not (0 < args.tmin <= args.tmax) or args.steps < 1:
        raise UsageError("need 0 < tmin <= tmax and steps >= 1")
    try:
        ray = LightRay.normalized(x, v)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ts = np.geomspace(args.tmin, args.tmax, args.steps) if args.steps > 1 else [args.tmax]
    table = convergence_table(ray, ts)
    if cfg.output_format == "json":
        _emit_json({"x": list(ray.x), "v": list(ray.v), "omega": ray.omega,
                    "limit": serialize.matrix_to_json(ray_limit(ray)),
                    "rows": [{"t": t, "distance": d} for t, d in table]}, out)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t", "distance"])
    for t, d in table:
        w.writerow([repr(t), repr(d)])


def cmd_snf(args, cfg: Config, out) -> None:
    _json_only(cfg, "snf")
    a = _int_matrix(args.matrix)
    ker, basis = kernel(a)
    _emit_json(serialize.snf_to_json(smith_normal_form(a), cokernel(a), ker, basis), out)


def cmd_surgery(args, cfg: Config, out) -> None:
    _json_only(cfg, "surgery")
    q = _int_matrix(args.matrix)
    h1, h2 = surgery_homology(q)
    record = serialize.surgery_to_json(h1, h2)
    record["mod2_form"] = mod2_form(q).tolist()
    record["exact"] = resolution_report(q).exact
    _emit_json(record, out)


def _pair(x: bw.BwElement) -> str:
    return "(" + ",".join(str(c) for c in x.b + x.s) + ")"


def cmd_bw(args, cfg: Config, out) -> None:
    _json_only(cfg, "bw")
    if args.dump:
        _emit_json({name: serialize.space_entry_to_json(e) for name, e in bw.registry().items()}, out)
        return
    if args.sequence:
        exact = bw.sequence_model_exactness()
        _emit_json({"exact_at": exact, "exact": all(exact),
                    "restriction_isomorphism": bw.restriction_is_isomorphism()}, out)
        return
    if args.space is None:
        raise UsageError("--space is required unless --dump or --sequence is given")
    try:
        space = bw.resolve_descriptor(args.space)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    record = {"space": space.name, "structure": serialize.group_to_json(bw.bw_structure(space))}

    def parse(text):
        try:
            return serialize.parse_bw_pair(space, text)
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise UsageError(str(exc)) from exc

    if args.check:
        rep = bw.bw_group_check(space, seed=cfg.seed)
        record["check"] = {"ok": rep.ok, "exhaustive": rep.exhaustive, "identity": rep.identity,
                           "inverses": rep.inverses, "associative": rep.associative,
                           "commutative": rep.commutative}
    if args.compose:
        elems = [parse(t) for t in args.compose]
        acc = elems[0]
        for e in elems[1:]:
            acc = acc + e
        record["result"] = serialize.bw_element_to_json(acc)
        record["pair"] = _pair(acc)
    if args.inverse:
        inv = -parse(args.inverse)
        record["inverse"] = serialize.bw_element_to_json(inv)
        record["inverse_pair"] = _pair(inv)
    if args.order:
        record["order"] = bw.element_order(parse(args.order))
    _emit_json(record, out)


# --- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cayley-u2", description="Cayley compactification and integer algebra tools.")
    p.add_argument("--tol-hermitian", type=float, default=None)
    p.add_argument("--tol-unitary", type=float, default=None)
    p.add_argument("--eigtol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--config", default=None, help=f"JSON config file (default ${CONFIG_ENV})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transform", help="Cayley transform of an event/Hermitian matrix, or its inverse")
    t.add_argument("--event", help="x0,x1,x2,x3")
    t.add_argument("--matrix", help="JSON: four [re,im] pairs, row-major")
    t.add_argument("--inverse", action="store_true")
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("classify", help="stratum of a unitary matrix")
    c.add_argument("--matrix", required=True)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sample", help="CSV samples of the three strata")
    s.add_argument("region", choices=("interior", "cone", "bubble"))
    s.add_argument("n", type=int)
    s.add_argument("--seed", type=int, default=None, dest="sub_seed")
    s.set_defaults(func=cmd_sample)

    r = sub.add_parser("ray", help="convergence table of a light ray")
    r.add_argument("--x", required=True, help="offset x1,x2,x3")
    r.add_argument("--v", required=True, help="direction (normalized)")
    r.add_argument("--tmax", type=float, default=1e6)
    r.add_argument("--tmin", type=float, default=1.0)
    r.add_argument("--steps", type=int, default=7)
    r.set_defaults(func=cmd_ray)

    n = sub.add_parser("snf", help="Smith normal form, cokernel and kernel")
    n.add_argument("--matrix", required=True, help="JSON array of integer rows")
    n.set_defaults(func=cmd_snf)

    g = sub.add_parser("surgery", help="H1 and H2 of surgery on a framed link")
    g.add_argument("--matrix", required=True, help="symmetric linking matrix as JSON")
    g.set_defaults(func=cmd_surgery)

    b = sub.add_parser("bw", help="Brauer-Wall group arithmetic")
    b.add_argument("--space", help="registry name, 'twisted' or 'point'")
    b.add_argument("--compose", nargs="+", metavar="ELEM", help='elements such as "(1,1)"')
    b.add_argument("--inverse", metavar="ELEM")
    b.add_argument("--order", metavar="ELEM")
    b.add_argument("--check", action="store_true", help="verify the group axioms")
    b.add_argument("--dump", action="store_true", help="print the registry")
    b.add_argument("--sequence", action="store_true", help="exactness of the model sequence")
    b.set_defaults(func=cmd_bw)
    return p


def _fail(code: str, message: str, status: int) -> int:
    json.dump({"error": code, "message": message}, sys.stderr)
    sys.stderr.write("\n")
    return status


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "sub_seed", None) is not None:
            args.seed = args.sub_seed
        cfg = load_config(args)
        with tolerances(hermitian=cfg.hermitian_tol, unitary=cfg.unitary_tol, eigen=cfg.eigtol):
            args.func(args, cfg, out)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except DomainError as exc:
        return _fail(exc.code, str(exc), 3)
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
