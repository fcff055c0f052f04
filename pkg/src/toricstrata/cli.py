"""Command-line interface.

Commands operate on two small JSON file formats.

Cone file::

    {"schema": 1, "rank": 3, "rays": [[1, 0, 0], [1, 2, 0], [0, 1, 2]]}

Weight file (free coordinates first, then one per torsion factor)::

    {"schema": 1, "free_rank": 2, "torsion": [], "weights": [[1, 0], ...]}

Exit codes: 0 on success, 1 on any input problem, 2 when ``--strict`` is
set and the run left unresolved warnings (for example inconclusive
bounded searches).  JSON output is canonical: two-space indentation,
sorted keys, trailing newline.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import FgAbGroup
from .cones import Cone, build_cone
from .divisors import build_toric, face_orbit_data
from .engine import StratificationReport, StratifyOptions, stratify
from .errors import InputError
from .linalg import IntMatrix, integer_rank
from .luna import (
    WeightSystem,
    check_strongly_stable,
    gale_dual,
    luna_strata,
    weight_system,
)
from .roots import (
    connection_graph,
    default_box_bound,
    enumerate_roots,
    graph_components,
    isolated_faces,
)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# input files


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise InputError(f"{path}: file not found")
    except IsADirectoryError:
        raise InputError(f"{path}: is a directory")
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        )


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer")
    return value


def _as_int_rows(value, what: str) -> list[tuple[int, ...]]:
    if not isinstance(value, list):
        raise InputError(f"{what} must be a list of integer lists")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise InputError(f"{what}[{i}] must be a list of integers")
        rows.append(tuple(_as_int(x, f"{what}[{i}][{j}]") for j, x in enumerate(row)))
    return rows


def _checked_document(path: str, required: tuple[str, ...]):
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    if data.get("schema") != 1:
        raise InputError(f'{path}: expected "schema": 1')
    for key in required:
        if key not in data:
            raise InputError(f'{path}: missing required key "{key}"')
    return data


def _load_cone_file(path: str) -> tuple[int, list[tuple[int, ...]]]:
    data = _checked_document(path, ("rank", "rays"))
    rank = _as_int(data["rank"], f"{path}: rank")
    rays = _as_int_rows(data["rays"], f"{path}: rays")
    return rank, rays


def _load_pointed_cone(args) -> Cone:
    rank, rays = _load_cone_file(args.file)
    if not rays:
        raise InputError(
            f"{args.file}: no rays — the variety is a torus; "
            f"use the stratify command, which handles torus factors"
        )
    if integer_rank(IntMatrix.from_rows(rays, cols=rank)) < rank:
        raise InputError(
            f"{args.file}: rays span a proper subspace (torus factor present); "
            f"use the stratify command, which splits the factor off"
        )
    return build_cone(rank, rays, normalize=args.normalize)


def _load_weight_system(path: str) -> WeightSystem:
    data = _checked_document(path, ("free_rank", "torsion", "weights"))
    free_rank = _as_int(data["free_rank"], f"{path}: free_rank")
    if not isinstance(data["torsion"], list):
        raise InputError(f"{path}: torsion must be a list of integers")
    torsion = tuple(
        _as_int(x, f"{path}: torsion[{i}]") for i, x in enumerate(data["torsion"])
    )
    rows = _as_int_rows(data["weights"], f"{path}: weights")
    if not rows:
        raise InputError(f"{path}: at least one weight is required")
    group = FgAbGroup(free_rank, torsion)
    return weight_system(group, rows)


# ---------------------------------------------------------------------------
# rendering


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _idx_set(indices) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def _group_payload(group: FgAbGroup) -> dict:
    return {
        "free_rank": group.free_rank,
        "torsion": list(group.torsion),
        "name": group.describe(),
    }


def _verdict_payload(graph, i1: int, i2: int, verdict) -> dict:
    entry = {
        "from": list(graph.faces[i1].ray_indices),
        "to": list(graph.faces[i2].ray_indices),
        "status": verdict.status,
    }
    if verdict.witness is not None:
        entry["witness"] = list(verdict.witness.vector)
        entry["distinguished_ray"] = verdict.witness.distinguished_ray
    if verdict.certificate is not None:
        entry["certificate"] = verdict.certificate
    if verdict.bound_used is not None:
        entry["bound_used"] = verdict.bound_used
    return entry


def _verdict_text(graph, i1: int, i2: int, verdict) -> str:
    left = _idx_set(graph.faces[i1].ray_indices)
    right = _idx_set(graph.faces[i2].ray_indices)
    if verdict.status == "yes":
        detail = (
            f"yes, witness {_vec(verdict.witness.vector)} "
            f"(distinguished ray {verdict.witness.distinguished_ray})"
        )
    elif verdict.status == "no":
        detail = f"no ({verdict.certificate})"
    else:
        detail = f"inconclusive (searched box {verdict.bound_used})"
    return f"  {left} -> {right}: {detail}"


def _report_payload(report: StratificationReport) -> dict:
    graph = report.connections
    return {
        "schema": 1,
        "ambient_rank": report.ambient_rank,
        "torus_rank": report.torus_rank,
        "input_rays": [list(r) for r in report.input_rays],
        "cone": {
            "rank": report.cone.ambient_rank,
            "rays": [list(r) for r in report.cone.rays],
        },
        "class_group": _group_payload(report.class_group),
        "divisor_classes": [list(e.coords) for e in report.divisor_classes],
        "strata": [
            {
                "index": s.index,
                "dim": s.dim,
                "smooth": s.smooth,
                "structure": s.structure.describe(),
                "local_class_group": s.local_class_group.describe(),
                "subgroup_basis": [list(b) for b in s.subgroup.basis],
                "faces": [list(f.ray_indices) for f in s.faces],
                "orbit_dims": list(s.orbit_dims),
            }
            for s in report.strata
        ],
        "closure": [[a, b] for a, b in report.closure],
        "connections": {
            "box_bound": graph.box_bound,
            "verdicts": [
                _verdict_payload(graph, i1, i2, v) for i1, i2, v in graph.verdicts
            ],
        },
        "checks": {
            "subgroup_vs_luna": report.cross_checks.subgroup_vs_luna,
            "connections_refine": report.cross_checks.connections_refine,
            "connections_equal": report.cross_checks.connections_equal,
            "semigroup_verified": report.cross_checks.semigroup_verified,
            "smooth_iff_trivial_local_class": (
                report.cross_checks.smooth_iff_trivial_local_class
            ),
        },
        "warnings": list(report.warnings),
        "options": {
            "box_bound": report.box_bound,
            "coeff_bound": report.coeff_bound,
        },
    }


def _report_text(report: StratificationReport) -> list[str]:
    lines = [
        f"ambient rank {report.ambient_rank}, torus factor {report.torus_rank}",
    ]
    if report.cone.nrays:
        lines.append(
            f"pointed cone of rank {report.cone.ambient_rank} "
            f"with {report.cone.nrays} rays:"
        )
        for i, ray in enumerate(report.cone.rays):
            lines.append(f"  ray {i}: {_vec(ray)}")
        lines.append(f"class group: {report.class_group.describe()}")
        classes = "; ".join(
            f"ray {i} -> {_vec(e.coords)}"
            for i, e in enumerate(report.divisor_classes)
        )
        lines.append(f"divisor classes: {classes}")
    else:
        lines.append("the variety is a torus (no rays)")
    lines.append(f"strata ({len(report.strata)}), by descending dimension:")
    for s in report.strata:
        word = "smooth" if s.smooth else "singular"
        lines.append(
            f"  stratum {s.index}: dim {s.dim}, subgroup {s.structure.describe()}, "
            f"local class group {s.local_class_group.describe()}, {word}"
        )
        lines.append(
            "    faces: " + " ".join(_idx_set(f.ray_indices) for f in s.faces)
        )
        lines.append(
            "    orbit dims: " + ", ".join(str(d) for d in s.orbit_dims)
        )
    if report.closure:
        order = ", ".join(f"{a} < {b}" for a, b in report.closure)
        lines.append(f"closure order on strata (lower < upper): {order}")
    graph = report.connections
    yes = sum(1 for _, _, v in graph.verdicts if v.status == "yes")
    no = sum(1 for _, _, v in graph.verdicts if v.status == "no")
    open_ = len(graph.verdicts) - yes - no
    lines.append(
        f"connections: {len(graph.verdicts)} candidate pairs — {yes} connected, "
        f"{no} certified impossible, {open_} unresolved (box bound {graph.box_bound})"
    )
    checks = report.cross_checks
    equal = {True: "yes", False: "no", None: "undetermined"}[checks.connections_equal]
    lines.append(
        "cross-checks: subgroup/Luna agree; connections stay within strata; "
        f"components match strata: {equal}; semigroup generation verified: "
        f"{'yes' if checks.semigroup_verified else 'incomplete'}"
    )
    return lines


# ---------------------------------------------------------------------------
# commands


def _cmd_stratify(args):
    rank, rays = _load_cone_file(args.file)
    options = StratifyOptions(
        box_bound=args.bound,
        coeff_bound=args.coeff_bound,
        normalize=args.normalize,
    )
    report = stratify(rank, rays, options)
    return _report_payload(report), _report_text(report), list(report.warnings)


def _cmd_roots(args):
    cone = _load_pointed_cone(args)
    bound = args.bound if args.bound is not None else default_box_bound(cone)
    groups = enumerate_roots(cone, bound)
    payload = {
        "schema": 1,
        "box_bound": bound,
        "groups": [
            {
                "ray_index": i,
                "ray": list(cone.rays[i]),
                "roots": [list(r.vector) for r in group],
            }
            for i, group in enumerate(groups)
        ],
    }
    lines = [f"roots with coordinates in [-{bound}, {bound}], by distinguished ray:"]
    for i, group in enumerate(groups):
        lines.append(f"  ray {i} = {_vec(cone.rays[i])}: {len(group)} found")
        for root in group:
            lines.append(f"    {_vec(root.vector)}")
    return payload, lines, []


def _cmd_connections(args):
    cone = _load_pointed_cone(args)
    bound = args.bound if args.bound is not None else default_box_bound(cone)
    graph = connection_graph(cone, bound)
    components = graph_components(graph)
    isolated = isolated_faces(graph)
    inconclusive = sum(1 for _, _, v in graph.verdicts if v.status == "inconclusive")
    payload = {
        "schema": 1,
        "box_bound": bound,
        "faces": [list(f.ray_indices) for f in graph.faces],
        "verdicts": [
            _verdict_payload(graph, i1, i2, v) for i1, i2, v in graph.verdicts
        ],
        "components": [
            [list(graph.faces[i].ray_indices) for i in comp] for comp in components
        ],
        "isolated": [
            {
                "face": list(entry.face.ray_indices),
                "fully_certified": entry.fully_certified,
            }
            for entry in isolated
        ],
    }
    lines = [f"candidate pairs ({len(graph.verdicts)}), box bound {bound}:"]
    lines.extend(_verdict_text(graph, i1, i2, v) for i1, i2, v in graph.verdicts)
    lines.append(f"components over yes-edges ({len(components)}):")
    for comp in components:
        lines.append(
            "  " + " ".join(_idx_set(graph.faces[i].ray_indices) for i in comp)
        )
    if isolated:
        parts = [
            _idx_set(e.face.ray_indices)
            + ("" if e.fully_certified else " (searches inconclusive)")
            for e in isolated
        ]
        lines.append("faces with no connection: " + ", ".join(parts))
    warnings = []
    if inconclusive:
        warnings.append(
            f"{inconclusive} connection searches were inconclusive at box bound "
            f"{bound} — raise the bound to resolve"
        )
    return payload, lines, warnings


def _cmd_luna(args):
    ws = _load_weight_system(args.file)
    strata = luna_strata(ws)
    payload = {
        "schema": 1,
        "group": _group_payload(ws.group),
        "weights": [list(w.coords) for w in ws.weights],
        "strata": [
            {
                "dim": s.dim,
                "structure": s.structure.describe(),
                "subgroup_basis": [list(b) for b in s.subgroup.basis],
                "supports": [list(sup) for sup in s.supports],
            }
            for s in strata
        ],
    }
    lines = [
        f"character group {ws.group.describe()}, {ws.ncoordinates} weights",
        f"Luna strata ({len(strata)}), by descending dimension:",
    ]
    for i, s in enumerate(strata):
        lines.append(
            f"  stratum {i}: dim {s.dim}, stabilizer characters generate "
            f"{s.structure.describe()}"
        )
        lines.append(
            "    supports: " + " ".join(_idx_set(sup) for sup in s.supports)
        )
    return payload, lines, []


def _cmd_stable(args):
    ws = _load_weight_system(args.file)
    report = check_strongly_stable(ws)
    payload = {
        "schema": 1,
        "group": _group_payload(ws.group),
        "weights": [list(w.coords) for w in ws.weights],
        "stable": report.stable,
        "failures": [
            {"support": list(f.support), "reason": f.reason}
            for f in report.failures
        ],
    }
    lines = []
    if report.stable:
        lines.append("strongly stable: yes")
        try:
            dual = gale_dual(ws)
        except InputError as exc:
            payload["dual_cone"] = None
            lines.append(f"dual cone: not available ({exc})")
        else:
            payload["dual_cone"] = {
                "rank": dual.cone.ambient_rank,
                "rays": [list(r) for r in dual.cone.rays],
            }
            lines.append(
                f"dual cone: rank {dual.cone.ambient_rank}, rays "
                + " ".join(_vec(r) for r in dual.cone.rays)
            )
    else:
        lines.append("strongly stable: no")
        for f in report.failures:
            lines.append(f"  support {_idx_set(f.support)}: {f.reason}")
    return payload, lines, []


def _cmd_classgroup(args):
    cone = _load_pointed_cone(args)
    toric = build_toric(cone)
    entries = [face_orbit_data(toric, face) for face in toric.faces]
    payload = {
        "schema": 1,
        "cone": {"rank": cone.ambient_rank, "rays": [list(r) for r in cone.rays]},
        "class_group": _group_payload(toric.class_group),
        "divisor_classes": [list(e.coords) for e in toric.divisor_classes],
        "faces": [
            {
                "rays": list(d.face.ray_indices),
                "orbit_dim": d.orbit_dim,
                "local_class_group": d.local_class_group.describe(),
                "smooth": d.smooth,
            }
            for d in entries
        ],
    }
    lines = [
        f"class group: {toric.class_group.describe()}",
        "divisor classes: "
        + "; ".join(
            f"ray {i} -> {_vec(e.coords)}" for i, e in enumerate(toric.divisor_classes)
        ),
        "local class groups by face:",
    ]
    for d in entries:
        word = "smooth" if d.smooth else "singular"
        lines.append(
            f"  face {_idx_set(d.face.ray_indices)}: orbit dim {d.orbit_dim}, "
            f"local class group {d.local_class_group.describe()}, {word}"
        )
    return payload, lines, []


# ---------------------------------------------------------------------------
# parser


def _add_common(parser: argparse.ArgumentParser, *, bound: bool, cone_input: bool):
    parser.add_argument("file", help="input JSON file")
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="exit with code 2 if the run leaves unresolved warnings",
    )
    if bound:
        parser.add_argument(
            "--bound",
            type=int,
            default=None,
            metavar="N",
            help="coordinate box for witness searches "
            "(default: 10 times the largest ray coordinate)",
        )
    if cone_input:
        parser.add_argument(
            "--normalize",
            action="store_true",
            help="accept non-primitive ray generators by scaling them down",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="toricstrata",
        description=(
            "Exact orbit decomposition of affine toric varieties, with "
            "divisor class groups, roots, and one-parameter connections."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser(
        "stratify",
        help="full orbit decomposition of the variety of a cone, cross-validated",
    )
    _add_common(p, bound=True, cone_input=True)
    p.add_argument(
        "--coeff-bound",
        type=int,
        default=16,
        metavar="N",
        help="first-pass coefficient cap for the semigroup verification",
    )
    p.set_defaults(handler=_cmd_stratify)

    p = sub.add_parser("roots", help="enumerate roots of a cone within a box")
    _add_common(p, bound=True, cone_input=True)
    p.set_defaults(handler=_cmd_roots)

    p = sub.add_parser(
        "connections",
        help="decide which orbit pairs a one-parameter subgroup connects",
    )
    _add_common(p, bound=True, cone_input=True)
    p.set_defaults(handler=_cmd_connections)

    p = sub.add_parser(
        "luna", help="Luna strata of a diagonal quasitorus action (weight file)"
    )
    _add_common(p, bound=False, cone_input=False)
    p.set_defaults(handler=_cmd_luna)

    p = sub.add_parser(
        "stable",
        help="check strong stability of a weight system and rebuild its cone",
    )
    _add_common(p, bound=False, cone_input=False)
    p.set_defaults(handler=_cmd_stable)

    p = sub.add_parser(
        "classgroup",
        help="divisor class group and local class groups of a cone",
    )
    _add_common(p, bound=False, cone_input=True)
    p.set_defaults(handler=_cmd_classgroup)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "bound", None) is not None and args.bound < 0:
            raise InputError("--bound must be nonnegative")
        if getattr(args, "coeff_bound", 1) < 1:
            raise InputError("--coeff-bound must be positive")
        payload, lines, warnings = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        for warning in warnings:
            print(f"warning: {warning}")
    if args.strict and warnings:
        print("strict mode: unresolved warnings remain", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
