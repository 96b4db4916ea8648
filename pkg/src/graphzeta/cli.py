"""Command-line front end.

All commands read graph and voltage files in the JSON formats documented
in the README and write JSON to stdout (or --output).  Exit codes are a
stable contract:

    0  success
    1  a theorem check failed (witness in the report)
    2  input could not be parsed
    3  the input graph failed validation (message names the assumption)
    4  the derived cover is disconnected where a connected one is required
    5  misuse (bad flags, bad group spec, bounds out of range)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .covers import (
    DerivedCover,
    DisconnectedCoverError,
    VoltageAssignment,
    derive,
    voltages_from_json,
    voltages_to_json,
)
from .exact.groups import FiniteAbelianGroup
from .lfunctions import l_reciprocal, theta_element, zeta_reciprocal
from .multigraph import (
    GraphFormatError,
    GraphValidationError,
    graph_from_json,
    graph_to_json,
    jacobian,
    kappa,
)
from .randgraphs import instance_rng, random_connected_multigraph, random_voltage_assignment
from .verifier import KurodaNotApplicableError, run_checks

EXIT_OK = 0
EXIT_THEOREM = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_DISCONNECTED = 4
EXIT_MISUSE = 5

MAX_SWEEP_VERTICES = 8
MAX_SWEEP_EDGES = 16
MAX_SWEEP_GROUP = 16


class MisuseError(ValueError):
    pass


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str):
    return graph_from_json(_load_json(path))


def _load_cover(graph_path: str, voltage_path: str) -> DerivedCover:
    base = _load_graph(graph_path)
    assignment = voltages_from_json(_load_json(voltage_path))
    # a voltage count mismatch surfaces as ValueError -> exit 3
    return derive(base, assignment)


def _emit(payload: dict | str, args) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_group(spec: str) -> FiniteAbelianGroup:
    try:
        orders = tuple(int(part) for part in spec.split(","))
    except ValueError as exc:
        raise MisuseError(f"bad group spec {spec!r}") from exc
    if not orders or any(n < 1 for n in orders):
        raise MisuseError(f"bad group spec {spec!r}")
    return FiniteAbelianGroup(orders)


def cmd_kappa(args) -> int:
    x = _load_graph(args.graph)
    value = kappa(x)
    if args.text:
        _emit(str(value), args)
    else:
        _emit({"kappa": value}, args)
    return EXIT_OK


def cmd_jacobian(args) -> int:
    x = _load_graph(args.graph)
    jac = jacobian(x)
    if args.text:
        _emit(" ".join(str(d) for d in jac.invariant_factors) + f" (order {jac.order})", args)
    else:
        _emit({"invariant_factors": list(jac.invariant_factors), "order": jac.order}, args)
    return EXIT_OK


def cmd_zeta(args) -> int:
    x = _load_graph(args.graph)
    z = zeta_reciprocal(x)
    if args.text:
        _emit(f"coeffs {list(z.reciprocal.coeffs)} r {z.r} ord {z.order} lead {z.lead}", args)
    else:
        _emit({"reciprocal": list(z.reciprocal.coeffs), "r": z.r,
               "ord": z.order, "lead": z.lead}, args)
    return EXIT_OK


def cmd_cover(args) -> int:
    cover = _load_cover(args.graph, args.voltages)
    payload = graph_to_json(cover.graph)
    payload["connected"] = cover.is_connected
    _emit(payload, args)
    return EXIT_OK


def cmd_lfunctions(args) -> int:
    cover = _load_cover(args.graph, args.voltages)
    if not cover.is_connected:
        raise DisconnectedCoverError("derived cover is disconnected")
    rows = []
    lines = []
    for chi in cover.group.characters():
        data = l_reciprocal(cover, chi)
        rows.append({
            "character": list(chi.exponents),
            "reciprocal": [list(c.coeffs) for c in data.reciprocal.coeffs],
            "ord": data.order,
            "lead": data.lead.to_json(),
        })
        lines.append(f"chi={chi.exponents} ord={data.order} lead={list(data.lead.coeffs)}")
    if args.text:
        _emit("\n".join(lines), args)
    else:
        _emit({"conductor": cover.group.exponent, "characters": rows}, args)
    return EXIT_OK


def cmd_theta(args) -> int:
    cover = _load_cover(args.graph, args.voltages)
    if not cover.is_connected:
        raise DisconnectedCoverError("derived cover is disconnected")
    theta = theta_element(cover).value
    if args.text:
        _emit(", ".join(f"{sigma}:{c}" for sigma, c in theta.to_pairs()), args)
    else:
        _emit({"group": list(cover.group.orders),
               "theta": [{"element": list(sigma), "coeff": c} for sigma, c in theta.to_pairs()]},
              args)
    return EXIT_OK


CHECK_FLAGS = ("annihilation", "index", "kuroda", "product", "divisibility", "jac0")


def cmd_verify(args) -> int:
    cover = _load_cover(args.graph, args.voltages)
    if not cover.is_connected:
        raise DisconnectedCoverError("derived cover is disconnected")
    selected = [name for name in CHECK_FLAGS if getattr(args, name)]
    names = None if (args.all or not selected) else selected
    report = run_checks(cover, names)
    if args.text:
        _emit("\n".join(f"{o.name}: {o.status}" for o in report.outcomes), args)
    else:
        _emit(report.to_json(include_timings=args.timings), args)
    return EXIT_OK if report.all_passed else EXIT_THEOREM


def _sweep_instance(seed: int, index: int, max_vertices: int, max_edges: int,
                    group: FiniteAbelianGroup, allow_loops: bool) -> dict:
    rng = instance_rng(seed, index)
    for _ in range(10000):
        n = rng.randint(2, max_vertices)
        max_extra = max_edges - (n - 1)
        if max_extra < 1:
            continue
        extra = rng.randint(1, max_extra)
        base = random_connected_multigraph(rng, n, extra, allow_loops=allow_loops, min_degree=2)
        break
    else:
        raise MisuseError("sweep bounds leave no room for valid graphs")
    assignment = random_voltage_assignment(rng, group, len(base.edges))
    cover = derive(base, assignment)
    record = {
        "id": f"{seed}-{index}",
        "graph": graph_to_json(base),
        "voltages": voltages_to_json(assignment),
        "connected": cover.is_connected,
    }
    if cover.is_connected:
        report = run_checks(cover)
        record["results"] = report.to_json()["results"]
    return record


def cmd_sweep(args) -> int:
    if args.vertices > MAX_SWEEP_VERTICES or args.vertices < 2:
        raise MisuseError(f"--vertices must be in 2..{MAX_SWEEP_VERTICES}")
    if args.edges > MAX_SWEEP_EDGES or args.edges < 2:
        raise MisuseError(f"--edges must be in 2..{MAX_SWEEP_EDGES}")
    if args.count < 0:
        raise MisuseError("--count must be nonnegative")
    group = _parse_group(args.group)
    if group.order > MAX_SWEEP_GROUP:
        raise MisuseError(f"--group order must be at most {MAX_SWEEP_GROUP}")
    jobs = args.jobs or int(os.environ.get("GRAPHZETA_JOBS", "1"))
    if jobs < 1:
        raise MisuseError("--jobs must be positive")

    def work(i: int) -> dict:
        return _sweep_instance(args.seed, i, args.vertices, args.edges, group, not args.no_loops)

    if jobs == 1:
        records = [work(i) for i in range(args.count)]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(work, range(args.count)))
    records.sort(key=lambda r: int(r["id"].rsplit("-", 1)[1]))
    skipped = sum(1 for r in records if not r["connected"])
    failed = [r["id"] for r in records
              if r["connected"] and any(res["status"] == "fail" for res in r["results"].values())]
    report = {
        "config": {"vertices": args.vertices, "edges": args.edges,
                   "group": list(group.orders), "count": args.count, "seed": args.seed,
                   "loops": not args.no_loops},
        "instances": records,
        "summary": {"attempted": args.count, "skipped_disconnected": skipped,
                    "verified": args.count - skipped, "failed": failed},
    }
    if args.text:
        s = report["summary"]
        _emit(f"attempted {s['attempted']}, skipped {s['skipped_disconnected']} disconnected, "
              f"verified {s['verified']}, failed {len(failed)}", args)
    else:
        _emit(report, args)
    return EXIT_THEOREM if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphzeta",
        description="Exact zeta and L-functions of abelian multigraph covers, "
                    "with machine verification of their special-value identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", "-o", help="write JSON here instead of stdout")
        p.add_argument("--text", action="store_true", help="human-readable output")

    p = sub.add_parser("kappa", help="spanning-tree count of a graph")
    p.add_argument("graph")
    add_common(p)
    p.set_defaults(fn=cmd_kappa)

    p = sub.add_parser("jacobian", help="invariant factors of the Jacobian")
    p.add_argument("graph")
    add_common(p)
    p.set_defaults(fn=cmd_jacobian)

    p = sub.add_parser("zeta", help="reciprocal zeta polynomial and its value data at u=1")
    p.add_argument("graph")
    add_common(p)
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("cover", help="derived cover of a voltage assignment")
    p.add_argument("graph")
    p.add_argument("voltages")
    add_common(p)
    p.set_defaults(fn=cmd_cover)

    p = sub.add_parser("lfunctions", help="reciprocal L-polynomials, one row per character")
    p.add_argument("graph")
    p.add_argument("voltages")
    add_common(p)
    p.set_defaults(fn=cmd_lfunctions)

    p = sub.add_parser("theta", help="equivariant special-value element of Z[G]")
    p.add_argument("graph")
    p.add_argument("voltages")
    add_common(p)
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("verify", help="verify special-value theorems on a cover")
    p.add_argument("graph")
    p.add_argument("voltages")
    p.add_argument("--all", action="store_true", help="run every applicable check (default)")
    for name in CHECK_FLAGS:
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock times in the report")
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="verify random covers in bulk")
    p.add_argument("--vertices", type=int, default=5, help="max base vertices")
    p.add_argument("--edges", type=int, default=10, help="max base edges")
    p.add_argument("--group", default="2", help="cyclic orders, e.g. 2,2")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=0,
                   help="work-pool width; default from GRAPHZETA_JOBS or 1")
    p.add_argument("--no-loops", action="store_true", help="forbid loop edges")
    add_common(p)
    p.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_MISUSE
    try:
        return args.fn(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphValidationError as exc:
        msg = str(exc) or "voltage count does not match the base edge count"
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_VALIDATION
    except DisconnectedCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (MisuseError, KurodaNotApplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISUSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
