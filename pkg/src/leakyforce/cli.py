"""``forcing`` command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import experiments as ex
from .constructions import construct, load_constructed_set, product_graph
from .forcing import closure
from .graph import (
    GraphError,
    GraphFamilySpec,
    GridLabeling,
    build_base_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    direct_product,
    iter_bits,
    load_graph,
    path_graph,
    save_graph,
    to_mask,
)
from .search import min_leaky_forcing_number
from .verify import is_leaky_forcing_set

_PAIR = re.compile(r"\(?\s*(\d+)\s*,\s*(\d+)\s*\)?")
_GRID_COMMENT = re.compile(r"^#\s*grid\s+rows=(\d+)\s+cols=(\d+)", re.M)


def parse_range(text: str) -> list[int]:
    """``"3..5"`` -> ``[3, 4, 5]``; ``"4"`` -> ``[4]``; ``"2,5"`` -> ``[2, 5]``."""
    out: list[int] = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    return out


def parse_vertex_set(text: str, labeling: GridLabeling | None) -> int:
    """Parse ``"1,1 2,3"`` coordinates or ``"0 4 7"`` vertex indices.

    ``text`` may also name a file holding either form, or a JSON document
    with a ``coords`` list.
    """
    if text and os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
        stripped = text.strip()
        if stripped.startswith("{"):
            text = " ".join(f"{r},{c}" for r, c in json.loads(stripped)["coords"])
        elif stripped.startswith("["):
            text = " ".join(f"{r},{c}" for r, c in json.loads(stripped))
    pairs = _PAIR.findall(text)
    if pairs:
        if labeling is None:
            raise GraphError("coordinates need a grid labeling; pass --rows or use a graph file with a grid comment")
        return labeling.mask((int(r), int(c)) for r, c in pairs)
    return to_mask(int(tok) for tok in re.split(r"[\s;]+", text.strip()) if tok)


def _show(mask: int, labeling: GridLabeling | None) -> str:
    if labeling is None:
        return " ".join(str(v) for v in iter_bits(mask))
    return " ".join(f"({r},{c})" for r, c in labeling.coords(mask))


def _family_graph(family: str, n: int, t: int | None, product: str = "direct"):
    if family in ("complete", "path", "cycle", "hypercube"):
        return build_base_graph(GraphFamilySpec(family, n)), None
    second = {"kn-pt": path_graph, "kn-ct": cycle_graph, "kn-kn": complete_graph}.get(family)
    if second is None:
        raise GraphError(f"unknown family {family!r}")
    if family != "kn-kn" and t is None:
        raise GraphError(f"--t is required for {family}")
    op = direct_product if product == "direct" else cartesian_product
    return op(complete_graph(n), second(n if family == "kn-kn" else t))


def cmd_graph(args) -> int:
    g, lab = _family_graph(args.family, args.n, args.t, args.product)
    text = save_graph(g)
    if lab is not None:
        header, _, rest = text.partition("\n")
        text = f"{header}\n# grid rows={lab.rows} cols={lab.cols}\n{rest}"
    with open(args.out, "w") as fh:
        fh.write(text)
    print(f"wrote {g.vertex_count} vertices, {g.edge_count} edges to {args.out}")
    return 0


def _read_graph(path: str, rows: int | None):
    with open(path) as fh:
        text = fh.read()
    g = load_graph(text)
    lab = None
    m = _GRID_COMMENT.search(text)
    if rows is not None:
        lab = GridLabeling(rows, g.vertex_count // rows)
    elif m:
        lab = GridLabeling(int(m.group(1)), int(m.group(2)))
    if lab is not None and lab.size != g.vertex_count:
        raise GraphError("grid labeling does not cover the graph")
    return g, lab


def cmd_closure(args) -> int:
    g, lab = _read_graph(args.graph, args.rows)
    initial = parse_vertex_set(args.initial, lab)
    leaks = parse_vertex_set(args.leaks, lab) if args.leaks else 0
    chron = closure(g, initial, leaks)
    for forcer, forced, rnd in chron.events:
        if lab is None:
            print(f"round {rnd}: {forcer} -> {forced}")
        else:
            print(f"round {rnd}: {lab.to_coord(forcer)} -> {lab.to_coord(forced)}")
    print(f"stalled: {str(chron.stalled).lower()}")
    print(f"final: {_show(chron.final, lab)}")
    return 1 if chron.stalled else 0


def cmd_verify(args) -> int:
    family = args.family.replace("-", "_")
    if args.set == "construct":
        cs = construct(family, args.n, args.t)
    else:
        with open(args.set) as fh:
            cs = load_constructed_set(json.load(fh))
    g, lab = product_graph(family, args.n, args.t)
    rep = is_leaky_forcing_set(g, cs.mask(lab), args.ell)
    print(json.dumps({
        "family": family,
        "n": args.n,
        "t": args.t,
        "ell": args.ell,
        "size": len(cs.coords),
        "passed": rep.passed,
        "placements_checked": rep.placements_checked,
        "witness_leaks": None if rep.witness_leaks is None else [list(x) for x in lab.coords(rep.witness_leaks)],
        "witness_stall": None if rep.witness_stall is None else [list(x) for x in lab.coords(rep.witness_stall)],
    }, indent=2))
    return 0 if rep.passed else 1


def cmd_min(args) -> int:
    g, lab = _read_graph(args.graph, args.rows)
    r = min_leaky_forcing_number(
        g,
        args.ell,
        lower=args.lower,
        upper=args.upper,
        max_subsets=args.budget_subsets,
        max_seconds=args.budget_seconds,
    )
    print(json.dumps({
        "ell": args.ell,
        "value": r.value,
        "witness": None if r.witness is None else _show(r.witness, lab),
        "sizes_exhausted": r.sizes_exhausted,
        "subsets_tested": r.subsets_tested,
        "wall_time": round(r.wall_time, 3),
    }, indent=2))
    return 0 if r.value is not None else 2


def _emit(report, args) -> None:
    text = ex.emit_report(report, args.format, include_timings=args.timings)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_resilience(args) -> int:
    report = ex.run_resilience_report(
        args.family.replace("-", "_"),
        parse_range(args.n),
        parse_range(args.t) if args.t else [],
        ell=args.ell,
        mode=args.mode,
        force=args.force,
    )
    _emit(report, args)
    return 0


def cmd_conjecture(args) -> int:
    params = {"n": args.n, "t": args.t, "g": args.g, "h": args.h, "ell": args.ell}
    report = ex.run_conjecture_probe(args.name, params, force=args.force)
    _emit(report, args)
    return 0


def cmd_qd(args) -> int:
    report = ex.run_qd_probe(
        parse_range(args.d),
        mode=args.mode,
        candidate=args.candidate,
        seed=args.seed,
        heuristic_restarts=args.restarts,
        heuristic_seconds=args.heuristic_seconds,
    )
    _emit(report, args)
    return 0


def cmd_audit(args) -> int:
    with open(args.report) as fh:
        report = ex.ExperimentReport.from_dict(json.load(fh))
    bad = 0
    for check in ex.audit_report(report):
        ok = check["claimed"] == check["recomputed"]
        bad += not ok
        print(f"{'ok ' if ok else 'BAD'} row {check['row']} {check['witness']} ell={check['ell']} "
              f"claimed={check['claimed']} recomputed={check['recomputed']}")
    return 1 if bad else 0


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="include wall-clock fields")
    p.add_argument("--force", action="store_true", help="ignore desk-scale guards")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcing", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="write a graph file")
    p.add_argument("--family", required=True,
                   choices=("complete", "path", "cycle", "hypercube", "kn-pt", "kn-ct", "kn-kn"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--product", choices=("direct", "cartesian"), default="direct")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("closure", help="run the forcing closure and print the chronicle")
    p.add_argument("--graph", required=True)
    p.add_argument("--initial", required=True, help="coordinates '1,1 2,3', vertex indices, or a file")
    p.add_argument("--leaks", default="")
    p.add_argument("--rows", type=int, help="grid row count for coordinate input")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("verify", help="check a set for l-leaky forcing on a product family")
    p.add_argument("--family", required=True, choices=("kn-pt", "kn-ct", "kn-kn"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--set", default="construct", help="'construct' or a JSON set file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("min", help="exact minimum l-leaky forcing number")
    p.add_argument("--graph", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--lower", type=int)
    p.add_argument("--upper", type=int)
    p.add_argument("--budget-subsets", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--rows", type=int)
    p.set_defaults(func=cmd_min)

    p = sub.add_parser("resilience", help="Z_l versus Z_0 over product instances")
    p.add_argument("--family", required=True, choices=("kn-pt", "kn-ct", "kn-kn"))
    p.add_argument("--n", required=True, help="e.g. 3..5")
    p.add_argument("--t", help="e.g. 2..6 (ignored for kn-kn)")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--mode", choices=("exact", "verify"), default="exact")
    _add_output(p)
    p.set_defaults(func=cmd_resilience)

    p = sub.add_parser("conjecture", help="probe an open question on one instance")
    p.add_argument("name", choices=("kn-pt-2resilience", "kn-ct-2resilience", "product-bound"))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--g", default="complete:3", help="FAMILY:PARAM for product-bound")
    p.add_argument("--h", default="complete:3")
    p.add_argument("--ell", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("qd", help="hypercube Z_(d-1)(Q_d) probes")
    p.add_argument("--d", required=True, help="e.g. 3..5")
    p.add_argument("--mode", choices=("exact", "candidate", "heuristic"), default="exact")
    p.add_argument("--candidate", help="JSON file with a 'labels' list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--heuristic-seconds", type=float, default=120.0)
    _add_output(p)
    p.set_defaults(func=cmd_qd)

    p = sub.add_parser("audit", help="re-verify every witness in a JSON report")
    p.add_argument("report")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ex.GuardError, ValueError) as err:
        print(f"forcing: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
