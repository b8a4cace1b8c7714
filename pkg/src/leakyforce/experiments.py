"""Reproducible experiment runs and report serialization.

Reports are plain data: ``experiment``, ``schema_version``, ``params`` and a
list of ``rows``.  Product-graph vertex sets appear as 1-based ``[row, col]``
pairs and hypercube vertex sets as bit-string labels, so every witness can be
re-verified from the report alone (see :func:`audit_report`).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import comb
from typing import Any

from .constructions import construct, load_q5_candidate, product_graph
from .graph import (
    Graph,
    GraphError,
    GraphFamilySpec,
    build_base_graph,
    direct_product,
    hypercube_graph,
    iter_bits,
    to_mask,
)
from .parallel import default_workers, map_ordered
from .search import heuristic_leaky_set_search, min_leaky_forcing_number
from .verify import count_failing_placements, is_leaky_forcing_set

SCHEMA_VERSION = 1
EXACT_MAX_VERTICES = 24
VERIFY_MAX_VERTICES = 64
CONJECTURE_MAX_VERTICES = 18
MAX_CLOSURES = 10**9
QD_EXACT_MAX_D = 4
# Values quoted in the literature for Z_(d-1)(Q_d); d = 5 is the size of the drawn candidate.
QD_QUOTED = {3: 6, 4: 10, 5: 18}
TIMING_KEYS = ("seconds",)


class GuardError(RuntimeError):
    """An experiment exceeds its desk-scale guard; pass ``force=True`` to run anyway."""


@dataclass
class ExperimentReport:
    experiment: str
    params: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self, include_timings: bool = False) -> dict[str, Any]:
        rows = self.rows
        if not include_timings:
            rows = [{k: v for k, v in row.items() if k not in TIMING_KEYS} for row in rows]
        return {
            "experiment": self.experiment,
            "schema_version": self.schema_version,
            "params": self.params,
            "rows": rows,
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> ExperimentReport:
        return cls(doc["experiment"], doc.get("params", {}), list(doc["rows"]), doc["schema_version"])


def formula_value(family: str, n: int, t: int | None = None) -> int | None:
    """Known Z_0 (and claimed Z_1) of the product family, or ``None`` where undefined."""
    if family == "kn_pt":
        if t % 2 == 0:
            return (n - 2) * t if n >= 3 else None
        return (n - 2) * t + 2 if n >= 2 else None
    if family == "kn_ct":
        if n < 3:
            return None
        return (n - 2) * t + (4 if t % 2 == 0 else 2)
    if family == "kn_kn":
        return n * n - 4 if n >= 3 else None
    raise GraphError(f"unknown family {family!r}")


def estimated_closures(vertex_count: int, ell: int, up_to: int | None = None) -> int:
    """Worst-case closure count for an exact search up to subset size ``up_to``."""
    up_to = vertex_count if up_to is None else up_to
    subsets = sum(comb(vertex_count, s) for s in range(up_to + 1))
    return subsets * max(1, comb(vertex_count, ell))


def _coords(labeling, mask: int | None) -> list[list[int]] | None:
    if mask is None:
        return None
    return [list(rc) for rc in labeling.coords(mask)]


def _labels(g: Graph, mask: int | None) -> list[str] | None:
    if mask is None:
        return None
    return [g.label(v) for v in iter_bits(mask)]


def _instance(family: str, n: int, t: int | None) -> dict[str, Any]:
    g, _ = product_graph(family, n, t)
    return {"family": family, "n": n, "t": t, "vertices": g.vertex_count}


def _exact_row(family: str, n: int, t: int | None, ell: int) -> dict[str, Any]:
    g, lab = product_graph(family, n, t)
    z0 = min_leaky_forcing_number(g, 0, workers=1)
    # Z_ell >= Z_0, so the zero-forcing value is a valid lower bound.
    zl = z0 if ell == 0 else min_leaky_forcing_number(g, ell, lower=z0.value, workers=1)
    return {
        **_instance(family, n, t),
        "mode": "exact",
        "ell": ell,
        "formula": formula_value(family, n, t),
        "z0": z0.value,
        "z_ell": zl.value,
        "resilient": zl.value == z0.value,
        "witness_z0": _coords(lab, z0.witness),
        "witness_z_ell": _coords(lab, zl.witness),
        "seconds": round(z0.wall_time + (zl.wall_time if ell else 0.0), 3),
    }


def _verify_row(family: str, n: int, t: int | None, ell: int) -> dict[str, Any]:
    cs = construct(family, n, t)
    g, lab = cs.graph()
    report = is_leaky_forcing_set(g, cs.mask(lab), ell, workers=1)
    formula = formula_value(family, n, t)
    return {
        **_instance(family, n, t),
        "mode": "verify",
        "ell": ell,
        "case_tag": cs.case_tag,
        "formula": formula,
        "construction_size": len(cs.coords),
        "size_matches_formula": len(cs.coords) == formula,
        "verified": report.passed,
        # A verified set of the known zero forcing size pins Z_ell to Z_0.
        "resilient": report.passed and len(cs.coords) == formula,
        "witness": _coords(lab, cs.mask(lab)),
        "failure_leaks": _coords(lab, report.witness_leaks),
        "failure_stall": _coords(lab, report.witness_stall),
    }


def _instances(family: str, n_range, t_range) -> list[tuple[int, int | None]]:
    if family == "kn_kn":
        return [(n, None) for n in n_range]
    return [(n, t) for n in n_range for t in t_range]


def run_resilience_report(
    family: str,
    n_range,
    t_range=(),
    ell: int = 1,
    mode: str = "exact",
    force: bool = False,
    workers: int | None = None,
) -> ExperimentReport:
    """Compare Z_ell with Z_0 over a grid of product instances.

    ``mode="exact"`` computes both numbers by exhaustive search;
    ``mode="verify"`` checks the explicit construction at ``ell`` instead.
    """
    if family not in ("kn_pt", "kn_ct", "kn_kn"):
        raise GraphError(f"unknown family {family!r}")
    if mode not in ("exact", "verify"):
        raise ValueError(f"mode must be 'exact' or 'verify', got {mode!r}")
    instances = _instances(family, list(n_range), list(t_range))
    for n, t in instances:
        size = n * (n if t is None else t)
        if force:
            continue
        if mode == "exact":
            if size > EXACT_MAX_VERTICES:
                raise GuardError(f"{family} n={n} t={t}: {size} vertices > {EXACT_MAX_VERTICES} for exact mode")
            if estimated_closures(size, ell) > MAX_CLOSURES:
                raise GuardError(f"{family} n={n} t={t}: closure budget {MAX_CLOSURES:.0e} exceeded")
        elif size > VERIFY_MAX_VERTICES:
            raise GuardError(f"{family} n={n} t={t}: {size} vertices > {VERIFY_MAX_VERTICES} for verify mode")
    row_fn = _exact_row if mode == "exact" else _verify_row
    workers = default_workers() if workers is None else workers
    rows = map_ordered(row_fn, [(family, n, t, ell) for n, t in instances], workers)
    params = {
        "family": family,
        "n": sorted({n for n, _ in instances}),
        "t": sorted({t for _, t in instances if t is not None}),
        "ell": ell,
        "mode": mode,
    }
    return ExperimentReport("resilience", params, rows)


def parse_family_spec(text: str) -> GraphFamilySpec:
    """Parse ``"complete:3"``-style base graph names."""
    family, _, param = text.partition(":")
    try:
        return GraphFamilySpec(family, int(param))
    except ValueError:
        raise GraphError(f"expected FAMILY:PARAM, got {text!r}") from None


def _z_chain(g: Graph, top: int) -> list:
    results = []
    lower = None
    for ell in range(top + 1):
        r = min_leaky_forcing_number(g, ell, lower=lower)
        results.append(r)
        lower = r.value
    return results


def run_conjecture_probe(name: str, params: dict[str, Any], force: bool = False) -> ExperimentReport:
    """Compute the numbers behind an open claim and record its outcome on one instance.

    ``kn-pt-2resilience`` / ``kn-ct-2resilience`` take ``n`` and ``t``;
    ``product-bound`` takes base graph names ``g`` and ``h`` and ``ell``.
    Only the chain Z_0 <= Z_1 <= Z_2 is treated as a hard check.
    """
    if name in ("kn-pt-2resilience", "kn-ct-2resilience"):
        family = "kn_pt" if name == "kn-pt-2resilience" else "kn_ct"
        n, t = int(params["n"]), int(params["t"])
        g, lab = product_graph(family, n, t)
        if g.vertex_count > CONJECTURE_MAX_VERTICES and not force:
            raise GuardError(f"{g.vertex_count} vertices > {CONJECTURE_MAX_VERTICES} for exact Z_2")
        z = _z_chain(g, 2)
        values = [r.value for r in z]
        if not values[0] <= values[1] <= values[2]:
            raise AssertionError(f"monotone chain violated: {values}")
        row = {
            **_instance(family, n, t),
            "formula": formula_value(family, n, t),
            "z0": values[0],
            "z1": values[1],
            "z2": values[2],
            "one_resilient": values[1] == values[0],
            "two_resilient": values[2] == values[0],
            "witness_z0": _coords(lab, z[0].witness),
            "witness_z1": _coords(lab, z[1].witness),
            "witness_z2": _coords(lab, z[2].witness),
            "seconds": round(sum(r.wall_time for r in z), 3),
        }
        if family == "kn_pt":
            row["conjecture_holds"] = values[2] > values[0]
        return ExperimentReport(name, {"n": n, "t": t}, [row])
    if name == "product-bound":
        gs, hs = parse_family_spec(params["g"]), parse_family_spec(params["h"])
        ell = int(params.get("ell", 1))
        g, h = build_base_graph(gs), build_base_graph(hs)
        prod, lab = direct_product(g, h)
        if prod.vertex_count > EXACT_MAX_VERTICES and not force:
            raise GuardError(f"{prod.vertex_count} vertices > {EXACT_MAX_VERTICES} for exact search")
        zp = min_leaky_forcing_number(prod, ell)
        zg = min_leaky_forcing_number(g, ell)
        zh = min_leaky_forcing_number(h, ell)
        row = {
            "g": f"{gs.family}:{gs.param}",
            "h": f"{hs.family}:{hs.param}",
            "ell": ell,
            "vertices": prod.vertex_count,
            "z_product": zp.value,
            "z_g": zg.value,
            "z_h": zh.value,
            "bound": zg.value * zh.value,
            "bound_holds": zp.value <= zg.value * zh.value,
            "witness_product": _coords(lab, zp.witness),
            "witness_g": [v + 1 for v in iter_bits(zg.witness)],
            "witness_h": [v + 1 for v in iter_bits(zh.witness)],
            "seconds": round(zp.wall_time + zg.wall_time + zh.wall_time, 3),
        }
        return ExperimentReport(name, {"g": row["g"], "h": row["h"], "ell": ell}, [row])
    raise ValueError(f"unknown conjecture probe {name!r}")


def _subcube_mask(g: Graph, mask: int, d: int) -> tuple[Graph, int, str]:
    """Restrict a Q_5 vertex set to the Q_d sub-cube the drawing nests it in.

    Q_3 is the first drawn sub-cube (prefix ``00``); Q_4 joins it with the
    sub-cube below (second bit ``0``).
    """
    pattern = {3: "00xxx", 4: "x0xxx", 5: "xxxxx"}[d]
    fixed = [(i, ch) for i, ch in enumerate(pattern) if ch != "x"]
    small = hypercube_graph(d)
    sub = 0
    for v in iter_bits(mask):
        lab = g.label(v)
        if all(lab[i] == ch for i, ch in fixed):
            free = "".join(ch for i, ch in enumerate(lab) if pattern[i] == "x")
            sub |= 1 << small.index_of_label(free)
    return small, sub, pattern


def run_qd_probe(
    d_values,
    mode: str = "exact",
    candidate: str | None = None,
    seed: int = 0,
    heuristic_restarts: int = 10,
    heuristic_seconds: float | None = None,
) -> ExperimentReport:
    """Probe Z_(d-1)(Q_d) against ``2**(d-2) + 2``.

    ``exact`` searches (d <= 4 only).  ``candidate`` verifies the bundled
    ``Q_5`` set (both transcription variants, or the file ``candidate``) and,
    for d < 5, its nested restriction to a sub-cube.  ``heuristic`` runs the
    local search at the quoted size.  The formula is reported next to the
    computed value and never reconciled with it.
    """
    if mode not in ("exact", "candidate", "heuristic"):
        raise ValueError(f"unknown qd mode {mode!r}")
    d_values = list(d_values)
    if mode == "exact" and any(d > QD_EXACT_MAX_D for d in d_values):
        raise GuardError(f"exact mode supports d <= {QD_EXACT_MAX_D}")
    if mode == "candidate" and any(d not in (3, 4, 5) for d in d_values):
        raise GraphError("candidate mode covers d in 3..5 (the Q_5 set and its nested sub-cubes)")
    rows = []
    for d in d_values:
        if d < 2:
            raise GraphError(f"d must be >= 2, got {d}")
        ell = d - 1
        g = hypercube_graph(d)
        base = {
            "d": d,
            "ell": ell,
            "vertices": g.vertex_count,
            "formula": 2 ** (d - 2) + 2,
            "quoted": QD_QUOTED.get(d),
        }
        if mode == "exact":
            r = min_leaky_forcing_number(g, ell)
            rows.append({
                **base,
                "mode": "exact",
                "value": r.value,
                "matches_formula": r.value == base["formula"],
                "matches_quoted": r.value == base["quoted"],
                "witness": _labels(g, r.witness),
                "seconds": round(r.wall_time, 3),
            })
        elif mode == "candidate":
            variants = ["file"] if candidate else ["primary", "alternate"]
            q5 = hypercube_graph(5)
            for variant in variants:
                cand = load_q5_candidate(path=candidate) if candidate else load_q5_candidate(variant)
                small, sub, pattern = _subcube_mask(q5, cand.mask(q5), d)
                rep = is_leaky_forcing_set(small, sub, ell)
                total, failing = count_failing_placements(small, sub, ell)
                rows.append({
                    **base,
                    "mode": "candidate",
                    "variant": variant,
                    "provenance": cand.provenance,
                    "subcube": pattern,
                    "size": bin(sub).count("1"),
                    "passed": rep.passed,
                    "placements_checked": rep.placements_checked,
                    "placements_total": total,
                    "placements_failing": failing,
                    "witness": _labels(small, sub),
                    "failure_leaks": _labels(small, rep.witness_leaks),
                    "failure_stall": _labels(small, rep.witness_stall),
                })
        else:
            target = QD_QUOTED.get(d, base["formula"])
            found = heuristic_leaky_set_search(
                g, ell, target, seed=seed, restarts=heuristic_restarts, max_seconds=heuristic_seconds
            )
            rows.append({
                **base,
                "mode": "heuristic",
                "target_size": target,
                "seed": seed,
                "found": found is not None,
                "witness": _labels(g, found),
            })
    params = {"d": d_values, "mode": mode, "seed": seed}
    if candidate:
        params["candidate"] = candidate
    return ExperimentReport("qd", params, rows)


def _row_graph(report: ExperimentReport, row: dict[str, Any]):
    if "family" in row:
        g, lab = product_graph(row["family"], row["n"], row.get("t"))
        return g, lambda coords: lab.mask(tuple(rc) for rc in coords)
    if "d" in row:
        g = hypercube_graph(row["d"])
        return g, lambda labels: to_mask(g.index_of_label(x) for x in labels)
    raise ValueError("row does not identify its graph")


def audit_report(report: ExperimentReport) -> list[dict[str, Any]]:
    """Re-verify every witness in a report through the leak checker.

    Returns one record per checked witness with the claimed and recomputed
    outcome.  A witness claimed to pass must pass; for rows whose size is
    claimed minimal no recount is attempted.
    """
    checks = []
    for i, row in enumerate(report.rows):
        if "g" in row and "h" in row:
            g = build_base_graph(parse_family_spec(row["g"]))
            h = build_base_graph(parse_family_spec(row["h"]))
            prod, lab = direct_product(g, h)
            ell = row["ell"]
            witnesses = [
                ("witness_product", prod, lab.mask(tuple(rc) for rc in row["witness_product"]), ell),
                ("witness_g", g, to_mask(v - 1 for v in row["witness_g"]), ell),
                ("witness_h", h, to_mask(v - 1 for v in row["witness_h"]), ell),
            ]
            for key, graph, mask, el in witnesses:
                ok = is_leaky_forcing_set(graph, mask, el).passed
                checks.append({"row": i, "witness": key, "ell": el, "claimed": True, "recomputed": ok})
            continue
        g, to_set = _row_graph(report, row)
        pairs = []
        if "z2" in row:
            pairs = [("witness_z0", 0), ("witness_z1", 1), ("witness_z2", 2)]
        elif "z0" in row:
            pairs = [("witness_z0", 0), ("witness_z_ell", row["ell"])]
        else:
            pairs = [("witness", row["ell"])]
        for key, ell in pairs:
            if row.get(key) is None:
                continue
            claimed = row.get("verified", row.get("passed", row.get("found", True)))
            ok = is_leaky_forcing_set(g, to_set(row[key]), ell).passed
            checks.append({"row": i, "witness": key, "ell": ell, "claimed": claimed, "recomputed": ok})
    return checks


def _flat(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit_report(report: ExperimentReport, fmt: str = "json", include_timings: bool = False) -> str:
    """Serialize a report as ``json``, ``csv`` or a plain-text ``table``.

    Timing fields are dropped unless ``include_timings`` so that JSON output
    is byte-identical across runs with the same parameters.
    """
    doc = report.to_dict(include_timings)
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    columns: list[str] = []
    for row in doc["rows"]:
        for key in row:
            if key not in columns:
                columns.append(key)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in doc["rows"]:
            writer.writerow([_flat(row.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "table":
        shown = [c for c in columns if not c.startswith(("witness", "failure_"))]
        cells = [[_flat(row.get(c)) for c in shown] for row in doc["rows"]]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(shown)]
        lines = [f"# {report.experiment} {json.dumps(report.params, sort_keys=True)}"]
        lines.append("  ".join(c.ljust(w) for c, w in zip(shown, widths)))
        lines.append("  ".join("-" * w for w in widths))
        lines.extend("  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in cells)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}; expected json, csv or table")
