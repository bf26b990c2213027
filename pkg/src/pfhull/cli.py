"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 resource bound exceeded.  Every computed number is written as a string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Any, Iterable

from . import kernels
from .core import edge_graph, vertex_count, vertices
from .errors import ContractError, ResourceBoundError
from .faces import enumerate_faces, f_vector, face_vertices
from .lattice import (
    lattice_count,
    postnikov_slice_count,
    slice_count_bruteforce,
    slice_spec,
    slice_vertex_type,
)
from .scan import BUDGET_ENV, default_budget
from .verify import FAIL, run_checks
from .volume import ehrhart_count, volume

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
FVECTOR_MAX_N = 30


def fmt(x: Any) -> Any:
    """Exact values as strings ("p/q" for non-integral rationals)."""
    if isinstance(x, bool):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return x


class UsageError(Exception):
    pass


def _n_in(n: int, lo: int, hi: int | None = None) -> int:
    if n < lo or (hi is not None and n > hi):
        bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
        raise UsageError(f"--n must be {bound}, got {n}")
    return n


def cmd_fvector(args) -> dict:
    n = _n_in(args.n, 1, FVECTOR_MAX_N)
    return {"n": n, "f": fmt(f_vector(n)), "provenance": "formula"}


def cmd_volume(args) -> dict:
    n = _n_in(args.n, 0)
    return {"n": n, "volume": fmt(volume(n)), "provenance": "formula"}


def cmd_lattice(args) -> dict:
    n = _n_in(args.n, 1)
    count = lattice_count(n, args.method, shards=args.shards,
                          budget=args.budget)
    provenance = "formula" if args.method == "closed" else "oracle"
    return {"n": n, "count": fmt(count), "method": args.method,
            "provenance": provenance}


def cmd_ehrhart(args) -> dict:
    n = _n_in(args.n, 1)
    if args.m < 0:
        raise UsageError(f"--m must be >= 0, got {args.m}")
    c = ehrhart_count(n, args.m, shards=args.shards, budget=args.budget)
    return {"n": n, "m": args.m, "count": fmt(c), "provenance": "oracle"}


def cmd_slice(args) -> dict:
    n = _n_in(args.n, 1)
    spec = slice_spec(n, args.s)
    closed = postnikov_slice_count(n, args.s, budget=args.budget)
    brute = slice_count_bruteforce(n, args.s, shards=args.shards,
                                   budget=args.budget)
    return {
        "n": n,
        "S": args.s,
        "k": spec.k,
        "r": spec.r,
        "vertex_type": list(slice_vertex_type(spec)),
        "closed": fmt(closed),
        "bruteforce": fmt(brute),
        "agree": closed == brute,
    }


def cmd_vertices(args):
    n = _n_in(args.n, 1)
    if args.count:
        streamed = sum(1 for _ in vertices(n))
        return {"n": n, "count": fmt(streamed),
                "formula": fmt(vertex_count(n))}
    return [{"v": list(v.entries), "layer": v.layer} for v in vertices(n)]


def cmd_edges(args):
    n = _n_in(args.n, 2)
    g = edge_graph(n)
    if args.count:
        return {"n": n, "count": fmt(len(g.edges)),
                "formula": fmt(n * vertex_count(n) // 2)}
    return [{"e": [list(a), list(b)]} for a, b in g.edges]


def cmd_faces(args):
    n = _n_in(args.n, 1)
    if not 0 <= args.d <= n:
        raise UsageError(f"--d must be in 0..{n}, got {args.d}")
    out = []
    for fd in enumerate_faces(n, args.d):
        p = fd.partition
        out.append({
            "dim": fd.dimension,
            "minus": list(p.minus),
            "zero": list(p.zero),
            "blocks": [list(b) for b in p.blocks],
            "vertices": [list(v) for v in sorted(face_vertices(fd, n))],
        })
    return out


def cmd_verify(args):
    n = _n_in(args.n, 2)
    results = run_checks(n, args.level, shards=args.shards,
                         budget=args.budget)
    report = {
        "n": n,
        "level": args.level,
        "checks": [r.to_dict() for r in results],
        "passed": all(r.status != FAIL for r in results),
    }
    return report


def _csv(payload) -> str:
    rows = payload if isinstance(payload, list) else [payload]
    buf = io.StringIO()
    if not rows:
        return ""
    if "checks" in rows[0]:
        rows = rows[0]["checks"]
    flat = [{k: (json.dumps(v, separators=(",", ":"))
                 if isinstance(v, (list, dict)) else v)
             for k, v in r.items()} for r in rows]
    header: list[str] = []
    for r in flat:
        header.extend(k for k in r if k not in header)
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    w.writeheader()
    w.writerows(flat)
    return buf.getvalue()


def _emit(payload, fmt_name: str, out) -> None:
    if fmt_name == "csv":
        out.write(_csv(payload))
    elif isinstance(payload, list):
        for rec in payload:
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    else:
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")


COMMANDS = {
    "fvector": cmd_fvector,
    "volume": cmd_volume,
    "lattice": cmd_lattice,
    "vertices": cmd_vertices,
    "edges": cmd_edges,
    "ehrhart": cmd_ehrhart,
    "slice": cmd_slice,
    "faces": cmd_faces,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--shards", type=int, default=1,
                        help="parallel shards for brute-force scans")
    common.add_argument("--budget", type=int, default=None,
                        help=f"max box points / collections "
                             f"(env {BUDGET_ENV}; default {default_budget()})")
    common.add_argument("--timing", action="store_true",
                        help="add elapsed seconds to the report")

    p = argparse.ArgumentParser(
        prog="pfhull",
        description="Faces, volume and lattice points of the parking "
                    "function polytope.",
    )
    p.add_argument("--version", action="version",
                   version=f"%(prog)s (scan backend: {kernels.BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--n", type=int, required=True)
        return sp

    add("fvector", "face numbers f_0..f_{n-1}")
    add("volume", "exact volume")
    sp = add("lattice", "number of lattice points")
    sp.add_argument("--method", choices=("closed", "bruteforce"),
                    default="closed")
    sp = add("vertices", "vertex dump (JSON lines)")
    sp.add_argument("--count", action="store_true")
    sp = add("edges", "edge dump (JSON lines)")
    sp.add_argument("--count", action="store_true")
    sp = add("ehrhart", "lattice points of the m-th dilation")
    sp.add_argument("--m", type=int, required=True)
    sp = add("slice", "one coordinate-sum slice, counted both ways")
    sp.add_argument("--s", type=int, required=True)
    sp = add("faces", "face dump for one dimension (JSON lines)")
    sp.add_argument("--d", type=int, required=True)
    sp = add("verify", "formula-vs-oracle checks")
    sp.add_argument("--level", choices=("fast", "full"), default="full")
    return p


def main(argv: Iterable[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    if args.shards < 1:
        parser.error("--shards must be >= 1")
    if args.budget is None:
        args.budget = default_budget()
    start = time.perf_counter()
    try:
        payload = COMMANDS[args.command](args)
    except (UsageError, ContractError) as exc:
        print(f"pfhull: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBoundError as exc:
        _emit({"error": "resource_bound", "method": exc.method,
               "unit": exc.unit, "needed": str(exc.needed),
               "budget": str(exc.budget)}, "json", out)
        return EXIT_RESOURCE
    if isinstance(payload, dict):
        payload = {"command": args.command, **payload}
        if args.timing:
            payload["elapsed_s"] = round(time.perf_counter() - start, 6)
    _emit(payload, args.format, out)
    if args.command == "verify" and not payload["passed"]:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
