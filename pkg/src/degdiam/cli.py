"""Command-line entry point: ``degdiam construct|verify|bounds|table``.

Exit codes: 0 pass, 1 a check failed, 2 usage, parse or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bounds as bd
from . import io
from .certify import (
    arboricity_exact,
    certify_construction,
    separator_from_witness,
    verify_chordal_witness,
    verify_forest_decomposition,
    verify_proper_coloring,
    verify_separation,
)
from .constructions import (
    FAMILIES,
    BudgetExceededError,
    PreconditionError,
    arboricity_diam2_family,
    arboricity_family,
    avg_degree_family,
    debruijn_family,
    three_colourable_debruijn,
    treewidth_even_family,
    treewidth_odd_family,
    triangle_free_debruijn,
)
from .graph import average_degree, diameter, find_triangle, max_degree, min_degree

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# family name -> ordered CLI parameters its generator takes
FAMILY_ARGS = {
    "debruijn": ("r", "k"),
    "avg-degree": ("d", "k", "delta"),
    "arboricity": ("b", "k", "delta"),
    "arboricity-diam2": ("b", "delta"),
    "treewidth-odd": ("t", "k", "delta"),
    "treewidth-even": ("t", "k", "delta"),
    "three-col": ("delta", "k"),
    "triangle-free": ("delta", "k"),
    "zp2": ("delta",),
    "zp3": ("delta",),
}

TABLE_HELP = """\
One row per class at the given max degree D and each diameter K.  Secondary
parameters take the smallest values the family allows:
  general          de Bruijn B(floor(D/2), K)              vs Moore bound
  three-col        3-colourable product                     vs Moore bound
  triangle-free    triangle-free product (K >= 4)           vs Moore bound
  avg-degree       d = 8 (needs D >= 16, K >= 3)            vs average-degree bound
  arboricity       b = 2 if D = 2 mod 4 else 4, even D' <= D,
                   largest even K' <= K with K' >= 4        vs arboricity bound
  arboricity-diam2 b = 1, even D' <= D, row for K = 2 only  vs average-degree bound, d = 2b
  treewidth        t = 2, odd or even family by K           vs separation bound, s = t + 1
Rows whose instance exceeds the vertex budget are marked 'skipped'.
"""


class UsageError(Exception):
    pass


def _fail_usage(msg: str) -> int:
    print(f"degdiam: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _num(x):
    """JSON-friendly exact number: ints stay ints, rationals become strings."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


# --------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    names = FAMILY_ARGS[args.family]
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        return _fail_usage(f"family {args.family} needs {' '.join(missing)}")
    values = [getattr(args, n) for n in names]
    try:
        result = FAMILIES[args.family](*values, max_vertices=args.max_vertices)
    except (PreconditionError, BudgetExceededError) as exc:
        return _fail_usage(f"{args.family}: {exc}")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    g = result.graph
    files = {"graph": "graph.el"}
    io.write_edge_list(g, out / "graph.el")
    if result.coloring is not None:
        files["coloring"] = "coloring.txt"
        (out / "coloring.txt").write_text(io.format_coloring(result.coloring))
    if result.forest is not None:
        files["forest"] = "forest.txt"
        (out / "forest.txt").write_text(io.format_forest(result.forest))
    if result.chordal is not None:
        files["chordal"] = "chordal.txt"
        (out / "chordal.txt").write_text(io.format_chordal(result.chordal))
        files["separation"] = "separation.txt"
        sep = separator_from_witness(g, result.chordal)
        (out / "separation.txt").write_text(io.format_separation(sep))

    meta = {
        "family": result.family,
        "params": {k: _num(v) for k, v in result.params.items()},
        "n": g.n,
        "m": g.m,
        "claimed_max_degree": result.claimed_max_degree,
        "claimed_diameter": result.claimed_diameter,
        "guaranteed_vertices": None if result.guaranteed_vertices is None else str(result.guaranteed_vertices),
        "colors_claimed": result.colors_claimed,
        "forest_colours": None if result.forest is None else result.forest.b,
        "files": files,
    }
    (out / "metadata.json").write_text(json.dumps(meta, indent=2) + "\n")
    print(f"wrote {g.n} vertices, {g.m} edges to {out}")
    return EXIT_PASS


# --------------------------------------------------------------------------
# verify


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"check {args.check} needs {' '.join(missing)}")


def _witness_text(args) -> str:
    _need(args, "witness")
    return Path(args.witness).read_text()


def _run_check(args, g) -> tuple[dict, dict, dict]:
    """Returns (measured extras, claimed, per-check results)."""
    check = args.check
    if check == "diameter":
        _need(args, "k")
        dia = diameter(g)
        return {"diameter": _num(dia)}, {"diameter_at_most": args.k}, {"diameter": dia <= args.k}
    if check == "degree":
        _need(args, "delta")
        return {}, {"max_degree_at_most": args.delta}, {"degree": max_degree(g) <= args.delta}
    if check == "triangle-free":
        tri = find_triangle(g)
        return {"triangle": None if tri is None else list(tri)}, {}, {"triangle_free": tri is None}
    if check == "coloring":
        col = io.parse_coloring(_witness_text(args), g)
        ok, bad = verify_proper_coloring(g, col)
        checks = {"proper": ok}
        claimed = {}
        if args.colours is not None:
            claimed["colours_at_most"] = args.colours
            checks["colours"] = col.num_colors <= args.colours
        return {"colours": col.num_colors, "bad_edge": None if bad is None else list(bad)}, claimed, checks
    if check == "forest":
        _need(args, "b")
        forest = io.parse_forest(_witness_text(args), g, args.b)
        ok, bad = verify_forest_decomposition(g, forest)
        return {"cycle_at": None if bad is None else list(bad)}, {"forests": args.b}, {"forest": ok}
    if check == "chordal":
        w = io.parse_chordal(_witness_text(args), g)
        ok, width = verify_chordal_witness(g, w)
        checks = {"perfect_elimination": ok}
        claimed = {}
        if args.t is not None:
            claimed["width_at_most"] = args.t
            checks["width"] = ok and width <= args.t
        return {"witness_width": width}, claimed, checks
    if check == "separation":
        sep = io.parse_separation(_witness_text(args), g)
        ok, reason = verify_separation(g, sep)
        measured = {"order": sep.order, "sizes": [len(sep.a), len(sep.s), len(sep.b)], "reason": reason}
        checks = {"separation": ok}
        claimed = {}
        if args.s is not None:
            claimed["order_at_most"] = args.s
            checks["order"] = sep.order <= args.s
        return measured, claimed, checks
    if check == "arboricity":
        _need(args, "b")
        arb = arboricity_exact(g)
        return {"arboricity": arb}, {"arboricity_at_most": args.b}, {"arboricity": arb <= args.b}
    raise UsageError(f"unknown check {check}")


def cmd_verify(args) -> int:
    start = time.perf_counter()
    try:
        g = io.read_edge_list(args.graph)
        extra, claimed, checks = _run_check(args, g)
    except UsageError as exc:
        return _fail_usage(str(exc))
    except OSError as exc:
        return _fail_usage(f"cannot read input: {exc}")
    except ValueError as exc:
        # ParseError and witness/graph shape mismatches
        return _fail_usage(str(exc))
    measured = {"n": g.n, "m": g.m}
    if g.n:
        measured.update(
            max_degree=max_degree(g), min_degree=min_degree(g), avg_degree=str(average_degree(g))
        )
    measured.update(extra)
    params = {n: getattr(args, n) for n in ("k", "b", "t", "s", "delta", "colours") if getattr(args, n) is not None}
    report = {
        "check": args.check,
        "params": params,
        "measured": measured,
        "claimed": claimed,
        "checks": checks,
        "pass": all(checks.values()),
        "wall_time_s": round(time.perf_counter() - start, 6),
    }
    text = json.dumps(report, indent=2)
    print(text)
    if args.report:
        Path(args.report).write_text(text + "\n")
    return EXIT_PASS if report["pass"] else EXIT_FAIL


# --------------------------------------------------------------------------
# bounds


BOUND_ARGS = {
    "moore": (("delta", "k"), lambda a: bd.moore_bound(a.delta, a.k)),
    "min-degree": (("min_degree", "delta", "k"), lambda a: bd.min_degree_upper(a.min_degree, a.delta, a.k)),
    "avg-degree": (("avg_degree", "delta", "k"), lambda a: bd.avg_degree_upper(a.avg_degree, a.delta, a.k)),
    "arboricity-upper": (("b", "k", "delta"), lambda a: bd.arboricity_upper(a.b, a.k, a.delta)),
    "separation": (("s", "delta", "k"), lambda a: bd.separation_upper(a.s, a.delta, a.k)),
    "separation-eps": (("s", "delta", "k", "eps"), lambda a: bd.separation_upper_eps(a.s, a.delta, a.k, a.eps)),
    "treewidth-eps": (("t", "delta", "k", "eps"), lambda a: bd.treewidth_upper_eps(a.t, a.delta, a.k, a.eps)),
    "genus-eps": (("genus", "delta", "k", "eps"), lambda a: bd.genus_upper_eps(a.genus, a.delta, a.k, a.eps)),
}


def cmd_bounds(args) -> int:
    names, fn = BOUND_ARGS[args.name]
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        return _fail_usage(f"bound {args.name} needs {' '.join(missing)}")
    try:
        value = fn(args)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if not isinstance(value, bd.BoundReport):
        value = bd.BoundReport(args.name, {n: getattr(args, n) for n in names}, value)
    print(json.dumps(value.to_json(), indent=2))
    return EXIT_PASS


# --------------------------------------------------------------------------
# table


def _largest_even(x: int) -> int:
    return x - (x % 2)


def _table_classes(delta: int, k: int):
    """Yields (class, params text, builder or None, bound thunk or None)."""
    yield ("general", f"r={delta // 2}",
           (lambda mv: debruijn_family(delta // 2, k, mv)) if delta >= 3 else None,
           lambda: bd.moore_bound(delta, k))
    yield ("three-col", "",
           (lambda mv: three_colourable_debruijn(delta, k, mv)) if delta >= 4 and k >= 2 else None,
           lambda: bd.moore_bound(delta, k))
    yield ("triangle-free", "",
           (lambda mv: triangle_free_debruijn(delta, k, mv)) if delta >= 4 and k >= 4 else None,
           lambda: bd.moore_bound(delta, k))
    yield ("avg-degree", "d=8",
           (lambda mv: avg_degree_family(8, k, delta, mv)) if delta >= 16 and k >= 3 else None,
           lambda: bd.avg_degree_upper(8, delta, k))
    de, ke = _largest_even(delta), _largest_even(k)
    b = 2 if de % 4 == 2 else 4
    yield ("arboricity", f"b={b} delta'={de} k'={ke}",
           (lambda mv: arboricity_family(b, ke, de, mv)) if ke >= 4 and de >= b else None,
           lambda: bd.arboricity_upper(b, k, delta))
    yield ("arboricity-diam2", f"b=1 delta'={de}",
           (lambda mv: arboricity_diam2_family(1, de, mv)) if k == 2 and de >= 4 else None,
           lambda: bd.avg_degree_upper(2, delta, k))
    if k % 2 == 1:
        build = (lambda mv: treewidth_odd_family(2, k, delta, mv)) if delta >= 3 else None
    else:
        build = (lambda mv: treewidth_even_family(2, k, delta, mv)) if delta >= 4 else None
    yield ("treewidth", "t=2", build, lambda: bd.separation_upper(3, delta, k))


def table_rows(delta: int, ks, max_vertices: Optional[int] = None) -> list[dict]:
    rows = []
    for k in ks:
        for name, params, build, bound in _table_classes(delta, k):
            row = {"class": name, "delta": delta, "k": k, "params": params,
                   "constructed": None, "guaranteed": None, "bound": None, "status": "n/a"}
            rows.append(row)
            if build is None:
                continue
            try:
                result = build(max_vertices)
            except BudgetExceededError:
                row["status"] = "skipped"
                continue
            value = bound()
            certified = all(certify_construction(result).values())
            n = result.graph.n
            row.update(constructed=n, guaranteed=result.guaranteed_vertices, bound=value,
                       status="pass" if certified and n <= value else "FAIL")
    return rows


def _cell(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x} (~{float(x):.6g})"
    return str(_num(x))


def cmd_table(args) -> int:
    if args.delta < 1 or any(k < 1 for k in args.k):
        return _fail_usage("table needs --delta >= 1 and every --k >= 1")
    rows = table_rows(args.delta, args.k, args.max_vertices)
    cols = ("class", "delta", "k", "params", "constructed", "guaranteed", "bound", "status")
    print("\t".join(cols))
    for row in rows:
        print("\t".join(_cell(row[c]) if c not in ("class", "params", "status") else (row[c] or "-")
                        for c in cols))
    if args.figure:
        from .plotting import plot_table

        plot_table(rows, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return EXIT_FAIL if any(r["status"] == "FAIL" for r in rows) else EXIT_PASS


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degdiam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family instance and write it with its witnesses")
    p.add_argument("family", choices=sorted(FAMILIES))
    for name in ("r", "k", "d", "b", "t", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.add_argument("--max-vertices", type=int, default=None,
                   help="vertex budget (default 5000000, or $DEGDIAM_MAX_VERTICES)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a graph file, optionally against a witness")
    p.add_argument("check", choices=["diameter", "degree", "triangle-free", "coloring", "forest",
                                     "chordal", "separation", "arboricity"])
    p.add_argument("--graph", required=True)
    p.add_argument("--witness")
    for name in ("k", "b", "t", "s", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--colours", "--colors", dest="colours", type=int)
    p.add_argument("--report", help="also write the JSON report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate an upper bound exactly")
    p.add_argument("name", choices=sorted(BOUND_ARGS))
    for name in ("delta", "k", "b", "s", "t", "genus"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--avg-degree", type=Fraction, help="exact rational, e.g. 7/2 or 3.5")
    p.add_argument("--eps", type=Fraction, help="exact rational, e.g. 0.1 or 1/10")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="constructed sizes next to upper bounds",
                       description=TABLE_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--k", type=int, nargs="+", required=True)
    p.add_argument("--figure", help="write a PNG bar chart to this path")
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
