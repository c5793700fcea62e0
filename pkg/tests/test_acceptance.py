"""Acceptance criteria 1-10, one test each.

Every test collects named sub-checks, prints a single PASS/FAIL line (also
repeated in the terminal summary) and then asserts that all sub-checks held.
"""

import json
import random
import time
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from degdiam.bounds import arboricity_upper, avg_degree_upper, min_degree_upper, moore_bound, separation_upper
from degdiam.certify import (
    ChordalWitness,
    arboricity_exact,
    arboricity_oracle,
    separator_from_witness,
    treewidth_oracle,
    verify_chordal_witness,
    verify_forest_decomposition,
    verify_proper_coloring,
    verify_separation,
)
from degdiam.cli import main, table_rows
from degdiam.constructions import (
    PreconditionError,
    arboricity_diam2_family,
    arboricity_family,
    avg_degree_family,
    debruijn_family,
    three_colourable_debruijn,
    treewidth_even_family,
    treewidth_even_threshold,
    treewidth_odd_family,
    triangle_free_debruijn,
    zp2_family,
    zp3_family,
)
from degdiam.graph import (
    Graph,
    Pseudograph,
    average_degree,
    complete_graph,
    cycle_graph,
    diameter,
    diameter_at_most,
    has_triangle,
    is_k_good,
    max_degree,
    min_degree,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import ACCEPTANCE_LINES, random_graph
from oracles import exact_walk_reach


class Criterion:
    def __init__(self, number: int, title: str, limit_s: float):
        self.number = number
        self.title = title
        self.limit_s = limit_s
        self.failures: list[str] = []
        self.count = 0
        self.start = time.perf_counter()

    def check(self, ok: bool, label: str) -> None:
        self.count += 1
        if not ok:
            self.failures.append(label)

    def finish(self) -> None:
        elapsed = time.perf_counter() - self.start
        self.check(elapsed < self.limit_s, f"runtime {elapsed:.1f}s >= {self.limit_s}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"criterion {self.number:2d} {status}  {self.title}  ({self.count} checks, {elapsed:.2f}s)"
        if self.failures:
            shown = "; ".join(self.failures[:6])
            more = f" (+{len(self.failures) - 6} more)" if len(self.failures) > 6 else ""
            line += f"  failed: {shown}{more}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert not self.failures, line


# --------------------------------------------------------------------------
# instance grids, shared with the cross-check criterion


@lru_cache(maxsize=None)
def grid_debruijn():
    return tuple(((r, k), debruijn_family(r, k)) for r in (2, 3) for k in range(1, 6))


@lru_cache(maxsize=None)
def grid_avg_degree():
    return tuple(
        ((d, k, delta), avg_degree_family(d, k, delta))
        for d in (8, 12) for k in (3, 4, 5) for delta in (2 * d, 2 * d + 8)
    )


def arboricity_grid_params():
    for b in (2, 4):
        for k in (4, 6):
            for delta in (6, 8, 10, 12):
                if delta >= b and (delta % 4 == 2 or b % 4 == 0):
                    yield b, k, delta


@lru_cache(maxsize=None)
def grid_arboricity():
    return tuple(((b, k, delta), arboricity_family(b, k, delta)) for b, k, delta in arboricity_grid_params())


@lru_cache(maxsize=None)
def grid_arboricity_diam2():
    return tuple(
        ((b, delta), arboricity_diam2_family(b, delta)) for b in (1, 2, 3) for delta in (4 * b, 4 * b + 4, 4 * b + 8)
    )


TREEWIDTH_EVEN = ((2, 8, 4), (5, 4, 16), (2, 2, 8), (2, 4, 8), (3, 4, 10), (2, 6, 8), (4, 4, 12))


@lru_cache(maxsize=None)
def grid_treewidth():
    odd = [
        (("odd", t, k, delta), treewidth_odd_family(t, k, delta))
        for t in (2, 3) for k in (3, 5) for delta in range(2 * t - 2, 11)
    ]
    even = [(("even",) + p, treewidth_even_family(*p)) for p in TREEWIDTH_EVEN]
    return tuple(odd + even)


@lru_cache(maxsize=None)
def grid_products():
    out = []
    for delta in (4, 8, 12):
        for k in (2, 3, 4, 5):
            out.append((("three-col", delta, k), three_colourable_debruijn(delta, k)))
            if k >= 4:
                out.append((("triangle-free", delta, k), triangle_free_debruijn(delta, k)))
    return tuple(out)


@lru_cache(maxsize=None)
def grid_zp():
    return ((("zp2", 20), zp2_family(20)), (("zp3", 42), zp3_family(42)))


# --------------------------------------------------------------------------


def test_criterion_01_de_bruijn():
    c = Criterion(1, "de Bruijn r in {2,3}, k in 1..5", 5.0)
    for (r, k), res in grid_debruijn():
        g = res.graph
        c.check(g.n == r**k, f"B({r},{k}) |V|={g.n}")
        c.check(max_degree(g) <= 2 * r, f"B({r},{k}) max degree")
        c.check(diameter(g) == k, f"B({r},{k}) diameter {diameter(g)}")
        if k >= 2:
            c.check(res.cover is not None and res.cover.verify(g), f"B({r},{k}) cover family")
    c.finish()


def test_criterion_02_average_degree():
    c = Criterion(2, "average degree d in {8,12}, k in {3,4,5}, delta in {2d, 2d+8}", 120.0)
    for (d, k, delta), res in grid_avg_degree():
        t0 = time.perf_counter()
        g = res.graph
        tag = f"({d},{k},{delta})"
        c.check(average_degree(g) <= d, f"{tag} avg degree {average_degree(g)}")
        c.check(max_degree(g) <= delta, f"{tag} max degree")
        c.check(diameter(g) <= k, f"{tag} diameter")
        c.check(g.n >= Fraction(d, 8) * (delta // 4) ** (k - 1), f"{tag} |V|={g.n}")
        c.check(time.perf_counter() - t0 < 10, f"{tag} over 10s")
    c.finish()


def test_criterion_03_arboricity():
    c = Criterion(3, "arboricity b in {2,4}, k in {4,6}, delta in {6..12} with parity", 240.0)
    grid = grid_arboricity()
    c.check(len(grid) == 12, f"grid has {len(grid)} instances")
    for (b, k, delta), res in grid:
        t0 = time.perf_counter()
        g = res.graph
        tag = f"({b},{k},{delta})"
        forest = res.forest
        c.check(forest is not None and forest.b == b and verify_forest_decomposition(g, forest)[0],
                f"{tag} star-forest witness")
        c.check(arboricity_exact(g) <= b, f"{tag} arboricity")
        c.check(diameter(g) <= k, f"{tag} diameter {diameter(g)}")
        c.check(max_degree(g) <= delta, f"{tag} max degree")
        c.check(g.n >= Fraction(8, b * b) * Fraction(b * delta, 8) ** (k // 2), f"{tag} |V|={g.n}")
        c.check(time.perf_counter() - t0 < 30, f"{tag} over 30s")
    c.finish()


def test_criterion_04_diameter2_arboricity():
    c = Criterion(4, "diameter-2 arboricity b in {1,2,3}, delta in {4b, 4b+4, 4b+8}", 5.0)
    for (b, delta), res in grid_arboricity_diam2():
        g = res.graph
        tag = f"({b},{delta})"
        c.check(diameter(g) <= 2, f"{tag} diameter")
        c.check(arboricity_exact(g) <= b, f"{tag} arboricity")
        c.check(4 * g.n >= b * delta, f"{tag} |V|={g.n}")
        c.check(max_degree(g) <= delta, f"{tag} max degree")
    c.finish()


def test_criterion_05_treewidth():
    c = Criterion(5, "treewidth odd and even grids incl. (t,k,delta)=(2,8,4) and (5,4,16)", 30.0)
    for key, res in grid_treewidth():
        kind, t, k, delta = key
        g = res.graph
        tag = f"{kind}({t},{k},{delta})"
        valid, width = verify_chordal_witness(g, res.chordal)
        c.check(valid and width <= t, f"{tag} chordal witness width {width}")
        c.check(diameter(g) <= k, f"{tag} diameter")
        c.check(max_degree(g) <= delta, f"{tag} max degree")
        if kind == "odd":
            c.check(g.n >= Fraction(t + 1, 2) * (delta - 1) ** ((k - 1) // 2), f"{tag} |V|={g.n}")
        else:
            asserted = res.guaranteed_vertices is not None
            c.check(asserted == treewidth_even_threshold(t, delta), f"{tag} guarantee presence")
            if asserted:
                # n >= (1/2) sqrt(t+1) (delta-1)^(k/2)  <=>  4 n^2 >= (t+1) (delta-1)^k
                c.check(4 * g.n * g.n >= (t + 1) * (delta - 1) ** k, f"{tag} |V|={g.n}")
    c.finish()


def test_criterion_06_products():
    c = Criterion(6, "3-colourable and triangle-free products, delta in {4,8,12}, k in 2..5", 20.0)
    for (kind, delta, k), res in grid_products():
        g = res.graph
        tag = f"{kind}({delta},{k})"
        r = delta // 4
        factor = 3 if kind == "three-col" else 5
        c.check(g.n == factor * r**k, f"{tag} |V|={g.n}")
        ok, _ = verify_proper_coloring(g, res.coloring)
        c.check(ok and res.coloring.num_colors <= 3, f"{tag} 3-colouring")
        c.check(diameter_at_most(g, k), f"{tag} diameter")
        c.check(max_degree(g) <= delta, f"{tag} max degree")
        if kind == "triangle-free":
            c.check(not has_triangle(g), f"{tag} triangle")
    c.finish()


def test_criterion_07_zp_families():
    c = Criterion(7, "Z_p^2 (delta=20) and Z_p^3 (delta=42) families", 60.0)
    expected = {"zp2": (20, 64, 2, 4), "zp3": (42, 1728, 3, 8)}
    for (name, delta), res in grid_zp():
        _, n, dia, colours = expected[name]
        g = res.graph
        c.check(g.n == n, f"{name} |V|={g.n}")
        degrees = {g.degree(v) for v in range(g.n)}
        c.check(degrees == {delta}, f"{name} {delta}-regular (degrees {sorted(degrees)})")
        c.check(not has_triangle(g), f"{name} triangle")
        c.check(diameter(g) == dia, f"{name} diameter {diameter(g)}")
        ok, _ = verify_proper_coloring(g, res.coloring)
        c.check(ok and res.coloring.num_colors <= colours, f"{name} {colours}-colouring")
    c.finish()


def test_criterion_08_upper_bound_cross_checks():
    c = Criterion(8, "every constructed graph respects every applicable upper bound", 120.0)
    grids = (grid_debruijn(), grid_avg_degree(), grid_arboricity(), grid_arboricity_diam2(),
             grid_treewidth(), grid_products(), grid_zp())
    for grid in grids:
        for key, res in grid:
            g = res.graph
            if g.n < 2:
                continue
            tag = f"{res.family}{key}"
            k = res.claimed_diameter
            delta = max(max_degree(g), 3)
            c.check(g.n <= moore_bound(delta, k), f"{tag} Moore")
            c.check(g.n <= min_degree_upper(min_degree(g), delta, k), f"{tag} min degree")
            c.check(g.n <= avg_degree_upper(average_degree(g), delta, k), f"{tag} avg degree")
            c.check(g.n <= arboricity_upper(max(arboricity_exact(g), 1), k, delta), f"{tag} arboricity")
            if res.chordal is not None:
                t = res.params["t"]
                sep = separator_from_witness(g, res.chordal)
                ok, _ = verify_separation(g, sep)
                c.check(ok and sep.order <= t + 1, f"{tag} separation order {sep.order}")
                c.check(g.n <= separation_upper(t + 1, delta, k), f"{tag} separation bound")
    c.finish()


NAMED = [complete_graph(n) for n in range(1, 9)] + [
    cycle_graph(5), cycle_graph(8), path_graph(9), star_graph(9), petersen_graph(), Graph(4),
]


def _elimination_witness(g: Graph, order) -> ChordalWitness:
    adj = [set(a) for a in g.adj]
    pos = {v: i for i, v in enumerate(order)}
    fill = set()
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        for a, b in combinations(later, 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fill.add((min(a, b), max(a, b)))
    return ChordalWitness(sorted(fill), order)


def test_criterion_09_oracles():
    c = Criterion(9, "oracle equivalence: arboricity, treewidth witnesses, k-goodness", 60.0)
    rng = random.Random(99)
    for i in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        c.check(arboricity_exact(g) == arboricity_oracle(g), f"random graph {i} arboricity")
    for g in NAMED:
        c.check(arboricity_exact(g) == arboricity_oracle(g), f"named {g!r} arboricity")

    witnesses = [(r.graph, r.chordal) for _, r in grid_treewidth() if r.graph.n <= 12]
    witnesses += [(treewidth_odd_family(2, 1, 6).graph, treewidth_odd_family(2, 1, 6).chordal)]
    for i in range(60):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        order = list(range(g.n))
        rng.shuffle(order)
        witnesses.append((g, _elimination_witness(g, order)))
    for g, w in witnesses:
        valid, width = verify_chordal_witness(g, w)
        c.check(valid and width >= treewidth_oracle(g), f"witness on {g!r} claims width {width}")

    checked = 0
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for emask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if emask >> i & 1]
            base = Graph(n, edges)
            for lmask in range(1 << n):
                loops = [v for v in range(n) if lmask >> v & 1]
                h = Pseudograph(base, loops)
                for k in range(1, 7):
                    expected = all(len(s) == n for s in exact_walk_reach(n, edges, loops, k))
                    checked += 1
                    if is_k_good(h, k) != expected:
                        c.check(False, f"k-good n={n} edges={edges} loops={loops} k={k}")
    c.check(checked == 6 * sum(2 ** (n * (n - 1) // 2 + n) for n in range(1, 6)), "exhaustive pseudograph count")

    k3, c5 = Pseudograph(complete_graph(3)), Pseudograph(cycle_graph(5))
    c.check(all(is_k_good(k3, k) for k in range(2, 11)) and not is_k_good(k3, 1), "K3 k-goodness")
    c.check(all(is_k_good(c5, k) for k in range(4, 11)) and not is_k_good(c5, 3), "C5 k-goodness")
    c.finish()


CLI_FAMILIES = [
    ("debruijn", ["--r", "3", "--k", "3"]),
    ("avg-degree", ["--d", "8", "--k", "3", "--delta", "16"]),
    ("arboricity", ["--b", "2", "--k", "4", "--delta", "6"]),
    ("arboricity-diam2", ["--b", "2", "--delta", "8"]),
    ("treewidth-odd", ["--t", "2", "--k", "3", "--delta", "6"]),
    ("treewidth-even", ["--t", "2", "--k", "8", "--delta", "4"]),
    ("three-col", ["--delta", "8", "--k", "2"]),
    ("triangle-free", ["--delta", "8", "--k", "4"]),
    ("zp2", ["--delta", "20"]),
    ("zp3", ["--delta", "42"]),
]


def test_criterion_10_cli(tmp_path, capsys):
    c = Criterion(10, "CLI round trips, malformed input handling, table at delta=8", 60.0)

    def run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    for family, flags in CLI_FAMILIES:
        out_dir = tmp_path / family
        code, _, err = run("construct", family, *flags, "-o", out_dir)
        c.check(code == 0, f"construct {family}: {err.strip()}")
        if code:
            continue
        meta = json.loads((out_dir / "metadata.json").read_text())
        graph = out_dir / "graph.el"
        files = meta["files"]
        runs = [("diameter", ["--k", meta["claimed_diameter"]])]
        if "coloring" in files:
            runs.append(("coloring", ["--witness", out_dir / files["coloring"], "--colours", meta["colors_claimed"]]))
        if "forest" in files:
            runs.append(("forest", ["--witness", out_dir / files["forest"], "--b", meta["forest_colours"]]))
        if "chordal" in files:
            t = meta["params"]["t"]
            runs.append(("chordal", ["--witness", out_dir / files["chordal"], "--t", t]))
            runs.append(("separation", ["--witness", out_dir / files["separation"], "--s", t + 1]))
        for check, extra in runs:
            code, _, _ = run("verify", check, "--graph", graph, *extra)
            c.check(code == 0, f"verify {check} on {family}")

    malformed = [
        ("3 2\n0 1\n0 1\n", "duplicate edge"),
        ("3 1\n2 1\n", "u < v"),
        ("3 1\n0 7\n", "out of range"),
        ("3 3\n0 1\n", "declares m=3"),
    ]
    for i, (text, fragment) in enumerate(malformed):
        bad = tmp_path / f"bad{i}.el"
        bad.write_text(text)
        code, _, err = run("verify", "degree", "--graph", bad, "--delta", 4)
        c.check(code == 2 and fragment in err, f"malformed graph '{fragment}' -> exit {code}")
    short = tmp_path / "short.txt"
    short.write_text("0\n1\n")
    code, _, err = run("verify", "coloring", "--graph", tmp_path / "zp2" / "graph.el", "--witness", short)
    c.check(code == 2 and "graph has 64 vertices" in err, "wrong-length colouring")
    code, _, err = run("construct", "avg-degree", "--d", 4, "--k", 3, "--delta", 16, "-o", tmp_path / "x")
    c.check(code == 2 and "floor(d/4) >= 2" in err, "avg-degree d=4 rejection")

    rows = table_rows(8, [2, 3, 4])
    c.check(len(rows) == 21, "table row count")
    for row in rows:
        c.check(row["status"] in ("pass", "n/a"), f"table {row['class']} k={row['k']}: {row['status']}")
    code, out, _ = run("table", "--delta", 8, "--k", 2, 3, 4)
    c.check(code == 0 and len(out.splitlines()) == 22, "table command output")
    c.finish()
