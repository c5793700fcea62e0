"""Plain-text edge lists and witness files.

Edge list: a header line ``n m`` then m lines ``u v`` with ``0 <= u < v < n``
in ascending order.  Witness files:

* coloring   -- n lines, one colour per vertex
* forest     -- m lines, one colour per edge in edge-file order
* chordal    -- fill-edge count f, f lines ``u v``, then the permutation on one line
* separation -- three lines listing A, S and B
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .certify import ChordalWitness, Coloring, ForestDecomposition, Separation
from .graph import Graph

PathLike = Union[str, Path]


class ParseError(ValueError):
    pass


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None


# --------------------------------------------------------------------------
# edge lists


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in _lines(text) if ln.strip()]
    if not lines:
        raise ParseError("empty edge list: missing 'n m' header")
    header = _ints(lines[0], 1)
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise ParseError("header must be two nonnegative integers 'n m'")
    n, m = header
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        pair = _ints(line, lineno)
        if len(pair) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        u, v = pair
        if u < 0 or v < 0 or u >= n or v >= n:
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u >= v:
            raise ParseError(f"line {lineno}: edge endpoints must satisfy u < v")
        if (u, v) in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
    if len(seen) != m:
        raise ParseError(f"header declares m={m} but the file lists {len(seen)} edges")
    return Graph(n, seen)


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g))


def read_edge_list(path: PathLike) -> Graph:
    return parse_edge_list(Path(path).read_text())


# --------------------------------------------------------------------------
# witnesses


def format_coloring(c: Coloring) -> str:
    return "".join(f"{x}\n" for x in c.colors)


def parse_coloring(text: str, g: Graph) -> Coloring:
    values = [_single(line, i) for i, line in enumerate(_lines(text), start=1)]
    if len(values) != g.n:
        raise ParseError(f"colouring has {len(values)} lines, graph has {g.n} vertices")
    if any(x < 0 for x in values):
        raise ParseError("colours must be nonnegative")
    return Coloring(values)


def format_forest(f: ForestDecomposition) -> str:
    return "".join(f"{x}\n" for x in f.colors)


def parse_forest(text: str, g: Graph, b: int) -> ForestDecomposition:
    values = [_single(line, i) for i, line in enumerate(_lines(text), start=1)]
    if len(values) != g.m:
        raise ParseError(f"forest witness has {len(values)} lines, graph has {g.m} edges")
    for x in values:
        if not 0 <= x < b:
            raise ParseError(f"forest colour {x} out of range 0..{b - 1}")
    return ForestDecomposition(values, b)


def format_chordal(w: ChordalWitness) -> str:
    out = [str(len(w.fill_edges))]
    out.extend(f"{u} {v}" for u, v in w.fill_edges)
    out.append(" ".join(map(str, w.order)))
    return "\n".join(out) + "\n"


def parse_chordal(text: str, g: Graph) -> ChordalWitness:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty chordal witness")
    f = _single(lines[0], 1)
    if f < 0 or len(lines) != f + 2:
        raise ParseError(f"chordal witness must have {f} fill lines and one order line")
    fill = []
    for i in range(1, f + 1):
        pair = _ints(lines[i], i + 1)
        if len(pair) != 2 or not all(0 <= x < g.n for x in pair) or pair[0] == pair[1]:
            raise ParseError(f"line {i + 1}: bad fill edge")
        fill.append(tuple(pair))
    order = _ints(lines[f + 1], f + 2)
    if sorted(order) != list(range(g.n)):
        raise ParseError("elimination order is not a permutation of 0..n-1")
    return ChordalWitness(fill, order)


def format_separation(sep: Separation) -> str:
    return "".join(" ".join(map(str, sorted(part))) + "\n" for part in (sep.a, sep.s, sep.b))


def parse_separation(text: str, g: Graph) -> Separation:
    lines = _lines(text)
    if len(lines) != 3:
        raise ParseError("separation witness must have exactly three lines (A, S, B)")
    parts = [_ints(line, i) for i, line in enumerate(lines, start=1)]
    flat = [v for part in parts for v in part]
    if sorted(flat) != list(range(g.n)):
        raise ParseError("A, S, B do not partition 0..n-1")
    return Separation(*parts)


def _single(line: str, lineno: int) -> int:
    vals = _ints(line, lineno)
    if len(vals) != 1:
        raise ParseError(f"line {lineno}: expected a single integer")
    return vals[0]
