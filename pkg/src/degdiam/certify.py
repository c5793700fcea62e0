"""Independent checkers for colourings, forest decompositions, arboricity,
chordal (treewidth) witnesses and balanced separations.

Verifiers return ``(ok, detail)`` where ``detail`` pinpoints the first
violation (or carries the measured quantity).  Malformed input -- a witness
of the wrong length, an order that is not a permutation -- raises
``ValueError`` instead, since that is a usage error rather than a failed check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, diameter_at_most, max_degree

ORACLE_MAX_ARBORICITY_N = 16
ORACLE_MAX_TREEWIDTH_N = 12


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __init__(self, colors: Sequence[int]):
        object.__setattr__(self, "colors", tuple(int(c) for c in colors))

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0


@dataclass(frozen=True)
class ForestDecomposition:
    """One colour per edge, in the graph's canonical edge order."""

    colors: tuple[int, ...]
    b: int

    def __init__(self, colors: Sequence[int], b: int):
        object.__setattr__(self, "colors", tuple(int(c) for c in colors))
        object.__setattr__(self, "b", int(b))


@dataclass(frozen=True)
class ChordalWitness:
    """Fill edges plus an elimination order certifying treewidth <= width."""

    fill_edges: tuple[tuple[int, int], ...]
    order: tuple[int, ...]

    def __init__(self, fill_edges: Sequence[Sequence[int]], order: Sequence[int]):
        fill = tuple(sorted((min(u, v), max(u, v)) for u, v in fill_edges))
        object.__setattr__(self, "fill_edges", fill)
        object.__setattr__(self, "order", tuple(int(v) for v in order))


@dataclass(frozen=True)
class Separation:
    a: frozenset
    s: frozenset
    b: frozenset

    def __init__(self, a, s, b):
        object.__setattr__(self, "a", frozenset(a))
        object.__setattr__(self, "s", frozenset(s))
        object.__setattr__(self, "b", frozenset(b))

    @property
    def order(self) -> int:
        return len(self.s)


# --------------------------------------------------------------------------
# colourings and forests


def verify_proper_coloring(g: Graph, coloring) -> tuple[bool, Optional[tuple[int, int]]]:
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != g.n:
        raise ValueError(f"colouring has {len(colors)} entries, graph has {g.n} vertices")
    for u, v in g.edges:
        if colors[u] == colors[v]:
            return False, (u, v)
    return True, None


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def verify_forest_decomposition(g: Graph, forest: ForestDecomposition):
    """Check every colour class is acyclic.

    On failure the detail is ``(colour, u, v)`` for the edge closing a cycle.
    """
    if len(forest.colors) != g.m:
        raise ValueError(f"forest witness has {len(forest.colors)} colours, graph has {g.m} edges")
    for c in forest.colors:
        if not 0 <= c < forest.b:
            raise ValueError(f"colour {c} out of range 0..{forest.b - 1}")
    classes: dict[int, _DisjointSets] = {}
    for (u, v), c in zip(g.edges, forest.colors):
        dsu = classes.setdefault(c, _DisjointSets(g.n))
        if not dsu.union(u, v):
            return False, (c, u, v)
    return True, None


# --------------------------------------------------------------------------
# arboricity


def _induced_edges(rows: list[int], mask: int) -> int:
    total = 0
    x = mask
    while x:
        low = x & -x
        total += bin(rows[low.bit_length() - 1] & mask).count("1")
        x ^= low
    return total // 2


def arboricity_oracle(g: Graph) -> int:
    """Nash-Williams maximum by enumerating every vertex subset (n <= 16)."""
    if g.n > ORACLE_MAX_ARBORICITY_N:
        raise ValueError(f"arboricity_oracle limited to n <= {ORACLE_MAX_ARBORICITY_N}")
    rows = g.bits()
    best = 0
    for mask in range(1, 1 << g.n):
        size = bin(mask).count("1")
        if size < 2:
            continue
        e = _induced_edges(rows, mask)
        best = max(best, -(-e // (size - 1)))
    return best


def arboricity_certificate(g: Graph) -> tuple[int, frozenset]:
    """Exact arboricity together with a dense vertex set proving the lower side.

    The returned set S satisfies ceil(e(S) / (|S| - 1)) >= b.  The upper side
    is established by orientations: for capacity b, every vertex r in turn is
    given in-degree 0 while all others keep in-degree <= b, which bounds
    e(S) <= b(|S| - 1) for every S containing r.  Capacity is raised whenever
    an augmenting search fails, and the failed search's reach set is the
    violating subgraph.
    """
    n, m = g.n, g.m
    if m == 0:
        return 0, frozenset()
    b = max(1, -(-m // (n - 1)))
    witness = frozenset(range(n))
    ends = g.edges
    head = [-1] * m
    into: list[set[int]] = [set() for _ in range(n)]
    indeg = [0] * n

    def assign(e: int, v: int) -> None:
        old = head[e]
        if old >= 0:
            into[old].discard(e)
            indeg[old] -= 1
        head[e] = v
        into[v].add(e)
        indeg[v] += 1

    def free_slot(sources, blocked: int):
        """Push one unit of in-degree away from a source along reversed in-edges.

        Returns the source that lost an in-edge, or the reach set on failure.
        """
        parent = {s: None for s in sources}
        queue = deque(sources)
        while queue:
            x = queue.popleft()
            for e in into[x]:
                u, v = ends[e]
                y = u if v == x else v
                if y in parent:
                    continue
                parent[y] = (x, e)
                if y != blocked and indeg[y] < b:
                    # reverse the path back to a source
                    while parent[y] is not None:
                        x, e = parent[y]
                        assign(e, y)
                        y = x
                    return y, None
                queue.append(y)
        return None, frozenset(parent)

    for e, (u, v) in enumerate(ends):
        if indeg[u] <= indeg[v] and indeg[u] < b:
            assign(e, u)
        elif indeg[v] < b:
            assign(e, v)
        else:
            src, reach = free_slot([u, v], -1)
            if src is None:
                b += 1
                witness = reach
                src = u
            assign(e, src)

    for r in range(n):
        while indeg[r] > 0:
            src, reach = free_slot([r], r)
            if src is None:
                b += 1
                witness = reach
    return b, witness


def arboricity_exact(g: Graph) -> int:
    """Minimum number of forests covering g; 0 for an edgeless graph."""
    return arboricity_certificate(g)[0]


# --------------------------------------------------------------------------
# chordal witnesses and treewidth


def _supergraph_sets(g: Graph, fill) -> list[set[int]]:
    nbrs = [set(a) for a in g.adj]
    for u, v in fill:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"bad fill edge ({u}, {v})")
        if v in nbrs[u]:
            raise ValueError(f"fill edge ({u}, {v}) already in the graph")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def _check_order(order, n: int) -> list[int]:
    if sorted(order) != list(range(n)):
        raise ValueError("elimination order is not a permutation of the vertices")
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def verify_chordal_witness(g: Graph, w: ChordalWitness) -> tuple[bool, int]:
    """Check the order is a perfect elimination order of g + fill.

    Returns ``(valid, width)`` where width is the largest later-neighbour
    count; a valid witness certifies treewidth <= width.
    """
    nbrs = _supergraph_sets(g, w.fill_edges)
    pos = _check_order(w.order, g.n)
    width = 0
    valid = True
    for v in w.order:
        later = [u for u in nbrs[v] if pos[u] > pos[v]]
        width = max(width, len(later))
        if len(later) > 1 and valid:
            first = min(later, key=pos.__getitem__)
            if any(u != first and u not in nbrs[first] for u in later):
                valid = False
    return valid, width


def treewidth_oracle(g: Graph) -> int:
    """Exact treewidth by dynamic programming over vertex subsets (n <= 12).

    TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
    is the set of vertices outside S + v reachable from v through S.
    """
    n = g.n
    if n > ORACLE_MAX_TREEWIDTH_N:
        raise ValueError(f"treewidth_oracle limited to n <= {ORACLE_MAX_TREEWIDTH_N}")
    if n == 0:
        return -1
    rows = g.bits()
    full = (1 << n) - 1

    def q_size(s: int, v: int) -> int:
        seen = 1 << v
        stack = [v]
        outside = 0
        while stack:
            x = stack.pop()
            nb = rows[x] & ~seen
            seen |= nb
            while nb:
                low = nb & -nb
                y = low.bit_length() - 1
                nb ^= low
                if s >> y & 1:
                    stack.append(y)
                else:
                    outside += 1
        return outside

    tw = [0] * (1 << n)
    tw[0] = -1
    for s in sorted(range(1, 1 << n), key=lambda x: bin(x).count("1")):
        best = n
        x = s
        while x:
            low = x & -x
            v = low.bit_length() - 1
            x ^= low
            rest = s ^ low
            cand = max(tw[rest], q_size(rest, v))
            if cand < best:
                best = cand
        tw[s] = best
    return tw[full]


# --------------------------------------------------------------------------
# separations


def verify_separation(g: Graph, sep: Separation) -> tuple[bool, Optional[str]]:
    a, s, b = sep.a, sep.s, sep.b
    if (a & s) or (a & b) or (s & b) or (a | s | b) != set(range(g.n)):
        raise ValueError("A, S, B do not partition the vertex set")
    n = g.n
    if 3 * len(a) > 2 * n:
        return False, f"|A| = {len(a)} exceeds 2n/3"
    if 3 * len(b) > 2 * n:
        return False, f"|B| = {len(b)} exceeds 2n/3"
    for u, v in g.edges:
        if (u in a and v in b) or (u in b and v in a):
            return False, f"edge ({u}, {v}) joins A and B"
    return True, None


def _components(g: Graph, removed: set[int]) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _split_components(comps: list[list[int]], n: int):
    """Group components into two sides of size <= 2n/3 each (comps all <= 2n/3)."""
    comps = sorted(comps, key=lambda c: (-len(c), min(c)))
    a: list[int] = []
    b: list[int] = []
    for c in comps:
        if 3 * len(a) < n:
            a.extend(c)
        else:
            b.extend(c)
    return a, b


def separator_from_witness(g: Graph, w: ChordalWitness) -> Separation:
    """Balanced separation of order <= width + 1 taken from a bag of the witness.

    Bags are ``{v} + later neighbours of v`` in the chordal supergraph; the
    elimination order is scanned from last to first and the first bag whose
    removal leaves only components of size <= 2n/3 is used.  Separator
    vertices that can move to one side without breaking balance are then
    released.
    """
    valid, _ = verify_chordal_witness(g, w)
    if not valid:
        raise ValueError("invalid chordal witness")
    n = g.n
    nbrs = _supergraph_sets(g, w.fill_edges)
    pos = _check_order(w.order, n)
    for v in reversed(w.order):
        bag = {v} | {u for u in nbrs[v] if pos[u] > pos[v]}
        comps = _components(g, bag)
        if all(3 * len(c) <= 2 * n for c in comps):
            a, b = _split_components(comps, n)
            return _shrink(g, set(a), set(bag), set(b))
    raise AssertionError("a valid witness always has a balanced bag")


def _shrink(g: Graph, a: set, s: set, b: set) -> Separation:
    n = g.n
    for x in sorted(s):
        nb = set(g.adj[x])
        for side, other in ((a, b), (b, a)):
            if not (nb & other) and 3 * (len(side) + 1) <= 2 * n:
                s.discard(x)
                side.add(x)
                break
    return Separation(a, s, b)


# --------------------------------------------------------------------------
# battery for construction results


def certify_construction(result) -> dict[str, bool]:
    """Run every applicable check on a construction result.

    Keys: ``max_degree``, ``diameter``, ``vertex_count`` and one entry per
    attached witness.  The result passes iff all values are True.
    """
    g = result.graph
    checks = {
        "max_degree": max_degree(g) <= result.claimed_max_degree,
        "diameter": diameter_at_most(g, result.claimed_diameter),
    }
    if result.guaranteed_vertices is not None:
        checks["vertex_count"] = g.n >= result.guaranteed_vertices
    if result.coloring is not None:
        ok, _ = verify_proper_coloring(g, result.coloring)
        checks["coloring"] = ok and result.coloring.num_colors <= result.colors_claimed
    if result.forest is not None:
        checks["forest"] = verify_forest_decomposition(g, result.forest)[0]
    if result.chordal is not None:
        ok, width = verify_chordal_witness(g, result.chordal)
        checks["chordal"] = ok and width <= result.params["t"]
    if result.cover is not None:
        checks["cover"] = result.cover.verify(g)
    return checks
