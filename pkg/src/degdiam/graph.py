"""Core graph types and the generic operations every other module relies on.

Vertices are always the dense integers ``0..n-1``.  Graphs are immutable once
built; all operations here are pure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

INFINITE = math.inf

# above this many vertices is_k_good walks layer by layer instead of squaring
KGOOD_MATRIX_THRESHOLD = 4096


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` is the canonical sorted tuple of pairs ``(u, v)`` with ``u < v``
    and ``adj[v]`` the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "edges", "adj", "_bits")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        self.n = n
        self.edges = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self._bits = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.bits()[u] >> v) & 1 == 1

    def bits(self) -> list[int]:
        """Adjacency rows as integer bitsets (cached)."""
        if self._bits is None:
            rows = []
            for a in self.adj:
                x = 0
                for w in a:
                    x |= 1 << w
                rows.append(x)
            self._bits = rows
        return self._bits

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Pseudograph:
    """Undirected graph that may carry a loop at some vertices.

    A loop adds exactly 1 to the degree of its vertex.
    """

    __slots__ = ("base", "loops")

    def __init__(self, base: Graph, loops: Iterable[int] = ()):
        loops = frozenset(loops)
        for v in loops:
            if not 0 <= v < base.n:
                raise ValueError(f"loop at {v} out of range for n={base.n}")
        self.base = base
        self.loops = loops

    @property
    def n(self) -> int:
        return self.base.n

    def degree(self, v: int) -> int:
        return self.base.degree(v) + (v in self.loops)

    def closed_rows(self) -> list[int]:
        """Adjacency bitsets with loops included on the diagonal."""
        rows = list(self.base.bits())
        for v in self.loops:
            rows[v] |= 1 << v
        return rows

    def __eq__(self, other):
        if not isinstance(other, Pseudograph):
            return NotImplemented
        return self.base == other.base and self.loops == other.loops

    def __hash__(self):
        return hash((self.base, self.loops))

    def __repr__(self):
        return f"Pseudograph(n={self.n}, m={self.base.m}, loops={len(self.loops)})"


class Digraph:
    """Directed graph on ``0..n-1``; loops allowed, duplicate arcs are not."""

    __slots__ = ("n", "arcs")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]]):
        arcs = tuple((int(u), int(v)) for u, v in arcs)
        if len(set(arcs)) != len(arcs):
            raise ValueError("duplicate arc")
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
        self.n = n
        self.arcs = arcs

    def outdegrees(self) -> list[int]:
        out = [0] * self.n
        for u, _ in self.arcs:
            out[u] += 1
        return out

    def indegrees(self) -> list[int]:
        inn = [0] * self.n
        for _, v in self.arcs:
            inn[v] += 1
        return inn

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            succ[u].append(v)
        return succ

    def underlying(self) -> Pseudograph:
        """Forget directions: loops kept, antiparallel pairs merged."""
        loops = {u for u, v in self.arcs if u == v}
        edges = {(min(u, v), max(u, v)) for u, v in self.arcs if u != v}
        return Pseudograph(Graph(self.n, edges), loops)

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


# --------------------------------------------------------------------------
# small named graphs


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def validate(g: Graph) -> None:
    """Raise AssertionError unless the adjacency structure is consistent."""
    assert len(g.adj) == g.n
    assert len(set(g.edges)) == len(g.edges)
    for u, v in g.edges:
        assert 0 <= u < v < g.n
    deg_sum = 0
    for v, a in enumerate(g.adj):
        assert list(a) == sorted(set(a)), f"adjacency of {v} not sorted/unique"
        assert v not in a, f"loop at {v}"
        for w in a:
            assert v in g.adj[w], f"asymmetric adjacency {v}-{w}"
        deg_sum += len(a)
    assert deg_sum == 2 * g.m


# --------------------------------------------------------------------------
# degree statistics


def _require_nonempty(g) -> None:
    if g.n == 0:
        raise ValueError("empty graph (n=0)")


def max_degree(g: Graph) -> int:
    _require_nonempty(g)
    return max(len(a) for a in g.adj)


def min_degree(g: Graph) -> int:
    _require_nonempty(g)
    return min(len(a) for a in g.adj)


def average_degree(g: Graph) -> Fraction:
    """Exact average degree ``2|E|/|V|``."""
    _require_nonempty(g)
    return Fraction(2 * g.m, g.n)


# --------------------------------------------------------------------------
# distances


def _covering_radius(g: Graph, limit: Optional[int]):
    """Smallest r such that every closed r-ball is the whole vertex set.

    All n balls grow together as bitsets: ball_{i+1}(v) is the union of
    ball_i over the closed neighbourhood of v.  Returns None once ``limit``
    is passed and INFINITE if the balls stop growing before covering.
    """
    rows = g.bits()
    full = (1 << g.n) - 1
    balls = [rows[v] | (1 << v) for v in range(g.n)]
    radius = 1
    while True:
        if all(b == full for b in balls):
            return radius
        if limit is not None and radius >= limit:
            return None
        nxt = []
        changed = False
        for v, nb in enumerate(g.adj):
            acc = balls[v]
            for u in nb:
                acc |= balls[u]
            changed = changed or acc != balls[v]
            nxt.append(acc)
        if not changed:
            return INFINITE
        balls = nxt
        radius += 1


def diameter(g: Graph):
    """Exact diameter, or ``INFINITE`` when g is disconnected."""
    _require_nonempty(g)
    if g.n == 1:
        return 0
    return _covering_radius(g, None)


def diameter_at_most(g: Graph, k: int) -> bool:
    """True iff every vertex reaches every other within k steps."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    _require_nonempty(g)
    if g.n == 1:
        return True
    if k == 0:
        return False
    r = _covering_radius(g, k)
    return r is not None and r <= k


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Single-source BFS distances; unreachable vertices get INFINITE."""
    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if dist[w] == INFINITE:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


# --------------------------------------------------------------------------
# triangles


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Return the lexicographically first triangle ``(a, b, c)``, or None."""
    nbr_sets = [set(a) for a in g.adj]
    for u, v in g.edges:
        common = [w for w in g.adj[v] if w > v and w in nbr_sets[u]]
        if common:
            return (u, v, common[0])
    return None


def has_triangle(g: Graph) -> bool:
    return find_triangle(g) is not None


# --------------------------------------------------------------------------
# products


def direct_product(h1: Pseudograph, h2: Pseudograph) -> Pseudograph:
    """Tensor product; vertex ``(v, x)`` is labelled ``v * n2 + x``.

    Loops take part in the adjacency rule, so a loop on one side lets the
    other side's edges through unchanged.
    """
    if h1.n == 0 or h2.n == 0:
        raise ValueError("direct product of an empty pseudograph")
    n2 = h2.n
    e1 = list(h1.base.edges) + [(v, v) for v in sorted(h1.loops)]
    e2 = list(h2.base.edges) + [(x, x) for x in sorted(h2.loops)]
    edges = set()
    loops = set()
    for v, w in e1:
        for x, y in e2:
            a, b = v * n2 + x, w * n2 + y
            c, d = v * n2 + y, w * n2 + x
            if a == b:
                loops.add(a)
                continue
            edges.add((min(a, b), max(a, b)))
            if c != d:
                edges.add((min(c, d), max(c, d)))
    return Pseudograph(Graph(h1.n * n2, edges), loops)


def cartesian_product(h1: Graph, h2: Graph) -> Graph:
    """Box product; vertex ``(v, x)`` is labelled ``v * n2 + x``."""
    if h1.n == 0 or h2.n == 0:
        raise ValueError("cartesian product of an empty graph")
    n2 = h2.n
    edges = []
    for v in range(h1.n):
        for x, y in h2.edges:
            edges.append((v * n2 + x, v * n2 + y))
    for v, w in h1.edges:
        for x in range(n2):
            edges.append((v * n2 + x, w * n2 + x))
    return Graph(h1.n * n2, edges)


def loopify(g: Graph) -> Pseudograph:
    """Put a loop on every vertex."""
    return Pseudograph(g, range(g.n))


# --------------------------------------------------------------------------
# k-goodness


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _bool_matmul(a: list[int], b: list[int]) -> list[int]:
    out = []
    for row in a:
        acc = 0
        for j in _iter_bits(row):
            acc |= b[j]
        out.append(acc)
    return out


def walk_reach_matrix(h: Pseudograph, k: int) -> list[int]:
    """Row v = bitset of vertices reachable from v by a walk of length exactly k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    base = h.closed_rows()
    result = [1 << v for v in range(h.n)]
    while k:
        if k & 1:
            result = _bool_matmul(result, base)
        k >>= 1
        if k:
            base = _bool_matmul(base, base)
    return result


def is_k_good(h: Pseudograph, k: int, threshold: int = KGOOD_MATRIX_THRESHOLD) -> bool:
    """True iff every ordered pair (v, w), v = w included, has a walk of length exactly k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_nonempty(h)
    full = (1 << h.n) - 1
    if h.n <= threshold:
        return all(row == full for row in walk_reach_matrix(h, k))
    rows = h.closed_rows()
    for s in range(h.n):
        cur = 1 << s
        for _ in range(k):
            nxt = 0
            for j in _iter_bits(cur):
                nxt |= rows[j]
            cur = nxt
        if cur != full:
            return False
    return True
