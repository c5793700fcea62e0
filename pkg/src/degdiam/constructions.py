"""Deterministic generators for the extremal families.

Every family function returns a :class:`ConstructionResult`: the graph, the
degree/diameter it claims, the guaranteed vertex count and whatever
witnesses the construction provides for free (colourings, star-forest
decompositions, chordal supergraphs, cover sets).  Vertex labels are
canonical, so equal parameters always give identical edge lists.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .bounds import ceil_times_sqrt
from .certify import ChordalWitness, Coloring, ForestDecomposition
from .graph import (
    Digraph,
    Graph,
    Pseudograph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    direct_product,
)

DEFAULT_MAX_VERTICES = 5_000_000
BUDGET_ENV = "DEGDIAM_MAX_VERTICES"

# proper 3-colouring of the 5-cycle 0-1-2-3-4-0
C5_COLORS = (0, 1, 0, 1, 2)


class PreconditionError(ValueError):
    """Parameters violate a family's stated requirements."""


class BudgetExceededError(ValueError):
    """The requested instance would exceed the vertex budget."""


def vertex_budget(max_vertices: Optional[int] = None) -> int:
    if max_vertices is not None:
        return max_vertices
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_MAX_VERTICES


def _check_budget(count: int, max_vertices: Optional[int]) -> None:
    budget = vertex_budget(max_vertices)
    if count > budget:
        raise BudgetExceededError(f"instance needs {count} vertices, budget is {budget}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


@dataclass(frozen=True)
class CoverFamily:
    """Vertex subsets; each vertex lies in exactly two and every edge inside one."""

    sets: tuple[tuple[int, ...], ...]

    def verify(self, g: Graph) -> bool:
        count = [0] * g.n
        for s in self.sets:
            for v in s:
                count[v] += 1
        if any(c != 2 for c in count):
            return False
        member = [set() for _ in range(g.n)]
        for i, s in enumerate(self.sets):
            for v in s:
                member[v].add(i)
        return all(member[u] & member[v] for u, v in g.edges)


@dataclass
class ConstructionResult:
    graph: Graph
    family: str
    params: dict
    claimed_max_degree: int
    claimed_diameter: int
    guaranteed_vertices: Optional[int]
    coloring: Optional[Coloring] = None
    colors_claimed: Optional[int] = None
    forest: Optional[ForestDecomposition] = None
    chordal: Optional[ChordalWitness] = None
    cover: Optional[CoverFamily] = None
    notes: list[str] = field(default_factory=list)


# --------------------------------------------------------------------------
# primitives


def _pow_checked(r: int, k: int, max_vertices: Optional[int]) -> int:
    _require(r >= 1, "r >= 1")
    _require(k >= 1, "k >= 1")
    size = r**k
    _check_budget(size, max_vertices)
    return size


def de_bruijn_digraph(r: int, k: int, max_vertices: Optional[int] = None) -> Digraph:
    """Word digraph: length-k base-r words, arc s -> (s shifted left + one symbol)."""
    size = _pow_checked(r, k, max_vertices)
    arcs = [(s, (s * r) % size + a) for s in range(size) for a in range(r)]
    return Digraph(size, arcs)


def line_digraph(d: Digraph) -> Digraph:
    """Arcs become vertices; (uv, vw) is an arc for every pair of consecutive arcs.

    A loop followed by itself counts as consecutive, which keeps the de Bruijn
    recursion in-out-regular.
    """
    index = {a: i for i, a in enumerate(d.arcs)}
    out_arcs: dict[int, list[tuple[int, int]]] = {}
    for a in d.arcs:
        out_arcs.setdefault(a[0], []).append(a)
    arcs = []
    for a in d.arcs:
        for b in out_arcs.get(a[1], []):
            arcs.append((index[a], index[b]))
    return Digraph(len(d.arcs), arcs)


def de_bruijn_pseudograph(r: int, k: int, max_vertices: Optional[int] = None) -> Pseudograph:
    """Underlying undirected pseudograph of the de Bruijn digraph, loops kept."""
    return de_bruijn_digraph(r, k, max_vertices).underlying()


def de_bruijn_graph(r: int, k: int, max_vertices: Optional[int] = None):
    """Underlying simple graph and (for k >= 2, r >= 2) its cover family.

    For k >= 2 the vertices of B(r, k) are the arcs of B(r, k-1): the word w
    is the arc w // r -> w mod r^(k-1).  The cover set of a vertex x of
    B(r, k-1) collects the non-loop arcs at x.  The r loop words a^k would
    otherwise lie in no set, so the set at a^(k-1) also takes a^k and
    (a+1)^k.  Every set then has exactly 2r members.  For r = 1 no family of
    r^(k-1) = 1 set can put the single vertex in two sets, and None is returned.
    """
    pseudo = de_bruijn_pseudograph(r, k, max_vertices)
    if k == 1 or r == 1:
        return pseudo.base, None
    low = r ** (k - 1)
    sets: list[list[int]] = [[] for _ in range(low)]
    for w in range(r**k):
        tail, tip = w // r, w % low
        if tail == tip:
            continue
        sets[tail].append(w)
        sets[tip].append(w)
    rep = (r**k - 1) // (r - 1)  # the word 11...1
    for a in range(r):
        sets[a * rep // r].extend((a * rep, (a + 1) % r * rep))
    return pseudo.base, CoverFamily(tuple(tuple(sorted(s)) for s in sets))


def line_of_complete(q: int):
    """Line graph of K_{q+1} with its q+1 maximal cliques.

    Vertex labels follow the lexicographic order of the pairs {i, j}; clique
    i holds every pair containing i.
    """
    _require(q >= 1, "q >= 1")
    pairs = list(combinations(range(q + 1), 2))
    index = {p: i for i, p in enumerate(pairs)}
    cliques = tuple(
        tuple(index[p] for p in pairs if i in p) for i in range(q + 1)
    )
    edges = [
        (index[p1], index[p2]) for p1, p2 in combinations(pairs, 2) if set(p1) & set(p2)
    ]
    return Graph(len(pairs), edges), cliques


def common_neighbour_bipartite(p: int, q: int, m: int):
    """Bipartite graph with m C-vertices of degree q and C(q+1, 2) D-vertices.

    Returns ``(graph, C, D)``: C is labelled ``0..m-1`` and D follows.  The
    C-vertices come in groups of p, one group per clique of L(K_{q+1});
    truncation to m drops vertices from the highest groups first.
    """
    _require(p >= 1, "p >= 1")
    _require(q >= 1, "q >= 1")
    _require(0 <= m <= (q + 1) * p, f"0 <= m <= (q+1)p = {(q + 1) * p}")
    _, cliques = line_of_complete(q)
    d_count = comb(q + 1, 2)
    edges = []
    for c in range(m):
        for x in cliques[c // p]:
            edges.append((c, m + x))
    graph = Graph(m + d_count, edges)
    return graph, tuple(range(m)), tuple(range(m, m + d_count))


def _attach_tree(edges: list, next_id: int, root: int, root_children: int,
                 internal_children: int, depth: int, levels: Optional[list] = None) -> int:
    """Grow a rooted tree below ``root`` breadth-first; returns the next free id.

    The root gets ``root_children`` children, every other non-leaf gets
    ``internal_children``, and leaves sit at ``depth``.  When ``levels`` is
    given, vertex ids are appended per depth (root excluded).
    """
    frontier = [root]
    for level in range(1, depth + 1):
        fan = root_children if level == 1 else internal_children
        nxt = []
        for v in frontier:
            for _ in range(fan):
                edges.append((v, next_id))
                nxt.append(next_id)
                next_id += 1
        if levels is not None:
            levels.append(nxt)
        frontier = nxt
        if not frontier:
            break
    return next_id


def tree_size(root_children: int, internal_children: int, depth: int) -> int:
    if depth == 0:
        return 1
    total, layer = 1, root_children
    for _ in range(depth):
        total += layer
        layer *= internal_children
    return total


# --------------------------------------------------------------------------
# families


def debruijn_family(r: int, k: int, max_vertices: Optional[int] = None) -> ConstructionResult:
    g, cover = de_bruijn_graph(r, k, max_vertices)
    return ConstructionResult(
        graph=g, family="debruijn", params={"r": r, "k": k},
        claimed_max_degree=2 * r, claimed_diameter=k, guaranteed_vertices=r**k,
        cover=cover,
    )


def avg_degree_family(d: int, k: int, delta: int,
                      max_vertices: Optional[int] = None) -> ConstructionResult:
    """Bounded average degree d with about (d/8) floor(delta/4)^(k-1) vertices.

    L(K_{q+1}) box B(r, k-2), then an independent set of p vertices joined to
    every clique copy X_{i,v}.
    """
    _require(k >= 3, "k >= 3")
    _require(delta >= 2 * d, "delta >= 2d")
    _require(d >= 8, "q = floor(d/4) >= 2, i.e. d >= 8")
    r, q = delta // 4, d // 4
    p = delta // 2 - r - q + 1
    nb = r ** (k - 2)
    nl = comb(q + 1, 2)
    _check_budget(nl * nb + (q + 1) * nb * p, max_vertices)
    b_graph, _ = de_bruijn_graph(r, k - 2, max_vertices)
    l_graph, cliques = line_of_complete(q)
    h = cartesian_product(l_graph, b_graph)
    edges = list(h.edges)
    next_id = h.n
    for i in range(q + 1):
        for v in range(nb):
            clique = [x * nb + v for x in cliques[i]]
            for _ in range(p):
                edges.extend((c, next_id) for c in clique)
                next_id += 1
    g = Graph(next_id, edges)
    return ConstructionResult(
        graph=g, family="avg-degree", params={"d": d, "k": k, "delta": delta, "q": q, "r": r, "p": p},
        claimed_max_degree=delta, claimed_diameter=k,
        guaranteed_vertices=_ceil(Fraction(d, 8) * r ** (k - 1)),
    )


def arboricity_family(b: int, k: int, delta: int,
                      max_vertices: Optional[int] = None) -> ConstructionResult:
    """Arboricity <= b, bipartite between V(B(r, l)) and the D-parts of the gadgets."""
    _require(b >= 2 and b % 2 == 0, "b even and b >= 2")
    _require(k >= 4 and k % 2 == 0, "k even and k >= 4")
    _require(delta >= b, "delta >= b")
    _require(delta % 2 == 0, "delta even (q = delta/2 must be an integer)")
    _require(delta % 4 == 2 or b % 4 == 0, "delta = 2 (mod 4) or b = 0 (mod 4)")
    q, p, ell = delta // 2, b // 2, k // 2 - 1
    r = (q + 1) * p // 2
    d_size = comb(q + 1, 2)
    n_sets = r ** (ell - 1)
    _check_budget(r**ell + n_sets * d_size, max_vertices)
    b_graph, cover = de_bruijn_graph(r, ell, max_vertices)
    if cover is not None:
        # every cover set has exactly 2r = (q+1)p members: no truncation needed
        slot_maps = list(cover.sets)
    else:
        # l = 1 (or r = 1): one gadget whose (q+1)p = 2r C-slots cover V(B) twice
        slot_maps = [tuple(c % b_graph.n for c in range((q + 1) * p))]
    edges = set()
    next_id = b_graph.n
    for members in slot_maps:
        t, c_part, d_part = common_neighbour_bipartite(p, q, len(members))
        relabel = {c: members[c] for c in c_part}
        relabel.update({x: next_id + i for i, x in enumerate(d_part)})
        edges.update((relabel[u], relabel[v]) for u, v in t.edges)
        next_id += len(d_part)
    g = Graph(next_id, edges)
    forest = _star_forest_colours(g, b_graph.n, b)
    guarantee = Fraction(8, b * b) * Fraction(b * delta, 8) ** (k // 2)
    return ConstructionResult(
        graph=g, family="arboricity", params={"b": b, "k": k, "delta": delta, "q": q, "p": p, "r": r, "l": ell},
        claimed_max_degree=delta, claimed_diameter=k, guaranteed_vertices=_ceil(guarantee),
        forest=forest,
    )


def _star_forest_colours(g: Graph, first_d: int, b: int) -> ForestDecomposition:
    """Colour edges so no two sharing a D-endpoint (id >= first_d) agree.

    Edges are scanned in canonical order and take the smallest colour free at
    their D-endpoint; each colour class is then a star forest.
    """
    used: dict[int, int] = {}
    colors = []
    for u, v in g.edges:
        dv = v if v >= first_d else u
        c = used.get(dv, 0)
        used[dv] = c + 1
        colors.append(c)
    if colors and max(colors) >= b:
        raise AssertionError("D-vertex degree exceeds b")
    return ForestDecomposition(colors, b)


def arboricity_diam2_family(b: int, delta: int,
                            max_vertices: Optional[int] = None) -> ConstructionResult:
    """Diameter 2, arboricity <= b: L(K_{b+1}) plus p pendant-style vertices per clique."""
    _require(b >= 1, "b >= 1")
    _require(delta % 2 == 0, "delta even")
    _require(delta >= 4 * b, "delta >= 4b")
    p = delta // 2 - b + 1
    _check_budget(comb(b + 1, 2) + (b + 1) * p, max_vertices)
    x_graph, cliques = line_of_complete(b)
    edges = list(x_graph.edges)
    next_id = x_graph.n
    for clique in cliques:
        for _ in range(p):
            edges.extend((x, next_id) for x in clique)
            next_id += 1
    return ConstructionResult(
        graph=Graph(next_id, edges), family="arboricity-diam2",
        params={"b": b, "delta": delta, "p": p},
        claimed_max_degree=delta, claimed_diameter=2,
        guaranteed_vertices=_ceil(Fraction(b * delta, 4)),
    )


def treewidth_odd_family(t: int, k: int, delta: int,
                         max_vertices: Optional[int] = None) -> ConstructionResult:
    """t+1 rooted trees of depth (k-1)/2 whose roots form a clique."""
    _require(t >= 2, "t >= 2")
    _require(k >= 1 and k % 2 == 1, "k odd and k >= 1")
    _require(delta >= 2 * t - 2, "delta >= 2t - 2")
    depth = (k - 1) // 2
    root_fan, fan = delta - t, delta - 1
    size = tree_size(root_fan, fan, depth)
    _check_budget((t + 1) * size, max_vertices)
    edges = []
    roots = []
    levels: list[list[list[int]]] = []
    next_id = 0
    for _ in range(t + 1):
        root = next_id
        roots.append(root)
        lv: list[list[int]] = []
        next_id = _attach_tree(edges, next_id + 1, root, root_fan, fan, depth, lv)
        levels.append(lv)
    edges.extend(combinations(roots, 2))
    g = Graph(next_id, edges)
    order = _leaves_inward(levels, depth) + roots
    guarantee = Fraction(t + 1, 2) * (delta - 1) ** depth
    return ConstructionResult(
        graph=g, family="treewidth-odd", params={"t": t, "k": k, "delta": delta},
        claimed_max_degree=delta, claimed_diameter=k, guaranteed_vertices=_ceil(guarantee),
        chordal=ChordalWitness((), order),
    )


def _leaves_inward(levels: list[list[list[int]]], depth: int) -> list[int]:
    order = []
    for level in range(depth - 1, -1, -1):
        for lv in levels:
            if level < len(lv):
                order.extend(lv[level])
    return order


def treewidth_even_q(t: int) -> int:
    """Largest q with C(q+1, 2) <= t + 1."""
    q = 0
    while comb(q + 2, 2) <= t + 1:
        q += 1
    return q


def treewidth_even_threshold(t: int, delta: int) -> bool:
    """delta >= 4 sqrt(2t), decided exactly."""
    return delta >= 0 and delta * delta >= 32 * t


def treewidth_even_family(t: int, k: int, delta: int,
                          max_vertices: Optional[int] = None) -> ConstructionResult:
    """L(K_{q+1}) with rooted trees of depth k/2 - 1 hanging off each clique.

    Each clique L_i receives floor((delta - 2(q-1)) / 2) trees whose roots are
    joined to all of L_i, which keeps every L-vertex (in two cliques) at
    degree <= delta.  The chordal witness adds a clique on V(L).
    """
    _require(t >= 2, "t >= 2")
    _require(k >= 2 and k % 2 == 0, "k even and k >= 2")
    q = treewidth_even_q(t)
    _require(q >= 2, "q >= 2")
    _require(delta >= 2 * q, f"delta >= 2q = {2 * q}")
    depth = k // 2 - 1
    root_fan, fan = delta - q, delta - 1
    copies = (delta - 2 * (q - 1)) // 2
    size = tree_size(root_fan, fan, depth)
    l_graph, cliques = line_of_complete(q)
    _check_budget(l_graph.n + (q + 1) * copies * size, max_vertices)
    edges = list(l_graph.edges)
    next_id = l_graph.n
    roots = []
    levels: list[list[list[int]]] = []
    for clique in cliques:
        for _ in range(copies):
            root = next_id
            roots.append(root)
            edges.extend((x, root) for x in clique)
            lv: list[list[int]] = []
            next_id = _attach_tree(edges, next_id + 1, root, root_fan, fan, depth, lv)
            levels.append(lv)
    g = Graph(next_id, edges)
    l_vertices = list(range(l_graph.n))
    fill = [e for e in combinations(l_vertices, 2) if not g.has_edge(*e)]
    order = _leaves_inward(levels, depth) + roots + l_vertices
    guarantee = None
    if treewidth_even_threshold(t, delta):
        guarantee = ceil_times_sqrt(Fraction(1, 2), t + 1, (delta - 1) ** (k // 2))
    return ConstructionResult(
        graph=g, family="treewidth-even", params={"t": t, "k": k, "delta": delta, "q": q, "copies": copies},
        claimed_max_degree=delta, claimed_diameter=k, guaranteed_vertices=guarantee,
        chordal=ChordalWitness(fill, order),
    )


def three_colourable_debruijn(delta: int, k: int,
                              max_vertices: Optional[int] = None) -> ConstructionResult:
    """de Bruijn pseudograph (loops kept) times K3, coloured by the K3 coordinate."""
    _require(delta >= 4, "delta >= 4")
    _require(k >= 2, "k >= 2")
    r = delta // 4
    _check_budget(3 * r**k, max_vertices)
    h = de_bruijn_pseudograph(r, k, max_vertices)
    prod = direct_product(h, Pseudograph(complete_graph(3)))
    return ConstructionResult(
        graph=prod.base, family="three-col", params={"delta": delta, "k": k, "r": r},
        claimed_max_degree=delta, claimed_diameter=k, guaranteed_vertices=3 * r**k,
        coloring=Coloring([v % 3 for v in range(prod.n)]), colors_claimed=3,
    )


def triangle_free_debruijn(delta: int, k: int,
                           max_vertices: Optional[int] = None) -> ConstructionResult:
    """de Bruijn pseudograph times C5; triangle-free and 3-coloured via C5."""
    _require(delta >= 4, "delta >= 4")
    _require(k >= 4, "k >= 4")
    r = delta // 4
    _check_budget(5 * r**k, max_vertices)
    h = de_bruijn_pseudograph(r, k, max_vertices)
    prod = direct_product(h, Pseudograph(cycle_graph(5)))
    return ConstructionResult(
        graph=prod.base, family="triangle-free", params={"delta": delta, "k": k, "r": r},
        claimed_max_degree=delta, claimed_diameter=k, guaranteed_vertices=5 * r**k,
        coloring=Coloring([C5_COLORS[v % 5] for v in range(prod.n)]), colors_claimed=3,
    )


def zp2_family(delta: int, max_vertices: Optional[int] = None) -> ConstructionResult:
    """Triangle-free diameter-2 graph on Z_p^2.

    v ~ w iff the sorted pair of coordinate distances (a, b) has a = 1 and
    b != 2.  Coloured by coordinate parities.
    """
    _require(delta >= 20, "delta >= 20")
    p = 2 * ((delta + 4) // 8) + 2
    _check_budget(p * p, max_vertices)
    offsets = []
    for x in range(p):
        for y in range(p):
            a, b = sorted((min(x, p - x), min(y, p - y)))
            if a == 1 and b != 2:
                offsets.append((x, y))
    edges = []
    for v in range(p * p):
        v1, v2 = divmod(v, p)
        for x, y in offsets:
            w = ((v1 + x) % p) * p + (v2 + y) % p
            if v < w:
                edges.append((v, w))
    colors = [2 * ((v // p) % 2) + (v % p) % 2 for v in range(p * p)]
    return ConstructionResult(
        graph=Graph(p * p, edges), family="zp2", params={"delta": delta, "p": p},
        claimed_max_degree=delta, claimed_diameter=2, guaranteed_vertices=p * p,
        coloring=Coloring(colors), colors_claimed=4,
    )


def zp3_family(delta: int, max_vertices: Optional[int] = None) -> ConstructionResult:
    """Triangle-free diameter-3 graph on Z_p^3.

    v ~ w iff the sorted coordinate distances (a, b, c) are a = 0, b = 1,
    c >= 3.  Coloured by the three coordinate parities.
    """
    _require(delta >= 42, "delta >= 42")
    p = 2 * ((delta + 6) // 12) + 4
    n = p**3
    _check_budget(n, max_vertices)
    # enumerate neighbours of the origin once, then translate
    offsets = []
    for x in range(p):
        for y in range(p):
            for z in range(p):
                a, b, c = sorted(min(t, p - t) for t in (x, y, z))
                if a == 0 and b == 1 and c >= 3:
                    offsets.append((x, y, z))
    edges = []
    for v in range(n):
        v1, v2, v3 = v // (p * p), (v // p) % p, v % p
        for x, y, z in offsets:
            w = ((v1 + x) % p) * p * p + ((v2 + y) % p) * p + (v3 + z) % p
            if v < w:
                edges.append((v, w))
    colors = [4 * ((v // (p * p)) % 2) + 2 * ((v // p) % p % 2) + (v % p) % 2 for v in range(n)]
    return ConstructionResult(
        graph=Graph(n, edges), family="zp3", params={"delta": delta, "p": p},
        claimed_max_degree=delta, claimed_diameter=3, guaranteed_vertices=n,
        coloring=Coloring(colors), colors_claimed=8,
    )


FAMILIES = {
    "debruijn": debruijn_family,
    "avg-degree": avg_degree_family,
    "arboricity": arboricity_family,
    "arboricity-diam2": arboricity_diam2_family,
    "treewidth-odd": treewidth_odd_family,
    "treewidth-even": treewidth_even_family,
    "three-col": three_colourable_debruijn,
    "triangle-free": triangle_free_debruijn,
    "zp2": zp2_family,
    "zp3": zp3_family,
}
