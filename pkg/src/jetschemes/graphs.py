"""Finite simple graphs and hypergraphs, edge ideals, and jets of graphs.

A graph on named vertices corresponds to the squarefree quadratic ideal
with one generator per edge.  The radical of the jets of that ideal is
again squarefree and quadratic, and the graph it encodes is the jets of
the original graph: each vertex v acquires copies v0..vs.
"""

from __future__ import annotations

import re

from .poly import Monomial, ParseError, PolyRing, Variable
from .monomial import MonomialIdeal, jets_radical, minimal_transversals


class Graph:
    """A finite simple graph; vertices are Variables, edges unordered pairs."""

    __slots__ = ("vertices", "edges", "_index")

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex")
        pairs = set()
        for u, v in edges:
            i, j = self._resolve(u), self._resolve(v)
            if i == j:
                raise ValueError(f"loop at vertex {self.vertices[i].name}")
            pairs.add((min(i, j), max(i, j)))
        self.edges = tuple(sorted(pairs))

    def _resolve(self, v):
        if isinstance(v, int):
            if not 0 <= v < len(self.vertices):
                raise ValueError("vertex index out of range")
            return v
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v}") from None

    def edge_pairs(self):
        """Edges as pairs of Variables, in canonical order."""
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def adjacency(self):
        adj = [set() for _ in self.vertices]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __str__(self):
        vs = ",".join(v.name for v in self.vertices)
        es = ",".join(f"{self.vertices[i].name}-{self.vertices[j].name}"
                      for i, j in self.edges)
        return f"graph({vs}; {es})"

    def __repr__(self):
        return f"Graph({self})"


class HyperGraph:
    """A hypergraph with nonempty edges, kept inclusion-minimal."""

    __slots__ = ("vertices", "edges", "_index")

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex")
        sets = set()
        for edge in edges:
            members = frozenset(self._resolve(v) for v in edge)
            if not members:
                raise ValueError("empty hyperedge")
            sets.add(members)
        minimal = [e for e in sets if not any(o < e for o in sets)]
        self.edges = tuple(sorted(tuple(sorted(e)) for e in minimal))

    def _resolve(self, v):
        if isinstance(v, int):
            if not 0 <= v < len(self.vertices):
                raise ValueError("vertex index out of range")
            return v
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v}") from None

    def edge_sets(self):
        return [tuple(self.vertices[i] for i in e) for e in self.edges]

    def __eq__(self, other):
        return (isinstance(other, HyperGraph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __repr__(self):
        es = ",".join("{" + ",".join(self.vertices[i].name for i in e) + "}"
                      for e in self.edges)
        return f"HyperGraph({es})"


def edge_ideal(G):
    """The squarefree monomial ideal with one generator per (hyper)edge."""
    ring = PolyRing(G.vertices)
    gens = [Monomial((i, 1) for i in edge) for edge in G.edges]
    return MonomialIdeal(ring, gens)


def graph_from_edge_ideal(I, vertices=None):
    """The graph whose edges are the generators of a quadratic squarefree ideal."""
    if not I.squarefree:
        raise ValueError("edge ideal must be squarefree")
    verts = tuple(vertices) if vertices is not None else I.ring.variables
    name_to_vertex = {v.name: v for v in verts}
    edges = []
    for m in I.generators:
        if m.degree() != 2:
            raise ValueError(f"generator of degree {m.degree()}, expected 2")
        u, w = (I.ring.variables[i] for i in m.support())
        try:
            edges.append((name_to_vertex[u.name], name_to_vertex[w.name]))
        except KeyError:
            raise ValueError("generator mentions a variable outside the vertex list") from None
    return Graph(verts, edges)


def jets_graph(s, G):
    """The order-s jets of a graph, on vertices v0..vs for each vertex v."""
    rad = jets_radical(s, edge_ideal(G))
    return graph_from_edge_ideal(rad)


def jets_hypergraph(s, H):
    """The order-s jets of a hypergraph: supports of the jets radical."""
    rad = jets_radical(s, edge_ideal(H))
    ring = rad.ring
    return HyperGraph(ring.variables, [m.support() for m in rad.generators])


def complement_graph(G):
    n = len(G.vertices)
    present = set(G.edges)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if (i, j) not in present]
    return Graph(G.vertices, edges)


def is_chordal(G):
    """Chordality via maximum cardinality search.

    MCS visits vertices by descending count of visited neighbors; the
    reverse of the visit order is a perfect elimination ordering iff the
    graph is chordal, which the second pass checks directly.
    """
    n = len(G.vertices)
    adj = G.adjacency()
    weight = [0] * n
    visited = [False] * n
    mcs = []
    for _ in range(n):
        v = max((i for i in range(n) if not visited[i]),
                key=lambda i: (weight[i], -i))
        visited[v] = True
        mcs.append(v)
        for u in adj[v]:
            if not visited[u]:
                weight[u] += 1
    order = mcs[::-1]
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        if any(u != parent and u not in adj[parent] for u in later):
            return False
    return True


def chromatic_number(G, max_vertices=32):
    """Exact chromatic number by iterated k-colorability search.

    k runs from a greedy clique lower bound up to a greedy coloring upper
    bound; each candidate k is decided by backtracking with new colors
    introduced at most one at a time.
    """
    n = len(G.vertices)
    if n > max_vertices:
        raise ValueError(f"graph has {n} vertices, above the bound {max_vertices}")
    if n == 0:
        return 0
    if not G.edges:
        return 1
    adj = G.adjacency()
    by_degree = sorted(range(n), key=lambda v: (-len(adj[v]), v))

    clique = []
    for v in by_degree:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    lower = len(clique)

    greedy = {}
    for v in by_degree:
        used = {greedy[u] for u in adj[v] if u in greedy}
        c = 0
        while c in used:
            c += 1
        greedy[v] = c
    upper = max(greedy.values()) + 1

    for k in range(lower, upper):
        if _colorable(adj, by_degree, k):
            return k
    return upper


def _colorable(adj, order, k):
    n = len(order)
    color = {}

    def backtrack(pos, used):
        if pos == n:
            return True
        v = order[pos]
        banned = {color[u] for u in adj[v] if u in color}
        for c in range(min(used + 1, k)):
            if c not in banned:
                color[v] = c
                if backtrack(pos + 1, max(used, c + 1)):
                    return True
                del color[v]
        return False

    return backtrack(0, 0)


def minimal_vertex_covers(G):
    """All inclusion-minimal vertex covers, by size then vertex indices.

    Works for graphs and hypergraphs alike, and agrees with the minimal
    primes of the edge ideal.
    """
    covers = minimal_transversals(G.edges)
    return [tuple(G.vertices[i] for i in sorted(c)) for c in covers]


_EDGE_RE = re.compile(r"\s*([A-Za-z][A-Za-z0-9]*)\s*-\s*([A-Za-z][A-Za-z0-9]*)\s*$")


def parse_graph_text(text):
    """Parse a graph from text: edges like "a-c" separated by commas or

    newlines, optionally preceded by a header line "vertices a,b,c,d,e".
    Without a header, vertices are collected in order of appearance.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    names = []
    declared = False
    if lines and lines[0].split(None, 1)[0] == "vertices":
        declared = True
        rest = lines[0][len("vertices"):]
        names = [w for w in re.split(r"[\s,]+", rest) if w]
        if not names:
            raise ValueError("empty vertex header")
        lines = lines[1:]
    items = [item for ln in lines for item in ln.split(",") if item.strip()]
    seen = set(names)
    edges = []
    for item in items:
        m = _EDGE_RE.match(item)
        if m is None:
            raise ValueError(f"bad edge {item.strip()!r}, expected NAME-NAME")
        u, w = m.group(1), m.group(2)
        for name in (u, w):
            if name not in seen:
                if declared:
                    raise ValueError(f"edge uses undeclared vertex {name}")
                seen.add(name)
                names.append(name)
        edges.append((u, w))
    vertices = [Variable(name) for name in names]
    by_name = {v.name: v for v in vertices}
    return Graph(vertices, [(by_name[u], by_name[w]) for u, w in edges])
