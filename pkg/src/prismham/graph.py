"""Immutable simple undirected graphs over :class:`VertexId` and basic set algebra."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .vertex import COPIES, VertexId

Edge = tuple[VertexId, VertexId]


def _edge(u: VertexId, w: VertexId) -> Edge:
    return (u, w) if u < w else (w, u)


class Graph:
    """Simple undirected graph with sorted, deterministic iteration.

    Vertices and neighbour lists are kept in ``VertexId`` order, so two graphs
    built from the same vertex and edge sets iterate identically regardless of
    construction history.
    """

    __slots__ = ("_vertices", "_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable[VertexId] = (), edges: Iterable[tuple[VertexId, VertexId]] = ()):
        vs = set(vertices)
        es: set[Edge] = set()
        for u, w in edges:
            if u == w:
                raise ValueError(f"loop at {u}")
            vs.add(u)
            vs.add(w)
            es.add(_edge(u, w))
        adj: dict[VertexId, list[VertexId]] = {x: [] for x in sorted(vs)}
        for u, w in es:
            adj[u].append(w)
            adj[w].append(u)
        self._vertices = tuple(adj)
        self._adj = {x: tuple(sorted(nb)) for x, nb in adj.items()}
        self._edges = tuple(sorted(es))
        self._hash = None

    # -- accessors -----------------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def neighbors(self, x: VertexId) -> tuple[VertexId, ...]:
        return self._adj[x]

    def degree(self, x: VertexId) -> int:
        return len(self._adj[x])

    def has_edge(self, u: VertexId, w: VertexId) -> bool:
        nb = self._adj.get(u)
        return nb is not None and w in nb

    def __contains__(self, x: object) -> bool:
        return x in self._adj

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ------------------------------------------------------

    def subgraph(self, keep: Iterable[VertexId]) -> Graph:
        """Induced subgraph on ``keep`` (vertices absent from the graph are ignored)."""
        ks = {x for x in keep if x in self._adj}
        return Graph(ks, ((u, w) for u, w in self._edges if u in ks and w in ks))

    def relabel(self, mapping: dict[VertexId, VertexId]) -> Graph:
        f = lambda x: mapping.get(x, x)  # noqa: E731
        return Graph((f(x) for x in self._vertices), ((f(u), f(w)) for u, w in self._edges))

    def components(self) -> list[list[VertexId]]:
        seen: set[VertexId] = set()
        out = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            q = deque([s])
            while q:
                x = q.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        q.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


def union(g: Graph, h: Graph) -> Graph:
    return Graph(g.vertices + h.vertices, g.edges + h.edges)


def intersection(g: Graph, h: Graph) -> Graph:
    hv = set(h.vertices)
    he = set(h.edges)
    return Graph((x for x in g.vertices if x in hv), (e for e in g.edges if e in he))


def delete(g: Graph, s: Iterable[VertexId]) -> Graph:
    """``G - S``; members of ``S`` that are not vertices of ``G`` are ignored."""
    drop = set(s)
    return g.subgraph(x for x in g.vertices if x not in drop)


def _product_vertex(x: VertexId, y: VertexId, copies: dict[VertexId, str] | None) -> VertexId:
    if copies is not None:
        return x.on(copies[y])
    return VertexId("generic", f"{x}*{y}".replace("@", "_").replace("^", "").replace("/", "-"))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H``.

    When ``H`` has at most two vertices and ``G`` carries no prism sides, the
    vertices of ``H`` become the side markers A, B (in ``H``'s vertex order);
    otherwise product vertices are generic ``g*h`` labels.
    """
    copies = None
    if h.n <= 2 and all(x.copy is None for x in g.vertices):
        copies = dict(zip(h.vertices, COPIES))
    pv = {(x, y): _product_vertex(x, y, copies) for x in g.vertices for y in h.vertices}
    if len(set(pv.values())) != len(pv):
        raise ValueError("product vertex labels collide")
    edges = []
    for u, w in g.edges:
        for y in h.vertices:
            edges.append((pv[u, y], pv[w, y]))
    for y1, y2 in h.edges:
        for x in g.vertices:
            edges.append((pv[x, y1], pv[x, y2]))
    return Graph(pv.values(), edges)


def k2() -> Graph:
    from .vertex import v

    return Graph([v("a"), v("b")], [(v("a"), v("b"))])


def prism(g: Graph) -> Graph:
    """``G □ K2`` with sides marked A and B; rung edges join ``(v,A)`` and ``(v,B)``."""
    if any(x.copy is not None for x in g.vertices):
        raise ValueError("graph already carries prism sides")
    edges = [(u.on(c), w.on(c)) for u, w in g.edges for c in COPIES]
    edges += [(x.on("A"), x.on("B")) for x in g.vertices]
    return Graph([x.on(c) for x in g.vertices for c in COPIES], edges)


def both(x: VertexId) -> tuple[VertexId, VertexId]:
    """The two prism copies of a base vertex."""
    return x.on("A"), x.on("B")


def prism_set(xs: Iterable[VertexId]) -> frozenset[VertexId]:
    return frozenset(c for x in xs for c in both(x))
