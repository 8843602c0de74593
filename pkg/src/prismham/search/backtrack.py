"""Pruned depth-first search for constrained simple paths over bitmasks."""

from __future__ import annotations

import sys

from ..graph import Graph
from ..vertex import VertexId
from .queries import Meter


class Indexed:
    """Integer view of a graph: vertex ``k`` is ``graph.vertices[k]``."""

    def __init__(self, g: Graph):
        self.graph = g
        self.verts = g.vertices
        self.index = {x: k for k, x in enumerate(self.verts)}
        self.adj = [[self.index[y] for y in g.neighbors(x)] for x in self.verts]
        self.nbr = [sum(1 << j for j in a) for a in self.adj]

    def mask(self, xs) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.index[x]
        return m

    def ids(self, seq) -> tuple[VertexId, ...]:
        return tuple(self.verts[k] for k in seq)


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def search_path(
    ix: Indexed,
    starts: int,
    ends: int,
    cover: int,
    allowed: int,
    meter: Meter,
    min_len: int = 2,
) -> list[int] | None:
    """First path (in neighbour order) from a start vertex to an end vertex
    covering ``cover`` inside ``allowed``; ``None`` once exhausted.

    Pruning: every uncovered cover vertex and some end vertex must stay
    reachable from the head through unvisited vertices; an uncovered cover
    vertex with one remaining usable neighbour must be the final vertex, so at
    most one such vertex may exist and it must be an end vertex.
    """
    adj, nbr = ix.adj, ix.nbr
    path: list[int] = []
    limit = sys.getrecursionlimit()
    if ix.graph.n + 50 > limit:
        sys.setrecursionlimit(ix.graph.n + 200)

    def dfs(head: int, visited: int) -> bool:
        meter.tick()
        remaining = cover & ~visited
        if remaining == 0 and (ends >> head) & 1 and len(path) >= min_len:
            return True
        avail = allowed & ~visited
        # reachability from head through unvisited vertices
        reach = 0
        frontier = nbr[head] & avail
        while frontier:
            reach |= frontier
            nxt = 0
            for w in _bits(frontier):
                nxt |= nbr[w]
            frontier = nxt & avail & ~reach
        if remaining & ~reach or not (reach & ends):
            return False
        usable = avail | (1 << head)
        forced = 0
        for w in _bits(remaining):
            d = (nbr[w] & usable).bit_count()
            if d <= 1:
                if d == 0 or not (ends >> w) & 1:
                    return False
                forced += 1
                if forced > 1:
                    return False
        for w in adj[head]:
            if (avail >> w) & 1:
                path.append(w)
                if dfs(w, visited | (1 << w)):
                    return True
                path.pop()
        return False

    for s in _bits(starts & allowed):
        path[:] = [s]
        if dfs(s, 1 << s):
            return list(path)
    return None
