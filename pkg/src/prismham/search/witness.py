"""Solver-independent witness checks.

These re-derive every property of a claimed witness from the graph alone;
nothing here imports the engines.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..graph import Graph
from ..vertex import VertexId
from .queries import PathQuery, PathSystemQuery


def is_simple_path(g: Graph, seq: Sequence[VertexId]) -> bool:
    if len(seq) < 2 or len(set(seq)) != len(seq):
        return False
    if any(x not in g for x in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_hamilton_cycle(g: Graph, seq: Sequence[VertexId]) -> bool:
    """``seq`` lists each vertex once; consecutive and last-first pairs are edges."""
    if len(seq) < 3 or len(seq) != g.n or set(seq) != set(g.vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, list(seq[1:]) + [seq[0]]))


def cycle_edges(seq: Sequence[VertexId]) -> set[frozenset[VertexId]]:
    return {frozenset((a, b)) for a, b in zip(seq, list(seq[1:]) + [seq[0]])}


def _ends_ok(seq, starts, ends) -> bool:
    a, b = seq[0], seq[-1]
    return (a in starts and b in ends) or (b in starts and a in ends)


def check_path(q: PathQuery, seq: Sequence[VertexId]) -> bool:
    if not is_simple_path(q.graph, seq):
        return False
    if not _ends_ok(seq, q.start_set, q.end_set):
        return False
    s = set(seq)
    return q.cover_set <= s and not (q.forbidden_set & s)


def check_path_system(q: PathSystemQuery, paths: Iterable[Sequence[VertexId]]) -> bool:
    paths = list(paths)
    if len(paths) != len(q.pairs):
        return False
    used: set[VertexId] = set()
    for seq, (s, t) in zip(paths, q.pairs):
        if not is_simple_path(q.graph, seq) or not _ends_ok(seq, s, t):
            return False
        if used & set(seq):
            return False
        used |= set(seq)
    return q.cover_target <= used
