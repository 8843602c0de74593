"""Exact vertex connectivity via unit-capacity max-flow (Menger)."""

from __future__ import annotations

from collections import deque

from .graph import Graph
from .vertex import VertexId


def local_connectivity(g: Graph, s: VertexId, t: VertexId, cap: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s``, ``t``.

    Every vertex other than ``s`` and ``t`` is split into an in/out pair joined
    by a unit arc. Stops early once ``cap`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs distinct non-adjacent endpoints")
    index = {x: i for i, x in enumerate(g.vertices)}
    n = len(index)
    # node 2i = in(i), 2i+1 = out(i)
    cap_arc: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_arc:
            out[a].append(b)
            out[b].append(a)
            cap_arc[(a, b)] = 0
            cap_arc.setdefault((b, a), 0)
        cap_arc[(a, b)] += c

    big = n + 1
    si, ti = index[s], index[t]
    for x, i in index.items():
        add(2 * i, 2 * i + 1, big if i in (si, ti) else 1)
    for u, w in g.edges:
        a, b = index[u], index[w]
        add(2 * a + 1, 2 * b, big)
        add(2 * b + 1, 2 * a, big)

    source, sink = 2 * si + 1, 2 * ti
    flow = 0
    while cap is None or flow < cap:
        prev = {source: source}
        q = deque([source])
        while q and sink not in prev:
            a = q.popleft()
            for b in out[a]:
                if b not in prev and cap_arc[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap_arc[(a, b)] -= 1
            cap_arc[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects ``g`` (``n-1`` for complete graphs).

    Uses Even's reduction: only sources among the first ``k+1`` vertices are
    needed, where ``k`` is the best bound found so far.
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    vs = g.vertices
    k = min(g.degree(x) for x in vs)
    i = 0
    while i <= k and i < n:
        s = vs[i]
        for t in vs[i + 1:]:
            if t == s or g.has_edge(s, t):
                continue
            k = min(k, local_connectivity(g, s, t, cap=k))
        i += 1
    return k
