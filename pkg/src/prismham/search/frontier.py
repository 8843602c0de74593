"""Dynamic programming over a linear vertex layout (path decomposition).

Vertices are introduced in layout order; the edges joining a new vertex to
already introduced ones are decided one at a time; a vertex leaves the
frontier (is forgotten) once all of its neighbours have been introduced. The
bags of the underlying path decomposition are the frontiers.

A state records, for each frontier vertex, whether it is unused, interior
(degree 2) or the end of a path fragment together with that fragment's other
end. States encode partial edge sets that can still extend to one simple
cycle through every required vertex.
"""

from __future__ import annotations

from typing import Sequence

from .queries import Meter

UNUSED = -1
INNER = -2


def frontier_width(adj: Sequence[Sequence[int]], order: Sequence[int]) -> int:
    pos = {v: k for k, v in enumerate(order)}
    last = {v: max([pos[v]] + [pos[u] for u in adj[v] if u in pos]) for v in order}
    live = 0
    width = 0
    ends_at: dict[int, int] = {}
    for v in order:
        ends_at[last[v]] = ends_at.get(last[v], 0) + 1
    for k in range(len(order)):
        live += 1
        width = max(width, live)
        live -= ends_at.get(k, 0)
    return width


def greedy_order(adj: Sequence[Sequence[int]], first: int, vertices: Sequence[int] | None = None) -> list[int]:
    """Linear layout grown from ``first``, each step adding the vertex that keeps
    the frontier smallest (ties: most introduced neighbours, then lowest index)."""
    todo = set(range(len(adj)) if vertices is None else vertices)
    order = [first]
    todo.discard(first)
    placed = {first}
    open_deg = {first: sum(1 for u in adj[first] if u in todo)}
    while todo:
        touching = {u for v in open_deg if open_deg[v] > 0 for u in adj[v] if u in todo}
        pool = touching or todo
        best = None
        for c in pool:
            back = sum(1 for u in adj[c] if u in placed)
            closes = sum(1 for u in adj[c] if u in placed and open_deg[u] == 1)
            fwd = len(adj[c]) - back
            grow = (1 if fwd > 0 else 0) - closes
            key = (grow, -back, c)
            if best is None or key < best[0]:
                best = (key, c)
        c = best[1]
        order.append(c)
        todo.discard(c)
        placed.add(c)
        for u in adj[c]:
            if u in open_deg:
                open_deg[u] -= 1
        open_deg[c] = sum(1 for u in adj[c] if u in todo)
    return order


def cycle_dp(
    adj: Sequence[Sequence[int]],
    order: Sequence[int],
    required: set[int],
    meter: Meter,
    forced: tuple[int, int] | None = None,
) -> list[tuple[int, int]] | None:
    """Edge list of one simple cycle through all ``required`` vertices (and the
    ``forced`` edge, if given), or ``None`` if no such cycle exists.

    Only vertices in ``order`` take part; the cycle must have length >= 3.
    """
    pos = {v: k for k, v in enumerate(order)}
    member = set(order)
    last = {v: max([pos[v]] + [pos[u] for u in adj[v] if u in member]) for v in order}
    last_required = max((pos[r] for r in required), default=-1)
    fk = frozenset(forced) if forced else None

    frontier: list[int] = []
    fpos: dict[int, int] = {}
    states: dict[tuple[bool, tuple[int, ...]], object] = {(False, ()): None}

    for k, v in enumerate(order):
        frontier.append(v)
        fpos[v] = len(frontier) - 1
        states = {(c, t + (UNUSED,)): ch for (c, t), ch in states.items()}
        back = sorted((u for u in adj[v] if u in member and pos[u] < k), key=pos.__getitem__)
        for u in back:
            iu, iv = fpos[u], fpos[v]
            is_forced = fk is not None and frozenset((u, v)) == fk
            new: dict[tuple[bool, tuple[int, ...]], object] = {}
            for (closed, t), chain in states.items():
                if not is_forced:
                    new.setdefault((closed, t), chain)
                if closed:
                    continue
                mu, mv = t[iu], t[iv]
                if mu == INNER or mv == INNER:
                    continue
                lst = list(t)
                now_closed = False
                if mu == UNUSED and mv == UNUSED:
                    lst[iu], lst[iv] = v, u
                elif mu == UNUSED:
                    lst[iu] = mv
                    lst[fpos[mv]] = u
                    lst[iv] = INNER
                elif mv == UNUSED:
                    lst[iv] = mu
                    lst[fpos[mu]] = v
                    lst[iu] = INNER
                elif mu == v:
                    lst[iu] = lst[iv] = INNER
                    if k < last_required or any(x >= 0 for x in lst):
                        continue
                    now_closed = True
                else:
                    lst[fpos[mu]] = mv
                    lst[fpos[mv]] = mu
                    lst[iu] = lst[iv] = INNER
                new.setdefault((now_closed, tuple(lst)), ((u, v), chain))
            states = new
            meter.tick(max(1, len(states)))
        gone = [x for x in frontier if last[x] <= k]
        for x in gone:
            i = fpos[x]
            req = x in required
            new = {}
            for (closed, t), chain in states.items():
                val = t[i]
                if val >= 0 or (req and val != INNER):
                    continue
                new.setdefault((closed, t[:i] + t[i + 1:]), chain)
            states = new
            frontier.pop(i)
            fpos = {y: j for j, y in enumerate(frontier)}
        if not states:
            return None
    for (closed, _), chain in states.items():
        if closed:
            edges = []
            while chain is not None:
                e, chain = chain
                edges.append(e)
            return edges[::-1]
    return None


def edges_to_cycle(edges: list[tuple[int, int]]) -> list[int]:
    nb: dict[int, list[int]] = {}
    for a, b in edges:
        nb.setdefault(a, []).append(b)
        nb.setdefault(b, []).append(a)
    start = min(nb)
    seq = [start]
    prev, cur = None, start
    while True:
        a, b = nb[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    return seq
