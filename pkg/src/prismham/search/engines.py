"""Public decision procedures: constrained paths, disjoint path pairs, Hamilton cycles."""

from __future__ import annotations

import logging

from ..graph import Graph, prism
from ..vertex import VertexId
from .backtrack import Indexed, search_path
from .frontier import cycle_dp, edges_to_cycle, frontier_width, greedy_order
from .queries import (
    ABSENT,
    BACKTRACKING,
    BRUTE_FORCE,
    DP,
    FOUND,
    UNLIMITED,
    Budget,
    InconclusiveError,
    Meter,
    PathQuery,
    PathSystemQuery,
    QueryError,
    SearchOutcome,
    SizeError,
)
from .witness import check_path, check_path_system, is_hamilton_cycle

log = logging.getLogger(__name__)

ENGINES = ("auto", "backtracking", "dp")
DEFAULT_WIDTH_CAP = 16
PAIR_BRUTE_FORCE_CAP = 24


class EngineError(RuntimeError):
    """An engine produced a witness that failed independent validation."""


def _check_engine(engine: str) -> None:
    if engine not in ENGINES:
        raise QueryError(f"unknown engine {engine!r}; expected one of {ENGINES}")


# -- layouts ---------------------------------------------------------------


def _prism_base(g: Graph) -> Graph | None:
    """The base graph if ``g`` is exactly a prism, else ``None``."""
    if any(x.copy is None for x in g.vertices) or g.n % 2:
        return None
    bases = {x.base for x in g.vertices}
    if len(bases) * 2 != g.n:
        return None
    base_edges = set()
    for u, w in g.edges:
        if u.base == w.base:
            continue
        if u.copy != w.copy:
            return None
        base_edges.add((u.base, w.base) if u.base < w.base else (w.base, u.base))
    base = Graph(bases, base_edges)
    if prism(base) != g:
        return None
    return base


def layout(g: Graph, ix: Indexed, first: VertexId | None = None) -> list[int]:
    """Linear vertex order for the DP engine.

    For a prism the order is the doubling of a greedy layout of the base
    graph, so each bag holds both copies of a base separator.
    """
    first = first if first is not None else g.vertices[0]
    base = _prism_base(g)
    if base is not None:
        bix = Indexed(base)
        border = greedy_order(bix.adj, bix.index[first.base])
        return [ix.index[bix.verts[b].on(c)] for b in border for c in ("A", "B")]
    return greedy_order(ix.adj, ix.index[first])


# -- paths -----------------------------------------------------------------


def _path_backtracking(q: PathQuery, budget: Budget) -> SearchOutcome:
    ix = Indexed(q.graph)
    meter = Meter(budget, BACKTRACKING)
    allowed = ((1 << q.graph.n) - 1) & ~ix.mask(q.forbidden_set)
    seq = search_path(ix, ix.mask(q.start_set), ix.mask(q.end_set), ix.mask(q.cover_set), allowed, meter)
    if seq is None:
        return SearchOutcome(ABSENT, (), BACKTRACKING, meter.nodes, meter.millis)
    path = ix.ids(seq)
    if not check_path(q, path):
        raise EngineError("backtracking witness failed validation")
    return SearchOutcome(FOUND, (path,), BACKTRACKING, meter.nodes, meter.millis)


def _orient(path: list[VertexId], starts) -> tuple[VertexId, ...]:
    return tuple(path if path[0] in starts else path[::-1])


def _path_dp(q: PathQuery, budget: Budget, width_cap: int) -> SearchOutcome | None:
    """DP verdict, or ``None`` when the layout is wider than ``width_cap``."""
    g = q.graph
    ix = Indexed(g)
    n = g.n
    s_hub, t_hub = n, n + 1
    adj = [list(a) for a in ix.adj] + [[], []]
    for x in q.start_set:
        adj[s_hub].append(ix.index[x])
        adj[ix.index[x]].append(s_hub)
    for x in q.end_set:
        adj[t_hub].append(ix.index[x])
        adj[ix.index[x]].append(t_hub)
    adj[s_hub].append(t_hub)
    adj[t_hub].append(s_hub)
    drop = {ix.index[x] for x in q.forbidden_set}
    order = [s_hub, t_hub] + [k for k in layout(g, ix, min(q.start_set)) if k not in drop]
    width = frontier_width(adj, order)
    if width > width_cap:
        log.info("DP layout width %d exceeds cap %d", width, width_cap)
        return None
    required = {ix.index[x] for x in q.cover_set} | {s_hub, t_hub}
    meter = Meter(budget, DP)
    edges = cycle_dp(adj, order, required, meter, forced=(s_hub, t_hub))
    notes = {"width": width}
    if edges is None:
        return SearchOutcome(ABSENT, (), DP, meter.nodes, meter.millis, notes)
    cyc = edges_to_cycle(edges)
    k = cyc.index(s_hub)
    cyc = cyc[k:] + cyc[:k]
    inner = cyc[1:] if cyc[-1] == t_hub else cyc[1:][::-1]
    inner = [c for c in inner if c not in (s_hub, t_hub)]
    path = _orient([ix.verts[c] for c in inner], q.start_set)
    if not check_path(q, path):
        raise EngineError("DP witness failed validation")
    return SearchOutcome(FOUND, (path,), DP, meter.nodes, meter.millis, notes)


def _solve_path(q: PathQuery, engine: str, budget: Budget, width_cap: int) -> SearchOutcome:
    _check_engine(engine)
    q.validate()
    if engine == "backtracking" or len(q.cover_set) < 2:
        return _path_backtracking(q, budget)
    out = _path_dp(q, budget, width_cap)
    if out is None:
        return _path_backtracking(q, budget)
    return out


def find_path(
    q: PathQuery, engine: str = "backtracking", budget: Budget = UNLIMITED, width_cap: int = DEFAULT_WIDTH_CAP
) -> SearchOutcome:
    """Decide ``q``; by default with the backtracking engine."""
    return _solve_path(q, engine, budget, width_cap)


def prove_no_path(
    q: PathQuery, engine: str = "dp", budget: Budget = UNLIMITED, width_cap: int = DEFAULT_WIDTH_CAP
) -> SearchOutcome:
    """Decide ``q``; by default with the decomposition DP (falling back to
    backtracking when the layout is too wide)."""
    return _solve_path(q, "auto" if engine == "dp" else engine, budget, width_cap)


# -- disjoint pairs --------------------------------------------------------


def _simple_paths(ix: Indexed, starts: int, ends: int, allowed: int, meter: Meter):
    adj = ix.adj
    for s in range(len(adj)):
        if not (starts >> s) & 1 or not (allowed >> s) & 1:
            continue
        path = [s]

        def rec(head: int, visited: int):
            meter.tick()
            if len(path) >= 2 and (ends >> head) & 1:
                yield list(path), visited
            for w in adj[head]:
                if (allowed >> w) & 1 and not (visited >> w) & 1:
                    path.append(w)
                    yield from rec(w, visited | (1 << w))
                    path.pop()

        yield from rec(s, 1 << s)


def find_disjoint_pair(q: PathSystemQuery, budget: Budget = UNLIMITED) -> SearchOutcome:
    """Brute force: every simple path for the first pair, then a covering
    path for the second pair in what is left."""
    q.validate()
    if q.graph.n > PAIR_BRUTE_FORCE_CAP:
        raise SizeError(f"disjoint pair brute force is capped at {PAIR_BRUTE_FORCE_CAP} vertices")
    ix = Indexed(q.graph)
    meter = Meter(budget, BRUTE_FORCE)
    full = (1 << q.graph.n) - 1
    target = ix.mask(q.cover_target)
    (s1, t1), (s2, t2) = q.pairs
    for p1, used in _simple_paths(ix, ix.mask(s1), ix.mask(t1), full, meter):
        rest = full & ~used
        if target & ~rest & ~used:
            continue
        need = target & rest
        for p2, used2 in _simple_paths(ix, ix.mask(s2), ix.mask(t2), rest, meter):
            if need & ~used2 == 0:
                paths = (ix.ids(p1), ix.ids(p2))
                if not check_path_system(q, paths):
                    raise EngineError("brute-force pair failed validation")
                return SearchOutcome(FOUND, paths, BRUTE_FORCE, meter.nodes, meter.millis)
    return SearchOutcome(ABSENT, (), BRUTE_FORCE, meter.nodes, meter.millis)


def disjoint_pair_via_hub(q: PathSystemQuery, budget: Budget = UNLIMITED) -> SearchOutcome:
    """Second route for symmetric pair queries (both pairs equal ``(S, T)``).

    Two disjoint S-T paths covering the target exist iff the graph plus a hub
    joined to all of ``T`` has an S-S path through the hub covering the target.
    """
    q.validate()
    (s1, t1), (s2, t2) = q.pairs
    if s1 != s2 or t1 != t2 or s1 & t1:
        raise QueryError("hub reduction needs identical, disjoint endpoint sets for both pairs")
    hub = VertexId("generic", "hub-pair")
    if hub in q.graph:
        raise QueryError("hub label already used")
    g = Graph(q.graph.vertices + (hub,), q.graph.edges + tuple((hub, t) for t in sorted(t1)))
    pq = PathQuery(g, s1, s1, q.cover_target | {hub})
    out = prove_no_path(pq, budget=budget)
    if out.found:
        path = list(out.path)
        k = path.index(hub)
        paths = (tuple(path[:k]), tuple(reversed(path[k + 1:])))
        if not check_path_system(q, paths):
            raise EngineError("hub reduction witness failed validation")
        out = SearchOutcome(FOUND, paths, out.method, out.nodes, out.millis, out.notes)
    return out


# -- Hamilton cycles -------------------------------------------------------


def _hc_backtracking(g: Graph, budget: Budget) -> SearchOutcome:
    ix = Indexed(g)
    meter = Meter(budget, BACKTRACKING)
    full = (1 << g.n) - 1
    seq = search_path(ix, 1, ix.nbr[0], full, full, meter, min_len=3)
    if seq is None:
        return SearchOutcome(ABSENT, (), BACKTRACKING, meter.nodes, meter.millis)
    cyc = ix.ids(seq)
    if not is_hamilton_cycle(g, cyc):
        raise EngineError("backtracking cycle failed validation")
    return SearchOutcome(FOUND, (cyc,), BACKTRACKING, meter.nodes, meter.millis)


def _hc_dp(g: Graph, budget: Budget, width_cap: int) -> SearchOutcome | None:
    ix = Indexed(g)
    order = layout(g, ix)
    width = frontier_width(ix.adj, order)
    if width > width_cap:
        return None
    meter = Meter(budget, DP)
    edges = cycle_dp(ix.adj, order, set(range(g.n)), meter)
    if edges is None:
        return SearchOutcome(ABSENT, (), DP, meter.nodes, meter.millis, {"width": width})
    cyc = ix.ids(edges_to_cycle(edges))
    if not is_hamilton_cycle(g, cyc):
        raise EngineError("DP cycle failed validation")
    return SearchOutcome(FOUND, (cyc,), DP, meter.nodes, meter.millis, {"width": width})


def find_hamilton_cycle(
    g: Graph, engine: str = "backtracking", budget: Budget = UNLIMITED, width_cap: int = DEFAULT_WIDTH_CAP
) -> SearchOutcome:
    """Hamilton cycle anchored at the smallest vertex, or a proof of absence.

    Graphs with fewer than three vertices have no cycle at all. ``auto`` first
    spends a small backtracking budget, then uses the DP if the layout is
    narrow enough, else unbounded backtracking.
    """
    _check_engine(engine)
    if g.n < 3 or not g.is_connected() or any(g.degree(x) < 2 for x in g.vertices):
        return SearchOutcome(ABSENT, (), BACKTRACKING, 0, 0.0, {"reason": "trivial obstruction"})
    if engine == "backtracking":
        return _hc_backtracking(g, budget)
    if engine == "auto":
        probe = budget.node_cap if budget.node_cap is not None else 20000
        try:
            return _hc_backtracking(g, Budget(min(probe, 20000), budget.time_cap_ms))
        except InconclusiveError:
            pass
    out = _hc_dp(g, budget, width_cap)
    if out is None:
        return _hc_backtracking(g, budget)
    return out


def decide_prism_hamiltonian(
    g: Graph, engine: str = "auto", budget: Budget = UNLIMITED, width_cap: int = DEFAULT_WIDTH_CAP
) -> SearchOutcome:
    """Hamilton cycle search on ``prism(g)``."""
    return find_hamilton_cycle(prism(g), engine, budget, width_cap)
