"""Spanning structures below hamiltonicity: cactuses, k-trees and k-walks.

The hierarchy checked by :func:`hierarchy_report` is::

    hamiltonian => traceable => prism-hamiltonian => spanning 2-walk => spanning 3-tree
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .blocks import BlockDecomposition, blocks
from .graph import Graph, delete
from .search import (
    FOUND,
    UNLIMITED,
    Budget,
    InconclusiveError,
    PathQuery,
    decide_prism_hamiltonian,
    find_hamilton_cycle,
    find_path,
)
from .search.queries import Meter
from .vertex import VertexId, v

YES, NO, INCONCLUSIVE = "yes", "no", "inconclusive"
RUNGS = ("hamiltonian", "traceable", "prism_hamiltonian", "has_2walk", "has_3tree")


class ClassificationError(ValueError):
    """Input is not the kind of cactus the operation needs."""


class HierarchyViolation(AssertionError):
    pass


# -- cactus classification -------------------------------------------------


@dataclass(frozen=True)
class CactusReport:
    is_cactus: bool
    is_even: bool
    is_good: bool
    good_vertices: frozenset[VertexId]
    blocks: BlockDecomposition = field(repr=False)

    @property
    def good_even(self) -> bool:
        return self.is_good and self.is_even

    def to_json(self) -> dict:
        return {
            "is_cactus": self.is_cactus,
            "is_even": self.is_even,
            "is_good": self.is_good,
            "good_vertices": [str(x) for x in sorted(self.good_vertices)],
            "blocks": len(self.blocks.blocks),
            "cutvertices": [str(x) for x in sorted(self.blocks.cutvertices)],
        }


def _is_cycle_block(b: Graph) -> bool:
    return b.n >= 3 and b.m == b.n and all(b.degree(x) == 2 for x in b.vertices)


def classify_cactus(g: Graph) -> CactusReport:
    """Cactus flags for a connected graph.

    A single vertex counts as a (trivially even and good) cactus.
    """
    if not g.is_connected():
        raise ValueError("cactus classification needs a connected graph")
    bd = blocks(g)
    kinds_ok = all(b.m <= 1 or _is_cycle_block(b) for b in bd.blocks)
    counts = bd.block_count()
    is_cactus = kinds_ok
    is_even = is_cactus and all(b.m <= 1 or b.n % 2 == 0 for b in bd.blocks)
    is_good = is_cactus and all(c <= 2 for c in counts.values())
    good = frozenset(x for x, c in counts.items() if c == 1) if is_cactus else frozenset()
    return CactusReport(is_cactus, is_even, is_good, good, bd)


# -- prism cycle for good even cactuses ------------------------------------


def _rotate(cyc: list[VertexId], start: VertexId, last: VertexId) -> list[VertexId]:
    """Cycle re-listed from ``start`` so that it ends at the neighbour ``last``."""
    k = cyc.index(start)
    r = cyc[k:] + cyc[:k]
    if r[1] == last:
        r = [r[0]] + r[1:][::-1]
    if r[-1] != last:
        raise AssertionError("rung edge missing from sub-cycle")
    return r


def _cycle_order(g: Graph) -> list[VertexId]:
    start = g.vertices[0]
    seq = [start]
    prev, cur = None, start
    while True:
        nxt = [y for y in g.neighbors(cur) if y != prev][0]
        if nxt == start:
            return seq
        seq.append(nxt)
        prev, cur = cur, nxt


def _prism_cycle(g: Graph) -> list[VertexId]:
    bd = blocks(g)
    counts = bd.block_count()
    shared = [x for x in g.vertices if counts[x] >= 2]
    if not shared:
        if g.n == 2:
            p, q = g.vertices
            return [p.on("A"), p.on("B"), q.on("B"), q.on("A")]
        out = []
        for k, x in enumerate(_cycle_order(g)):
            out += [x.on("A"), x.on("B")] if k % 2 == 0 else [x.on("B"), x.on("A")]
        return out
    u = shared[0]
    first = bd.blocks[bd.blocks_of(u)[0]]
    side = set(first.vertices) - {u}
    comps = delete(g, [u]).components()
    part1 = {u} | {x for c in comps if side & set(c) for x in c}
    part2 = {u} | (set(g.vertices) - part1)
    c1 = _rotate(_prism_cycle(g.subgraph(part1)), u.on("A"), u.on("B"))
    c2 = _rotate(_prism_cycle(g.subgraph(part2)), u.on("B"), u.on("A"))
    return c1 + c2[1:-1]


def cactus_prism_cycle(g: Graph) -> tuple[VertexId, ...]:
    """Hamilton cycle of ``prism(g)`` for a good even cactus ``g``, using the
    rung ``(x,A)(x,B)`` at every good vertex ``x``.

    Inductive construction: split at a vertex lying in two blocks, solve both
    sides (where that vertex is good), and splice the two cycles along the
    shared rung.
    """
    rep = classify_cactus(g)
    if not rep.good_even:
        raise ClassificationError("graph is not a good even cactus")
    if g.n < 2:
        raise ClassificationError("the prism over a single vertex has no cycle")
    return tuple(_prism_cycle(g))


def check_cactus_prism_cycle(g: Graph, cyc) -> bool:
    """Independent check: spanning simple cycle of the prism with every good rung."""
    from .graph import prism
    from .search.witness import cycle_edges, is_hamilton_cycle

    if not is_hamilton_cycle(prism(g), cyc):
        return False
    es = cycle_edges(cyc)
    good = classify_cactus(g).good_vertices
    return all(frozenset((x.on("A"), x.on("B"))) in es for x in good)


# -- spanning good even cactus ---------------------------------------------


def find_spanning_good_even_cactus(g: Graph, budget: Budget = UNLIMITED) -> Graph | None:
    """A spanning subgraph that is a good even cactus, or ``None`` if none exists.

    Include/exclude branching over edges. A partial edge set is abandoned when
    some vertex exceeds degree 4 or some block is neither an edge nor an even
    cycle (blocks only grow as edges are added), or when the undecided edges
    can no longer connect the graph.
    """
    if g.n == 1:
        return g
    if not g.is_connected():
        return None
    edges = g.edges
    meter = Meter(budget, "branch-and-bound")
    chosen: list = []
    deg = {x: 0 for x in g.vertices}

    def feasible_blocks() -> bool:
        bd = blocks(Graph(g.vertices, chosen))
        return all(b.m <= 1 or (_is_cycle_block(b) and b.n % 2 == 0) for b in bd.blocks)

    def rec(i: int) -> Graph | None:
        meter.tick()
        h = Graph(g.vertices, chosen)
        if h.is_connected() and classify_cactus(h).good_even:
            return h
        if i == len(edges):
            return None
        if not Graph(g.vertices, chosen + list(edges[i:])).is_connected():
            return None
        p, q = edges[i]
        if deg[p] < 4 and deg[q] < 4:
            chosen.append(edges[i])
            deg[p] += 1
            deg[q] += 1
            if feasible_blocks():
                found = rec(i + 1)
                if found is not None:
                    return found
            chosen.pop()
            deg[p] -= 1
            deg[q] -= 1
        return rec(i + 1)

    return rec(0)


# -- k-trees and k-walks ---------------------------------------------------


def has_spanning_k_tree(g: Graph, k: int, budget: Budget = UNLIMITED) -> tuple[bool, tuple | None]:
    """Spanning tree of maximum degree ``<= k`` as ``(True, edges)``, or ``(False, None)``."""
    if k < 1:
        raise ValueError("k must be positive")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n == 1:
        return True, ()
    meter = Meter(budget, "spanning-tree")
    root = g.vertices[0]
    in_tree = {root}
    deg = {x: 0 for x in g.vertices}
    tree: list = []
    excluded: set = set()

    def reachable() -> bool:
        seen = set(in_tree)
        stack = [x for x in in_tree if deg[x] < k]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen and frozenset((x, y)) not in excluded:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == g.n

    def rec() -> bool:
        meter.tick()
        if len(in_tree) == g.n:
            return True
        if not reachable():
            return False
        e = None
        for x in g.vertices:
            if x in in_tree and deg[x] < k:
                for y in g.neighbors(x):
                    if y not in in_tree and frozenset((x, y)) not in excluded:
                        e = (x, y)
                        break
            if e:
                break
        if e is None:
            return False
        x, y = e
        in_tree.add(y)
        tree.append(e)
        deg[x] += 1
        deg[y] += 1
        if rec():
            return True
        in_tree.discard(y)
        tree.pop()
        deg[x] -= 1
        deg[y] -= 1
        key = frozenset(e)
        excluded.add(key)
        ok = rec()
        excluded.discard(key)
        return ok

    if rec():
        return True, tuple(tree)
    return False, None


def has_closed_spanning_k_walk(g: Graph, k: int, budget: Budget = UNLIMITED) -> tuple[bool, tuple | None]:
    """Closed walk visiting every vertex at least once and at most ``k`` times.

    The walk is returned with its first vertex repeated at the end; the
    closing return is not counted as an extra visit. Search is depth-first
    over (position, visit counts) with memoised failures.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    verts = g.vertices
    if len(verts) == 1:
        return True, (verts[0],)
    idx = {x: i for i, x in enumerate(verts)}
    adj = [[idx[y] for y in g.neighbors(x)] for x in verts]
    n = len(verts)
    meter = Meter(budget, "walk-search")
    failed: set = set()
    walk = [0]

    def viable(pos: int, counts: list[int]) -> bool:
        seen = {pos}
        stack = [pos]
        home = False
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y == 0:
                    home = True
                if y not in seen and counts[y] < k:
                    seen.add(y)
                    stack.append(y)
        if not home:
            return False
        return all(counts[i] > 0 or i in seen for i in range(n))

    def rec(pos: int, counts: list[int]) -> bool:
        meter.tick()
        key = (pos, tuple(counts))
        if key in failed:
            return False
        if all(c > 0 for c in counts) and 0 in adj[pos]:
            walk.append(0)
            return True
        if not viable(pos, counts):
            failed.add(key)
            return False
        # unvisited neighbours first
        for y in sorted(adj[pos], key=lambda y: (counts[y] > 0, y)):
            if counts[y] < k:
                counts[y] += 1
                walk.append(y)
                if rec(y, counts):
                    return True
                walk.pop()
                counts[y] -= 1
        failed.add(key)
        return False

    counts = [0] * n
    counts[0] = 1
    if rec(0, counts):
        return True, tuple(verts[i] for i in walk)
    return False, None


def check_closed_walk(g: Graph, walk, k: int) -> bool:
    if len(walk) == 1:
        return g.n == 1 and walk[0] in g
    if walk[0] != walk[-1] or len(walk) < 3:
        return False
    if not all(g.has_edge(a, b) for a, b in zip(walk, walk[1:])):
        return False
    visits: dict = {}
    for x in walk[:-1]:
        visits[x] = visits.get(x, 0) + 1
    return set(visits) == set(g.vertices) and max(visits.values()) <= k


def check_spanning_tree(g: Graph, edges, k: int) -> bool:
    t = Graph(g.vertices, edges)
    if t.m != g.n - 1 or not t.is_connected():
        return False
    if not all(g.has_edge(a, b) for a, b in edges):
        return False
    return max((t.degree(x) for x in t.vertices), default=0) <= k


# -- hierarchy -------------------------------------------------------------


@dataclass
class Rung:
    verdict: str
    witness: object = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "witness": _jsonable(self.witness)}


def _jsonable(w):
    if w is None:
        return None
    if isinstance(w, VertexId):
        return str(w)
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    return w


@dataclass
class HierarchyReport:
    hamiltonian: Rung
    traceable: Rung
    prism_hamiltonian: Rung
    has_2walk: Rung
    has_3tree: Rung

    def verdicts(self) -> tuple[str, ...]:
        return tuple(getattr(self, r).verdict for r in RUNGS)

    def violations(self) -> list[tuple[str, str]]:
        """Pairs (stronger, weaker) where the stronger holds but the weaker was refuted."""
        vs = self.verdicts()
        return [(RUNGS[i], RUNGS[j]) for i in range(5) for j in range(i + 1, 5) if vs[i] == YES and vs[j] == NO]

    def to_json(self) -> dict:
        return {r: getattr(self, r).to_json() for r in RUNGS}


def _rung(fn) -> Rung:
    try:
        ok, wit = fn()
    except InconclusiveError:
        return Rung(INCONCLUSIVE)
    return Rung(YES, wit) if ok else Rung(NO)


def hierarchy_report(g: Graph, budget: Budget = UNLIMITED) -> HierarchyReport:
    """Decide all five rungs and check the implication chain.

    Raises :class:`HierarchyViolation` if a stronger property holds while a
    weaker one was refuted.
    """
    if g.n < 2 or not g.is_connected():
        raise ValueError("hierarchy report needs a connected graph on at least 2 vertices")

    def outcome(o):
        return (o.verdict == FOUND, o.path)

    every = g.vertices
    rep = HierarchyReport(
        _rung(lambda: outcome(find_hamilton_cycle(g, "auto", budget))),
        _rung(lambda: outcome(find_path(PathQuery.make(g, every, every, "ALL"), budget=budget))),
        _rung(lambda: outcome(decide_prism_hamiltonian(g, "auto", budget))),
        _rung(lambda: has_closed_spanning_k_walk(g, 2, budget)),
        _rung(lambda: has_spanning_k_tree(g, 3, budget)),
    )
    bad = rep.violations()
    if bad:
        raise HierarchyViolation(f"implication chain violated: {bad}")
    return rep


# -- corpus ----------------------------------------------------------------


def random_good_even_cactus(rng: random.Random, max_vertices: int = 40) -> Graph:
    """Grow a good even cactus by attaching pendant edges or even cycles at
    vertices that currently lie in exactly one block."""
    target = rng.randint(2, max_vertices)
    counter = 0

    def fresh() -> VertexId:
        nonlocal counter
        counter += 1
        return v(f"c{counter}")

    first_len = rng.choice([2, 4, 4, 6])
    ring = [fresh() for _ in range(first_len)]
    edges = list(zip(ring, ring[1:] + ring[:1])) if first_len > 2 else [(ring[0], ring[1])]
    verts = list(ring)
    in_blocks = {x: 1 for x in ring}
    while len(verts) < target:
        room = target - len(verts)
        hosts = [x for x in verts if in_blocks[x] == 1]
        host = rng.choice(hosts)
        lengths = [L for L in (4, 6, 8) if L - 1 <= room]
        if lengths and rng.random() < 0.6:
            L = rng.choice(lengths)
            new = [fresh() for _ in range(L - 1)]
            cyc = [host] + new
            edges += list(zip(cyc, cyc[1:] + cyc[:1]))
        else:
            new = [fresh()]
            edges.append((host, new[0]))
        in_blocks[host] = 2
        for x in new:
            in_blocks[x] = 1
        verts += new
    return Graph(verts, edges)


def cactus_corpus(seed: int, count: int, max_vertices: int = 40) -> list[Graph]:
    rng = random.Random(seed)
    return [random_good_even_cactus(rng, max_vertices) for _ in range(count)]
