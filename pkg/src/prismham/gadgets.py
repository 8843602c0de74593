"""Construction of the gadget H_i, its blocks, and the chained graph G_n.

Layout of one gadget (``X`` drawn below the axis, ``Y`` its mirror above)::

    J_i: a_i, b_i, x1..x8, y1..y8       block containing a_i
    L_i: b_i, c_i, u1..u8, w1..w8       copy of J_i with c_i in the role of a_i
    R_i: c_i, r1, d_i, r2, r3           odd cycle

``Z`` (induced on a_i, x1..x8) is the 5-cycles a x1 x2 x3 x4 and x3 x5 x6 x7 x8
sharing x3. Besides ``Z``, ``b_i`` is joined to x4, x7 and x8, which are the
``X`` vertices that do not lie on the lower boundary and would otherwise be
left with degree 2. ``X`` and ``Y`` touch only through a_i and b_i.

Mutations (for sensitivity checks) are selected by name:

``c1-hexagon``  lengthen the 5-cycle through a_i to a 6-cycle
``split-x3``    split x3 into adjacent x3 (keeping x2, x5) and x9 (taking x4, x8)
``a-x2``        add the chord a_i x2 (and a_i y2)
``apex-edge``   add an edge from apex x to the interior vertex x4 of H_1
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .embedding import RotationSystem
from .graph import Graph, union
from .vertex import VertexId, apex, gv

MUTATIONS = ("c1-hexagon", "split-x3", "a-x2", "apex-edge")

Point = tuple[float, float]

# (role, x, y) below the axis; a at the origin, b at (10, 0).
_Z_POINTS = {
    "x1": (0.5, -2.0),
    "x2": (2.0, -3.5),
    "x3": (4.0, -4.0),
    "x4": (2.0, -1.2),
    "x5": (6.0, -5.0),
    "x6": (8.0, -4.5),
    "x7": (8.5, -2.0),
    "x8": (5.5, -2.0),
}
_GADGET_WIDTH = 24.0


@dataclass(frozen=True)
class GadgetBundle:
    graph: Graph
    named_vertices: dict[str, VertexId]
    named_sets: dict[str, frozenset[VertexId]] = field(default_factory=dict)
    coords: dict[VertexId, Point] = field(default_factory=dict, repr=False)
    upper: tuple[VertexId, ...] = ()
    lower: tuple[VertexId, ...] = ()

    def __getitem__(self, role: str) -> VertexId:
        return self.named_vertices[role]


@dataclass(frozen=True)
class CounterexampleBundle:
    graph: Graph
    n: int
    rotation: RotationSystem
    upper_paths: tuple[tuple[VertexId, ...], ...]
    lower_paths: tuple[tuple[VertexId, ...], ...]
    apexes: tuple[VertexId, VertexId]
    gadgets: tuple[GadgetBundle, ...] = field(repr=False, default=())
    mutation: str | None = None

    def names(self) -> dict[str, VertexId]:
        out = {"apex-x": self.apexes[0], "apex-y": self.apexes[1]}
        for g in self.gadgets:
            for role, x in g.named_vertices.items():
                out.setdefault(role, x)
        return out

    def gadget(self, i: int) -> GadgetBundle:
        return self.gadgets[i - 1]


def _check_mutation(mutation: str | None) -> None:
    if mutation is not None and mutation not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutation!r}; expected one of {MUTATIONS}")


# -- Z and J ---------------------------------------------------------------


def _half(prefix: str, mutation: str | None) -> tuple[list[tuple[str, str]], dict[str, Point], list[str]]:
    """Edges, coordinates and boundary order of one ``Z`` half, with roles
    named ``<prefix>1..`` and ``"a"`` for the apex-side attachment vertex."""
    p = lambda k: f"{prefix}{k}"  # noqa: E731
    pts = {p(k[1:]): xy for k, xy in _Z_POINTS.items()}
    c1 = ["a", p(1), p(2), p(3), p(4)]
    c2 = [p(3), p(5), p(6), p(7), p(8)]
    boundary = ["a", p(1), p(2), p(3), p(5), p(6), p(7)]
    extra: list[tuple[str, str]] = []
    if mutation == "c1-hexagon":
        c1 = ["a", p(1), p(9), p(2), p(3), p(4)]
        pts[p(9)] = (1.0, -3.0)
        boundary.insert(2, p(9))
    elif mutation == "split-x3":
        # x3 keeps x2, x5; the new x9 takes x4, x8; both cycles become 6-cycles
        c1 = ["a", p(1), p(2), p(3), p(9), p(4)]
        c2 = [p(3), p(5), p(6), p(7), p(8), p(9)]
        pts[p(3)] = (4.0, -4.2)
        pts[p(9)] = (4.0, -3.0)
    elif mutation == "a-x2":
        extra.append(("a", p(2)))
    edges = list(zip(c1, c1[1:] + c1[:1])) + list(zip(c2, c2[1:] + c2[:1])) + extra
    return edges, pts, boundary


def build_Z(i: int = 1, mutation: str | None = None) -> GadgetBundle:
    """Two 5-cycles a x1 x2 x3 x4 and x3 x5 x6 x7 x8 sharing x3."""
    _check_mutation(mutation)
    edges, pts, _ = _half("x", mutation)
    name = lambda r: gv(r, i)  # noqa: E731
    g = Graph([name("a")], [(name(u), name(w)) for u, w in edges])
    named = {r.role: r for r in g.vertices}
    c1_roles = {"a", "x1", "x2", "x3", "x4"} | ({"x9"} if mutation == "c1-hexagon" else set())
    c1 = [x for x in g.vertices if x.role in c1_roles]
    coords = {name("a"): (0.0, 0.0)} | {name(r): xy for r, xy in pts.items()}
    return GadgetBundle(g, named, {"C1": frozenset(c1), "X": frozenset(x for x in g.vertices if x.role != "a")}, coords)


def _j_like(i: int, left: str, lower: str, upper: str, mutation: str | None, mirror_x: bool) -> GadgetBundle:
    """A J-type block with attachment ``left`` (a or c), shared ``b``, and
    halves named ``lower``/``upper``."""
    edges_l, pts_l, bnd_l = _half(lower, mutation)
    edges_u, pts_u, bnd_u = _half(upper, mutation)
    rn = lambda r: left if r == "a" else r  # noqa: E731
    all_edges = [(rn(u), rn(w)) for u, w in edges_l + edges_u]
    hook = ("4", "7", "8")
    all_edges += [("b", f"{lower}{k}") for k in hook] + [("b", f"{upper}{k}") for k in hook]
    name = lambda r: gv(r, i)  # noqa: E731
    g = Graph((), [(name(u), name(w)) for u, w in all_edges])

    def place(xy: Point, flip: bool) -> Point:
        x, y = xy
        x = 20.0 - x if mirror_x else x
        y = -y if flip else y
        return (x + _GADGET_WIDTH * (i - 1), y)

    coords = {name(left): place((0.0, 0.0), False), name("b"): place((10.0, 0.0), False)}
    coords |= {name(r): place(xy, False) for r, xy in pts_l.items()}
    coords |= {name(r): place(xy, True) for r, xy in pts_u.items()}
    lower_path = [name(rn(r)) for r in bnd_l] + [name("b")]
    upper_path = [name(rn(r)) for r in bnd_u] + [name("b")]
    named = {f"{r.role}_{i}": r for r in g.vertices}
    xs = frozenset(x for x in g.vertices if x.role.startswith(lower))
    ys = frozenset(x for x in g.vertices if x.role.startswith(upper))
    return GadgetBundle(g, named, {"X": xs, "Y": ys}, coords, tuple(upper_path), tuple(lower_path))


def build_J(i: int = 1, mutation: str | None = None) -> GadgetBundle:
    """Block containing a_i: Z on X = x1..x8, its mirror on Y = y1..y8, and b_i
    joined to x4, x7, x8, y4, y7, y8. X lies on the lower side."""
    _check_mutation(mutation)
    return _j_like(i, "a", "x", "y", mutation, mirror_x=False)


def build_L(i: int = 1, mutation: str | None = None) -> GadgetBundle:
    """Isomorphic copy of J_i: a_i -> c_i, b_i -> b_i, x_k -> u_k (lower), y_k -> w_k (upper).

    Boundary paths run from b_i to c_i.
    """
    _check_mutation(mutation)
    bundle = _j_like(i, "c", "u", "w", mutation, mirror_x=True)
    return GadgetBundle(
        bundle.graph,
        bundle.named_vertices,
        {"U": bundle.named_sets["X"], "W": bundle.named_sets["Y"]},
        bundle.coords,
        tuple(reversed(bundle.upper)),
        tuple(reversed(bundle.lower)),
    )


def j_to_l_map(i: int, graph: Graph) -> dict[VertexId, VertexId]:
    """The role map J_i -> L_i (a -> c, b -> b, x_k -> u_k, y_k -> w_k)."""
    table = {"a": "c", "b": "b", "x": "u", "y": "w"}
    out = {}
    for x in graph.vertices:
        head, tail = x.role[0], x.role[1:]
        out[x] = gv(table[head] + tail, i)
    return out


def build_R(i: int = 1, length: int = 5) -> GadgetBundle:
    """Cycle c_i r1 .. d_i .. c_i of the given length (5 by default).

    The upper arc carries ``(length - 2) // 2`` internal vertices, the lower arc the rest.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    n_up = (length - 2) // 2
    n_low = length - 2 - n_up
    c, d = gv("c", i), gv("d", i)
    rs = [gv(f"r{k}", i) for k in range(1, length - 1)]
    up, low_from_d = rs[:n_up], rs[n_up:]
    cyc = [c, *up, d, *low_from_d]
    g = Graph(cyc, zip(cyc, cyc[1:] + cyc[:1]))
    x0 = 20.0 + _GADGET_WIDTH * (i - 1)
    coords = {c: (x0, 0.0), d: (x0 + 4.0, 0.0)}
    for k, r in enumerate(up, 1):
        coords[r] = (x0 + 4.0 * k / (n_up + 1), 2.0)
    lower = list(reversed(low_from_d))
    for k, r in enumerate(lower, 1):
        coords[r] = (x0 + 4.0 * k / (n_low + 1), -2.0 - 0.3 * (k % 2))
    named = {f"{x.role}_{i}": x for x in g.vertices}
    return GadgetBundle(g, named, {}, coords, (c, *up, d), (c, *lower, d))


def build_H(i: int = 1, mutation: str | None = None, r_length: int = 5) -> GadgetBundle:
    """J_i, L_i and R_i glued at the cutvertices b_i and c_i."""
    parts = (build_J(i, mutation), build_L(i, mutation), build_R(i, r_length))
    g = union(union(parts[0].graph, parts[1].graph), parts[2].graph)
    coords: dict[VertexId, Point] = {}
    named: dict[str, VertexId] = {}
    for p in parts:
        coords |= p.coords
        named |= p.named_vertices
    upper = parts[0].upper + parts[1].upper[1:] + parts[2].upper[1:]
    lower = parts[0].lower + parts[1].lower[1:] + parts[2].lower[1:]
    sets = {
        "J": frozenset(parts[0].graph.vertices),
        "L": frozenset(parts[1].graph.vertices),
        "R": frozenset(parts[2].graph.vertices),
        "X": parts[0].named_sets["X"],
        "Y": parts[0].named_sets["Y"],
    }
    return GadgetBundle(g, named, sets, coords, upper, lower)


# -- G_n -------------------------------------------------------------------


def _rename(bundle: GadgetBundle, mapping: dict[VertexId, VertexId]) -> GadgetBundle:
    f = lambda x: mapping.get(x, x)  # noqa: E731
    return GadgetBundle(
        bundle.graph.relabel(mapping),
        {k: f(x) for k, x in bundle.named_vertices.items()},
        {k: frozenset(f(x) for x in s) for k, s in bundle.named_sets.items()},
        {f(x): xy for x, xy in bundle.coords.items()},
        tuple(f(x) for x in bundle.upper),
        tuple(f(x) for x in bundle.lower),
    )


def _angular_rotation(g: Graph, coords: dict[VertexId, Point]) -> dict[VertexId, list[VertexId]]:
    rot = {}
    for x in g.vertices:
        x0, y0 = coords[x]
        rot[x] = sorted(g.neighbors(x), key=lambda y: math.atan2(coords[y][1] - y0, coords[y][0] - x0))
    return rot


def _insert_after(seq: list[VertexId], anchor: VertexId, items: list[VertexId]) -> None:
    k = seq.index(anchor) + 1
    seq[k:k] = items


def build_G(n: int, mutation: str | None = None, r_length: int = 5) -> CounterexampleBundle:
    """Chain H_1..H_n (d_i identified with a_{i+1}) and add apexes.

    Apex x is joined to every vertex of the upper boundary paths P_i, apex y
    to every vertex of the lower paths Q_i. The rotation system comes from a
    straight-line drawing of the chain, with the apex edges inserted into the
    outer-face corners.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_mutation(mutation)
    gadgets = []
    for i in range(1, n + 1):
        h = build_H(i, mutation, r_length)
        if i < n:
            h = _rename(h, {gv("d", i): gv("a", i + 1)})
        gadgets.append(h)
    chain = Graph()
    coords: dict[VertexId, Point] = {}
    for h in gadgets:
        chain = union(chain, h.graph)
        coords |= h.coords
    upper = [x for k, h in enumerate(gadgets) for x in (h.upper if k == 0 else h.upper[1:])]
    lower = [x for k, h in enumerate(gadgets) for x in (h.lower if k == 0 else h.lower[1:])]

    ax, ay = apex("x"), apex("y")
    edges = list(chain.edges) + [(ax, p) for p in upper] + [(ay, q) for q in lower]
    rot = _angular_rotation(chain, coords)
    # Walking left to right, the outer face is counter-clockwise after the
    # successor on the upper path and after the predecessor on the lower path.
    for k, p in enumerate(upper[:-1]):
        _insert_after(rot[p], upper[k + 1], [ax])
    for k, q in enumerate(lower[1:], 1):
        _insert_after(rot[q], lower[k - 1], [ay])
    first, last = upper[0], upper[-1]
    _insert_after(rot[first], ax, [ay])
    _insert_after(rot[last], ay, [ax])
    rot[ax] = list(upper)
    rot[ay] = list(reversed(lower))

    if mutation == "apex-edge":
        inner = gv("x4", 1)
        edges.append((ax, inner))
        rot[ax].append(inner)
        rot[inner].append(ax)

    graph = Graph(chain.vertices + (ax, ay), edges)
    upper_paths = tuple(h.upper for h in gadgets)
    lower_paths = tuple(h.lower for h in gadgets)
    return CounterexampleBundle(
        graph,
        n,
        RotationSystem({x: tuple(r) for x, r in rot.items()}),
        upper_paths,
        lower_paths,
        (ax, ay),
        tuple(gadgets),
        mutation,
    )
