"""Small named graphs used in tests, demos and the hierarchy corpus."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph
from .vertex import v


def _vs(n: int, prefix: str = "v"):
    return [v(f"{prefix}{i}") for i in range(1, n + 1)]


def path_graph(n: int) -> Graph:
    vs = _vs(n)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    vs = _vs(n)
    return Graph(vs, zip(vs, vs[1:] + vs[:1]))


def complete_graph(n: int) -> Graph:
    vs = _vs(n)
    return Graph(vs, combinations(vs, 2))


def complete_bipartite(p: int, q: int) -> Graph:
    left, right = _vs(p, "l"), _vs(q, "r")
    return Graph(left + right, [(a, b) for a in left for b in right])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre ``c``."""
    c = v("c")
    return Graph([c], [(c, x) for x in _vs(leaves, "l")])


def grid_graph(rows: int, cols: int) -> Graph:
    def cell(r, c):
        return v(f"g{r}_{c}")

    edges = []
    for r in range(rows):
        for c in range(cols):
            if r + 1 < rows:
                edges.append((cell(r, c), cell(r + 1, c)))
            if c + 1 < cols:
                edges.append((cell(r, c), cell(r, c + 1)))
    return Graph([cell(r, c) for r in range(rows) for c in range(cols)], edges)


def petersen_graph() -> Graph:
    outer = _vs(5, "o")
    inner = _vs(5, "i")
    edges = [(outer[k], outer[(k + 1) % 5]) for k in range(5)]
    edges += [(inner[k], inner[(k + 2) % 5]) for k in range(5)]
    edges += [(outer[k], inner[k]) for k in range(5)]
    return Graph(outer + inner, edges)


def from_edge_list(pairs, n: int | None = None) -> Graph:
    """Graph on generic vertices ``v<i>`` from integer pairs."""
    vs = [v(f"v{i}") for i in range(n)] if n is not None else []
    return Graph(vs, [(v(f"v{a}"), v(f"v{b}")) for a, b in pairs])


def named_graphs() -> dict[str, Graph]:
    return {
        "k2": complete_graph(2),
        "p4": path_graph(4),
        "c5": cycle_graph(5),
        "c6": cycle_graph(6),
        "k4": complete_graph(4),
        "k13": star_graph(3),
        "k14": star_graph(4),
        "k23": complete_bipartite(2, 3),
        "k33": complete_bipartite(3, 3),
        "grid3x3": grid_graph(3, 3),
        "cube": cube_graph(),
        "petersen": petersen_graph(),
    }


def cube_graph() -> Graph:
    from .graph import prism

    p = prism(cycle_graph(4))
    return p.relabel({x: v(f"{x.role}{x.copy.lower()}") for x in p.vertices})
