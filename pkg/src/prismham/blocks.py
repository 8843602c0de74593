from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .vertex import VertexId


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Graph, ...]
    cutvertices: frozenset[VertexId]

    def blocks_of(self, x: VertexId) -> list[int]:
        """Indices of the blocks containing ``x``."""
        return [i for i, b in enumerate(self.blocks) if x in b]

    def block_count(self) -> dict[VertexId, int]:
        counts: dict[VertexId, int] = {}
        for b in self.blocks:
            for x in b.vertices:
                counts[x] = counts.get(x, 0) + 1
        return counts


def blocks(g: Graph) -> BlockDecomposition:
    """Blocks and cutvertices (Hopcroft-Tarjan, iterative, per component).

    Isolated vertices form single-vertex blocks. Blocks are listed in order
    of discovery from the smallest vertex of each component.
    """
    disc: dict[VertexId, int] = {}
    low: dict[VertexId, int] = {}
    found: list[Graph] = []
    cuts: set[VertexId] = set()
    counter = 0

    for root in g.vertices:
        if root in disc:
            continue
        if g.degree(root) == 0:
            disc[root] = counter
            counter += 1
            found.append(Graph([root]))
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[VertexId, VertexId]] = []
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if y not in disc:
                    edge_stack.append((x, y))
                    disc[y] = low[y] = counter
                    counter += 1
                    stack.append((y, x, iter(g.neighbors(y))))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[x])
            if low[x] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, x):
                        break
                found.append(Graph((), comp))
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return BlockDecomposition(tuple(found), frozenset(cuts))
