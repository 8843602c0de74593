from __future__ import annotations

import itertools
import sys

import networkx as nx
import pytest
from hypothesis import strategies as st

from prismham.generators import from_edge_list
from prismham.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    return from_edge_list(h.edges(), h.number_of_nodes())


@st.composite
def small_graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # thread a random spanning path so the graph is connected
        perm = draw(st.permutations(range(n)))
        chosen = sorted(set(chosen) | {tuple(sorted(e)) for e in zip(perm, perm[1:])})
    return from_edge_list(chosen, n)


def brute_hamilton_cycle(g: Graph) -> bool:
    vs = g.vertices
    if len(vs) < 3:
        return False
    first = vs[0]
    for perm in itertools.permutations(vs[1:]):
        if perm[0] > perm[-1]:
            continue
        cyc = (first,) + perm
        if all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])):
            return True
    return False


def brute_hamilton_path(g: Graph) -> bool:
    if g.n == 1:
        return True
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in itertools.permutations(g.vertices))


@pytest.fixture(scope="session")
def g1():
    from prismham.gadgets import build_G

    return build_G(1)


@pytest.fixture(scope="session")
def g2():
    from prismham.gadgets import build_G

    return build_G(2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "GATE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
