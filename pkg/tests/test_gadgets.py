from __future__ import annotations

import networkx as nx
import pytest

from conftest import to_nx
from prismham.blocks import blocks
from prismham.gadgets import MUTATIONS, build_G, build_H, build_J, build_L, build_R, build_Z, j_to_l_map
from prismham.graph import delete
from prismham.vertex import apex, gv


def test_Z_is_two_five_cycles_sharing_x3():
    z = build_Z()
    assert (z.graph.n, z.graph.m) == (9, 10)
    assert z.graph.degree(gv("x3", 1)) == 4
    assert sorted(z.graph.neighbors(z["a"])) == [gv("x1", 1), gv("x4", 1)]
    cycles = nx.cycle_basis(to_nx(z.graph))
    assert sorted(len(c) for c in cycles) == [5, 5]


def test_J_shape():
    j = build_J()
    g = j.graph
    assert (g.n, g.m) == (18, 26)
    assert set(g.neighbors(j["a_1"])) == {gv(r, 1) for r in ("x1", "x4", "y1", "y4")}
    assert set(g.neighbors(j["b_1"])) == {gv(r, 1) for r in ("x4", "x7", "x8", "y4", "y7", "y8")}
    xs, ys = j.named_sets["X"], j.named_sets["Y"]
    # X and Y meet only through a and b
    assert not any(g.has_edge(p, q) for p in xs for q in ys)
    assert len(delete(g, [j["a_1"], j["b_1"]]).components()) == 2
    assert blocks(g).cutvertices == frozenset()


def test_J_has_the_XY_swapping_automorphism():
    g = build_J().graph
    swap = {x: gv(("y" if x.role[0] == "x" else "x") + x.role[1:], 1) if x.role[0] in "xy" else x for x in g.vertices}
    assert g.relabel(swap) == g


def test_L_is_isomorphic_to_J_via_role_map():
    j, l_ = build_J(), build_L()
    assert j.graph.relabel(j_to_l_map(1, j.graph)) == l_.graph


def test_R_cycles():
    for length in (3, 5, 7, 9):
        r = build_R(1, length)
        assert (r.graph.n, r.graph.m) == (length, length)
        assert r.upper[0] == r.lower[0] == r["c_1"] and r.upper[-1] == r.lower[-1] == r["d_1"]
        assert len(r.upper) + len(r.lower) == length + 2
    with pytest.raises(ValueError):
        build_R(1, 2)


def test_H_blocks_and_cutvertices():
    h = build_H()
    bd = blocks(h.graph)
    assert h.graph.n == 39
    assert bd.cutvertices == {gv("b", 1), gv("c", 1)}
    assert sorted(b.n for b in bd.blocks) == [5, 18, 18]


def test_boundary_paths_are_paths_from_a_to_d():
    h = build_H()
    for path in (h.upper, h.lower):
        assert path[0] == gv("a", 1) and path[-1] == gv("d", 1)
        assert len(set(path)) == len(path)
        assert all(h.graph.has_edge(p, q) for p, q in zip(path, path[1:]))
    assert set(h.upper) & set(h.lower) == {gv(r, 1) for r in ("a", "b", "c", "d")}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 26])
def test_G_sizes(n):
    b = build_G(n)
    assert b.graph.n == 38 * n + 3
    assert min(b.graph.degree(x) for x in b.graph.vertices) >= 3


def test_G_apex_attachments(g2):
    g = g2.graph
    ax, ay = g2.apexes
    assert ax == apex("x") and ay == apex("y")
    assert set(g.neighbors(ax)) == {p for path in g2.upper_paths for p in path}
    assert set(g.neighbors(ay)) == {q for path in g2.lower_paths for q in path}
    assert not g.has_edge(ax, ay)


def test_G_chains_gadgets_through_shared_vertex(g2):
    assert gv("d", 1) not in g2.graph
    assert g2.upper_paths[0][-1] == gv("a", 2) == g2.upper_paths[1][0]
    names = g2.names()
    assert names["apex-x"] == apex("x") and names["a_2"] == gv("a", 2)


def test_build_is_deterministic():
    a, b = build_G(3), build_G(3)
    assert a.graph == b.graph and a.rotation == b.rotation


def test_mutations_change_the_graph():
    base = build_G(1).graph
    for m in MUTATIONS:
        assert build_G(1, m).graph != base, m
    with pytest.raises(ValueError):
        build_G(1, "bogus")
    with pytest.raises(ValueError):
        build_G(0)


def test_split_x3_removes_the_shared_vertex():
    z = build_Z(1, "split-x3")
    assert z.graph.degree(gv("x3", 1)) == 3
    assert z.graph.has_edge(gv("x3", 1), gv("x9", 1))
    assert not z.graph.has_edge(gv("x3", 1), gv("x4", 1))


def test_deleting_x3_splits_Z():
    z = build_Z()
    assert len(delete(z.graph, [gv("x3", 1)]).components()) == 2


def test_c_neighbourhood_in_L():
    l_ = build_L()
    assert set(l_.graph.neighbors(l_["c_1"])) == {gv(r, 1) for r in ("u1", "u4", "w1", "w4")}
