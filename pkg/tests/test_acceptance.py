"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or as a script.
"""

from __future__ import annotations

import random
import sys
import time

import networkx as nx
import pytest

from conftest import brute_hamilton_cycle, from_nx
from prismham.certificate import (
    FAILED,
    VERIFIED,
    emit_certificate,
    lemma_J_queries,
    lemma_JL_queries,
    lemma_R_query,
    lemma_Z_query,
    verify_theorem_skeleton,
)
from prismham.connectivity import vertex_connectivity
from prismham.embedding import verify_planar_embedding
from prismham.gadgets import build_G
from prismham.generators import named_graphs
from prismham.search import (
    ABSENT,
    decide_prism_hamiltonian,
    find_disjoint_pair,
    find_hamilton_cycle,
    find_path,
    prove_no_path,
)
from prismham.search.queries import DP
from prismham.spanning import NO, YES, cactus_corpus, cactus_prism_cycle, check_cactus_prism_cycle, hierarchy_report

CORPUS_SEED = 20240611
CACTUS_SEED = 1


GATE_LINES: list[str] = []


@pytest.fixture
def gate(capsys):
    """Reporter that prints the criterion line past output capture, then asserts."""

    def report(no: int, ok: bool, what: str, elapsed: float) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {no:2d}: {what} [{elapsed:.2f}s]"
        GATE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return report


def small_graph_corpus() -> list:
    """500 graphs: named graphs plus a seeded sample of connected atlas graphs on 2..7 vertices."""
    named = list(named_graphs().values())
    atlas = [h for h in nx.graph_atlas_g() if 2 <= h.number_of_nodes() <= 7 and nx.is_connected(h)]
    rng = random.Random(CORPUS_SEED)
    sample = rng.sample(atlas, 500 - len(named))
    return named + [from_nx(h) for h in sample]


def test_criterion_01_z_prism_path_absent(gate):
    t = time.perf_counter()
    q = lemma_Z_query()
    bt = find_path(q, "backtracking")
    dp = prove_no_path(q, "dp")
    dt = time.perf_counter() - t
    ok = q.graph.n == 18 and bt.verdict == ABSENT and dp.verdict == ABSENT and dp.method == DP and dt < 5
    gate(1, ok, f"prism(Z) {q.graph.n} vertices, backtracking={bt.verdict}, dp={dp.verdict}", dt)


def test_criterion_02_j_prism_paths_use_both_b_copies(gate):
    t = time.perf_counter()
    outs = [prove_no_path(q, "dp") for _, q in lemma_J_queries()]
    twins = [find_path(q, "auto") for _, q in lemma_J_queries(forbid_opposite=False)]
    dt = time.perf_counter() - t
    n = lemma_J_queries()[0][1].graph.n
    ok = (
        n == 36
        and all(o.verdict == ABSENT and o.method == DP for o in outs)
        and any(t.found for t in twins)
        and dt < 600
    )
    gate(2, ok, f"prism(J) {n} vertices, 4/4 absent via DP={all(o.verdict == ABSENT for o in outs)}, "
                f"twins found={sum(t.found for t in twins)}", dt)


def test_criterion_03_jl_prism_crossing_path_absent(gate):
    t = time.perf_counter()
    qs = lemma_JL_queries()
    outs = [prove_no_path(q, "dp") for _, q in qs]
    dt = time.perf_counter() - t
    ok = qs[0][1].graph.n == 70 and all(o.verdict == ABSENT and o.method == DP for o in outs) and dt < 3600
    gate(3, ok, f"prism(J+L) {qs[0][1].graph.n} vertices, verdicts={[o.verdict for o in outs]}", dt)


def test_criterion_04_odd_cycle_pair_cover_absent(gate):
    t = time.perf_counter()
    q = lemma_R_query()
    out = find_disjoint_pair(q)
    dt = time.perf_counter() - t
    ok = q.graph.n == 10 and out.verdict == ABSENT and dt < 1
    gate(4, ok, f"prism(R) {q.graph.n} vertices, brute force={out.verdict}", dt)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_criterion_05_connectivity_exactly_three(n, gate):
    t = time.perf_counter()
    g = build_G(n).graph
    kappa = vertex_connectivity(g)
    dt = time.perf_counter() - t
    gate(5, kappa == 3 and dt < 120, f"G_{n} ({g.n} vertices) connectivity={kappa}", dt)


@pytest.mark.parametrize("n", [1, 3, 26])
def test_criterion_06_planarity(n, gate):
    t = time.perf_counter()
    b = build_G(n)
    faces, euler = verify_planar_embedding(b.graph, b.rotation)
    dt = time.perf_counter() - t
    gate(6, euler and dt < 10, f"G_{n}: V={b.graph.n} E={b.graph.m} F={faces}, Euler={euler}", dt)


def test_criterion_07_structural_skeleton(gate):
    t = time.perf_counter()
    rec = verify_theorem_skeleton(26)
    dt = time.perf_counter() - t
    labels = [q["query"] for q in rec.evidence]
    covered = all(any(lab.startswith(p) for lab in labels) for p in ("(a)", "(b)", "(c)", "(d)"))
    ok = rec.status == VERIFIED and covered and dt < 300
    gate(7, ok, f"skeleton(26) {rec.status}, pigeonhole free window forced={rec.details['free_window_forced']}", dt)


def test_criterion_08_cactus_prism_cycles(gate):
    t = time.perf_counter()
    corpus = cactus_corpus(CACTUS_SEED, 200, max_vertices=40)
    built = sum(check_cactus_prism_cycle(g, cactus_prism_cycle(g)) for g in corpus)
    small = [g for g in corpus if g.n <= 16]
    agree = sum(decide_prism_hamiltonian(g).found for g in small)
    dt = time.perf_counter() - t
    ok = built == 200 and agree == len(small) and dt < 300
    gate(8, ok, f"constructed {built}/200, blind search agrees {agree}/{len(small)}", dt)


def test_criterion_09_hierarchy_consistency(gate):
    t = time.perf_counter()
    corpus = small_graph_corpus()
    bad = [g for g in corpus if hierarchy_report(g).violations()]
    named = named_graphs()
    k13 = hierarchy_report(named["k13"]).verdicts()
    pet = hierarchy_report(named["petersen"]).verdicts()
    dt = time.perf_counter() - t
    ok = (
        len(corpus) == 500
        and not bad
        and k13 == (NO, NO, NO, NO, YES)
        and pet == (NO, YES, YES, YES, YES)
        and dt < 600
    )
    gate(9, ok, f"{len(corpus)} graphs, violations={len(bad)}, K13={k13}, Petersen={pet}", dt)


def test_criterion_10_oracle_equivalence(gate):
    t = time.perf_counter()
    corpus = [g for g in small_graph_corpus() if g.n <= 8 and g.is_connected()]
    disagree = []
    for g in corpus:
        truth = brute_hamilton_cycle(g)
        if any(find_hamilton_cycle(g, eng).found != truth for eng in ("auto", "backtracking", "dp")):
            disagree.append(g)
    dt = time.perf_counter() - t
    gate(10, not disagree, f"{len(corpus) - len(disagree)}/{len(corpus)} agree with permutation brute force (all engines)", dt)


@pytest.mark.parametrize("mutation", ["c1-hexagon", "split-x3", "apex-edge"])
def test_criterion_11_mutation_sensitivity(mutation, gate):
    t = time.perf_counter()
    rep = emit_certificate(26, mutation)
    failed = [c.claim_id for c in rep.claims if c.status == FAILED]
    dt = time.perf_counter() - t
    gate(11, bool(failed) and not rep.overall, f"mutation {mutation}: failed claims {failed}", dt)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
