"""Prism-hamiltonicity toolkit: gadget construction, exact path search,
spanning-structure hierarchy and a verification certificate."""

from .blocks import BlockDecomposition, blocks
from .certificate import CertificateReport, ClaimRecord, emit_certificate
from .connectivity import local_connectivity, vertex_connectivity
from .embedding import MalformedEmbeddingError, RotationSystem, trace_faces, verify_planar_embedding
from .gadgets import MUTATIONS, build_G, build_H, build_J, build_L, build_R, build_Z
from .graph import Graph, both, cartesian_product, delete, intersection, k2, prism, prism_set, union
from .search import (
    Budget,
    InconclusiveError,
    PathQuery,
    PathSystemQuery,
    QueryError,
    SearchOutcome,
    SizeError,
    decide_prism_hamiltonian,
    find_disjoint_pair,
    find_hamilton_cycle,
    find_path,
    prove_no_path,
)
from .spanning import cactus_prism_cycle, classify_cactus, find_spanning_good_even_cactus, hierarchy_report
from .vertex import VertexId, apex, gv, v

__all__ = [
    "BlockDecomposition", "Budget", "CertificateReport", "ClaimRecord", "Graph", "InconclusiveError",
    "MUTATIONS", "MalformedEmbeddingError", "PathQuery", "PathSystemQuery", "QueryError", "RotationSystem",
    "SearchOutcome", "SizeError", "VertexId", "apex", "blocks", "both", "build_G", "build_H", "build_J",
    "build_L", "build_R", "build_Z", "cactus_prism_cycle", "cartesian_product", "classify_cactus",
    "decide_prism_hamiltonian", "delete", "emit_certificate", "find_disjoint_pair", "find_hamilton_cycle",
    "find_path", "find_spanning_good_even_cactus", "gv", "hierarchy_report", "intersection", "k2",
    "local_connectivity", "prism", "prism_set", "prove_no_path", "trace_faces", "union", "v",
    "vertex_connectivity", "verify_planar_embedding",
]
