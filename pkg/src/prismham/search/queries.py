"""Query and outcome types shared by the search engines."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from ..graph import Graph
from ..vertex import VertexId

FOUND = "found"
ABSENT = "proven-absent"

BACKTRACKING = "backtracking"
DP = "decomposition-dp"
BRUTE_FORCE = "brute-force"


class QueryError(ValueError):
    """Malformed or contradictory query."""


class SizeError(QueryError):
    """Graph too large for the requested exhaustive method."""


class InconclusiveError(RuntimeError):
    """A budget ran out before the search could decide."""

    def __init__(self, message: str, method: str = "", nodes: int = 0, millis: float = 0.0):
        super().__init__(message)
        self.method = method
        self.nodes = nodes
        self.millis = millis


@dataclass(frozen=True)
class Budget:
    node_cap: int | None = None
    time_cap_ms: float | None = None

    def __post_init__(self) -> None:
        if self.node_cap is not None and self.node_cap <= 0:
            raise ValueError("node cap must be positive")
        if self.time_cap_ms is not None and self.time_cap_ms <= 0:
            raise ValueError("time cap must be positive")


UNLIMITED = Budget()


class Meter:
    """Counts search nodes and enforces a :class:`Budget`."""

    def __init__(self, budget: Budget, method: str):
        self.budget = budget
        self.method = method
        self.nodes = 0
        self.t0 = time.perf_counter()

    @property
    def millis(self) -> float:
        return (time.perf_counter() - self.t0) * 1000.0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        b = self.budget
        if b.node_cap is not None and self.nodes > b.node_cap:
            raise InconclusiveError(f"node cap {b.node_cap} exhausted", self.method, self.nodes, self.millis)
        if b.time_cap_ms is not None and (self.nodes & 255) == 0 and self.millis > b.time_cap_ms:
            raise InconclusiveError(f"time cap {b.time_cap_ms} ms exhausted", self.method, self.nodes, self.millis)


def _fs(xs: Iterable[VertexId] | None) -> frozenset[VertexId]:
    return frozenset(xs or ())


@dataclass(frozen=True)
class PathQuery:
    """A simple path with one end in ``start_set``, the other in ``end_set``,
    containing every vertex of ``cover_set`` and none of ``forbidden_set``.

    Vertices outside the cover set may be used or skipped.
    """

    graph: Graph
    start_set: frozenset[VertexId]
    end_set: frozenset[VertexId]
    cover_set: frozenset[VertexId] = frozenset()
    forbidden_set: frozenset[VertexId] = frozenset()

    @classmethod
    def make(cls, graph, start, end, cover=None, forbidden=None) -> PathQuery:
        """Build a query; ``cover="ALL"`` means every vertex."""
        if isinstance(cover, str):
            if cover != "ALL":
                raise QueryError(f"unknown cover keyword {cover!r}")
            cover = graph.vertices
        return cls(graph, _fs(start), _fs(end), _fs(cover), _fs(forbidden))

    def validate(self) -> None:
        vs = set(self.graph.vertices)
        if not self.start_set or not self.end_set:
            raise QueryError("start and end sets must be nonempty")
        for name in ("start_set", "end_set", "cover_set", "forbidden_set"):
            unknown = getattr(self, name) - vs
            if unknown:
                raise QueryError(f"{name} has vertices not in the graph: {sorted(unknown)[:3]}")
        clash = self.forbidden_set & (self.cover_set | self.start_set | self.end_set)
        if clash:
            raise QueryError(f"forbidden vertices also required or terminal: {sorted(clash)[:3]}")

    def with_forbidden(self, extra: Iterable[VertexId]) -> PathQuery:
        return PathQuery(self.graph, self.start_set, self.end_set, self.cover_set, self.forbidden_set | set(extra))


@dataclass(frozen=True)
class PathSystemQuery:
    """Two vertex-disjoint paths, the k-th joining ``pairs[k][0]`` to
    ``pairs[k][1]``, jointly containing ``cover_target``."""

    graph: Graph
    pairs: tuple[tuple[frozenset[VertexId], frozenset[VertexId]], ...]
    cover_target: frozenset[VertexId]
    disjoint: bool = True

    @classmethod
    def make(cls, graph, pairs, cover=None) -> PathSystemQuery:
        if isinstance(cover, str):
            if cover != "ALL":
                raise QueryError(f"unknown cover keyword {cover!r}")
            cover = graph.vertices
        return cls(graph, tuple((_fs(s), _fs(t)) for s, t in pairs), _fs(cover))

    def validate(self) -> None:
        if len(self.pairs) != 2:
            raise QueryError("a path system query takes exactly two endpoint pairs")
        if not self.disjoint:
            raise QueryError("only disjoint path systems are supported")
        vs = set(self.graph.vertices)
        for s, t in self.pairs:
            if not s or not t:
                raise QueryError("endpoint sets must be nonempty")
            if (s | t) - vs:
                raise QueryError("endpoint sets must be vertices of the graph")
        if self.cover_target - vs:
            raise QueryError("cover target must be vertices of the graph")


@dataclass
class SearchOutcome:
    verdict: str
    witness: tuple[tuple[VertexId, ...], ...] = ()
    method: str = ""
    nodes: int = 0
    millis: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.verdict == FOUND

    @property
    def path(self) -> tuple[VertexId, ...] | None:
        return self.witness[0] if self.witness else None

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "verdict": self.verdict,
            "witness": [[str(x) for x in w] for w in self.witness],
            "method": self.method,
            "nodes": self.nodes,
        }
        if timing:
            out["millis"] = round(self.millis, 3)
        return out
