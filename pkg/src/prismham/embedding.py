"""Rotation systems and face tracing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph
from .vertex import VertexId


class MalformedEmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class RotationSystem:
    rotation: Mapping[VertexId, tuple[VertexId, ...]]

    def reflected(self) -> RotationSystem:
        return RotationSystem({x: tuple(reversed(r)) for x, r in self.rotation.items()})

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> RotationSystem:
        f = lambda x: mapping.get(x, x)  # noqa: E731
        return RotationSystem({f(x): tuple(f(y) for y in r) for x, r in self.rotation.items()})


def check_rotation(g: Graph, rot: RotationSystem) -> None:
    if set(rot.rotation) != set(g.vertices):
        raise MalformedEmbeddingError("rotation does not cover exactly the graph's vertices")
    for x in g.vertices:
        r = rot.rotation[x]
        if len(r) != len(set(r)) or set(r) != set(g.neighbors(x)):
            raise MalformedEmbeddingError(f"rotation at {x} is not a permutation of its neighbours")


def trace_faces(g: Graph, rot: RotationSystem) -> list[list[VertexId]]:
    """Faces as cyclic vertex sequences; each dart (u, w) is used exactly once."""
    check_rotation(g, rot)
    succ: dict[VertexId, dict[VertexId, VertexId]] = {}
    for x, r in rot.rotation.items():
        succ[x] = {r[k]: r[(k + 1) % len(r)] for k in range(len(r))}
    seen: set[tuple[VertexId, VertexId]] = set()
    faces = []
    for u, w in g.edges:
        for dart in ((u, w), (w, u)):
            if dart in seen:
                continue
            face = []
            a, b = dart
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                a, b = b, succ[b][a]
            faces.append(face)
    return faces


def verify_planar_embedding(g: Graph, rot: RotationSystem) -> tuple[int, bool]:
    """Return ``(face_count, euler_holds)`` for the embedding given by ``rot``."""
    if not g.is_connected():
        raise ValueError("planarity witness check needs a connected graph")
    if g.m == 0:
        check_rotation(g, rot)
        return 1, g.n == 1
    f = len(trace_faces(g, rot))
    return f, g.n - g.m + f == 2
