"""Line-oriented text formats for graphs, rotations, role names and queries.

Graph::

    g <num_vertices> <num_edges>
    v <id>
    e <id> <id>

Rotation: ``r <id> : <nbr> <nbr> ...`` in cyclic order. Names: ``n <role> <id>``.
Query::

    q path | q pair | q hc
    start <ids>
    end <ids>
    cover <ids | ALL>
    forbid <ids>

A ``pair`` query lists two start/end line pairs. ``#`` lines and blank lines
are ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .embedding import RotationSystem
from .graph import Graph
from .search.queries import PathQuery, PathSystemQuery, QueryError
from .vertex import VertexId


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _records(text: str):
    for no, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _vid(tok: str, no: int) -> VertexId:
    try:
        return VertexId.parse(tok)
    except ValueError as exc:
        raise ParseError(f"bad vertex id {tok!r}: {exc}", no) from None


# -- graphs ----------------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"g {g.n} {g.m}"]
    lines += [f"v {x}" for x in g.vertices]
    lines += [f"e {u} {w}" for u, w in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header = None
    vs: list[VertexId] = []
    es: list[tuple[VertexId, VertexId]] = []
    seen: set = set()
    for no, tok in _records(text):
        kind = tok[0]
        if kind == "g":
            if header is not None or len(tok) != 3 or not tok[1].isdigit() or not tok[2].isdigit():
                raise ParseError("malformed or repeated header", no)
            header = (int(tok[1]), int(tok[2]), no)
        elif header is None:
            raise ParseError("record before 'g' header", no)
        elif kind == "v" and len(tok) == 2:
            vs.append(_vid(tok[1], no))
        elif kind == "e" and len(tok) == 3:
            u, w = _vid(tok[1], no), _vid(tok[2], no)
            if u == w:
                raise ParseError("loop edge", no)
            key = frozenset((u, w))
            if key in seen:
                raise ParseError("parallel edge", no)
            seen.add(key)
            es.append((u, w))
        else:
            raise ParseError(f"unrecognised record {' '.join(tok)!r}", no)
    if header is None:
        raise ParseError("missing 'g' header")
    nv, ne, hno = header
    known = set(vs)
    if len(known) != len(vs):
        raise ParseError("duplicate vertex record")
    for u, w in es:
        if u not in known or w not in known:
            raise ParseError(f"edge endpoint not declared: {u if u not in known else w}")
    if nv != len(vs) or ne != len(es):
        raise ParseError(f"header declares {nv} vertices / {ne} edges, found {len(vs)} / {len(es)}", hno)
    return Graph(vs, es)


# -- rotations and names ---------------------------------------------------


def format_rotation(rot: RotationSystem) -> str:
    return "".join(f"r {x} : {' '.join(str(y) for y in rot.rotation[x])}\n" for x in sorted(rot.rotation))


def parse_rotation(text: str) -> RotationSystem:
    out: dict[VertexId, tuple[VertexId, ...]] = {}
    for no, tok in _records(text):
        if tok[0] != "r" or len(tok) < 3 or tok[2] != ":":
            raise ParseError("expected 'r <id> : <neighbours>'", no)
        x = _vid(tok[1], no)
        if x in out:
            raise ParseError(f"duplicate rotation for {x}", no)
        out[x] = tuple(_vid(t, no) for t in tok[3:])
    return RotationSystem(out)


def format_names(names: Mapping[str, VertexId]) -> str:
    return "".join(f"n {role} {x}\n" for role, x in sorted(names.items(), key=lambda kv: (kv[1], kv[0])))


def parse_names(text: str) -> dict[str, VertexId]:
    out = {}
    for no, tok in _records(text):
        if tok[0] != "n" or len(tok) != 3:
            raise ParseError("expected 'n <role> <id>'", no)
        out[tok[1]] = _vid(tok[2], no)
    return out


# -- queries ---------------------------------------------------------------


@dataclass(frozen=True)
class HamiltonQuery:
    graph: Graph


def _ids(tokens: Iterable[str], g: Graph, no: int, allow_all: bool = False):
    tokens = list(tokens)
    if allow_all and tokens == ["ALL"]:
        return "ALL"
    out = []
    for t in tokens:
        x = _vid(t, no)
        if x not in g:
            raise QueryError(f"line {no}: unknown vertex {t!r}")
        out.append(x)
    return out


def parse_query(text: str, g: Graph) -> PathQuery | PathSystemQuery | HamiltonQuery:
    kind = None
    starts: list = []
    ends: list = []
    cover = None
    forbid: list = []
    for no, tok in _records(text):
        head, rest = tok[0], tok[1:]
        if head == "q":
            if kind is not None or len(rest) != 1 or rest[0] not in ("path", "pair", "hc"):
                raise ParseError("expected a single 'q path|pair|hc' header", no)
            kind = rest[0]
        elif kind is None:
            raise ParseError("record before 'q' header", no)
        elif head == "start":
            starts.append(_ids(rest, g, no))
        elif head == "end":
            ends.append(_ids(rest, g, no))
        elif head == "cover":
            cover = _ids(rest, g, no, allow_all=True)
        elif head == "forbid":
            forbid += _ids(rest, g, no)
        else:
            raise ParseError(f"unknown record {head!r}", no)
    if kind is None:
        raise ParseError("missing 'q' header")
    if kind == "hc":
        return HamiltonQuery(g)
    if kind == "path":
        if len(starts) != 1 or len(ends) != 1:
            raise QueryError("a path query needs exactly one start and one end line")
        return PathQuery.make(g, starts[0], ends[0], cover, forbid)
    if len(starts) != 2 or len(ends) != 2:
        raise QueryError("a pair query needs two start and two end lines")
    if forbid:
        raise QueryError("pair queries take no forbid line")
    return PathSystemQuery.make(g, list(zip(starts, ends)), cover)


def format_query(q: PathQuery | PathSystemQuery | HamiltonQuery) -> str:
    def ids(xs):
        return " ".join(str(x) for x in sorted(xs))

    if isinstance(q, HamiltonQuery):
        return "q hc\n"
    if isinstance(q, PathQuery):
        lines = ["q path", f"start {ids(q.start_set)}", f"end {ids(q.end_set)}"]
        if q.cover_set:
            lines.append("cover ALL" if len(q.cover_set) == q.graph.n else f"cover {ids(q.cover_set)}")
        if q.forbidden_set:
            lines.append(f"forbid {ids(q.forbidden_set)}")
        return "\n".join(lines) + "\n"
    lines = ["q pair"]
    for s, t in q.pairs:
        lines += [f"start {ids(s)}", f"end {ids(t)}"]
    if q.cover_target:
        lines.append("cover ALL" if len(q.cover_target) == q.graph.n else f"cover {ids(q.cover_target)}")
    return "\n".join(lines) + "\n"
