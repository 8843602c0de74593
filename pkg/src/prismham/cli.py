"""Command-line entry point: build, verify, classify, query, corpus.

Exit codes: 0 verified / definitive answer, 1 failed, 2 inconclusive,
64 usage error, 65 bad input data.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import certificate as cert
from .gadgets import MUTATIONS, build_G
from .search import (
    ENGINES,
    Budget,
    InconclusiveError,
    PathQuery,
    QueryError,
    disjoint_pair_via_hub,
    find_disjoint_pair,
    find_hamilton_cycle,
    find_path,
    prove_no_path,
)
from .search.engines import PAIR_BRUTE_FORCE_CAP
from .spanning import INCONCLUSIVE, classify_cactus, cactus_corpus, hierarchy_report
from .textio import HamiltonQuery, ParseError, format_graph, format_names, format_rotation, parse_graph, parse_query

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATA = 65

log = logging.getLogger("prismham")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    k = int(text)
    if k <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return k


def _positive_float(text: str) -> float:
    x = float(text)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--node-cap", type=_positive_int, default=None, help="search node budget")
    p.add_argument("--time-cap-ms", type=_positive_float, default=None, help="wall-clock budget per search")


def _json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="PATH", help="also write the JSON result to PATH")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="prismham", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="write G_n as graph, rotation and names files")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="output prefix")
    p.add_argument("--mutation", choices=MUTATIONS)

    p = sub.add_parser("verify", help="replay one claim or the whole certificate")
    p.add_argument("claim", choices=cert.CLAIMS + ("all",))
    p.add_argument("--n", type=int, default=26)
    p.add_argument("--mutation", choices=MUTATIONS)
    p.add_argument("--no-timing", action="store_true", help="omit timing fields")
    _budget_flags(p)
    _json_flag(p)

    p = sub.add_parser("classify", help="five-rung hierarchy and cactus report")
    p.add_argument("graph")
    p.add_argument("--node-cap", type=_positive_int, default=None)
    p.add_argument("--time-cap-ms", type=_positive_float, default=None)
    _json_flag(p)

    p = sub.add_parser("query", help="replay a path, pair or Hamilton cycle query")
    p.add_argument("graph")
    p.add_argument("query")
    p.add_argument("--no-timing", action="store_true")
    _budget_flags(p)
    _json_flag(p)

    p = sub.add_parser("corpus", help="write random good even cactuses")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=_positive_int, default=200)
    p.add_argument("--max-vertices", type=_positive_int, default=40)
    p.add_argument("--out", required=True, help="output directory")
    return ap


def _emit(obj: dict, json_path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    print(text)
    if json_path:
        Path(json_path).write_text(text + "\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _budget(args) -> Budget:
    return Budget(args.node_cap, args.time_cap_ms)


def _status_code(statuses: list[str]) -> int:
    if cert.FAILED in statuses:
        return EXIT_FAILED
    if cert.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_build(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    bundle = build_G(args.n, args.mutation)
    prefix = Path(args.out)
    files = {
        ".graph": format_graph(bundle.graph),
        ".rot": format_rotation(bundle.rotation),
        ".names": format_names(bundle.names()),
    }
    for ext, text in files.items():
        path = prefix.with_name(prefix.name + ext)
        try:
            path.write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror}") from None
        log.info("wrote %s", path)
    print(json.dumps({"n": args.n, "vertices": bundle.graph.n, "edges": bundle.graph.m,
                      "fingerprint": cert.fingerprint(bundle)}, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.claim == "theorem-skeleton" and args.n < 2:
        raise UsageError("theorem-skeleton needs --n >= 2")
    timing = not args.no_timing
    budget = _budget(args)
    if args.claim == "all":
        rep = cert.emit_certificate(args.n, args.mutation, args.engine, budget)
        _emit(rep.to_json(timing), args.json)
        return _status_code([c.status for c in rep.claims])
    rec = cert.run_claim(args.claim, args.n, args.mutation, args.engine, budget)
    _emit(rec.to_json(timing), args.json)
    return _status_code([rec.status])


def cmd_classify(args) -> int:
    g = parse_graph(_read(args.graph))
    if g.n < 2 or not g.is_connected():
        raise ParseError(f"{args.graph}: classification needs a connected graph on at least 2 vertices")
    rep = hierarchy_report(g, Budget(args.node_cap, args.time_cap_ms))
    out = {"vertices": g.n, "edges": g.m, "hierarchy": rep.to_json(), "cactus": classify_cactus(g).to_json()}
    _emit(out, args.json)
    return EXIT_INCONCLUSIVE if INCONCLUSIVE in rep.verdicts() else EXIT_OK


def cmd_query(args) -> int:
    g = parse_graph(_read(args.graph))
    q = parse_query(_read(args.query), g)
    budget = _budget(args)
    try:
        if isinstance(q, HamiltonQuery):
            out = find_hamilton_cycle(g, args.engine, budget)
        elif isinstance(q, PathQuery):
            solve = find_path if args.engine == "backtracking" else prove_no_path
            out = solve(q, args.engine, budget)
        elif g.n <= PAIR_BRUTE_FORCE_CAP:
            out = find_disjoint_pair(q, budget)
        else:
            out = disjoint_pair_via_hub(q, budget)
    except InconclusiveError as exc:
        _emit({"verdict": "inconclusive", "method": exc.method, "nodes": exc.nodes, "reason": str(exc)}, args.json)
        return EXIT_INCONCLUSIVE
    _emit(out.to_json(timing=not args.no_timing), args.json)
    return EXIT_OK


def cmd_corpus(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    graphs = cactus_corpus(args.seed, args.count, args.max_vertices)
    width = len(str(len(graphs)))
    for k, g in enumerate(graphs, 1):
        (out / f"cactus_{k:0{width}d}.graph").write_text(format_graph(g))
    print(json.dumps({"seed": args.seed, "count": len(graphs), "dir": str(out)}, sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "query": cmd_query,
    "corpus": cmd_corpus,
}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"prismham {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, QueryError) as exc:
        print(f"prismham {args.verb}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"prismham {args.verb}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
