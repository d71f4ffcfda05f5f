"""Command-line front end: ``dompoly poly|eval|class|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.  Every flag can also be set through an environment
variable ``DOMPOLY_<FLAG>`` (e.g. ``DOMPOLY_CAP=20``); explicit flags win.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .equivalence import MissingCorpus, equivalence_class_exhaustive, verify_path_class
from .graph import (
    Graph, GraphError, cycle, disjoint_union, from_edge_list_text, from_graph6, h_graph,
    path, pendant_cycle, tilde_path,
)
from .poly import DEFAULT_CAP, CapExceeded, derivative, dom_poly, evaluate
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
ENV_PREFIX = "DOMPOLY_"


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    brute_force_cap: int = DEFAULT_CAP
    parallel_workers: int = 1
    output_format: str = "text"
    corpus_path: str | None = None

    def __post_init__(self):
        if self.brute_force_cap < 1:
            raise UsageError("--cap must be at least 1")
        if self.parallel_workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.output_format not in ("json", "text"):
            raise UsageError("--format must be json or text")


_FAMILIES = {"path": path, "cycle": cycle, "tildepath": tilde_path, "F": pendant_cycle, "H": h_graph}


def parse_graph_spec(spec: str) -> Graph:
    """``path:N``, ``cycle:N``, ``tildepath:N``, ``F:N``, ``H:N``, ``g6:<code>``,
    ``file:<edge list>``, or several of these joined by ``+`` (disjoint union)."""
    parts = []
    for item in spec.split("+"):
        kind, sep, arg = item.partition(":")
        if not sep or not arg:
            raise UsageError(f"cannot parse graph spec {item!r}")
        try:
            if kind in _FAMILIES:
                parts.append(_FAMILIES[kind](int(arg)))
            elif kind == "g6":
                parts.append(from_graph6(arg))
            elif kind == "file":
                parts.append(from_edge_list_text(Path(arg).read_text()))
            else:
                raise UsageError(f"unknown graph family {kind!r}")
        except (ValueError, GraphError, OSError) as exc:
            raise UsageError(f"bad graph spec {item!r}: {exc}") from None
    return disjoint_union(parts)


def _parse_range(text: str | None) -> tuple[int | None, int | None]:
    if not text:
        return None, None
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError("--range must look like A..B")
    try:
        return (int(lo) if lo else None), (int(hi) if hi else None)
    except ValueError:
        raise UsageError("--range bounds must be integers") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None)
    common.add_argument("--cap", type=int, default=None, help="brute-force order cap")
    common.add_argument("--workers", default=None, help="worker processes, integer or 'auto'")
    common.add_argument("--corpus", default=None, help="newline-delimited graph6 file")

    parser = argparse.ArgumentParser(prog="dompoly", description="Exact domination polynomials and path classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="print D(G, x)")
    p.add_argument("graph")

    p = sub.add_parser("eval", parents=[common], help="evaluate a derivative of D(G, x)")
    p.add_argument("graph")
    p.add_argument("x", type=int)
    p.add_argument("order", type=int, nargs="?", default=0, choices=[0, 1, 2, 3])

    p = sub.add_parser("class", parents=[common], help="D-equivalence class of P_n")
    p.add_argument("n", type=int)
    p.add_argument("--candidates", action="store_true",
                   help="n >= 9: filter the path/tilde-path plus <= 2 cycles family")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--range", dest="range_", default=None, help="n-range A..B for the suite")
    return parser


def _config(args) -> CliConfig:
    def pick(flag, env, default):
        return flag if flag is not None else os.environ.get(ENV_PREFIX + env, default)

    workers = pick(args.workers, "WORKERS", 1)
    if workers == "auto":
        workers = os.cpu_count() or 1
    try:
        return CliConfig(int(pick(args.cap, "CAP", DEFAULT_CAP)), int(workers),
                         pick(args.format, "FORMAT", "text"), pick(args.corpus, "CORPUS", None))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(cfg: CliConfig, payload, text: str):
    if cfg.output_format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _run(args, cfg: CliConfig) -> int:
    if args.command == "poly":
        p = dom_poly(parse_graph_spec(args.graph), cap=cfg.brute_force_cap, workers=cfg.parallel_workers)
        _emit(cfg, json.loads(p.to_json()), str(p))
        return EXIT_OK

    if args.command == "eval":
        p = dom_poly(parse_graph_spec(args.graph), cap=cfg.brute_force_cap, workers=cfg.parallel_workers)
        value = evaluate(derivative(p, args.order), args.x)
        _emit(cfg, {"value": str(value)}, str(value))
        return EXIT_OK

    if args.command == "class":
        if args.n < 1:
            raise UsageError("n must be positive")
        if args.candidates:
            if args.n < 9:
                raise UsageError("--candidates needs n >= 9")
            rep = verify_path_class(args.n)
            payload = {"n": rep.n, "candidates": rep.candidates, "survivors": rep.survivors,
                       "ok": rep.ok, "scope": rep.scope}
            _emit(cfg, payload, f"n={rep.n}: {len(rep.survivors)} survivors of {rep.candidates} "
                                f"candidates: {', '.join(rep.survivors)}\n({rep.scope})")
            return EXIT_OK if rep.ok else EXIT_FAIL
        try:
            rep = equivalence_class_exhaustive(args.n, path(args.n), corpus=cfg.corpus_path,
                                               workers=cfg.parallel_workers)
        except MissingCorpus as exc:
            raise UsageError(f"{exc} (or use --candidates)") from None
        lines = [f"[P{rep.n}] has {rep.size} member(s) among {rep.corpus_size} graphs"
                 f"{' (exhaustive)' if rep.exhaustive else ''}; D = {rep.polynomial}"]
        lines += [f"  {desc}  {form.decode()}" for form, desc in rep.members]
        _emit(cfg, rep.to_dict(), "\n".join(lines))
        return EXIT_OK

    lo, hi = _parse_range(args.range_)
    results = run_suite(args.suite, lo, hi, workers=cfg.parallel_workers)
    payload = [{"suite": r.name, "passed": r.passed, "summary": r.summary,
                "counterexample": r.counterexample} for r in results]
    _emit(cfg, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _run(args, _config(args))
    except UsageError as exc:
        print(f"dompoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"dompoly: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
