"""Command-line interface; run ``wordrep --help`` for the subcommands."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import catalog as cat
from .enumeration import EnumConfig, emit_verdicts, parse_caps, run_enumeration
from .gluing import GlueSpec, experiment_6_1, experiment_6_2, glue
from .graph import (
    Graph,
    GraphFormatError,
    parse_edge_list_text,
    parse_graph6,
    to_edge_list_text,
    to_graph6,
)
from .orientation import DEFAULT_GUARD, Orientation, SearchGuardError
from .split import SplitWitness
from .threshold import is_threshold, random_threshold, reduction_certificate
from .verdict import NON_REPRESENTABLE, Verdict, decide_graph, verify_certificate
from .words import format_word, graph_of_word, parse_word, represents

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Bad input; reported on stderr with exit status 2."""


# -- graph input and output -----------------------------------------------


def _looks_like_edge_list(text: str) -> bool:
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
    return first.isdigit()


def load_graph(arg: str, fmt: str | None = None) -> Graph:
    """``catalog:NAME``, ``-`` for stdin, a file path, or a literal graph6 string."""
    if arg.startswith("catalog:"):
        try:
            return cat.get(arg[len("catalog:"):])
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    if fmt is None:
        fmt = "edges" if _looks_like_edge_list(text) else "graph6"
    try:
        if fmt == "edges":
            return parse_edge_list_text(text)
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError("expected exactly one graph6 line")
        return parse_graph6(lines[0])
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"cannot parse graph {arg!r}: {exc}") from exc


def _render_graph(g: Graph, fmt: str | None) -> str:
    if fmt == "edges":
        return to_edge_list_text(g).rstrip("\n")
    return to_graph6(g)


def _vertex_list(text: str, g: Graph, one_based: bool) -> tuple[int, ...]:
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        if one_based and g.labels is None:
            out.append(int(tok) - 1)
        else:
            try:
                out.append(g.vertex(tok))
            except (KeyError, ValueError):
                raise UsageError(f"no vertex {tok!r} in graph") from None
    return tuple(out)


# -- rendering ----------------------------------------------------------


def _certificate_json(g: Graph, v: Verdict) -> dict | None:
    cert = v.certificate
    if isinstance(cert, SplitWitness):
        return {"kind": "split-witness", "text": cert.to_text(g), "verified": verify_certificate(g, v)}
    if isinstance(cert, Orientation):
        return {"kind": "orientation", "text": cert.to_text(), "verified": verify_certificate(g, v)}
    return None


def _failure_text(g: Graph, failure: Sequence[Any]) -> str:
    kind, order, *rest = failure
    path = " ".join(g.label(c) for c in order)
    if kind == "infeasible":
        return f"first order {path}: vertex {g.label(rest[0])} fits no shape"
    x, y = rest
    return f"first order {path}: violating pair {g.label(x)} {g.label(y)}"


def _verdict_text(g: Graph, v: Verdict) -> str:
    lines = [f"{v.status} ({v.method})"]
    cert = v.certificate
    if isinstance(cert, SplitWitness):
        lines.append("witness:")
        lines.append(cert.to_text(g).rstrip("\n"))
    elif isinstance(cert, Orientation):
        lines.append("semi-transitive orientation:")
        lines.append(cert.to_text().rstrip("\n"))
    detail = v.detail or {}
    if detail.get("first_failure"):
        lines.append(_failure_text(g, detail["first_failure"]))
        lines.append(
            f"orders tried {detail['orders_tried']}: "
            f"{detail['infeasible_orders']} infeasible, {detail['restricted_orders']} restricted"
        )
    if "guard" in detail:
        lines.append(f"{detail['vertices']} vertices exceeds guard {detail['guard']}; use --force")
    return "\n".join(lines)


def _verdict_json(g: Graph, v: Verdict) -> dict:
    detail = dict(v.detail or {})
    if detail.get("first_failure"):
        kind, order, *rest = detail["first_failure"]
        detail["first_failure"] = {
            "kind": kind,
            "order": [g.label(c) for c in order],
            "vertices": [g.label(x) for x in rest],
        }
    if "clique" in detail:
        detail["clique"] = [g.label(c) for c in detail["clique"]]
    return {
        "status": v.status,
        "method": v.method,
        "certificate": _certificate_json(g, v),
        "detail": detail,
    }


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------


def cmd_decide(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    v = decide_graph(g, guard=args.guard, force=args.force)
    _emit(args, {"command": "decide", "graph6": to_graph6(g), **_verdict_json(g, v)}, _verdict_text(g, v))
    return 1 if args.fail_on_negative and v.status == NON_REPRESENTABLE else 0


def cmd_represents(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    try:
        word = parse_word(args.word, g, one_based=args.one_based)
        ok = represents(word, g)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad word: {exc}") from exc
    _emit(args, {"command": "represents", "word": format_word(word, g), "represents": ok},
          "true" if ok else "false")
    return 1 if args.fail_on_negative and not ok else 0


def cmd_word_graph(args: argparse.Namespace) -> int:
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise UsageError(f"bad word: {exc}") from exc
    g = graph_of_word(word)
    payload = {
        "command": "word-graph",
        "graph6": to_graph6(g),
        "vertices": list(g.labels or ()),
        "edges": [list(e) for e in g.labeled_edges()],
    }
    text = _render_graph(g, args.format)
    if args.format != "edges":
        text += "\n" + " ".join(f"{a}-{b}" for a, b in g.labeled_edges())
    _emit(args, payload, text)
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        rows = cat.catalog()
        payload = {
            "command": "catalog list",
            "entries": [
                {"name": e.name, "vertices": e.graph.n, "expected": e.expected_verdict,
                 "provenance": e.provenance, "graph6": to_graph6(e.graph)}
                for e in rows
            ],
        }
        width = max(len(e.name) for e in rows)
        text = "\n".join(
            f"{e.name:<{width}}  {e.graph.n:>2}  {e.expected_verdict:<26}  {to_graph6(e.graph)}"
            for e in rows
        )
        _emit(args, payload, text)
        return 0
    try:
        g = cat.get(args.name)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "command": "catalog get",
        "name": args.name,
        "graph6": to_graph6(g),
        "vertices": list(g.labels or ()),
        "edges": [list(e) for e in g.labeled_edges()],
    }
    text = _render_graph(g, args.format)
    if args.format != "edges":
        text += "\n" + " ".join(f"{a}-{b}" for a, b in g.labeled_edges())
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        caps = parse_caps(args.caps, args.clique_size) if args.caps else None
        cfg = EnumConfig(args.clique_size, caps, jobs=args.jobs, emit=args.emit_all)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report_out = sys.stdout
    if cfg.emit:
        for g6, verdict in emit_verdicts(cfg):
            sys.stdout.write(f"{g6}\t{verdict}\n")
        report_out = sys.stderr
    report = run_enumeration(cfg)
    if args.json:
        print(report.dumps(), file=report_out)
    else:
        lines = [
            f"clique size {report.m}, caps {report.caps}",
            f"candidates {report.total}: {report.representable} representable, "
            f"{report.non_representable} non-representable",
            f"minimal non-representable graphs: {len(report.minimal)}",
        ]
        lines += [f"  {mg.graph6}  {' '.join(f'{a}-{b}' for a, b in mg.graph.labeled_edges())}"
                  for mg in report.minimal]
        if not report.complete:
            lines.append("caps below the covering envelope: the minimal list may be incomplete")
        lines.append(f"wall time {report.wall_time:.2f}s")
        print("\n".join(lines), file=report_out)
    return 0


def cmd_glue(args: argparse.Namespace) -> int:
    g1 = load_graph(args.g1, args.format)
    g2 = load_graph(args.g2, args.format)
    try:
        spec = GlueSpec(g1, _vertex_list(args.c1, g1, args.one_based),
                        g2, _vertex_list(args.c2, g2, args.one_based))
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    g = glue(spec)
    v = decide_graph(g, guard=args.guard, force=args.force)
    payload = {"command": "glue", "graph6": to_graph6(g), "vertices": g.n,
               "edges": [list(e) for e in g.labeled_edges()], **_verdict_json(g, v)}
    _emit(args, payload, _render_graph(g, args.format) + "\n" + _verdict_text(g, v))
    return 1 if args.fail_on_negative and v.status == NON_REPRESENTABLE else 0


def cmd_threshold(args: argparse.Namespace) -> int:
    if args.action == "random":
        try:
            g = random_threshold(args.n, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        seq = is_threshold(g)
        _emit(args, {"command": "threshold random", "graph6": to_graph6(g), "sequence": str(seq)},
              _render_graph(g, args.format))
        return 0
    g = load_graph(args.graph, args.format)
    seq = is_threshold(g)
    if seq is None:
        _emit(args, {"command": "threshold check", "threshold": False}, "not threshold")
        return 1 if args.fail_on_negative else 0
    steps = reduction_certificate(g)
    cert = [{"removed": g.label(s.removed), "twin": g.label(s.twin), "adjacent": s.adjacent}
            for s in steps]
    text = [f"threshold, build sequence {seq}"]
    text += [f"  delete {c['removed']} (twin of {c['twin']}, {'adjacent' if c['adjacent'] else 'non-adjacent'})"
             for c in cert]
    _emit(args, {"command": "threshold check", "threshold": True, "sequence": str(seq),
                 "order": [g.label(v) for v in seq.order], "certificate": cert}, "\n".join(text))
    return 0


def cmd_experiment(args: argparse.Namespace) -> int:
    try:
        if args.kind == "apex":
            if len(args.params) != 2:
                raise UsageError("experiment apex needs <l> <i>")
            r = experiment_6_1(int(args.params[0]), int(args.params[1]))
            payload = {"command": "experiment apex", "l": r.ell, "i": r.i,
                       "graph6": to_graph6(r.graph), "status": r.verdict.status,
                       "witness": list(r.witness_labels) if r.witness_labels else None}
            text = f"l={r.ell} i={r.i}: {r.verdict.status}"
            if r.witness_labels:
                text += "\ninduced apex graph on " + " ".join(r.witness_labels)
            _emit(args, payload, text)
            return 1 if args.fail_on_negative and not r.verdict.representable else 0
        if len(args.params) != 1:
            raise UsageError("experiment words needs <n>")
        w = experiment_6_2(int(args.params[0]))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"command": "experiment words", "n": w.n, "k_prime_word": w.k_prime_word_ok,
               "m_word": w.m_word_ok, "b_status": w.b_verdict.status, "glue_matches_b": w.glue_is_b,
               "passed": w.passed}
    text = "\n".join([
        f"K'{w.n} word check: {w.k_prime_word_ok}",
        f"M{w.n} word check: {w.m_word_ok}",
        f"B{w.n}: {w.b_verdict.status}",
        f"glue is B{w.n}: {w.glue_is_b}",
    ])
    _emit(args, payload, text)
    return 0 if w.passed else 1


# -- parser -----------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--graph6", dest="format", action="store_const", const="graph6",
                     default=argparse.SUPPRESS, help="graph input/output in graph6")
    fmt.add_argument("--edges", dest="format", action="store_const", const="edges",
                     default=argparse.SUPPRESS, help="graph input/output as an edge list")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="structured output")
    p.add_argument("--fail-on-negative", action="store_true", default=argparse.SUPPRESS,
                   help="exit 1 on a negative verdict")
    p.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                   help="lift the exhaustive-search size guard")
    p.add_argument("--guard", type=int, default=argparse.SUPPRESS,
                   help=f"exhaustive-search vertex limit (default {DEFAULT_GUARD})")
    p.add_argument("--one-based", action="store_true", default=argparse.SUPPRESS,
                   help="read numeric letters and vertex lists as 1-based ids")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="wordrep", parents=[common],
                                     description="Word-representability of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide word-representability")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("represents", parents=[common], help="check a word against a graph")
    p.add_argument("word")
    p.add_argument("graph")
    p.set_defaults(func=cmd_represents)

    p = sub.add_parser("word-graph", parents=[common], help="graph represented by a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_word_graph)

    p = sub.add_parser("catalog", parents=[common], help="named graphs")
    actions = p.add_subparsers(dest="action", required=True)
    actions.add_parser("list", parents=[common], help="list the catalog").set_defaults(func=cmd_catalog)
    q = actions.add_parser("get", parents=[common], help="print one graph")
    q.add_argument("name")
    q.set_defaults(func=cmd_catalog)

    p = sub.add_parser("enumerate", parents=[common], help="search minimal non-representable split graphs")
    p.add_argument("--clique-size", type=int, required=True)
    p.add_argument("--caps", help="per-degree caps, e.g. 2:6,3:6,4:3")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--emit-all", action="store_true",
                   help="stream 'graph6<TAB>verdict' per candidate; report goes to stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("glue", parents=[common], help="glue two graphs along cliques")
    p.add_argument("g1")
    p.add_argument("c1", help="comma-separated clique vertices of g1")
    p.add_argument("g2")
    p.add_argument("c2", help="comma-separated clique vertices of g2")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("threshold", parents=[common], help="threshold graphs")
    actions = p.add_subparsers(dest="action", required=True)
    q = actions.add_parser("check", parents=[common], help="recognise and certify")
    q.add_argument("graph")
    q.set_defaults(func=cmd_threshold)
    q = actions.add_parser("random", parents=[common], help="seeded random threshold graph")
    q.add_argument("n", type=int)
    q.add_argument("seed", type=int)
    q.set_defaults(func=cmd_threshold)

    p = sub.add_parser("experiment", parents=[common], help="the two gluing constructions")
    p.add_argument("kind", choices=["apex", "words"])
    p.add_argument("params", nargs="*", metavar="N")
    p.set_defaults(func=cmd_experiment)
    return parser


_DEFAULTS = {"format": None, "json": False, "fail_on_negative": False, "force": False,
             "guard": DEFAULT_GUARD, "one_based": False}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, SearchGuardError) as exc:
        print(f"wordrep: error: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
