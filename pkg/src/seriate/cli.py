"""Command-line frontend.

Exit codes: 0 verified/true, 1 refuted/false, 2 usage or statement
error, 3 model load error.  Results go to stdout, diagnostics to
stderr; JSON reports are byte-reproducible for a given set of bounds,
independent of the worker count.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys

from . import errors
from .checker import REGISTRY, check, report_json
from .checker.verdict import report_dict
from .dim2.fivemap import five_map_check
from .checker.enumerators import enumerate_partitions
from .lang import Environment, evaluate, parse as parse_stmt, pretty
from .modelfile import load_model, render_dot


def _bounds_from_args(args) -> dict:
    return {
        "max_points": args.max_points,
        "rows": args.rows, "cols": args.cols,
        "max_rows": args.rows, "max_cols": args.cols,
        "max_len": args.max_len,
    }


def _run_one(job):
    tid, bounds, semantics = job
    return check(tid, bounds, semantics)


def _cmd_check(args) -> int:
    if not args.all and not args.theorem:
        print("check needs --theorem <id> or --all", file=sys.stderr)
        return 2
    tids = list(REGISTRY) if args.all else [args.theorem]
    for tid in tids:
        if tid not in REGISTRY:
            print(f"unknown theorem id {tid!r}; known: {', '.join(REGISTRY)}",
                  file=sys.stderr)
            return 2
    bounds = _bounds_from_args(args)
    jobs = [(tid, bounds, args.semantics if not args.all else None)
            for tid in tids]
    try:
        if args.jobs > 1 and len(jobs) > 1:
            with multiprocessing.Pool(args.jobs) as pool:
                verdicts = pool.map(_run_one, jobs)
        else:
            verdicts = [_run_one(j) for j in jobs]
    except errors.BoundsTooLarge as e:
        print(f"bounds too large: {e}", file=sys.stderr)
        return 2
    except errors.ModeMismatch as e:
        print(str(e), file=sys.stderr)
        return 2
    for v in verdicts:
        wall = getattr(v, "_wall_ms", None)
        if wall is not None:
            print(f"{v.theorem}: {v.status} in {wall} ms "
                  f"({v.instances} instances)", file=sys.stderr)
    if args.format == "json":
        print(report_json(verdicts if args.all else verdicts[0]))
    else:
        for v in verdicts:
            print(_verdict_text(v))
    return 0 if all(v.verified for v in verdicts) else 1


def _verdict_text(v) -> str:
    head = (f"{v.theorem} [{v.semantics}] {v.status}: "
            f"{v.instances} instances at "
            + ", ".join(f"{k}={val}" for k, val in sorted(v.bounds.items())))
    if v.counterexample is None:
        return head
    d = report_dict(v)
    return head + "\ncounterexample: " + json.dumps(d["counterexample"], indent=2)


def _cmd_eval(args) -> int:
    try:
        u = load_model(args.model)
    except errors.ModelLoadError as e:
        print(f"model error: {e}", file=sys.stderr)
        return 3
    if args.stmt:
        statements = [args.stmt]
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                statements = [ln.strip() for ln in fh
                              if ln.strip() and not ln.strip().startswith("#")]
        except OSError as e:
            print(f"cannot read statement file: {e}", file=sys.stderr)
            return 2
    all_true = True
    for stmt in statements:
        try:
            node = parse_stmt(stmt)
            value = evaluate(node, u, Environment())
        except errors.SeriateError as e:
            print(f"{type(e).__name__}: {e}", file=sys.stderr)
            return 2
        print(f"{'true' if value else 'false'}\t{stmt}")
        all_true = all_true and value
    return 0 if all_true else 1


def _cmd_parse(args) -> int:
    try:
        node = parse_stmt(args.stmt)
    except errors.ParseError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    print(pretty(node))
    if args.ast:
        print(repr(node))
    return 0


def _cmd_map(args) -> int:
    if not args.exhaustive:
        print("map requires --exhaustive (the only supported mode)",
              file=sys.stderr)
        return 2
    n = 0
    found = None
    try:
        for part in enumerate_partitions(args.rows, args.cols, args.countries):
            n += 1
            report = five_map_check(part, args.rows, args.cols)
            if report.complete5 and found is None:
                found = part
    except errors.SeriateError as e:
        print(str(e), file=sys.stderr)
        return 2
    print(f"partitions: {n}")
    if found is None:
        print("complete5: none found")
        return 0
    grid = [[found[(r, c)] for c in range(args.cols)] for r in range(args.rows)]
    print("complete5: found")
    print(json.dumps(grid))
    return 1


def _cmd_render(args) -> int:
    if args.format != "dot":
        print(f"unsupported render format {args.format!r}", file=sys.stderr)
        return 2
    try:
        u = load_model(args.model)
    except errors.ModelLoadError as e:
        print(f"model error: {e}", file=sys.stderr)
        return 3
    sys.stdout.write(render_dot(u))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="seriate",
        description="finite-model checker and notation tools for seriate sets")
    sub = ap.add_subparsers(dest="command")

    c = sub.add_parser("check", help="run registered theorem checks")
    c.add_argument("--theorem", help="theorem id, e.g. Th1.6")
    c.add_argument("--all", action="store_true", help="run the whole registry")
    c.add_argument("--semantics", help="semantics mode override")
    c.add_argument("--max-points", type=int, dest="max_points")
    c.add_argument("--rows", type=int)
    c.add_argument("--cols", type=int)
    c.add_argument("--max-len", type=int, dest="max_len")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("eval", help="evaluate statements against a model")
    e.add_argument("--model", required=True)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--stmt")
    g.add_argument("--file")

    p = sub.add_parser("parse", help="parse a statement and print it back")
    p.add_argument("--stmt", required=True)
    p.add_argument("--ast", action="store_true")

    m = sub.add_parser("map", help="search maps for mutually adjacent countries")
    m.add_argument("--rows", type=int, required=True)
    m.add_argument("--cols", type=int, required=True)
    m.add_argument("--countries", type=int, required=True)
    m.add_argument("--exhaustive", action="store_true")

    r = sub.add_parser("render", help="render a model file")
    r.add_argument("--model", required=True)
    r.add_argument("--format", default="dot")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    handlers = {"check": _cmd_check, "eval": _cmd_eval, "parse": _cmd_parse,
                "map": _cmd_map, "render": _cmd_render}
    if args.command not in handlers:
        ap.print_usage(sys.stderr)
        return 2
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
