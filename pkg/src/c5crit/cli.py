"""Command line interface.

Graph input is read from a file argument or stdin, either as graph6 lines or
as one edge list (``n m`` header).  Every analysis command prints a JSON
report; ``construct`` and ``enumerate`` print graph6 lines.

Exit codes: 0 success, 1 a mathematical expectation failed (for example a
``verify-small`` mismatch), 2 usage or input error, 3 search stopped by its
budget before finishing (a checkpoint is written when requested).

A config file (``--config``) holds ``key = value`` lines whose keys are long
option names with dashes or underscores, e.g. ``threads = 4`` or
``budget = 600``; command line flags win.  ``C5CRIT_THREADS`` sets the
default worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .constructions import FAMILIES, family_X, make_named, ore_6critical
from .critical import CRITICAL, extract_critical_subgraph, is_critical, theorem_predicate
from .discharging import run_discharging
from .enumeration import (
    EnumerationTask,
    enumerate_graphs,
    load_checkpoint,
    save_checkpoint,
    verify_small_critical,
)
from .errors import AmbiguousRule, C5CritError
from .formats import graph6_encode, read_graphs, write_edge_list, write_graph6_lines
from .graph import Graph, potential, subdivide_all_edges
from .hom import HomAssignment, count_homs, find_hom
from .report import dumps, error_report, make_report
from .structure import audit_structure

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PARTIAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- config ------------------------------------------------------------------


def parse_config(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value.strip("\"'")
    return out


# -- helpers -----------------------------------------------------------------


def _read_input(args) -> list:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    graphs = list(read_graphs(text, args.format))
    if not graphs:
        raise UsageError("no graph on input")
    return graphs


def _pins(specs) -> dict:
    pins = {}
    for spec in specs or ():
        try:
            v, c = spec.split("=")
            pins[int(v)] = int(c)
        except ValueError:
            raise UsageError(f"bad --pin {spec!r}; expected VERTEX=COLOR") from None
    return pins


def _witness(w) -> dict:
    if isinstance(w, HomAssignment):
        return {"kind": "homomorphism", "colors": list(w.colors)}
    if isinstance(w, tuple):
        return {"kind": "removable_edge", "edge": list(w)}
    if w == CRITICAL:
        return {"kind": "critical"}
    return {"kind": "isolated_vertex", "vertex": w}


def _basic(G: Graph) -> dict:
    return {"graph6": graph6_encode(G), "n": G.n, "e": G.e}


def _wrap(entries: list) -> dict:
    return {"graphs": entries}


# -- commands ----------------------------------------------------------------


def cmd_hom(args, graphs):
    pins = _pins(args.pin)
    out = []
    for G in graphs:
        hom = find_hom(G, args.t, pins)
        entry = {**_basic(G), "t": args.t, "pins": {str(k): v for k, v in sorted(pins.items())},
                 "exists": hom is not None, "colors": None if hom is None else list(hom.colors)}
        if args.count:
            entry["count"] = count_homs(G, args.t, pins)
        out.append(entry)
    return _wrap(out), EXIT_OK


def _critical_entry(G: Graph, t: int) -> tuple:
    v = is_critical(G, t)
    entry = {**_basic(G), "t": t, "potential": potential(G), "colorable": v.is_colorable,
             "critical": v.is_critical, "witness": _witness(v.witness)}
    ok = True
    if v.is_critical and t == 2:
        rep = theorem_predicate(G, check=False)
        entry["theorem"] = rep.as_dict()
        ok = rep.satisfies_thm_main
    return entry, ok


def cmd_critical(args, graphs):
    out = []
    ok = True
    for G in graphs:
        if args.extract:
            H = extract_critical_subgraph(G, args.t)
            entry, good = _critical_entry(H, args.t)
            entry = {"input": _basic(G), "extracted": entry}
        else:
            entry, good = _critical_entry(G, args.t)
        ok = ok and good
        out.append(entry)
    return _wrap(out), EXIT_OK if ok else EXIT_VIOLATION


def cmd_potential(args, graphs):
    return _wrap([{**_basic(G), "potential": potential(G)} for G in graphs]), EXIT_OK


def cmd_audit(args, graphs):
    out = []
    clean = True
    for G in graphs:
        rep = audit_structure(G)
        clean = clean and rep.all_hold
        out.append({**_basic(G), "all_hold": rep.all_hold, "violations": rep.violations,
                    "checks": rep.as_dict()})
    code = EXIT_VIOLATION if args.fail_on_violation and not clean else EXIT_OK
    return _wrap(out), code


def cmd_discharge(args, graphs):
    out = []
    for G in graphs:
        ledger = run_discharging(G, strict=args.strict)
        d = ledger.as_dict()
        if not args.transfers:
            d.pop("transfers")
        out.append({**_basic(G), **d})
    return _wrap(out), EXIT_OK


def _construct_graphs(args) -> list:
    name = args.name.lower()
    params = args.params
    if name == "ore":
        if len(params) != 1:
            raise UsageError("construct ore M")
        graphs = [ore_6critical(int(params[0])).graph]
    elif name == "family":
        if len(params) != 1 or params[0] not in FAMILIES + ("X",):
            raise UsageError(f"construct family WHICH --base NAME; WHICH in {', '.join(FAMILIES)}, X")
        graphs = list(family_X(make_named(args.base), params[0]))
    else:
        try:
            ints = [int(p) for p in params]
        except ValueError:
            raise UsageError(f"parameters must be integers: {params}") from None
        graphs = [make_named(name, *ints)]
    if args.subdivide:
        graphs = [subdivide_all_edges(G, args.subdivide) for G in graphs]
    return graphs


def cmd_construct(args):
    graphs = _construct_graphs(args)
    if args.edgelist:
        sys.stdout.write("".join(write_edge_list(G) for G in graphs))
    else:
        sys.stdout.write(write_graph6_lines(graphs))
    return EXIT_OK


def _task_from(args, checkpoint=None) -> EnumerationTask:
    return EnumerationTask(
        n=args.n, e=args.e, min_girth=args.girth, require_biconnected=args.biconnected,
        require_connected=args.connected, max_degree=args.max_degree, budget=args.budget,
        checkpoint=checkpoint, split_depth=args.split_depth, workers=args.threads,
    )


def cmd_enumerate(args):
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    ckpt = None
    if args.checkpoint and Path(args.checkpoint).exists():
        ckpt = load_checkpoint(args.checkpoint)
    task = _task_from(args, ckpt)
    res = enumerate_graphs(task)
    sys.stdout.write(write_graph6_lines(res.graphs))
    if args.checkpoint:
        save_checkpoint(res.checkpoint, args.checkpoint)
    summary = {"complete": res.complete, "emitted": len(res.graphs),
               "subtasks_done": res.subtasks_done, "subtasks_total": res.subtasks_total}
    sys.stderr.write(json.dumps(summary, sort_keys=True) + "\n")
    return EXIT_OK if res.complete else EXIT_PARTIAL


def cmd_verify_small(args):
    n_values = []
    for chunk in args.n or ["6", "10"]:
        for part in chunk.split(","):
            if part.strip():
                n_values.append(int(part))
    for n in n_values:
        if (5 * n - 2) % 4:
            raise UsageError(f"n={n}: 5n-2 is not divisible by 4")
    ckpts = {}
    ckdir = Path(args.checkpoint_dir) if args.checkpoint_dir else None
    if ckdir:
        ckdir.mkdir(parents=True, exist_ok=True)
        for n in n_values:
            p = ckdir / f"n{n}.json"
            if p.exists():
                ckpts[n] = load_checkpoint(p)
    rep = verify_small_critical(n_values, budget=args.budget, checkpoints=ckpts,
                                workers=args.threads)
    if ckdir:
        for o in rep.orders:
            if o.checkpoint:
                save_checkpoint(o.checkpoint, ckdir / f"n{o.n}.json")
    result = rep.as_dict()
    if not rep.complete:
        code = EXIT_PARTIAL
    else:
        code = EXIT_OK if rep.all_match else EXIT_VIOLATION
    return result, code


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="key = value defaults file")
    common.add_argument("--no-timing", action="store_true", help="omit timing from reports")
    common.add_argument("--threads", type=int, default=0,
                        help="worker processes (default: $C5CRIT_THREADS or 1)")

    graph_in = _Parser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
    graph_in.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")

    p = _Parser(prog="c5crit", description="Exact tools for circular 5/2-coloring.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hom", parents=[common, graph_in], help="homomorphism to C_{2t+1}")
    s.add_argument("--t", type=int, default=2)
    s.add_argument("--pin", action="append", metavar="V=C")
    s.add_argument("--count", action="store_true")

    s = sub.add_parser("critical", parents=[common, graph_in], help="criticality verdict")
    s.add_argument("--t", type=int, default=2)
    s.add_argument("--extract", action="store_true", help="extract a critical subgraph first")

    sub.add_parser("potential", parents=[common, graph_in], help="p(G) = 5n - 4e")

    s = sub.add_parser("audit", parents=[common, graph_in], help="structural audit")
    s.add_argument("--fail-on-violation", action="store_true")

    s = sub.add_parser("discharge", parents=[common, graph_in], help="discharging ledger")
    s.add_argument("--strict", action="store_true")
    s.add_argument("--no-transfers", dest="transfers", action="store_false")

    s = sub.add_parser("construct", parents=[common], help="named graphs to graph6")
    s.add_argument("name", help="cycle, path, theta, k, e1, e2, petersen, ore, family")
    s.add_argument("params", nargs="*")
    s.add_argument("--base", default="cycle5", help="base graph for family")
    s.add_argument("--subdivide", type=int, default=0, metavar="K")
    s.add_argument("--edgelist", action="store_true")

    s = sub.add_parser("enumerate", parents=[common], help="isomorph-free generation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--e", type=int)
    s.add_argument("--girth", type=int, default=0)
    s.add_argument("--biconnected", action="store_true")
    s.add_argument("--connected", action="store_true")
    s.add_argument("--max-degree", type=int)
    s.add_argument("--budget", type=float)
    s.add_argument("--split-depth", type=int)
    s.add_argument("--checkpoint", help="checkpoint file (resumed if present)")

    s = sub.add_parser("verify-small", parents=[common], help="small critical graphs with p = 2")
    s.add_argument("--n", action="append", help="orders, e.g. 6,10 (default 6,10)")
    s.add_argument("--budget", type=float)
    s.add_argument("--checkpoint-dir")
    return p


def _config_path(argv):
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--config="):
            return tok.split("=", 1)[1]
    return None


def _config_tokens(conf: dict) -> list:
    """Turn config entries into option tokens; booleans become bare flags."""
    out = []
    for key, value in conf.items():
        flag = "--" + key.replace("_", "-")
        low = value.lower()
        if low in ("true", "yes", "on"):
            out.append(flag)
        elif low in ("false", "no", "off"):
            continue
        else:
            out += [flag, value]
    return out


def _parse(parser, argv) -> argparse.Namespace:
    path = _config_path(argv)
    if path is None:
        return parser.parse_args(argv)
    try:
        conf = parse_config(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    # config options go right after the subcommand so explicit flags win
    cmd_at = next((i for i, tok in enumerate(argv) if not tok.startswith("-")), None)
    if cmd_at is None:
        return parser.parse_args(argv)
    return parser.parse_args(argv[:cmd_at + 1] + _config_tokens(conf) + argv[cmd_at + 1:])


GRAPH_COMMANDS = {
    "hom": cmd_hom,
    "critical": cmd_critical,
    "potential": cmd_potential,
    "audit": cmd_audit,
    "discharge": cmd_discharge,
}


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items())
            if k not in ("command", "config", "no_timing", "threads", "input")}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        parser = build_parser()
        args = _parse(parser, argv)
        if args.threads:
            os.environ["C5CRIT_THREADS"] = str(args.threads)
        t0 = time.monotonic()
        if args.command == "construct":
            return cmd_construct(args)
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "verify-small":
            result, code = cmd_verify_small(args)
            graphs = []
        else:
            graphs = _read_input(args)
            result, code = GRAPH_COMMANDS[args.command](args, graphs)
        seconds = None if args.no_timing else time.monotonic() - t0
        sys.stdout.write(dumps(make_report(args.command, _echo(args), graphs, result, seconds)))
        return code
    except UsageError as exc:
        sys.stderr.write(dumps(error_report("usage", str(exc))))
        return EXIT_USAGE
    except AmbiguousRule as exc:
        sys.stderr.write(dumps(error_report(type(exc).__name__, str(exc))))
        return EXIT_VIOLATION
    except (C5CritError, ValueError) as exc:
        sys.stderr.write(dumps(error_report(type(exc).__name__, str(exc))))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
