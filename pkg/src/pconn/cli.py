"""pconn command line: generate, solve, construct, verify, partition, export.

Every run prints one JSON report on stdout. Diagnostics go to stderr.
Exit codes: 0 success, 1 usage, 2 domain precondition, 3 self-verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import io
from .certificate import BipartiteSpanningCertificate
from .digraph import (CycleOrder, Digraph, VertexBipartition, biorient, complete_biorientation,
                      directed_cycle, find_hamiltonian_cycle, make_circulant)
from .errors import PreconditionError, VerificationError
from .partition import construct_with_route, crossing_digraph, strong_two_partition_bruteforce
from .pc_construct import (almost_bipartite_coloring, certificate_coloring,
                           circulant_pc2_coloring, even_head_subdigraph, even_tail_subdigraph,
                           tail_side_coloring)
from .verify import (ArcColoring, is_properly_connected, is_properly_walk_connected, pc_number,
                     wc_number)
from .wc_construct import (balanced_hamiltonian_wc_coloring, euler_alternating_coloring,
                           short_chord_wc_coloring)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFICATION = 0, 1, 2, 3

STRATEGIES = ("tail-side", "almost-bipartite", "even-tail", "even-head", "circulant",
              "euler", "balanced-ham", "short-chord-wc", "search")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pconn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, *, inp=False, out=True):
        if inp:
            sp.add_argument("--input", help="digraph JSON file")
        if out:
            sp.add_argument("--out", help="output file")
        sp.add_argument("--cycle", type=_int_list,
                        help="Hamiltonian cycle as a comma list (default: first one found)")
        return sp

    g = common(sub.add_parser("gen", help="write a digraph JSON file"))
    g.add_argument("kind", choices=("circulant", "cycle", "biorient"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--s", type=_int_list, help="circulant steps")
    g.add_argument("--edges", help="biorient: edges as 'u-v,u-v' (default: complete graph)")

    nb = common(sub.add_parser("number", help="exhaustive pc / wc"), inp=True)
    nb.add_argument("--mode", choices=("pc", "wc"), default="pc")
    nb.add_argument("--cap", type=int, default=3)

    c = common(sub.add_parser("color", help="build and verify a coloring"), inp=True)
    c.add_argument("strategy", nargs="?", choices=STRATEGIES)
    c.add_argument("--strategy", dest="strategy_flag", choices=STRATEGIES)
    c.add_argument("--n", type=int)
    c.add_argument("--s", type=_int_list)
    c.add_argument("--k", type=int)
    c.add_argument("--parts", help="partition JSON (part1/part2, or v1a/v1b/v2)")
    c.add_argument("--mode", choices=("pc", "wc"), default="pc", help="search: which number")
    c.add_argument("--cap", type=int, default=3)

    v = common(sub.add_parser("verify", help="check a coloring"), inp=True, out=False)
    v.add_argument("--mode", choices=("path", "walk"), default="path")
    v.add_argument("--coloring", required=True)

    pt = common(sub.add_parser("partition", help="strong 2-partition"), inp=True)
    pt.add_argument("--mode", choices=("brute", "construct"), default="brute")
    pt.add_argument("--n", type=int)
    pt.add_argument("--s", type=_int_list)
    pt.add_argument("--k", type=int)

    e = common(sub.add_parser("export", help="DOT export"), inp=True)
    e.add_argument("format", nargs="?", choices=("dot",), default="dot")
    e.add_argument("--coloring")
    e.add_argument("--parts", help="certificate or partition JSON")
    return p


# --- helpers -------------------------------------------------------------------

def _steps(args) -> Optional[list[int]]:
    if getattr(args, "s", None):
        return args.s
    if getattr(args, "k", None) is not None:
        return [1, args.k]
    return None


def _digraph(args) -> Digraph:
    if getattr(args, "input", None):
        return io.load_digraph(args.input)
    steps = _steps(args)
    if getattr(args, "n", None) is not None and steps:
        return make_circulant(args.n, steps)
    raise UsageError("need --input, or --n with --s / --k")


def _cycle(args, D: Digraph) -> CycleOrder:
    if args.cycle:
        C = CycleOrder(args.cycle)
        C.check(D)
        return C
    C = find_hamiltonian_cycle(D)
    if C is None:
        raise PreconditionError("digraph has no Hamiltonian cycle")
    return C


def _write(path: Optional[str], data: dict) -> Optional[str]:
    if path:
        io.write_json(path, data)
    return path


def _coloring_result(D: Digraph, c: ArcColoring, route: str, walk: bool) -> dict:
    total = c.filled(1)
    report = is_properly_walk_connected(D, total) if walk else is_properly_connected(D, total)
    if not report.ok:
        raise VerificationError(f"{route}: re-verification failed at pair {report.failing_pair}")
    return {"route": route, "k": c.k, "colors": list(c.colors),
            "check": "walk" if walk else "path", "verified": True,
            "uncolored": sum(1 for x in c.colors if x == 0)}


# --- commands --------------------------------------------------------------------

def cmd_gen(args) -> tuple[Digraph, dict]:
    # bad generator parameters are usage errors, not domain errors
    try:
        D = _generate(args)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    data = io.digraph_to_dict(D)
    path = _write(args.out, data)
    return D, {"path": path} if path else {"digraph": data}


def _generate(args) -> Digraph:
    if args.kind == "circulant":
        if not args.s:
            raise UsageError("circulant needs --s")
        D = make_circulant(args.n, args.s)
    elif args.kind == "cycle":
        D = directed_cycle(args.n)
    elif args.edges:
        try:
            edges = [tuple(int(x) for x in e.split("-")) for e in args.edges.split(",")]
        except ValueError:
            raise UsageError(f"bad --edges {args.edges!r}")
        D = biorient(edges, args.n)
    else:
        D = complete_biorientation(args.n)
    return D


def cmd_number(args) -> tuple[Digraph, dict]:
    if not args.input:
        raise UsageError("number needs --input")
    D = io.load_digraph(args.input)
    if args.cap < 1:
        raise UsageError("--cap must be at least 1")
    solve = pc_number if args.mode == "pc" else wc_number
    found = solve(D, cap=args.cap)
    result = {"mode": args.mode, "cap": args.cap, "number": found.number,
              "exceeds_cap": found.exceeds_cap}
    if found.witness is not None:
        inp = Path(args.input)
        out = args.out or str(inp.with_name(f"{inp.stem}.{args.mode}-witness.json"))
        io.save_coloring(found.witness, out)
        result["witness"] = out
    return D, result


def _parts_file(path: Optional[str]) -> dict:
    if not path:
        raise UsageError("this strategy needs --parts")
    return io.read_json(path)


def cmd_color(args) -> tuple[Digraph, dict]:
    strategy = args.strategy_flag or args.strategy
    if strategy is None:
        raise UsageError("color needs a strategy")
    if strategy == "circulant":
        steps = _steps(args)
        if args.n is None or not steps:
            raise UsageError("circulant needs --n and --s or --k")
        D = make_circulant(args.n, steps)
        res = _coloring_result(D, circulant_pc2_coloring(args.n, steps), "circulant", walk=False)
    else:
        D = _digraph(args)
        if strategy == "tail-side":
            data = _parts_file(args.parts)
            parts = VertexBipartition(data["part1"], data["part2"])
            res = _coloring_result(D, tail_side_coloring(D, parts), "tail-side", walk=False)
        elif strategy == "almost-bipartite":
            data = _parts_file(args.parts)
            c = almost_bipartite_coloring(D, data["v1a"], data["v1b"], data["v2"])
            res = _coloring_result(D, c, "almost-bipartite", walk=False)
        elif strategy in ("even-tail", "even-head"):
            build = even_tail_subdigraph if strategy == "even-tail" else even_head_subdigraph
            cert = build(D, _cycle(args, D))
            res = _coloring_result(D, certificate_coloring(D, cert), strategy, walk=False)
            res["certificate"] = io.certificate_to_dict(cert)
        elif strategy == "euler":
            res = _coloring_result(D, euler_alternating_coloring(D), "euler", walk=True)
        elif strategy == "balanced-ham":
            wcol = balanced_hamiltonian_wc_coloring(D, _cycle(args, D))
            res = _coloring_result(D, wcol.coloring, wcol.route, walk=True)
        elif strategy == "short-chord-wc":
            wcol = short_chord_wc_coloring(D, _cycle(args, D))
            res = _coloring_result(D, wcol.coloring, wcol.route, walk=True)
        else:
            solve = pc_number if args.mode == "pc" else wc_number
            found = solve(D, cap=args.cap)
            if found.witness is None:
                raise PreconditionError(f"{args.mode} exceeds cap {args.cap}")
            res = _coloring_result(D, found.witness, f"search ({args.mode})",
                                   walk=args.mode == "wc")
    res["strategy"] = strategy
    if args.out:
        io.save_coloring(ArcColoring(tuple(res["colors"]), res["k"]), args.out)
        res["path"] = args.out
    return D, res


def cmd_verify(args) -> tuple[Digraph, dict]:
    if not args.input:
        raise UsageError("verify needs --input")
    D = io.load_digraph(args.input)
    c = io.load_coloring(args.coloring)
    if len(c.colors) != D.m:
        raise PreconditionError(f"coloring has {len(c.colors)} entries, digraph has {D.m} arcs")
    check = is_properly_walk_connected if args.mode == "walk" else is_properly_connected
    report = check(D, c.filled(1))
    return D, {"mode": args.mode, "ok": report.ok,
               "failing_pair": list(report.failing_pair) if report.failing_pair else None}


def cmd_partition(args) -> tuple[Digraph, dict]:
    D = _digraph(args)
    if args.mode == "brute":
        parts, route = strong_two_partition_bruteforce(D), "brute force"
    else:
        found = construct_with_route(D, _cycle(args, D))
        parts, route = found if found else (None, None)
    result = {"mode": args.mode, "found": parts is not None, "route": route}
    if parts is not None:
        data = io.partition_to_dict(parts)
        result.update(data, crossing_arcs=crossing_digraph(D, parts).m)
        if _write(args.out, data):
            result["path"] = args.out
    return D, result


def cmd_export(args) -> tuple[Digraph, dict]:
    if not args.input:
        raise UsageError("export needs --input")
    D = io.load_digraph(args.input)
    coloring = io.load_coloring(args.coloring) if args.coloring else None
    cert: Optional[BipartiteSpanningCertificate] = None
    if args.parts:
        cert = io.certificate_from_dict(io.read_json(args.parts))
        if not cert.arcs:
            cert = BipartiteSpanningCertificate(D.arcs, cert.parts, cert.route)
    text = io.to_dot(D, coloring, cert, name=Path(args.input).stem.replace("-", "_") or "D")
    out = args.out or str(Path(args.input).with_suffix(".dot"))
    Path(out).write_text(text)
    return D, {"format": "dot", "path": out, "bytes": len(text.encode())}


COMMANDS = {"gen": cmd_gen, "number": cmd_number, "color": cmd_color, "verify": cmd_verify,
            "partition": cmd_partition, "export": cmd_export}


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    report = {"command": argv, "n": None, "m": None, "result": None}
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        D, result = COMMANDS[args.command](args)
        report.update(n=D.n, m=D.m, result=result)
    except UsageError as exc:
        code, report["error"] = EXIT_USAGE, f"usage: {exc}"
    except VerificationError as exc:
        code, report["error"] = EXIT_VERIFICATION, str(exc)
    except (PreconditionError, ValueError, KeyError) as exc:
        code, report["error"] = EXIT_PRECONDITION, str(exc)
    if "error" in report:
        print(f"pconn: {report['error']}", file=sys.stderr)
    report["exit"] = code
    report["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
    print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
