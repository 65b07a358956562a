"""Command-line driver.

Exit codes: 0 yes / solved / true, 1 no / infeasible / false,
2 unknown (budget exhausted), 3 input or usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import io
from .bench import bench_csv, bench_run
from .errors import DegseqError
from .generators import gen_graph, gen_tp_solvable
from .graph import jdm_of_graph, neighbor_degree_sum, second_order_profile
from .graphicality import erdos_gallai, havel_hakimi, jdm_graphical
from .instances import verify_bf, verify_tp
from .reductions import (
    bf_to_sods,
    decode_bipartite_solution,
    decode_sods_solution,
    decode_xy_solution,
    tp_to_bf,
    tp_to_bipartite_sods,
    tp_to_xy,
)
from .solvers import (
    SearchBudget,
    Status,
    jdm_feasible_from_aggregates,
    jdm_satisfies_aggregates,
    realize_sods,
    realize_sods_bipartite,
    realize_xy,
    solve_bf,
    solve_tp,
    verify_sods,
    verify_sods_bipartite,
    verify_xy,
)

__all__ = ["run", "main"]

YES, NO, UNKNOWN, USAGE = 0, 1, 2, 3
EXIT = {Status.SOLVED: YES, Status.INFEASIBLE: NO, Status.UNKNOWN: UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path):
    return io.read_text(path)


def _budget(args) -> SearchBudget:
    return SearchBudget.from_ints(args.max_nodes, args.max_millis)


def _cmd_compute(args, out: TextIO) -> int:
    G = io.parse_graph(_read(args.graph))
    if args.what == "sods":
        out.write(io.format_pairs(second_order_profile(G)))
    elif args.what == "xy":
        out.write(io.format_pairs(neighbor_degree_sum(G)))
    else:
        out.write(io.format_jdm(jdm_of_graph(G)))
    return YES


def _cmd_check(args, out: TextIO) -> int:
    if args.what == "jdm":
        verdict = jdm_graphical(io.parse_jdm(_read(args.input)))
        sizes = " ".join(str(s) for s in verdict.sizes)
        if verdict.graphical:
            out.write(f"graphical\nclass sizes: {sizes}\n")
            return YES
        out.write(f"not graphical: {verdict.reason}\n")
        return NO
    seq = io.parse_degree_sequence(_read(args.input))
    if args.what == "eg":
        ok = erdos_gallai(seq)
        out.write("true\n" if ok else "false\n")
        return YES if ok else NO
    G = havel_hakimi(seq)
    if G is None:
        out.write("not graphical\n")
        return NO
    out.write(io.format_graph(G))
    return YES


def _cmd_reduce(args, out: TextIO) -> int:
    text = _read(args.input)
    if args.kind == "3p-bf":
        result = io.format_bf(tp_to_bf(io.parse_tp(text)))
    elif args.kind == "bf-sods":
        target, roles = bf_to_sods(io.parse_bf(text), auto_rescale=args.auto_rescale)
        c = roles.counts()
        header = f"# roles: {c['atom']} atoms, {c['weight']} weights, {c['basket']} baskets, {c['master']} master\n"
        result = header + io.format_pairs(target)
    elif args.kind == "3p-bisods":
        result = io.format_pairs(tp_to_bipartite_sods(io.parse_tp(text))[0])
    else:
        result = io.format_pairs(tp_to_xy(io.parse_tp(text))[0])
    Path(args.output).write_text(result, encoding="ascii")
    return YES


def _cmd_solve(args, out: TextIO) -> int:
    text = _read(args.input)
    budget = _budget(args)
    if args.problem == "3p":
        o = solve_tp(io.parse_tp(text), budget)
        fmt = io.format_partition
    elif args.problem == "bf":
        o = solve_bf(io.parse_bf(text), budget)
        fmt = io.format_assignment
    elif args.problem == "jdmfeas":
        sizes, D = io.parse_aggregates(text)
        o = jdm_feasible_from_aggregates(sizes, D, budget, literal=args.literal)
        fmt = io.format_jdm
    else:
        solver = {"sods": realize_sods, "bisods": realize_sods_bipartite, "xy": realize_xy}[args.problem]
        o = solver(io.parse_pairs(text), budget)
        fmt = io.format_graph
    if o.solved:
        out.write(fmt(o.certificate))
    else:
        out.write(f"{o.status.value}\n")
    print(f"nodes={o.nodes} millis={o.millis:.3f}", file=sys.stderr)
    return EXIT[o.status]


def _cmd_verify(args, out: TextIO) -> int:
    inst, cert = _read(args.instance), _read(args.certificate)
    p = args.problem
    if p == "3p":
        ok = verify_tp(io.parse_tp(inst), io.parse_partition(cert))
    elif p == "bf":
        ok = verify_bf(io.parse_bf(inst), io.parse_assignment(cert))
    elif p == "jdmfeas":
        sizes, D = io.parse_aggregates(inst)
        ok = jdm_satisfies_aggregates(io.parse_jdm(cert), sizes, D, literal=args.literal)
    else:
        check = {"sods": verify_sods, "bisods": verify_sods_bipartite, "xy": verify_xy}[p]
        ok = check(io.parse_graph(cert), io.parse_pairs(inst))
    out.write("true\n" if ok else "false\n")
    return YES if ok else NO


def _cmd_decode(args, out: TextIO) -> int:
    G = io.parse_graph(_read(args.graph))
    source = _read(args.source)
    try:
        if args.gadget == "bf-sods":
            bf = io.parse_bf(source)
            _, roles = bf_to_sods(bf, auto_rescale=True)
            out.write(io.format_assignment(decode_sods_solution(G, bf, roles)))
        elif args.gadget == "3p-bisods":
            out.write(io.format_partition(decode_bipartite_solution(G, io.parse_tp(source))))
        else:
            out.write(io.format_partition(decode_xy_solution(G, io.parse_tp(source))))
    except DegseqError as exc:
        if isinstance(exc, ValueError):
            raise
        print(f"decode failed: {exc}", file=sys.stderr)
        return NO
    return YES


def _cmd_gen(args, out: TextIO) -> int:
    if args.what == "3p":
        if args.m is None or args.W is None:
            raise UsageError("gen 3p needs --m and --W")
        text = io.format_tp(gen_tp_solvable(args.seed, args.m, args.W))
    else:
        if args.n is None or args.p is None:
            raise UsageError("gen graph needs --n and --p")
        text = io.format_graph(gen_graph(args.seed, args.n, args.p))
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        out.write(text)
    return YES


def _cmd_bench(args, out: TextIO) -> int:
    if not Path(args.directory).is_dir():
        raise UsageError(f"not a directory: {args.directory}")
    records = bench_run(args.directory, _budget(args))
    for line in bench_csv(records):
        out.write(line + "\n")
    if records and all(r.verdict == "error" for r in records):
        return USAGE
    return YES


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=0, help="search-node limit (0 = unlimited)")
    p.add_argument("--max-millis", type=int, default=0, help="wall-clock limit in ms (0 = unlimited)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="degseq-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="degree profiles of a graph")
    p.add_argument("what", choices=["sods", "xy", "jdm"])
    p.add_argument("graph")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("check", help="graphicality tests")
    p.add_argument("what", choices=["hh", "eg", "jdm"])
    p.add_argument("input")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("reduce", help="build a reduction target")
    p.add_argument("kind", choices=["3p-bf", "bf-sods", "3p-bisods", "3p-xy"])
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--auto-rescale", action="store_true", help="rescale weights when bf-sods conditions fail")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solve", help="exact search")
    p.add_argument("problem", choices=["3p", "bf", "sods", "bisods", "xy", "jdmfeas"])
    p.add_argument("input")
    p.add_argument("--literal", action="store_true", help="jdmfeas: count diagonal edges once")
    _add_budget(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("problem", choices=["3p", "bf", "sods", "bisods", "xy", "jdmfeas"])
    p.add_argument("instance")
    p.add_argument("certificate")
    p.add_argument("--literal", action="store_true", help="jdmfeas: count diagonal edges once")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("decode", help="map a gadget realization back to a source certificate")
    p.add_argument("gadget", choices=["bf-sods", "3p-bisods", "3p-xy"])
    p.add_argument("graph")
    p.add_argument("source")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("gen", help="seeded instance generators")
    p.add_argument("what", choices=["3p", "graph"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int)
    p.add_argument("--W", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="solve every instance in a directory, CSV to stdout")
    p.add_argument("directory")
    _add_budget(p)
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except (DegseqError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
