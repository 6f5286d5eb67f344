"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 input outside an operation's domain (not a block graph, too large, ...).
``verify`` exits 1 when a suite fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .determinant import det_exact
from .exceptions import GraphFormatError, NotBlockGraphError, OracleSizeError, PreconditionError
from .families import (
    DEFAULT_ENUMERATION_BOUND,
    CoalescedCliqueSpec,
    NmkSpec,
    enumerate_block_graphs,
    make_coalesced_cliques,
    make_nmk,
    random_block_graph,
)
from .reduction import decide
from .textio import format_graph, read_graph
from .verify import SUITES, run_suite

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    verdict = decide(read_graph(args.file))
    print("singular" if verdict.singular else "nonsingular")
    return 0


def cmd_reduce(args) -> int:
    verdict = decide(read_graph(args.file))
    if args.trace:
        sys.stdout.write(verdict.format_trace())
    else:
        print(verdict.verdict_line)
    return 0


def cmd_det(args) -> int:
    print(det_exact(read_graph(args.file)))
    return 0


def _load_coalesced_spec(path: str) -> CoalescedCliqueSpec:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        n = int(raw["n"])
        attachments = tuple(tuple(int(m) for m in a) for a in raw["attachments"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad clique spec file {path}: {exc}") from None
    return CoalescedCliqueSpec(n, attachments)


def cmd_gen(args) -> int:
    if args.family == "nmk":
        g = make_nmk(NmkSpec(args.n, args.m, args.k))
    elif args.family == "random":
        g = random_block_graph(args.seed, args.max_vertices)
    else:
        g = make_coalesced_cliques(_load_coalesced_spec(args.spec_file))
    _emit(format_graph(g), args.output)
    return 0


def cmd_enumerate(args) -> int:
    first = True
    for g in enumerate_block_graphs(args.max_vertices, bound=args.bound):
        if not first:
            sys.stdout.write("---\n")
        sys.stdout.write(format_graph(g))
        first = False
    return 0


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in suites:
        results = run_suite(name, seed=args.seed, samples=args.samples)
        passed = all(r.passed for r in results)
        ok &= passed
        if args.verbose:
            for r in results:
                print(f"  {r.line()}")
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
        if not passed and not args.verbose:
            for r in results:
                if not r.passed:
                    print(f"  {r.line()}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="blockgraph", description="Singularity of vertex-weighted block graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="print singular or nonsingular")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="run the pendant-block reduction")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="print every reduction step")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("det", help="exact determinant of A(G)+diag(x)")
    p.add_argument("file")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("gen", help="generate a graph file")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    q = fam.add_parser("nmk", help="K_n with k pendant K_m at each vertex")
    q.add_argument("n", type=int)
    q.add_argument("m", type=int)
    q.add_argument("k", type=int)
    q.add_argument("-o", "--output")
    q = fam.add_parser("random", help="random weighted block graph")
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--max-vertices", type=int, required=True)
    q.add_argument("-o", "--output")
    q = fam.add_parser("coalesced", help='clique with attachments from JSON {"n": .., "attachments": [[..], ..]}')
    q.add_argument("spec_file")
    q.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="all connected block graphs up to a size")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_ENUMERATION_BOUND,
                   help="safety bound on --max-vertices (default %(default)s)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the cross-verification suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotBlockGraphError, PreconditionError, OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
