"""Command-line front end.

Exit status: 0 success, 1 usage or input error, 2 verification failure,
3 arithmetic overflow.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import graph, iso, lspath, monomial
from .cartan import new_cartan
from .errors import CrystalError

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_OVERFLOW = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cartan(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b' with non-negative integers, got {text!r}") from None
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError(f"Cartan entries must be non-negative, got {text!r}")
    return new_cartan(a, b)


def _non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cartan", type=_cartan, default=new_cartan(1, 2), metavar="A,B",
                        help="Cartan matrix [[2,-A],[-B,2]] (default 1,2)")
    common.add_argument("--weight", type=int, choices=(1, 2), default=1, help="fundamental weight index i")
    common.add_argument("--shift", type=int, default=0, help="first index s of the highest monomial X[s,i]")
    common.add_argument("--depth", type=_non_negative, default=12, help="number of f-steps to explore")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")

    parser = _Parser(prog="rank2crystals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("graph", parents=[common], help="generate a crystal graph")
    p.add_argument("--kind", choices=("ls", "monomial"), required=True)
    p = sub.add_parser("map", parents=[common], help="image of an LS path under Phi_s")
    p.add_argument("--path", required=True, help="e.g. 'taus=2,1;a=0,1/2,1'")
    p = sub.add_parser("invert", parents=[common], help="LS path mapping to a monomial")
    p.add_argument("--monomial", required=True, help="e.g. 'X[0,2]*X[1,2]^-1'")
    p = sub.add_parser("enumerate", parents=[common], help="LS paths from the closed-form description")
    p.add_argument("--bound", type=_non_negative, required=True, help="largest coset length m2 (paths deeper than --depth are skipped)")
    sub.add_parser("verify", parents=[common], help="check Phi_s is an isomorphism up to --depth")
    return parser


def _emit(text):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_graph(args):
    g = graph.generate(args.kind, args.cartan, args.weight, args.shift, args.depth)
    if args.format == "json":
        _emit(graph.export_json(g))
    elif args.format == "dot":
        _emit(graph.export_dot(g))
    else:
        _emit(graph.export_text(g))
    return EXIT_OK


def _cmd_map(args):
    try:
        pi = lspath.parse_path(args.path, args.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reason = lspath.membership_failure(args.cartan, pi)
    if reason:
        raise UsageError(f"{args.path} is not an LS path of shape Lambda_{args.weight}: {reason}")
    X = iso.phi_map(args.cartan, args.weight, args.shift, pi)
    if args.format == "json":
        _emit(json.dumps({"path": lspath.format_path(pi), "monomial": monomial.format_monomial(X)}))
    else:
        _emit(monomial.format_monomial(X))
    return EXIT_OK


def _cmd_invert(args):
    try:
        X = monomial.parse_monomial(args.monomial)
        pi = iso.phi_inverse(args.cartan, args.weight, args.shift, X)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit(json.dumps({"monomial": monomial.format_monomial(X), "path": lspath.format_path(pi)}))
    else:
        _emit(lspath.format_path(pi))
    return EXIT_OK


def _cmd_enumerate(args):
    cd = args.cartan
    if args.bound >= cd.N:
        raise UsageError(f"--bound {args.bound} must be below N={cd.N}")
    paths = lspath.enumerate_paths(cd, args.weight, args.bound, max_depth=args.depth)
    labels = [lspath.format_path(p) for p in paths]
    if args.format == "json":
        _emit(json.dumps({"cartan": [cd.a, cd.b], "i": args.weight, "bound": args.bound,
                          "depth": args.depth, "paths": labels}))
    else:
        _emit("\n".join(labels))
    return EXIT_OK


def _cmd_verify(args):
    report = graph.verify_isomorphism(args.cartan, args.weight, args.shift, args.depth)
    if args.format == "json":
        _emit(json.dumps({
            "cartan": [report.a, report.b], "i": report.i, "shift": report.shift, "depth": report.depth,
            "verified": report.verified, "nodes": report.nodes, "edges": report.edges,
            "checks": dict(sorted(report.checks.items())),
            "failures": [{"check": name, "witnesses": list(w)} for name, w in report.failures],
        }))
    else:
        _emit(report.summary())
    if not report.verified:
        print(f"verification failed: {len(report.failures)} failures", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


COMMANDS = {
    "graph": _cmd_graph,
    "map": _cmd_map,
    "invert": _cmd_invert,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.format == "dot" and args.command != "graph":
        print(f"rank2crystals: error: --format dot only applies to 'graph'", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"rank2crystals: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"rank2crystals: arithmetic overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except CrystalError as exc:
        print(f"rank2crystals: internal consistency failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main(argv=None):
    sys.exit(run(argv))
