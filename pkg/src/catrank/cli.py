"""Command-line entry point: ``catrank solve|rank|axioms|extensions|falsify|gen|convert``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .axioms import AxiomId, check_axiom, default_solve, falsify
from .extensions import EnumerationCapError, extensions
from .framework import ArgumentationFramework
from .generator import GenSpec, parse_seed, random_af
from .ranking import rank_from_strengths
from .solver import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, SolveConfig, solve, solve_certified

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NONCONVERGENCE = 2
EXIT_AXIOM_VIOLATION = 3
EXIT_WITNESS = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _probability(text: str) -> float:
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not a probability in [0, 1]")
    return p


def _seed(text: str) -> int:
    try:
        return parse_seed(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} must be a positive integer")
    return value


def _read_framework(path: str, fmt: str | None) -> ArgumentationFramework:
    if fmt is None:
        suffix = Path(path).suffix.lower().lstrip(".")
        fmt = suffix if suffix in io.READERS else "apx"
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return io.READERS[fmt](text)
    except io.ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="framework file, or - for stdin (default)")
    p.add_argument("--format", choices=sorted(io.READERS), help="input format (default: from file extension)")


def _add_solver(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE, help="stopping tolerance")
    p.add_argument("--max-iter", type=_positive_int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("--norm", choices=("l2", "max", "l1"), default="l2", help="norm of the stopping test")


def _config(args) -> SolveConfig:
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    return SolveConfig(args.tol, args.max_iter, norm=args.norm)


def _nonconverged(strengths) -> bool:
    if not strengths.converged:
        print(f"error: no convergence within {strengths.iterations} iterations", file=sys.stderr)
        return True
    return False


def cmd_solve(args) -> int:
    af = _read_framework(args.input, args.format)
    config = _config(args)
    bounds = None
    if args.certify:
        strengths, bounds = solve_certified(af, config)
    else:
        strengths = solve(af, config)
    ranking = rank_from_strengths(strengths, 10 * config.tolerance, bounds)
    if args.out == "csv":
        sys.stdout.write(io.emit_csv(af, strengths, bounds))
    else:
        sys.stdout.write(io.emit_report(af, strengths, ranking, bounds))
    return EXIT_NONCONVERGENCE if _nonconverged(strengths) else EXIT_OK


def format_ranking(af: ArgumentationFramework, ranking, lines: bool = False) -> str:
    if lines:
        return "".join(", ".join(af.names[i] for i in cls) + "\n" for cls in ranking.classes)
    if not ranking.classes:
        return ""
    return " > ".join(" = ".join(af.names[i] for i in cls) for cls in ranking.classes) + "\n"


def cmd_rank(args) -> int:
    af = _read_framework(args.input, args.format)
    config = _config(args)
    strengths = solve(af, config)
    eps = 10 * config.tolerance if args.tie_eps is None else args.tie_eps
    if eps < 0:
        raise UsageError("--tie-eps must be non-negative")
    if args.out == "report":
        sys.stdout.write(io.emit_report(af, strengths, rank_from_strengths(strengths, eps)))
    else:
        sys.stdout.write(format_ranking(af, rank_from_strengths(strengths, eps), lines=args.lines))
    return EXIT_NONCONVERGENCE if _nonconverged(strengths) else EXIT_OK


def _parse_axioms(text: str) -> list[AxiomId]:
    if text.strip().lower() == "all":
        return list(AxiomId)
    try:
        return [AxiomId.parse(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _describe(af: ArgumentationFramework, w) -> str:
    return f"({af.names[w.x]}, {af.names[w.y]})"


def cmd_axioms(args) -> int:
    axioms = _parse_axioms(args.axioms)
    af = _read_framework(args.input, args.format)
    ranking = default_solve(af)
    violated = False
    for axiom in axioms:
        verdict = check_axiom(axiom, af, ranking, seed=args.seed, samples=args.samples)
        status = "pass" if verdict.holds else "VIOLATED"
        line = f"{axiom.value:<4} {status}"
        if verdict.witnesses:
            violated = True
            shown = ", ".join(_describe(af, w) for w in verdict.witnesses[: args.max_witnesses])
            more = len(verdict.witnesses) - args.max_witnesses
            line += f"  witnesses: {shown}" + (f" (+{more} more)" if more > 0 else "")
        if verdict.unresolved:
            line += f"  unresolved: {len(verdict.unresolved)}"
        print(line)
    return EXIT_AXIOM_VIOLATION if violated and args.strict else EXIT_OK


def _format_set(af: ArgumentationFramework, s) -> str:
    return "{" + ", ".join(af.names[i] for i in sorted(s)) + "}"


def cmd_extensions(args) -> int:
    af = _read_framework(args.input, args.format)
    try:
        result = extensions(af, args.semantics, args.cap)
    except EnumerationCapError as exc:
        raise UsageError(str(exc)) from None
    if not result.extensions:
        print("(none)")
    for ext in result.extensions:
        print(_format_set(af, ext))
    return EXIT_OK


def cmd_falsify(args) -> int:
    try:
        axiom = AxiomId.parse(args.axiom)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lo, hi = args.edge_prob_min, args.edge_prob_max
    if lo > hi:
        raise UsageError("--edge-prob-min exceeds --edge-prob-max")
    report = falsify(axiom, args.n_max, (lo, hi), args.trials, args.seed)
    if report.witness is None:
        print(f"no witness in {report.trials} trials")
        return EXIT_OK
    af, verdict = report.witness
    w = verdict.witnesses[0]
    print(f"% {axiom.value} witness at trial {report.trial_index} (seed {report.seed})")
    sys.stdout.write(io.emit_apx(af))
    print(f"% violating pair: {af.names[w.x]}, {af.names[w.y]}")
    return EXIT_WITNESS


def cmd_gen(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    af = random_af(GenSpec(args.n, args.edge_prob, not args.no_self_attacks, args.seed))
    sys.stdout.write(io.WRITERS[args.to](af))
    return EXIT_OK


def cmd_convert(args) -> int:
    af = _read_framework(args.input, getattr(args, "from"))
    try:
        sys.stdout.write(io.WRITERS[args.to](af))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catrank", description="Categoriser strengths and rankings for argumentation frameworks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute categoriser strengths")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--certify", action="store_true", help="also report certified per-argument intervals")
    p.add_argument("--out", choices=("report", "csv"), default="report")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("rank", help="print the categoriser-based ranking")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--tie-eps", type=float, default=None, help="merge strengths this close (default 10 x tol)")
    p.add_argument("--lines", action="store_true", help="one class per line, names comma-separated")
    p.add_argument("--out", choices=("text", "report"), default="text")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("axioms", help="check ranking axioms on a framework")
    _add_input(p)
    p.add_argument("--axioms", default="all", help="comma-separated axiom ids, or 'all'")
    p.add_argument("--strict", action="store_true", help="exit 3 when any axiom is violated")
    p.add_argument("--seed", type=_seed, default=0, help="seed for sampled Ab/In checks")
    p.add_argument("--samples", type=_positive_int, default=10, help="permutations sampled for Ab")
    p.add_argument("--max-witnesses", type=_positive_int, default=5)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("extensions", help="list extensions under a classical semantics")
    _add_input(p)
    p.add_argument("--semantics", choices=("grounded", "complete", "preferred", "stable"), default="grounded")
    p.add_argument("--cap", type=_positive_int, default=20, help="largest framework to enumerate")
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("falsify", help="search random frameworks for an axiom violation")
    p.add_argument("--axiom", required=True)
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--edge-prob-min", type=_probability, default=0.0)
    p.add_argument("--edge-prob-max", type=_probability, default=0.5)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_falsify)

    p = sub.add_parser("gen", help="generate a random framework")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edge-prob", type=_probability, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--no-self-attacks", action="store_true")
    p.add_argument("--to", choices=sorted(io.WRITERS), default="apx")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="translate between framework formats")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--from", choices=sorted(io.READERS), default=None)
    p.add_argument("--to", choices=sorted(io.WRITERS), required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
