"""Command-line front end: `msmetric <command> ...` or `python -m msmetric`.

Exit codes: 0 property holds / success, 1 property fails / search exhausted,
2 usage error, 3 malformed or unreadable input.
"""

from __future__ import annotations

import argparse
import logging
import sys
import warnings
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO, TypeVar

from ..axioms.checks import classify, validate_ms
from ..core.instances import BUILTINS
from ..core.types import MsSpace, PhiFunction, SelfMap, UnknownPointError, parse_value
from ..fixedpoint.contraction import ContractionKind, analyze
from ..fixedpoint.picard import CycleDetectedError, IterationLimitError, SolveTrace, picard
from ..search.config import GenConfig
from ..search.generate import find_ms_not_partial_s, gen_ms, gen_partial_s
from ..topology.gaps import ball_sorted
from .formats import InputFormatError, load_instance, load_map, serialize_instance
from .report import Report

log = logging.getLogger(__name__)

_R = TypeVar("_R")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class UsageError(Exception):
    pass


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="instance file (msspace v1)")
    src.add_argument("--builtin", choices=sorted(BUILTINS), help="use a built-in instance")
    p.add_argument("-q", "--quiet", action="store_true", help="print the verdict line only")


def _add_map(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--map", dest="map_file", help="map file (msmap v1)")
    src.add_argument("--const", metavar="POINT", help="constant map to POINT")
    src.add_argument("--identity", action="store_true", help="identity map")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the instance here instead of standard output")
    p.add_argument("--size", type=int, default=3, help="number of points (default: 3)")
    p.add_argument("--seed", type=int, default=0, help="64-bit unsigned seed (default: 0)")
    p.add_argument("--trials", type=int, default=1000, help="trial budget (default: 1000)")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default: 1)")
    p.add_argument("--progress", action="store_true", help="show a progress bar on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msmetric", description="Exact M_s-metric verification and search")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the four M_s axioms")
    _add_input(p)
    p.add_argument("--strengthened", action="store_true", help="also check the three-way identity condition")

    p = sub.add_parser("classify", help="place an instance in the partial-S / M_s hierarchy")
    _add_input(p)

    p = sub.add_parser("ball", help="closed ball B_s[center, radius]")
    _add_input(p)
    p.add_argument("--center", required=True)
    p.add_argument("--radius", required=True)

    p = sub.add_parser("contract", help="contraction admissibility of a self-map")
    _add_input(p)
    _add_map(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in ContractionKind])
    p.add_argument("--phi", help="φ as family:param, e.g. linear:1/2 or saturating:1")

    p = sub.add_parser("solve", help="Picard iteration from a start point")
    _add_input(p)
    _add_map(p)
    p.add_argument("--x0", required=True)
    p.add_argument("--max-iter", type=int, default=None)

    p = sub.add_parser("search", help="search for an M_s space that is not partial-S")
    p.add_argument("--mode", default="ms-not-partial-s", choices=["ms-not-partial-s"])
    _add_output(p)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--partial-s", action="store_true", help="generate a partial S-metric instance")
    _add_output(p)
    return parser


def _load_space(args: argparse.Namespace) -> MsSpace:
    if args.builtin:
        return BUILTINS[args.builtin]()
    return load_instance(args.file)


def _load_self_map(args: argparse.Namespace, space: MsSpace) -> SelfMap:
    if args.map_file:
        return load_map(args.map_file, space)
    if args.const is not None:
        return SelfMap.constant(space, args.const)
    return SelfMap.identity(space)


def _point(space: MsSpace, pid: str, flag: str) -> str:
    try:
        space.index(pid)
    except UnknownPointError:
        raise UsageError(f"{flag}: unknown point id {pid!r}") from None
    return pid


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    space = _load_space(args)
    report = validate_ms(space, strengthened=args.strengthened)
    r = Report(args.quiet)
    r.add("instance", space.name or "-").add("points", space.n)
    r.add("mode", "symmetric" if space.symmetric else "strict")
    r.add("is_ms", report.is_ms, verdict=True)
    r.add("checks", report.checks_performed)
    if args.strengthened:
        r.add("strengthened", report.strengthened_holds)
    r.add("violations", sum(v for k, v in report.violation_totals.items() if k != "MS1_STRONG"))
    r.extend("violation", [v.describe() for v in report.violations])
    r.write(out)
    return EXIT_OK if report.is_ms else EXIT_FAIL


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    space = _load_space(args)
    c = classify(space)
    r = Report(args.quiet)
    r.add("instance", space.name or "-").add("points", space.n)
    r.add("is_ms", c.is_ms, verdict=True)
    r.add("is_partial_s", c.is_partial_s, verdict=True)
    r.add("checks", c.ms_report.checks_performed + c.partial_s_report.checks_performed)
    if c.witness is not None:
        r.add("witness", c.witness.describe())
    r.extend("violation", [v.describe() for v in c.witnesses])
    r.write(out)
    return EXIT_OK


def cmd_ball(args: argparse.Namespace, out: TextIO) -> int:
    space = _load_space(args)
    center = _point(space, args.center, "--center")
    try:
        radius = parse_value(args.radius)
    except ValueError as e:
        raise UsageError(f"--radius: {e}") from None
    r = Report(args.quiet)
    r.add("center", center).add("radius", radius)
    r.add("ball", ball_sorted(space, center, radius), verdict=True)
    r.write(out)
    return EXIT_OK


def cmd_contract(args: argparse.Namespace, out: TextIO) -> int:
    kind = ContractionKind(args.kind)
    phi = None
    if kind is ContractionKind.PHI:
        if not args.phi:
            raise UsageError("--kind phi requires --phi family:param")
        try:
            phi = PhiFunction.parse(args.phi)
        except ValueError as e:
            raise UsageError(f"--phi: {e}") from None
    space = _load_space(args)
    if args.const is not None:
        _point(space, args.const, "--const")
    T = _load_self_map(args, space)
    rep = analyze(space, T, kind, phi)

    r = Report(args.quiet)
    r.add("kind", kind.value)
    if kind is ContractionKind.PHI:
        r.add("phi", str(phi))
        r.add("checks", rep.checks)
        if rep.witness:
            r.add("witness", rep.witness).add("witness_values", rep.witness_values)
    else:
        key = "k_star" if kind is ContractionKind.BANACH else "lambda_star"
        r.add(key, "inf" if rep.constant is None else rep.constant)
        r.add("witness", rep.witness).add("witness_values", rep.witness_values)
        if rep.infeasible_witness is not None:
            r.add("infeasible_witness", rep.infeasible_witness)
    r.add("admissible", rep.admissible, verdict=True)
    r.write(out)
    return EXIT_OK if rep.admissible else EXIT_FAIL


def _trace_lines(r: Report, trace: SolveTrace) -> None:
    r.add("orbit", trace.orbit).add("steps", trace.steps)
    r.add("step_gaps", trace.step_gaps)


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    space = _load_space(args)
    if args.const is not None:
        _point(space, args.const, "--const")
    T = _load_self_map(args, space)
    x0 = _point(space, args.x0, "--x0")
    if args.max_iter is not None and args.max_iter < 1:
        raise UsageError("--max-iter must be at least 1")
    r = Report(args.quiet)
    try:
        trace = picard(space, T, x0, args.max_iter)
    except CycleDetectedError as e:
        _trace_lines(r, e.trace)
        r.add("status", "cycle").add("cycle", e.cycle, verdict=True)
        r.write(out)
        return EXIT_FAIL
    except IterationLimitError as e:
        _trace_lines(r, e.trace)
        r.add("status", "limit", verdict=True)
        r.write(out)
        return EXIT_FAIL
    _trace_lines(r, trace)
    r.add("status", "fixed")
    r.add("fixed_point", trace.fixed_point, verdict=True)
    r.add("self_distance", trace.self_distance_at_fix)
    r.write(out)
    return EXIT_OK


def _gen_config(args: argparse.Namespace) -> GenConfig:
    try:
        return GenConfig(
            n=args.size, seed=args.seed, trials=args.trials, workers=args.workers, progress=args.progress
        )
    except ValueError as e:
        raise UsageError(str(e)) from None


def _run_search(search: Callable[[GenConfig], Optional[_R]], config: GenConfig) -> Optional[_R]:
    # exhaustion is reported on stderr by the command itself
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        return search(config)


def _emit(text: str, args: argparse.Namespace, out: TextIO) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        log.info("wrote %s", args.out)
    else:
        out.write(text)


def cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    config = _gen_config(args)
    found = _run_search(find_ms_not_partial_s, config)
    if found is None:
        sys.stderr.write(f"no instance found in {config.trials} trials\n")
        return EXIT_FAIL
    comments = [f"trial: {found.trial}", f"witness: {found.witness.describe()}"]
    _emit(serialize_instance(found.space, comments), args, out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    config = _gen_config(args)
    space = _run_search(gen_partial_s if args.partial_s else gen_ms, config)
    if space is None:
        sys.stderr.write(f"no instance found in {config.trials} trials\n")
        return EXIT_FAIL
    _emit(serialize_instance(space, [f"trial: {space.provenance['trial']}"]), args, out)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "ball": cmd_ball,
    "contract": cmd_contract,
    "solve": cmd_solve,
    "search": cmd_search,
    "gen": cmd_gen,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        sys.stderr.write(f"msmetric {args.command}: {e}\n")
        return EXIT_USAGE
    except InputFormatError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_INPUT
    except OSError as e:
        sys.stderr.write(f"{e.filename or ''}: cannot read: {e.strerror}\n")
        return EXIT_INPUT
    except (ValueError, KeyError) as e:
        # map/instance content the parser accepted but the model rejects
        sys.stderr.write(f"msmetric {args.command}: invalid input: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
