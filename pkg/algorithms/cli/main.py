"""
Command-line front end.

Exit codes: 0 for sat / yes / success, 1 for unsat / no / a failed check, 2 for usage,
input and precondition errors. Results go to stdout, diagnostics and logs to stderr.
"""
from __future__ import annotations
import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from algorithms.catalog.catalog import get_pattern
from algorithms.config import configure
from algorithms.csp_lib.errors import LemmaViolation
from algorithms.csp_lib.formats import parse_instance, parse_pattern, serialize_instance
from algorithms.csp_lib.instance import Instance
from algorithms.csp_lib.pattern import Pattern
from algorithms.instances.colouring import (
    gen_i5,
    gen_i34,
    gen_implication_gadget,
    gen_kcoloring,
    gen_pad_equality,
)
from algorithms.instances.random_instances import GenParams, gen_random
from algorithms.match.occurrence import occurs
from algorithms.propagate.arc_consistency import enforce_ac
from algorithms.propagate.singleton import enforce_sac
from algorithms.solve.classify import CLASS_SOLVERS, auto_solve, classify
from algorithms.solve.oracle import oracle_solve
from algorithms.solve.r5 import solve_r5
from algorithms.solve.report import SolveReport
from algorithms.transform.btp import btp_merge_fixpoint
from algorithms.transform.log import TransformLog
from algorithms.transform.substitution import ns_eliminate

LOG = logging.getLogger(__name__)

_LOG_LEVEL_STRINGS = ["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]
_CLASS_CHOICES = ["auto", "q1", "q2", "r5", "r8", "r7m", "t3", "t2", "t4", "t5", "oracle"]
_CLASS_PATTERNS = {"q1": "Q1", "q2": "Q2", "r5": "R5", "r8": "R8", "r7m": "R7-",
                   "t3": "T3", "t2": "T2", "t4": "T4", "t5": "T5"}
_PREPROCESS_OPS = ["ac", "sac", "ns", "btp"]
_GEN_KINDS = ["kcol", "i34", "i5", "random", "gadget", "pad"]


class UsageError(ValueError):
    """Raised for option combinations argparse cannot express."""


@dataclass(frozen=True)
class CliConfig:
    """
    Validated options of one invocation.

    Attributes:
    - subcommand (str): The subcommand name.
    - inputs (List[str]): Input document paths.
    - pattern (Optional[str]): Catalog name or `.pat` path.
    - pattern_file (Optional[str]): `.pat` path.
    - solver_class (str): Solver selection for `solve`.
    - construct (bool): Print a certificate after `sat`.
    - repair (bool): R5 certificates by deletion and repair.
    - trace (bool): Dump AC traces of `preprocess` to stderr.
    - log (bool): Dump the transform log of `preprocess` to stderr.
    - ops (List[str]): `preprocess` operations, applied in order.
    - seed (int): Seed for `gen random`.
    - output (Optional[str]): Output path; stdout when omitted.
    - strict_points (bool): Injective occurrences on points.
    - jobs (int): SAC worker threads.
    - log_level (str): Logging threshold.
    - gen_kind (Optional[str]): Generator of `gen`.
    - gen_args (Dict[str, object]): Generator parameters of `gen`.
    """
    subcommand: str
    inputs: List[str] = field(default_factory=list)
    pattern: Optional[str] = None
    pattern_file: Optional[str] = None
    solver_class: str = "auto"
    construct: bool = False
    repair: bool = False
    trace: bool = False
    log: bool = False
    ops: List[str] = field(default_factory=list)
    seed: int = 0
    output: Optional[str] = None
    strict_points: bool = False
    jobs: int = 1
    log_level: str = "WARNING"
    gen_kind: Optional[str] = None
    gen_args: Dict[str, object] = field(default_factory=dict)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> CliConfig:
        config = cls(
            subcommand=ns.command,
            inputs=_as_list(getattr(ns, "inputs", None)),
            pattern=getattr(ns, "pattern", None),
            pattern_file=getattr(ns, "pattern_file", None),
            solver_class=getattr(ns, "solver_class", "auto"),
            construct=getattr(ns, "construct", False),
            repair=getattr(ns, "repair", False),
            trace=getattr(ns, "trace", False),
            log=getattr(ns, "log", False),
            ops=list(getattr(ns, "ops", None) or ["sac"]),
            seed=getattr(ns, "seed", 0),
            output=getattr(ns, "output", None),
            strict_points=ns.strict_points,
            jobs=ns.jobs,
            log_level=ns.log_level,
            gen_kind=getattr(ns, "kind", None),
            gen_args={key: getattr(ns, key) for key in ("n", "q", "d", "density", "tightness",
                                                        "biconditional", "x", "y", "k")
                      if hasattr(ns, key)},
        )
        config.validate()
        return config

    def validate(self) -> None:
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if self.repair and self.solver_class != "r5":
            raise UsageError("--repair only applies to --class r5")
        if self.repair and not self.construct:
            raise UsageError("--repair needs --construct")
        has_pattern = self.pattern is not None or self.pattern_file is not None
        if self.subcommand == "draw" and has_pattern == bool(self.inputs):
            raise UsageError("draw takes exactly one of --pattern, --pattern-file or an instance file")
        if self.subcommand == "gen" and self.gen_kind == "pad" and not self.inputs:
            raise UsageError("gen pad needs an instance file")


def _as_list(value) -> List[str]:
    if value is None:
        return []
    if isinstance(value, str):
        return [value]
    return list(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sacpat",
        description="Binary CSP patterns, singleton arc consistency and class solvers.")
    parser.add_argument("--log-level", dest="log_level", choices=_LOG_LEVEL_STRINGS, default="WARNING",
                        help="Log level")
    parser.add_argument("--jobs", type=int, default=1, help="Worker threads for SAC probe rounds")
    parser.add_argument("--strict-points", dest="strict_points", action="store_true",
                        help="Occurrences must be injective on points within a variable")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Decide an instance")
    solve.add_argument("inputs", nargs=1, metavar="FILE")
    solve.add_argument("--class", dest="solver_class", choices=_CLASS_CHOICES, default="auto")
    solve.add_argument("--construct", action="store_true", help="Print a solution after 'sat'")
    solve.add_argument("--repair", action="store_true", help="R5 certificate by deletion and repair")

    occ = sub.add_parser("occurs", help="Search a pattern in an instance")
    occ.add_argument("inputs", nargs=1, metavar="FILE")
    occ_source = occ.add_mutually_exclusive_group(required=True)
    occ_source.add_argument("--pattern", help="Catalog name or .pat file")
    occ_source.add_argument("--pattern-file", help="Pattern document (.pat)")

    cls = sub.add_parser("classify", help="List the catalog patterns occurring in an instance")
    cls.add_argument("inputs", nargs=1, metavar="FILE")

    pre = sub.add_parser("preprocess", help="Apply AC, SAC, NS elimination or BTP merging")
    pre.add_argument("inputs", nargs=1, metavar="FILE")
    pre.add_argument("--op", dest="ops", action="append", choices=_PREPROCESS_OPS,
                     help="Operation, repeatable, applied in order (default: sac)")
    pre.add_argument("--trace", action="store_true", help="Write AC traces to stderr")
    pre.add_argument("--log", action="store_true", help="Write the transform log to stderr")
    pre.add_argument("-o", "--output", help="Output file")

    gen = sub.add_parser("gen", help="Generate an instance")
    gen.add_argument("kind", choices=_GEN_KINDS)
    gen.add_argument("inputs", nargs="?", metavar="FILE", help="Instance to pad (gen pad)")
    gen.add_argument("--n", type=int, default=4, help="Variables (kcol, random)")
    gen.add_argument("--q", type=int, default=3, help="Colours (kcol)")
    gen.add_argument("--d", type=int, default=3, help="Domain size (random)")
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--tightness", type=float, default=0.5)
    gen.add_argument("--biconditional", action="store_true", help="Gadget with biconditional heads")
    gen.add_argument("--x", type=int, default=0, help="First variable of the padded constraint")
    gen.add_argument("--y", type=int, default=1, help="Second variable of the padded constraint")
    gen.add_argument("--k", type=int, default=1, help="Padding length")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", help="Output file")

    sub.add_parser("verify-paper", help="Check the counterexamples and the catalog")

    draw = sub.add_parser("draw", help="Draw a pattern or an instance to a PNG file")
    draw.add_argument("inputs", nargs="?", metavar="FILE")
    draw_source = draw.add_mutually_exclusive_group()
    draw_source.add_argument("--pattern", help="Catalog name or .pat file")
    draw_source.add_argument("--pattern-file", help="Pattern document (.pat)")
    draw.add_argument("-o", "--output", required=True, help="PNG file")
    return parser


def _read_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _load_pattern(config: CliConfig) -> Tuple[Pattern, Optional[bool]]:
    """
    The pattern given on the command line, with the point semantics to match it under:
    strict for catalog patterns only defined with injective points, the process default
    otherwise.
    """
    path = config.pattern_file
    if path is None and config.pattern.endswith(".pat"):
        path = config.pattern
    if path is not None:
        pattern = parse_pattern(Path(path).read_text(encoding="utf-8"))
        pattern.name = Path(path).stem
        return pattern, None
    entry = get_pattern(config.pattern)
    return entry.pattern, True if entry.strict_only else None


def _emit(config: CliConfig, text: str, out: TextIO) -> None:
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_solve(config: CliConfig, out: TextIO, err: TextIO) -> int:
    instance = _read_instance(config.inputs[0])
    if config.solver_class == "auto":
        report = auto_solve(instance, construct=config.construct)
    elif config.solver_class == "oracle":
        report = oracle_solve(instance)
    elif config.solver_class == "r5":
        report = solve_r5(instance, construct=config.construct, repair=config.repair)
    else:
        report = CLASS_SOLVERS[_CLASS_PATTERNS[config.solver_class]](instance, construct=config.construct)
    LOG.info("method %s, %d probes, %d nodes", report.method, report.stats.probes, report.stats.nodes)
    _write_report(report, config.construct, out)
    return 0 if report.is_sat else 1


def _write_report(report: SolveReport, construct: bool, out: TextIO) -> None:
    if construct:
        out.write(report.format())
    else:
        out.write("{}\n".format(report.status))


def cmd_occurs(config: CliConfig, out: TextIO, err: TextIO) -> int:
    pattern, strict = _load_pattern(config)
    witness = occurs(pattern, _read_instance(config.inputs[0]), strict_points=strict)
    if witness is None:
        out.write("no\n")
        return 1
    out.write("yes\n" + witness.format())
    return 0


def cmd_classify(config: CliConfig, out: TextIO, err: TextIO) -> int:
    out.write(classify(_read_instance(config.inputs[0])).format())
    return 0


def cmd_preprocess(config: CliConfig, out: TextIO, err: TextIO) -> int:
    instance = _read_instance(config.inputs[0])
    log = TransformLog()
    for op in config.ops:
        if op == "ac":
            instance, trace = enforce_ac(instance)
            if config.trace:
                err.write(trace.format())
        elif op == "sac":
            instance = enforce_sac(instance)
        elif op == "ns":
            instance, step = ns_eliminate(instance)
            log = log + step
        else:
            instance, step = btp_merge_fixpoint(instance)
            log = log + step
    if config.log:
        err.write(log.format())
    _emit(config, serialize_instance(instance), out)
    return 0


def cmd_gen(config: CliConfig, out: TextIO, err: TextIO) -> int:
    args = config.gen_args
    kind = config.gen_kind
    if kind == "kcol":
        instance = gen_kcoloring(args["n"], args["q"])
    elif kind == "i34":
        instance = gen_i34()
    elif kind == "i5":
        instance = gen_i5()
    elif kind == "random":
        instance = gen_random(GenParams(args["n"], args["d"], args["density"], args["tightness"], config.seed))
    elif kind == "gadget":
        instance = gen_implication_gadget(args["biconditional"])
    else:
        instance = gen_pad_equality(_read_instance(config.inputs[0]), args["x"], args["y"], args["k"])
    _emit(config, serialize_instance(instance), out)
    return 0


def cmd_verify_paper(config: CliConfig, out: TextIO, err: TextIO) -> int:
    from algorithms.cli.verify_paper import verify_paper
    return verify_paper(lambda text: out.write(text + "\n"))


def cmd_draw(config: CliConfig, out: TextIO, err: TextIO) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from algorithms.csp_lib.render import render_instance, render_pattern

    if config.pattern is not None or config.pattern_file is not None:
        ax = render_pattern(_load_pattern(config)[0])
    else:
        ax = render_instance(_read_instance(config.inputs[0]))
    ax.figure.savefig(config.output)
    plt.close(ax.figure)
    return 0


COMMANDS: Dict[str, Callable[[CliConfig, TextIO, TextIO], int]] = {
    "solve": cmd_solve,
    "occurs": cmd_occurs,
    "classify": cmd_classify,
    "preprocess": cmd_preprocess,
    "gen": cmd_gen,
    "verify-paper": cmd_verify_paper,
    "draw": cmd_draw,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Parse `argv` and run the subcommand.

    :return: The exit code.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        config = CliConfig.from_namespace(ns)
    except UsageError as exc:
        err.write("error: {}\n".format(exc))
        return 2

    logging.basicConfig(format='[%(levelname)s] %(name)s: %(message)s', level=config.log_level, stream=err)
    logging.getLogger().setLevel(config.log_level)
    configure(strict_points=config.strict_points, jobs=config.jobs)
    try:
        return COMMANDS[config.subcommand](config, out, err)
    except (ValueError, KeyError, OSError, LemmaViolation) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write("error: {}\n".format(message))
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
