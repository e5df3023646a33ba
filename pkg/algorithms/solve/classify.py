from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, List, Optional

from algorithms.catalog.catalog import SOLVED_PATTERNS, list_patterns
from algorithms.csp_lib.instance import Instance
from algorithms.match.occurrence import OccurrenceWitness, occurs
from algorithms.solve.generic import solve_by_sac
from algorithms.solve.oracle import oracle_solve
from algorithms.solve.q1 import solve_q1
from algorithms.solve.q2 import solve_q2
from algorithms.solve.r5 import solve_r5
from algorithms.solve.r7m import solve_r7m
from algorithms.solve.r8 import solve_r8
from algorithms.solve.report import SolveReport
from algorithms.solve.t3 import solve_t3

LOG = logging.getLogger(__name__)

Solver = Callable[..., SolveReport]

CLASS_SOLVERS: Dict[str, Solver] = {
    "Q1": solve_q1,
    "R8": solve_r8,
    "R7-": solve_r7m,
    "Q2": solve_q2,
    "R5": solve_r5,
    "T3": solve_t3,
    "T2": partial(solve_by_sac, pattern="T2"),
    "T4": partial(solve_by_sac, pattern="T4"),
    "T5": partial(solve_by_sac, pattern="T5"),
}


@dataclass(frozen=True)
class ClassificationReport:
    """
    Which catalog patterns occur in an instance.

    Attributes:
    - occurrences (Dict[str, Optional[OccurrenceWitness]]): Catalog name to its first
      witness, None when the pattern does not occur. Catalog order.
    - applicable (List[str]): Patterns with a solver whose class holds, in dispatch order.
    """
    occurrences: Dict[str, Optional[OccurrenceWitness]]
    applicable: List[str]

    def present(self, name: str) -> bool:
        return self.occurrences[name] is not None

    def format(self) -> str:
        lines = ["{:<8} {}".format(name, "present" if witness is not None else "absent")
                 for name, witness in self.occurrences.items()]
        lines.append("solvers: {}".format(" ".join(self.applicable) if self.applicable else "oracle"))
        return "".join(line + "\n" for line in lines)


def classify(instance: Instance) -> ClassificationReport:
    """Search every catalog pattern in `instance` and list the class solvers that apply."""
    occurrences = {}
    for entry in list_patterns():
        strict = True if entry.strict_only else None
        occurrences[entry.name] = occurs(entry.pattern, instance, strict)
    applicable = [name for name in SOLVED_PATTERNS if occurrences[name] is None]
    LOG.debug("applicable solvers: %s", applicable)
    return ClassificationReport(occurrences, applicable)


def auto_solve(instance: Instance, construct: bool = True) -> SolveReport:
    """
    Run the first class solver whose pattern is absent, in the order
    Q1, R8, R7-, Q2, R5, T3, T2, T4, T5; fall back to the oracle.
    """
    report = classify(instance)
    if report.applicable:
        name = report.applicable[0]
        LOG.info("instance avoids %s; using its class solver", name)
        return CLASS_SOLVERS[name](instance, construct=construct)
    LOG.warning("no solved class applies; falling back to the oracle")
    return oracle_solve(instance)
