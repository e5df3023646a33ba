from __future__ import annotations
import logging
from typing import Optional

from algorithms.csp_lib.instance import Assignment, Instance
from algorithms.propagate.arc_consistency import ArcConsistency, enforce_ac
from algorithms.solve.report import SolveReport, SolveStats

LOG = logging.getLogger(__name__)


class OracleSolver:
    """
    Complete backtracking search maintaining arc consistency.

    The branching variable is the unfixed one with the smallest domain (ties by index);
    values are tried in increasing order; after each choice AC runs from the arcs
    leaving the assigned variable.

    Attributes:
    - instance (Instance): The instance to decide.
    - nodes (int): Search nodes visited.
    """
    METHOD = "oracle"

    def __init__(self, instance: Instance) -> None:
        self.instance = instance
        self.nodes = 0

    def solve(self) -> SolveReport:
        start, _ = enforce_ac(self.instance)
        solution = self._search(start)
        stats = SolveStats(nodes=self.nodes)
        LOG.debug("oracle visited %d nodes", self.nodes)
        if solution is None:
            return SolveReport.unsat(self.METHOD, stats)
        return SolveReport.sat(self.METHOD, solution, stats)

    def _branching_variable(self, current: Instance) -> Optional[int]:
        open_vars = [x for x in current.variables if len(current.domain(x)) > 1]
        if not open_vars:
            return None
        return min(open_vars, key=lambda x: (len(current.domain(x)), x))

    def _search(self, current: Instance) -> Optional[Assignment]:
        self.nodes += 1
        if current.has_empty_domain():
            return None
        x = self._branching_variable(current)
        if x is None:
            # singleton domains that are arc consistent satisfy every constraint
            return Assignment({y: next(iter(current.domain(y))) for y in current.variables})
        for v in sorted(current.domain(x)):
            ac = ArcConsistency(current)
            ac.domains[x] = {v}
            if not ac.propagate((x, y) for y in current.neighbours(x)):
                continue
            solution = self._search(ac.result())
            if solution is not None:
                return solution
        return None


def oracle_solve(instance: Instance) -> SolveReport:
    """
    Decide an instance exactly.

    :param instance: Any instance.
    :return: sat with a solution, or unsat.
    """
    return OracleSolver(instance).solve()
