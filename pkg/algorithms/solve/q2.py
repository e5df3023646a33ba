from __future__ import annotations
import logging
from typing import Dict, List, Optional

import networkx as nx

from algorithms.csp_lib.errors import PreconditionError
from algorithms.csp_lib.instance import Assignment, Instance, constraint_graph
from algorithms.propagate.singleton import singleton_probe
from algorithms.solve.generic import reject_if_occurs, sac_closure, solve_acyclic
from algorithms.solve.lemmas import check_certificate, check_vminus_degrees, ensure, require
from algorithms.solve.report import SolveReport, SolveStats
from algorithms.transform.btp import btp_merge_fixpoint

LOG = logging.getLogger(__name__)

METHOD = "solve_q2"


def _conflicting_variable(instance: Instance, x: int, a: int, free: List[int]) -> Optional[int]:
    """First free variable holding a value incompatible with (x, a)."""
    for y in instance.neighbours(x):
        if y in free and len(instance.supports(x, a, y)) < len(instance.domain(y)):
            return y
    return None


class ChainBuilder:
    """
    Solution construction for SAC instances in which V- occurs only at variables of
    degree at most two.

    From a variable of degree three or more, assign its first value and, while the last
    assigned value conflicts with some value of a free variable, give that variable the
    first support of the last value. The chain is compatible with every value of every
    other variable, so it is fixed and removed. Once every degree is at most two, paths
    are solved as forests and each cycle is cut by probing its first variable.

    Attributes:
    - instance (Instance): The input instance.
    - probes (int): Probes run on cycles.
    - chains (List[List[int]]): Variables of each chain, in assignment order.
    """
    def __init__(self, instance: Instance) -> None:
        self.instance = instance
        self.probes = 0
        self.chains: List[List[int]] = []

    def _chain(self, current: Instance, start: int) -> Dict[int, int]:
        values = {start: min(current.domain(start))}
        order = [start]
        free = [y for y in current.variables if y != start]
        last = start
        while True:
            nxt = _conflicting_variable(current, last, values[last], free)
            if nxt is None:
                break
            supports = current.supports(last, values[last], nxt)
            if not supports:
                raise PreconditionError("x{}={} has no support at x{}; instance is not arc consistent"
                                        .format(last, values[last], nxt))
            values[nxt] = supports[0]
            order.append(nxt)
            free.remove(nxt)
            last = nxt
        self.chains.append(order)
        LOG.debug("independent chain %s", order)
        return values

    def _low_degree(self, current: Instance) -> Dict[int, int]:
        graph = constraint_graph(current)
        solution: Dict[int, int] = {}
        for component in sorted(nx.connected_components(graph), key=min):
            part = current.project(component)
            sub = graph.subgraph(component)
            if nx.is_forest(sub):
                solution.update(solve_acyclic(part).certificate)
                continue
            cut = min(component)
            value = min(part.domain(cut))
            probe = singleton_probe(part, cut, value)
            self.probes += 1
            if not probe.survived:
                raise PreconditionError("probe x{}={} wipes out; instance is not SAC".format(cut, value))
            path = probe.reduced.project(component - {cut})
            solution[cut] = value
            solution.update(solve_acyclic(path).certificate)
        return solution

    def construct(self) -> Assignment:
        current = self.instance
        solution: Dict[int, int] = {}
        while True:
            heavy = [x for x in current.variables if current.degree(x) >= 3]
            if not heavy:
                break
            chain = self._chain(current, heavy[0])
            solution.update(chain)
            current = current.project(set(current.variables) - set(chain))
        solution.update(self._low_degree(current))
        return Assignment(solution)


def vminus_construct(instance: Instance) -> SolveReport:
    """
    Build a solution of a SAC instance in which V- occurs only at degree-2 variables.

    :raises PreconditionError: V- occurs at a variable of degree three or more.
    """
    if instance.has_empty_domain():
        raise PreconditionError("vminus_construct needs non-empty domains")
    violations = check_vminus_degrees(instance)
    if violations:
        raise PreconditionError("; ".join(violations))
    builder = ChainBuilder(instance)
    solution = builder.construct()
    return SolveReport.sat("vminus_construct", solution, SolveStats(probes=builder.probes))


def solve_q2(instance: Instance, construct: bool = True) -> SolveReport:
    """
    Decide an instance in which Q2 does not occur.

    The certificate merges BTP-mergeable values until none is left, builds chains on the
    merged instance and splits the merged values back.
    """
    reject_if_occurs("Q2", instance)
    closed, probes = sac_closure(instance)
    if closed.has_empty_domain():
        return SolveReport.unsat(METHOD, SolveStats(probes=probes))
    if not construct:
        return SolveReport.sat(METHOD, None, SolveStats(probes=probes))
    merged, log = btp_merge_fixpoint(closed)
    LOG.debug("BTP merging performed %d merges", len(log))
    require("V- only at degree-2 variables after BTP merging", check_vminus_degrees(merged))
    chained = vminus_construct(merged)
    solution = log.expand(closed, chained.certificate)
    ensure("certificate", check_certificate(instance, solution))
    return SolveReport.sat(METHOD, solution, SolveStats(probes=probes + chained.stats.probes))
