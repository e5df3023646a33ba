from __future__ import annotations
import logging
from typing import List, Set

from algorithms.csp_lib.instance import Assignment, Instance
from algorithms.propagate.singleton import singleton_probe, trace_sets
from algorithms.solve.generic import reject_if_occurs, sac_closure, solve_acyclic
from algorithms.solve.lemmas import check_certificate, check_star_partition, ensure, require
from algorithms.solve.report import SolveReport, SolveStats
from algorithms.transform.substitution import ns_eliminate

LOG = logging.getLogger(__name__)

METHOD = "solve_r8"


class StarDecomposition:
    """
    Solution construction for SAC instances avoiding R8.

    Probe the first point (x, v) and remove neighbourhood-substitutable values from the
    reduced instance. The touched variables plus their non-trivial neighbours form a
    block whose constraints are stars with no constraint leaving the block; it is solved
    as a forest. The other variables were not touched, so the rest is a projection of the
    input and is solved the same way; its solution is pushed across the NS removals
    before both parts are joined.

    Attributes:
    - probes (int): Probes run.
    - rounds (List[FrozenSet[int]]): The block of every round.
    """
    def __init__(self) -> None:
        self.probes = 0
        self.rounds: List[frozenset] = []

    def construct(self, instance: Instance) -> Assignment:
        if not instance.variables:
            return Assignment()
        x = instance.variables[0]
        v = min(instance.domain(x))
        probe = singleton_probe(instance, x, v)
        self.probes += 1
        require("probes of a SAC instance survive", [] if probe.survived else ["x{}={} wipes out".format(x, v)])
        touched, _ = trace_sets(probe.trace, x)
        reduced, log = ns_eliminate(probe.reduced)

        block: Set[int] = set(touched)
        for y in touched:
            block.update(reduced.neighbours(y))
        require("stars around the probe", check_star_partition(reduced, block))
        self.rounds.append(frozenset(block))
        LOG.debug("R8 round at x%d=%d: block %s", x, v, sorted(block))

        local = solve_acyclic(reduced.project(block)).certificate
        rest = instance.project(set(instance.variables) - block)
        pushed = log.substitute(self.construct(rest))
        return local.extend(pushed)


def solve_r8(instance: Instance, construct: bool = True) -> SolveReport:
    """Decide an instance in which R8 does not occur, building a solution by star decomposition."""
    reject_if_occurs("R8", instance)
    closed, probes = sac_closure(instance)
    if closed.has_empty_domain():
        return SolveReport.unsat(METHOD, SolveStats(probes=probes))
    if not construct:
        return SolveReport.sat(METHOD, None, SolveStats(probes=probes))
    builder = StarDecomposition()
    solution = builder.construct(closed)
    ensure("certificate", check_certificate(instance, solution))
    stats = SolveStats(probes=probes + builder.probes, rounds=tuple(builder.rounds))
    return SolveReport.sat(METHOD, solution, stats)
