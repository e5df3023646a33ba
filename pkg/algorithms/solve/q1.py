from __future__ import annotations
import logging
from typing import FrozenSet, List

from algorithms.csp_lib.instance import Instance
from algorithms.propagate.singleton import singleton_probe, trace_sets
from algorithms.solve.generic import SacConstructor, reject_if_occurs, sac_closure
from algorithms.solve.lemmas import check_certificate, ensure, require
from algorithms.solve.report import SolveReport, SolveStats

LOG = logging.getLogger(__name__)

METHOD = "solve_q1"


def extraction_rounds(instance: Instance) -> List[FrozenSet[int]]:
    """
    Repeatedly probe the first point of a SAC instance and set aside the inner variables
    of its trace; when the probe propagates nothing the probed variable alone is set aside.

    :param instance: A SAC instance without empty domains.
    :return: The variables set aside by each round.
    """
    rounds = []
    current = instance
    while current.variables:
        x = current.variables[0]
        v = min(current.domain(x))
        probe = singleton_probe(current, x, v)
        require("probes of a SAC instance survive", [] if probe.survived else ["x{}={} wipes out".format(x, v)])
        _, inner = trace_sets(probe.trace, x)
        if not inner:
            LOG.warning("probe x%d=%d propagates nothing; fixing x%d", x, v, x)
            inner = frozenset({x})
        LOG.debug("Q1 extraction sets aside %s", sorted(inner))
        rounds.append(inner)
        current = current.project(set(current.variables) - inner)
    return rounds


def solve_q1(instance: Instance, construct: bool = True) -> SolveReport:
    """
    Decide an instance in which Q1 does not occur.

    The SAC closure decides; the extraction rounds are recorded in the report and the
    certificate comes from the greedy SAC constructor.
    """
    reject_if_occurs("Q1", instance)
    closed, probes = sac_closure(instance)
    if closed.has_empty_domain():
        return SolveReport.unsat(METHOD, SolveStats(probes=probes))
    rounds = tuple(extraction_rounds(closed))
    probes += len(rounds)
    if not construct:
        return SolveReport.sat(METHOD, None, SolveStats(probes=probes, rounds=rounds))
    constructor = SacConstructor(closed)
    solution = constructor.construct()
    stats = SolveStats(probes=probes + constructor.probes, rounds=rounds)
    if solution is None:
        ensure("Q1-free SAC instances are satisfiable", ["construction failed"])
    ensure("certificate", check_certificate(instance, solution))
    return SolveReport.sat(METHOD, solution, stats)
