from __future__ import annotations
import logging
from typing import Tuple

from algorithms.csp_lib.instance import Instance
from algorithms.solve.generic import SacConstructor, reject_if_occurs, sac_closure
from algorithms.solve.lemmas import check_certificate, check_pattern_free, ensure, require
from algorithms.solve.report import SolveReport, SolveStats
from algorithms.transform.substitution import ns_eliminate

LOG = logging.getLogger(__name__)

METHOD = "solve_t3"


def sac_ns_closure(instance: Instance) -> Tuple[Instance, int]:
    """
    Alternate SAC enforcement and neighbourhood substitution until neither removes a value.

    :return: The reduced instance and the probes spent.
    """
    current, probes = sac_closure(instance)
    while not current.has_empty_domain():
        reduced, log = ns_eliminate(current)
        if not len(log):
            break
        current, more = sac_closure(reduced)
        probes += more
    return current, probes


def solve_t3(instance: Instance, construct: bool = True) -> SolveReport:
    """
    Decide an instance in which T3 does not occur.

    After SAC and neighbourhood substitution reach a common fixpoint, T4 no longer occurs,
    so the greedy SAC constructor applies.
    """
    reject_if_occurs("T3", instance)
    reduced, probes = sac_ns_closure(instance)
    if reduced.has_empty_domain():
        return SolveReport.unsat(METHOD, SolveStats(probes=probes))
    require("T4 absent once SAC and NS-free", check_pattern_free(reduced, "T4"))
    if not construct:
        return SolveReport.sat(METHOD, None, SolveStats(probes=probes))
    constructor = SacConstructor(reduced)
    solution = constructor.construct()
    stats = SolveStats(probes=probes + constructor.probes)
    if solution is None:
        ensure("T3-free SAC instances are satisfiable", ["construction failed"])
    ensure("certificate", check_certificate(instance, solution))
    return SolveReport.sat(METHOD, solution, stats)
