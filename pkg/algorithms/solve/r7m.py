from __future__ import annotations
import logging
from typing import Dict, List, Optional, Tuple

from algorithms.catalog.catalog import get_pattern
from algorithms.csp_lib.instance import Assignment, Instance
from algorithms.match.occurrence import OccurrenceWitness, occurs
from algorithms.propagate.singleton import singleton_probe, trace_sets
from algorithms.solve.generic import SacConstructor, reject_if_occurs, sac_closure
from algorithms.solve.lemmas import check_certificate, check_single_constraint, ensure, require
from algorithms.solve.report import SolveReport, SolveStats

LOG = logging.getLogger(__name__)

METHOD = "solve_r7m"

# (meet variable, meet point, outer variables) in both branching patterns
_MEET_VAR = "m"
_MEET_POINT = ("m", "m3")
_OUTER = ("x", "y")


def branch_point(instance: Instance) -> Optional[Tuple[str, OccurrenceWitness]]:
    """
    The first occurrence of Mhat, else of V2.

    :return: (pattern name, witness), or None when neither occurs.
    """
    for name in ("Mhat", "V2"):
        witness = occurs(get_pattern(name).pattern, instance)
        if witness is not None:
            return name, witness
    return None


def stitch(reduced: Instance, block: List[int], fixed: Dict[int, int]) -> Optional[Dict[int, int]]:
    """
    Extend `fixed` over `block` greedily: variables constrained by an already fixed one go
    first, each takes its first value of the reduced domain compatible with every fixed
    neighbour.
    """
    fixed = dict(fixed)
    pending = list(block)
    while pending:
        linked = [p for p in pending if any(q in fixed for q in reduced.neighbours(p))]
        p = linked[0] if linked else pending[0]
        pending.remove(p)
        choices = [a for a in sorted(reduced.domain(p))
                   if all(reduced.allowed(p, a, q, fixed[q]) for q in reduced.neighbours(p) if q in fixed)]
        if not choices:
            return None
        fixed[p] = choices[0]
    return fixed


class MeetPointBranching:
    """
    Solution construction for SAC instances avoiding R7-.

    Branch on the meet point v of an Mhat occurrence centred at x (of a V2 occurrence when
    Mhat does not occur). In the reduced instance every constraint touching the probed
    variables is trivial except possibly the one between the two outer variables, so the
    untouched rest is solved first and the probed block is stitched on. Without Mhat or
    V2 the instance avoids T4 and the greedy SAC constructor finishes it.

    Attributes:
    - probes (int): Probes run.
    - rounds (List[FrozenSet[int]]): The probed block of every round.
    """
    def __init__(self) -> None:
        self.probes = 0
        self.rounds: List[frozenset] = []

    def construct(self, instance: Instance) -> Optional[Assignment]:
        if not instance.variables:
            return Assignment()
        found = branch_point(instance)
        if found is None:
            LOG.debug("neither Mhat nor V2 occurs; finishing with the SAC constructor")
            constructor = SacConstructor(instance)
            solution = constructor.construct()
            self.probes += constructor.probes
            return solution

        name, witness = found
        x, v = witness.point_map[_MEET_POINT]
        y, z = (witness.var_map[var] for var in _OUTER)
        probe = singleton_probe(instance, x, v)
        self.probes += 1
        require("probes of a SAC instance survive", [] if probe.survived else ["x{}={} wipes out".format(x, v)])
        touched, _ = trace_sets(probe.trace, x)
        reduced = probe.reduced
        require("one constraint around the {} meet point".format(name),
                check_single_constraint(reduced, touched, y, z))
        self.rounds.append(touched)
        LOG.debug("R7- round on %s at x%d=%d: block %s", name, x, v, sorted(touched))

        rest = self.construct(instance.project(set(instance.variables) - touched))
        if rest is None:
            return None
        solution = stitch(reduced, sorted(touched), rest)
        if solution is None:
            require("stitching the probed block", ["no compatible value in block {}".format(sorted(touched))])
            return None
        return Assignment(solution)


def solve_r7m(instance: Instance, construct: bool = True) -> SolveReport:
    """Decide an instance in which R7- does not occur, branching on meet points."""
    reject_if_occurs("R7-", instance)
    closed, probes = sac_closure(instance)
    if closed.has_empty_domain():
        return SolveReport.unsat(METHOD, SolveStats(probes=probes))
    if not construct:
        return SolveReport.sat(METHOD, None, SolveStats(probes=probes))
    builder = MeetPointBranching()
    solution = builder.construct(closed)
    stats = SolveStats(probes=probes + builder.probes, rounds=tuple(builder.rounds))
    if solution is None:
        ensure("R7--free SAC instances are satisfiable", ["construction failed"])
    ensure("certificate", check_certificate(instance, solution))
    return SolveReport.sat(METHOD, solution, stats)
