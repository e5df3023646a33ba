from __future__ import annotations
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from algorithms.config import get_settings
from algorithms.csp_lib.instance import Instance, Point
from algorithms.propagate.arc_consistency import ArcConsistency, SupportTable, Trace, enforce_ac, support_table

LOG = logging.getLogger(__name__)


class ProbeOutcome(Enum):
    WIPEOUT = "wipeout"
    SURVIVED = "survived"


@dataclass(frozen=True)
class ProbeResult:
    """
    Result of assigning x := v and propagating.

    Attributes:
    - outcome (ProbeOutcome): Whether some domain became empty.
    - reduced (Optional[Instance]): The arc consistent instance I_xv, present iff survived.
    - trace (Trace): Propagation steps, all caused by the assignment.
    """
    outcome: ProbeOutcome
    reduced: Optional[Instance]
    trace: Trace

    @property
    def survived(self) -> bool:
        return self.outcome is ProbeOutcome.SURVIVED


def singleton_probe(instance: Instance, x: int, v: int, supports: Optional[SupportTable] = None) -> ProbeResult:
    """
    Reduce D(x) to {v} and run AC from the arcs leaving x.

    :param instance: An arc consistent instance.
    :param x: The probed variable.
    :param v: A value of D(x).
    :param supports: Support table of `instance`, when the caller already has one.
    :return: The probe result.
    """
    if v not in instance.domain(x):
        raise ValueError("value {} is not in the domain of variable {}".format(v, x))
    ac = ArcConsistency(instance, supports)
    ac.domains[x] = {v}
    survived = ac.propagate((x, y) for y in instance.neighbours(x))
    trace = Trace(ac.steps)
    if not survived:
        return ProbeResult(ProbeOutcome.WIPEOUT, None, trace)
    return ProbeResult(ProbeOutcome.SURVIVED, ac.result(), trace)


class SingletonArcConsistency:
    """
    SAC-1: probe every point in canonical order, delete the points whose probe wipes out,
    re-establish arc consistency and rescan, until a full pass removes nothing.

    With more than one job, each round probes every point of a snapshot on a thread pool
    and deletes all wiped-out points between rounds. Both schedules reach the same
    fixpoint because the SAC closure is unique.

    Attributes:
    - instance (Instance): The input instance.
    - jobs (int): Worker threads.
    - probe_count (int): Probes run so far.
    """
    def __init__(self, instance: Instance, jobs: Optional[int] = None) -> None:
        self.instance = instance
        self.jobs = get_settings().jobs if jobs is None else jobs
        self.probe_count = 0

    def _first_wipeout(self, current: Instance) -> Optional[Point]:
        supports = support_table(current)
        for x, v in current.points():
            self.probe_count += 1
            if not singleton_probe(current, x, v, supports).survived:
                return x, v
        return None

    def _wipeouts(self, current: Instance, pool: ThreadPoolExecutor) -> List[Point]:
        supports = support_table(current)
        points = current.points()
        self.probe_count += len(points)
        outcomes = pool.map(lambda p: singleton_probe(current, p[0], p[1], supports).survived, points)
        return [p for p, survived in zip(points, outcomes) if not survived]

    def run(self) -> Instance:
        current, _ = enforce_ac(self.instance)
        if current.has_empty_domain():
            return current
        if self.jobs > 1:
            return self._run_rounds(current)
        while True:
            point = self._first_wipeout(current)
            if point is None:
                break
            LOG.debug("SAC removes x%d=%d", *point)
            current, _ = enforce_ac(current.remove_value(*point))
            if current.has_empty_domain():
                break
        return current

    def _run_rounds(self, current: Instance) -> Instance:
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            while True:
                points = self._wipeouts(current, pool)
                if not points:
                    return current
                LOG.debug("SAC round removes %d points", len(points))
                domains = {}
                for x, v in points:
                    domains.setdefault(x, set(current.domain(x))).discard(v)
                current, _ = enforce_ac(current.restrict(domains))
                if current.has_empty_domain():
                    return current


def enforce_sac(instance: Instance, jobs: Optional[int] = None) -> Instance:
    """
    Greatest singleton arc consistent sub-instance.

    :return: A SAC instance, or an instance with an empty domain.
    """
    return SingletonArcConsistency(instance, jobs).run()


def is_sac(instance: Instance) -> bool:
    if instance.has_empty_domain():
        return False
    _, trace = enforce_ac(instance)
    if len(trace):
        return False
    supports = support_table(instance)
    return all(singleton_probe(instance, x, v, supports).survived for x, v in instance.points())


def trace_sets(trace: Trace, x: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    Variables touched by a probe at x and its inner variables.

    :return: (S, S_inner): S is x plus every step target; S_inner is every step source.
    """
    touched = {x} | {step.target for step in trace}
    inner = {step.source for step in trace}
    return frozenset(touched), frozenset(inner)
