from __future__ import annotations
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from algorithms.csp_lib.instance import Instance

LOG = logging.getLogger(__name__)

Arc = Tuple[int, int]
SupportTable = Dict[Arc, Dict[int, FrozenSet[int]]]


@dataclass(frozen=True)
class TraceStep:
    """
    One revision that removed something: values of `target` that lost every support at `source`.
    """
    source: int
    target: int
    removed: FrozenSet[int]

    def format(self) -> str:
        return "{} -> {} : {{{}}}".format(self.source, self.target, ",".join(str(v) for v in sorted(self.removed)))


class Trace(Sequence[TraceStep]):
    """The ordered propagation steps of one AC run."""

    def __init__(self, steps: Iterable[TraceStep] = ()) -> None:
        self._steps: Tuple[TraceStep, ...] = tuple(steps)

    def __getitem__(self, index):
        return self._steps[index]

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self) -> Iterator[TraceStep]:
        return iter(self._steps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trace):
            return NotImplemented
        return self._steps == other._steps

    def __hash__(self) -> int:
        return hash(self._steps)

    def __repr__(self) -> str:
        return "Trace({})".format(list(self._steps))

    def format(self) -> str:
        """One line per step: `<source> -> <target> : {v1,v2,...}`."""
        return "".join(step.format() + "\n" for step in self._steps)

    def replay(self, instance: Instance) -> Instance:
        """Apply the recorded removals to `instance`."""
        domains: Dict[int, Set[int]] = {}
        for step in self._steps:
            current = domains.setdefault(step.target, set(instance.domain(step.target)))
            current -= step.removed
        return instance.restrict(domains)


def support_table(instance: Instance) -> SupportTable:
    """
    For every non-trivial constraint, in both orientations, the supports of each value:
    table[(x, y)][a] is the set of values of y compatible with (x, a).
    """
    table: SupportTable = {}
    for (x, y), pairs in instance.relations.items():
        forward: Dict[int, Set[int]] = {a: set() for a in instance.domain(x)}
        backward: Dict[int, Set[int]] = {b: set() for b in instance.domain(y)}
        for a, b in pairs:
            forward[a].add(b)
            backward[b].add(a)
        table[(x, y)] = {a: frozenset(bs) for a, bs in forward.items()}
        table[(y, x)] = {b: frozenset(as_) for b, as_ in backward.items()}
    return table


def revise(instance: Instance, x: int, y: int) -> FrozenSet[int]:
    """
    Values of y without a support in D(x) under R(x, y).

    :return: The set `ArcConsistency(instance).revise(x, y)` would remove.
    """
    if x == y:
        raise ValueError("revise needs two distinct variables, got {} twice".format(x))
    relation = instance.relation(x, y)
    if relation is None:
        return frozenset()
    supported = {b for _, b in relation}
    return frozenset(instance.domain(y) - supported)


class ArcConsistency:
    """
    AC-3 over working copies of the domains, recording a trace.

    The queue is FIFO and holds each arc at most once. After a revision of arc (x, y)
    changes D(y), the arcs (y, z) for every other neighbour z of y are queued in index
    order. Propagation stops at the first empty domain.

    Attributes:
    - instance (Instance): The instance being made arc consistent.
    - domains (Dict[int, Set[int]]): Working domains.
    - steps (List[TraceStep]): Revisions that removed something, in execution order.
    - wiped_out (bool): Some domain became empty.
    """
    def __init__(self, instance: Instance, supports: Optional[SupportTable] = None) -> None:
        self.instance = instance
        self.domains: Dict[int, Set[int]] = {x: set(instance.domain(x)) for x in instance.variables}
        self.steps: List[TraceStep] = []
        self.wiped_out = instance.has_empty_domain()
        self._supports = support_table(instance) if supports is None else supports

    def arcs(self) -> List[Arc]:
        """All directed pairs carrying a non-trivial constraint, in lexicographic order."""
        return [(x, y) for x in self.instance.variables for y in self.instance.neighbours(x)]

    def revise(self, x: int, y: int) -> FrozenSet[int]:
        table = self._supports.get((x, y))
        if table is None:
            return frozenset()
        supported: Set[int] = set()
        for a in self.domains[x]:
            supported |= table[a]
        removed = frozenset(self.domains[y] - supported)
        if removed:
            self.domains[y] -= removed
            self.steps.append(TraceStep(x, y, removed))
        return removed

    def propagate(self, arcs: Iterable[Arc]) -> bool:
        """
        Run the queue from the given arcs.

        :return: False when a domain became empty.
        """
        if self.wiped_out:
            return False
        queue = deque()
        queued = set()
        for arc in arcs:
            if arc not in queued:
                queue.append(arc)
                queued.add(arc)
        while queue:
            x, y = queue.popleft()
            queued.discard((x, y))
            if not self.revise(x, y):
                continue
            if not self.domains[y]:
                self.wiped_out = True
                return False
            for z in self.instance.neighbours(y):
                if z != x and (y, z) not in queued:
                    queue.append((y, z))
                    queued.add((y, z))
        return True

    def run(self, arcs: Optional[Iterable[Arc]] = None) -> Tuple[Instance, Trace]:
        self.propagate(self.arcs() if arcs is None else arcs)
        return self.result(), Trace(self.steps)

    def result(self) -> Instance:
        return self.instance.restrict(self.domains)


def enforce_ac(instance: Instance) -> Tuple[Instance, Trace]:
    """
    Make an instance arc consistent.

    :param instance: The instance.
    :return: The AC closure (possibly with an empty domain) and the trace of the run.
    """
    reduced, trace = ArcConsistency(instance).run()
    LOG.debug("enforce_ac: %d steps, wipeout=%s", len(trace), reduced.has_empty_domain())
    return reduced, trace
