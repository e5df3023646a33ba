from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple, Union

from algorithms.config import get_settings
from algorithms.csp_lib.instance import Instance, Point
from algorithms.csp_lib.pattern import Pattern, PatternPoint, Sign

LOG = logging.getLogger(__name__)

Target = Union[Instance, Pattern]


@dataclass(frozen=True)
class OccurrenceWitness:
    """
    Certificate that a pattern occurs in a target.

    Attributes:
    - var_map (Dict[str, Hashable]): Injective map from pattern variables to target variables.
    - point_map (Dict[PatternPoint, Tuple]): Pattern point to target point; a target point is
      (variable, value) for an instance and (variable, point id) for a pattern.
    """
    var_map: Dict[str, Hashable] = field(default_factory=dict)
    point_map: Dict[PatternPoint, Tuple[Hashable, Hashable]] = field(default_factory=dict)

    def verify(self, pattern: Pattern, target: Target, strict_points: bool = False) -> bool:
        """Re-check the witness edge by edge against `target`."""
        adapter = _adapter(target)
        images = list(self.var_map.values())
        if len(set(images)) != len(images) or set(self.var_map) != set(pattern.variables):
            return False
        for point in pattern.all_points():
            image = self.point_map.get(point)
            if image is None or image[0] != self.var_map[point[0]]:
                return False
            if image[1] not in adapter.points(image[0]):
                return False
        if strict_points:
            for var in pattern.variables:
                images = [self.point_map[(var, pid)] for pid in pattern.points(var)]
                if len(set(images)) != len(images):
                    return False
        for p, q, sign in pattern.edges():
            if adapter.sign(self.point_map[p], self.point_map[q]) is not sign:
                return False
        return True

    def format(self) -> str:
        lines = []
        for (var, pid), (tvar, tpoint) in self.point_map.items():
            if isinstance(tvar, int):
                lines.append("{}.{} -> x{}={}".format(var, pid, tvar, tpoint))
            else:
                lines.append("{}.{} -> {}.{}".format(var, pid, tvar, tpoint))
        return "".join(line + "\n" for line in lines)


class _InstanceTarget:
    def __init__(self, instance: Instance) -> None:
        self.instance = instance
        self.variables = list(instance.variables)
        self._points = {x: sorted(instance.domain(x)) for x in instance.variables}

    def points(self, var) -> List[int]:
        return self._points[var]

    def sign(self, p: Point, q: Point) -> Optional[Sign]:
        allowed = self.instance.allowed(p[0], p[1], q[0], q[1])
        return Sign.POSITIVE if allowed else Sign.NEGATIVE

    def can_host(self, u, v, needed: FrozenSet[Sign]) -> bool:
        relation = self.instance.relation(u, v)
        if Sign.NEGATIVE in needed and relation is None:
            return False
        if Sign.POSITIVE in needed and relation is not None and not relation:
            return False
        return True


class _PatternTarget:
    def __init__(self, pattern: Pattern) -> None:
        self.pattern = pattern
        self.variables = list(pattern.variables)

    def points(self, var) -> Sequence[str]:
        return self.pattern.points(var)

    def sign(self, p: PatternPoint, q: PatternPoint) -> Optional[Sign]:
        return self.pattern.sign(p, q)

    def can_host(self, u, v, needed: FrozenSet[Sign]) -> bool:
        return needed <= self.pattern.signs_between(u, v)


def _adapter(target: Target):
    if isinstance(target, Instance):
        return _InstanceTarget(target)
    return _PatternTarget(target)


class PatternMatcher:
    """
    Exhaustive backtracking search for occurrences of a pattern.

    Pattern variables are tried by descending point count (ties: variables sharing an
    edge with an already ordered variable first, then declaration order); target
    variables in their own order; points in value order. The first witness found is
    returned, so results are deterministic.

    Attributes:
    - pattern (Pattern): The pattern searched for.
    - strict_points (bool): Require distinct images for distinct points of one variable.
    """
    def __init__(self, pattern: Pattern, strict_points: Optional[bool] = None) -> None:
        self.pattern = pattern
        self.strict_points = get_settings().strict_points if strict_points is None else strict_points
        self.nodes = 0

    def _variable_order(self, first: Optional[str] = None) -> List[str]:
        pattern = self.pattern
        linked = {var: set() for var in pattern.variables}
        for p, q, _ in pattern.edges():
            linked[p[0]].add(q[0])
            linked[q[0]].add(p[0])
        position = {var: i for i, var in enumerate(pattern.variables)}
        remaining = list(pattern.variables)
        order: List[str] = []
        if first is not None:
            order.append(first)
            remaining.remove(first)
        while remaining:
            placed = set(order)
            best = min(remaining, key=lambda v: (-len(pattern.points(v)),
                                                 not (linked[v] & placed),
                                                 position[v]))
            order.append(best)
            remaining.remove(best)
        return order

    def find_in(self, instance: Instance) -> Optional[OccurrenceWitness]:
        return self._search(_InstanceTarget(instance))

    def find_at(self, anchor: PatternPoint, target: Point, instance: Instance) -> Optional[OccurrenceWitness]:
        if anchor not in self.pattern:
            raise ValueError("anchor {}.{} is not a point of the pattern".format(*anchor))
        x, v = target
        if v not in instance.domain(x):
            raise ValueError("value {} is not in the domain of variable {}".format(v, x))
        return self._search(_InstanceTarget(instance), anchor, target)

    def find_in_pattern(self, other: Pattern) -> Optional[OccurrenceWitness]:
        return self._search(_PatternTarget(other))

    def _search(self, target, anchor: Optional[PatternPoint] = None,
                anchor_image: Optional[Tuple[Any, Any]] = None) -> Optional[OccurrenceWitness]:
        pattern = self.pattern
        order = self._variable_order(anchor[0] if anchor else None)
        rank = {var: i for i, var in enumerate(order)}

        # for each point, the labelled edges towards points of earlier variables
        back_edges: Dict[PatternPoint, List[Tuple[PatternPoint, Sign]]] = {}
        needed: Dict[str, Dict[str, set]] = {var: {} for var in order}
        for p, q, sign in pattern.edges():
            if rank[p[0]] < rank[q[0]]:
                p, q = q, p
            back_edges.setdefault(p, []).append((q, sign))
            needed[p[0]].setdefault(q[0], set()).add(sign)

        var_map: Dict[str, Any] = {}
        point_map: Dict[PatternPoint, Tuple[Any, Any]] = {}
        used_vars = set()

        def place_points(i: int, var: str, j: int) -> bool:
            ids = pattern.points(var)
            if j == len(ids):
                return place_var(i + 1)
            point = (var, ids[j])
            tvar = var_map[var]
            if point == anchor:
                candidates = [anchor_image[1]]
            else:
                candidates = target.points(tvar)
            taken = {point_map[(var, pid)][1] for pid in ids[:j]} if self.strict_points else ()
            for value in candidates:
                if value in taken:
                    continue
                self.nodes += 1
                image = (tvar, value)
                if all(target.sign(image, point_map[q]) is sign for q, sign in back_edges.get(point, ())):
                    point_map[point] = image
                    if place_points(i, var, j + 1):
                        return True
                    del point_map[point]
            return False

        def place_var(i: int) -> bool:
            if i == len(order):
                return True
            var = order[i]
            if anchor is not None and var == anchor[0]:
                candidates = [anchor_image[0]]
            else:
                candidates = target.variables
            for tvar in candidates:
                if tvar in used_vars:
                    continue
                if not all(target.can_host(tvar, var_map[other], frozenset(signs))
                           for other, signs in needed[var].items()):
                    continue
                var_map[var] = tvar
                used_vars.add(tvar)
                if place_points(i, var, 0):
                    return True
                used_vars.discard(tvar)
                del var_map[var]
            return False

        if not place_var(0):
            return None
        ordered_points = {p: point_map[p] for p in pattern.all_points()}
        ordered_vars = {var: var_map[var] for var in pattern.variables}
        return OccurrenceWitness(ordered_vars, ordered_points)


def occurs(pattern: Pattern, instance: Instance,
           strict_points: Optional[bool] = None) -> Optional[OccurrenceWitness]:
    """
    Search for an occurrence of a pattern in an instance.

    :param pattern: The pattern.
    :param instance: The instance.
    :param strict_points: Injective on points within a variable; defaults to the process setting.
    :return: The first witness in canonical search order, or None.
    """
    return PatternMatcher(pattern, strict_points).find_in(instance)


def occurs_at(pattern: Pattern, anchor: PatternPoint, target: Point, instance: Instance,
              strict_points: Optional[bool] = None) -> Optional[OccurrenceWitness]:
    """Occurrence search constrained to send `anchor` onto the instance point `target`."""
    return PatternMatcher(pattern, strict_points).find_at(anchor, target, instance)


def occurs_in_pattern(pattern: Pattern, other: Pattern,
                      strict_points: Optional[bool] = None) -> Optional[OccurrenceWitness]:
    """Search for `pattern` inside `other`; unlabelled pairs of `other` host no edge."""
    return PatternMatcher(pattern, strict_points).find_in_pattern(other)


def find_all_at(pattern: Pattern, anchor: PatternPoint, instance: Instance,
                strict_points: Optional[bool] = None) -> List[Point]:
    """Instance points at which `pattern` occurs with `anchor` sent onto them."""
    matcher = PatternMatcher(pattern, strict_points)
    return [point for point in instance.points() if matcher.find_at(anchor, point, instance) is not None]
