from __future__ import annotations
from itertools import combinations
from typing import List, Optional, Set, Tuple

from algorithms.csp_lib.pattern import Pattern, PatternPoint, Sign

PointPair = Tuple[PatternPoint, PatternPoint]


def _is_mergeable(pattern: Pattern, p: PatternPoint, q: PatternPoint) -> bool:
    signs_p = dict(pattern.incident(p))
    for c, sign in pattern.incident(q):
        if c in signs_p and signs_p[c] is not sign:
            return False
    return True


def mergeable_pairs(pattern: Pattern) -> Set[PointPair]:
    """
    Same-variable point pairs (p, q), p before q, with no third point c such that pc and qc
    are labelled with opposite signs.
    """
    pairs = set()
    for var in pattern.variables:
        for a, b in combinations(pattern.points(var), 2):
            if _is_mergeable(pattern, (var, a), (var, b)):
                pairs.add(((var, a), (var, b)))
    return pairs


def _sorted_pairs(pattern: Pattern, pairs: Set[PointPair]) -> List[PointPair]:
    return sorted(pairs, key=lambda pq: (pattern.point_order(pq[0]), pattern.point_order(pq[1])))


def dangling_points(pattern: Pattern) -> Set[PatternPoint]:
    """Points with at most one positive edge and no negative edge."""
    dangling = set()
    for point in pattern.all_points():
        signs = [sign for _, sign in pattern.incident(point)]
        if Sign.NEGATIVE not in signs and signs.count(Sign.POSITIVE) <= 1:
            dangling.add(point)
    return dangling


def drop_dangling(pattern: Pattern) -> Pattern:
    """Remove every currently dangling point; variables are kept even when left empty."""
    for point in sorted(dangling_points(pattern), key=pattern.point_order, reverse=True):
        pattern = pattern.without_point(point)
    return pattern


def merge(pattern: Pattern, p: Optional[PatternPoint] = None, q: Optional[PatternPoint] = None) -> Pattern:
    """
    Merge two mergeable points; without arguments, the first mergeable pair in canonical order.
    """
    if p is None or q is None:
        pairs = _sorted_pairs(pattern, mergeable_pairs(pattern))
        if not pairs:
            raise ValueError("pattern has no mergeable pair")
        p, q = pairs[0]
    elif p[0] != q[0] or not _is_mergeable(pattern, p, q):
        raise ValueError("points {}.{} and {}.{} are not mergeable".format(*p, *q))
    return pattern.with_merged(p, q)


def reduce(pattern: Pattern) -> Pattern:
    """
    Reduce a pattern to an irreducible one: repeatedly delete the first dangling point, or
    when there is none merge the first mergeable pair. Variables left without points are
    dropped at the end.
    """
    name = pattern.name
    while True:
        dangling = dangling_points(pattern)
        if dangling:
            pattern = pattern.without_point(min(dangling, key=pattern.point_order))
            continue
        pairs = mergeable_pairs(pattern)
        if pairs:
            pattern = pattern.with_merged(*_sorted_pairs(pattern, pairs)[0])
            continue
        break
    points = {var: pattern.points(var) for var in pattern.variables if pattern.points(var)}
    return Pattern(points, pattern.edges(), name=name)


def is_monotone(pattern: Pattern) -> bool:
    """True iff every variable pair carrying a positive edge also carries a negative edge."""
    signs = {}
    for p, q, sign in pattern.edges():
        signs.setdefault(frozenset((p[0], q[0])), set()).add(sign)
    return all(Sign.NEGATIVE in s for s in signs.values() if Sign.POSITIVE in s)


def is_irreducible(pattern: Pattern) -> bool:
    return not mergeable_pairs(pattern) and not dangling_points(pattern)
