from __future__ import annotations
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

PatternPoint = Tuple[str, str]
PointRef = Union[str, PatternPoint]


class Sign(Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"

    def __str__(self) -> str:
        return self.value


class Pattern:
    """
    A partial binary CSP: points grouped by variable and a partial labelling of
    cross-variable point pairs as positive (compatible) or negative (incompatible).

    A point is the pair (variable id, point id). Variables keep the order they were
    declared in and points keep their order within a variable; together these give the
    canonical point order used for every scan and tie-break.

    Attributes:
    - variables (Tuple[str, ...]): Variable ids in declaration order.
    - name (Optional[str]): Display name, not part of equality.
    """
    def __init__(self,
                 points: Mapping[str, Sequence[str]],
                 edges: Iterable[Tuple[PatternPoint, PatternPoint, Sign]] = (),
                 name: Optional[str] = None) -> None:
        self.name = name
        self.variables: Tuple[str, ...] = tuple(points)
        self._points: Dict[str, Tuple[str, ...]] = {}
        self._order: Dict[PatternPoint, int] = {}
        for var in self.variables:
            ids = tuple(points[var])
            if len(set(ids)) != len(ids):
                raise ValueError("duplicate point in variable {}".format(var))
            self._points[var] = ids
            for pid in ids:
                self._order[(var, pid)] = len(self._order)

        self._edges: Dict[FrozenSet[PatternPoint], Sign] = {}
        for p, q, sign in edges:
            self._add_edge(p, q, sign)

    @classmethod
    def build(cls,
              points: Mapping[str, Sequence[str]],
              pos: Iterable[Tuple[PointRef, PointRef]] = (),
              neg: Iterable[Tuple[PointRef, PointRef]] = (),
              name: Optional[str] = None) -> Pattern:
        """
        Convenience constructor where an endpoint may be given by its point id alone
        when that id is unique across the pattern.
        """
        owner: Dict[str, List[str]] = {}
        for var, ids in points.items():
            for pid in ids:
                owner.setdefault(pid, []).append(var)

        def resolve(ref: PointRef) -> PatternPoint:
            if isinstance(ref, tuple):
                return ref
            if len(owner.get(ref, [])) != 1:
                raise ValueError("point id {} is unknown or ambiguous".format(ref))
            return (owner[ref][0], ref)

        edges = [(resolve(p), resolve(q), Sign.POSITIVE) for p, q in pos]
        edges += [(resolve(p), resolve(q), Sign.NEGATIVE) for p, q in neg]
        return cls(points, edges, name=name)

    def _add_edge(self, p: PatternPoint, q: PatternPoint, sign: Sign) -> None:
        for point in (p, q):
            if point not in self._order:
                raise ValueError("unknown point {}.{}".format(*point))
        if p[0] == q[0]:
            raise ValueError("edge {}.{} - {}.{} lies within one variable".format(*p, *q))
        key = frozenset((p, q))
        previous = self._edges.get(key)
        if previous is not None and previous is not sign:
            raise ValueError("conflicting signs on {}.{} - {}.{}".format(*p, *q))
        self._edges[key] = sign

    # -- queries ----------------------------------------------------------------

    def points(self, var: str) -> Tuple[str, ...]:
        return self._points[var]

    def all_points(self) -> List[PatternPoint]:
        return sorted(self._order, key=self._order.__getitem__)

    def point_order(self, point: PatternPoint) -> int:
        return self._order[point]

    def __contains__(self, point: PatternPoint) -> bool:
        return point in self._order

    @property
    def n_points(self) -> int:
        return len(self._order)

    def sign(self, p: PatternPoint, q: PatternPoint) -> Optional[Sign]:
        return self._edges.get(frozenset((p, q)))

    def edges(self) -> List[Tuple[PatternPoint, PatternPoint, Sign]]:
        """Labelled pairs (p, q, sign) with p before q, in canonical order."""
        result = []
        for key, sign in self._edges.items():
            p, q = sorted(key, key=self._order.__getitem__)
            result.append((p, q, sign))
        result.sort(key=lambda e: (self._order[e[0]], self._order[e[1]]))
        return result

    def incident(self, p: PatternPoint) -> List[Tuple[PatternPoint, Sign]]:
        result = [(q, sign) for key, sign in self._edges.items() if p in key for q in key if q != p]
        result.sort(key=lambda e: self._order[e[0]])
        return result

    def signs_between(self, u: str, v: str) -> FrozenSet[Sign]:
        """Signs used on edges between variables u and v."""
        return frozenset(sign for key, sign in self._edges.items()
                         if {p[0] for p in key} == {u, v})

    # -- derived patterns -------------------------------------------------------

    def without_point(self, point: PatternPoint) -> Pattern:
        if point not in self._order:
            raise ValueError("unknown point {}.{}".format(*point))
        points = {var: [pid for pid in ids if (var, pid) != point] for var, ids in self._points.items()}
        edges = [(p, q, s) for p, q, s in self.edges() if point not in (p, q)]
        return Pattern(points, edges, name=self.name)

    def with_merged(self, p: PatternPoint, q: PatternPoint) -> Pattern:
        """
        Fuse two points of the same variable. The point earlier in canonical order survives
        and carries the edges of both.
        """
        if p[0] != q[0] or p == q:
            raise ValueError("only two distinct points of one variable can be merged")
        keep, drop = sorted((p, q), key=self._order.__getitem__)
        points = {var: [pid for pid in ids if (var, pid) != drop] for var, ids in self._points.items()}
        edges = []
        for a, b, sign in self.edges():
            edges.append((keep if a == drop else a, keep if b == drop else b, sign))
        return Pattern(points, edges, name=self.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return (self.variables == other.variables
                and self._points == other._points
                and self._edges == other._edges)

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self._points.items()), frozenset(self._edges.items())))

    def __repr__(self) -> str:
        label = self.name or "Pattern"
        return "{}(vars={}, points={}, edges={})".format(
            label, len(self.variables), self.n_points, len(self._edges))
