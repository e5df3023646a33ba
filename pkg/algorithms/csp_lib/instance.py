from __future__ import annotations
from collections.abc import Mapping as MappingABC
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from algorithms.config import get_settings

Pair = Tuple[int, int]
Point = Tuple[int, int]
DomainSpec = Union[Sequence[Iterable[int]], Mapping[int, Iterable[int]]]


class Instance:
    """
    A binary CSP instance.

    Variables are integer ids kept in increasing order. Relations are stored once per
    unordered pair under the key (x, y) with x < y, as the set of allowed value pairs
    restricted to the current domains. A pair with no stored entry is a trivial
    constraint; entries that contain the full domain product are dropped on construction,
    so "stored" and "non-trivial" coincide.

    Attributes:
    - variables (Tuple[int, ...]): Variable ids in increasing order.
    """
    __slots__ = ("variables", "_domains", "_relations", "_adjacency", "_names")

    def __init__(self,
                 domains: DomainSpec,
                 relations: Optional[Mapping[Pair, Iterable[Pair]]] = None,
                 names: Optional[Union[Sequence[Optional[str]], Mapping[int, str]]] = None) -> None:
        if isinstance(domains, MappingABC):
            items = sorted((int(x), frozenset(d)) for x, d in domains.items())
        else:
            items = [(x, frozenset(d)) for x, d in enumerate(domains)]
        doms = dict(items)

        rels: Dict[Pair, FrozenSet[Pair]] = {}
        for (x, y), pairs in (relations or {}).items():
            if x == y:
                raise ValueError("self-loop constraint on variable {}".format(x))
            if x not in doms or y not in doms:
                raise KeyError("unknown variable in constraint ({}, {})".format(x, y))
            if x < y:
                key, oriented = (x, y), frozenset(pairs)
            else:
                key, oriented = (y, x), frozenset((b, a) for a, b in pairs)
            if key in rels:
                oriented = rels[key] & oriented
            rels[key] = oriented

        self._init_parts(tuple(x for x, _ in items), doms, {}, _names_dict(names))
        for key, pairs in rels.items():
            self._store(key, pairs)
        self._validate()

    @classmethod
    def _from_parts(cls,
                    variables: Tuple[int, ...],
                    domains: Dict[int, FrozenSet[int]],
                    relations: Dict[Pair, FrozenSet[Pair]],
                    names: Dict[int, str]) -> Instance:
        # relations must already be normalised
        instance = cls.__new__(cls)
        instance._init_parts(variables, domains, {}, names)
        for key, pairs in relations.items():
            instance._relations[key] = pairs
            instance._adjacency[key[0]].add(key[1])
            instance._adjacency[key[1]].add(key[0])
        instance._validate()
        return instance

    def _init_parts(self, variables, domains, relations, names) -> None:
        self.variables = variables
        self._domains = domains
        self._relations = relations
        self._adjacency = {x: set() for x in variables}
        self._names = names

    def _store(self, key: Pair, pairs: FrozenSet[Pair]) -> None:
        x, y = key
        dx, dy = self._domains[x], self._domains[y]
        normalised = frozenset((a, b) for a, b in pairs if a in dx and b in dy)
        if len(normalised) == len(dx) * len(dy):
            self._relations.pop(key, None)
            self._adjacency[x].discard(y)
            self._adjacency[y].discard(x)
            return
        self._relations[key] = normalised
        self._adjacency[x].add(y)
        self._adjacency[y].add(x)

    def _validate(self) -> None:
        if not get_settings().check_invariants:
            return
        for (x, y), pairs in self._relations.items():
            assert x < y, "relation key ({}, {}) is not canonical".format(x, y)
            dx, dy = self._domains[x], self._domains[y]
            assert all(a in dx and b in dy for a, b in pairs), \
                "relation ({}, {}) mentions removed values".format(x, y)
            assert len(pairs) < len(dx) * len(dy), "trivial relation ({}, {}) is stored".format(x, y)

    # -- queries ----------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.variables)

    def __contains__(self, x: int) -> bool:
        return x in self._domains

    def domain(self, x: int) -> FrozenSet[int]:
        try:
            return self._domains[x]
        except KeyError:
            raise KeyError("unknown variable {}".format(x)) from None

    @property
    def domains(self) -> Dict[int, FrozenSet[int]]:
        return dict(self._domains)

    @property
    def relations(self) -> Dict[Pair, FrozenSet[Pair]]:
        """Stored (non-trivial) relations keyed by (x, y) with x < y."""
        return dict(self._relations)

    @property
    def names(self) -> Dict[int, str]:
        return dict(self._names)

    def name(self, x: int) -> str:
        return self._names.get(x, "x{}".format(x))

    def points(self) -> List[Point]:
        return [(x, v) for x in self.variables for v in sorted(self._domains[x])]

    def relation(self, x: int, y: int) -> Optional[FrozenSet[Pair]]:
        """
        Allowed pairs of the constraint between x and y, oriented as (value of x, value of y).

        :return: None when the constraint is trivial.
        """
        if x < y:
            return self._relations.get((x, y))
        pairs = self._relations.get((y, x))
        if pairs is None:
            return None
        return frozenset((b, a) for a, b in pairs)

    def allowed(self, x: int, a: int, y: int, b: int) -> bool:
        if x < y:
            pairs = self._relations.get((x, y))
            return pairs is None or (a, b) in pairs
        pairs = self._relations.get((y, x))
        return pairs is None or (b, a) in pairs

    def supports(self, x: int, a: int, y: int) -> List[int]:
        """Values of y compatible with (x, a), in increasing order."""
        return [b for b in sorted(self._domains[y]) if self.allowed(x, a, y, b)]

    def is_trivial(self, x: int, y: int) -> bool:
        if x == y:
            raise ValueError("a constraint needs two distinct variables, got {} twice".format(x))
        self.domain(x)
        self.domain(y)
        return (min(x, y), max(x, y)) not in self._relations

    def scopes(self) -> List[Pair]:
        """Pairs (x, y), x < y, carrying a non-trivial constraint, in lexicographic order."""
        return sorted(self._relations)

    def neighbours(self, x: int) -> List[int]:
        return sorted(self._adjacency[x])

    def degree(self, x: int) -> int:
        return len(self._adjacency[x])

    def has_empty_domain(self) -> bool:
        return any(not d for d in self._domains.values())

    # -- derived instances ------------------------------------------------------

    def project(self, variables: Iterable[int]) -> Instance:
        keep = set(variables)
        unknown = keep - set(self._domains)
        if unknown:
            raise KeyError("unknown variables {}".format(sorted(unknown)))
        return Instance._from_parts(
            tuple(x for x in self.variables if x in keep),
            {x: self._domains[x] for x in keep},
            {k: r for k, r in self._relations.items() if k[0] in keep and k[1] in keep},
            {x: n for x, n in self._names.items() if x in keep},
        )

    def restrict(self, domains: Mapping[int, Iterable[int]]) -> Instance:
        """
        Shrink the domains of some variables.

        :param domains: New domain per variable; each must be a subset of the current one.
        :return: The restricted instance with relations re-normalised.
        """
        new_domains = dict(self._domains)
        changed = set()
        for x, values in domains.items():
            values = frozenset(values)
            current = self.domain(x)
            if not values <= current:
                raise ValueError("values {} are not in the domain of variable {}".format(
                    sorted(values - current), x))
            if values != current:
                new_domains[x] = values
                changed.add(x)
        if not changed:
            return self
        instance = Instance._from_parts(self.variables, new_domains, {}, self._names)
        for key, pairs in self._relations.items():
            if key[0] in changed or key[1] in changed:
                instance._store(key, pairs)
            else:
                instance._relations[key] = pairs
                instance._adjacency[key[0]].add(key[1])
                instance._adjacency[key[1]].add(key[0])
        instance._validate()
        return instance

    def remove_value(self, x: int, v: int) -> Instance:
        if v not in self.domain(x):
            raise ValueError("value {} is not in the domain of variable {}".format(v, x))
        return self.restrict({x: self._domains[x] - {v}})

    def assign(self, x: int, v: int) -> Instance:
        """The instance with D(x) reduced to {v}."""
        if v not in self.domain(x):
            raise ValueError("value {} is not in the domain of variable {}".format(v, x))
        return self.restrict({x: {v}})

    def with_relation(self, x: int, y: int, pairs: Optional[Iterable[Pair]]) -> Instance:
        """Replace the constraint between x and y; None makes it trivial."""
        if x == y:
            raise ValueError("self-loop constraint on variable {}".format(x))
        self.domain(x)
        self.domain(y)
        instance = Instance._from_parts(self.variables, dict(self._domains), self._relations, self._names)
        key = (min(x, y), max(x, y))
        if pairs is None:
            instance._relations.pop(key, None)
            instance._adjacency[x].discard(y)
            instance._adjacency[y].discard(x)
        else:
            pairs = frozenset(pairs) if x < y else frozenset((b, a) for a, b in pairs)
            instance._store(key, pairs)
        instance._validate()
        return instance

    def relabel(self) -> Instance:
        """Renumber the variables 0..n-1 keeping their order."""
        index = {x: i for i, x in enumerate(self.variables)}
        if all(i == x for x, i in index.items()):
            return self
        return Instance._from_parts(
            tuple(range(len(self.variables))),
            {index[x]: d for x, d in self._domains.items()},
            {(index[x], index[y]): r for (x, y), r in self._relations.items()},
            {index[x]: n for x, n in self._names.items()},
        )

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.variables == other.variables
                and self._domains == other._domains
                and self._relations == other._relations)

    def __hash__(self) -> int:
        return hash((self.variables,
                     tuple(self._domains[x] for x in self.variables),
                     frozenset(self._relations.items())))

    def __repr__(self) -> str:
        return "Instance(vars={}, constraints={})".format(len(self.variables), len(self._relations))


def _names_dict(names) -> Dict[int, str]:
    if names is None:
        return {}
    if isinstance(names, MappingABC):
        return {int(x): str(n) for x, n in names.items() if n is not None}
    return {x: str(n) for x, n in enumerate(names) if n is not None}


class Assignment(MappingABC):
    """
    An immutable, possibly partial, map from variables to values.

    Iteration follows increasing variable id.
    """
    __slots__ = ("_bindings",)

    def __init__(self, bindings: Optional[Mapping[int, int]] = None) -> None:
        self._bindings = dict(sorted((int(x), int(v)) for x, v in (bindings or {}).items()))

    def __getitem__(self, x: int) -> int:
        return self._bindings[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __hash__(self) -> int:
        return hash(frozenset(self._bindings.items()))

    def __repr__(self) -> str:
        return "Assignment({})".format(self._bindings)

    def extend(self, other: Mapping[int, int]) -> Assignment:
        """Union with another map; bindings of `other` win on shared variables."""
        merged = dict(self._bindings)
        merged.update(other)
        return Assignment(merged)

    def with_value(self, x: int, v: int) -> Assignment:
        return self.extend({x: v})

    def restrict(self, variables: Iterable[int]) -> Assignment:
        keep = set(variables)
        return Assignment({x: v for x, v in self._bindings.items() if x in keep})

    def format(self) -> str:
        """Certificate lines `x<i>=<v>`, one per variable."""
        return "".join("x{}={}\n".format(x, v) for x, v in self._bindings.items())


def project(instance: Instance, variables: Iterable[int]) -> Instance:
    return instance.project(variables)


def is_trivial(instance: Instance, x: int, y: int) -> bool:
    return instance.is_trivial(x, y)


def remove_value(instance: Instance, x: int, v: int) -> Instance:
    return instance.remove_value(x, v)


def constraint_graph(instance: Instance) -> nx.Graph:
    """
    Build the constraint graph of an instance.

    :param instance: The instance.
    :return: A networkx graph over the variables with an edge per non-trivial constraint.
    """
    graph = nx.Graph()
    graph.add_nodes_from(instance.variables)
    graph.add_edges_from(instance.scopes())
    return graph


def conflicts(instance: Instance, s: Mapping[int, int]) -> List[Pair]:
    """Scopes (x, y) of `instance` violated by the bound values of `s`."""
    violated = []
    for x, y in instance.scopes():
        if x in s and y in s and not instance.allowed(x, s[x], y, s[y]):
            violated.append((x, y))
    return violated


def verify_solution(instance: Instance, s: Mapping[int, int]) -> bool:
    """
    Check a total assignment against an instance.

    :param instance: The instance.
    :param s: A value for every variable of the instance.
    :return: True iff every value lies in its domain and every constraint is satisfied.
    """
    missing = [x for x in instance.variables if x not in s]
    if missing:
        raise ValueError("partial assignment: no value for variables {}".format(missing))
    if any(s[x] not in instance.domain(x) for x in instance.variables):
        return False
    return not conflicts(instance, s)
