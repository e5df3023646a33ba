from __future__ import annotations
from typing import Optional

from algorithms.csp_lib.instance import Instance


def merge_values(instance: Instance, x: int, a: int, b: int, into: Optional[int] = None) -> Instance:
    """
    Replace values a and b of x by one value whose allowed pairs towards every other
    variable are the union of those of a and b. No mergeability check is made here.

    :param into: Identifier of the new value; max(D(x)) + 1 when omitted.
    """
    domain = instance.domain(x)
    for value in (a, b):
        if value not in domain:
            raise ValueError("value {} is not in the domain of variable {}".format(value, x))
    if a == b:
        raise ValueError("cannot merge value {} with itself".format(a))
    c = max(domain) + 1 if into is None else into
    if c in domain - {a, b}:
        raise ValueError("merged value {} already in the domain of variable {}".format(c, x))

    relations = instance.relations
    for (u, w), pairs in list(relations.items()):
        if u == x:
            relations[(u, w)] = ({(p, q) for p, q in pairs if p not in (a, b)}
                                 | {(c, q) for p, q in pairs if p in (a, b)})
        elif w == x:
            relations[(u, w)] = ({(p, q) for p, q in pairs if q not in (a, b)}
                                 | {(p, c) for p, q in pairs if q in (a, b)})
    domains = instance.domains
    domains[x] = (domain - {a, b}) | {c}
    return Instance(domains, relations, instance.names)


def delete_constraint(instance: Instance, x: int, y: int) -> Instance:
    """Make the constraint between x and y trivial."""
    if x == y:
        raise ValueError("a constraint needs two distinct variables, got {} twice".format(x))
    return instance.with_relation(x, y, None)


def check_value_pair(instance: Instance, x: int, a: int, b: int) -> None:
    """Raise ValueError unless a and b are two distinct values of D(x)."""
    domain = instance.domain(x)
    if a == b:
        raise ValueError("values must differ, got {} twice".format(a))
    for value in (a, b):
        if value not in domain:
            raise ValueError("value {} is not in the domain of variable {}".format(value, x))
