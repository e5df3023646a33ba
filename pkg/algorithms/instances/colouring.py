"""
Encodings of 3-colouring K4 that are singleton arc consistent yet unsatisfiable, and the
constructions that stretch them (equality padding, implication chains).
"""
from __future__ import annotations
from itertools import combinations, product
from typing import Dict, Iterable, List, Set, Tuple

from algorithms.csp_lib.instance import Instance, Pair


def _allowed(dx: Iterable[int], dy: Iterable[int], forbidden: Set[Pair]) -> Set[Pair]:
    return {(a, b) for a, b in product(dx, dy) if (a, b) not in forbidden}


def gen_kcoloring(n: int, q: int) -> Instance:
    """
    q-colouring of the complete graph on n vertices.

    :param n: Number of vertices (variables x1..xn).
    :param q: Number of colours (values 1..q).
    """
    if n < 1 or q < 1:
        raise ValueError("need n >= 1 and q >= 1, got n={} q={}".format(n, q))
    colours = range(1, q + 1)
    relations = {(x, y): {(a, b) for a, b in product(colours, colours) if a != b}
                 for x, y in combinations(range(n), 2)}
    return Instance([colours] * n, relations, ["x{}".format(i + 1) for i in range(n)])


def gen_i34() -> Instance:
    """
    Colouring K4 through colour-class variables: x1..x4 pick a colour in {1,2,3},
    y1..y3 pick the vertex of that colour in {1,2,3,4}, and (x_i = j) implies (y_j = i).
    """
    domains: List[range] = [range(1, 4)] * 4 + [range(1, 5)] * 3
    relations: Dict[Pair, Set[Pair]] = {}
    for i in range(1, 5):
        for j in range(1, 4):
            forbidden = {(j, b) for b in range(1, 5) if b != i}
            relations[(i - 1, 3 + j)] = _allowed(range(1, 4), range(1, 5), forbidden)
    names = ["x{}".format(i) for i in range(1, 5)] + ["y{}".format(j) for j in range(1, 4)]
    return Instance(domains, relations, names)


def gen_i5() -> Instance:
    """
    Five variables over {1,2,3,4} with (x_i = j-1) iff (x_j = i) for every i < j.
    """
    values = range(1, 5)
    relations: Dict[Pair, Set[Pair]] = {}
    for i, j in combinations(range(1, 6), 2):
        forbidden = {(j - 1, b) for b in values if b != i} | {(a, i) for a in values if a != j - 1}
        relations[(i - 1, j - 1)] = _allowed(values, values, forbidden)
    return Instance([values] * 5, relations, ["x{}".format(i) for i in range(1, 6)])


def gen_pad_equality(instance: Instance, x: int, y: int, k: int) -> Instance:
    """
    Replace the constraint R(x, y) by a path x - u1 - ... - uk - y of equality constraints
    followed by R itself between uk and y.

    :param k: Number of fresh variables, at least 1.
    """
    if k < 1:
        raise ValueError("padding length must be at least 1, got {}".format(k))
    relation = instance.relation(x, y)
    if relation is None:
        raise ValueError("no non-trivial constraint between {} and {}".format(x, y))
    first = max(instance.variables) + 1
    fresh = list(range(first, first + k))
    domain_x = instance.domain(x)

    domains = {v: instance.domain(v) for v in instance.variables}
    relations = {key: set(pairs) for key, pairs in instance.relations.items()}
    del relations[(min(x, y), max(x, y))]
    equality = {(a, a) for a in domain_x}
    chain = [x] + fresh
    for u in fresh:
        domains[u] = domain_x
    for u, w in zip(chain, chain[1:]):
        relations[(u, w)] = set(equality)
    relations[(fresh[-1], y)] = set(relation)
    names = instance.names
    for index, u in enumerate(fresh, start=1):
        names[u] = "u{}_{}_{}".format(x, y, index)
    return Instance(domains, relations, names)


CHAIN_LENGTH = 21


def gen_implication_gadget(biconditional: bool = False) -> Instance:
    """
    3-colouring of K4 with every inequality replaced by chains of Boolean implications.

    For each vertex i and colour a, Booleans x_{ia}^0..x_{ia}^20 with (x_i = a) => x_{ia}^0
    (<=> when `biconditional`) and x_{ia}^r => x_{ia}^{r+1}. For each i < j and colour a,
    Booleans y_{ija}^1..y_{ija}^3 with x_{ia}^{4j} => y^1 => y^2 => y^3 => not x_{ja}^{4i}.
    Booleans use {0, 1} with 1 as true.
    """
    names: List[str] = ["x{}".format(i) for i in range(1, 5)]
    domains: List[Tuple[int, ...]] = [(1, 2, 3)] * 4
    relations: Dict[Pair, Set[Pair]] = {}
    boolean = (0, 1)
    implies = _allowed(boolean, boolean, {(1, 0)})
    excludes = _allowed(boolean, boolean, {(1, 1)})

    def new_boolean(name: str) -> int:
        names.append(name)
        domains.append(boolean)
        return len(domains) - 1

    chain: Dict[Tuple[int, int], List[int]] = {}
    for i in range(1, 5):
        for a in (1, 2, 3):
            ids = [new_boolean("x{}{}^{}".format(i, a, r)) for r in range(CHAIN_LENGTH)]
            chain[(i, a)] = ids
            forbidden = {(a, 0)}
            if biconditional:
                forbidden |= {(b, 1) for b in (1, 2, 3) if b != a}
            relations[(i - 1, ids[0])] = _allowed((1, 2, 3), boolean, forbidden)
            for u, w in zip(ids, ids[1:]):
                relations[(u, w)] = set(implies)

    for i, j in combinations(range(1, 5), 2):
        for a in (1, 2, 3):
            ys = [new_boolean("y{}{}{}^{}".format(i, j, a, s)) for s in (1, 2, 3)]
            relations[(chain[(i, a)][4 * j], ys[0])] = set(implies)
            for u, w in zip(ys, ys[1:]):
                relations[(u, w)] = set(implies)
            relations[(ys[-1], chain[(j, a)][4 * i])] = set(excludes)

    return Instance(domains, relations, names)
