from __future__ import annotations
import logging
from typing import Iterator, List, Mapping, Tuple

from algorithms.csp_lib.errors import PreconditionError
from algorithms.csp_lib.instance import Assignment, Instance, conflicts
from algorithms.solve.generic import SacConstructor, reject_if_occurs, sac_closure
from algorithms.solve.lemmas import check_certificate, ensure, require
from algorithms.solve.report import SolveReport, SolveStats
from algorithms.transform.operations import delete_constraint

LOG = logging.getLogger(__name__)

METHOD = "solve_r5"


def _triangles(instance: Instance, x: int, a: int, y: int, w: int) -> Iterator[Tuple[int, int]]:
    # d in D(y), g in D(w) with (a, d), (a, g), (d, g) allowed
    for d in instance.supports(x, a, y):
        for g in instance.supports(x, a, w):
            if instance.allowed(y, d, w, g):
                yield d, g


def repair_r5(instance: Instance, s: Mapping[int, int], x: int, y: int) -> Assignment:
    """
    Turn a solution of `instance` without its constraint R(x, y) into a solution of
    `instance`.

    If s satisfies R(x, y) it is returned unchanged. Otherwise x moves to a value c
    supported by s[y] when c fits every other value of s. Failing that, take the first
    such c and the first variable w whose value conflicts with c; a triangle d in D(y),
    g in D(w) compatible with s[x] exists, and either y := d or y := d, w := g repairs s.

    :param instance: A SAC instance in which R5 does not occur.
    :param s: A solution of the instance with R(x, y) deleted.
    :return: A solution of `instance`.
    """
    s = Assignment(s)
    remaining = [scope for scope in conflicts(instance, s) if set(scope) != {x, y}]
    if remaining:
        raise PreconditionError("assignment violates constraints other than ({}, {}): {}".format(x, y, remaining))
    a, b = s[x], s[y]
    if instance.allowed(x, a, y, b):
        return s

    def fits(candidate: Assignment) -> bool:
        return not conflicts(instance, candidate)

    cs = instance.supports(y, b, x)
    for c in cs:
        if fits(s.with_value(x, c)):
            LOG.debug("repair (%d, %d): x%d := %d", x, y, x, c)
            return s.with_value(x, c)
    if not cs:
        raise PreconditionError("x{}={} has no support at x{}; instance is not arc consistent".format(y, b, x))

    c = cs[0]
    blocking = [w for w in instance.neighbours(x) if w != y and not instance.allowed(x, c, w, s[w])]
    w = blocking[0]
    for d, g in _triangles(instance, x, a, y, w):
        moved = s.with_value(y, d)
        if instance.allowed(y, d, w, s[w]):
            if fits(moved):
                LOG.debug("repair (%d, %d): x%d := %d", x, y, y, d)
                return moved
        elif fits(moved.with_value(w, g)):
            LOG.debug("repair (%d, %d): x%d := %d, x%d := %d", x, y, y, d, w, g)
            return moved.with_value(w, g)
    raise PreconditionError("no repair of constraint ({}, {}) found; R5 occurs or the instance is not SAC".format(x, y))


def deletion_repair(instance: Instance) -> Assignment:
    """
    Delete every non-trivial constraint in lexicographic order, solve the resulting
    constraint-free instance with first values, then repair backwards.
    """
    scopes = instance.scopes()
    stages: List[Instance] = [instance]
    for x, y in scopes:
        stages.append(delete_constraint(stages[-1], x, y))
    solution = Assignment({x: min(stages[-1].domain(x)) for x in instance.variables})
    for (x, y), before in zip(reversed(scopes), reversed(stages[:-1])):
        solution = repair_r5(before, solution, x, y)
    return solution


def solve_r5(instance: Instance, construct: bool = True, repair: bool = False) -> SolveReport:
    """
    Decide an instance in which R5 does not occur.

    :param repair: Build the certificate by constraint deletion and backward repair
                   instead of the greedy SAC constructor.
    """
    reject_if_occurs("R5", instance)
    closed, probes = sac_closure(instance)
    if closed.has_empty_domain():
        return SolveReport.unsat(METHOD, SolveStats(probes=probes))
    if not construct:
        return SolveReport.sat(METHOD, None, SolveStats(probes=probes))
    if repair:
        solution = deletion_repair(closed)
        stats = SolveStats(probes=probes)
    else:
        constructor = SacConstructor(closed)
        solution = constructor.construct()
        stats = SolveStats(probes=probes + constructor.probes)
        if solution is None:
            ensure("R5-free SAC instances are satisfiable", ["construction failed"])
    ensure("certificate", check_certificate(instance, solution))
    return SolveReport.sat(METHOD, solution, stats)
