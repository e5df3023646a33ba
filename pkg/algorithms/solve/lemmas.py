"""
Structural properties the class solvers rely on, as executable checks.

Every check returns the list of violations it found, one readable line each; an empty
list means the property holds. Solvers pass the result to `require`, which raises
LemmaViolation when `Settings.check_lemmas` is on and only logs otherwise. A failed
construction or a certificate that does not verify goes through `ensure`, which always
raises.
"""
from __future__ import annotations
import logging
from typing import AbstractSet, List, Mapping

import networkx as nx

from algorithms.catalog.catalog import get_pattern
from algorithms.config import get_settings
from algorithms.csp_lib.errors import LemmaViolation
from algorithms.csp_lib.instance import Instance, conflicts, constraint_graph, verify_solution
from algorithms.match.occurrence import find_all_at, occurs
from algorithms.propagate.singleton import singleton_probe, trace_sets
from algorithms.solve.oracle import oracle_solve
from algorithms.transform.operations import delete_constraint

LOG = logging.getLogger(__name__)


def require(lemma: str, violations: List[str]) -> None:
    if not violations:
        LOG.debug("check %s holds", lemma)
        return
    if get_settings().check_lemmas:
        raise LemmaViolation(lemma, violations)
    LOG.warning("check %s failed: %s", lemma, "; ".join(violations))


def ensure(lemma: str, violations: List[str]) -> None:
    """Like `require`, but raises whatever `check_lemmas` says."""
    if violations:
        raise LemmaViolation(lemma, violations)


def check_certificate(instance: Instance, s: Mapping[int, int]) -> List[str]:
    missing = [x for x in instance.variables if x not in s]
    if missing:
        return ["no value for variables {}".format(missing)]
    if verify_solution(instance, s):
        return []
    outside = ["x{}={} outside its domain".format(x, s[x]) for x in instance.variables
               if s[x] not in instance.domain(x)]
    return outside + ["constraint ({}, {}) violated".format(x, y) for x, y in conflicts(instance, s)]


def check_star_partition(reduced: Instance, block: AbstractSet[int]) -> List[str]:
    """
    No non-trivial constraint leaves `block`, and inside it every connected component of
    non-trivial constraints is a star.
    """
    violations = []
    for x, y in reduced.scopes():
        if (x in block) != (y in block):
            violations.append("crossing constraint ({}, {})".format(x, y))
    graph = constraint_graph(reduced.project(block))
    for component in nx.connected_components(graph):
        sub = graph.subgraph(component)
        edges = sub.number_of_edges()
        if edges and max(d for _, d in sub.degree()) != edges:
            violations.append("component {} is not a star".format(sorted(component)))
    return violations


def check_single_constraint(reduced: Instance, touched: AbstractSet[int], y: int, z: int) -> List[str]:
    """
    Every non-trivial constraint with a variable in `touched` is R(y, z).
    """
    violations = []
    for p, q in reduced.scopes():
        if (p in touched or q in touched) and {p, q} != {y, z}:
            violations.append("non-trivial constraint ({}, {}) touches the probed block".format(p, q))
    return violations


def check_vminus_degrees(instance: Instance) -> List[str]:
    """V- occurs only at variables of degree at most two."""
    entry = get_pattern("V-")
    violations = []
    for x, v in find_all_at(entry.pattern, ("x", "x1"), instance):
        if instance.degree(x) > 2:
            violations.append("V- occurs at x{}={} of degree {}".format(x, v, instance.degree(x)))
    return violations


def check_pattern_free(instance: Instance, name: str) -> List[str]:
    witness = occurs(get_pattern(name).pattern, instance)
    if witness is None:
        return []
    return ["{} occurs: {}".format(name, witness.format().strip().replace("\n", ", "))]


def check_outer_extraction(instance: Instance, x: int, v: int) -> List[str]:
    """
    Dropping the inner variables of the probe at (x, v) keeps satisfiability.
    Exact; runs the oracle twice.
    """
    probe = singleton_probe(instance, x, v)
    if not probe.survived:
        return ["probe x{}={} wipes out".format(x, v)]
    _, inner = trace_sets(probe.trace, x)
    rest = instance.project(set(instance.variables) - inner)
    before = oracle_solve(instance).status
    after = oracle_solve(rest).status
    if before is not after:
        return ["dropping {} turns {} into {}".format(sorted(inner), before, after)]
    return []


def check_deletion_invariant(instance: Instance, x: int, y: int) -> List[str]:
    """Deleting the constraint R(x, y) keeps satisfiability. Exact; runs the oracle twice."""
    before = oracle_solve(instance).status
    after = oracle_solve(delete_constraint(instance, x, y)).status
    if before is not after:
        return ["deleting ({}, {}) turns {} into {}".format(x, y, before, after)]
    return []
