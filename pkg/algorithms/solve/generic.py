from __future__ import annotations
import logging
from typing import Dict, Optional, Tuple

import networkx as nx

from algorithms.catalog.catalog import get_pattern
from algorithms.csp_lib.errors import PatternOccursError, PreconditionError
from algorithms.csp_lib.instance import Assignment, Instance, constraint_graph
from algorithms.match.occurrence import occurs
from algorithms.propagate.arc_consistency import enforce_ac
from algorithms.propagate.singleton import SingletonArcConsistency, is_sac
from algorithms.solve.lemmas import check_certificate, ensure, require
from algorithms.solve.report import SolveReport, SolveStats

LOG = logging.getLogger(__name__)


def reject_if_occurs(name: str, instance: Instance) -> None:
    """Raise PatternOccursError when the catalog pattern `name` occurs in `instance`."""
    entry = get_pattern(name)
    witness = occurs(entry.pattern, instance, True if entry.strict_only else None)
    if witness is not None:
        raise PatternOccursError(entry.name, witness)


def sac_closure(instance: Instance) -> Tuple[Instance, int]:
    """The SAC closure and the number of probes it took."""
    sac = SingletonArcConsistency(instance)
    return sac.run(), sac.probe_count


class SacConstructor:
    """
    Greedy solution construction for an instance whose class SAC decides: each variable
    in index order takes its first value whose assignment keeps the SAC closure free of
    empty domains.

    Attributes:
    - instance (Instance): A singleton arc consistent instance.
    - probes (int): Probes run by the SAC enforcements.
    """
    def __init__(self, instance: Instance) -> None:
        self.instance = instance
        self.probes = 0

    def _sac(self, instance: Instance) -> Instance:
        sac = SingletonArcConsistency(instance)
        closed = sac.run()
        self.probes += sac.probe_count
        return closed

    def construct(self) -> Optional[Assignment]:
        current = self.instance
        chosen: Dict[int, int] = {}
        for x in current.variables:
            for v in sorted(current.domain(x)):
                candidate = self._sac(current.assign(x, v))
                if not candidate.has_empty_domain():
                    current = candidate
                    chosen[x] = v
                    break
            else:
                LOG.warning("no value of x%d survives SAC; the class assumption does not hold", x)
                return None
        return Assignment(chosen)


def sac_construct(instance: Instance) -> SolveReport:
    """
    Build a solution of a SAC instance from a SAC-decided class.

    :param instance: A singleton arc consistent instance with non-empty domains.
    :return: sat with a solution, or unsat when some variable has no surviving value.
    """
    if not is_sac(instance):
        raise PreconditionError("sac_construct needs a singleton arc consistent instance")
    constructor = SacConstructor(instance)
    solution = constructor.construct()
    stats = SolveStats(probes=constructor.probes)
    if solution is None:
        return SolveReport.unsat("sac_construct", stats)
    return SolveReport.sat("sac_construct", solution, stats)


def solve_acyclic(instance: Instance) -> SolveReport:
    """
    Solve an arc consistent instance whose constraint graph is a forest.

    Each tree is rooted at its smallest variable, which takes its first value; every
    other variable takes the first support of its parent's value, in BFS order.
    """
    if instance.has_empty_domain():
        raise PreconditionError("solve_acyclic needs non-empty domains")
    graph = constraint_graph(instance)
    if graph.number_of_nodes() and not nx.is_forest(graph):
        raise PreconditionError("constraint graph has a cycle: {}".format(nx.find_cycle(graph)))
    _, trace = enforce_ac(instance)
    if len(trace):
        raise PreconditionError("solve_acyclic needs an arc consistent instance")

    solution: Dict[int, int] = {}
    for component in sorted(nx.connected_components(graph), key=min):
        root = min(component)
        solution[root] = min(instance.domain(root))
        for parent, child in nx.bfs_edges(graph, root):
            solution[child] = instance.supports(parent, solution[parent], child)[0]
    return SolveReport.sat("solve_acyclic", Assignment(solution))


def solve_by_sac(instance: Instance, pattern: str, construct: bool = True) -> SolveReport:
    """
    Decide an instance avoiding `pattern` by SAC, then build a solution greedily.

    :param pattern: Catalog name of a pattern whose class SAC decides (T2, T4, T5, ...).
    """
    entry = get_pattern(pattern)
    reject_if_occurs(entry.name, instance)
    method = "solve_by_sac:{}".format(entry.name)
    closed, probes = sac_closure(instance)
    if closed.has_empty_domain():
        return SolveReport.unsat(method, SolveStats(probes=probes))
    if not construct:
        return SolveReport.sat(method, None, SolveStats(probes=probes))
    constructor = SacConstructor(closed)
    solution = constructor.construct()
    stats = SolveStats(probes=probes + constructor.probes)
    if solution is None:
        ensure("{}-free SAC instances are satisfiable".format(entry.name), ["construction failed"])
    ensure("certificate", check_certificate(instance, solution))
    return SolveReport.sat(method, solution, stats)
