from __future__ import annotations
import logging
from typing import Optional, Tuple

from algorithms.csp_lib.instance import Instance
from algorithms.transform.log import NsRemoved, TransformLog
from algorithms.transform.operations import check_value_pair

LOG = logging.getLogger(__name__)


def is_ns(instance: Instance, x: int, a: int, b: int) -> bool:
    """
    Neighbourhood substitutability of a by b: every point compatible with (x, a) is
    compatible with (x, b).
    """
    check_value_pair(instance, x, a, b)
    for y in instance.neighbours(x):
        relation = instance.relation(x, y)
        supports_a = {d for p, d in relation if p == a}
        supports_b = {d for p, d in relation if p == b}
        if not supports_a <= supports_b:
            return False
    return True


def _first_removable(instance: Instance) -> Optional[Tuple[int, int, int]]:
    for x in instance.variables:
        values = sorted(instance.domain(x))
        for a in values:
            for b in values:
                if a == b or not is_ns(instance, x, a, b):
                    continue
                # of two mutually substitutable values the smaller one stays
                if a < b and is_ns(instance, x, b, a):
                    continue
                return x, a, b
    return None


def ns_eliminate(instance: Instance) -> Tuple[Instance, TransformLog]:
    """
    Remove neighbourhood-substitutable values until none is left.

    Scans (x, a, b) lexicographically and restarts after every removal.

    :return: The reduced instance and the log of removals.
    """
    records = []
    while True:
        found = _first_removable(instance)
        if found is None:
            break
        x, a, b = found
        instance = instance.remove_value(x, a)
        records.append(NsRemoved(x, a, b))
    LOG.debug("ns_eliminate removed %d values", len(records))
    return instance, TransformLog(records)
