from __future__ import annotations
import logging
from itertools import combinations
from typing import Optional, Tuple

from algorithms.csp_lib.errors import PreconditionError
from algorithms.csp_lib.instance import Instance
from algorithms.transform.log import Merged, TransformLog
from algorithms.transform.operations import check_value_pair, merge_values

LOG = logging.getLogger(__name__)


def _broken_triangle(instance: Instance, x: int, a: int, b: int) -> bool:
    # c in D(y), d in D(z): ad, bc, cd allowed, ac, bd forbidden
    for y in instance.neighbours(x):
        cs = [c for c in sorted(instance.domain(y))
              if instance.allowed(x, b, y, c) and not instance.allowed(x, a, y, c)]
        if not cs:
            continue
        for z in instance.neighbours(x):
            if z == y:
                continue
            ds = [d for d in sorted(instance.domain(z))
                  if instance.allowed(x, a, z, d) and not instance.allowed(x, b, z, d)]
            if any(instance.allowed(y, c, z, d) for c in cs for d in ds):
                return True
    return False


def btp_mergeable(instance: Instance, x: int, a: int, b: int) -> bool:
    """
    True iff a and b form no broken triangle at x, in either orientation.
    """
    check_value_pair(instance, x, a, b)
    return not (_broken_triangle(instance, x, a, b) or _broken_triangle(instance, x, b, a))


def btp_merge(instance: Instance, x: int, a: int, b: int) -> Tuple[Instance, TransformLog]:
    """
    Fuse two BTP-mergeable values of x into the fresh value max(D(x)) + 1.

    :return: The merged instance and a one-record log.
    """
    if not btp_mergeable(instance, x, a, b):
        raise PreconditionError("values {} and {} of variable {} form a broken triangle".format(a, b, x))
    into = max(instance.domain(x)) + 1
    return merge_values(instance, x, a, b, into), TransformLog([Merged(x, a, b, into)])


def _first_mergeable(instance: Instance) -> Optional[Tuple[int, int, int]]:
    for x in instance.variables:
        for a, b in combinations(sorted(instance.domain(x)), 2):
            if btp_mergeable(instance, x, a, b):
                return x, a, b
    return None


def btp_merge_fixpoint(instance: Instance) -> Tuple[Instance, TransformLog]:
    """Merge the first mergeable pair in canonical order until no pair is mergeable."""
    log = TransformLog()
    while True:
        found = _first_mergeable(instance)
        if found is None:
            break
        instance, step = btp_merge(instance, *found)
        log = log + step
    LOG.debug("btp_merge_fixpoint performed %d merges", len(log))
    return instance, log
