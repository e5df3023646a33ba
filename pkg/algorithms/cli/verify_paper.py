"""
Self-check of the counterexample instances, the catalog transcriptions and the
containment facts between catalog patterns.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional, Tuple

from algorithms.catalog.catalog import COUNTEREXAMPLE_PATTERNS, CatalogEntry, list_patterns, load_pattern_file
from algorithms.csp_lib.instance import Instance
from algorithms.instances.colouring import gen_i5, gen_i34, gen_kcoloring
from algorithms.match.algebra import is_irreducible, is_monotone
from algorithms.match.occurrence import occurs, occurs_in_pattern
from algorithms.propagate.singleton import is_sac
from algorithms.solve.oracle import oracle_solve

LOG = logging.getLogger(__name__)

# catalog families whose members are all monotone and irreducible
CHECKED_FAMILIES = ("degree-3", "degree-2")
ABSENCES: Tuple[Tuple[str, str], ...] = (("T1", "I34"), ("M3", "I34"), ("Trestle", "I5"))
CONTAINMENTS: Tuple[Tuple[str, str], ...] = (("T4", "R8"), ("T5", "R8"), ("V2", "T4"), ("R7-", "R7"))


@dataclass(frozen=True)
class CheckRow:
    check: str
    expected: str
    observed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def format(self) -> str:
        return "{:<40} {:<9} {:<9} {}".format(self.check, self.expected, self.observed,
                                             "PASS" if self.passed else "FAIL")


def counterexamples() -> List[Tuple[str, Instance]]:
    return [("K4-3COL", gen_kcoloring(4, 3)), ("I34", gen_i34()), ("I5", gen_i5())]


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def build_report(catalog: Optional[Mapping[str, CatalogEntry]] = None,
                 instances: Optional[List[Tuple[str, Instance]]] = None) -> List[CheckRow]:
    """
    Compute every check.

    :param catalog: Entries by name; the shipped catalog when omitted.
    :param instances: Named counterexample instances; the three colouring encodings when omitted.
    :return: One row per check, in a fixed order.
    """
    catalog = catalog if catalog is not None else {entry.name: entry for entry in list_patterns()}
    instances = instances if instances is not None else counterexamples()
    by_name = dict(instances)
    rows: List[CheckRow] = []

    for label, instance in instances:
        rows.append(CheckRow("{} is SAC".format(label), "yes", _yes_no(is_sac(instance))))
        rows.append(CheckRow("{} has a solution".format(label), "no", _yes_no(oracle_solve(instance).is_sat)))

    for name, label in ABSENCES:
        if label in by_name:
            found = occurs(catalog[name].pattern, by_name[label]) is not None
            rows.append(CheckRow("{} occurs in {}".format(name, label), "no", _yes_no(found)))

    for label, instance in instances:
        for name in COUNTEREXAMPLE_PATTERNS:
            found = occurs(catalog[name].pattern, instance) is not None
            rows.append(CheckRow("{} occurs in {}".format(name, label), "yes", _yes_no(found)))

    for entry in catalog.values():
        if entry.family in CHECKED_FAMILIES:
            ok = is_monotone(entry.pattern) and is_irreducible(entry.pattern)
            rows.append(CheckRow("{} monotone and irreducible".format(entry.name), "yes", _yes_no(ok)))

    for entry in catalog.values():
        shipped = load_pattern_file(entry.name)
        rows.append(CheckRow("{} matches its .pat file".format(entry.name), "yes",
                             _yes_no(shipped == entry.pattern)))

    for small, large in CONTAINMENTS:
        found = occurs_in_pattern(catalog[small].pattern, catalog[large].pattern) is not None
        rows.append(CheckRow("{} occurs in {}".format(small, large), "yes", _yes_no(found)))
    return rows


def format_report(rows: List[CheckRow]) -> str:
    header = "{:<40} {:<9} {:<9} {}\n".format("check", "expected", "observed", "result")
    failed = sum(not row.passed for row in rows)
    footer = "{} checks, {} failed\n".format(len(rows), failed)
    return header + "".join(row.format() + "\n" for row in rows) + footer


def verify_paper(write: Callable[[str], object] = print) -> int:
    """
    Run every check and write the table.

    :return: 0 when every check passes, 1 otherwise.
    """
    rows = build_report()
    write(format_report(rows).rstrip("\n"))
    failed = [row.check for row in rows if not row.passed]
    if failed:
        LOG.warning("failed checks: %s", ", ".join(failed))
    return 1 if failed else 0
