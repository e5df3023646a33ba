from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, List, Tuple

from algorithms.csp_lib.formats import parse_pattern
from algorithms.csp_lib.pattern import Pattern

PATTERN_DIR = Path(__file__).resolve().parent / "patterns"


class SacStatus(Enum):
    YES = "yes"
    NO = "no"
    OPEN = "open"


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named pattern with its metadata.

    Attributes:
    - name (str): Catalog name, also the stem of the shipped `.pat` file.
    - pattern (Pattern): Points and labelled edges; variables left to right, points bottom to top.
    - monotone (bool): Every variable pair carrying a positive edge also carries a negative one.
    - sac_solvable (SacStatus): Whether SAC decides the class of instances avoiding the pattern.
    - family (str): Which group of drawings the pattern belongs to.
    - strict_only (bool): Occurrence is only meaningful with injective points (V's two
      points must be distinct).
    """
    name: str
    pattern: Pattern
    monotone: bool
    sac_solvable: SacStatus
    family: str
    strict_only: bool = False


def _entry(name, points, pos, neg, monotone, status, family, strict_only=False) -> CatalogEntry:
    return CatalogEntry(name, Pattern.build(points, pos, neg, name=name), monotone, status, family, strict_only)


_Y, _N, _O = SacStatus.YES, SacStatus.NO, SacStatus.OPEN
_ABCD = {"a": ["a1"], "b": ["b1", "b2"], "c": ["c1", "c2"], "d": ["d1"]}
_AB3CD = {"a": ["a1"], "b": ["b1", "b2", "b3"], "c": ["c1", "c2"], "d": ["d1"]}
_A2BCD = {"a": ["a1", "a2"], "b": ["b1", "b2"], "c": ["c1", "c2"], "d": ["d1"]}

_ENTRIES: Tuple[CatalogEntry, ...] = (
    _entry("Q1", {"w": ["w1"], "m": ["m1", "m2", "m3"], "z": ["z1"], "u": ["u1"]},
           pos=[("w1", "m3"), ("m1", "z1"), ("m2", "u1")],
           neg=[("w1", "m2"), ("m3", "z1"), ("m1", "u1")],
           monotone=True, status=_Y, family="degree-3"),
    _entry("Q2", {"w": ["w1"], "m": ["m1", "m2"], "z": ["z1"], "u": ["u1"]},
           pos=[("w1", "m1"), ("m2", "u1")],
           neg=[("w1", "m2"), ("m2", "z1"), ("m1", "u1")],
           monotone=True, status=_Y, family="degree-3"),
    _entry("R1", _ABCD,
           pos=[("a1", "b1"), ("b2", "c1"), ("c2", "d1"), ("b1", "c1")],
           neg=[("a1", "b2"), ("b2", "c2"), ("c1", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R2", _A2BCD,
           pos=[("a1", "b2"), ("b2", "c1"), ("c2", "d1"), ("b1", "c2"), ("a1", "b1")],
           neg=[("a2", "b2"), ("b2", "c2"), ("c1", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R3", {"a": ["a1"], "b": ["b1"], "c": ["c1", "c2"], "d": ["d1", "d2"]},
           pos=[("b1", "c1"), ("c1", "d2"), ("c2", "d2")],
           neg=[("a1", "b1"), ("b1", "c2"), ("c1", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R4", _ABCD,
           pos=[("b1", "c1"), ("c2", "d1"), ("b1", "c2")],
           neg=[("a1", "b2"), ("b2", "c2"), ("c1", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R5", _ABCD,
           pos=[("a1", "b1"), ("b2", "c1"), ("b1", "c2"), ("c1", "d1")],
           neg=[("a1", "b2"), ("b1", "c1"), ("c2", "d1")],
           monotone=True, status=_Y, family="degree-2"),
    _entry("R6", _A2BCD,
           pos=[("a1", "b2"), ("b2", "c1"), ("c1", "d1"), ("b1", "c2"), ("a1", "b1")],
           neg=[("a2", "b2"), ("b1", "c1"), ("c2", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R7", _AB3CD,
           pos=[("a1", "b3"), ("b3", "c1"), ("b2", "c1"), ("b1", "c2"), ("c1", "d1")],
           neg=[("a1", "b2"), ("b1", "c1"), ("c2", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R8", _AB3CD,
           pos=[("a1", "b1"), ("a1", "b3"), ("b3", "c1"), ("b1", "c2"), ("c1", "d1")],
           neg=[("a1", "b2"), ("b1", "c1"), ("c2", "d1")],
           monotone=True, status=_Y, family="degree-2"),
    _entry("R9", _AB3CD,
           pos=[("a1", "b3"), ("a1", "b1"), ("b3", "c1"), ("b2", "c2"), ("c1", "d1")],
           neg=[("a1", "b2"), ("b1", "c1"), ("c2", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R10", _ABCD,
           pos=[("a1", "b1"), ("b2", "c2"), ("c1", "d1"), ("b1", "c2")],
           neg=[("a1", "b2"), ("b1", "c1"), ("c2", "d1")],
           monotone=True, status=_O, family="degree-2"),
    _entry("R7-", {"a": ["a1"], "b": ["b1", "b2"], "c": ["c1", "c2", "c3"], "d": ["d1"]},
           pos=[("a1", "b2"), ("b2", "c2"), ("b2", "c3"), ("c3", "d1")],
           neg=[("a1", "b1"), ("b2", "c1"), ("c2", "d1")],
           monotone=True, status=_Y, family="subpattern"),
    _entry("T1", {"x": ["x1"], "y": ["y1"], "z": ["z1", "z2"]},
           pos=[("x1", "z1"), ("y1", "z1")],
           neg=[("x1", "z2"), ("y1", "z2")],
           monotone=True, status=_N, family="triangle"),
    _entry("T2", {"x": ["x1"], "y": ["y1", "y2"], "z": ["z1", "z2"]},
           pos=[("x1", "z1"), ("y1", "z1"), ("y1", "z2")],
           neg=[("y2", "z2"), ("x1", "z2")],
           monotone=True, status=_Y, family="triangle"),
    _entry("T3", {"x": ["x1"], "y": ["y1", "y2"], "z": ["z1", "z2"]},
           pos=[("x1", "z2"), ("y1", "z1"), ("y1", "z2")],
           neg=[("y2", "z2"), ("x1", "z1")],
           monotone=True, status=_Y, family="triangle"),
    _entry("T4", {"x": ["x1"], "y": ["y1"], "z": ["z1", "z2", "z3"]},
           pos=[("x1", "z2"), ("y1", "z2"), ("x1", "z3")],
           neg=[("x1", "z1"), ("y1", "z3")],
           monotone=True, status=_Y, family="triangle"),
    _entry("T5", {"x": ["x1"], "y": ["y1"], "z": ["z1", "z2"]},
           pos=[("x1", "z2"), ("y1", "z1")],
           neg=[("y1", "z2"), ("x1", "z1")],
           monotone=True, status=_Y, family="triangle"),
    _entry("V", {"x": ["x1"], "y": ["y1", "y2"]},
           pos=[("x1", "y1"), ("x1", "y2")], neg=[],
           monotone=False, status=_O, family="auxiliary", strict_only=True),
    _entry("V-", {"x": ["x1"], "y": ["y1"], "z": ["z1"]},
           pos=[], neg=[("x1", "y1"), ("x1", "z1")],
           monotone=True, status=_Y, family="auxiliary"),
    _entry("V2", {"x": ["x1"], "m": ["m1", "m2", "m3"], "y": ["y1"]},
           pos=[("x1", "m3"), ("m3", "y1")],
           neg=[("x1", "m2"), ("y1", "m1")],
           monotone=True, status=_Y, family="auxiliary"),
    _entry("Mhat", {"x": ["x1", "x2"], "m": ["m1", "m2", "m3"], "y": ["y1", "y2"]},
           pos=[("x1", "m3"), ("m3", "y1")],
           neg=[("x2", "m3"), ("y2", "m3"), ("x1", "m2"), ("y1", "m1")],
           monotone=True, status=_N, family="auxiliary"),
    _entry("M3", {"w": ["w1"], "m": ["m1", "m2", "m3"], "z": ["z1"], "u": ["u1"]},
           pos=[("w1", "m2"), ("m1", "z1"), ("m2", "u1")],
           neg=[("w1", "m3"), ("m3", "z1"), ("m1", "u1")],
           monotone=True, status=_N, family="hard"),
    _entry("Trestle", {"x": ["x1", "x2"], "y": ["y1", "y2"]},
           pos=[("x1", "y1"), ("x1", "y2"), ("x2", "y1")],
           neg=[("x2", "y2")],
           monotone=True, status=_N, family="hard"),
    _entry("BTP", {"y": ["y1"], "x": ["x1", "x2"], "z": ["z1"]},
           pos=[("y1", "x1"), ("x2", "z1"), ("y1", "z1")],
           neg=[("y1", "x2"), ("x1", "z1")],
           monotone=False, status=_O, family="auxiliary"),
)

_BY_NAME: Dict[str, CatalogEntry] = {entry.name: entry for entry in _ENTRIES}
_ALIASES = {"M̂": "Mhat", "V⁻": "V-", "V₂": "V2", "R7m": "R7-", "Vminus": "V-"}

# Patterns whose classes have a dedicated or SAC-backed procedure, in dispatch order.
SOLVED_PATTERNS = ("Q1", "R8", "R7-", "Q2", "R5", "T3", "T2", "T4", "T5")
COUNTEREXAMPLE_PATTERNS = ("Q1", "Q2", "R5", "R8", "R7-")


def get_pattern(name: str) -> CatalogEntry:
    """
    Look up a catalog entry.

    :param name: Catalog name (`Q1`, `R7-`, `Mhat`, ...) or one of its aliases (`M̂`, `V⁻`, `V₂`).
    :return: The entry.
    """
    key = _ALIASES.get(name, name)
    if key not in _BY_NAME:
        raise KeyError("unknown pattern '{}'; known: {}".format(name, ", ".join(_BY_NAME)))
    return _BY_NAME[key]


def list_patterns() -> List[CatalogEntry]:
    return list(_ENTRIES)


def load_pattern_file(name: str) -> Pattern:
    """Read the shipped `.pat` document of a catalog entry."""
    entry = get_pattern(name)
    path = PATTERN_DIR / "{}.pat".format(entry.name)
    pattern = parse_pattern(path.read_text(encoding="utf-8"))
    pattern.name = entry.name
    return pattern
