"""
Text formats for instances and patterns.

Instance document::

    bcsp 1
    var 0 1 2 3
    var 1 1 2 3
    con 0 1 forbid (1,1) (2,2) (3,3)

Pattern document::

    pat 1
    var x x1
    var y y1
    neg x.x1 y.y1
"""
from __future__ import annotations
import re
from typing import Dict, List, Set, Tuple

from algorithms.csp_lib.errors import FormatError
from algorithms.csp_lib.instance import Instance, Pair
from algorithms.csp_lib.pattern import Pattern, PatternPoint, Sign

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split(), line


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(lineno, "expected an integer {}, got '{}'".format(what, token)) from None


def _header(lines, expected: str):
    for lineno, tokens, _ in lines:
        if tokens != [expected, "1"]:
            raise FormatError(lineno, "expected header '{} 1'".format(expected))
        return
    raise FormatError(0, "empty document, expected header '{} 1'".format(expected))


def parse_instance(text: str) -> Instance:
    """
    Parse an instance document.

    :param text: The document.
    :return: The instance; pairs listed in no `con` line are unconstrained.
    """
    lines = _lines(text)
    _header(lines, "bcsp")
    domains: List[Set[int]] = []
    relations: Dict[Pair, Set[Pair]] = {}

    for lineno, tokens, line in lines:
        keyword = tokens[0]
        if keyword == "var":
            if len(tokens) < 2:
                raise FormatError(lineno, "missing variable id")
            var = _int(tokens[1], lineno, "variable id")
            if var < len(domains):
                raise FormatError(lineno, "duplicate variable {}".format(var))
            if var != len(domains):
                raise FormatError(lineno, "expected variable id {}, got {}".format(len(domains), var))
            values = [_int(t, lineno, "value") for t in tokens[2:]]
            if len(set(values)) != len(values):
                raise FormatError(lineno, "duplicate value in the domain of variable {}".format(var))
            domains.append(set(values))
        elif keyword == "con":
            if len(tokens) < 4 or tokens[3] not in ("allow", "forbid"):
                raise FormatError(lineno, "expected 'con <x> <y> allow|forbid (<a>,<b>) ...'")
            x = _int(tokens[1], lineno, "variable id")
            y = _int(tokens[2], lineno, "variable id")
            if x == y:
                raise FormatError(lineno, "self-loop constraint on variable {}".format(x))
            for var in (x, y):
                if not 0 <= var < len(domains):
                    raise FormatError(lineno, "undeclared variable {}".format(var))
            key = (min(x, y), max(x, y))
            if key in relations:
                raise FormatError(lineno, "duplicate constraint on ({}, {})".format(*key))
            body = line.split(None, 4)[4] if len(tokens) > 4 else ""
            if _PAIR.sub("", body).strip():
                raise FormatError(lineno, "malformed value pair list")
            pairs = set()
            for match in _PAIR.finditer(body):
                a, b = int(match.group(1)), int(match.group(2))
                if a not in domains[x] or b not in domains[y]:
                    raise FormatError(lineno, "value outside declared domain in pair ({},{})".format(a, b))
                pairs.add((a, b) if x < y else (b, a))
            if tokens[3] == "forbid":
                dx, dy = domains[key[0]], domains[key[1]]
                pairs = {(a, b) for a in dx for b in dy} - pairs
            relations[key] = pairs
        else:
            raise FormatError(lineno, "unknown keyword '{}'".format(keyword))

    return Instance(domains, relations)


def serialize_instance(instance: Instance) -> str:
    """
    Canonical document of an instance: variables in index order, constraints in
    lexicographic pair order as sorted `forbid` lists.
    """
    instance = instance.relabel()
    out = ["bcsp 1"]
    for x in instance.variables:
        out.append(" ".join(["var", str(x)] + [str(v) for v in sorted(instance.domain(x))]))
    for x, y in instance.scopes():
        allowed = instance.relation(x, y)
        forbidden = sorted((a, b) for a in instance.domain(x) for b in instance.domain(y)
                           if (a, b) not in allowed)
        out.append("con {} {} forbid {}".format(x, y, " ".join("({},{})".format(a, b) for a, b in forbidden)))
    return "\n".join(out) + "\n"


def _point(token: str, lineno: int, points: Dict[str, List[str]]) -> PatternPoint:
    var, sep, pid = token.partition(".")
    if not sep:
        raise FormatError(lineno, "expected '<variable>.<point>', got '{}'".format(token))
    if var not in points or pid not in points[var]:
        raise FormatError(lineno, "unknown point '{}'".format(token))
    return (var, pid)


def parse_pattern(text: str) -> Pattern:
    """
    Parse a pattern document.

    :param text: The document.
    :return: The pattern; pairs named in no `pos`/`neg` line stay unlabelled.
    """
    lines = _lines(text)
    _header(lines, "pat")
    points: Dict[str, List[str]] = {}
    edges: Dict[frozenset, Tuple[PatternPoint, PatternPoint, Sign]] = {}

    for lineno, tokens, _ in lines:
        keyword = tokens[0]
        if keyword == "var":
            if len(tokens) < 2:
                raise FormatError(lineno, "missing variable id")
            var = tokens[1]
            if "." in var:
                raise FormatError(lineno, "variable id '{}' contains '.'".format(var))
            if var in points:
                raise FormatError(lineno, "duplicate variable {}".format(var))
            if len(set(tokens[2:])) != len(tokens) - 2:
                raise FormatError(lineno, "duplicate point in variable {}".format(var))
            points[var] = tokens[2:]
        elif keyword in ("pos", "neg"):
            if len(tokens) != 3:
                raise FormatError(lineno, "expected '{} <x>.<p> <y>.<q>'".format(keyword))
            p = _point(tokens[1], lineno, points)
            q = _point(tokens[2], lineno, points)
            if p[0] == q[0]:
                raise FormatError(lineno, "edge within variable {}".format(p[0]))
            sign = Sign(keyword)
            key = frozenset((p, q))
            if key in edges and edges[key][2] is not sign:
                raise FormatError(lineno, "conflicting signs on {} {}".format(tokens[1], tokens[2]))
            edges[key] = (p, q, sign)
        else:
            raise FormatError(lineno, "unknown keyword '{}'".format(keyword))

    return Pattern(points, edges.values())


def serialize_pattern(pattern: Pattern) -> str:
    out = ["pat 1"]
    for var in pattern.variables:
        out.append(" ".join(["var", var] + list(pattern.points(var))))
    for p, q, sign in pattern.edges():
        out.append("{} {}.{} {}.{}".format(sign.value, p[0], p[1], q[0], q[1]))
    return "\n".join(out) + "\n"
