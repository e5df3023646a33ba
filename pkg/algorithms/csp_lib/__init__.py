from algorithms.csp_lib.errors import FormatError, LemmaViolation, PatternOccursError, PreconditionError
from algorithms.csp_lib.formats import parse_instance, parse_pattern, serialize_instance, serialize_pattern
from algorithms.csp_lib.instance import (
    Assignment,
    Instance,
    conflicts,
    constraint_graph,
    is_trivial,
    project,
    remove_value,
    verify_solution,
)
from algorithms.csp_lib.pattern import Pattern, PatternPoint, Sign

__all__ = [
    "Assignment",
    "FormatError",
    "Instance",
    "LemmaViolation",
    "Pattern",
    "PatternOccursError",
    "PatternPoint",
    "PreconditionError",
    "Sign",
    "conflicts",
    "constraint_graph",
    "is_trivial",
    "parse_instance",
    "parse_pattern",
    "project",
    "remove_value",
    "serialize_instance",
    "serialize_pattern",
    "verify_solution",
]
