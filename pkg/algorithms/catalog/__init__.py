from algorithms.catalog.catalog import (
    COUNTEREXAMPLE_PATTERNS,
    SOLVED_PATTERNS,
    CatalogEntry,
    SacStatus,
    get_pattern,
    list_patterns,
    load_pattern_file,
)
from algorithms.csp_lib.render import render_pattern

__all__ = [
    "COUNTEREXAMPLE_PATTERNS",
    "SOLVED_PATTERNS",
    "CatalogEntry",
    "SacStatus",
    "get_pattern",
    "list_patterns",
    "load_pattern_file",
    "render_pattern",
]
