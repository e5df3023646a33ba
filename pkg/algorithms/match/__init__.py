from algorithms.match.algebra import (
    dangling_points,
    drop_dangling,
    is_irreducible,
    is_monotone,
    merge,
    mergeable_pairs,
    reduce,
)
from algorithms.match.occurrence import (
    OccurrenceWitness,
    PatternMatcher,
    find_all_at,
    occurs,
    occurs_at,
    occurs_in_pattern,
)

__all__ = [
    "OccurrenceWitness",
    "PatternMatcher",
    "dangling_points",
    "drop_dangling",
    "find_all_at",
    "is_irreducible",
    "is_monotone",
    "merge",
    "mergeable_pairs",
    "occurs",
    "occurs_at",
    "occurs_in_pattern",
    "reduce",
]
