from algorithms.instances.colouring import (
    gen_i5,
    gen_i34,
    gen_implication_gadget,
    gen_kcoloring,
    gen_pad_equality,
)
from algorithms.instances.random_instances import (
    GenParams,
    SplitMix64,
    gen_pattern_free,
    gen_random,
    iter_pattern_free,
)

__all__ = [
    "GenParams",
    "SplitMix64",
    "gen_i5",
    "gen_i34",
    "gen_implication_gadget",
    "gen_kcoloring",
    "gen_pad_equality",
    "gen_pattern_free",
    "gen_random",
    "iter_pattern_free",
]
