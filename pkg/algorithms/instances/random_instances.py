"""
Seeded random binary CSP instances.

Random draws come from SplitMix64: output k (k >= 1) of a generator seeded with s is
mix(s + k * 0x9E3779B97F4A7C15) modulo 2^64, where mix is the usual
xor-shift-multiply finaliser. A uniform float is the top 53 bits of an output scaled
by 2^-53. gen_random draws, for every pair x < y in lexicographic order, one uniform
for the density test and, when the pair is constrained, one uniform per value pair
(a, b) in lexicographic order for the tightness test.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterator, Optional, Sequence

import numpy as np

from algorithms.csp_lib.instance import Instance
from algorithms.csp_lib.pattern import Pattern
from algorithms.match.occurrence import occurs

LOG = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


class SplitMix64:
    """
    Counter-based SplitMix64 stream over numpy uint64 arrays.

    Attributes:
    - seed (int): The 64-bit seed.
    - position (int): Number of outputs drawn so far.
    """
    def __init__(self, seed: int) -> None:
        self.seed = seed & MASK64
        self.position = 0

    def next_uint64(self, n: int = 1) -> np.ndarray:
        counters = np.arange(self.position + 1, self.position + n + 1, dtype=np.uint64)
        self.position += n
        z = np.uint64(self.seed) + counters * _GAMMA
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))

    def uniform(self, n: int = 1) -> np.ndarray:
        """n floats in [0, 1)."""
        return (self.next_uint64(n) >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class GenParams:
    """
    Parameters of the random model.

    Attributes:
    - n_vars (int): Number of variables.
    - domain_size (int): Values 1..domain_size per variable.
    - constraint_density (float): Probability that a pair of variables is constrained.
    - tightness (float): Probability that a value pair of a constrained pair is forbidden.
    - seed (int): 64-bit seed.
    """
    n_vars: int
    domain_size: int
    constraint_density: float
    tightness: float
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise ValueError("n_vars must be non-negative, got {}".format(self.n_vars))
        if self.domain_size < 1:
            raise ValueError("domain_size must be at least 1, got {}".format(self.domain_size))
        for field in ("constraint_density", "tightness"):
            value = getattr(self, field)
            if not 0.0 <= value <= 1.0:
                raise ValueError("{} must lie in [0, 1], got {}".format(field, value))
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned value, got {}".format(self.seed))


def gen_random(params: GenParams) -> Instance:
    """Random instance, a pure function of `params`."""
    rng = SplitMix64(params.seed)
    values = range(1, params.domain_size + 1)
    value_pairs = list(product(values, values))
    relations = {}
    for x in range(params.n_vars):
        for y in range(x + 1, params.n_vars):
            if rng.uniform(1)[0] >= params.constraint_density:
                continue
            draws = rng.uniform(len(value_pairs))
            relations[(x, y)] = {pair for pair, u in zip(value_pairs, draws) if u >= params.tightness}
    return Instance([values] * params.n_vars, relations)


def gen_pattern_free(pattern: Pattern, params: GenParams, max_tries: int = 100,
                     strict_points: Optional[bool] = None) -> Optional[Instance]:
    """
    Rejection sampling: try seeds params.seed, params.seed + 1, ... until an instance
    avoids `pattern`.

    :return: The first pattern-free instance, or None after `max_tries` rejections.
    """
    for attempt in range(max_tries):
        candidate = gen_random(replace(params, seed=(params.seed + attempt) & MASK64))
        if occurs(pattern, candidate, strict_points) is None:
            LOG.info("%s-free instance accepted after %d of %d tries", pattern.name, attempt + 1, max_tries)
            return candidate
    LOG.info("no %s-free instance in %d tries", pattern.name, max_tries)
    return None


SWEEP_FRACTIONS = (0.3, 0.5, 0.7)


def iter_pattern_free(pattern: Pattern, count: int, seed: int = 0, max_vars: int = 7,
                      max_domain: int = 4, fractions: Sequence[float] = SWEEP_FRACTIONS,
                      max_tries: int = 20) -> Iterator[Instance]:
    """
    Yield up to `count` pattern-free instances, cycling over sizes 2..max_vars, domains
    2..max_domain and the density x tightness grid of `fractions`.
    """
    grid = [(n, d, density, tightness)
            for n in range(2, max_vars + 1)
            for d in range(2, max_domain + 1)
            for density in fractions
            for tightness in fractions]
    produced = tried = 0
    index = 0
    while produced < count and tried < count * 4:
        n, d, density, tightness = grid[index % len(grid)]
        params = GenParams(n, d, density, tightness, (seed + index * max_tries) & MASK64)
        index += 1
        tried += 1
        instance = gen_pattern_free(pattern, params, max_tries)
        if instance is not None:
            produced += 1
            yield instance
    LOG.info("%s: %d pattern-free instances from %d parameter points", pattern.name, produced, tried)
