from hypothesis import strategies as st

from algorithms.instances.random_instances import SWEEP_FRACTIONS, GenParams, gen_random


@st.composite
def small_instances(draw, max_vars=5, max_domain=3):
    params = GenParams(
        n_vars=draw(st.integers(1, max_vars)),
        domain_size=draw(st.integers(1, max_domain)),
        constraint_density=draw(st.sampled_from([0.3, 0.6, 1.0])),
        tightness=draw(st.sampled_from([0.2, 0.4, 0.6])),
        seed=draw(st.integers(0, 2 ** 32)),
    )
    return gen_random(params)


def random_sweep(count, seed=0, max_vars=5, max_domain=3):
    """`count` seeded instances, cycling over sizes, domains and the density x tightness grid."""
    grid = [(n, d, density, tightness)
            for n in range(2, max_vars + 1)
            for d in range(2, max_domain + 1)
            for density in SWEEP_FRACTIONS
            for tightness in SWEEP_FRACTIONS]
    for index in range(count):
        n, d, density, tightness = grid[index % len(grid)]
        yield gen_random(GenParams(n, d, density, tightness, seed + index))
