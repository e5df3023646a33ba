import pytest

from algorithms.csp_lib.errors import PatternOccursError, PreconditionError
from algorithms.csp_lib.instance import Instance, verify_solution
from algorithms.instances.colouring import gen_kcoloring
from algorithms.solve.q2 import ChainBuilder, solve_q2, vminus_construct


def forbid(dx, dy, pairs):
    return {(a, b) for a in dx for b in dy if (a, b) not in pairs}


class TestChainBuilder:
    @pytest.fixture(autouse=True)
    def setup(self):
        # each value i of the centre conflicts with value 1 of leaf i only
        centre, leaf = {1, 2, 3}, {1, 2}
        self.star = Instance([centre, leaf, leaf, leaf],
                             {(0, i): forbid(centre, leaf, {(i, 1)}) for i in (1, 2, 3)})

    def test_chain_from_heavy_variable(self):
        builder = ChainBuilder(self.star)
        solution = builder.construct()
        assert builder.chains == [[0, 1]]
        assert dict(solution) == {0: 1, 1: 2, 2: 1, 3: 1}
        assert verify_solution(self.star, solution)

    def test_cycle_is_cut(self):
        instance = gen_kcoloring(3, 3)
        report = vminus_construct(instance)
        assert dict(report.certificate) == {0: 1, 1: 2, 2: 3}
        assert report.stats.probes == 1

    def test_vminus_at_a_heavy_variable(self):
        equal = {(1, 1), (2, 2)}
        star = Instance([{1, 2}] * 4, {(0, 1): equal, (0, 2): equal, (0, 3): equal})
        with pytest.raises(PreconditionError):
            vminus_construct(star)

    def test_empty_domain(self):
        with pytest.raises(PreconditionError):
            vminus_construct(Instance([set()]))


class TestSolveQ2:
    def test_pattern_is_rejected(self):
        with pytest.raises(PatternOccursError):
            solve_q2(gen_kcoloring(4, 3))

    def test_triangle(self):
        instance = gen_kcoloring(3, 3)
        report = solve_q2(instance)
        assert report.is_sat
        assert verify_solution(instance, report.certificate)
