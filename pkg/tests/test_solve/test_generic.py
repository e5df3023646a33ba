import pytest

from algorithms.csp_lib.errors import PatternOccursError, PreconditionError
from algorithms.csp_lib.instance import Instance, verify_solution
from algorithms.instances.colouring import gen_kcoloring
from algorithms.propagate.arc_consistency import enforce_ac
from algorithms.solve.generic import sac_construct, solve_acyclic, solve_by_sac

VALUES = [1, 2, 3]
LESS = {(a, b) for a in VALUES for b in VALUES if a < b}


class TestSolveAcyclic:
    def test_chain(self):
        instance, _ = enforce_ac(Instance([VALUES] * 3, {(0, 1): LESS, (1, 2): LESS}))
        report = solve_acyclic(instance)
        assert dict(report.certificate) == {0: 1, 1: 2, 2: 3}

    def test_star_takes_first_supports(self):
        unequal = {(a, b) for a in VALUES for b in VALUES if a != b}
        instance = Instance([VALUES] * 4, {(0, 1): unequal, (0, 2): unequal, (3, 0): unequal})
        report = solve_acyclic(instance)
        assert dict(report.certificate) == {0: 1, 1: 2, 2: 2, 3: 2}
        assert verify_solution(instance, report.certificate)

    def test_rejects_cycles(self):
        with pytest.raises(PreconditionError):
            solve_acyclic(gen_kcoloring(3, 3))

    def test_rejects_non_arc_consistent(self):
        with pytest.raises(PreconditionError):
            solve_acyclic(Instance([VALUES] * 2, {(0, 1): LESS}))

    def test_rejects_empty_domains(self):
        with pytest.raises(PreconditionError):
            solve_acyclic(Instance([set(), {1}]))

    def test_no_variables(self):
        assert solve_acyclic(Instance([])).is_sat


class TestSacConstruct:
    def test_builds_a_solution(self):
        instance = gen_kcoloring(4, 4)
        report = sac_construct(instance)
        assert report.is_sat
        assert verify_solution(instance, report.certificate)
        assert report.stats.probes > 0

    def test_needs_a_sac_instance(self):
        with pytest.raises(PreconditionError):
            sac_construct(gen_kcoloring(3, 2))


class TestSolveBySac:
    def test_rejects_instances_with_the_pattern(self):
        with pytest.raises(PatternOccursError) as info:
            solve_by_sac(gen_kcoloring(4, 3), "T4")
        assert info.value.pattern == "T4"

    def test_decides_without_construction(self):
        instance = Instance([{1, 2}] * 2, {(0, 1): {(1, 2), (2, 1)}})
        report = solve_by_sac(instance, "T4", construct=False)
        assert report.is_sat
        assert report.certificate is None
        assert report.method == "solve_by_sac:T4"

    def test_unsat_by_sac(self):
        instance = Instance([{1}, {1}], {(0, 1): set()})
        report = solve_by_sac(instance, "T5")
        assert not report.is_sat
