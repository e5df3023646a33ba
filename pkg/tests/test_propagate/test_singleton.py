import pytest
from hypothesis import given
from hypothesis import strategies as st

from algorithms.catalog import get_pattern, list_patterns
from algorithms.csp_lib.instance import Instance
from algorithms.instances.colouring import gen_i5, gen_i34, gen_kcoloring
from algorithms.instances.random_instances import iter_pattern_free
from algorithms.match.occurrence import occurs
from algorithms.propagate.arc_consistency import enforce_ac
from algorithms.propagate.singleton import (
    ProbeOutcome,
    SingletonArcConsistency,
    enforce_sac,
    is_sac,
    singleton_probe,
    trace_sets,
)
from algorithms.solve.oracle import oracle_solve
from tests.strategies import random_sweep, small_instances

CATALOG = [entry.name for entry in list_patterns()]
# two-variable instances avoid these, so pattern-free samples are plentiful
WIDE = [entry.name for entry in list_patterns() if len(entry.pattern.variables) >= 3]


def equality_path():
    equal = {(1, 1), (2, 2)}
    return Instance([{1, 2}] * 3, {(0, 1): equal, (1, 2): equal})


class TestSingletonProbe:
    def test_probe_survives(self):
        result = singleton_probe(equality_path(), 0, 1)
        assert result.survived
        assert result.reduced.domains == {0: frozenset({1}), 1: frozenset({1}), 2: frozenset({1})}
        assert trace_sets(result.trace, 0) == (frozenset({0, 1, 2}), frozenset({0, 1}))

    def test_probe_wipes_out(self):
        result = singleton_probe(gen_kcoloring(3, 2), 0, 1)
        assert result.outcome is ProbeOutcome.WIPEOUT
        assert result.reduced is None

    def test_quiet_probe(self):
        result = singleton_probe(Instance([{1, 2}, {1, 2}]), 0, 2)
        assert result.survived
        assert trace_sets(result.trace, 0) == (frozenset({0}), frozenset())


class TestSingletonArcConsistency:
    def test_triangle_two_colouring_is_refuted(self):
        instance = gen_kcoloring(3, 2)
        assert not is_sac(instance)
        assert enforce_sac(instance).has_empty_domain()

    def test_colouring_counterexamples_are_sac(self):
        for instance in (gen_kcoloring(4, 3), gen_i34(), gen_i5()):
            assert is_sac(instance)
            assert enforce_sac(instance) == instance

    def test_removes_unsupported_singletons(self):
        # x0 = 1 forces x1 = 1 and x2 = 2, which conflict
        instance = Instance([{1, 2}] * 3, {(0, 1): {(1, 1), (2, 1), (2, 2)},
                                           (0, 2): {(1, 2), (2, 1), (2, 2)},
                                           (1, 2): {(1, 1), (2, 2), (2, 1)}})
        closed = enforce_sac(instance)
        assert closed.domain(0) == frozenset({2})
        assert is_sac(closed)

    def test_counts_probes(self):
        sac = SingletonArcConsistency(equality_path())
        sac.run()
        assert sac.probe_count == 6

    @given(small_instances())
    def test_thread_rounds_reach_the_same_closure(self, instance):
        sequential = enforce_sac(instance, jobs=1)
        parallel = enforce_sac(instance, jobs=3)
        assert sequential.has_empty_domain() == parallel.has_empty_domain()
        if not sequential.has_empty_domain():
            assert sequential == parallel

    @given(small_instances())
    def test_closure_keeps_solutions(self, instance):
        closed = enforce_sac(instance)
        report = oracle_solve(instance)
        if report.is_sat:
            assert not closed.has_empty_domain()
            assert all(report.certificate[x] in closed.domain(x) for x in instance.variables)
        if not closed.has_empty_domain():
            assert is_sac(closed)


def closure_is_sac_and_arc_consistent(instance):
    closed = enforce_sac(instance)
    if closed.has_empty_domain():
        return
    assert is_sac(closed)
    assert enforce_ac(closed)[0] == closed


class TestClosureProperties:
    @given(small_instances())
    def test_closure_is_sac_and_arc_consistent(self, instance):
        closure_is_sac_and_arc_consistent(instance)

    @given(small_instances(), st.sampled_from(CATALOG))
    def test_closure_keeps_patterns_out(self, instance, name):
        pattern = get_pattern(name).pattern
        if occurs(pattern, instance) is None:
            assert occurs(pattern, enforce_sac(instance)) is None

    @pytest.mark.slow
    def test_closure_sweep(self):
        for instance in random_sweep(200, seed=53):
            closure_is_sac_and_arc_consistent(instance)
            report = oracle_solve(instance)
            if report.is_sat:
                assert all(report.certificate[x] in enforce_sac(instance).domain(x) for x in instance.variables)

    @pytest.mark.slow
    @pytest.mark.parametrize("name", WIDE)
    def test_pattern_free_sweep(self, name):
        pattern = get_pattern(name).pattern
        checked = 0
        for instance in iter_pattern_free(pattern, 200, seed=59, max_vars=5, max_domain=3, max_tries=50):
            assert occurs(pattern, enforce_sac(instance)) is None, instance.relations
            checked += 1
        assert checked == 200
