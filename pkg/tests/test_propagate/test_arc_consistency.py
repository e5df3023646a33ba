from itertools import islice

import pytest
from hypothesis import given

from algorithms.csp_lib.instance import Instance
from algorithms.propagate.arc_consistency import ArcConsistency, Trace, TraceStep, enforce_ac, revise, support_table
from algorithms.solve.oracle import oracle_solve
from tests.strategies import random_sweep, small_instances

VALUES = [1, 2, 3]


def ordered_chain():
    """x0 < x1 < x2 over {1, 2, 3}."""
    less = {(a, b) for a in VALUES for b in VALUES if a < b}
    return Instance([VALUES] * 3, {(0, 1): less, (1, 2): less})


class TestArcConsistency:
    def test_revise(self):
        instance = Instance([{1, 2}, {1, 2}], {(0, 1): {(1, 1)}})
        assert revise(instance, 0, 1) == frozenset({2})
        assert revise(instance, 1, 0) == frozenset({2})
        assert revise(Instance([{1}, {1}]), 0, 1) == frozenset()
        with pytest.raises(ValueError):
            revise(instance, 0, 0)

    def test_chain_trace(self):
        reduced, trace = enforce_ac(ordered_chain())
        assert reduced.domains == {0: frozenset({1}), 1: frozenset({2}), 2: frozenset({3})}
        assert trace.format() == "0 -> 1 : {1}\n1 -> 0 : {3}\n1 -> 2 : {1,2}\n2 -> 1 : {3}\n1 -> 0 : {2}\n"
        assert trace[0] == TraceStep(0, 1, frozenset({1}))

    def test_replay(self):
        instance = ordered_chain()
        reduced, trace = enforce_ac(instance)
        assert trace.replay(instance) == reduced

    def test_wipeout_stops(self):
        instance = Instance([{1}, {1}, {1, 2}], {(0, 1): set(), (1, 2): {(1, 1)}})
        reduced, trace = enforce_ac(instance)
        assert reduced.has_empty_domain()
        assert len(trace) == 1

    def test_arc_consistent_instance_is_unchanged(self):
        instance = Instance([{1, 2}, {1, 2}], {(0, 1): {(1, 2), (2, 1)}})
        reduced, trace = enforce_ac(instance)
        assert reduced == instance
        assert trace == Trace()

    def test_support_table(self):
        instance = Instance([{1, 2}, {1, 2}], {(0, 1): {(1, 1), (1, 2)}})
        table = support_table(instance)
        assert table[(0, 1)][1] == frozenset({1, 2})
        assert table[(0, 1)][2] == frozenset()
        assert table[(1, 0)][2] == frozenset({1})

    def test_arcs_only_cover_constraints(self):
        instance = Instance([{1, 2}] * 3, {(0, 2): {(1, 1)}})
        assert ArcConsistency(instance).arcs() == [(0, 2), (2, 0)]


def closures_agree(instance):
    forward, _ = enforce_ac(instance)
    ac = ArcConsistency(instance)
    backward, _ = ac.run(list(reversed(ac.arcs())))
    assert forward.has_empty_domain() == backward.has_empty_domain()
    if not forward.has_empty_domain():
        assert forward == backward


def satisfiable_instances(count, seed):
    reports = ((instance, oracle_solve(instance)) for instance in random_sweep(count * 10, seed=seed))
    return list(islice(((i, r.certificate) for i, r in reports if r.is_sat), count))


class TestClosureProperties:
    @given(small_instances())
    def test_schedule_does_not_change_the_closure(self, instance):
        closures_agree(instance)

    @given(small_instances())
    def test_solution_values_survive(self, instance):
        report = oracle_solve(instance)
        if report.is_sat:
            reduced, _ = enforce_ac(instance)
            assert all(report.certificate[x] in reduced.domain(x) for x in instance.variables)

    def test_reversed_schedule_on_a_chain(self):
        instance = ordered_chain()
        ac = ArcConsistency(instance)
        reduced, trace = ac.run(list(reversed(ac.arcs())))
        assert reduced == enforce_ac(instance)[0]
        assert trace != enforce_ac(instance)[1]

    @pytest.mark.slow
    def test_schedules_sweep(self):
        for instance in random_sweep(100, seed=17):
            closures_agree(instance)

    @pytest.mark.slow
    def test_soundness_sweep(self):
        cases = satisfiable_instances(200, seed=23)
        assert len(cases) == 200
        for instance, solution in cases:
            reduced, _ = enforce_ac(instance)
            assert all(solution[x] in reduced.domain(x) for x in instance.variables)
