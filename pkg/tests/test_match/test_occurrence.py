import pytest
from hypothesis import given
from hypothesis import strategies as st

from algorithms import config
from algorithms.catalog import get_pattern, list_patterns
from algorithms.csp_lib.instance import Instance
from algorithms.csp_lib.pattern import Pattern
from algorithms.instances.colouring import gen_kcoloring
from algorithms.match.algebra import drop_dangling, merge, mergeable_pairs
from algorithms.match.occurrence import OccurrenceWitness, find_all_at, occurs, occurs_at, occurs_in_pattern
from algorithms.propagate.arc_consistency import enforce_ac
from tests.strategies import random_sweep, small_instances

CATALOG = [entry.name for entry in list_patterns()]
MERGEABLE = [entry.name for entry in list_patterns() if mergeable_pairs(entry.pattern)]
# every same-variable point pair of these has a third point seen with opposite signs
SIGN_SEPARATED = ["T1", "M3", "Trestle", "Q1", "Q2"]


class TestOccurrence:
    def test_t1_occurs_in_three_colouring(self):
        instance = gen_kcoloring(4, 3)
        t1 = get_pattern("T1").pattern
        witness = occurs(t1, instance)
        assert witness is not None
        assert witness.verify(t1, instance)
        assert len(set(witness.var_map.values())) == 3

    def test_search_is_deterministic(self):
        instance = gen_kcoloring(4, 3)
        t4 = get_pattern("T4").pattern
        assert occurs(t4, instance) == occurs(t4, instance)

    def test_negative_edges_need_a_constraint(self):
        free = Instance([{1, 2}] * 3)
        assert occurs(get_pattern("V-").pattern, free) is None
        assert occurs(get_pattern("V").pattern, free, strict_points=True) is not None

    def test_strict_points(self):
        # a single allowed pair: V only occurs when y1 and y2 may share a value
        instance = Instance([{1}, {1, 2}], {(0, 1): {(1, 1)}})
        v = get_pattern("V").pattern
        assert occurs(v, instance, strict_points=False) is not None
        assert occurs(v, instance, strict_points=True) is None
        config.configure(strict_points=True)
        assert occurs(v, instance) is None

    def test_variables_map_injectively(self):
        # V- needs two distinct neighbours of x
        instance = Instance([{1, 2}, {1, 2}], {(0, 1): {(2, 2)}})
        assert occurs(get_pattern("V-").pattern, instance) is None

    def test_occurs_at(self):
        instance = Instance([{1, 2}, {1, 2}, {1, 2}], {(0, 1): {(2, 1), (2, 2), (1, 2)},
                                                       (0, 2): {(2, 1), (2, 2), (1, 2)}})
        vminus = get_pattern("V-").pattern
        assert occurs_at(vminus, ("x", "x1"), (0, 1), instance) is not None
        assert occurs_at(vminus, ("x", "x1"), (0, 2), instance) is None
        assert find_all_at(vminus, ("x", "x1"), instance) == [(0, 1)]
        with pytest.raises(ValueError):
            occurs_at(vminus, ("x", "x9"), (0, 1), instance)
        with pytest.raises(ValueError):
            occurs_at(vminus, ("x", "x1"), (0, 7), instance)

    def test_occurs_in_pattern(self):
        v2 = get_pattern("V2").pattern
        t4 = get_pattern("T4").pattern
        witness = occurs_in_pattern(v2, t4)
        assert witness is not None
        assert witness.point_map[("m", "m3")] == ("z", "z2")
        assert witness.verify(v2, t4)
        assert occurs_in_pattern(get_pattern("T1").pattern, v2) is None

    def test_tampered_witness_fails(self):
        instance = gen_kcoloring(3, 3)
        t1 = get_pattern("T1").pattern
        witness = occurs(t1, instance)
        points = dict(witness.point_map)
        points[("z", "z2")] = points[("z", "z1")]
        assert not OccurrenceWitness(witness.var_map, points).verify(t1, instance)

    def test_single_point_pattern_occurs_anywhere(self):
        point = Pattern({"x": ["x1"]})
        assert occurs(point, Instance([{3}])) is not None
        assert occurs(point, Instance([set()])) is None

    def test_format(self):
        instance = Instance([{1}, {1, 2}], {(0, 1): {(1, 1)}})
        witness = occurs(Pattern.build({"x": ["x1"], "y": ["y1"]}, neg=[("x1", "y1")]), instance)
        assert witness.format() == "x.x1 -> x0=1\ny.y1 -> x1=2\n"

    @given(small_instances())
    def test_witnesses_verify(self, instance):
        for name in ("T4", "V-", "Q2"):
            pattern = get_pattern(name).pattern
            witness = occurs(pattern, instance)
            if witness is not None:
                assert witness.verify(pattern, instance)


def value_removal_is_safe(pattern, instance):
    if occurs(pattern, instance) is not None:
        return
    for x, v in instance.points():
        assert occurs(pattern, instance.remove_value(x, v)) is None, (pattern.name, x, v)


def merged_occurrence_implies_original(pattern, instance):
    if occurs(merge(pattern), instance, strict_points=False) is not None:
        assert occurs(pattern, instance, strict_points=False) is not None, pattern.name


def dangling_points_are_redundant(pattern, instance):
    closed, _ = enforce_ac(instance)
    if closed.has_empty_domain() or len(closed) < len(pattern.variables):
        return
    assert (occurs(pattern, closed) is None) == (occurs(drop_dangling(pattern), closed) is None), pattern.name


def strict_implies_loose(pattern, instance):
    if occurs(pattern, instance, strict_points=True) is not None:
        assert occurs(pattern, instance, strict_points=False) is not None, pattern.name


def semantics_agree(pattern, instance):
    strict = occurs(pattern, instance, strict_points=True)
    assert (strict is None) == (occurs(pattern, instance, strict_points=False) is None), pattern.name


class TestOccurrenceProperties:
    @given(small_instances(max_vars=4), st.sampled_from(CATALOG))
    def test_value_removal_creates_no_occurrence(self, instance, name):
        value_removal_is_safe(get_pattern(name).pattern, instance)

    @given(small_instances(), st.sampled_from(MERGEABLE))
    def test_merged_pattern(self, instance, name):
        merged_occurrence_implies_original(get_pattern(name).pattern, instance)

    @given(small_instances(), st.sampled_from(CATALOG))
    def test_dangling_points_on_arc_consistent_instances(self, instance, name):
        dangling_points_are_redundant(get_pattern(name).pattern, instance)

    @given(small_instances(), st.sampled_from(CATALOG))
    def test_strict_implies_loose(self, instance, name):
        strict_implies_loose(get_pattern(name).pattern, instance)

    @given(small_instances(), st.sampled_from(SIGN_SEPARATED))
    def test_sign_separated_patterns_ignore_point_semantics(self, instance, name):
        semantics_agree(get_pattern(name).pattern, instance)

    def test_merge_of_v_is_a_single_edge(self):
        instance = Instance([{1}, {1, 2}], {(0, 1): {(1, 1)}})
        v = get_pattern("V").pattern
        assert occurs(merge(v), instance, strict_points=False) is not None
        assert occurs(v, instance, strict_points=False) is not None
        assert occurs(v, instance, strict_points=True) is None


@pytest.mark.slow
class TestOccurrenceSweeps:
    def test_value_removal(self):
        for index, instance in enumerate(random_sweep(200, seed=101, max_vars=4)):
            value_removal_is_safe(get_pattern(CATALOG[index % len(CATALOG)]).pattern, instance)

    def test_merged_patterns(self):
        for instance in random_sweep(100, seed=202):
            for name in MERGEABLE:
                merged_occurrence_implies_original(get_pattern(name).pattern, instance)

    def test_dangling_points(self):
        for instance in random_sweep(100, seed=303):
            for name in CATALOG:
                dangling_points_are_redundant(get_pattern(name).pattern, instance)

    def test_point_semantics(self):
        for instance in random_sweep(200, seed=404):
            for name in CATALOG:
                strict_implies_loose(get_pattern(name).pattern, instance)
            for name in SIGN_SEPARATED:
                semantics_agree(get_pattern(name).pattern, instance)
