import pytest

from algorithms.catalog import get_pattern
from algorithms.csp_lib.errors import PatternOccursError, PreconditionError
from algorithms.csp_lib.instance import Instance, verify_solution
from algorithms.instances.colouring import gen_kcoloring
from algorithms.match.occurrence import occurs
from algorithms.propagate.singleton import is_sac
from algorithms.solve.r5 import deletion_repair, repair_r5, solve_r5

UNEQUAL = {(1, 2), (2, 1)}
# (1, 1) allowed for the current s, (2, 1) blocks the first move of x0
R02 = {(1, 1), (1, 2), (2, 2)}


class TestRepair:
    def test_satisfied_constraint_is_kept(self):
        instance = Instance([{1, 2}] * 2, {(0, 1): UNEQUAL})
        assert dict(repair_r5(instance, {0: 1, 1: 2}, 0, 1)) == {0: 1, 1: 2}

    def test_move_x(self):
        instance = Instance([{1, 2}] * 2, {(0, 1): {(1, 1), (2, 2)}})
        assert dict(repair_r5(instance, {0: 1, 1: 2}, 0, 1)) == {0: 2, 1: 2}

    def test_move_y(self):
        # x0 = x, x1 = y, x2 = w, x3 = z; x0 := 2 clashes with s[x2] = 1, y := 2 fits w
        instance = Instance([{1, 2}] * 4, {(0, 1): UNEQUAL, (0, 2): R02, (1, 3): {(1, 1), (2, 1), (2, 2)}})
        assert is_sac(instance)
        assert occurs(get_pattern("R5").pattern, instance) is None
        repaired = repair_r5(instance, {0: 1, 1: 1, 2: 1, 3: 1}, 0, 1)
        assert dict(repaired) == {0: 1, 1: 2, 2: 1, 3: 1}
        assert verify_solution(instance, repaired)

    def test_move_y_and_w(self):
        # y := 2 clashes with s[x2] = 1, so x2 moves to the third corner of the triangle
        instance = Instance([{1, 2}, {1, 2, 3}, {1, 2}, {1, 2}], {
            (0, 1): {(1, 2), (1, 3), (2, 1)},
            (0, 2): R02,
            (1, 2): {(1, 1), (1, 2), (2, 2), (3, 1), (3, 2)},
            (2, 3): {(1, 1), (2, 1), (2, 2)},
        })
        assert is_sac(instance)
        assert occurs(get_pattern("R5").pattern, instance) is None
        repaired = repair_r5(instance, {0: 1, 1: 1, 2: 1, 3: 1}, 0, 1)
        assert dict(repaired) == {0: 1, 1: 2, 2: 2, 3: 1}
        assert verify_solution(instance, repaired)

    def test_other_violations_are_rejected(self):
        instance = Instance([{1, 2}] * 3, {(0, 1): UNEQUAL, (1, 2): UNEQUAL})
        with pytest.raises(PreconditionError):
            repair_r5(instance, {0: 1, 1: 1, 2: 1}, 0, 1)


class TestDeletionRepair:
    def test_triangle(self):
        instance = gen_kcoloring(3, 3)
        assert dict(deletion_repair(instance)) == {0: 3, 1: 2, 2: 1}

    def test_solve_with_repair(self):
        instance = gen_kcoloring(3, 3)
        report = solve_r5(instance, repair=True)
        assert report.is_sat
        assert dict(report.certificate) == {0: 3, 1: 2, 2: 1}

    def test_pattern_is_rejected(self):
        with pytest.raises(PatternOccursError):
            solve_r5(gen_kcoloring(4, 3))
