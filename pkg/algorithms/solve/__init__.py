from algorithms.solve.classify import CLASS_SOLVERS, ClassificationReport, auto_solve, classify
from algorithms.solve.generic import sac_construct, solve_acyclic, solve_by_sac
from algorithms.solve.oracle import OracleSolver, oracle_solve
from algorithms.solve.q1 import solve_q1
from algorithms.solve.q2 import solve_q2, vminus_construct
from algorithms.solve.r5 import repair_r5, solve_r5
from algorithms.solve.r7m import solve_r7m
from algorithms.solve.r8 import solve_r8
from algorithms.solve.report import SolveReport, SolveStats, SolveStatus
from algorithms.solve.t3 import solve_t3

__all__ = [
    "CLASS_SOLVERS",
    "ClassificationReport",
    "OracleSolver",
    "SolveReport",
    "SolveStats",
    "SolveStatus",
    "auto_solve",
    "classify",
    "oracle_solve",
    "repair_r5",
    "sac_construct",
    "solve_acyclic",
    "solve_by_sac",
    "solve_q1",
    "solve_q2",
    "solve_r5",
    "solve_r7m",
    "solve_r8",
    "solve_t3",
    "vminus_construct",
]
