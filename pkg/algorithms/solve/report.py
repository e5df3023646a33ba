from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Optional, Tuple

from algorithms.csp_lib.instance import Assignment


class SolveStatus(Enum):
    SAT = "sat"
    UNSAT = "unsat"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SolveStats:
    """
    Work counters of one solver run.

    Attributes:
    - probes (int): Singleton probes run, SAC enforcement included.
    - nodes (int): Search nodes visited by the oracle.
    - rounds (Tuple[FrozenSet[int], ...]): Variables set aside by each extraction round.
    """
    probes: int = 0
    nodes: int = 0
    rounds: Tuple[FrozenSet[int], ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class SolveReport:
    """
    Outcome of a solver.

    Attributes:
    - status (SolveStatus): Whether the instance has a solution.
    - certificate (Optional[Assignment]): A solution, when one was constructed.
    - method (str): Which procedure decided the instance.
    - stats (SolveStats): Work counters.
    """
    status: SolveStatus
    certificate: Optional[Assignment] = None
    method: str = ""
    stats: SolveStats = field(default_factory=SolveStats)

    @classmethod
    def sat(cls, method: str, certificate: Optional[Assignment] = None,
            stats: Optional[SolveStats] = None) -> SolveReport:
        return cls(SolveStatus.SAT, certificate, method, stats or SolveStats())

    @classmethod
    def unsat(cls, method: str, stats: Optional[SolveStats] = None) -> SolveReport:
        return cls(SolveStatus.UNSAT, None, method, stats or SolveStats())

    @property
    def is_sat(self) -> bool:
        return self.status is SolveStatus.SAT

    def format(self) -> str:
        """Status line followed by the certificate lines, if any."""
        text = "{}\n".format(self.status)
        if self.certificate is not None:
            text += self.certificate.format()
        return text
