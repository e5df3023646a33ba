from algorithms.propagate.arc_consistency import ArcConsistency, Trace, TraceStep, enforce_ac, revise, support_table
from algorithms.propagate.singleton import (
    ProbeOutcome,
    ProbeResult,
    SingletonArcConsistency,
    enforce_sac,
    is_sac,
    singleton_probe,
    trace_sets,
)

__all__ = [
    "ArcConsistency",
    "ProbeOutcome",
    "ProbeResult",
    "SingletonArcConsistency",
    "Trace",
    "TraceStep",
    "enforce_ac",
    "enforce_sac",
    "is_sac",
    "revise",
    "singleton_probe",
    "support_table",
    "trace_sets",
]
