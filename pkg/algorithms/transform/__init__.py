from algorithms.transform.btp import btp_merge, btp_merge_fixpoint, btp_mergeable
from algorithms.transform.log import ConstraintDeleted, Merged, NsRemoved, TransformLog
from algorithms.transform.operations import delete_constraint, merge_values
from algorithms.transform.substitution import is_ns, ns_eliminate

__all__ = [
    "ConstraintDeleted",
    "Merged",
    "NsRemoved",
    "TransformLog",
    "btp_merge",
    "btp_merge_fixpoint",
    "btp_mergeable",
    "delete_constraint",
    "is_ns",
    "merge_values",
    "ns_eliminate",
]
