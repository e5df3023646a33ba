from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Mapping, Tuple, Union

from algorithms.csp_lib.errors import PreconditionError
from algorithms.csp_lib.instance import Assignment, Instance
from algorithms.transform.operations import delete_constraint, merge_values


@dataclass(frozen=True)
class NsRemoved:
    """Value removed from D(var) because `by` is compatible with everything it was."""
    var: int
    value: int
    by: int

    def apply(self, instance: Instance) -> Instance:
        return instance.remove_value(self.var, self.value)

    def format(self) -> str:
        return "ns_removed x{}={} by {}".format(self.var, self.value, self.by)


@dataclass(frozen=True)
class Merged:
    """Values `first` and `second` of `var` fused into `into`."""
    var: int
    first: int
    second: int
    into: int

    def apply(self, instance: Instance) -> Instance:
        return merge_values(instance, self.var, self.first, self.second, self.into)

    def format(self) -> str:
        return "merged x{}: {},{} -> {}".format(self.var, self.first, self.second, self.into)


@dataclass(frozen=True)
class ConstraintDeleted:
    x: int
    y: int

    def apply(self, instance: Instance) -> Instance:
        return delete_constraint(instance, self.x, self.y)

    def format(self) -> str:
        return "constraint_deleted x{} x{}".format(self.x, self.y)


Record = Union[NsRemoved, Merged, ConstraintDeleted]


class TransformLog:
    """
    Ordered record of satisfiability-preserving edits. Replaying the log on the input
    of a transform reproduces its output.
    """

    def __init__(self, records: Iterable[Record] = ()) -> None:
        self.records: Tuple[Record, ...] = tuple(records)

    def __iter__(self) -> Iterator[Record]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __add__(self, other: TransformLog) -> TransformLog:
        return TransformLog(self.records + other.records)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransformLog):
            return NotImplemented
        return self.records == other.records

    def __repr__(self) -> str:
        return "TransformLog({})".format(list(self.records))

    def format(self) -> str:
        return "".join(record.format() + "\n" for record in self.records)

    def stages(self, instance: Instance) -> List[Instance]:
        """The input followed by the instance after each record."""
        stages = [instance]
        for record in self.records:
            stages.append(record.apply(stages[-1]))
        return stages

    def replay(self, instance: Instance) -> Instance:
        return self.stages(instance)[-1]

    def expand(self, original: Instance, s: Mapping[int, int]) -> Assignment:
        """
        Map a solution of the transformed instance back onto `original`.

        Merged values are split again, latest merge first: the merged value becomes
        whichever of the two original values is compatible with the rest of `s` in the
        instance before that merge (the first one when both are).

        :raises PreconditionError: When neither value fits, which only happens after a merge
            that a broken triangle should have blocked.
        """
        stages = self.stages(original)
        bindings = dict(s)
        for record, before in zip(reversed(self.records), reversed(stages[:-1])):
            if not isinstance(record, Merged) or bindings.get(record.var) != record.into:
                continue
            x = record.var
            for candidate in (record.first, record.second):
                if all(y not in bindings or before.allowed(x, candidate, y, bindings[y])
                       for y in before.neighbours(x)):
                    bindings[x] = candidate
                    break
            else:
                raise PreconditionError(
                    "neither x{0}={1} nor x{0}={2} fits the rest of the assignment; "
                    "the merge of {1} and {2} was not BTP-safe".format(x, record.first, record.second))
        return Assignment(bindings)

    def substitute(self, s: Mapping[int, int]) -> Assignment:
        """
        Push an assignment forward across the NS removals: a value removed in favour of
        another is replaced by it, in log order.
        """
        bindings = dict(s)
        for record in self.records:
            if isinstance(record, NsRemoved) and bindings.get(record.var) == record.value:
                bindings[record.var] = record.by
        return Assignment(bindings)
