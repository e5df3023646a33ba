from __future__ import annotations
from typing import Any, List, Optional


class FormatError(ValueError):
    """
    Raised when an instance or pattern document does not follow its grammar.

    Attributes:
    - lineno (int): 1-based line number of the offending line (0 when the whole document is at fault).
    """
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__("line {}: {}".format(lineno, message))
        self.lineno = lineno


class PreconditionError(ValueError):
    """Raised when a solver or transform is called outside its precondition."""


class PatternOccursError(PreconditionError):
    """
    Raised by a class solver whose forbidden pattern occurs in the input.

    Attributes:
    - pattern (str): Catalog name of the pattern.
    - witness (OccurrenceWitness): The occurrence that was found.
    """
    def __init__(self, pattern: str, witness: Any) -> None:
        super().__init__("pattern {} occurs: {}".format(pattern, witness))
        self.pattern = pattern
        self.witness = witness


class LemmaViolation(AssertionError):
    """
    Raised when a structural property that a class solver relies on fails at runtime.

    Attributes:
    - lemma (str): Short name of the property.
    - details (List[str]): One line per violation found.
    """
    def __init__(self, lemma: str, details: Optional[List[str]] = None) -> None:
        self.lemma = lemma
        self.details = list(details or [])
        message = "structural check '{}' failed".format(lemma)
        if self.details:
            message += ": " + "; ".join(self.details)
        super().__init__(message)
