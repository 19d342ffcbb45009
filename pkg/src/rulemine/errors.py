"""Exception types shared across the package."""


class RuleMineError(Exception):
    """Base class for all rulemine errors."""


class InvalidItemToken(RuleMineError, ValueError):
    """An item token is empty after trimming surrounding whitespace."""


class MalformedRecord(RuleMineError, ValueError):
    """A data record cannot be parsed. Carries the 1-based line number."""

    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no
        self.detail = detail


class SourceReadError(RuleMineError, OSError):
    """A dataset source could not be read."""


class UnknownItem(RuleMineError, LookupError):
    """An item id or token is not part of the database dictionary."""


class NonDisjointItemsets(RuleMineError, ValueError):
    """Two itemsets that must be disjoint share at least one item."""


class EmptyItemset(RuleMineError, ValueError):
    """An operation received an empty itemset where a non-empty one is required."""


class InvalidConfig(RuleMineError, ValueError):
    """A run or mining configuration value is out of range or unparseable."""


class InternalInvariantViolation(RuleMineError):
    """An internal precondition was broken; indicates a bug in the caller."""
