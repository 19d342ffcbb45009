"""Level-wise frequent itemset search and rule generation.

Thresholds are exact rationals: a count of 30 over 60 transactions meets
min_support "0.5" with no float epsilon involved, which keeps golden
reports deterministic however the thresholds were written.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from typing import Collection, Sequence, Union

from .errors import (
    EmptyItemset,
    InternalInvariantViolation,
    InvalidConfig,
    NonDisjointItemsets,
)
from .transactions import Itemset, TransactionDatabase

__all__ = [
    "AssociationRule",
    "FrequentItemset",
    "MiningConfig",
    "apriori",
    "candidate_join_prune",
    "generate_rules",
    "to_fraction",
]

ThresholdLike = Union[str, int, float, Fraction, Decimal]


def to_fraction(value: ThresholdLike) -> Fraction:
    """Exact rational from a decimal string, int, float literal or Fraction.

    Floats go through repr, so 0.1 means the decimal one tenth rather than
    the nearest binary double.
    """
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidConfig(f"cannot parse threshold {value!r}") from exc


@dataclass(frozen=True)
class MiningConfig:
    """Mining thresholds, held as exact fractions in [0, 1]."""

    min_support: Fraction
    min_confidence: Fraction
    max_itemset_size: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_support", to_fraction(self.min_support))
        object.__setattr__(self, "min_confidence", to_fraction(self.min_confidence))
        for name in ("min_support", "min_confidence"):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise InvalidConfig(f"{name} must lie in [0, 1], got {value}")
        if self.max_itemset_size is not None:
            if isinstance(self.max_itemset_size, bool) or not isinstance(self.max_itemset_size, int):
                raise InvalidConfig("max_itemset_size must be an integer or None")
            if self.max_itemset_size < 1:
                raise InvalidConfig("max_itemset_size must be positive")


@dataclass(frozen=True)
class FrequentItemset:
    itemset: Itemset
    count: int
    support: float


@dataclass(frozen=True)
class AssociationRule:
    """X => Y with disjoint, non-empty sides."""

    antecedent: Itemset
    consequent: Itemset

    def __post_init__(self) -> None:
        if len(self.antecedent) == 0 or len(self.consequent) == 0:
            raise EmptyItemset("rule sides must be non-empty")
        if not self.antecedent.isdisjoint(self.consequent):
            raise NonDisjointItemsets("rule sides must be disjoint")


def candidate_join_prune(level: Collection[Itemset]) -> set[Itemset]:
    """Size k+1 candidates from a complete size-k frequent level.

    Joins pairs sharing a (k-1)-prefix, then prunes every candidate with
    a k-subset missing from the input. Mixed input sizes indicate a
    caller bug and raise InternalInvariantViolation.
    """
    known = set(level)
    if not known:
        return set()
    sizes = {len(s) for s in known}
    if len(sizes) != 1:
        raise InternalInvariantViolation(f"mixed itemset sizes in join input: {sorted(sizes)}")
    k = sizes.pop()
    if k == 0:
        raise InternalInvariantViolation("cannot join empty itemsets")
    ordered = sorted(known)
    out: set[Itemset] = set()
    for i, left in enumerate(ordered):
        for right in ordered[i + 1:]:
            if left.items[: k - 1] != right.items[: k - 1]:
                break
            candidate = Itemset(left.items + (right.items[-1],))
            if all(Itemset(sub) in known for sub in combinations(candidate.items, k)):
                out.add(candidate)
    return out


def apriori(db: TransactionDatabase, cfg: MiningConfig) -> list[FrequentItemset]:
    """All itemsets whose count passes the exact support threshold.

    Level-wise search over the item dictionary, so with min_support 0
    every subset of the item universe (within the size cap) qualifies,
    whether or not it ever occurs. Output is sorted by (size, item ids).
    An empty database yields nothing: no itemset has a defined support.
    """
    if db.n == 0:
        return []
    threshold = cfg.min_support * db.n
    cap = cfg.max_itemset_size
    result: list[FrequentItemset] = []
    current: list[Itemset] = []
    for item_id in range(len(db.dictionary)):
        candidate = Itemset((item_id,))
        count = db.support_count(candidate)
        if count >= threshold:
            current.append(candidate)
            result.append(FrequentItemset(candidate, count, count / db.n))
    size = 1
    while current and (cap is None or size < cap):
        next_level: list[Itemset] = []
        for candidate in sorted(candidate_join_prune(current)):
            count = db.support_count(candidate)
            if count >= threshold:
                next_level.append(candidate)
                result.append(FrequentItemset(candidate, count, count / db.n))
        current = next_level
        size += 1
    return result


def generate_rules(
    frequent: Sequence[FrequentItemset],
    cfg: MiningConfig,
    db: TransactionDatabase,
) -> list[AssociationRule]:
    """Every split X => Z\\X of each frequent Z (size >= 2) meeting min_confidence.

    All 2^k - 2 splits of a size-k itemset are examined; confidence
    count(Z)/count(X) is compared as an exact fraction. A split whose
    antecedent never occurs has no defined confidence and is skipped.
    Output is sorted by (antecedent ids, consequent ids).
    """
    counts = {f.itemset: f.count for f in frequent}

    def count_of(itemset: Itemset) -> int:
        # Downward closure puts every subset in `counts`; fall back to a
        # direct count so partial `frequent` inputs still behave.
        if itemset in counts:
            return counts[itemset]
        return db.support_count(itemset)

    rules: list[AssociationRule] = []
    for entry in frequent:
        whole = entry.itemset
        if len(whole) < 2:
            continue
        for size in range(1, len(whole)):
            for left in combinations(whole.items, size):
                antecedent = Itemset(left)
                base = count_of(antecedent)
                if base == 0:
                    continue
                if Fraction(entry.count, base) >= cfg.min_confidence:
                    rules.append(AssociationRule(antecedent, whole.difference(antecedent)))
    rules.sort(key=lambda r: (r.antecedent.items, r.consequent.items))
    return rules
