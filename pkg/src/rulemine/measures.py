"""Interestingness measures over 2x2 contingency tables.

Every measure maps a ContingencyTable to a MeasureValue, a tri-state
result: a finite real, positive infinity, or explicitly undefined with a
machine-readable reason. Nothing here raises for degenerate tables and
nothing returns NaN.

Ratios are assembled from integer count products before any float
division, so the algebraic couplings hold exactly in floating point:
independence gives lift == 1.0 and added value == 0.0 bit for bit, and
null transactions leave the null-invariant measures bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .errors import InvalidConfig
from .mining import AssociationRule
from .transactions import ContingencyTable, TransactionDatabase

__all__ = [
    "MeasureId",
    "MeasureValue",
    "RuleScoreCard",
    "UndefinedReason",
    "added_value",
    "certainty_factor",
    "collective_strength",
    "confidence",
    "conviction",
    "cosine",
    "cosine_angle_degrees",
    "evaluate_directed",
    "evaluate_extended",
    "gini_index",
    "goodman_kruskal_lambda",
    "jaccard",
    "j_measure",
    "kappa",
    "klosgen",
    "laplace",
    "lift",
    "mutual_information",
    "odds_ratio",
    "phi_correlation",
    "piatetsky_shapiro",
    "score_rule",
    "support",
    "yules_q",
    "yules_y",
]


class UndefinedReason(str, Enum):
    EMPTY_DATABASE = "empty_database"
    ZERO_DENOMINATOR = "zero_denominator"
    DEGENERATE_MARGINAL = "degenerate_marginal"
    ZERO_OVER_ZERO = "zero_over_zero"


@dataclass(frozen=True)
class MeasureValue:
    """A defined finite real, positive infinity, or undefined with a reason."""

    value: float | None
    reason: UndefinedReason | None = None

    def __post_init__(self) -> None:
        if self.value is None:
            if self.reason is None:
                raise ValueError("undefined MeasureValue needs a reason")
        else:
            if self.reason is not None:
                raise ValueError("defined MeasureValue cannot carry a reason")
            if math.isnan(self.value) or self.value == -math.inf:
                raise ValueError(f"MeasureValue cannot hold {self.value!r}")

    @classmethod
    def defined(cls, value: float) -> "MeasureValue":
        value = float(value)
        if not math.isfinite(value):
            raise ValueError("defined MeasureValue must be finite")
        return cls(value)

    @classmethod
    def positive_infinity(cls) -> "MeasureValue":
        return cls(math.inf)

    @classmethod
    def undefined(cls, reason: UndefinedReason) -> "MeasureValue":
        return cls(None, reason)

    @property
    def is_defined(self) -> bool:
        return self.value is not None and math.isfinite(self.value)

    @property
    def is_positive_infinity(self) -> bool:
        return self.value == math.inf

    @property
    def is_undefined(self) -> bool:
        return self.value is None

    def sort_key(self) -> tuple[int, float]:
        """Total order for reports: undefined < any defined < infinity."""
        if self.is_undefined:
            return (0, 0.0)
        if self.is_positive_infinity:
            return (2, 0.0)
        return (1, self.value)

    def __repr__(self) -> str:
        if self.is_undefined:
            return f"MeasureValue.undefined({self.reason.value!r})"
        if self.is_positive_infinity:
            return "MeasureValue.positive_infinity()"
        return f"MeasureValue.defined({self.value!r})"


_EMPTY = MeasureValue.undefined(UndefinedReason.EMPTY_DATABASE)


class MeasureId(str, Enum):
    """Measure catalogue; values double as the published CLI tokens."""

    SUPPORT = "support"
    CONFIDENCE = "confidence"
    LAPLACE = "laplace"
    COSINE = "cosine"
    LIFT = "lift"
    ADDED_VALUE = "added-value"
    PHI_CORRELATION = "correlation"
    CONVICTION = "conviction"
    ODDS_RATIO = "odds-ratio"
    YULES_Q = "yules-q"
    YULES_Y = "yules-y"
    KAPPA = "kappa"
    MUTUAL_INFORMATION = "mutual-information"
    J_MEASURE = "j-measure"
    GINI_INDEX = "gini-index"
    PIATETSKY_SHAPIRO = "piatetsky-shapiro"
    CERTAINTY_FACTOR = "certainty-factor"
    COLLECTIVE_STRENGTH = "collective-strength"
    JACCARD = "jaccard"
    KLOSGEN = "klosgen"
    GOODMAN_KRUSKAL_LAMBDA = "goodman-kruskal-lambda"

    @classmethod
    def from_token(cls, token: str) -> "MeasureId":
        try:
            return cls(token)
        except ValueError:
            raise InvalidConfig(f"unknown measure token {token!r}") from None

    @property
    def has_directed_form(self) -> bool:
        """True for measures whose catalogue form is a max over directions."""
        return self in _DIRECTED_FORMS

    @property
    def is_symmetric(self) -> bool:
        """True when swapping (X, Y) never changes the value."""
        return self not in _DIRECTED_FORMS


def support(ct: ContingencyTable) -> MeasureValue:
    """P(X,Y): the fraction of transactions containing both sides."""
    if ct.n == 0:
        return _EMPTY
    return MeasureValue.defined(ct.n11 / ct.n)


def confidence(ct: ContingencyTable) -> MeasureValue:
    """P(Y|X); directed, undefined when X never occurs."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    return MeasureValue.defined(ct.n11 / ct.nx)


def laplace(ct: ContingencyTable) -> MeasureValue:
    """Add-one smoothed confidence (n11 + 1)/(nx + 2); directed."""
    if ct.n == 0:
        return _EMPTY
    return MeasureValue.defined((ct.n11 + 1) / (ct.nx + 2))


def cosine(ct: ContingencyTable) -> MeasureValue:
    """P(X,Y)/sqrt(P(X)P(Y)), computed as n11/sqrt(nx*ny).

    The count form makes null-invariance exact: transactions containing
    neither side change none of the inputs.
    """
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0 or ct.ny == 0:
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    return MeasureValue.defined(ct.n11 / math.sqrt(ct.nx * ct.ny))


def cosine_angle_degrees(ct: ContingencyTable) -> MeasureValue:
    """Angle in degrees whose cosine is cosine(ct), from the unrounded value."""
    base = cosine(ct)
    if not base.is_defined:
        return base
    return MeasureValue.defined(math.degrees(math.acos(min(base.value, 1.0))))


def added_value(ct: ContingencyTable) -> MeasureValue:
    """conf(X => Y) - P(Y); directed, 0 exactly at independence."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    return MeasureValue.defined((ct.n11 * ct.n - ct.nx * ct.ny) / (ct.nx * ct.n))


def lift(ct: ContingencyTable) -> MeasureValue:
    """P(X,Y)/(P(X)P(Y)); symmetric, 1 exactly at independence."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0 or ct.ny == 0:
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    return MeasureValue.defined((ct.n11 * ct.n) / (ct.nx * ct.ny))


def phi_correlation(ct: ContingencyTable) -> MeasureValue:
    """Pearson correlation of the two indicator variables; in [-1, 1]."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx in (0, ct.n) or ct.ny in (0, ct.n):
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    numerator = ct.n11 * ct.n - ct.nx * ct.ny
    denominator = math.sqrt(ct.nx * ct.ny * (ct.n - ct.nx) * (ct.n - ct.ny))
    return MeasureValue.defined(numerator / denominator)


def conviction(ct: ContingencyTable) -> MeasureValue:
    """(1 - P(Y))/(1 - conf(X => Y)); directed.

    Infinite for exception-free rules unless Y is universal, in which
    case 0/0 is undefined. A universal Y under an imperfect rule cannot
    happen; P(Y) = 1 forces conf = 1, so the 0 branch never pairs with
    a zero denominator.
    """
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    if ct.n10 == 0:
        if ct.ny == ct.n:
            return MeasureValue.undefined(UndefinedReason.ZERO_OVER_ZERO)
        return MeasureValue.positive_infinity()
    return MeasureValue.defined(((ct.n - ct.ny) * ct.nx) / (ct.n * ct.n10))


def certainty_factor(ct: ContingencyTable) -> MeasureValue:
    """(conf - P(Y))/(1 - P(Y)); directed."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    if ct.ny == ct.n:
        # conf is necessarily 1 here, so numerator and denominator both vanish.
        return MeasureValue.undefined(UndefinedReason.ZERO_OVER_ZERO)
    return MeasureValue.defined((ct.n11 * ct.n - ct.nx * ct.ny) / (ct.nx * (ct.n - ct.ny)))


def j_measure(ct: ContingencyTable) -> MeasureValue:
    """Directed information gain of the rule, base 2; 0*log 0 taken as 0."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    total = 0.0
    if ct.n11:
        total += (ct.n11 / ct.n) * math.log2((ct.n11 * ct.n) / (ct.nx * ct.ny))
    if ct.n10:
        total += (ct.n10 / ct.n) * math.log2((ct.n10 * ct.n) / (ct.nx * (ct.n - ct.ny)))
    return MeasureValue.defined(total)


def gini_index(ct: ContingencyTable) -> MeasureValue:
    """Directed Gini impurity gain; zero-weight branches contribute 0."""
    if ct.n == 0:
        return _EMPTY
    n = ct.n
    total = -((ct.ny / n) ** 2) - ((n - ct.ny) / n) ** 2
    if ct.nx:
        total += (ct.nx / n) * ((ct.n11 / ct.nx) ** 2 + (ct.n10 / ct.nx) ** 2)
    if n - ct.nx:
        absent = n - ct.nx
        total += (absent / n) * ((ct.n01 / absent) ** 2 + (ct.n00 / absent) ** 2)
    return MeasureValue.defined(total)


def odds_ratio(ct: ContingencyTable) -> MeasureValue:
    """(n11*n00)/(n10*n01); infinite when only the numerator is positive."""
    if ct.n == 0:
        return _EMPTY
    concordant = ct.n11 * ct.n00
    discordant = ct.n10 * ct.n01
    if discordant == 0:
        if concordant == 0:
            return MeasureValue.undefined(UndefinedReason.ZERO_OVER_ZERO)
        return MeasureValue.positive_infinity()
    return MeasureValue.defined(concordant / discordant)


def yules_q(ct: ContingencyTable) -> MeasureValue:
    """(ad - bc)/(ad + bc), the odds-ratio transform (alpha-1)/(alpha+1)."""
    if ct.n == 0:
        return _EMPTY
    concordant = ct.n11 * ct.n00
    discordant = ct.n10 * ct.n01
    if concordant + discordant == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    return MeasureValue.defined((concordant - discordant) / (concordant + discordant))


def yules_y(ct: ContingencyTable) -> MeasureValue:
    """(sqrt(ad) - sqrt(bc))/(sqrt(ad) + sqrt(bc))."""
    if ct.n == 0:
        return _EMPTY
    concordant = math.sqrt(ct.n11 * ct.n00)
    discordant = math.sqrt(ct.n10 * ct.n01)
    if concordant + discordant == 0:
        return MeasureValue.undefined(UndefinedReason.ZERO_DENOMINATOR)
    return MeasureValue.defined((concordant - discordant) / (concordant + discordant))


def kappa(ct: ContingencyTable) -> MeasureValue:
    """Agreement of the indicators above chance level."""
    if ct.n == 0:
        return _EMPTY
    agree = ct.n * (ct.n11 + ct.n00)
    chance = ct.nx * ct.ny + (ct.n - ct.nx) * (ct.n - ct.ny)
    denominator = ct.n * ct.n - chance
    if denominator == 0:
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    return MeasureValue.defined((agree - chance) / denominator)


def _entropy2(count: int, n: int) -> float:
    p = count / n
    q = (n - count) / n
    return -(p * math.log2(p)) - (q * math.log2(q))


def mutual_information(ct: ContingencyTable) -> MeasureValue:
    """Indicator mutual information normalised by the smaller marginal entropy.

    Cell terms are grouped symmetrically ((11 + 00) + (10 + 01)) so the
    float sum is bit-identical under an (X, Y) swap.
    """
    if ct.n == 0:
        return _EMPTY
    if ct.nx in (0, ct.n) or ct.ny in (0, ct.n):
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    n = ct.n

    def cell(count: int, row: int, col: int) -> float:
        if count == 0:
            return 0.0
        return (count / n) * math.log2((count * n) / (row * col))

    joint = (cell(ct.n11, ct.nx, ct.ny) + cell(ct.n00, n - ct.nx, n - ct.ny)) + (
        cell(ct.n10, ct.nx, n - ct.ny) + cell(ct.n01, n - ct.nx, ct.ny)
    )
    return MeasureValue.defined(joint / min(_entropy2(ct.nx, n), _entropy2(ct.ny, n)))


def goodman_kruskal_lambda(ct: ContingencyTable) -> MeasureValue:
    """Proportional reduction in prediction error, both directions pooled."""
    if ct.n == 0:
        return _EMPTY
    best_given_x = max(ct.n11, ct.n10) + max(ct.n01, ct.n00)
    best_given_y = max(ct.n11, ct.n01) + max(ct.n10, ct.n00)
    best_x = max(ct.nx, ct.n - ct.nx)
    best_y = max(ct.ny, ct.n - ct.ny)
    denominator = 2 * ct.n - best_x - best_y
    if denominator == 0:
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    return MeasureValue.defined((best_given_x + best_given_y - best_x - best_y) / denominator)


def piatetsky_shapiro(ct: ContingencyTable) -> MeasureValue:
    """Leverage P(X,Y) - P(X)P(Y); 0 exactly at independence."""
    if ct.n == 0:
        return _EMPTY
    return MeasureValue.defined((ct.n11 * ct.n - ct.nx * ct.ny) / (ct.n * ct.n))


def collective_strength(ct: ContingencyTable) -> MeasureValue:
    """Agreement relative to chance, scaled by the violation rate.

    Perfect agreement with both sides present is infinite; the fully
    degenerate corners collapse to 0/0.
    """
    if ct.n == 0:
        return _EMPTY
    chance = ct.nx * ct.ny + (ct.n - ct.nx) * (ct.n - ct.ny)
    agree = ct.n11 + ct.n00
    numerator = agree * (ct.n * ct.n - chance)
    denominator = chance * (ct.n - agree)
    if denominator == 0:
        if numerator == 0:
            return MeasureValue.undefined(UndefinedReason.ZERO_OVER_ZERO)
        return MeasureValue.positive_infinity()
    return MeasureValue.defined(numerator / denominator)


def jaccard(ct: ContingencyTable) -> MeasureValue:
    """n11 over the union count; null-invariant."""
    if ct.n == 0:
        return _EMPTY
    union = ct.nx + ct.ny - ct.n11
    if union == 0:
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    return MeasureValue.defined(ct.n11 / union)


def klosgen(ct: ContingencyTable) -> MeasureValue:
    """sqrt(P(X,Y)) times the larger directed added value."""
    if ct.n == 0:
        return _EMPTY
    if ct.nx == 0 or ct.ny == 0:
        return MeasureValue.undefined(UndefinedReason.DEGENERATE_MARGINAL)
    shift = ct.n11 * ct.n - ct.nx * ct.ny
    best = max(shift / (ct.nx * ct.n), shift / (ct.ny * ct.n))
    return MeasureValue.defined(math.sqrt(ct.n11 / ct.n) * best)


def _max_of(first: MeasureValue, second: MeasureValue) -> MeasureValue:
    """Strict max over the two rule directions: undefined operands poison it."""
    if first.is_undefined:
        return first
    if second.is_undefined:
        return second
    if first.is_positive_infinity or second.is_positive_infinity:
        return MeasureValue.positive_infinity()
    return first if first.value >= second.value else second


_SYMMETRIC_FNS: dict[MeasureId, Callable[[ContingencyTable], MeasureValue]] = {
    MeasureId.SUPPORT: support,
    MeasureId.COSINE: cosine,
    MeasureId.LIFT: lift,
    MeasureId.PHI_CORRELATION: phi_correlation,
    MeasureId.ODDS_RATIO: odds_ratio,
    MeasureId.YULES_Q: yules_q,
    MeasureId.YULES_Y: yules_y,
    MeasureId.KAPPA: kappa,
    MeasureId.MUTUAL_INFORMATION: mutual_information,
    MeasureId.GOODMAN_KRUSKAL_LAMBDA: goodman_kruskal_lambda,
    MeasureId.PIATETSKY_SHAPIRO: piatetsky_shapiro,
    MeasureId.COLLECTIVE_STRENGTH: collective_strength,
    MeasureId.JACCARD: jaccard,
    MeasureId.KLOSGEN: klosgen,
}

_DIRECTED_FORMS: dict[MeasureId, Callable[[ContingencyTable], MeasureValue]] = {
    MeasureId.CONFIDENCE: confidence,
    MeasureId.LAPLACE: laplace,
    MeasureId.CONVICTION: conviction,
    MeasureId.CERTAINTY_FACTOR: certainty_factor,
    MeasureId.ADDED_VALUE: added_value,
    MeasureId.J_MEASURE: j_measure,
    MeasureId.GINI_INDEX: gini_index,
}


def evaluate_directed(measure: MeasureId, ct: ContingencyTable) -> MeasureValue:
    """The X => Y value: directed form where one exists, symmetric otherwise."""
    fn = _DIRECTED_FORMS.get(measure)
    if fn is not None:
        return fn(ct)
    return _SYMMETRIC_FNS[measure](ct)


def evaluate_extended(measure: MeasureId, ct: ContingencyTable) -> MeasureValue:
    """The catalogue form: max over both rule directions for directed measures."""
    fn = _DIRECTED_FORMS.get(measure)
    if fn is not None:
        return _max_of(fn(ct), fn(ct.swapped()))
    return _SYMMETRIC_FNS[measure](ct)


@dataclass(frozen=True)
class RuleScoreCard:
    """One rule, its contingency table, and every requested measure value."""

    rule: AssociationRule
    contingency: ContingencyTable
    scores: dict[MeasureId, MeasureValue]


def score_rule(
    rule: AssociationRule,
    db: TransactionDatabase,
    measures: Iterable[MeasureId],
) -> RuleScoreCard:
    """Score one rule: the contingency table is computed once and the
    rule's own direction drives every measure that has a directed form."""
    ct = db.contingency_of(rule.antecedent, rule.consequent)
    scores = {measure: evaluate_directed(measure, ct) for measure in measures}
    return RuleScoreCard(rule=rule, contingency=ct, scores=scores)
