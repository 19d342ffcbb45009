"""Association rule mining over transaction databases, with a full
catalogue of 2x2-contingency interestingness measures and deterministic
reporting. The HTTP service lives in rulemine.service, the CLI client in
rulemine.cli."""

__version__ = "0.1.0"

from .errors import (
    EmptyItemset,
    InternalInvariantViolation,
    InvalidConfig,
    InvalidItemToken,
    MalformedRecord,
    NonDisjointItemsets,
    RuleMineError,
    SourceReadError,
    UnknownItem,
)
from .measures import (
    MeasureId,
    MeasureValue,
    RuleScoreCard,
    UndefinedReason,
    evaluate_directed,
    evaluate_extended,
    score_rule,
)
from .mining import (
    AssociationRule,
    FrequentItemset,
    MiningConfig,
    apriori,
    candidate_join_prune,
    generate_rules,
)
from .report import (
    ALL_MEASURES,
    DEFAULT_MEASURES,
    Report,
    ReportOptions,
    build_report,
    parse_measures,
    render_report,
)
from .transactions import (
    ContingencyTable,
    ItemDictionary,
    Itemset,
    Transaction,
    TransactionDatabase,
    dump_basket,
    dump_matrix,
    load_basket,
    load_basket_file,
    load_matrix,
    load_matrix_file,
)

__all__ = [
    "ALL_MEASURES",
    "AssociationRule",
    "ContingencyTable",
    "DEFAULT_MEASURES",
    "EmptyItemset",
    "FrequentItemset",
    "InternalInvariantViolation",
    "InvalidConfig",
    "InvalidItemToken",
    "ItemDictionary",
    "Itemset",
    "MalformedRecord",
    "MeasureId",
    "MeasureValue",
    "MiningConfig",
    "NonDisjointItemsets",
    "Report",
    "ReportOptions",
    "RuleMineError",
    "RuleScoreCard",
    "SourceReadError",
    "Transaction",
    "TransactionDatabase",
    "UndefinedReason",
    "UnknownItem",
    "apriori",
    "build_report",
    "candidate_join_prune",
    "dump_basket",
    "dump_matrix",
    "evaluate_directed",
    "evaluate_extended",
    "generate_rules",
    "load_basket",
    "load_basket_file",
    "load_matrix",
    "load_matrix_file",
    "parse_measures",
    "render_report",
    "score_rule",
]
