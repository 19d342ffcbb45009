"""Deterministic report building and rendering (table, csv, json).

Rounding is presentation only: sorting and filtering always use the
unrounded values, and json output carries full precision so a parsed
report recovers every score exactly.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import InvalidConfig
from .measures import MeasureId, MeasureValue, score_rule
from .mining import MiningConfig, apriori, generate_rules
from .transactions import Itemset, TransactionDatabase

__all__ = [
    "ALL_MEASURES",
    "DEFAULT_MEASURES",
    "OUTPUT_FORMATS",
    "FrequentRow",
    "Report",
    "ReportMeta",
    "ReportOptions",
    "RuleRow",
    "build_report",
    "encode_measure_value",
    "parse_measures",
    "render_report",
]

DEFAULT_MEASURES: tuple[MeasureId, ...] = (
    MeasureId.SUPPORT,
    MeasureId.CONFIDENCE,
    MeasureId.COSINE,
    MeasureId.ADDED_VALUE,
    MeasureId.LIFT,
    MeasureId.PHI_CORRELATION,
    MeasureId.CONVICTION,
)

# "all": the default seven first, then the rest of the catalogue.
ALL_MEASURES: tuple[MeasureId, ...] = DEFAULT_MEASURES + (
    MeasureId.GOODMAN_KRUSKAL_LAMBDA,
    MeasureId.ODDS_RATIO,
    MeasureId.YULES_Q,
    MeasureId.YULES_Y,
    MeasureId.KAPPA,
    MeasureId.MUTUAL_INFORMATION,
    MeasureId.J_MEASURE,
    MeasureId.GINI_INDEX,
    MeasureId.LAPLACE,
    MeasureId.PIATETSKY_SHAPIRO,
    MeasureId.CERTAINTY_FACTOR,
    MeasureId.COLLECTIVE_STRENGTH,
    MeasureId.JACCARD,
    MeasureId.KLOSGEN,
)

OUTPUT_FORMATS = ("table", "csv", "json")


def parse_measures(value: str | list[str] | tuple[str, ...] | None) -> tuple[MeasureId, ...]:
    """Kebab-token list (or comma-joined string) to MeasureIds.

    None means the default seven; the single token 'all' selects the full
    catalogue. Unknown tokens are a configuration error, duplicates
    collapse to their first occurrence.
    """
    if value is None:
        return DEFAULT_MEASURES
    if isinstance(value, str):
        tokens = [t.strip() for t in value.split(",")]
    else:
        tokens = [str(t).strip() for t in value]
    tokens = [t for t in tokens if t]
    if not tokens:
        raise InvalidConfig("no measures requested")
    if tokens == ["all"]:
        return ALL_MEASURES
    chosen: list[MeasureId] = []
    for token in tokens:
        measure = MeasureId.from_token(token)
        if measure not in chosen:
            chosen.append(measure)
    return tuple(chosen)


@dataclass(frozen=True)
class ReportOptions:
    """Settings for one report run; thresholds stay decimal strings."""

    min_support: str = "0.1"
    min_confidence: str = "0.5"
    measures: tuple[MeasureId, ...] = DEFAULT_MEASURES
    sort_by: MeasureId | None = None
    sort_dir: str = "desc"
    top_k: int | None = None
    precision: int = 3

    def __post_init__(self) -> None:
        object.__setattr__(self, "measures", tuple(self.measures))
        if not self.measures:
            raise InvalidConfig("at least one measure is required")
        self.mining_config()  # validates the thresholds
        if self.sort_dir not in ("asc", "desc"):
            raise InvalidConfig(f"sort_dir must be 'asc' or 'desc', got {self.sort_dir!r}")
        if self.sort_by is not None and self.sort_by not in self.measures:
            raise InvalidConfig(f"sort_by measure {self.sort_by.value!r} is not in the measure list")
        if self.top_k is not None:
            if isinstance(self.top_k, bool) or not isinstance(self.top_k, int) or self.top_k < 1:
                raise InvalidConfig("top_k must be a positive integer")
        if isinstance(self.precision, bool) or not isinstance(self.precision, int):
            raise InvalidConfig("precision must be an integer")
        if not 1 <= self.precision <= 12:
            raise InvalidConfig(f"precision must lie in [1, 12], got {self.precision}")

    def mining_config(self) -> MiningConfig:
        return MiningConfig(self.min_support, self.min_confidence)


@dataclass(frozen=True)
class ReportMeta:
    n: int
    item_count: int
    min_support: str
    min_confidence: str
    measures: tuple[str, ...]
    sort_by: str | None
    sort_dir: str
    top_k: int | None
    precision: int


@dataclass(frozen=True)
class FrequentRow:
    items: tuple[str, ...]
    count: int
    support: float


@dataclass(frozen=True)
class RuleRow:
    antecedent: tuple[str, ...]
    consequent: tuple[str, ...]
    scores: dict[MeasureId, MeasureValue]


@dataclass(frozen=True)
class Report:
    meta: ReportMeta
    frequent: tuple[FrequentRow, ...]
    rules: tuple[RuleRow, ...]


def _sorted_tokens(db: TransactionDatabase, itemset: Itemset) -> tuple[str, ...]:
    return tuple(sorted(db.tokens_of(itemset)))


def build_report(db: TransactionDatabase, options: ReportOptions) -> Report:
    """Mine, score and order one report.

    Rule rows start in mining order (antecedent ids, consequent ids);
    requesting a sort applies a stable reorder on the unrounded score, so
    ties keep the mining order and reports stay byte-reproducible.
    """
    cfg = options.mining_config()
    frequent = apriori(db, cfg)
    rules = generate_rules(frequent, cfg, db)

    rows = []
    for rule in rules:
        card = score_rule(rule, db, options.measures)
        rows.append(
            RuleRow(
                antecedent=_sorted_tokens(db, rule.antecedent),
                consequent=_sorted_tokens(db, rule.consequent),
                scores=card.scores,
            )
        )
    if options.sort_by is not None:
        rows = sorted(
            rows,
            key=lambda row: row.scores[options.sort_by].sort_key(),
            reverse=options.sort_dir == "desc",
        )
    if options.top_k is not None:
        rows = rows[: options.top_k]

    frequent_rows = tuple(
        FrequentRow(items=_sorted_tokens(db, f.itemset), count=f.count, support=f.support)
        for f in frequent
    )
    meta = ReportMeta(
        n=db.n,
        item_count=len(db.dictionary),
        min_support=options.min_support,
        min_confidence=options.min_confidence,
        measures=tuple(m.value for m in options.measures),
        sort_by=options.sort_by.value if options.sort_by else None,
        sort_dir=options.sort_dir,
        top_k=options.top_k,
        precision=options.precision,
    )
    return Report(meta=meta, frequent=frequent_rows, rules=tuple(rows))


def encode_measure_value(value: MeasureValue) -> float | str | dict[str, str]:
    """JSON encoding: number, "+inf", or {"undefined": reason}."""
    if value.is_undefined:
        return {"undefined": value.reason.value}
    if value.is_positive_infinity:
        return "+inf"
    return value.value


def _rounded_cell(value: MeasureValue, precision: int) -> str:
    if value.is_undefined:
        return "undef"
    if value.is_positive_infinity:
        return "inf"
    return f"{value.value:.{precision}f}"


def _full_cell(value: MeasureValue) -> str:
    if value.is_undefined:
        return f"undefined:{value.reason.value}"
    if value.is_positive_infinity:
        return "inf"
    return repr(value.value)


def render_report(report: Report, fmt: str) -> bytes:
    """Render to the requested byte format; identical inputs give identical bytes."""
    if fmt == "table":
        return _render_table(report)
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "json":
        return _render_json(report)
    raise InvalidConfig(f"unknown output format {fmt!r}")


def _layout(headers: list[str], rows: list[list[str]], numeric_from: int) -> list[str]:
    """Columns padded to content width; numeric columns right-aligned."""
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for cells in [headers, *rows]:
        padded = [
            cell.rjust(widths[i]) if i >= numeric_from else cell.ljust(widths[i])
            for i, cell in enumerate(cells)
        ]
        lines.append("  ".join(padded).rstrip())
    return lines


def _render_table(report: Report) -> bytes:
    meta = report.meta
    precision = meta.precision
    out = [
        "association rule report",
        f"n: {meta.n}",
        f"items: {meta.item_count}",
        f"min_support: {meta.min_support}",
        f"min_confidence: {meta.min_confidence}",
        f"measures: {', '.join(meta.measures)}",
    ]
    if meta.sort_by is not None:
        out.append(f"sort: {meta.sort_by} {meta.sort_dir}")
    if meta.top_k is not None:
        out.append(f"top_k: {meta.top_k}")
    out.append("")

    out.append(f"frequent itemsets ({len(report.frequent)})")
    freq_rows = [
        ["+".join(row.items), str(row.count), f"{row.support:.{precision}f}"]
        for row in report.frequent
    ]
    out.extend(_layout(["itemset", "count", "support"], freq_rows, numeric_from=1))
    out.append("")

    out.append(f"rules ({len(report.rules)})")
    measure_ids = [MeasureId(t) for t in meta.measures]
    rule_rows = [
        [
            "+".join(row.antecedent),
            "+".join(row.consequent),
            *[_rounded_cell(row.scores[m], precision) for m in measure_ids],
        ]
        for row in report.rules
    ]
    out.extend(_layout(["antecedent", "consequent", *meta.measures], rule_rows, numeric_from=2))
    out.append("")
    out.append(f"{len(report.rules)} rules")
    return ("\n".join(out) + "\n").encode("utf-8")


def _render_csv(report: Report) -> bytes:
    measure_ids = [MeasureId(t) for t in report.meta.measures]
    precision = report.meta.precision
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        [
            "antecedent",
            "consequent",
            *report.meta.measures,
            *[f"{t}_rounded" for t in report.meta.measures],
        ]
    )
    for row in report.rules:
        writer.writerow(
            [
                "+".join(row.antecedent),
                "+".join(row.consequent),
                *[_full_cell(row.scores[m]) for m in measure_ids],
                *[_rounded_cell(row.scores[m], precision) for m in measure_ids],
            ]
        )
    return buffer.getvalue().encode("utf-8")


def _render_json(report: Report) -> bytes:
    meta = report.meta
    measure_ids = [MeasureId(t) for t in meta.measures]
    payload = {
        "meta": {
            "n": meta.n,
            "item_count": meta.item_count,
            "min_support": meta.min_support,
            "min_confidence": meta.min_confidence,
            "measures": list(meta.measures),
            "sort_by": meta.sort_by,
            "sort_dir": meta.sort_dir,
            "top_k": meta.top_k,
            "precision": meta.precision,
        },
        "frequent_itemsets": [
            {"items": list(row.items), "count": row.count, "support": row.support}
            for row in report.frequent
        ],
        "rules": [
            {
                "antecedent": list(row.antecedent),
                "consequent": list(row.consequent),
                "scores": {m.value: encode_measure_value(row.scores[m]) for m in measure_ids},
            }
            for row in report.rules
        ],
    }
    return (json.dumps(payload, indent=2, allow_nan=False) + "\n").encode("utf-8")
