"""FastAPI service around the mining and scoring pipeline.

The loaded database is immutable and every query is a pure read, so all
endpoints are safe under concurrent clients. Domain errors map onto two
statuses: unparseable data is 400, bad configuration is 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__
from ..errors import EmptyItemset, InvalidConfig, NonDisjointItemsets, RuleMineError
from ..measures import MeasureId, score_rule
from ..mining import AssociationRule, MiningConfig, apriori, generate_rules
from ..report import (
    ALL_MEASURES,
    ReportOptions,
    build_report,
    encode_measure_value,
    parse_measures,
    render_report,
)
from ..transactions import TransactionDatabase, load_basket, load_matrix
from .schemas import (
    ContingencyModel,
    DatasetPayload,
    FrequentItemsetModel,
    HealthResponse,
    MeasureInfo,
    MinedRuleModel,
    MineRequest,
    MineResponse,
    ReportRequest,
    ScoreRequest,
    ScoreResponse,
    VersionResponse,
)

_MEDIA_TYPES = {
    "table": "text/plain; charset=utf-8",
    "csv": "text/csv; charset=utf-8",
    "json": "application/json",
}

_CONFIG_ERRORS = (InvalidConfig, NonDisjointItemsets, EmptyItemset)


def _load_dataset(payload: DatasetPayload) -> TransactionDatabase:
    loader = load_basket if payload.format == "basket" else load_matrix
    return loader(payload.content)


def create_app() -> FastAPI:
    app = FastAPI(
        title="rulemine",
        version=__version__,
        description="Association rule mining with a catalogue of interestingness measures.",
    )

    @app.exception_handler(RuleMineError)
    async def _domain_error(request: Request, exc: RuleMineError) -> JSONResponse:
        status = 422 if isinstance(exc, _CONFIG_ERRORS) else 400
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok")

    @app.get("/version", response_model=VersionResponse)
    def version() -> VersionResponse:
        return VersionResponse(version=__version__)

    @app.get("/measures", response_model=list[MeasureInfo])
    def measure_catalogue() -> list[MeasureInfo]:
        return [
            MeasureInfo(token=m.value, symmetric=m.is_symmetric, directed=m.has_directed_form)
            for m in ALL_MEASURES
        ]

    @app.post("/report")
    def report(request: ReportRequest) -> Response:
        db = _load_dataset(request.dataset)
        options = ReportOptions(
            min_support=request.min_support,
            min_confidence=request.min_confidence,
            measures=parse_measures(request.measures),
            sort_by=MeasureId.from_token(request.sort_by) if request.sort_by else None,
            sort_dir=request.sort_dir,
            top_k=request.top_k,
            precision=request.precision,
        )
        body = render_report(build_report(db, options), request.output)
        return Response(content=body, media_type=_MEDIA_TYPES[request.output])

    @app.post("/mine", response_model=MineResponse)
    def mine(request: MineRequest) -> MineResponse:
        db = _load_dataset(request.dataset)
        cfg = MiningConfig(request.min_support, request.min_confidence)
        frequent = apriori(db, cfg)
        rules = generate_rules(frequent, cfg, db)
        counts = {f.itemset: f.count for f in frequent}
        rule_models = []
        for rule in rules:
            whole = rule.antecedent.union(rule.consequent)
            rule_models.append(
                MinedRuleModel(
                    antecedent=sorted(db.tokens_of(rule.antecedent)),
                    consequent=sorted(db.tokens_of(rule.consequent)),
                    support=counts[whole] / db.n,
                    confidence=counts[whole] / counts[rule.antecedent],
                )
            )
        return MineResponse(
            n=db.n,
            item_count=len(db.dictionary),
            frequent_itemsets=[
                FrequentItemsetModel(items=sorted(db.tokens_of(f.itemset)), count=f.count, support=f.support)
                for f in frequent
            ],
            rules=rule_models,
        )

    @app.post("/score", response_model=ScoreResponse)
    def score(request: ScoreRequest) -> ScoreResponse:
        db = _load_dataset(request.dataset)
        rule = AssociationRule(
            db.itemset_of(request.antecedent),
            db.itemset_of(request.consequent),
        )
        card = score_rule(rule, db, parse_measures(request.measures))
        ct = card.contingency
        return ScoreResponse(
            antecedent=sorted(db.tokens_of(rule.antecedent)),
            consequent=sorted(db.tokens_of(rule.consequent)),
            contingency=ContingencyModel(n11=ct.n11, n10=ct.n10, n01=ct.n01, n00=ct.n00, n=ct.n),
            scores={m.value: encode_measure_value(v) for m, v in card.scores.items()},
        )

    return app


app = create_app()
