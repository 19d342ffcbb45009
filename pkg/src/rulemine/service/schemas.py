"""Pydantic request and response models for the HTTP service."""

from typing import Literal, Union

from pydantic import BaseModel, Field


class DatasetPayload(BaseModel):
    """Inline dataset: raw text in one of the two supported formats."""

    format: Literal["basket", "matrix"] = "basket"
    content: str


class ReportRequest(BaseModel):
    dataset: DatasetPayload
    min_support: str = "0.1"
    min_confidence: str = "0.5"
    measures: Union[list[str], str, None] = None
    sort_by: Union[str, None] = None
    sort_dir: Literal["asc", "desc"] = "desc"
    top_k: Union[int, None] = Field(default=None, ge=1)
    precision: int = Field(default=3, ge=1, le=12)
    output: Literal["table", "csv", "json"] = "json"


class MineRequest(BaseModel):
    dataset: DatasetPayload
    min_support: str = "0.1"
    min_confidence: str = "0.5"


class FrequentItemsetModel(BaseModel):
    items: list[str]
    count: int
    support: float


class MinedRuleModel(BaseModel):
    antecedent: list[str]
    consequent: list[str]
    support: float
    confidence: float


class MineResponse(BaseModel):
    n: int
    item_count: int
    frequent_itemsets: list[FrequentItemsetModel]
    rules: list[MinedRuleModel]


class ScoreRequest(BaseModel):
    dataset: DatasetPayload
    antecedent: list[str] = Field(min_length=1)
    consequent: list[str] = Field(min_length=1)
    measures: Union[list[str], str, None] = None


class ContingencyModel(BaseModel):
    n11: int
    n10: int
    n01: int
    n00: int
    n: int


# A score is a number, the string "+inf", or {"undefined": reason}.
ScoreValue = Union[float, str, dict[str, str]]


class ScoreResponse(BaseModel):
    antecedent: list[str]
    consequent: list[str]
    contingency: ContingencyModel
    scores: dict[str, ScoreValue]


class MeasureInfo(BaseModel):
    token: str
    symmetric: bool
    directed: bool


class HealthResponse(BaseModel):
    status: str


class VersionResponse(BaseModel):
    version: str
