"""Request and response models for the HTTP endpoints.

Vectors and probability thresholds travel as text so that clients keep exact
control of the values: decimal literals are converted exactly in base 10 and
fraction literals are taken verbatim.  Responses echo every parsed vector in
canonical lowest-terms form; re-parsing the echo reproduces the vector
bit-exactly.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class CheckRequest(BaseModel):
    source: str
    target: str
    normalize: bool = False


class CatalyzeRequest(BaseModel):
    source: str
    target: str
    catalyst: str
    copies: int = Field(default=1, ge=1)
    normalize: bool = False


class MloccRequest(BaseModel):
    source: str
    target: str
    max_copies: int = Field(default=12, ge=1)
    normalize: bool = False


class TradeoffRequest(BaseModel):
    source: str
    target: str
    catalyst: str
    max_source: int = Field(ge=1)
    max_cat: int = Field(ge=1)
    normalize: bool = False


class PmaxRequest(BaseModel):
    source: str
    target: str
    source_copies: int = Field(default=1, ge=1)
    catalyst: str | None = None
    cat_copies: int = Field(default=0, ge=0)
    normalize: bool = False


class BoundsRequest(BaseModel):
    source: str
    target: str
    power: int = Field(default=1, ge=1)
    normalize: bool = False


class SearchRequest(BaseModel):
    source: str
    target: str
    dimension: int = Field(default=2, ge=2)
    denominator: int = Field(default=10, ge=1)
    copies: int = Field(default=1, ge=1)
    lambda_target: str | None = None
    max_candidates: int = Field(default=100, ge=1)
    normalize: bool = False


class RunReport(BaseModel):
    """Wire format shared by every endpoint and by the CLI JSON output.

    ``inputs`` echoes each parsed vector as canonical fractions; ``result``
    is command-specific.  Fraction strings in the result are authoritative,
    the ``*_decimal`` fields are rounded display values.  ``exact`` is always
    true: no floating point participates in any verdict.
    """

    command: str
    inputs: dict[str, str]
    result: dict[str, Any]
    exact: bool = True
    timing_ms: int | None = None
