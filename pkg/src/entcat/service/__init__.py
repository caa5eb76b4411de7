"""HTTP service layer: pydantic request/response models and FastAPI app."""

from .models import (
    BoundsRequest,
    CatalyzeRequest,
    CheckRequest,
    MloccRequest,
    PmaxRequest,
    RunReport,
    SearchRequest,
    TradeoffRequest,
)

__all__ = [
    "BoundsRequest",
    "CatalyzeRequest",
    "CheckRequest",
    "MloccRequest",
    "PmaxRequest",
    "RunReport",
    "SearchRequest",
    "TradeoffRequest",
]
