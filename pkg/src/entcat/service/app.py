"""FastAPI application exposing the analysis operations over HTTP.

Verdicts are data, not errors: an infeasible transformation still returns
200 with ``result.feasible = false``.  Malformed vectors and out-of-range
parameters map to 400; blowing the component cap maps to 413.

Run with ``entcat serve`` or ``uvicorn entcat.service.app:app``.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..core import set_component_cap
from ..errors import InputError, ResourceLimitError
from . import handlers
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

CAP_ENV_VAR = "ENTCAT_COMPONENT_CAP"


def apply_cap_from_env() -> None:
    """Honor the component-cap override from the environment, if set."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        set_component_cap(int(raw))


app = FastAPI(
    title="entcat",
    version=__version__,
    description=(
        "Exact-arithmetic analysis of bipartite pure-state entanglement "
        "transformations: feasibility, catalysis, multiple-copy trade-offs, "
        "and conversion probabilities."
    ),
)

apply_cap_from_env()


@app.exception_handler(InputError)
async def _input_error(_: Request, exc: InputError) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"error": type(exc).__name__, "message": str(exc)}
    )


@app.exception_handler(ResourceLimitError)
async def _resource_limit(_: Request, exc: ResourceLimitError) -> JSONResponse:
    return JSONResponse(
        status_code=413, content={"error": type(exc).__name__, "message": str(exc)}
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__, "exact": True}


@app.post("/check", response_model=RunReport)
def check(request: CheckRequest) -> RunReport:
    return handlers.run_check(request)


@app.post("/catalyze", response_model=RunReport)
def catalyze(request: CatalyzeRequest) -> RunReport:
    return handlers.run_catalyze(request)


@app.post("/mlocc", response_model=RunReport)
def mlocc(request: MloccRequest) -> RunReport:
    return handlers.run_mlocc(request)


@app.post("/tradeoff", response_model=RunReport)
def tradeoff(request: TradeoffRequest) -> RunReport:
    return handlers.run_tradeoff(request)


@app.post("/pmax", response_model=RunReport)
def pmax(request: PmaxRequest) -> RunReport:
    return handlers.run_pmax(request)


@app.post("/bounds", response_model=RunReport)
def bounds(request: BoundsRequest) -> RunReport:
    return handlers.run_bounds(request)


@app.post("/search", response_model=RunReport)
def search(request: SearchRequest) -> RunReport:
    return handlers.run_search(request)
