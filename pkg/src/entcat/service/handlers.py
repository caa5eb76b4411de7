"""Command handlers shared by the FastAPI endpoints and the CLI.

Each handler parses the request's vector text, runs the corresponding
library operation, and packs the outcome into a :class:`RunReport`.  All
values in result payloads are JSON-safe: exact fractions as strings, rounded
decimals as strings, plus ints and bools.
"""

from __future__ import annotations

import time
from fractions import Fraction

from ..catalysis import (
    FilterResult,
    is_catalyst,
    is_transformable,
    min_catalyst_copies,
    mlocc_threshold,
    multicopy_filter,
    single_copy_filter,
)
from ..core import SchmidtVector, format_decimal, parse_rational, parse_vector
from ..majorization import FeasibilityReport
from ..probabilistic import (
    ProbabilityReport,
    assisted_probability_bounds,
    combined_pmax,
)
from ..search import SearchConfig, search_catalysts, trade_off
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

DISPLAY_PLACES = 4


def _fraction_fields(value: Fraction, name: str) -> dict:
    return {name: str(value), f"{name}_decimal": format_decimal(value, DISPLAY_PLACES)}


def _feasibility_payload(report: FeasibilityReport) -> dict:
    return {
        "feasible": report.feasible,
        "violated_prefixes": list(report.violated_prefixes),
        "checked_length": report.checked_length,
    }


def _filter_payload(result: FilterResult) -> dict:
    return {
        "passes": result.passes,
        "violations": [
            {
                "prefix_index": v.prefix_index,
                "catalyst_index": v.catalyst_index,
                "condition": v.condition,
                "lhs": None if v.lhs is None else str(v.lhs),
                "rhs": None if v.rhs is None else str(v.rhs),
            }
            for v in result.violations
        ],
    }


def _probability_payload(report: ProbabilityReport) -> dict:
    payload = _fraction_fields(report.p_max, "p_max")
    payload["minimizing_l"] = report.minimizing_l
    payload["ratios"] = [
        {"l": l, "ratio": str(r), "decimal": format_decimal(r, DISPLAY_PLACES)}
        for l, r in report.ratios
    ]
    payload["target_rank_exceeds_source"] = report.target_rank_exceeds_source
    return payload


class _Timer:
    def __enter__(self) -> "_Timer":
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.ms = int((time.perf_counter() - self._start) * 1000)


def run_check(request: CheckRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    with _Timer() as timer:
        report = is_transformable(source, target)
    return RunReport(
        command="check",
        inputs={"source": source.serialize(), "target": target.serialize()},
        result=_feasibility_payload(report),
        timing_ms=timer.ms,
    )


def run_catalyze(request: CatalyzeRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    catalyst = parse_vector(request.catalyst, normalize=request.normalize)
    with _Timer() as timer:
        verdict = is_catalyst(catalyst, source, target, request.copies)
        single = single_copy_filter(catalyst, source, target)
        multi = multicopy_filter(catalyst, source, target)
    result = {
        "is_catalyst": verdict.is_catalyst,
        "copies": verdict.copies_used,
        **_feasibility_payload(verdict.report),
        "single_copy_filter": _filter_payload(single),
        "multicopy_filter": _filter_payload(multi),
    }
    return RunReport(
        command="catalyze",
        inputs={
            "source": source.serialize(),
            "target": target.serialize(),
            "catalyst": catalyst.serialize(),
        },
        result=result,
        timing_ms=timer.ms,
    )


def run_mlocc(request: MloccRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    with _Timer() as timer:
        stability = mlocc_threshold(source, target, request.max_copies)
    return RunReport(
        command="mlocc",
        inputs={"source": source.serialize(), "target": target.serialize()},
        result={
            "threshold": stability.threshold,
            "checked_up_to": stability.checked_up_to,
            "max_copies": request.max_copies,
        },
        timing_ms=timer.ms,
    )


def run_tradeoff(request: TradeoffRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    catalyst = parse_vector(request.catalyst, normalize=request.normalize)
    with _Timer() as timer:
        table = trade_off(source, target, catalyst, request.max_source, request.max_cat)
    return RunReport(
        command="tradeoff",
        inputs={
            "source": source.serialize(),
            "target": target.serialize(),
            "catalyst": catalyst.serialize(),
        },
        result={
            "rows": [
                {
                    "source_copies": row.source_copies,
                    "min_catalyst_copies": row.min_catalyst_copies,
                    "feasible_alone": row.feasible_without_catalyst,
                }
                for row in table.rows
            ],
            "monotonic": table.monotonic,
            "max_cat": request.max_cat,
        },
        timing_ms=timer.ms,
    )


def run_pmax(request: PmaxRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    catalyst: SchmidtVector | None = None
    inputs = {"source": source.serialize(), "target": target.serialize()}
    if request.catalyst is not None:
        catalyst = parse_vector(request.catalyst, normalize=request.normalize)
        inputs["catalyst"] = catalyst.serialize()
    with _Timer() as timer:
        report = combined_pmax(
            source, target, request.source_copies, catalyst, request.cat_copies
        )
    result = _probability_payload(report)
    result["source_copies"] = request.source_copies
    result["cat_copies"] = request.cat_copies if catalyst is not None else 0
    return RunReport(command="pmax", inputs=inputs, result=result, timing_ms=timer.ms)


def run_bounds(request: BoundsRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    with _Timer() as timer:
        sandwich = assisted_probability_bounds(source, target, request.power)
    result = {
        **_fraction_fields(sandwich.lower, "lower"),
        **_fraction_fields(sandwich.upper, "upper"),
        "power": sandwich.copies,
        "collapsed": sandwich.lower == sandwich.upper,
    }
    return RunReport(
        command="bounds",
        inputs={"source": source.serialize(), "target": target.serialize()},
        result=result,
        timing_ms=timer.ms,
    )


def run_search(request: SearchRequest) -> RunReport:
    source = parse_vector(request.source, normalize=request.normalize)
    target = parse_vector(request.target, normalize=request.normalize)
    lambda_target = (
        None if request.lambda_target is None else parse_rational(request.lambda_target)
    )
    config = SearchConfig(
        dimension=request.dimension,
        denominator=request.denominator,
        max_candidates=request.max_candidates,
        copies=request.copies,
        lambda_target=lambda_target,
    )
    with _Timer() as timer:
        outcome = search_catalysts(source, target, config)
    hits = []
    for hit in outcome.hits:
        entry: dict = {"catalyst": hit.catalyst.serialize(), "copies": config.copies}
        if hit.verdict is not None:
            entry["is_catalyst"] = hit.verdict.is_catalyst
        if hit.report is not None:
            entry.update(_fraction_fields(hit.report.p_max, "p_max"))
        hits.append(entry)
    result = {
        "mode": "deterministic" if lambda_target is None else "lambda",
        "lambda_target": None if lambda_target is None else str(lambda_target),
        "hits": hits,
        "counters": {
            "enumerated": outcome.counters.enumerated,
            "pruned_by_filter": outcome.counters.pruned_by_filter,
            "verified": outcome.counters.verified,
        },
    }
    return RunReport(
        command="search",
        inputs={"source": source.serialize(), "target": target.serialize()},
        result=result,
        timing_ms=timer.ms,
    )
