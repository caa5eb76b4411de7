"""Catalyst candidate search over a simplex grid, and trade-off tables.

Candidates are nonincreasing positive rational tuples with entries j/q for a
fixed grid denominator q, enumerated in ascending lexicographic order.  Each
candidate passes through the necessary-condition filters before the exact
(and much more expensive) tensor verification.  Filters are only applied
where they are sound: they characterize deterministic catalysis, so for a
probability target below 1 every candidate goes straight to verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .catalysis import (
    CatalystVerdict,
    is_catalyst,
    multicopy_filter,
    single_copy_filter,
)
from .core import ONE, SchmidtVector, tensor, tensor_power
from .errors import InvalidParameterError, NoSearchNeededError
from .majorization import majorizes
from .probabilistic import ProbabilityReport, max_conversion_probability


@dataclass(frozen=True)
class SearchConfig:
    """Grid and verification parameters for a catalyst search.

    ``dimension`` is the candidate rank k >= 2, ``denominator`` the grid
    resolution q (entries are j/q), ``copies`` the number of candidate copies
    borrowed during verification.  ``lambda_target`` switches to probabilistic
    mode: instead of exact majorization, a candidate is a hit when it raises
    the conversion probability to at least the target.  ``max_candidates``
    caps the number of verified hits returned.
    """

    dimension: int
    denominator: int
    max_candidates: int = 100
    copies: int = 1
    lambda_target: Fraction | None = None

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise InvalidParameterError(
                f"catalyst dimension must be >= 2, got {self.dimension}"
            )
        if self.denominator < 1:
            raise InvalidParameterError(
                f"grid denominator must be >= 1, got {self.denominator}"
            )
        if self.max_candidates < 1:
            raise InvalidParameterError(
                f"max_candidates must be >= 1, got {self.max_candidates}"
            )
        if self.copies < 1:
            raise InvalidParameterError(f"copies must be >= 1, got {self.copies}")
        if self.lambda_target is not None and not 0 < self.lambda_target <= 1:
            raise InvalidParameterError(
                f"lambda target must be in (0, 1], got {self.lambda_target}"
            )


@dataclass(frozen=True)
class SearchHit:
    catalyst: SchmidtVector
    verdict: CatalystVerdict | None = None
    report: ProbabilityReport | None = None


@dataclass(frozen=True)
class SearchCounters:
    enumerated: int
    pruned_by_filter: int
    verified: int


@dataclass(frozen=True)
class SearchResult:
    hits: tuple[SearchHit, ...]
    counters: SearchCounters


@dataclass(frozen=True)
class TradeOffRow:
    source_copies: int
    min_catalyst_copies: int | None
    feasible_without_catalyst: bool


@dataclass(frozen=True)
class TradeOffTable:
    """Per source-copy count, the minimal catalyst-copy count restoring feasibility.

    ``monotonic`` records whether the observed minima are nonincreasing in the
    source-copy count; the table is emitted either way, the flag is a warning.
    """

    rows: tuple[TradeOffRow, ...]
    monotonic: bool


def _partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing positive integer tuples of length ``parts`` summing to ``total``,
    in ascending lexicographic order."""
    if parts == 1:
        if total >= 1 and (largest is None or total <= largest):
            yield (total,)
        return
    first_min = -(-total // parts)  # ceil: keep the tuple nonincreasing
    first_max = total - (parts - 1)
    if largest is not None:
        first_max = min(first_max, largest)
    for first in range(first_min, first_max + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def grid_candidates(config: SearchConfig) -> Iterator[SchmidtVector]:
    """Candidate catalysts on the simplex grid, ascending lexicographic order.

    Product states (largest entry 1) cannot occur: entries are positive, so a
    k-tuple with k >= 2 always splits the mass.
    """
    q = config.denominator
    for parts in _partitions(q, config.dimension):
        values = tuple(Fraction(j, q) for j in parts)
        if values[0] == ONE:
            continue
        yield SchmidtVector.from_values(values)


def search_catalysts(
    source: SchmidtVector,
    target: SchmidtVector,
    config: SearchConfig,
    *,
    cap: int | None = None,
) -> SearchResult:
    """Enumerate, prune, and exactly verify catalyst candidates.

    Deterministic mode (no lambda target) requires the plain transformation
    to be infeasible; otherwise there is nothing to search for.  The filters
    prune only in deterministic mode (or a lambda target of exactly 1, which
    is the same predicate): they are necessary conditions for deterministic
    catalysis and would wrongly reject valid probabilistic catalysts.
    """
    deterministic = config.lambda_target is None
    if deterministic and majorizes(source, target).feasible:
        raise NoSearchNeededError(
            "the transformation is already feasible without a catalyst"
        )
    filters_sound = deterministic or config.lambda_target == 1
    enumerated = 0
    pruned = 0
    verified = 0
    hits: list[SearchHit] = []
    for candidate in grid_candidates(config):
        enumerated += 1
        if filters_sound:
            if not multicopy_filter(candidate, source, target).passes:
                pruned += 1
                continue
            if config.copies == 1 and not single_copy_filter(candidate, source, target).passes:
                pruned += 1
                continue
        verified += 1
        if deterministic:
            verdict = is_catalyst(candidate, source, target, config.copies, cap=cap)
            if verdict.is_catalyst:
                hits.append(SearchHit(candidate, verdict=verdict))
        else:
            borrowed = tensor_power(candidate, config.copies, cap=cap)
            report = max_conversion_probability(
                tensor(source, borrowed, cap=cap), tensor(target, borrowed, cap=cap)
            )
            if report.p_max >= config.lambda_target:
                hits.append(SearchHit(candidate, report=report))
        if len(hits) >= config.max_candidates:
            break
    return SearchResult(tuple(hits), SearchCounters(enumerated, pruned, verified))


def trade_off(
    source: SchmidtVector,
    target: SchmidtVector,
    catalyst: SchmidtVector,
    max_source: int,
    max_cat: int,
    *,
    cap: int | None = None,
) -> TradeOffTable:
    """Feasibility grid over (source copies, catalyst copies).

    For each s in 1..max_source, checks whether s joint copies transform on
    their own; if not, finds the minimal catalyst-copy count m <= max_cat
    making source^s ⊗ catalyst^m feasible.
    """
    if max_source < 1 or max_cat < 1:
        raise InvalidParameterError("max_source and max_cat must both be >= 1")
    rows: list[TradeOffRow] = []
    source_power: SchmidtVector | None = None
    target_power: SchmidtVector | None = None
    cat_powers: list[SchmidtVector] = []
    for s in range(1, max_source + 1):
        source_power = source if source_power is None else tensor(source_power, source, cap=cap)
        target_power = target if target_power is None else tensor(target_power, target, cap=cap)
        if majorizes(source_power, target_power).feasible:
            rows.append(TradeOffRow(s, None, True))
            continue
        found: int | None = None
        for m in range(1, max_cat + 1):
            if len(cat_powers) < m:
                previous = cat_powers[-1] if cat_powers else None
                cat_powers.append(
                    catalyst if previous is None else tensor(previous, catalyst, cap=cap)
                )
            borrowed = cat_powers[m - 1]
            if majorizes(
                tensor(source_power, borrowed, cap=cap),
                tensor(target_power, borrowed, cap=cap),
            ).feasible:
                found = m
                break
        rows.append(TradeOffRow(s, found, False))
    present = [row.min_catalyst_copies for row in rows if row.min_catalyst_copies is not None]
    monotonic = all(a >= b for a, b in zip(present, present[1:]))
    return TradeOffTable(tuple(rows), monotonic)
