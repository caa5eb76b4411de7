"""Optimal conversion probabilities and catalyst-assisted bounds.

The maximal LOCC conversion probability (Vidal's formula) is the minimum
over prefix lengths l of the tail-sum ratio E_l(source)/E_l(target).  On a
stretch where both compressed vectors hold constant run values, both tails
are linear in l, so the ratio is monotone there and the minimum over the
stretch sits at an endpoint; only run boundaries need evaluating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ONE, SchmidtVector, tensor, tensor_power
from .errors import DimensionMismatchError, InvalidParameterError
from .majorization import _padded_segments


@dataclass(frozen=True)
class ProbabilityReport:
    """Exact maximal conversion probability with diagnostics.

    ``ratios`` holds the tail ratios at every evaluated prefix length
    (all run boundaries); ``minimizing_l`` is the smallest length attaining
    the minimum.  ``target_rank_exceeds_source`` flags the degenerate case
    where the target has more nonzero coefficients than the source, which
    forces the probability to 0 (LOCC cannot raise the Schmidt rank).
    """

    p_max: Fraction
    minimizing_l: int
    ratios: tuple[tuple[int, Fraction], ...]
    target_rank_exceeds_source: bool = False


@dataclass(frozen=True)
class BoundSandwich:
    """Two-sided bound on the best catalyst-assisted conversion probability
    for transforming ``copies`` source copies into as many target copies.

    ``lower`` is attainable with no catalyst and per-copy transformations;
    ``upper`` holds for every catalyst, of any rank, because the bottom tail
    ratio of the catalyzed pair collapses to (smallest source / smallest
    target) ** copies.
    """

    lower: Fraction
    upper: Fraction
    copies: int


def _tail(v: SchmidtVector, index: int) -> Fraction:
    """Tail sum from 1-based index over the zero-padded vector."""
    effective = min(index - 1, v.dimension)
    return ONE - v.prefix_sum(effective)


def max_conversion_probability(
    source: SchmidtVector, target: SchmidtVector
) -> ProbabilityReport:
    """Exact maximal LOCC conversion probability, min over l of tail ratios.

    Lengths where the target tail is exactly 0 impose no constraint and are
    skipped.  The result is 1 exactly when the source is majorized by the
    target.
    """
    candidates: dict[int, Fraction] = {}
    target_rank = target.dimension
    for start, end, _, _ in _padded_segments(source, target):
        for l in (start + 1, end):
            if l <= target_rank and l not in candidates:
                candidates[l] = _tail(source, l) / _tail(target, l)
    p_max = min(candidates.values())
    minimizing_l = min(l for l, ratio in candidates.items() if ratio == p_max)
    ratios = tuple(sorted(candidates.items()))
    return ProbabilityReport(p_max, minimizing_l, ratios, p_max == 0)


def is_lambda_catalyst(
    catalyst: SchmidtVector,
    source: SchmidtVector,
    target: SchmidtVector,
    threshold: Fraction,
    copies: int = 1,
    *,
    cap: int | None = None,
) -> bool:
    """True iff catalyst^copies raises the conversion probability to at least threshold."""
    if not 0 < threshold <= 1:
        raise InvalidParameterError(f"threshold must be in (0, 1], got {threshold}")
    if copies < 1:
        raise InvalidParameterError(f"copies must be >= 1, got {copies}")
    borrowed = tensor_power(catalyst, copies, cap=cap)
    report = max_conversion_probability(
        tensor(source, borrowed, cap=cap), tensor(target, borrowed, cap=cap)
    )
    return report.p_max >= threshold


def mlocc_attains(
    source: SchmidtVector,
    target: SchmidtVector,
    threshold: Fraction,
    max_copies: int,
    *,
    cap: int | None = None,
) -> int | None:
    """Smallest k <= max_copies whose joint conversion beats per-copy probability threshold.

    The defining inequality compares the k-copy conversion probability with
    threshold**k, i.e. with k independent single-copy attempts at the
    threshold rate.
    """
    if not 0 < threshold <= 1:
        raise InvalidParameterError(f"threshold must be in (0, 1], got {threshold}")
    if max_copies < 1:
        raise InvalidParameterError(f"max_copies must be >= 1, got {max_copies}")
    source_power = source
    target_power = target
    goal = threshold
    for k in range(1, max_copies + 1):
        if k > 1:
            source_power = tensor(source_power, source, cap=cap)
            target_power = tensor(target_power, target, cap=cap)
            goal *= threshold
        if max_conversion_probability(source_power, target_power).p_max >= goal:
            return k
    return None


def combined_pmax(
    source: SchmidtVector,
    target: SchmidtVector,
    source_copies: int,
    catalyst: SchmidtVector | None = None,
    cat_copies: int = 0,
    *,
    cap: int | None = None,
) -> ProbabilityReport:
    """Conversion probability of source^s ⊗ catalyst^m  ->  target^s ⊗ catalyst^m."""
    if source_copies < 1:
        raise InvalidParameterError(f"source_copies must be >= 1, got {source_copies}")
    if cat_copies < 0:
        raise InvalidParameterError(f"cat_copies must be >= 0, got {cat_copies}")
    if cat_copies > 0 and catalyst is None:
        raise InvalidParameterError("cat_copies > 0 requires a catalyst vector")
    lhs = tensor_power(source, source_copies, cap=cap)
    rhs = tensor_power(target, source_copies, cap=cap)
    if catalyst is not None and cat_copies > 0:
        borrowed = tensor_power(catalyst, cat_copies, cap=cap)
        lhs = tensor(lhs, borrowed, cap=cap)
        rhs = tensor(rhs, borrowed, cap=cap)
    return max_conversion_probability(lhs, rhs)


def assisted_probability_bounds(
    source: SchmidtVector, target: SchmidtVector, copies: int
) -> BoundSandwich:
    """Sandwich for the best catalyst-assisted probability over ``copies`` copies.

    Requires equal Schmidt ranks (the upper bound divides by the target's
    smallest coefficient).  Lower bound: single-copy optimum to the power
    ``copies``.  Upper bound: (smallest source / smallest target) **
    copies, clamped to 1.
    """
    if copies < 1:
        raise InvalidParameterError(f"copies must be >= 1, got {copies}")
    if source.dimension != target.dimension:
        raise DimensionMismatchError(
            f"bounds need equal Schmidt ranks, got {source.dimension} and {target.dimension}"
        )
    single = max_conversion_probability(source, target).p_max
    lower = single**copies
    upper = min(ONE, (source.smallest / target.smallest) ** copies)
    return BoundSandwich(lower, upper, copies)


def no_collective_advantage(source: SchmidtVector, target: SchmidtVector) -> bool:
    """True when no combination of copies and catalysts can beat per-copy LOCC.

    This happens exactly when the single-copy optimum already equals the
    ratio of smallest coefficients: the bound sandwich then collapses for
    every copy count.
    """
    if source.dimension != target.dimension:
        raise DimensionMismatchError(
            f"comparison needs equal Schmidt ranks, got {source.dimension} and {target.dimension}"
        )
    return max_conversion_probability(source, target).p_max == source.smallest / target.smallest
