"""Deterministic catalysis analysis: ELOCC verification and MLOCC thresholds.

A catalyst is a state c with source ⊗ c majorized by target ⊗ c although the
source alone is not majorized by the target.  Besides exact verification,
this module implements two necessary-condition filters used to prune
candidate catalysts:

* ``single_copy_filter`` — interleaving ratio conditions that any single-copy
  catalyst must satisfy against every obstructed prefix.
* ``multicopy_filter`` — head-pair and tail-pair ratio conditions that any
  number of copies of the candidate must satisfy; a failure here rules the
  candidate out for every copy count, because the top-two (bottom-two) ratio
  of a tensor power equals that of the base state.

Both filters are necessary, never sufficient: passing proves nothing, a
violation proves impossibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import SchmidtVector, tensor, tensor_power
from .errors import InvalidParameterError
from .majorization import FeasibilityReport, majorizes, obstruction_set


@dataclass(frozen=True)
class StabilityResult:
    """Smallest copy count from which joint transformation stays feasible.

    ``threshold`` k means the relation source^p ≺ target^p was verified for
    every p in [k, 2k-1], which extends to all p >= k: any larger p splits
    into blocks of size k plus one block inside the window.  ``checked_up_to``
    is the largest power actually tested.
    """

    threshold: int | None
    checked_up_to: int


@dataclass(frozen=True)
class CatalystVerdict:
    is_catalyst: bool
    copies_used: int
    report: FeasibilityReport


@dataclass(frozen=True)
class FilterViolation:
    """One failed necessary condition.

    ``prefix_index`` is the obstructed prefix length l it was tested against;
    ``catalyst_index`` is the catalyst component index i for the interleaving
    conditions, None for conditions on the whole candidate.  ``lhs``/``rhs``
    are the two exact ratios that were compared, when both are finite.
    """

    prefix_index: int
    catalyst_index: int | None
    condition: str
    lhs: Fraction | None
    rhs: Fraction | None


@dataclass(frozen=True)
class FilterResult:
    passes: bool
    violations: tuple[FilterViolation, ...]


def _ratio_gt(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> bool:
    """a/b > c/d by cross-multiplication; b > 0, d >= 0, and d == 0 means c/d is infinite."""
    if d == 0:
        return False
    return a * d > c * b


def _ratio_lt(a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> bool:
    """a/b < c/d by cross-multiplication; d == 0 means c/d is infinite, so always true."""
    if d == 0:
        return True
    return a * d < c * b


def _require_catalyst(catalyst: SchmidtVector) -> None:
    if catalyst.dimension < 2:
        raise InvalidParameterError(
            "a catalyst needs at least 2 components; a point mass cannot change majorization"
        )


def is_transformable(source: SchmidtVector, target: SchmidtVector) -> FeasibilityReport:
    """Deterministic LOCC feasibility of source -> target (majorization test)."""
    return majorizes(source, target)


def is_catalyst(
    catalyst: SchmidtVector,
    source: SchmidtVector,
    target: SchmidtVector,
    copies: int = 1,
    *,
    cap: int | None = None,
) -> CatalystVerdict:
    """Exact test of source ⊗ catalyst^copies ≺ target ⊗ catalyst^copies."""
    _require_catalyst(catalyst)
    if copies < 1:
        raise InvalidParameterError(f"copies must be >= 1, got {copies}")
    borrowed = tensor_power(catalyst, copies, cap=cap)
    report = majorizes(
        tensor(source, borrowed, cap=cap), tensor(target, borrowed, cap=cap)
    )
    return CatalystVerdict(report.feasible, copies, report)


def min_catalyst_copies(
    catalyst: SchmidtVector,
    source: SchmidtVector,
    target: SchmidtVector,
    max_copies: int,
    *,
    cap: int | None = None,
) -> int | None:
    """Smallest copy count m <= max_copies that makes the catalyst work, if any.

    Feasibility at m implies feasibility at every m' >= m (tensoring with one
    more catalyst copy preserves majorization), so the first hit of an upward
    scan is the minimum.
    """
    _require_catalyst(catalyst)
    if max_copies < 1:
        raise InvalidParameterError(f"max_copies must be >= 1, got {max_copies}")
    borrowed: SchmidtVector | None = None
    for m in range(1, max_copies + 1):
        borrowed = catalyst if borrowed is None else tensor(borrowed, catalyst, cap=cap)
        report = majorizes(
            tensor(source, borrowed, cap=cap), tensor(target, borrowed, cap=cap)
        )
        if report.feasible:
            return m
    return None


def mlocc_threshold(
    source: SchmidtVector,
    target: SchmidtVector,
    max_copies: int,
    *,
    cap: int | None = None,
) -> StabilityResult:
    """Smallest k <= max_copies with source^p ≺ target^p for all p in [k, 2k-1].

    Checking the whole window is required: majorization of tensor powers is
    not monotonic in the exponent, so a single feasible power proves nothing
    about the next one.  Tensor powers are cached and reused across windows.
    """
    if max_copies < 1:
        raise InvalidParameterError(f"max_copies must be >= 1, got {max_copies}")
    source_powers: dict[int, SchmidtVector] = {1: source}
    target_powers: dict[int, SchmidtVector] = {1: target}
    feasible: dict[int, bool] = {}

    def power(cache: dict[int, SchmidtVector], base: SchmidtVector, p: int) -> SchmidtVector:
        top = max(cache)
        while top < p:
            cache[top + 1] = tensor(cache[top], base, cap=cap)
            top += 1
        return cache[p]

    def ok(p: int) -> bool:
        if p not in feasible:
            feasible[p] = majorizes(
                power(source_powers, source, p), power(target_powers, target, p)
            ).feasible
        return feasible[p]

    for k in range(1, max_copies + 1):
        if all(ok(p) for p in range(k, 2 * k)):
            # a minimal window forces k-1 itself to fail; verify explicitly
            assert k == 1 or not ok(k - 1)
            return StabilityResult(k, max(feasible))
    return StabilityResult(None, max(feasible))


def single_copy_filter(
    catalyst: SchmidtVector, source: SchmidtVector, target: SchmidtVector
) -> FilterResult:
    """Necessary conditions for the candidate to be a single-copy catalyst.

    With g the catalyst components and b the zero-padded target components,
    every obstructed prefix length l must satisfy, writing k for the catalyst
    rank and n for the padded length:

    * span_ratio:        g1/gk  >  b_l/b_{l+1}
    * upper_interleave:  g1/gi  >  b_l/b_{l+1}   or   gi/g_{i+1} < b1/b_l
    * lower_interleave:  g_{i+1}/gk > b_l/b_{l+1}  or  gi/g_{i+1} < b_{l+1}/b_n

    for every i in 1..k-1.  A violation means no single copy of the candidate
    can make the transformation feasible.  b_n = 0 makes a ratio with b_n in
    the denominator infinite, which satisfies the condition.
    """
    obstructions = obstruction_set(source, target)
    if not obstructions:
        return FilterResult(True, ())
    g = catalyst.expand()
    k = len(g)
    n = max(source.dimension, target.dimension)
    b = list(target.expand()) + [Fraction(0)] * (n - target.dimension)
    violations: list[FilterViolation] = []
    for l in obstructions:
        b_l, b_next = b[l - 1], b[l]
        if not _ratio_gt(g[0], g[k - 1], b_l, b_next):
            violations.append(
                FilterViolation(l, None, "span_ratio", g[0] / g[k - 1], b_l / b_next)
            )
        for i in range(1, k):
            gi, gi_next = g[i - 1], g[i]
            if not (
                _ratio_gt(g[0], gi, b_l, b_next)
                or _ratio_lt(gi, gi_next, b[0], b_l)
            ):
                violations.append(
                    FilterViolation(l, i, "upper_interleave", gi / gi_next, b[0] / b_l)
                )
            if not (
                _ratio_gt(gi_next, g[k - 1], b_l, b_next)
                or _ratio_lt(gi, gi_next, b_next, b[n - 1])
            ):
                rhs = None if b[n - 1] == 0 else b_next / b[n - 1]
                violations.append(
                    FilterViolation(l, i, "lower_interleave", gi / gi_next, rhs)
                )
    return FilterResult(not violations, tuple(violations))


def multicopy_filter(
    catalyst: SchmidtVector, source: SchmidtVector, target: SchmidtVector
) -> FilterResult:
    """Necessary conditions for ANY copy count of the candidate to catalyze.

    The top-two ratio of catalyst^m equals g1/g2 and the bottom-two ratio
    equals g_{k-1}/gk, independent of m, so every obstructed prefix length l
    must satisfy

    * head_pair_ratio:  g1/g2      <  b1/b_l
    * tail_pair_ratio:  g_{k-1}/gk <  b_{l+1}/b_n

    A violation rules the candidate out as a catalyst for every m >= 1.
    """
    obstructions = obstruction_set(source, target)
    if not obstructions:
        return FilterResult(True, ())
    if catalyst.dimension < 2:
        # a point mass leaves majorization unchanged, so it can never help
        first = obstructions.indices[0]
        return FilterResult(
            False, (FilterViolation(first, None, "product_state", None, None),)
        )
    g = catalyst.expand()
    k = len(g)
    n = max(source.dimension, target.dimension)
    b = list(target.expand()) + [Fraction(0)] * (n - target.dimension)
    violations: list[FilterViolation] = []
    for l in obstructions:
        if not _ratio_lt(g[0], g[1], b[0], b[l - 1]):
            violations.append(
                FilterViolation(l, None, "head_pair_ratio", g[0] / g[1], b[0] / b[l - 1])
            )
        if not _ratio_lt(g[k - 2], g[k - 1], b[l], b[n - 1]):
            rhs = None if b[n - 1] == 0 else b[l] / b[n - 1]
            violations.append(
                FilterViolation(l, None, "tail_pair_ratio", g[k - 2] / g[k - 1], rhs)
            )
    return FilterResult(not violations, tuple(violations))
