"""Majorization tests and prefix-sum machinery over compressed vectors.

The comparison never expands a vector.  On any index stretch where both
vectors hold constant run values, the prefix-sum difference is a linear
function of the prefix length, so its sign over the whole stretch is
determined by the stretch endpoints.  Walking the merged run boundaries of
the two vectors therefore decides majorization in time proportional to the
number of runs, not the expanded dimension.

Vectors of unequal rank are compared after implicitly zero-padding the
shorter one; padding happens here, at comparison time, so stored vectors
stay strictly positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import ONE, ZERO, SchmidtVector
from .errors import IndexOutOfRangeError


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of a majorization test.

    ``feasible`` is true iff every prefix inequality holds.  For compressed
    vectors ``violated_prefixes`` lists the smallest violated length inside
    each maximal stretch of constant run values; ``checked_length`` is the
    common zero-padded expanded length.
    """

    feasible: bool
    violated_prefixes: tuple[int, ...]
    checked_length: int


@dataclass(frozen=True)
class ObstructionSet:
    """Prefix lengths where the source strictly out-sums the target.

    Nonempty exactly when the deterministic transformation is infeasible;
    the necessary-condition filters for catalysts quantify over this set.
    """

    indices: tuple[int, ...]

    def __bool__(self) -> bool:
        return bool(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices


def _padded_segments(
    x: SchmidtVector, y: SchmidtVector
) -> Iterator[tuple[int, int, Fraction, Fraction]]:
    """Yield (start, end, x_value, y_value) with both vectors constant on (start, end]."""
    n = max(x.dimension, y.dimension)

    def padded(v: SchmidtVector) -> list[tuple[Fraction, int]]:
        runs = list(v.runs)
        if v.dimension < n:
            runs.append((ZERO, n - v.dimension))
        return runs

    xruns = padded(x)
    yruns = padded(y)
    i = j = 0
    x_end = xruns[0][1]
    y_end = yruns[0][1]
    position = 0
    while position < n:
        boundary = min(x_end, y_end)
        yield position, boundary, xruns[i][0], yruns[j][0]
        position = boundary
        if position == x_end and i + 1 < len(xruns):
            i += 1
            x_end += xruns[i][1]
        if position == y_end and j + 1 < len(yruns):
            j += 1
            y_end += yruns[j][1]


def _first_violation(diff: Fraction, step: Fraction, start: int, end: int) -> int | None:
    """Smallest l in (start, end] with diff + (l - start) * step > 0, if any."""
    if step <= 0:
        # difference is nonincreasing along the stretch, peak is at start + 1
        return start + 1 if diff + step > 0 else None
    if diff + (end - start) * step <= 0:
        return None
    if diff > 0:
        return start + 1
    return start + math.floor(-diff / step) + 1


def majorizes(x: SchmidtVector, y: SchmidtVector) -> FeasibilityReport:
    """Test x majorized-by y: every prefix sum of x at most that of y.

    This is Nielsen's criterion for a deterministic LOCC transformation with
    x as the source and y as the target spectrum.  Totals are both exactly 1
    by construction, so the full-length prefix is never violated.
    """
    violated: list[int] = []
    diff = ZERO
    n = max(x.dimension, y.dimension)
    for start, end, vx, vy in _padded_segments(x, y):
        step = vx - vy
        hit = _first_violation(diff, step, start, end)
        if hit is not None:
            violated.append(hit)
        diff += (end - start) * step
    assert diff == 0, "totals must both be exactly 1"
    return FeasibilityReport(not violated, tuple(violated), n)


def _violation_range(diff: Fraction, step: Fraction, start: int, end: int) -> range:
    """All l in (start, end] with diff + (l - start) * step > 0."""
    if step == 0:
        return range(start + 1, end + 1) if diff > 0 else range(0)
    if step > 0:
        if diff + (end - start) * step <= 0:
            return range(0)
        first = start + 1 if diff > 0 else start + math.floor(-diff / step) + 1
        return range(max(first, start + 1), end + 1)
    if diff + step <= 0:
        return range(0)
    last = start + math.ceil(diff / -step) - 1
    return range(start + 1, min(last, end) + 1)


def obstruction_set(source: SchmidtVector, target: SchmidtVector) -> ObstructionSet:
    """All prefix lengths l < n where the source prefix sum strictly exceeds the target's."""
    n = max(source.dimension, target.dimension)
    indices: list[int] = []
    diff = ZERO
    for start, end, vx, vy in _padded_segments(source, target):
        step = vx - vy
        capped_end = min(end, n - 1)
        if capped_end > start:
            indices.extend(_violation_range(diff, step, start, capped_end))
        diff += (end - start) * step
    return ObstructionSet(tuple(indices))


def incomparable(source: SchmidtVector, target: SchmidtVector) -> bool:
    """True when neither direction of the deterministic transformation is feasible."""
    return (
        not majorizes(source, target).feasible
        and not majorizes(target, source).feasible
    )


def tail_sum(x: SchmidtVector, index: int) -> Fraction:
    """Exact sum of components index..n (1-based), the entanglement monotone E_index."""
    if not 1 <= index <= x.dimension:
        raise IndexOutOfRangeError(
            f"tail index {index} outside [1, {x.dimension}]"
        )
    return ONE - x.prefix_sum(index - 1)
