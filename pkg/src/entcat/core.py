"""Exact Schmidt-coefficient vectors with run-length multiplicity compression.

Every coefficient is an arbitrary-precision rational (``fractions.Fraction``);
comparisons and arithmetic are exact, never routed through floating point.
Decimal text such as ``0.22`` converts exactly in base 10 (to 11/50).

A vector is canonical: entries sorted nonincreasing, strictly positive and
summing to exactly 1.  Equal entries are stored as a single
``(value, multiplicity)`` run.  This is what makes large tensor powers cheap:
a two-level state raised to the k-th power has k + 1 runs instead of 2**k
expanded components.  Expansion to positional form only happens when a caller
explicitly asks for it, and is bounded by the component cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import groupby
from typing import Iterable

from .errors import (
    EmptyInputError,
    InvalidParameterError,
    NonPositiveEntryError,
    NotNormalizedError,
    ResourceLimitError,
    VectorFormatError,
)

ZERO = Fraction(0)
ONE = Fraction(1)

#: Default ceiling on the expanded component count of any constructed vector.
DEFAULT_COMPONENT_CAP = 50_000_000

_component_cap = DEFAULT_COMPONENT_CAP


def get_component_cap() -> int:
    """Current ceiling on expanded component counts."""
    return _component_cap


def set_component_cap(cap: int) -> None:
    """Override the component cap (must be positive)."""
    global _component_cap
    if cap < 1:
        raise InvalidParameterError(f"component cap must be positive, got {cap}")
    _component_cap = cap


def _limit(cap: int | None) -> int:
    return _component_cap if cap is None else cap


def parse_rational(text: str) -> Fraction:
    """Parse a single decimal or fraction literal to an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise VectorFormatError(f"cannot parse {text!r} as a rational number") from exc


@dataclass(frozen=True)
class SchmidtVector:
    """Nonincreasing positive rationals summing to 1, stored as value runs.

    ``runs`` holds ``(value, multiplicity)`` pairs with strictly decreasing
    values.  Instances are immutable and safe to share between threads.
    """

    runs: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        if not self.runs:
            raise EmptyInputError("vector has no positive components")
        total = ZERO
        previous: Fraction | None = None
        for value, count in self.runs:
            if value <= 0:
                raise NonPositiveEntryError(f"component {value} is not positive")
            if count < 1:
                raise ValueError(f"run multiplicity must be >= 1, got {count}")
            if previous is not None and value >= previous:
                raise ValueError("runs must be strictly decreasing in value")
            previous = value
            total += value * count
        if total != ONE:
            raise NotNormalizedError(f"components sum to {total}, not 1")

    @classmethod
    def from_values(
        cls, values: Iterable[Fraction | int | str], *, normalize: bool = False
    ) -> "SchmidtVector":
        """Canonicalize raw coefficients: sort, drop zeros, merge equal runs.

        Negative entries are rejected.  If the exact sum differs from 1 the
        vector is rejected unless ``normalize`` is set, in which case every
        entry is divided by the sum.
        """
        items = [v if isinstance(v, Fraction) else Fraction(v) for v in values]
        for v in items:
            if v < 0:
                raise NonPositiveEntryError(f"component {v} is negative")
        items = [v for v in items if v > 0]
        if not items:
            raise EmptyInputError("vector has no positive components")
        total = sum(items, start=ZERO)
        if total != ONE:
            if not normalize:
                raise NotNormalizedError(f"components sum to {total}, not 1")
            items = [v / total for v in items]
        items.sort(reverse=True)
        runs = tuple((value, len(list(group))) for value, group in groupby(items))
        return cls(runs)

    @cached_property
    def dimension(self) -> int:
        """Expanded component count (the Schmidt rank)."""
        return sum(count for _, count in self.runs)

    @property
    def largest(self) -> Fraction:
        return self.runs[0][0]

    @property
    def smallest(self) -> Fraction:
        return self.runs[-1][0]

    def prefix_sum(self, length: int) -> Fraction:
        """Exact sum of the ``length`` largest components, 0 <= length <= dimension."""
        if not 0 <= length <= self.dimension:
            raise ValueError(f"prefix length {length} outside [0, {self.dimension}]")
        remaining = length
        acc = ZERO
        for value, count in self.runs:
            if remaining <= 0:
                break
            take = count if count < remaining else remaining
            acc += value * take
            remaining -= take
        return acc

    def expand(self, cap: int | None = None) -> tuple[Fraction, ...]:
        """Positional form. Guarded by the component cap; intended for small vectors."""
        limit = _limit(cap)
        if self.dimension > limit:
            raise ResourceLimitError(
                f"expanding {self.dimension} components exceeds the cap of {limit}"
            )
        out: list[Fraction] = []
        for value, count in self.runs:
            out.extend([value] * count)
        return tuple(out)

    def serialize(self) -> str:
        """Canonical text form: expanded fractions in lowest terms, comma separated."""
        return ",".join(str(v) for v in self.expand())

    def __repr__(self) -> str:
        if self.dimension <= 16:
            return f"SchmidtVector({self.serialize()!r})"
        return f"<SchmidtVector dimension={self.dimension} runs={len(self.runs)}>"


def parse_vector(text: str, *, normalize: bool = False) -> SchmidtVector:
    """Parse a comma-separated list of decimal or fraction literals.

    ``"0.4,0.4,0.1,0.1"`` and ``"50/103,30/103,23/103"`` are both accepted;
    decimals convert exactly.  The result is canonical (sorted, zero-free).
    """
    if text is None or not text.strip():
        raise EmptyInputError("empty vector text")
    tokens = text.strip().split(",")
    values = []
    for token in tokens:
        token = token.strip()
        if not token:
            raise VectorFormatError(f"empty component in {text!r}")
        values.append(parse_rational(token))
    return SchmidtVector.from_values(values, normalize=normalize)


def tensor(x: SchmidtVector, y: SchmidtVector, *, cap: int | None = None) -> SchmidtVector:
    """Canonical tensor product: all pairwise products, sorted nonincreasing."""
    limit = _limit(cap)
    needed = x.dimension * y.dimension
    if needed > limit:
        raise ResourceLimitError(
            f"tensor product needs {needed} expanded components, cap is {limit}"
        )
    products: dict[Fraction, int] = {}
    for vx, cx in x.runs:
        for vy, cy in y.runs:
            key = vx * vy
            products[key] = products.get(key, 0) + cx * cy
    runs = tuple(sorted(products.items(), key=lambda item: item[0], reverse=True))
    return SchmidtVector(runs)


def tensor_power(x: SchmidtVector, k: int, *, cap: int | None = None) -> SchmidtVector:
    """k-fold tensor power of x, computed by repeated squaring over runs."""
    if k < 1:
        raise InvalidParameterError(f"tensor power exponent must be >= 1, got {k}")
    limit = _limit(cap)
    if x.dimension**k > limit:
        raise ResourceLimitError(
            f"tensor power needs {x.dimension**k} expanded components, cap is {limit}"
        )
    result: SchmidtVector | None = None
    base = x
    exponent = k
    while True:
        if exponent & 1:
            result = base if result is None else tensor(result, base, cap=limit)
        exponent >>= 1
        if not exponent:
            break
        base = tensor(base, base, cap=limit)
    assert result is not None
    return result


def format_decimal(value: Fraction, places: int = 4) -> str:
    """Render an exact rational as a fixed-point decimal, rounding half-even."""
    if places < 0:
        raise InvalidParameterError("decimal places must be >= 0")
    scale = 10**places
    scaled = round(value * scale)  # Fraction rounds ties to even
    sign = "-" if scaled < 0 else ""
    whole, part = divmod(abs(scaled), scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{part:0{places}d}"
