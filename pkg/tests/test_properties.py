"""Hypothesis property tests for the core invariants."""

import random
from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import given, settings

from entcat import (
    SchmidtVector,
    majorizes,
    max_conversion_probability,
    obstruction_set,
    parse_vector,
    tensor,
    tensor_power,
)

from oracles import (
    brute_majorizes,
    brute_pmax,
    brute_power,
    brute_tensor,
    brute_violations,
    pinch,
)


@st.composite
def schmidt_vectors(draw, max_dim=4, max_weight=30):
    dim = draw(st.integers(1, max_dim))
    parts = draw(st.lists(st.integers(1, max_weight), min_size=dim, max_size=dim))
    total = sum(parts)
    return SchmidtVector.from_values([Fraction(p, total) for p in parts])


@given(schmidt_vectors())
def test_serialization_round_trip(v):
    assert parse_vector(v.serialize()) == v


@given(schmidt_vectors(max_dim=3), schmidt_vectors(max_dim=3))
def test_tensor_commutes_and_preserves_extremes(x, y):
    xy = tensor(x, y)
    assert xy == tensor(y, x)
    assert xy.largest == x.largest * y.largest
    assert xy.smallest == x.smallest * y.smallest
    assert sum(value * count for value, count in xy.runs) == 1
    assert list(xy.expand()) == brute_tensor(list(x.expand()), list(y.expand()))


@given(schmidt_vectors(max_dim=3), st.integers(1, 2), st.integers(1, 2))
def test_power_additivity(x, a, b):
    assert tensor_power(x, a + b) == tensor(tensor_power(x, a), tensor_power(x, b))


@given(schmidt_vectors(max_dim=3), st.integers(2, 3))
def test_power_matches_brute_force(x, k):
    assert list(tensor_power(x, k).expand()) == brute_power(list(x.expand()), k)


@given(schmidt_vectors(), schmidt_vectors())
def test_majorizes_matches_oracle(x, y):
    report = majorizes(x, y)
    a, b = list(x.expand()), list(y.expand())
    assert report.feasible == brute_majorizes(a, b)
    expected = brute_violations(a, b)
    if expected:
        assert report.violated_prefixes[0] == expected[0]
        assert set(report.violated_prefixes) <= set(expected)


@given(schmidt_vectors(), schmidt_vectors())
def test_obstruction_set_matches_oracle(x, y):
    got = obstruction_set(x, y)
    assert list(got.indices) == brute_violations(list(x.expand()), list(y.expand()))
    assert bool(got) == (not majorizes(x, y).feasible)


@given(schmidt_vectors(), schmidt_vectors())
def test_antisymmetry(x, y):
    if majorizes(x, y).feasible and majorizes(y, x).feasible:
        assert x == y


@given(schmidt_vectors(max_dim=4), st.integers(0, 5), schmidt_vectors(max_dim=3))
@settings(max_examples=150)
def test_tensor_monotonicity(y, pinches, z):
    rng = random.Random(pinches * 7919 + y.dimension)
    values = list(y.expand())
    for _ in range(pinches):
        values = pinch(rng, values)
    x = SchmidtVector.from_values(values)
    assert majorizes(x, y).feasible
    assert majorizes(tensor(x, z), tensor(y, z)).feasible


@given(schmidt_vectors(), schmidt_vectors())
def test_pmax_matches_oracle_and_bounds(x, y):
    report = max_conversion_probability(x, y)
    assert report.p_max == brute_pmax(list(x.expand()), list(y.expand()))
    assert (report.p_max == 1) == majorizes(x, y).feasible
    assert report.p_max <= 1
    if x.dimension >= y.dimension:
        assert report.p_max > 0
    assert dict(report.ratios)[report.minimizing_l] == report.p_max
