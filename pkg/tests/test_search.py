from fractions import Fraction

import pytest

from entcat import (
    InvalidParameterError,
    NoSearchNeededError,
    SearchConfig,
    grid_candidates,
    is_catalyst,
    majorizes,
    parse_rational,
    parse_vector,
    search_catalysts,
    tensor,
    tensor_power,
    trade_off,
)

INTRO = ("0.4,0.4,0.1,0.1", "0.5,0.25,0.25")
HARD = ("0.4,0.4,0.1,0.1", "0.5,0.25,0.22,0.03")
TRADE = ("0.4,0.4,0.1,0.1", "0.5,0.25,0.2,0.05")


class TestGridCandidates:
    def test_rank2_grid(self):
        got = [c.serialize() for c in grid_candidates(SearchConfig(dimension=2, denominator=10))]
        assert got == ["1/2,1/2", "3/5,2/5", "7/10,3/10", "4/5,1/5", "9/10,1/10"]

    def test_rank3_grid_is_lexicographic(self):
        got = [
            tuple(c.expand())
            for c in grid_candidates(SearchConfig(dimension=3, denominator=6))
        ]
        third = Fraction(1, 3)
        assert got == [
            (third, third, third),
            (Fraction(1, 2), third, Fraction(1, 6)),
            (Fraction(2, 3), Fraction(1, 6), Fraction(1, 6)),
        ]

    def test_too_fine_dimension_yields_nothing(self):
        assert list(grid_candidates(SearchConfig(dimension=3, denominator=2))) == []

    def test_config_validation(self):
        with pytest.raises(InvalidParameterError):
            SearchConfig(dimension=1, denominator=10)
        with pytest.raises(InvalidParameterError):
            SearchConfig(dimension=2, denominator=0)
        with pytest.raises(InvalidParameterError):
            SearchConfig(dimension=2, denominator=10, lambda_target=Fraction(2))


class TestSearchCatalysts:
    def test_intro_pair_finds_the_known_catalyst(self):
        source, target = map(parse_vector, INTRO)
        result = search_catalysts(source, target, SearchConfig(dimension=2, denominator=10))
        assert [h.catalyst.serialize() for h in result.hits] == ["3/5,2/5"]
        assert result.counters.enumerated == 5
        assert result.counters.verified == 1
        assert result.counters.pruned_by_filter == 4
        assert result.hits[0].verdict is not None and result.hits[0].verdict.is_catalyst

    def test_copy_count_changes_the_verdict(self):
        source, target = map(parse_vector, HARD)
        one = search_catalysts(source, target, SearchConfig(dimension=2, denominator=10, copies=1))
        assert "3/5,2/5" not in [h.catalyst.serialize() for h in one.hits]
        five = search_catalysts(source, target, SearchConfig(dimension=2, denominator=10, copies=5))
        assert "3/5,2/5" in [h.catalyst.serialize() for h in five.hits]

    def test_no_search_needed(self):
        v = parse_vector("0.5,0.3,0.2")
        with pytest.raises(NoSearchNeededError):
            search_catalysts(v, v, SearchConfig(dimension=2, denominator=10))

    def test_filters_disabled_in_probabilistic_mode(self):
        # (13/20, 7/20) fails the deterministic filters for this pair, yet it
        # raises the conversion probability; probabilistic mode must keep it
        source = parse_vector("0.6,0.2,0.2")
        target = parse_vector("0.5,0.4,0.1")
        result = search_catalysts(
            source,
            target,
            SearchConfig(dimension=2, denominator=20, lambda_target=parse_rational("0.9")),
        )
        assert result.counters.pruned_by_filter == 0
        hits = [h.catalyst.serialize() for h in result.hits]
        assert "13/20,7/20" in hits
        for hit in result.hits:
            assert hit.report is not None
            assert hit.report.p_max >= Fraction(9, 10)

    def test_lambda_one_equals_deterministic_verdicts(self):
        source, target = map(parse_vector, INTRO)
        exact = search_catalysts(source, target, SearchConfig(dimension=2, denominator=10))
        prob = search_catalysts(
            source, target, SearchConfig(dimension=2, denominator=10, lambda_target=Fraction(1))
        )
        assert [h.catalyst for h in exact.hits] == [h.catalyst for h in prob.hits]
        assert prob.counters.pruned_by_filter == exact.counters.pruned_by_filter

    def test_pruning_soundness_exhaustive_small_grid(self):
        source, target = map(parse_vector, HARD)
        for dimension in (2, 3):
            config = SearchConfig(dimension=dimension, denominator=12, max_candidates=1000)
            with_filters = search_catalysts(source, target, config)
            # re-verify every enumerated candidate without any pruning
            unfiltered_hits = [
                c.serialize()
                for c in grid_candidates(config)
                if is_catalyst(c, source, target, 1).is_catalyst
            ]
            assert [h.catalyst.serialize() for h in with_filters.hits] == unfiltered_hits

    def test_max_candidates_truncates(self):
        source, target = map(parse_vector, INTRO)
        config = SearchConfig(dimension=2, denominator=60, max_candidates=2)
        result = search_catalysts(source, target, config)
        assert len(result.hits) == 2

    def test_deterministic_result(self):
        source, target = map(parse_vector, HARD)
        config = SearchConfig(dimension=2, denominator=10, copies=5)
        first = search_catalysts(source, target, config)
        second = search_catalysts(source, target, config)
        assert first == second


class TestTradeOff:
    def test_full_table(self):
        source, target = map(parse_vector, TRADE)
        table = trade_off(source, target, parse_vector("0.6,0.4"), 6, 12)
        got = [
            (r.source_copies, r.min_catalyst_copies, r.feasible_without_catalyst)
            for r in table.rows
        ]
        assert got == [
            (1, 11, False),
            (2, 5, False),
            (3, 4, False),
            (4, 2, False),
            (5, 1, False),
            (6, None, True),
        ]
        assert table.monotonic

    def test_rows_are_minimal(self):
        source, target = map(parse_vector, TRADE)
        cat = parse_vector("0.6,0.4")
        table = trade_off(source, target, cat, 5, 12)
        for row in table.rows:
            if row.min_catalyst_copies is None:
                continue
            s, m = row.source_copies, row.min_catalyst_copies
            lhs = tensor_power(source, s)
            rhs = tensor_power(target, s)
            assert majorizes(
                tensor(lhs, tensor_power(cat, m)), tensor(rhs, tensor_power(cat, m))
            ).feasible
            if m > 1:
                assert not majorizes(
                    tensor(lhs, tensor_power(cat, m - 1)),
                    tensor(rhs, tensor_power(cat, m - 1)),
                ).feasible

    def test_identity_rows_all_feasible(self):
        v = parse_vector("0.5,0.3,0.2")
        table = trade_off(v, v, parse_vector("0.6,0.4"), 3, 3)
        assert all(r.feasible_without_catalyst for r in table.rows)
        assert all(r.min_catalyst_copies is None for r in table.rows)

    def test_cat_budget_too_small(self):
        source, target = map(parse_vector, TRADE)
        table = trade_off(source, target, parse_vector("0.6,0.4"), 1, 5)
        assert table.rows[0].min_catalyst_copies is None
        assert not table.rows[0].feasible_without_catalyst

    def test_validation(self):
        source, target = map(parse_vector, TRADE)
        with pytest.raises(InvalidParameterError):
            trade_off(source, target, parse_vector("0.6,0.4"), 0, 5)
