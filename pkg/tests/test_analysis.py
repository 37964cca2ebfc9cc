from collections import Counter
from fractions import Fraction
from math import comb, log2

import numpy as np
import pytest

from fastbin import (
    OccupancyModel,
    count_compositions,
    count_slot_value,
    enumerate_compositions,
    mean_gt2,
    slot_probabilities,
    slot_value_census,
    theoretical_speedup,
)
from fastbin.analysis import _mean_gt2_tail_series
from fastbin.errors import (
    DegenerateModel,
    EmptyTail,
    SlotValueOutOfRange,
    TooLargeToEnumerate,
)


class TestCounts:
    def test_small_grid(self):
        assert count_compositions(OccupancyModel(3, 3)) == 10

    def test_single(self):
        assert count_compositions(OccupancyModel(1, 1)) == 1

    def test_enumerated_5_into_4(self):
        model = OccupancyModel(5, 4)
        assert count_compositions(model) == 56
        assert len(list(enumerate_compositions(model))) == 56

    def test_slot_counts_small_grid(self):
        model = OccupancyModel(3, 3)
        assert [count_slot_value(model, j) for j in range(4)] == [4, 3, 2, 1]

    def test_full_slot_is_unique(self):
        assert count_slot_value(OccupancyModel(6, 1), 6) == 1
        assert count_slot_value(OccupancyModel(6, 5), 6) == 1

    def test_slot_count_against_enumeration(self):
        # count slots holding 2 across all compositions, then divide by m2
        model = OccupancyModel(5, 4)
        twos = sum(row.count(2) for row in enumerate_compositions(model))
        assert twos % model.m2 == 0
        assert count_slot_value(model, 2) == twos // model.m2 == 10

    def test_j_out_of_range(self):
        with pytest.raises(SlotValueOutOfRange):
            count_slot_value(OccupancyModel(3, 3), 4)
        with pytest.raises(SlotValueOutOfRange):
            count_slot_value(OccupancyModel(3, 3), -1)

    def test_model_validation(self):
        with pytest.raises(ValueError):
            OccupancyModel(0, 3)
        with pytest.raises(ValueError):
            OccupancyModel(3, 0)


class TestEnumeration:
    def test_small_grid_contents(self):
        rows = list(enumerate_compositions(OccupancyModel(3, 3)))
        assert len(rows) == 10
        assert rows[0] == (3, 0, 0)
        assert (1, 1, 1) in rows
        assert len(set(rows)) == 10
        assert all(sum(r) == 3 and len(r) == 3 for r in rows)
        assert all(min(r) >= 0 for r in rows)

    def test_two_cells(self):
        assert set(enumerate_compositions(OccupancyModel(1, 2))) == {(1, 0), (0, 1)}

    def test_one_cell(self):
        assert list(enumerate_compositions(OccupancyModel(4, 1))) == [(4,)]

    def test_guard(self):
        with pytest.raises(TooLargeToEnumerate):
            enumerate_compositions(OccupancyModel(30, 30))

    @pytest.mark.parametrize("m1,m2", [(1, 1), (2, 5), (5, 2), (4, 4), (6, 3)])
    def test_census_matches_enumeration(self, m1, m2):
        model = OccupancyModel(m1, m2)
        tally = Counter()
        rows = 0
        for row in enumerate_compositions(model):
            tally.update(row)
            rows += 1
        counts, census_rows = slot_value_census(model)
        assert census_rows == rows == count_compositions(model)
        assert counts.tolist() == [tally.get(j, 0) for j in range(m1 + 1)]


class TestGridIdentities:
    def test_total_and_weighted_counts(self):
        # sum of C_j recovers C; weighted sum recovers m1*C/m2, exactly
        for m1 in range(1, 21):
            for m2 in range(1, 21):
                model = OccupancyModel(m1, m2)
                C = count_compositions(model)
                cjs = [count_slot_value(model, j) for j in range(m1 + 1)]
                assert sum(cjs) == C
                assert m2 * sum(j * cj for j, cj in enumerate(cjs)) == m1 * C

    def test_census_oracle_totals(self):
        for m1 in range(1, 7):
            for m2 in range(1, 7):
                model = OccupancyModel(m1, m2)
                counts, rows = slot_value_census(model)
                C = count_compositions(model)
                assert rows == C
                assert counts.sum() == m2 * C
                for j in range(m1 + 1):
                    assert counts[j] == m2 * count_slot_value(model, j)

    def test_enumeration_oracle_sweep(self):
        # every model in the grid whose composition count fits the budget
        for m1 in range(1, 17):
            for m2 in range(1, 17):
                model = OccupancyModel(m1, m2)
                C = count_compositions(model)
                if C > 10**5:
                    continue
                counts, rows = slot_value_census(model)
                assert rows == C
                assert counts.sum() == m2 * C
                for j in range(m1 + 1):
                    assert counts[j] == m2 * count_slot_value(model, j)


class TestSlotProbabilities:
    def test_small_grid_values(self):
        dist = slot_probabilities(OccupancyModel(3, 3))
        assert dist.probs == pytest.approx([0.4, 0.3, 0.2, 0.1], abs=1e-12)
        assert dist.p_tail == pytest.approx(0.1, abs=1e-12)
        assert dist.mu_all == 1.0

    def test_small_grid_exact_fractions(self):
        model = OccupancyModel(3, 3)
        C = count_compositions(model)
        fracs = [Fraction(count_slot_value(model, j), C) for j in range(4)]
        assert fracs == [Fraction(2, 5), Fraction(3, 10), Fraction(1, 5), Fraction(1, 10)]

    def test_recurrence_matches_exact_ratios(self):
        # the closed-form check built into slot_probabilities runs here
        for m1 in range(1, 32):
            for m2 in range(2, 33):
                if m1 + m2 > 64:
                    continue
                dist = slot_probabilities(OccupancyModel(m1, m2))
                assert abs(dist.probs.sum() - 1.0) < 1e-12

    def test_sums_to_one_large(self):
        for m1, m2 in [(1000, 1000), (1000, 2000), (17, 5000), (5000, 17)]:
            dist = slot_probabilities(OccupancyModel(m1, m2))
            assert abs(dist.probs.sum() - 1.0) < 1e-12

    def test_strictly_decreasing_above_underflow(self):
        for m1, m2 in [(3, 3), (10, 17), (64, 64), (512, 1024)]:
            p = slot_probabilities(OccupancyModel(m1, m2)).probs
            live = p > 1e-300
            assert (np.diff(p[live]) < 0).all()

    def test_two_cells_is_uniform(self):
        # with two cells every split is equally likely; no strict decrease
        p = slot_probabilities(OccupancyModel(9, 2)).probs
        assert p == pytest.approx([0.1] * 10, abs=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateModel):
            slot_probabilities(OccupancyModel(3, 1))

    def test_equal_sizes_limit(self):
        dist = slot_probabilities(OccupancyModel(10**6, 10**6))
        assert dist.probs[0] == pytest.approx(0.5, abs=1e-5)
        assert dist.probs[1] == pytest.approx(0.25, abs=1e-5)
        assert dist.probs[2] == pytest.approx(0.125, abs=1e-5)

    def test_doubled_grid_limit(self):
        dist = slot_probabilities(OccupancyModel(10**6, 2 * 10**6))
        assert dist.probs[0] == pytest.approx(2 / 3, abs=1e-5)
        assert dist.probs[1] == pytest.approx(2 / 9, abs=1e-5)
        assert dist.probs[2] == pytest.approx(2 / 27, abs=1e-5)

    def test_probs_are_immutable(self):
        dist = slot_probabilities(OccupancyModel(4, 4))
        with pytest.raises(ValueError):
            dist.probs[0] = 0.0


class TestMeanGt2:
    def test_small_grid_exact(self):
        # (mu_all - P1 - 2 P2) / tail = (1 - 0.3 - 0.4) / 0.1
        assert mean_gt2(OccupancyModel(3, 3)) == pytest.approx(3.0, abs=1e-12)

    def test_empty_tail(self):
        with pytest.raises(EmptyTail):
            mean_gt2(OccupancyModel(2, 5))
        with pytest.raises(EmptyTail):
            mean_gt2(OccupancyModel(1, 2))

    @pytest.mark.parametrize("m", [4, 8, 16, 64, 256, 1024, 4096])
    def test_bounds_for_equal_sizes(self, m):
        mu = mean_gt2(OccupancyModel(m, m))
        dist = slot_probabilities(OccupancyModel(m, m))
        assert 3.0 < mu < 4.0
        assert mu < 3.0 + dist.mu_all / dist.p_tail

    def test_limit_with_many_cells(self):
        assert mean_gt2(OccupancyModel(64, 10**6)) == pytest.approx(3.0, abs=1e-3)

    @pytest.mark.parametrize("m1,m2", [(3, 3), (8, 8), (20, 13), (50, 100), (64, 64)])
    def test_tail_series_cross_check(self, m1, m2):
        model = OccupancyModel(m1, m2)
        dist = slot_probabilities(model)
        assert mean_gt2(model) == pytest.approx(_mean_gt2_tail_series(dist), rel=1e-9)


class TestTheoreticalSpeedup:
    def test_small_grid_hand_substitution(self):
        t_bs, t_p, ratio = theoretical_speedup(OccupancyModel(3, 3), 1)
        assert t_bs == pytest.approx(log2(3))
        assert t_p == pytest.approx(0.4 + 2 * 0.3 + 3 * 0.2 + (1 + log2(3.0)) * 0.1, abs=1e-9)
        assert ratio == pytest.approx(t_bs / t_p)

    def test_ratio_independent_of_n(self):
        model = OccupancyModel(100, 100)
        _, _, r1 = theoretical_speedup(model, 1)
        t_bs, t_p, r2 = theoretical_speedup(model, 10**6)
        assert r1 == pytest.approx(r2)
        assert t_bs == pytest.approx(10**6 * log2(100))

    def test_equal_sizes_cost_approaches_1_75(self):
        _, t_p, ratio = theoretical_speedup(OccupancyModel(512, 512), 1)
        assert t_p == pytest.approx(1.75, abs=0.01)
        assert ratio == pytest.approx(9.0 / 1.75, rel=0.01)
        _, t_p_big, _ = theoretical_speedup(OccupancyModel(10**6, 10**6), 1)
        assert t_p_big == pytest.approx(1.75, abs=1e-4)

    def test_doubled_grid_gains_over_equal(self):
        _, t_eq, _ = theoretical_speedup(OccupancyModel(512, 512), 1)
        _, t_dbl, _ = theoretical_speedup(OccupancyModel(512, 1024), 1)
        assert 1.1 < t_eq / t_dbl < 1.3

    def test_propagates_empty_tail(self):
        with pytest.raises(EmptyTail):
            theoretical_speedup(OccupancyModel(2, 2), 10)
