"""Expectation, variance, and garrison threshold tests.

Loss means and variances are cross-checked against the path-walking
oracle; threshold answers are frozen from an independent scan done with
oracle-verified battle values.
"""

from fractions import Fraction

import pytest

from riskodds import (
    AttackPlan,
    DEFAULT_RULES,
    Dist,
    DomainError,
    battle,
    distribution_stats,
    expectation,
    expected_attacker_losses,
    expected_survivors,
    garrison_thresholds,
    multi_territory,
)

from oracles import tree_terminal_dist


HALF = Fraction(1, 2)


class TestExpectation:
    def test_identity(self):
        d = Dist({0: HALF, 2: HALF})
        assert expectation(d) == 1

    def test_value_map(self):
        d = Dist({0: HALF, 2: HALF})
        assert expectation(d, u=lambda x: 3 * x + 1) == 4

    def test_linearity_in_value_map(self):
        d = battle(3, 2).defenders_left_dist
        direct = expectation(d, u=lambda x: 5 * x + 7)
        assert direct == 5 * expectation(d) + 7

    def test_requires_normalized(self):
        with pytest.raises(DomainError) as e:
            expectation(Dist({0: HALF}))
        assert e.value.field == "dist"

    def test_tuple_outcomes_need_value_map(self):
        d = Dist({(0, 1): HALF, (1, 0): HALF})
        assert expectation(d, u=lambda pair: pair[0]) == HALF


class TestDistributionStats:
    def test_point_mass(self):
        s = distribution_stats(Dist.point(4))
        assert s.mean == 4
        assert s.variance == 0
        assert s.std_dev == 0.0

    def test_fair_coin(self):
        s = distribution_stats(Dist({0: HALF, 1: HALF}))
        assert s.mean == HALF
        assert s.variance == Fraction(1, 4)
        assert s.std_dev == 0.5

    def test_variance_shift_invariant(self):
        d = battle(3, 3).attacker_losses_dist
        base = distribution_stats(d)
        shifted = distribution_stats(d, u=lambda x: x + 10)
        assert shifted.variance == base.variance
        assert shifted.mean == base.mean + 10


class TestExpectedAttackerLosses:
    def test_one_vs_one(self):
        s = expected_attacker_losses(1, 1)
        assert s.mean == Fraction(21, 36)
        assert s.variance == Fraction(21, 36) - Fraction(21, 36) ** 2

    def test_three_vs_three_frozen(self):
        s = expected_attacker_losses(3, 3)
        assert s.mean == Fraction(514197271, 272097792)
        assert s.variance == Fraction(122011198713786095, 74037208411275264)
        assert s.std_dev == pytest.approx(1.28373336626, abs=1e-9)

    def test_matches_tree_oracle(self):
        for a in range(1, 4):
            for d in range(1, 4):
                losses: dict[int, Fraction] = {}
                for (a_left, _), p in tree_terminal_dist(a, d).items():
                    losses[a - a_left] = losses.get(a - a_left, Fraction(0)) + p
                mean = sum(l * p for l, p in losses.items())
                second = sum(l**2 * p for l, p in losses.items())
                s = expected_attacker_losses(a, d)
                assert s.mean == mean
                assert s.variance == second - mean**2

    def test_mean_decomposes_into_failure_and_conquest_terms(self):
        # The mean is the full stack lost on defeat plus the partial
        # losses of winning sequences, written out term by term.
        for a, d in [(3, 1), (3, 3), (5, 4)]:
            result = battle(a, d)
            decomposed = a * (1 - result.win_probability) + sum(
                (a - left) * p * result.win_probability
                for left, p in result.attackers_left_dist.items()
            )
            assert expected_attacker_losses(a, d).mean == decomposed

    def test_mean_losses_increase_with_defenders(self):
        means = [expected_attacker_losses(3, d).mean for d in range(1, 16)]
        assert all(b > a for a, b in zip(means, means[1:]))
        # Against a big garrison three attackers lose nearly everything.
        assert 3 - means[-1] < Fraction(5, 100)

    def test_loss_spread_peaks_at_two_defenders(self):
        # For three attackers the spread of losses is widest against two
        # defenders and shrinks from there on out.
        sigmas = {d: expected_attacker_losses(3, d).std_dev for d in range(1, 11)}
        assert max(sigmas, key=sigmas.get) == 2
        assert sigmas[2] == pytest.approx(1.2933091, abs=1e-6)
        assert sigmas[3] == pytest.approx(1.2837334, abs=1e-6)
        assert sigmas[2] > sigmas[3] > sigmas[4]

    def test_requires_defenders(self):
        with pytest.raises(DomainError) as e:
            expected_attacker_losses(3, 0)
        assert e.value.field == "d"


class TestExpectedSurvivors:
    def test_single_wave_single_defender(self):
        s = expected_survivors(AttackPlan(waves=[1], defenders=1))
        assert s.mean == Fraction(21, 36)

    def test_matches_expectation_of_plan_distribution(self):
        plan = AttackPlan(waves=[3, 3], defenders=5)
        s = expected_survivors(plan)
        assert s.mean == expectation(multi_territory(plan).defenders_left_dist)

    def test_two_triples_survivor_boundary(self):
        # Six attackers in two waves: four defenders expect to be wiped
        # below one survivor, five expect at least one.
        four = expected_survivors(AttackPlan(waves=[3, 3], defenders=4))
        five = expected_survivors(AttackPlan(waves=[3, 3], defenders=5))
        assert four.mean < 1 <= five.mean
        assert float(four.mean) == pytest.approx(0.768018, abs=1e-6)
        assert float(five.mean) == pytest.approx(1.289181, abs=1e-6)


class TestGarrisonThresholds:
    def test_single_triple(self):
        report = garrison_thresholds([3])
        assert report.attacker_config == (3,)
        assert report.min_defenders_expected_survivor == 3
        assert report.min_defenders_repel_prob_half == 3
        assert report.search_limit == 30

    def test_two_triples(self):
        report = garrison_thresholds([3, 3])
        assert report.min_defenders_expected_survivor == 5
        assert report.min_defenders_repel_prob_half == 6

    def test_three_triples(self):
        report = garrison_thresholds([3, 3, 3])
        assert report.min_defenders_expected_survivor == 7
        assert report.min_defenders_repel_prob_half == 8

    def test_thresholds_match_direct_scan(self):
        # Recompute both criteria by brute scan over the same range.
        report = garrison_thresholds([3, 3])
        survivor = next(
            d
            for d in range(1, 31)
            if expectation(
                multi_territory(AttackPlan(waves=[3, 3], defenders=d)).defenders_left_dist
            )
            >= 1
        )
        repel = next(
            d
            for d in range(1, 31)
            if 1 - multi_territory(AttackPlan(waves=[3, 3], defenders=d)).win_probability
            >= HALF
        )
        assert report.min_defenders_expected_survivor == survivor
        assert report.min_defenders_repel_prob_half == repel

    def test_tiny_attack_low_limit(self):
        # One lone attacker: a single defender already repels with
        # probability 21/36, but expects only 21/36 of a survivor, so
        # the survivor criterion is not met within a limit of 1.
        report = garrison_thresholds([1], search_limit=1)
        assert report.min_defenders_expected_survivor is None
        assert report.min_defenders_repel_prob_half == 1
        assert report.search_limit == 1

    def test_custom_rules_shift_thresholds(self):
        base = garrison_thresholds([3, 3])
        helped = garrison_thresholds([3, 3], rules=DEFAULT_RULES.with_bonus(defender=True))
        assert (
            helped.min_defenders_repel_prob_half
            <= base.min_defenders_repel_prob_half
        )

    def test_limit_validation(self):
        with pytest.raises(DomainError) as e:
            garrison_thresholds([3], search_limit=0)
        assert e.value.field == "search_limit"
