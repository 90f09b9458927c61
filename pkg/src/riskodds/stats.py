"""Expectations, variances, and garrison thresholds over battle outcomes.

Means and variances are exact rationals; the standard deviation is the
only quantity rendered in floating point, since a square root is
irrational in general.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .combat import AttackPlan, RuleSet, DEFAULT_RULES, battle, multi_territory
from .dist import Dist, Outcome
from .errors import DomainError


@dataclass(frozen=True)
class SummaryStats:
    """Mean and dispersion of one distribution.

    mean and variance are exact; std_dev is float(sqrt(variance)).
    """

    mean: Fraction
    variance: Fraction
    std_dev: float


@dataclass(frozen=True)
class ThresholdReport:
    """Smallest defender counts meeting each garrison criterion.

    A None threshold means no defender count within search_limit met the
    criterion; that is a reportable answer, not an error.
    """

    attacker_config: tuple[int, ...]
    min_defenders_expected_survivor: int | None
    min_defenders_repel_prob_half: int | None
    search_limit: int


def expectation(dist: Dist, u: Callable[[Outcome], Fraction | int] | None = None) -> Fraction:
    """Exact expected value of u(X) under a normalized distribution.

    Args:
        dist: The distribution; must have total mass 1.
        u: Value map applied to each outcome. Defaults to the identity,
            which requires integer outcomes.

    Returns:
        Sum of u(x) weighted by probability, as an exact Fraction.
    """
    if not dist.is_normalized:
        raise DomainError(
            f"expectation needs a normalized distribution, total mass is {dist.total_mass}",
            field="dist",
        )
    if u is None:
        u = lambda x: x
    return sum((Fraction(u(x)) * p for x, p in dist.items()), Fraction(0))


def distribution_stats(
    dist: Dist, u: Callable[[Outcome], Fraction | int] | None = None
) -> SummaryStats:
    """Mean, exact variance, and float standard deviation of u(X)."""
    mean = expectation(dist, u)
    if u is None:
        u = lambda x: x
    second = sum((Fraction(u(x)) ** 2 * p for x, p in dist.items()), Fraction(0))
    variance = second - mean**2
    return SummaryStats(mean=mean, variance=variance, std_dev=math.sqrt(variance))


def expected_attacker_losses(a: int, d: int, rules: RuleSet = DEFAULT_RULES) -> SummaryStats:
    """Summary of troops the attacker loses fighting a vs d to elimination.

    The mean decomposes into the failure term (losing all a troops) plus
    the partial losses of successful attacks; both come from the same
    exact loss distribution.
    """
    if d < 1:
        raise DomainError(f"d must be at least 1, got {d}", field="d")
    return distribution_stats(battle(a, d, rules).attacker_losses_dist)


def expected_survivors(plan: AttackPlan) -> SummaryStats:
    """Summary of defending troops left standing after the whole plan."""
    return distribution_stats(multi_territory(plan).defenders_left_dist)


def garrison_thresholds(
    attack_sizes, rules: RuleSet = DEFAULT_RULES, search_limit: int = 30
) -> ThresholdReport:
    """Scan defender counts for the two garrison criteria.

    For n_d = 1..search_limit, find the smallest n_d whose expected
    survivors reach 1, and the smallest n_d whose repel probability
    (1 - win) reaches 1/2. Both criteria are monotone in n_d, so the
    scan stops once both are found.

    Args:
        attack_sizes: Wave sizes the garrison must withstand, in order.
        rules: Dice caps in effect.
        search_limit: Largest defender count considered.

    Returns:
        ThresholdReport; a criterion nobody met within the limit is None.
    """
    if search_limit < 1:
        raise DomainError(
            f"search_limit must be at least 1, got {search_limit}", field="search_limit"
        )
    sizes = tuple(attack_sizes)
    survivor_at: int | None = None
    repel_at: int | None = None
    for n_d in range(1, search_limit + 1):
        plan = AttackPlan(waves=sizes, defenders=n_d, rules=rules)
        result = multi_territory(plan)
        if survivor_at is None:
            mean_survivors = expectation(result.defenders_left_dist)
            if mean_survivors >= 1:
                survivor_at = n_d
        if repel_at is None and 1 - result.win_probability >= Fraction(1, 2):
            repel_at = n_d
        if survivor_at is not None and repel_at is not None:
            break
    return ThresholdReport(
        attacker_config=sizes,
        min_defenders_expected_survivor=survivor_at,
        min_defenders_repel_prob_half=repel_at,
        search_limit=search_limit,
    )
