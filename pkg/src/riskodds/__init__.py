"""Exact odds for Risk-style dice battles.

Win probabilities, outcome distributions, loss expectations, garrison
thresholds, and a seeded Monte Carlo cross-check, all over exact
rational arithmetic. See the README for the CLI and HTTP surfaces.
"""

from .combat import (
    DEFAULT_RULES,
    AttackPlan,
    BattleResult,
    BattleState,
    RoundOutcome,
    RuleSet,
    battle,
    dice_for,
    multi_territory,
    round_distribution,
    wave_order_changes_outcome,
)
from .dist import Dist
from .errors import DomainError
from .figures import figure_csv, figure_dataset, figure_json_payload
from .orderstats import (
    DieSpec,
    OrderStatQuery,
    attacker_wins_best,
    order_stat_cdf,
    order_stat_pmf,
    top_two_joint_pmf,
)
from .simulate import SimConfig, SimReport, simulate
from .stats import (
    SummaryStats,
    ThresholdReport,
    distribution_stats,
    expectation,
    expected_attacker_losses,
    expected_survivors,
    garrison_thresholds,
)

__version__ = "0.1.0"

__all__ = [
    "AttackPlan",
    "BattleResult",
    "BattleState",
    "DEFAULT_RULES",
    "DieSpec",
    "Dist",
    "DomainError",
    "OrderStatQuery",
    "RoundOutcome",
    "RuleSet",
    "SimConfig",
    "SimReport",
    "SummaryStats",
    "ThresholdReport",
    "attacker_wins_best",
    "battle",
    "dice_for",
    "distribution_stats",
    "expectation",
    "expected_attacker_losses",
    "expected_survivors",
    "figure_csv",
    "figure_dataset",
    "figure_json_payload",
    "garrison_thresholds",
    "multi_territory",
    "order_stat_cdf",
    "order_stat_pmf",
    "round_distribution",
    "simulate",
    "top_two_joint_pmf",
    "wave_order_changes_outcome",
]
