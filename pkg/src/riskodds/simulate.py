"""Seeded Monte Carlo verification of the exact engine.

This module deliberately shares no probability tables with the combat
engine: every trial rolls raw face values, sorts them, and compares the
top pairs with ties to the defender, exactly as a person would at the
table. Agreement between these frequencies and the exact distributions
is the strongest end-to-end check the package has.

Randomness comes from numpy's PCG64, a named, widely specified
generator, seeded explicitly; the generator identity and numpy version
are recorded in every report. Trials can be partitioned across workers:
partition seeds derive from numpy.random.SeedSequence(seed).spawn(p),
so the aggregate is deterministic for a fixed partition count. The
single-partition default seeds SeedSequence(seed) directly and is the
reference behavior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combat import AttackPlan, RuleSet
from .errors import DomainError

_SEED_LIMIT = 2**64


@dataclass(frozen=True)
class SimConfig:
    """One reproducible simulation request."""

    plan: AttackPlan
    trials: int
    seed: int

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError(f"trials must be at least 1, got {self.trials}", field="trials")
        if not 0 <= self.seed < _SEED_LIMIT:
            raise DomainError(
                f"seed must be an unsigned 64-bit integer, got {self.seed}", field="seed"
            )


@dataclass(frozen=True)
class SimReport:
    """Estimates from one simulation run.

    outcome_counts maps (attacker_losses, defenders_left) pairs to how
    many trials ended there; the scalar estimates are all derivable from
    it and trials.
    """

    win_rate: float
    mean_attacker_losses: float
    mean_survivors: float
    standard_error_win: float
    outcome_counts: tuple[tuple[tuple[int, int], int], ...]
    trials: int
    seed: int
    generator: str
    partitions: int


def _run_partition(rng: np.random.Generator, plan: AttackPlan, trials: int) -> dict:
    """Simulate `trials` runs of the plan, returning outcome counts."""
    rules: RuleSet = plan.rules
    a_cap = rules.attacker_max_dice
    d_cap = rules.defender_max_dice
    pairs_cap = rules.compared_pairs_cap
    defenders = np.full(trials, plan.defenders, dtype=np.int64)
    total_losses = np.zeros(trials, dtype=np.int64)
    for wave_size in plan.waves:
        fighting = defenders > 0
        attackers = np.where(fighting, wave_size, 0).astype(np.int64)
        while True:
            active = np.nonzero((attackers > 0) & (defenders > 0))[0]
            if active.size == 0:
                break
            a_dice = np.minimum(attackers[active], a_cap)
            d_dice = np.minimum(defenders[active], d_cap)
            a_rolls = rng.integers(1, rules.faces + 1, size=(active.size, a_cap))
            d_rolls = rng.integers(1, rules.faces + 1, size=(active.size, d_cap))
            # Zero out dice beyond each trial's count so they sort to the bottom.
            a_rolls[np.arange(a_cap) >= a_dice[:, None]] = 0
            d_rolls[np.arange(d_cap) >= d_dice[:, None]] = 0
            a_sorted = np.sort(a_rolls, axis=1)[:, ::-1]
            d_sorted = np.sort(d_rolls, axis=1)[:, ::-1]
            pairs = np.minimum(np.minimum(a_dice, d_dice), pairs_cap)
            d_hit = (a_sorted[:, 0] > d_sorted[:, 0]).astype(np.int64)
            a_hit = 1 - d_hit
            if a_cap >= 2 and d_cap >= 2:
                second = pairs >= 2
                d_hit2 = (second & (a_sorted[:, 1] > d_sorted[:, 1])).astype(np.int64)
                a_hit2 = (second & (a_sorted[:, 1] <= d_sorted[:, 1])).astype(np.int64)
            else:
                d_hit2 = np.zeros_like(d_hit)
                a_hit2 = np.zeros_like(d_hit)
            attackers[active] -= a_hit + a_hit2
            defenders[active] -= d_hit + d_hit2
        total_losses[fighting] += wave_size - attackers[fighting]
    counts: dict[tuple[int, int], int] = {}
    for lost, left in zip(total_losses.tolist(), defenders.tolist()):
        key = (lost, left)
        counts[key] = counts.get(key, 0) + 1
    return counts


def simulate(config: SimConfig, partitions: int = 1) -> SimReport:
    """Estimate a plan's outcome distribution by rolling raw dice.

    Args:
        config: Plan, trial count, and seed. Identical configs always
            produce identical reports.
        partitions: How many derived-seed partitions to split the trials
            over. The aggregate is deterministic per partition count.

    Returns:
        SimReport with frequencies and their derived point estimates.
    """
    if partitions < 1:
        raise DomainError(f"partitions must be at least 1, got {partitions}", field="partitions")
    if partitions > config.trials:
        raise DomainError(
            f"partitions must not exceed trials, got {partitions} > {config.trials}",
            field="partitions",
        )
    root = np.random.SeedSequence(config.seed)
    if partitions == 1:
        schedule = [(root, config.trials)]
    else:
        base, extra = divmod(config.trials, partitions)
        children = root.spawn(partitions)
        schedule = [
            (child, base + (1 if i < extra else 0)) for i, child in enumerate(children)
        ]
    counts: dict[tuple[int, int], int] = {}
    for seed_seq, n in schedule:
        if n == 0:
            continue
        part = _run_partition(np.random.Generator(np.random.PCG64(seed_seq)), config.plan, n)
        for key, c in part.items():
            counts[key] = counts.get(key, 0) + c
    trials = config.trials
    wins = sum(c for (_, left), c in counts.items() if left == 0)
    loss_sum = sum(lost * c for (lost, _), c in counts.items())
    survivor_sum = sum(left * c for (_, left), c in counts.items())
    win_rate = wins / trials
    return SimReport(
        win_rate=win_rate,
        mean_attacker_losses=loss_sum / trials,
        mean_survivors=survivor_sum / trials,
        standard_error_win=math.sqrt(win_rate * (1.0 - win_rate) / trials),
        outcome_counts=tuple(sorted(counts.items())),
        trials=trials,
        seed=config.seed,
        generator=f"numpy.random.PCG64 (numpy {np.__version__})",
        partitions=partitions,
    )
