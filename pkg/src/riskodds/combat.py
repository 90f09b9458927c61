"""Battle resolution as exact distributions over terminal states.

A battle is a sequence of rounds. Each round both sides roll (attacker
up to three dice, defender up to two, one more each under the bonus-die
rule), the best dice are compared, then the second best if both sides
rolled at least two; ties go to the defender. The fight continues until
one side has no troops left.

The engine never builds the tree of combat sequences explicitly. States
are just (attackers, defenders) pairs, so the distribution over terminal
states is computed bottom-up over that grid and memoized per rule set.
Multi-territory attacks fold the same computation over consecutive
waves: each wave fights to elimination against whatever the previous
waves left behind.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .dist import Dist
from .errors import DomainError

# Terminal distributions keyed by (attackers, defenders, rules). Filled
# idempotently; concurrent duplicate fills are harmless because values
# for a key never differ.
_TERMINAL_CACHE: dict[tuple[int, int, "RuleSet"], tuple] = {}


@dataclass(frozen=True)
class RuleSet:
    """Dice caps for one battle.

    The base game allows three attacker dice and two defender dice. A
    bonus die raises one side's cap by one, but only the best two dice
    are ever compared, so the caps stop at 4 and 3.
    """

    attacker_max_dice: int = 3
    defender_max_dice: int = 2
    compared_pairs_cap: int = 2
    faces: int = 6

    def __post_init__(self):
        if not 1 <= self.attacker_max_dice <= 4:
            raise DomainError(
                f"attacker_max_dice must be between 1 and 4, got {self.attacker_max_dice}",
                field="attacker_max_dice",
            )
        if not 1 <= self.defender_max_dice <= 3:
            raise DomainError(
                f"defender_max_dice must be between 1 and 3, got {self.defender_max_dice}",
                field="defender_max_dice",
            )
        if self.compared_pairs_cap != 2:
            raise DomainError(
                f"compared_pairs_cap is fixed at 2, got {self.compared_pairs_cap}",
                field="compared_pairs_cap",
            )
        if self.faces < 1:
            raise DomainError(f"faces must be at least 1, got {self.faces}", field="faces")

    def with_bonus(self, attacker: bool = False, defender: bool = False) -> "RuleSet":
        """Rules with the bonus die granted to either or both sides."""
        return replace(
            self,
            attacker_max_dice=self.attacker_max_dice + (1 if attacker else 0),
            defender_max_dice=self.defender_max_dice + (1 if defender else 0),
        )


DEFAULT_RULES = RuleSet()


@dataclass(frozen=True)
class BattleState:
    """Troop counts mid-battle. Terminal once either side is empty."""

    attackers: int
    defenders: int

    def __post_init__(self):
        if self.attackers < 0:
            raise DomainError(
                f"attackers must be non-negative, got {self.attackers}", field="attackers"
            )
        if self.defenders < 0:
            raise DomainError(
                f"defenders must be non-negative, got {self.defenders}", field="defenders"
            )

    @property
    def is_terminal(self) -> bool:
        return self.attackers == 0 or self.defenders == 0


@dataclass(frozen=True)
class RoundOutcome:
    """Losses from a single round of rolling, with exact probability."""

    attacker_losses: int
    defender_losses: int
    probability: Fraction


@dataclass(frozen=True)
class BattleResult:
    """Exact outcome distributions of one battle or attack plan.

    Attributes:
        win_probability: Chance the defense is wiped out.
        defenders_left_dist: Distribution of surviving defenders over all
            terminal outcomes; its mass at 0 is win_probability.
        attackers_left_dist: Distribution of surviving attacker troops,
            conditioned on conquest.
        attacker_losses_dist: Unconditional distribution of attacker troops
            lost; losing every troop is exactly the failure outcome.
    """

    win_probability: Fraction
    defenders_left_dist: Dist
    attackers_left_dist: Dist
    attacker_losses_dist: Dist


@dataclass(frozen=True)
class AttackPlan:
    """An ordered sequence of attacking forces against one territory.

    Wave order is the caller's choice and is preserved: a_1 fights first,
    and each later wave engages only the defenders its predecessors left.
    """

    waves: tuple[int, ...]
    defenders: int
    rules: RuleSet = DEFAULT_RULES

    def __init__(self, waves, defenders: int, rules: RuleSet = DEFAULT_RULES):
        waves = tuple(waves)
        if not waves:
            raise DomainError("waves must not be empty", field="waves")
        for size in waves:
            if size < 1:
                raise DomainError(f"every wave needs at least 1 troop, got {size}", field="waves")
        if defenders < 1:
            raise DomainError(f"defenders must be at least 1, got {defenders}", field="defenders")
        object.__setattr__(self, "waves", waves)
        object.__setattr__(self, "defenders", defenders)
        object.__setattr__(self, "rules", rules)

    @property
    def total_attackers(self) -> int:
        return sum(self.waves)


def dice_for(state: BattleState, rules: RuleSet = DEFAULT_RULES) -> tuple[int, int]:
    """Dice each side rolls from the given state: troop count or cap, whichever binds."""
    if state.is_terminal:
        raise DomainError(
            f"no dice to roll in terminal state {state.attackers} vs {state.defenders}",
            field="state",
        )
    return (
        min(state.attackers, rules.attacker_max_dice),
        min(state.defenders, rules.defender_max_dice),
    )


@lru_cache(maxsize=None)
def round_distribution(
    a_dice: int, d_dice: int, rules: RuleSet = DEFAULT_RULES
) -> tuple[RoundOutcome, ...]:
    """Exact loss distribution for one round of a_dice vs d_dice.

    Enumerates every equally likely combination of face values, sorts
    each side, and compares the top min(2, a_dice, d_dice) pairs with
    ties to the defender.

    Returns:
        RoundOutcomes sorted by (attacker_losses, defender_losses).
    """
    if not 1 <= a_dice <= rules.attacker_max_dice:
        raise DomainError(
            f"a_dice must be between 1 and {rules.attacker_max_dice}, got {a_dice}",
            field="a_dice",
        )
    if not 1 <= d_dice <= rules.defender_max_dice:
        raise DomainError(
            f"d_dice must be between 1 and {rules.defender_max_dice}, got {d_dice}",
            field="d_dice",
        )
    pairs = min(rules.compared_pairs_cap, a_dice, d_dice)
    counts: dict[tuple[int, int], int] = {}
    for roll in product(range(1, rules.faces + 1), repeat=a_dice + d_dice):
        attacker = sorted(roll[:a_dice], reverse=True)
        defender = sorted(roll[a_dice:], reverse=True)
        a_losses = sum(1 for i in range(pairs) if attacker[i] <= defender[i])
        key = (a_losses, pairs - a_losses)
        counts[key] = counts.get(key, 0) + 1
    total = rules.faces ** (a_dice + d_dice)
    return tuple(
        RoundOutcome(al, dl, Fraction(c, total)) for (al, dl), c in sorted(counts.items())
    )


def _terminal_items(a: int, d: int, rules: RuleSet) -> tuple:
    """Distribution over terminal (attackers, defenders) from state (a, d).

    Returns a tuple of ((attackers_left, defenders_left), probability)
    pairs. Filled iteratively over the whole sub-grid in increasing total
    troop count, so deep battles cannot exhaust the call stack, and every
    sub-state lands in the cache for later queries.
    """
    key = (a, d, rules)
    cached = _TERMINAL_CACHE.get(key)
    if cached is not None:
        return cached
    for total in range(0, a + d + 1):
        for ai in range(max(0, total - d), min(a, total) + 1):
            di = total - ai
            sub_key = (ai, di, rules)
            if sub_key in _TERMINAL_CACHE:
                continue
            if ai == 0 or di == 0:
                _TERMINAL_CACHE[sub_key] = (((ai, di), Fraction(1)),)
                continue
            acc: dict[tuple[int, int], Fraction] = {}
            a_dice = min(ai, rules.attacker_max_dice)
            d_dice = min(di, rules.defender_max_dice)
            for outcome in round_distribution(a_dice, d_dice, rules):
                child = _TERMINAL_CACHE[
                    (ai - outcome.attacker_losses, di - outcome.defender_losses, rules)
                ]
                for state, q in child:
                    acc[state] = acc.get(state, Fraction(0)) + outcome.probability * q
            _TERMINAL_CACHE[sub_key] = tuple(sorted(acc.items()))
    return _TERMINAL_CACHE[key]


def _result_from_outcomes(outcomes: dict[tuple[int, int], Fraction], committed: int) -> BattleResult:
    """Assemble a BattleResult from mass over (defenders_left, attacker_losses)."""
    win = Fraction(0)
    defenders_left: dict[int, Fraction] = {}
    losses: dict[int, Fraction] = {}
    survivors_on_win: dict[int, Fraction] = {}
    for (left, lost), p in outcomes.items():
        defenders_left[left] = defenders_left.get(left, Fraction(0)) + p
        losses[lost] = losses.get(lost, Fraction(0)) + p
        if left == 0:
            win += p
            remaining = committed - lost
            survivors_on_win[remaining] = survivors_on_win.get(remaining, Fraction(0)) + p
    if win > 0:
        attackers_left = Dist({s: p / win for s, p in survivors_on_win.items()})
    else:
        attackers_left = Dist({})
    return BattleResult(
        win_probability=win,
        defenders_left_dist=Dist(defenders_left),
        attackers_left_dist=attackers_left,
        attacker_losses_dist=Dist(losses),
    )


def battle(a: int, d: int, rules: RuleSet = DEFAULT_RULES) -> BattleResult:
    """Resolve a single-territory battle of a attackers vs d defenders.

    The fight runs to elimination. d = 0 is allowed and yields the
    trivial conquered result, which keeps the multi-territory fold
    uniform.

    Args:
        a: Attacking troops, at least 1.
        d: Defending troops, at least 0.
        rules: Dice caps in effect.

    Returns:
        BattleResult with exact distributions.
    """
    if a < 1:
        raise DomainError(f"an attack requires at least 1 troop, got {a}", field="a")
    if d < 0:
        raise DomainError(f"defenders must be non-negative, got {d}", field="d")
    outcomes = {
        (defenders_left, a - attackers_left): p
        for (attackers_left, defenders_left), p in _terminal_items(a, d, rules)
    }
    return _result_from_outcomes(outcomes, a)


def _plan_outcomes(plan: AttackPlan) -> dict[tuple[int, int], Fraction]:
    """Joint mass over (defenders_left, total attacker losses) for a plan."""
    memo: dict[tuple[int, int], dict[tuple[int, int], Fraction]] = {}

    def from_wave(i: int, defenders: int) -> dict[tuple[int, int], Fraction]:
        if defenders == 0 or i == len(plan.waves):
            return {(defenders, 0): Fraction(1)}
        key = (i, defenders)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc: dict[tuple[int, int], Fraction] = {}
        for (attackers_left, defenders_left), p in _terminal_items(
            plan.waves[i], defenders, plan.rules
        ):
            wave_losses = plan.waves[i] - attackers_left
            for (final_left, later_losses), q in from_wave(i + 1, defenders_left).items():
                key2 = (final_left, wave_losses + later_losses)
                acc[key2] = acc.get(key2, Fraction(0)) + p * q
        memo[key] = acc
        return acc

    return from_wave(0, plan.defenders)


def multi_territory(plan: AttackPlan) -> BattleResult:
    """Resolve an attack arriving in waves from several territories.

    Wave i fights to elimination against the defenders waves 1..i-1 left
    standing; once the defense is wiped out, later waves never fight.
    Attacker losses aggregate across waves, so for a failed plan they
    equal the plan's total troops.

    Args:
        plan: Validated waves, defender count, and rules.

    Returns:
        BattleResult over the whole plan.
    """
    return _result_from_outcomes(_plan_outcomes(plan), plan.total_attackers)


def wave_order_changes_outcome(plan: AttackPlan) -> bool:
    """Report whether reordering the plan's waves changes the win probability.

    It can: unequal waves are not interchangeable in general (attacking
    with [3,1] beats [1,3] against two defenders), which is why
    AttackPlan preserves the caller's order.
    """
    win_values = {
        multi_territory(replace(plan, waves=ordering)).win_probability
        for ordering in set(permutations(plan.waves))
    }
    return len(win_values) > 1
