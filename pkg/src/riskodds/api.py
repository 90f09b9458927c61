"""Shared query layer behind the CLI and the HTTP endpoint.

Both front ends call the same builders here and serialize the same
payload dicts, so a CLI query and an HTTP query for the same scenario
produce identical answers byte for byte.

Rationals are carried as {"num": string, "den": string, "approx": number}:
numerator and denominator as strings because they outgrow 64-bit
integers quickly, plus a float approximation for display. Decimal text
renderings are produced from the exact fraction at 12 significant
digits, never by formatting a float.
"""

from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction

from .combat import AttackPlan, RuleSet, battle, multi_territory
from .errors import DomainError
from .simulate import SimConfig, simulate
from .stats import SummaryStats, distribution_stats, garrison_thresholds

DIGITS = 12


def decimal_str(value: Fraction, digits: int = DIGITS) -> str:
    """Decimal rendering of an exact rational at `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def float_str(value: float, digits: int = DIGITS) -> str:
    """Decimal rendering of an inherently inexact quantity."""
    return f"{value:.{digits}g}"


def rational_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator), "approx": float(value)}


def summary_json(s: SummaryStats) -> dict:
    return {
        "mean": rational_json(s.mean),
        "variance": rational_json(s.variance),
        "std_dev": s.std_dev,
    }


def dist_json(d) -> list[dict]:
    return [{"value": outcome, "probability": rational_json(p)} for outcome, p in d.items()]


def rules_json(rules: RuleSet) -> dict:
    return {
        "attacker_max_dice": rules.attacker_max_dice,
        "defender_max_dice": rules.defender_max_dice,
        "compared_pairs_cap": rules.compared_pairs_cap,
        "faces": rules.faces,
    }


def plan_from_fields(
    waves,
    defenders: int,
    bonus_attack_die: bool = False,
    bonus_defense_die: bool = False,
) -> AttackPlan:
    """Build a validated AttackPlan from front-end fields."""
    rules = RuleSet().with_bonus(attacker=bonus_attack_die, defender=bonus_defense_die)
    return AttackPlan(waves=waves, defenders=defenders, rules=rules)


def _plan_header(plan: AttackPlan) -> dict:
    return {
        "waves": list(plan.waves),
        "defenders": plan.defenders,
        "rules": rules_json(plan.rules),
    }


def odds_payload(plan: AttackPlan) -> dict:
    result = multi_territory(plan)
    payload = _plan_header(plan)
    payload["win"] = rational_json(result.win_probability)
    payload["repel"] = rational_json(1 - result.win_probability)
    return payload


def dist_payload(plan: AttackPlan) -> dict:
    result = multi_territory(plan)
    payload = _plan_header(plan)
    payload["defenders_left"] = dist_json(result.defenders_left_dist)
    payload["attacker_losses"] = dist_json(result.attacker_losses_dist)
    payload["attackers_left_given_win"] = dist_json(result.attackers_left_dist)
    return payload


def expect_payload(plan: AttackPlan) -> dict:
    result = multi_territory(plan)
    payload = _plan_header(plan)
    payload["attacker_losses"] = summary_json(
        distribution_stats(result.attacker_losses_dist)
    )
    return payload


def survivors_payload(plan: AttackPlan) -> dict:
    result = multi_territory(plan)
    payload = _plan_header(plan)
    payload["survivors"] = summary_json(distribution_stats(result.defenders_left_dist))
    payload["distribution"] = dist_json(result.defenders_left_dist)
    return payload


def threshold_payload(
    attack_sizes,
    rules: RuleSet | None = None,
    search_limit: int = 30,
) -> dict:
    rules = rules if rules is not None else RuleSet()
    report = garrison_thresholds(attack_sizes, rules=rules, search_limit=search_limit)
    return {
        "attack": list(report.attacker_config),
        "rules": rules_json(rules),
        "search_limit": report.search_limit,
        "expected_survivor_threshold": report.min_defenders_expected_survivor,
        "repel_threshold": report.min_defenders_repel_prob_half,
    }


def simulate_payload(config: SimConfig, partitions: int = 1) -> dict:
    report = simulate(config, partitions=partitions)
    payload = _plan_header(config.plan)
    payload.update(
        {
            "trials": report.trials,
            "seed": report.seed,
            "partitions": report.partitions,
            "generator": report.generator,
            "win_rate": report.win_rate,
            "mean_attacker_losses": report.mean_attacker_losses,
            "mean_survivors": report.mean_survivors,
            "standard_error_win": report.standard_error_win,
            "outcomes": [
                {"attacker_losses": lost, "defenders_left": left, "count": count}
                for (lost, left), count in report.outcome_counts
            ],
        }
    )
    return payload


def default_rules_payload() -> dict:
    base = RuleSet()
    return {
        "rules": rules_json(base),
        "bonus_attack_die": rules_json(base.with_bonus(attacker=True)),
        "bonus_defense_die": rules_json(base.with_bonus(defender=True)),
        "notes": {
            "ties": "defender wins tied dice",
            "pairs": "at most the best two dice per side are compared",
            "waves": "waves attack in order; each fights to elimination",
        },
    }


def to_json(payload: dict) -> str:
    """The one JSON serialization both front ends emit."""
    return json.dumps(payload, indent=2) + "\n"


def parse_plan_body(body: dict) -> AttackPlan:
    """Validate an HTTP request body describing an attack plan."""
    waves = _require_int_list(body, "waves")
    defenders = _require_int(body, "defenders")
    return plan_from_fields(
        waves,
        defenders,
        bonus_attack_die=_optional_bool(body, "bonus_attack_die"),
        bonus_defense_die=_optional_bool(body, "bonus_defense_die"),
    )


def _require_int(body: dict, field: str) -> int:
    if field not in body:
        raise DomainError(f"{field} is required", field=field)
    value = body[field]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{field} must be an integer, got {value!r}", field=field)
    return value


def _optional_int(body: dict, field: str, default: int) -> int:
    if field not in body:
        return default
    return _require_int(body, field)


def _require_int_list(body: dict, field: str) -> list[int]:
    if field not in body:
        raise DomainError(f"{field} is required", field=field)
    value = body[field]
    if not isinstance(value, list) or not value:
        raise DomainError(f"{field} must be a non-empty list of integers", field=field)
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int):
            raise DomainError(f"{field} must contain only integers, got {item!r}", field=field)
    return value


def _optional_bool(body: dict, field: str) -> bool:
    value = body.get(field, False)
    if not isinstance(value, bool):
        raise DomainError(f"{field} must be a boolean, got {value!r}", field=field)
    return value
