"""Command-line front door for odds queries, datasets, and the server."""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import api
from .errors import DomainError
from .figures import figure_csv, figure_json_payload
from .simulate import SimConfig

PORT_ENV_VAR = "RISKODDS_PORT"
DEFAULT_PORT = 8000


def _add_plan_flags(parser):
    parser.add_argument(
        "--attack",
        action="append",
        type=int,
        required=True,
        metavar="TROOPS",
        help="attacking wave size; repeat the flag for multiple waves, in attack order",
    )
    parser.add_argument("--defend", type=int, required=True, metavar="TROOPS",
                        help="number of defending troops")
    _add_bonus_flags(parser)


def _add_bonus_flags(parser):
    parser.add_argument("--bonus-attack-die", action="store_true",
                        help="raise the attacker dice cap from 3 to 4")
    parser.add_argument("--bonus-defense-die", action="store_true",
                        help="raise the defender dice cap from 2 to 3")


def _add_format_flag(parser, choices=("table", "json", "csv"), default="table"):
    parser.add_argument("--format", choices=choices, default=default,
                        help=f"output format (default {default})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riskodds",
        description="Exact dice-battle odds, expectations, and garrison thresholds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("odds", help="conquest and repel probability for an attack plan")
    _add_plan_flags(p)
    _add_format_flag(p)

    p = sub.add_parser("dist", help="full outcome distributions for an attack plan")
    _add_plan_flags(p)
    _add_format_flag(p)

    p = sub.add_parser("expect", help="expected attacker losses with variance")
    _add_plan_flags(p)
    _add_format_flag(p)

    p = sub.add_parser("survivors", help="expected surviving defenders with variance")
    _add_plan_flags(p)
    _add_format_flag(p)

    p = sub.add_parser("threshold", help="garrison sizes that hold against an attack")
    p.add_argument("--attack", action="append", type=int, required=True, metavar="TROOPS",
                   help="attacking wave size; repeatable")
    p.add_argument("--limit", type=int, default=30,
                   help="largest defender count scanned (default 30)")
    _add_bonus_flags(p)
    _add_format_flag(p)

    p = sub.add_parser("figure", help="emit the dataset behind one standard chart")
    p.add_argument("id", type=int, choices=range(1, 6), help="figure number, 1 to 5")
    _add_format_flag(p, choices=("csv", "json"), default="csv")

    p = sub.add_parser("simulate", help="seeded Monte Carlo estimate of an attack plan")
    _add_plan_flags(p)
    p.add_argument("--trials", type=int, default=100_000, help="number of trials (default 100000)")
    p.add_argument("--seed", type=int, default=0, help="64-bit RNG seed (default 0)")
    _add_format_flag(p)

    p = sub.add_parser("serve", help="serve the JSON API (and optionally the web UI)")
    p.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    p.add_argument("--port", type=int, default=None,
                   help=f"port (default ${PORT_ENV_VAR} or {DEFAULT_PORT})")
    p.add_argument("--ui-dir", default=None,
                   help="directory of built UI assets to host at /")
    return parser


def _validated_plan(parser, args):
    for size in args.attack:
        if size < 1:
            parser.error("--attack must be at least 1")
    if args.defend < 1:
        parser.error("--defend must be at least 1")
    return api.plan_from_fields(
        args.attack, args.defend,
        bonus_attack_die=args.bonus_attack_die,
        bonus_defense_die=args.bonus_defense_die,
    )


def _print_quantities(payload, rows, fmt):
    """Render label/rational rows as a table or CSV."""
    if fmt == "csv":
        print("quantity,num,den,value")
        for name, r in rows:
            print(f"{name},{r['num']},{r['den']},{_decimal_of(r)}")
    else:
        plan = f"waves {','.join(str(w) for w in payload['waves'])} vs {payload['defenders']} defenders"
        print(plan)
        for name, r in rows:
            print(f"  {name:<18} {r['num']}/{r['den']} = {_decimal_of(r)}")


def _decimal_of(r) -> str:
    return api.decimal_str(Fraction(int(r["num"]), int(r["den"])))


def _summary_rows(name, summary):
    return [
        (f"{name} mean", summary["mean"]),
        (f"{name} variance", summary["variance"]),
    ]


def _print_summary(payload, name, summary, fmt):
    rows = _summary_rows(name, summary)
    if fmt == "csv":
        print("quantity,num,den,value")
        for label, r in rows:
            print(f"{label.replace(' ', '_')},{r['num']},{r['den']},{_decimal_of(r)}")
        print(f"{name}_std_dev,,,{api.float_str(summary['std_dev'])}")
    else:
        plan = f"waves {','.join(str(w) for w in payload['waves'])} vs {payload['defenders']} defenders"
        print(plan)
        for label, r in rows:
            print(f"  {label:<24} {r['num']}/{r['den']} = {_decimal_of(r)}")
        print(f"  {name + ' std dev':<24} {api.float_str(summary['std_dev'])}")


def _print_dist_table(payload, fmt):
    series = [
        ("defenders_left", payload["defenders_left"]),
        ("attacker_losses", payload["attacker_losses"]),
        ("attackers_left_given_win", payload["attackers_left_given_win"]),
    ]
    if fmt == "csv":
        print("series,outcome,num,den,probability")
        for name, entries in series:
            for e in entries:
                r = e["probability"]
                print(f"{name},{e['value']},{r['num']},{r['den']},{_decimal_of(r)}")
    else:
        print(
            f"waves {','.join(str(w) for w in payload['waves'])} vs "
            f"{payload['defenders']} defenders"
        )
        for name, entries in series:
            print(f"{name}:")
            for e in entries:
                r = e["probability"]
                print(f"  {e['value']:>3}  {r['num']}/{r['den']} = {_decimal_of(r)}")


def _print_threshold(payload, fmt):
    surv = payload["expected_survivor_threshold"]
    repel = payload["repel_threshold"]
    limit = payload["search_limit"]
    if fmt == "csv":
        print("criterion,defenders,found")
        print(f"expected_survivor,{'' if surv is None else surv},{surv is not None}")
        print(f"repel_prob_half,{'' if repel is None else repel},{repel is not None}")
    else:
        attack = ",".join(str(a) for a in payload["attack"])
        print(f"garrison thresholds against waves {attack} (searched 1..{limit}):")
        if surv is None:
            print(f"  expected survivors >= 1: not found within limit {limit}")
        else:
            print(f"  expected survivors >= 1: {surv} defenders")
        if repel is None:
            print(f"  repel probability >= 1/2: not found within limit {limit}")
        else:
            print(f"  repel probability >= 1/2: {repel} defenders")


def _print_simulate(payload, fmt):
    if fmt == "csv":
        print("attacker_losses,defenders_left,count,frequency")
        trials = payload["trials"]
        for row in payload["outcomes"]:
            freq = row["count"] / trials
            print(
                f"{row['attacker_losses']},{row['defenders_left']},"
                f"{row['count']},{api.float_str(freq)}"
            )
    else:
        print(
            f"simulated waves {','.join(str(w) for w in payload['waves'])} vs "
            f"{payload['defenders']} defenders"
        )
        print(f"  trials             {payload['trials']}")
        print(f"  seed               {payload['seed']}")
        print(f"  generator          {payload['generator']}")
        print(f"  win rate           {api.float_str(payload['win_rate'])}")
        print(f"  standard error     {api.float_str(payload['standard_error_win'])}")
        print(f"  mean losses        {api.float_str(payload['mean_attacker_losses'])}")
        print(f"  mean survivors     {api.float_str(payload['mean_survivors'])}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(parser, args)
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _dispatch(parser, args) -> int:
    if args.command == "odds":
        plan = _validated_plan(parser, args)
        payload = api.odds_payload(plan)
        if args.format == "json":
            sys.stdout.write(api.to_json(payload))
        else:
            _print_quantities(payload, [("win", payload["win"]), ("repel", payload["repel"])],
                              args.format)
        return 0

    if args.command == "dist":
        plan = _validated_plan(parser, args)
        payload = api.dist_payload(plan)
        if args.format == "json":
            sys.stdout.write(api.to_json(payload))
        else:
            _print_dist_table(payload, args.format)
        return 0

    if args.command == "expect":
        plan = _validated_plan(parser, args)
        payload = api.expect_payload(plan)
        if args.format == "json":
            sys.stdout.write(api.to_json(payload))
        else:
            _print_summary(payload, "attacker_losses", payload["attacker_losses"], args.format)
        return 0

    if args.command == "survivors":
        plan = _validated_plan(parser, args)
        payload = api.survivors_payload(plan)
        if args.format == "json":
            sys.stdout.write(api.to_json(payload))
        else:
            _print_summary(payload, "survivors", payload["survivors"], args.format)
        return 0

    if args.command == "threshold":
        for size in args.attack:
            if size < 1:
                parser.error("--attack must be at least 1")
        if args.limit < 1:
            parser.error("--limit must be at least 1")
        from .combat import RuleSet

        rules = RuleSet().with_bonus(attacker=args.bonus_attack_die,
                                     defender=args.bonus_defense_die)
        payload = api.threshold_payload(args.attack, rules=rules, search_limit=args.limit)
        if args.format == "json":
            sys.stdout.write(api.to_json(payload))
        else:
            _print_threshold(payload, args.format)
        return 0

    if args.command == "figure":
        if args.format == "json":
            sys.stdout.write(api.to_json(figure_json_payload(args.id)))
        else:
            sys.stdout.write(figure_csv(args.id))
        return 0

    if args.command == "simulate":
        plan = _validated_plan(parser, args)
        if args.trials < 1:
            parser.error("--trials must be at least 1")
        if not 0 <= args.seed < 2**64:
            parser.error("--seed must be an unsigned 64-bit integer")
        payload = api.simulate_payload(SimConfig(plan=plan, trials=args.trials, seed=args.seed))
        if args.format == "json":
            sys.stdout.write(api.to_json(payload))
        else:
            _print_simulate(payload, args.format)
        return 0

    if args.command == "serve":
        from .server import serve

        port = args.port
        if port is None:
            port = int(os.environ.get(PORT_ENV_VAR, DEFAULT_PORT))
        serve(args.host, port, ui_dir=args.ui_dir)
        return 0

    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
