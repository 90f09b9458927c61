"""Plot-ready datasets for the package's standard charts.

Each figure is a deterministic table over defender counts 1..10. Only
data is emitted, never rendered plots; figure 2 is the same series as
figure 1 because the logarithmic axis is the consumer's presentation
choice, not a different dataset.
"""

from __future__ import annotations

from fractions import Fraction

from .api import decimal_str, float_str, rational_json
from .combat import AttackPlan, battle, multi_territory
from .errors import DomainError
from .stats import distribution_stats

DEFENDER_RANGE = range(1, 11)

FIGURE_TITLES = {
    1: "Win probability attacking with three troops",
    2: "Win probability attacking with three troops (plot on a log axis)",
    3: "Six troops in two waves of three vs three waves of two",
    4: "Attacker losses attacking with three troops, mean and one-sigma band",
    5: "Surviving defenders against waves [3,3], mean and one-sigma band",
}


def _win_series(waves: tuple[int, ...]) -> list[Fraction]:
    return [
        multi_territory(AttackPlan(waves=waves, defenders=n_d)).win_probability
        for n_d in DEFENDER_RANGE
    ]


def _sigma_rows(summaries) -> list[list]:
    rows = []
    for n_d, s in zip(DEFENDER_RANGE, summaries):
        mean = float(s.mean)
        rows.append([n_d, s.mean, s.std_dev, mean - s.std_dev, mean + s.std_dev])
    return rows


def figure_dataset(figure_id: int) -> dict:
    """Columns and rows for one figure.

    Row cells are ints, exact Fractions, or floats; the CSV and JSON
    renderers decide the textual form.
    """
    if figure_id in (1, 2):
        rows = [[n_d, p] for n_d, p in zip(DEFENDER_RANGE, _win_series((3,)))]
        columns = ["n_d", "p_win"]
    elif figure_id == 3:
        rows = [
            [n_d, p33, p222]
            for n_d, p33, p222 in zip(
                DEFENDER_RANGE, _win_series((3, 3)), _win_series((2, 2, 2))
            )
        ]
        columns = ["n_d", "p_3plus3", "p_2plus2plus2"]
    elif figure_id == 4:
        summaries = [
            distribution_stats(battle(3, n_d).attacker_losses_dist) for n_d in DEFENDER_RANGE
        ]
        rows = _sigma_rows(summaries)
        columns = ["n_d", "mean", "std_dev", "mean_minus_sd", "mean_plus_sd"]
    elif figure_id == 5:
        summaries = [
            distribution_stats(
                multi_territory(AttackPlan(waves=(3, 3), defenders=n_d)).defenders_left_dist
            )
            for n_d in DEFENDER_RANGE
        ]
        rows = _sigma_rows(summaries)
        columns = ["n_d", "mean", "std_dev", "mean_minus_sd", "mean_plus_sd"]
    else:
        raise DomainError(f"figure must be between 1 and 5, got {figure_id}", field="figure")
    return {"figure": figure_id, "title": FIGURE_TITLES[figure_id], "columns": columns, "rows": rows}


def _cell_str(cell) -> str:
    if isinstance(cell, Fraction):
        return decimal_str(cell)
    if isinstance(cell, float):
        return float_str(cell)
    return str(cell)


def figure_csv(figure_id: int) -> str:
    """Byte-stable CSV: header row, `.` decimals, LF line endings."""
    data = figure_dataset(figure_id)
    lines = [",".join(data["columns"])]
    lines.extend(",".join(_cell_str(cell) for cell in row) for row in data["rows"])
    return "\n".join(lines) + "\n"


def figure_json_payload(figure_id: int) -> dict:
    data = figure_dataset(figure_id)
    rows = [
        [rational_json(cell) if isinstance(cell, Fraction) else cell for cell in row]
        for row in data["rows"]
    ]
    return {
        "figure": data["figure"],
        "title": data["title"],
        "columns": data["columns"],
        "rows": rows,
    }
