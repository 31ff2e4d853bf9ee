from typing import Dict, List, Mapping

from termcolor import colored

from mazur.geometry.space import format_scalar
from mazur.game.transcript import Transcript


def status(ok: bool, color: bool = True) -> str:
    word = "pass" if ok else "FAIL"
    if not color:
        return word
    return colored(word, "green" if ok else "red")


def _cell(ok: bool, width: int, color: bool) -> str:
    # pad before coloring, escape codes have no width
    return status(ok, color) + " " * (width - 4)


def check_lines(checks: Mapping[str, bool], color: bool = True) -> List[str]:
    width = max((len(name) for name in checks), default=0)
    return [f"{name:<{width}}  {status(ok, color)}" for name, ok in checks.items()]


def radius_table(t: Transcript) -> List[str]:
    lines = [f"{'stage':>5}  {'index I':>7}  {'radius I':>14}  {'index II':>8}  {'radius II':>14}"]
    for record in t.stages:
        lines.append(
            f"{record.stage:>5}  {record.player1.index:>7}  {format_scalar(record.player1.radius):>14}"
            f"  {record.player2.index:>8}  {format_scalar(record.player2.radius):>14}"
        )
    return lines


def stage_matrix(t: Transcript, color: bool = True) -> List[str]:
    """One row per stage, one column per stage check."""
    names: List[str] = []
    for record in t.stages:
        names += [name for name in record.checks if name not in names]
    widths = [max(len(name), 4) for name in names]
    lines = ["stage  " + "  ".join(f"{name:<{w}}" for name, w in zip(names, widths))]
    for record in t.stages:
        cells = [_cell(record.checks.get(name, False), w, color) for name, w in zip(names, widths)]
        lines.append(f"{record.stage:>5}  " + "  ".join(cells))
    return lines


def outcome_line(t: Transcript) -> str:
    if t.complete:
        return f"game complete after {len(t.stages)} stages"
    return f"stage {t.failed_stage}: {t.offender.value} loses ({t.outcome.value}): {t.reason}"


def merge_counts(reports: List[Dict[str, bool]]) -> Dict[str, int]:
    """Number of passes per check over a batch of reports."""
    counts: Dict[str, int] = {}
    for checks in reports:
        for name, ok in checks.items():
            counts[name] = counts.get(name, 0) + int(ok)
    return counts
