import logging
from typing import Callable

from omegaconf import DictConfig

from mazur.commands.common import emit, EXIT_FAIL, EXIT_PASS, game_space, save
from mazur.commands.transfer import build_composed
from mazur.game.composed import play_composed
from mazur.game.verification import transcript_document
from mazur.strategies.console import ConsoleStrategy
from mazur.transfer.faults import parse_fault
from mazur.transfer.stage import StageRecord
from mazur.utils.report import check_lines, outcome_line

logger = logging.getLogger(__name__)

DEFAULT_OUT = "interactive.json"


def cmd_interactive(cfg: DictConfig, input_fn: Callable[[str], str] = input) -> int:
    """You are Player I; the composed strategy answers and every stage is checked as it closes."""
    space = game_space(cfg)
    composed = build_composed(cfg, space, parse_fault(cfg.inject_fault))
    human = ConsoleStrategy(space, composed.variant, input_fn=input_fn)
    emit([f"{composed.variant.value} game on {space}, {cfg.rounds} rounds; type a ball such as [{{0}},{{1/2}}] 2 1/10"])

    def show(record: StageRecord) -> None:
        emit([f"reply: {record.player2}", f"shadow: {record.shadow1} / {record.shadow2}"])
        emit(check_lines(record.checks, cfg.color))

    transcript = play_composed(human, composed, int(cfg.rounds), space, on_stage=show)
    document = transcript_document(transcript, space)
    save(cfg, document, default=DEFAULT_OUT)
    emit([outcome_line(transcript)])
    return EXIT_PASS if all(record.passed for record in transcript.stages) else EXIT_FAIL
