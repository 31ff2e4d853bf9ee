from concurrent.futures import ProcessPoolExecutor
import logging
from typing import Any, Dict, Optional, Tuple

from omegaconf import DictConfig, OmegaConf
from tqdm.auto import tqdm

from mazur.commands.common import emit, EXIT_FAIL, EXIT_PASS, game_space, run_defaults, save
from mazur.geometry.balls import BallKind
from mazur.geometry.space import Space
from mazur.game.composed import ComposedStrategy, COMPOSERS, play_composed
from mazur.game.probes import run_probes
from mazur.game.strategy import Role
from mazur.game.transcript import Transcript
from mazur.game.verification import failing_stage, transcript_document
from mazur.strategies.factory import build_strategy, with_decay
from mazur.transfer.faults import Faults, NO_FAULTS, parse_fault
from mazur.transfer.stage import parse_direction
from mazur.utils.io import dumps
from mazur.utils.report import check_lines, merge_counts, outcome_line, stage_matrix, status
from mazur.utils.seeding import spawn_seeds
from mazur.utils.utils import timeit

logger = logging.getLogger(__name__)


def build_composed(
    cfg: DictConfig, space: Space, faults: Faults = NO_FAULTS, defaults: Optional[Dict[str, Any]] = None
) -> ComposedStrategy:
    """The composed Player II for `cfg.direction`, answering through the `cfg.inner` strategy."""
    direction = parse_direction(str(cfg.direction))
    inner_variant = BallKind.PRODUCT if BallKind(direction.value) is BallKind.INCREASING else BallKind.INCREASING
    inner = build_strategy(str(cfg.inner), space, inner_variant, Role.PLAYER_2, defaults or run_defaults(cfg))
    return COMPOSERS[direction](with_decay(inner, cfg.decay), space, faults)


def run_transfer_game(cfg: DictConfig, seed: int, faults: Faults = NO_FAULTS) -> Tuple[Transcript, Dict]:
    """One composed game with Player I seeded by `seed`; returns the transcript and its document."""
    space = game_space(cfg)
    defaults = dict(run_defaults(cfg), seed=seed)
    composed = build_composed(cfg, space, faults, defaults)
    p1 = build_strategy(str(cfg.p1), space, composed.variant, Role.PLAYER_1, defaults)
    transcript = play_composed(p1, composed, int(cfg.rounds), space)
    if not transcript.complete:
        logger.warning(f"seed {seed}: {outcome_line(transcript)}")
    return transcript, transcript_document(transcript, space)


def _batch_job(job: Tuple[Dict, int, Faults]) -> Tuple[int, Dict[str, bool], Optional[Dict]]:
    container, seed, faults = job
    transcript, document = run_transfer_game(OmegaConf.create(container), seed, faults)
    failing = failing_stage(transcript)
    return seed, document["checks"], None if failing is None else failing.to_dict()


def _run_batch(cfg: DictConfig, faults: Faults) -> Tuple[Dict[str, int], Optional[Dict], int]:
    seeds = spawn_seeds(int(cfg.seed), int(cfg.games))
    container = OmegaConf.to_container(cfg, resolve=True)
    jobs = [(container, seed, faults) for seed in seeds]
    results = []
    if int(cfg.jobs) > 1:
        with ProcessPoolExecutor(max_workers=int(cfg.jobs)) as executor:
            results = list(tqdm(executor.map(_batch_job, jobs), total=len(jobs), leave=False))
    else:
        results = [_batch_job(job) for job in tqdm(jobs, leave=False)]
    counts = merge_counts([checks for _, checks, _ in results])
    first_failure = next(({"seed": s, "stage": f} for s, _, f in results if f is not None), None)
    if first_failure is None:
        first_failure = next(({"seed": s, "stage": None} for s, c, _ in results if not all(c.values())), None)
    return counts, first_failure, len(results)


@timeit
def cmd_transfer(cfg: DictConfig) -> int:
    """
    Replay the regression probes, then play composed games and verify every stage
    and transcript check. With --games N the games run in a batch and only the
    pass counts and the first failure are reported.
    """
    faults = parse_fault(cfg.inject_fault)
    probes = run_probes(faults)
    lines = [f"probe {name:<24} {status(ok, cfg.color)}" for name, ok in probes.items()]
    passed = all(probes.values())

    if int(cfg.games) > 1:
        counts, failure, total = _run_batch(cfg, faults)
        width = max(map(len, counts), default=0)
        for name, count in counts.items():
            lines.append(f"{name:<{width}}  {count}/{total}  {status(count == total, cfg.color)}")
        save(cfg, {"probes": probes, "games": total, "passes": counts, "first_failure": failure})
        passed = passed and all(count == total for count in counts.values())
        emit(lines)
        if failure is not None:
            emit([f"first failure at seed {failure['seed']}:", dumps(failure["stage"] or {}).rstrip()])
        return EXIT_PASS if passed else EXIT_FAIL

    transcript, document = run_transfer_game(cfg, int(cfg.seed), faults)
    document["probes"] = probes
    save(cfg, document)
    lines += stage_matrix(transcript, cfg.color) + [outcome_line(transcript)]
    lines += check_lines(document["checks"], cfg.color)
    failing = failing_stage(transcript)
    emit(lines)
    passed = passed and all(document["checks"].values())
    if failing is not None:
        emit(["failing stage:", dumps(failing.to_dict()).rstrip()])
    return EXIT_PASS if passed else EXIT_FAIL