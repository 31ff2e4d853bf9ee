import logging
from typing import List

from omegaconf import DictConfig

from mazur.commands.common import emit, EXIT_FAIL, EXIT_PASS, save
from mazur.errors import UsageError
from mazur.oracle.brute_force import run_oracles
from mazur.utils.report import status
from mazur.utils.utils import timeit

logger = logging.getLogger(__name__)

ORACLE_FAULTS = ("metric",)


@timeit
def cmd_oracle(cfg: DictConfig) -> int:
    grids: List[int] = [cfg.grid] if isinstance(cfg.grid, int) else list(cfg.grid)
    faults = [] if cfg.inject_fault is None else [str(cfg.inject_fault)]
    if any(f not in ORACLE_FAULTS for f in faults):
        raise UsageError(f"the oracle knows the faults {', '.join(ORACLE_FAULTS)}, got {', '.join(faults)}")

    document = {}
    passed = True
    for resolution in grids:
        reports = run_oracles(int(resolution), faults)
        document[f"finite-grid({resolution})"] = [r.to_dict() for r in reports]
        lines = []
        for report in reports:
            verdict = status(report.passed, cfg.color)
            lines.append(f"finite-grid({resolution}) {report.name:<20} {verdict}  {report.checked} checks")
            lines += [f"    {failure}" for failure in report.failures]
        emit(lines)
        passed = passed and all(r.passed for r in reports)
    save(cfg, document)
    return EXIT_PASS if passed else EXIT_FAIL
