from dataclasses import dataclass
import logging
from typing import Optional

from mazur.errors import UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Faults:
    """Deliberate defects threaded through the transfers so the checks can be shown to catch them."""

    skip_dummy_bucket: bool = False
    open_threshold: bool = False
    rtilde_equals_r: bool = False

    @property
    def active(self) -> bool:
        return self.skip_dummy_bucket or self.open_threshold or self.rtilde_equals_r


NO_FAULTS = Faults()

FAULT_NAMES = {
    "skip-dummy-bucket": Faults(skip_dummy_bucket=True),
    "open-threshold": Faults(open_threshold=True),
    "rtilde-equals-r": Faults(rtilde_equals_r=True),
}


def parse_fault(name: Optional[str]) -> Faults:
    if name is None or name in ("", "none"):
        return NO_FAULTS
    try:
        faults = FAULT_NAMES[name]
    except KeyError:
        raise UsageError(f"unknown fault {name!r}; choose from {', '.join(FAULT_NAMES)}")
    logger.warning(f"injecting fault {name}")
    return faults
