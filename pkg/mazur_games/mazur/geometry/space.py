from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
import logging
import re
from typing import Callable, Iterable, Optional, Tuple, Union

from mazur.errors import UsageError

logger = logging.getLogger(__name__)

Scalar = Fraction
Point = Fraction
Metric = Callable[[Fraction, Fraction], Fraction]

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_scalar(value: Union[str, int, Fraction]) -> Fraction:
    """
    Parse an exact rational. Accepts ints, Fractions and "p/q" / "p" strings.
    Floats are refused: every comparison downstream is exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageError(f"refusing inexact value {value!r}, write it as p/q")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    match = _RATIONAL.match(str(value))
    if match is None:
        raise UsageError(f"not a rational number: {value!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise UsageError(f"zero denominator in {value!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_scalar(value: Fraction) -> str:
    # lowest terms always, integers included: 0 -> "0/1"
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def interval_metric(x: Fraction, y: Fraction) -> Fraction:
    return abs(x - y)


class SpaceKind(str, Enum):
    UNIT_INTERVAL = "unit-interval"
    FINITE_GRID = "finite-grid"


@dataclass(frozen=True)
class Space:
    """
    The ambient compact metric space. The unit interval hosts games; finite grids exist
    only for the brute-force oracle (they are not dense-in-itself).
    """

    kind: SpaceKind = SpaceKind.UNIT_INTERVAL
    grid: Optional[Tuple[Fraction, ...]] = None
    metric: Metric = field(default=interval_metric, compare=False, repr=False)

    @classmethod
    def unit_interval(cls) -> "Space":
        return cls()

    @classmethod
    def finite_grid(cls, resolution: int, metric: Metric = interval_metric) -> "Space":
        if resolution < 1:
            raise UsageError(f"grid resolution must be positive, got {resolution}")
        if resolution == 1:
            points = (Fraction(0),)
        else:
            points = tuple(Fraction(k, resolution - 1) for k in range(resolution))
        return cls(SpaceKind.FINITE_GRID, points, metric)

    @classmethod
    def with_points(cls, points: Iterable[Fraction], metric: Metric = interval_metric) -> "Space":
        return cls(SpaceKind.FINITE_GRID, tuple(sorted(set(map(to_scalar, points)))), metric)

    @property
    def resolution(self) -> Optional[int]:
        return None if self.grid is None else len(self.grid)

    def contains(self, x: Fraction) -> bool:
        if self.grid is not None:
            return x in self.grid
        return 0 <= x <= 1

    def __str__(self):
        if self.kind is SpaceKind.FINITE_GRID:
            return f"{self.kind.value}({self.resolution})"
        return self.kind.value


UNIT_INTERVAL = Space.unit_interval()


def parse_space(name: str) -> Space:
    """'unit-interval' or 'finite-grid(5)' / 'finite-grid:5'."""
    name = name.strip()
    if name == SpaceKind.UNIT_INTERVAL.value:
        return UNIT_INTERVAL
    match = re.match(r"^finite-grid[(:](\d+)\)?$", name)
    if match is None:
        raise UsageError(f"unknown space {name!r}")
    return Space.finite_grid(int(match.group(1)))


def distance(s: Space, x: Fraction, y: Fraction) -> Fraction:
    return s.metric(x, y)


def closest_pair(s: Space, pts: Iterable[Fraction]) -> Optional[Tuple[Fraction, Fraction]]:
    points = sorted(set(pts))
    if len(points) < 2:
        return None
    # on the line the closest pair is adjacent in sorted order
    candidates = zip(points, points[1:]) if s.metric is interval_metric else combinations(points, 2)
    return min(candidates, key=lambda pair: distance(s, *pair))


def separation(s: Space, pts: Iterable[Fraction]) -> Fraction:
    """Minimum pairwise distance; 1 (the metric's upper bound) for sets with at most one point."""
    pair = closest_pair(s, pts)
    if pair is None:
        return Fraction(1)
    return distance(s, *pair)
