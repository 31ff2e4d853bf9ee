from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Iterable, Iterator, List, Tuple

from mazur.geometry.space import distance, format_scalar, interval_metric, Space, to_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteCompact:
    """
    A finite subset of the ambient space, stored sorted and deduplicated so that
    equality is structural. The empty set stands for the empty compact.
    """

    points: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(set(map(to_scalar, self.points)))))

    @classmethod
    def of(cls, *points) -> "FiniteCompact":
        return cls(tuple(points))

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, x) -> bool:
        return x in self.points

    def __bool__(self) -> bool:
        return bool(self.points)

    def __or__(self, other: "FiniteCompact") -> "FiniteCompact":
        return FiniteCompact(self.points + other.points)

    def __sub__(self, other: "FiniteCompact") -> "FiniteCompact":
        return FiniteCompact(tuple(x for x in self.points if x not in other.points))

    def __and__(self, other: "FiniteCompact") -> "FiniteCompact":
        return FiniteCompact(tuple(x for x in self.points if x in other.points))

    def __le__(self, other: "FiniteCompact") -> bool:
        return set(self.points) <= set(other.points)

    def isdisjoint(self, other: "FiniteCompact") -> bool:
        return set(self.points).isdisjoint(other.points)

    def to_list(self) -> List[str]:
        return [format_scalar(x) for x in self.points]

    @classmethod
    def from_list(cls, values: Iterable) -> "FiniteCompact":
        return cls(tuple(to_scalar(v) for v in values))

    def __str__(self):
        return "{" + ",".join(format_scalar(x) for x in self.points) + "}"


EMPTY = FiniteCompact()


def union_all(sets: Iterable[FiniteCompact]) -> FiniteCompact:
    points: Tuple[Fraction, ...] = ()
    for k in sets:
        points += k.points
    return FiniteCompact(points)


def nearest_distance(s: Space, x: Fraction, L: FiniteCompact) -> Fraction:
    if s.metric is interval_metric:
        # on the line the nearest point is a sorted neighbour of x
        i = bisect_left(L.points, x)
        return min(distance(s, x, y) for y in L.points[max(i - 1, 0) : i + 1])
    return min(distance(s, x, y) for y in L)


def directed_hausdorff(s: Space, K: FiniteCompact, L: FiniteCompact) -> Fraction:
    """sup over K of the distance to L, for nonempty K and L."""
    return max(nearest_distance(s, x, L) for x in K)


def hausdorff(s: Space, K: FiniteCompact, L: FiniteCompact) -> Fraction:
    """Hausdorff distance with d(empty, empty) = 0 and d(K, empty) = 1 for nonempty K."""
    if not K and not L:
        return Fraction(0)
    if not K or not L:
        return Fraction(1)
    return max(directed_hausdorff(s, K, L), directed_hausdorff(s, L, K))


def within_dilation(s: Space, K: FiniteCompact, L: FiniteCompact, r: Fraction) -> bool:
    """Decide K ⊂ L[r]: every point of K lies within r of some point of L."""
    return all(any(distance(s, x, y) <= r for y in L) for x in K)


def dilation_intervals(K: FiniteCompact, r: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """K[r] ∩ [0,1] as a sorted list of disjoint closed intervals."""
    merged: List[Tuple[Fraction, Fraction]] = []
    for x in K:
        a, b = max(x - r, Fraction(0)), min(x + r, Fraction(1))
        # centres arrive sorted, so left endpoints are nondecreasing
        if merged and a <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], b))
        else:
            merged.append((a, b))
    return merged


def interval_measure(K: FiniteCompact, r: Fraction) -> Fraction:
    """Exact Lebesgue measure of K[r] ∩ [0,1]."""
    return sum((b - a for a, b in dilation_intervals(K, r)), Fraction(0))


def is_interval_space(s: Space) -> bool:
    return s.grid is None and s.metric is interval_metric
