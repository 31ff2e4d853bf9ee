"""
Exhaustive checks of the hyperspace and ball layers on tiny finite grids.

Each check recomputes its ground truth from the definitions (dilations, Hausdorff
distance, ball membership) and only calls the public functions under test, so a
defect inside the geometry modules cannot hide itself.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from mazur.errors import OracleSizeError, UsageError
from mazur.geometry.balls import Ball, BallKind, legal_nesting, parse_ball
from mazur.geometry.hyperspace import FiniteCompact, hausdorff
from mazur.geometry.space import format_scalar, Space, to_scalar

logger = logging.getLogger(__name__)

MAX_ENUMERATION = 16
MAX_EXHAUSTIVE = 8
MAX_NESTING_INDEX = 2
MAX_FAILURES = 10

DEFAULT_RADII = ("1/8", "1/4", "1/2")


@dataclass
class OracleReport:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)
        elif len(self.failures) == MAX_FAILURES:
            self.failures.append("... further failures omitted")

    def to_dict(self) -> Dict:
        return {"name": self.name, "checked": self.checked, "passed": self.passed, "failures": list(self.failures)}


def unit_metric(x: Fraction, y: Fraction) -> Fraction:
    """Every pair at distance 1, a point and itself included. Not a metric."""
    return Fraction(1)


def _grid(space: Space, bound: int) -> Tuple[Fraction, ...]:
    if space.grid is None:
        raise UsageError("brute-force checks need a finite grid")
    if len(space.grid) > bound:
        raise OracleSizeError(f"{space} has {len(space.grid)} points, the bound is {bound}")
    return space.grid


def enumerate_compacts(grid: Space) -> List[FiniteCompact]:
    """All subsets of the grid, the empty one first, in bitmask order."""
    points = _grid(grid, MAX_ENUMERATION)
    return [
        FiniteCompact(tuple(x for i, x in enumerate(points) if mask >> i & 1)) for mask in range(2 ** len(points))
    ]


def _subset_masks(size: int) -> np.ndarray:
    """Row m marks the points of subset m, matching the order of `enumerate_compacts`."""
    return (np.arange(2**size)[:, None] >> np.arange(size)[None, :] & 1).astype(bool)


def _reference_hausdorff(space: Space, K: FiniteCompact, L: FiniteCompact) -> Fraction:
    if not K or not L:
        return Fraction(0) if not K and not L else Fraction(1)
    forward = max(min(space.metric(x, y) for y in L) for x in K)
    backward = max(min(space.metric(x, y) for x in K) for y in L)
    return max(forward, backward)


def _scaled(rows: Sequence[Sequence[Fraction]], scale: int) -> np.ndarray:
    return np.array([[d.numerator * (scale // d.denominator) for d in row] for row in rows], dtype=np.int64)


@dataclass
class HausdorffTable:
    """
    Every pairwise distance of a grid's subsets as computed by `hausdorff`, together
    with the point distances, all scaled to integers by the common denominator.
    """

    compacts: List[FiniteCompact]
    masks: np.ndarray
    points: np.ndarray
    distances: List[List[Fraction]]
    scaled: np.ndarray
    scale: int

    @classmethod
    def build(cls, grid: Space) -> "HausdorffTable":
        points = _grid(grid, MAX_EXHAUSTIVE)
        compacts = enumerate_compacts(grid)
        point_distances = [[grid.metric(x, y) for y in points] for x in points]
        distances = [[hausdorff(grid, K, L) for L in compacts] for K in compacts]
        denominators = {d.denominator for rows in (point_distances, distances) for row in rows for d in row}
        scale = int(np.lcm.reduce(np.array(sorted(denominators), dtype=np.int64)))
        return cls(
            compacts,
            _subset_masks(len(points)),
            _scaled(point_distances, scale),
            distances,
            _scaled(distances, scale),
            scale,
        )

    def threshold(self, r: Fraction) -> int:
        """The largest scaled distance that is at most r."""
        return r.numerator * self.scale // r.denominator

    def reference(self) -> np.ndarray:
        """Hausdorff distances recomputed from the definition on the scaled point distances."""
        far = int(self.points.max()) + 1
        # nearest[L, x]: distance from point x to the nearest point of L
        nearest = np.where(self.masks[:, None, :], self.points[None, :, :], far).min(axis=-1)
        directed = np.where(self.masks[:, None, :], nearest[None, :, :], -1).max(axis=-1)
        reference = np.maximum(directed, directed.T)
        empty = ~self.masks.any(axis=1)
        reference[empty, :] = self.scale
        reference[:, empty] = self.scale
        reference[np.ix_(empty, empty)] = 0
        return reference

    def contained(self, r: Fraction) -> np.ndarray:
        """contained[i, j] is K_i ⊂ K_j[r]: each point of K_i lies within r of a point of K_j."""
        close = (self.points <= self.threshold(r)).astype(np.int64)
        near = self.masks.astype(np.int64) @ close.T > 0
        return ~(self.masks[:, None, :] & ~near[None, :, :]).any(axis=-1)


def verify_hausdorff_axioms(grid: Space, table: Optional[HausdorffTable] = None) -> OracleReport:
    """Identity, symmetry, agreement with the definition and the triangle inequality over all subsets."""
    table = table or HausdorffTable.build(grid)
    report = OracleReport("hausdorff_axioms")
    compacts, D = table.compacts, table.scaled
    size = len(compacts)
    report.checked += 3 * size * size
    # subsets are enumerated without repeats, so K_i = K_j exactly when i = j
    for i, j in np.argwhere((D == 0) != np.eye(size, dtype=bool))[: MAX_FAILURES + 1]:
        report.fail(f"identity: d({compacts[i]}, {compacts[j]}) = {format_scalar(table.distances[i][j])}")
    for i, j in np.argwhere(D != D.T)[: MAX_FAILURES + 1]:
        d, back = format_scalar(table.distances[i][j]), format_scalar(table.distances[j][i])
        report.fail(f"symmetry: d({compacts[i]}, {compacts[j]}) = {d}, reversed {back}")
    for i, j in np.argwhere(D != table.reference())[: MAX_FAILURES + 1]:
        report.fail(f"definition: d({compacts[i]}, {compacts[j]}) = {format_scalar(table.distances[i][j])}")

    for j in range(size):
        # D[i,k] <= D[i,j] + D[j,k] for every i and k
        broken = np.argwhere(D > D[:, j][:, None] + D[j, :][None, :])
        report.checked += size * size
        for i, k in broken[:MAX_FAILURES]:
            report.fail(f"triangle: d({compacts[i]}, {compacts[k]}) exceeds the route through {compacts[j]}")
    logger.info(f"{report.name} on {grid}: {report.checked} checks, {len(report.failures)} failures")
    return report


def verify_characterization(
    grid: Space, radii: Iterable = DEFAULT_RADII, table: Optional[HausdorffTable] = None
) -> OracleReport:
    """d(K, L) ≤ r exactly when K ⊂ L[r] and L ⊂ K[r]."""
    _grid(grid, MAX_EXHAUSTIVE)
    radii = [to_scalar(r) for r in radii]
    if any(not 0 < r < 1 for r in radii):
        raise UsageError("characterization radii must lie in (0,1)")
    table = table or HausdorffTable.build(grid)
    report = OracleReport("characterization")
    compacts = table.compacts
    for r in radii:
        report.checked += len(compacts) ** 2
        metric_side = table.scaled <= table.threshold(r)
        contained = table.contained(r)
        for i, j in np.argwhere(metric_side != (contained & contained.T))[: MAX_FAILURES + 1]:
            d = format_scalar(table.distances[i][j])
            report.fail(f"r = {format_scalar(r)}: d({compacts[i]}, {compacts[j]}) = {d}")
    logger.info(f"{report.name} on {grid}: {report.checked} checks, {len(report.failures)} failures")
    return report


def _is_member(space: Space, ball: Ball, sequence: Sequence[FiniteCompact]) -> bool:
    if ball.kind is BallKind.INCREASING and not all(a <= b for a, b in zip(sequence, sequence[1:])):
        return False
    return all(_reference_hausdorff(space, sequence[n], ball.prefix[n]) <= ball.radius for n in range(ball.index))


def _members(space: Space, ball: Ball, compacts: Sequence[FiniteCompact]) -> Iterator[Tuple[FiniteCompact, ...]]:
    columns = [[K for K in compacts if _reference_hausdorff(space, K, centre) <= ball.radius] for centre in ball.prefix]
    for sequence in product(*columns):
        if _is_member(space, ball, sequence):
            yield sequence


def verify_nesting_soundness(grid: Space, pairs: Iterable[Tuple[Ball, Ball]]) -> OracleReport:
    """
    For every (inner, outer) pair judged legally nested, every enumerated prefix in
    the inner ball must lie in the outer ball.
    """
    report = OracleReport("nesting_soundness")
    compacts = enumerate_compacts(grid)
    for inner, outer in pairs:
        if inner.index > MAX_NESTING_INDEX:
            raise OracleSizeError(f"index {inner.index} is above the enumeration bound {MAX_NESTING_INDEX}")
        if not legal_nesting(inner, outer, grid):
            logger.debug(f"{inner} is not nested in {outer}, nothing to check")
            continue
        for sequence in _members(grid, inner, compacts):
            report.checked += 1
            if not _is_member(grid, outer, sequence):
                report.fail(f"{'; '.join(map(str, sequence))} is in {inner} but not in {outer}")
    logger.info(f"{report.name} on {grid}: {report.checked} members checked, {len(report.failures)} failures")
    return report


# grid points around the centres of the worked transfer chain, within the radii in play
WORKED_GRID = ("0", "1/200", "1/40", "1/30", "1/20", "1/2", "101/200", "11/20")

WORKED_PAIRS = (
    ("[{0},{0,1/30,1/2}] 2 1/200", "[{0},{0,1/2}] 2 1/20", BallKind.INCREASING),
    ("[{0},{1/2}] 2 1/20", "[{0},{1/2}] 2 1/10", BallKind.PRODUCT),
    ("[{0},{1/2}] 2 1/10", "[{0},{1/2}] 2 1/10", BallKind.PRODUCT),
    ("[{1/20},{1/2}] 2 1/20", "[{0},{1/2}] 2 1/20", BallKind.PRODUCT),
)


def worked_nesting_pairs() -> List[Tuple[Ball, Ball]]:
    return [(parse_ball(inner, kind), parse_ball(outer, kind)) for inner, outer, kind in WORKED_PAIRS]


def run_oracles(resolution: int, faults: Sequence[str] = ()) -> List[OracleReport]:
    """
    All oracle checks on `finite-grid(resolution)`. The fault "metric" swaps in a
    distance that is 1 everywhere, which the axiom check must catch.
    """
    grid = Space.finite_grid(resolution)
    if "metric" in faults:
        logger.warning("injecting fault metric")
        grid = Space.with_points(grid.grid, metric=unit_metric)
    table = HausdorffTable.build(grid)
    reports = [verify_hausdorff_axioms(grid, table), verify_characterization(grid, table=table)]
    worked = Space.with_points(map(to_scalar, WORKED_GRID))
    reports.append(verify_nesting_soundness(worked, worked_nesting_pairs()))
    return reports
