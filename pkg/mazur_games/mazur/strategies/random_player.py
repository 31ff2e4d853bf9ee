from fractions import Fraction
import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from mazur.errors import UsageError
from mazur.geometry.balls import Ball, BALL_TYPES, BallKind, legal_nesting, validate
from mazur.geometry.hyperspace import FiniteCompact, union_all
from mazur.geometry.space import distance, separation, Space, UNIT_INTERVAL
from mazur.game.strategy import Role, Strategy
from mazur.transfer.transfer import bucket_of, least_index

logger = logging.getLogger(__name__)

RADIUS_FACTORS = tuple(Fraction(k, 8) for k in range(1, 5))
PERTURBATION_STEPS = 16
OPENING_GRID = 16
FRESH_GRID = 64
MAX_ATTEMPTS = 8


def parse_growth(growth: str) -> int:
    """'static' or 'extend-by-N' -> number of indices added per move."""
    if growth == "static":
        return 0
    match = re.match(r"^extend-by-(\d+)$", growth)
    if match is None:
        raise UsageError(f"unknown growth profile {growth!r}; use static or extend-by-N")
    return int(match.group(1))


def _clip(x: Fraction) -> Fraction:
    return min(max(x, Fraction(0)), Fraction(1))


class RandomPlayer(Strategy):
    """
    Seeded random mover for either game and either seat.

    Every answer perturbs the previous centres by at most a quarter of the previous
    radius and shrinks the radius by a factor drawn from 1/8..1/2, which keeps the
    triangle certificate and the 3r separation. Samples failing validation are
    retried, then the unperturbed centres are used. As Player II it also spawns
    points next to existing ones (at a later level in the increasing game), which
    forces smaller radii.
    """

    def __init__(
        self,
        space: Space = UNIT_INTERVAL,
        seed: int = 0,
        variant: Union[BallKind, str] = BallKind.PRODUCT,
        growth: str = "static",
        role: Union[Role, str] = Role.PLAYER_1,
        initial_index: int = 2,
        children: Optional[int] = None,
    ):
        super().__init__(variant, role)
        if initial_index < 1:
            raise UsageError(f"initial index must be positive, got {initial_index}")
        self.space = space
        self.seed = seed
        self.growth = growth
        self.extend = parse_growth(growth)
        self.initial_index = initial_index
        self.children = (1 if self.role is Role.PLAYER_2 else 0) if children is None else children
        self.rng = np.random.default_rng(seed)

    def reset(self) -> None:
        self.rng = np.random.default_rng(self.seed)

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        if opponent_move is None:
            return self._opening()
        return self._answer(opponent_move)

    def _factor(self) -> Fraction:
        return RADIUS_FACTORS[int(self.rng.integers(len(RADIUS_FACTORS)))]

    def _opening(self) -> Ball:
        a = self.initial_index
        count = a + int(self.rng.integers(0, a + 1))
        picks = self.rng.choice(OPENING_GRID + 1, size=min(count, OPENING_GRID + 1), replace=False)
        points = [Fraction(int(j), OPENING_GRID) for j in picks]
        # first a points seed one level each so no level starts empty
        levels = list(range(1, a + 1)) + [int(self.rng.integers(1, a + 1)) for _ in points[a:]]
        radius = separation(self.space, points) / 3 * 2 * self._factor()
        if self.variant is BallKind.PRODUCT:
            prefix = tuple(FiniteCompact(tuple(x for x, n in zip(points, levels) if n == j)) for j in range(1, a + 1))
        else:
            prefix = tuple(FiniteCompact(tuple(x for x, n in zip(points, levels) if n <= j)) for j in range(1, a + 1))
        return BALL_TYPES[self.variant](prefix, radius)

    def _answer(self, outer: Ball) -> Ball:
        radius = outer.radius * self._factor()
        for attempt in range(MAX_ATTEMPTS):
            prefix = self._perturbed(outer)
            candidate_radius = radius
            for _ in range(self.children):
                prefix = self._with_child(prefix, outer)
            if self.children:
                candidate_radius = min(radius, separation(self.space, union_all(prefix)) / 3)
            if candidate_radius <= 0:
                continue
            candidate = BALL_TYPES[self.variant](self._extended(prefix, candidate_radius), candidate_radius)
            if validate(candidate, self.space).valid and legal_nesting(candidate, outer, self.space):
                return candidate
            logger.debug(f"attempt {attempt} rejected: {candidate}")
        logger.debug("falling back to the unperturbed centres")
        return BALL_TYPES[self.variant](self._extended(outer.prefix, radius), radius)

    def _step(self, scale: Fraction, low: int) -> Fraction:
        k = int(self.rng.integers(low, PERTURBATION_STEPS + 1))
        if low > 0 and self.rng.integers(2):
            k = -k
        return scale * k / PERTURBATION_STEPS

    def _perturbed(self, outer: Ball) -> Tuple[FiniteCompact, ...]:
        moved: Dict[Fraction, Fraction] = {
            x: _clip(x + self._step(outer.radius / 4, -PERTURBATION_STEPS)) for x in outer.union()
        }
        return tuple(FiniteCompact(tuple(moved[x] for x in k)) for k in outer.prefix)

    def _with_child(self, prefix: Tuple[FiniteCompact, ...], outer: Ball) -> Tuple[FiniteCompact, ...]:
        parents = outer.union().points
        if not parents:
            return prefix
        x = parents[int(self.rng.integers(len(parents)))]
        child = _clip(x + self._step(outer.radius / 4, 1))
        if self.variant is BallKind.PRODUCT:
            levels = [bucket_of(outer, x)]
        else:
            first = int(self.rng.integers(least_index(outer, x), outer.index + 1))
            levels = list(range(first, outer.index + 1))
        return tuple(k | FiniteCompact.of(child) if n in levels else k for n, k in enumerate(prefix, start=1))

    def _fresh(self, taken: FiniteCompact, radius: Fraction) -> Optional[Fraction]:
        for _ in range(MAX_ATTEMPTS):
            x = Fraction(int(self.rng.integers(FRESH_GRID + 1)), FRESH_GRID)
            if all(distance(self.space, x, y) >= 3 * radius for y in taken):
                return x
        return None

    def _extended(self, prefix: Sequence[FiniteCompact], radius: Fraction) -> Tuple[FiniteCompact, ...]:
        sets: List[FiniteCompact] = list(prefix)
        for _ in range(self.extend):
            x = self._fresh(union_all(sets), radius)
            fresh = FiniteCompact() if x is None else FiniteCompact.of(x)
            sets.append(fresh if self.variant is BallKind.PRODUCT else sets[-1] | fresh)
        return tuple(sets)


def random_player1(
    seed: int = 0,
    variant: Union[BallKind, str] = BallKind.PRODUCT,
    growth: str = "static",
    space: Space = UNIT_INTERVAL,
) -> RandomPlayer:
    return RandomPlayer(space, seed=seed, variant=variant, growth=growth, role=Role.PLAYER_1)
