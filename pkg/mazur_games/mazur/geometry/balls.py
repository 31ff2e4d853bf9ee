from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
import json
import logging
import re
from typing import ClassVar, Dict, List, Optional, Sequence, Tuple, Union

from mazur.errors import InsufficientPrefixError, InvalidBallError, UsageError
from mazur.geometry.hyperspace import FiniteCompact, hausdorff, union_all
from mazur.geometry.space import closest_pair, distance, format_scalar, Space, to_scalar, UNIT_INTERVAL

logger = logging.getLogger(__name__)


class BallKind(str, Enum):
    PRODUCT = "product"
    INCREASING = "increasing"


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass
class ValidityReport:
    """Collected violations of a candidate move; an empty report means the move is valid."""

    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str) -> None:
        self.violations.append(Violation(code, message))

    def codes(self) -> List[str]:
        return [v.code for v in self.violations]

    def raise_if_invalid(self) -> None:
        if not self.valid:
            raise InvalidBallError(self)

    def __str__(self):
        return "valid" if self.valid else "; ".join(map(str, self.violations))


@dataclass(frozen=True)
class Ball:
    """
    A basic closed ball of the sequence space, stored by the prefix of its centre
    sequence. Coordinates past the index are unconstrained and are not stored.
    """

    prefix: Tuple[FiniteCompact, ...]
    radius: Fraction

    kind: ClassVar[BallKind]

    def __post_init__(self):
        object.__setattr__(
            self, "prefix", tuple(k if isinstance(k, FiniteCompact) else FiniteCompact(tuple(k)) for k in self.prefix)
        )
        object.__setattr__(self, "radius", to_scalar(self.radius))

    @property
    def index(self) -> int:
        return len(self.prefix)

    def center(self, n: int) -> FiniteCompact:
        """1-based access to the centre sequence."""
        return self.prefix[n - 1]

    def union(self) -> FiniteCompact:
        return union_all(self.prefix)

    def with_radius(self, radius: Fraction) -> "Ball":
        return type(self)(self.prefix, radius)

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "prefix": [k.to_list() for k in self.prefix],
            "index": self.index,
            "radius": format_scalar(self.radius),
        }

    def __str__(self):
        sets = ",".join(str(k) for k in self.prefix)
        return f"[{sets}] {self.index} {format_scalar(self.radius)}"


@dataclass(frozen=True)
class ProductBall(Ball):
    kind: ClassVar[BallKind] = BallKind.PRODUCT


@dataclass(frozen=True)
class IncreasingBall(Ball):
    kind: ClassVar[BallKind] = BallKind.INCREASING


BALL_TYPES = {BallKind.PRODUCT: ProductBall, BallKind.INCREASING: IncreasingBall}


def ball_from_dict(data: Dict) -> Ball:
    kind = BallKind(data["kind"])
    prefix = tuple(FiniteCompact.from_list(k) for k in data["prefix"])
    if "index" in data and int(data["index"]) != len(prefix):
        raise UsageError(f"ball index {data['index']} does not match prefix length {len(prefix)}")
    return BALL_TYPES[kind](prefix, to_scalar(data["radius"]))


def _check_common(ball: Ball, space: Space, report: ValidityReport) -> None:
    if ball.index < 1:
        report.add("index", "the index must be a positive integer")
    if not 0 < ball.radius < 1:
        report.add("radius", f"radius {format_scalar(ball.radius)} is not in (0,1)")
    outside = [x for k in ball.prefix for x in k if not space.contains(x)]
    if outside:
        report.add("points", f"points outside {space}: {', '.join(map(format_scalar, outside))}")


def _check_separation(points: FiniteCompact, radius: Fraction, space: Space, report: ValidityReport) -> None:
    pair = closest_pair(space, points)
    if pair is not None and distance(space, *pair) < 3 * radius:
        x, y = pair
        report.add(
            "separation",
            f"points {format_scalar(x)} and {format_scalar(y)} are {format_scalar(distance(space, x, y))} apart,"
            f" less than 3r = {format_scalar(3 * radius)}",
        )


def validate_product(ball: ProductBall, space: Space = UNIT_INTERVAL) -> ValidityReport:
    report = ValidityReport()
    _check_common(ball, space, report)
    for (i, k), (j, l) in combinations(enumerate(ball.prefix, start=1), 2):
        shared = k & l
        if shared:
            report.add("disjoint", f"K_{i} and K_{j} share {shared}")
    _check_separation(ball.union(), ball.radius, space, report)
    return report


def validate_increasing(ball: IncreasingBall, space: Space = UNIT_INTERVAL) -> ValidityReport:
    report = ValidityReport()
    _check_common(ball, space, report)
    for n in range(2, ball.index + 1):
        if not ball.center(n - 1) <= ball.center(n):
            missing = ball.center(n - 1) - ball.center(n)
            report.add("increasing", f"L_{n - 1} is not contained in L_{n}: missing {missing}")
    if ball.index:
        _check_separation(ball.center(ball.index), ball.radius, space, report)
    return report


def validate(ball: Ball, space: Space = UNIT_INTERVAL) -> ValidityReport:
    if ball.kind is BallKind.PRODUCT:
        return validate_product(ball, space)
    return validate_increasing(ball, space)


def _legal_nesting(inner: Ball, outer: Ball, space: Space) -> bool:
    # triangle-inequality certificate for inner ⊂ outer
    if inner.index < outer.index or inner.radius > outer.radius:
        return False
    return all(
        hausdorff(space, inner.center(n), outer.center(n)) + inner.radius <= outer.radius
        for n in range(1, outer.index + 1)
    )


def legal_nesting_product(inner: ProductBall, outer: ProductBall, space: Space = UNIT_INTERVAL) -> bool:
    return _legal_nesting(inner, outer, space)


def legal_nesting_increasing(inner: IncreasingBall, outer: IncreasingBall, space: Space = UNIT_INTERVAL) -> bool:
    return _legal_nesting(inner, outer, space)


def legal_nesting(inner: Ball, outer: Ball, space: Space = UNIT_INTERVAL) -> bool:
    if inner.kind is not outer.kind:
        return False
    return _legal_nesting(inner, outer, space)


def nesting_diagnostic(inner: Ball, outer: Ball, space: Space = UNIT_INTERVAL) -> Optional[str]:
    """Why `inner` is not legally nested in `outer`, or None when it is."""
    if inner.kind is not outer.kind:
        return f"a {inner.kind.value} ball cannot answer a {outer.kind.value} ball"
    if inner.index < outer.index:
        return f"index {inner.index} is smaller than the previous index {outer.index}"
    if inner.radius > outer.radius:
        return f"radius {format_scalar(inner.radius)} exceeds the previous radius {format_scalar(outer.radius)}"
    for n in range(1, outer.index + 1):
        gap = hausdorff(space, inner.center(n), outer.center(n))
        if gap + inner.radius > outer.radius:
            return (
                f"at index {n}: d = {format_scalar(gap)} plus radius {format_scalar(inner.radius)}"
                f" exceeds {format_scalar(outer.radius)}"
            )
    return None


def contains_prefix(ball: Ball, sequence: Sequence[FiniteCompact], space: Space = UNIT_INTERVAL) -> bool:
    if len(sequence) < ball.index:
        raise InsufficientPrefixError(f"need {ball.index} sets to test membership, got {len(sequence)}")
    if ball.kind is BallKind.INCREASING and not all(a <= b for a, b in zip(sequence, sequence[1:])):
        return False
    return all(hausdorff(space, sequence[n - 1], ball.center(n)) <= ball.radius for n in range(1, ball.index + 1))


_LITERAL = re.compile(r"^\s*\[(?P<sets>.*)\]\s*,?\s*(?P<index>\d+)\s*,?\s*(?P<radius>-?\d+(?:\s*/\s*\d+)?)\s*$")
_SET = re.compile(r"\{([^{}]*)\}|∅")


def parse_ball(text: str, kind: Union[BallKind, str]) -> Ball:
    """
    Parse a ball literal such as ``[{0},{1/2}] 2 1/10`` (commas between the parts are
    optional, ``{}`` or ``∅`` is the empty set) or a JSON ball document.
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            return ball_from_dict(json.loads(text))
        except (ValueError, KeyError) as e:
            raise UsageError(f"malformed ball document: {e}") from e
    match = _LITERAL.match(text)
    if match is None:
        raise UsageError(f"malformed ball literal {text!r}; expected e.g. [{{0}},{{1/2}}] 2 1/10")
    sets = []
    for set_match in _SET.finditer(match.group("sets")):
        body = set_match.group(1) or ""
        sets.append(FiniteCompact(tuple(to_scalar(v) for v in body.split(",") if v.strip())))
    index = int(match.group("index"))
    if index != len(sets):
        raise UsageError(f"index {index} does not match the {len(sets)} sets given")
    return BALL_TYPES[BallKind(kind)](tuple(sets), to_scalar(match.group("radius").replace(" ", "")))
