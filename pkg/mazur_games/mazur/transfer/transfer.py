"""
Strategy transfers between the product game and the increasing game.

A move of one game is turned into a move of the other so that the stage
conditions hold between the two: indices never shrink, radii at least halve,
cumulative unions of the product prefix sit inside the increasing prefix and
the final sets agree. Points are tracked through affiliations (the bucket of
a point in the product ball and the first index at which it appears in the
increasing ball) and parents (the unique point of the previous move within the
previous transfer's radius).
"""

from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import Dict, Iterable, Optional, Tuple

from mazur.errors import AmbiguousParentError, DegenerateRadiusError, MissingParentError, TransferError
from mazur.geometry.balls import IncreasingBall, ProductBall, validate_increasing, validate_product
from mazur.geometry.hyperspace import FiniteCompact, hausdorff, union_all
from mazur.geometry.space import distance, format_scalar, Space, UNIT_INTERVAL
from mazur.transfer.faults import Faults, NO_FAULTS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Affiliation:
    first: int
    second: int

    def to_list(self):
        return [self.first, self.second]


AffiliationTable = Dict[Fraction, Affiliation]


@dataclass(frozen=True)
class ParentMap:
    """child -> parent, every pair within `threshold`."""

    mapping: Dict[Fraction, Fraction] = field(default_factory=dict)
    threshold: Fraction = Fraction(0)

    def __contains__(self, child) -> bool:
        return child in self.mapping

    def __getitem__(self, child) -> Fraction:
        return self.mapping[child]

    def to_dict(self) -> Dict:
        return {
            "threshold": format_scalar(self.threshold),
            "mapping": {format_scalar(c): format_scalar(p) for c, p in sorted(self.mapping.items())},
        }


def find_parent(
    space: Space, x: Fraction, candidates: Iterable[Fraction], threshold: Fraction, closed: bool = True
) -> Fraction:
    if closed:
        within = [y for y in candidates if distance(space, x, y) <= threshold]
    else:
        within = [y for y in candidates if distance(space, x, y) < threshold]
    if not within:
        raise MissingParentError(f"no parent within {format_scalar(threshold)} of {format_scalar(x)}")
    if len(within) > 1:
        raise AmbiguousParentError(
            f"{format_scalar(x)} has {len(within)} parents within {format_scalar(threshold)}: "
            + ", ".join(map(format_scalar, within))
        )
    return within[0]


def bucket_of(ball: ProductBall, x: Fraction) -> Optional[int]:
    for n, k in enumerate(ball.prefix, start=1):
        if x in k:
            return n
    return None


def least_index(ball: IncreasingBall, x: Fraction) -> Optional[int]:
    for n, l in enumerate(ball.prefix, start=1):
        if x in l:
            return n
    return None


def product_affiliations(kball: ProductBall, ktilde: IncreasingBall) -> AffiliationTable:
    """Affiliations of the points of ⋃Kₙ: bucket in K, least index in K̃."""
    table = {}
    for x in kball.union():
        second = least_index(ktilde, x)
        if second is None:
            raise TransferError(f"{format_scalar(x)} of the product ball is missing from its transfer")
        table[x] = Affiliation(bucket_of(kball, x), second)
    return table


def increasing_affiliations(ltilde: ProductBall, lball: IncreasingBall) -> AffiliationTable:
    """Affiliations of the points of L_b: bucket in L̃, least index in L."""
    table = {}
    for x in lball.center(lball.index):
        first = bucket_of(ltilde, x)
        if first is None:
            raise TransferError(f"{format_scalar(x)} of the increasing ball is missing from its transfer")
        table[x] = Affiliation(first, least_index(lball, x))
    return table


def forward_transfer_first(
    kball: ProductBall, space: Space = UNIT_INTERVAL, faults: Faults = NO_FAULTS
) -> IncreasingBall:
    validate_product(kball, space).raise_if_invalid()
    radius = kball.radius if faults.rtilde_equals_r else kball.radius / 2
    prefix = tuple(union_all(kball.prefix[:n]) for n in range(1, kball.index + 1))
    return IncreasingBall(prefix, radius)


def forward_transfer(
    kball: ProductBall,
    prev_lball: IncreasingBall,
    prev_ltilde: ProductBall,
    space: Space = UNIT_INTERVAL,
    faults: Faults = NO_FAULTS,
) -> Tuple[IncreasingBall, AffiliationTable, ParentMap]:
    """
    Transfer a product move answering `prev_ltilde` (the transfer of `prev_lball`).

    Points of K₁…K_b̃ inherit the second affiliation of their parent in L_b and are
    placed into K̃ₙ when that affiliation is at most n; past b̃ the cumulative unions
    are used.
    """
    validate_product(kball, space).raise_if_invalid()
    gap = prev_lball.radius - prev_ltilde.radius
    if gap <= 0:
        raise DegenerateRadiusError(f"s - s̃ = {format_scalar(gap)} is not positive")
    radius = kball.radius if faults.rtilde_equals_r else min(gap, kball.radius / 2)
    b_tilde = prev_ltilde.index
    candidates = prev_lball.center(prev_lball.index)

    parents: Dict[Fraction, Fraction] = {}
    second: Dict[Fraction, int] = {}
    for n in range(1, min(kball.index, b_tilde) + 1):
        for x in kball.center(n):
            y = find_parent(space, x, candidates, prev_ltilde.radius, closed=not faults.open_threshold)
            parents[x] = y
            second[x] = least_index(prev_lball, y)
            logger.debug(f"forward: {format_scalar(x)} in K_{n} has parent {format_scalar(y)}, level {second[x]}")

    prefix = []
    for n in range(1, kball.index + 1):
        if n <= b_tilde:
            prefix.append(FiniteCompact(tuple(x for x, level in second.items() if level <= n)))
        else:
            prefix.append(union_all(kball.prefix[:n]))
    ktilde = IncreasingBall(tuple(prefix), radius)
    return ktilde, product_affiliations(kball, ktilde), ParentMap(parents, prev_ltilde.radius)


def reverse_transfer_first(
    lball: IncreasingBall, space: Space = UNIT_INTERVAL, faults: Faults = NO_FAULTS
) -> ProductBall:
    validate_increasing(lball, space).raise_if_invalid()
    prefix = (lball.center(1),) + tuple(lball.center(n) - lball.center(n - 1) for n in range(2, lball.index + 1))
    return ProductBall(prefix, lball.radius / 2)


def reverse_transfer(
    lball: IncreasingBall,
    prev_kball: ProductBall,
    prev_ktilde: IncreasingBall,
    space: Space = UNIT_INTERVAL,
    faults: Faults = NO_FAULTS,
) -> Tuple[ProductBall, AffiliationTable, ParentMap]:
    """
    Transfer an increasing move answering `prev_ktilde` (the transfer of `prev_kball`).

    A point x of L_b first appearing at level n₂ goes to bucket n₂ when n₂ > ã.
    Otherwise its parent y in K̃_ã decides: x joins y's bucket when y also first
    appears at level n₂, and the extra bucket b̃ = b + 1 otherwise.
    """
    validate_increasing(lball, space).raise_if_invalid()
    gap = prev_kball.radius - prev_ktilde.radius
    if gap <= 0:
        raise DegenerateRadiusError(f"r - r̃ = {format_scalar(gap)} is not positive")
    radius = min(gap, lball.radius / 2)
    b_tilde = lball.index + 1
    a_tilde = prev_ktilde.index
    candidates = prev_ktilde.center(a_tilde)
    k_table = product_affiliations(prev_kball, prev_ktilde)

    parents: Dict[Fraction, Fraction] = {}
    buckets: Dict[int, list] = {n: [] for n in range(1, b_tilde + 1)}
    for x in lball.center(lball.index):
        level = least_index(lball, x)
        if level > a_tilde:
            first = level
        else:
            y = find_parent(space, x, candidates, prev_ktilde.radius, closed=not faults.open_threshold)
            parents[x] = y
            if y not in k_table:
                raise TransferError(f"parent {format_scalar(y)} is not a point of the product move")
            if k_table[y].second == level or faults.skip_dummy_bucket:
                first = k_table[y].first
            else:
                first = b_tilde
            logger.debug(f"reverse: {format_scalar(x)} at level {level} has parent {format_scalar(y)}, bucket {first}")
        buckets[first].append(x)

    ltilde = ProductBall(tuple(FiniteCompact(tuple(buckets[n])) for n in range(1, b_tilde + 1)), radius)
    return ltilde, increasing_affiliations(ltilde, lball), ParentMap(parents, prev_ktilde.radius)


def forward_claim(
    ktilde: IncreasingBall, prev_lball: IncreasingBall, prev_ltilde: ProductBall, space: Space = UNIT_INTERVAL
) -> bool:
    """d(K̃ₙ, Lₙ) ≤ s̃ for n = 1…b."""
    if ktilde.index < prev_lball.index:
        return False
    bound = prev_ltilde.radius
    b = prev_lball.index
    return all(hausdorff(space, ktilde.center(n), prev_lball.center(n)) <= bound for n in range(1, b + 1))


def reverse_claim(
    ltilde: ProductBall, prev_kball: ProductBall, prev_ktilde: IncreasingBall, space: Space = UNIT_INTERVAL
) -> bool:
    """d(L̃ₙ, Kₙ) ≤ r̃ for n = 1…a."""
    if ltilde.index < prev_kball.index:
        return False
    bound = prev_ktilde.radius
    a = prev_kball.index
    return all(hausdorff(space, ltilde.center(n), prev_kball.center(n)) <= bound for n in range(1, a + 1))
