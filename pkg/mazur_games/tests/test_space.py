from fractions import Fraction

from hypothesis import given
import pytest

from helpers import points
from mazur.errors import UsageError
from mazur.geometry.space import (
    closest_pair,
    distance,
    format_scalar,
    parse_space,
    separation,
    Space,
    to_scalar,
    UNIT_INTERVAL,
)


def test_to_scalar_parses_exact_rationals():
    assert to_scalar("1/2") == Fraction(1, 2)
    assert to_scalar(" 3 / 4 ") == Fraction(3, 4)
    assert to_scalar(3) == 3
    assert to_scalar(Fraction(2, 6)) == Fraction(1, 3)


@pytest.mark.parametrize("value", [0.5, "0.5", "1/0", "half", True])
def test_to_scalar_refuses_inexact_or_malformed_values(value):
    with pytest.raises(UsageError):
        to_scalar(value)


def test_format_scalar_is_lowest_terms():
    assert format_scalar(Fraction(2, 4)) == "1/2"
    assert format_scalar(Fraction(0)) == "0/1"
    assert to_scalar(format_scalar(Fraction(7, 3))) == Fraction(7, 3)


def test_parse_space():
    assert parse_space("unit-interval") == UNIT_INTERVAL
    grid = parse_space("finite-grid(5)")
    assert grid.grid == tuple(Fraction(k, 4) for k in range(5))
    assert parse_space("finite-grid:3").resolution == 3
    assert str(grid) == "finite-grid(5)"
    with pytest.raises(UsageError):
        parse_space("circle")


def test_finite_grid_edge_cases():
    assert Space.finite_grid(1).grid == (Fraction(0),)
    with pytest.raises(UsageError):
        Space.finite_grid(0)
    explicit = Space.with_points(["1/2", "0", "1/2"])
    assert explicit.grid == (Fraction(0), Fraction(1, 2))
    assert explicit.contains(Fraction(1, 2)) and not explicit.contains(Fraction(1, 4))


def test_unit_interval_membership():
    assert UNIT_INTERVAL.contains(Fraction(0)) and UNIT_INTERVAL.contains(Fraction(1))
    assert not UNIT_INTERVAL.contains(Fraction(11, 10))
    assert not UNIT_INTERVAL.contains(Fraction(-1, 10))


def test_separation_and_closest_pair():
    pts = [Fraction(0), Fraction(1, 2), Fraction(3, 4)]
    assert closest_pair(UNIT_INTERVAL, pts) == (Fraction(1, 2), Fraction(3, 4))
    assert separation(UNIT_INTERVAL, pts) == Fraction(1, 4)
    assert separation(UNIT_INTERVAL, [Fraction(1, 3)]) == 1
    assert separation(UNIT_INTERVAL, []) == 1
    assert closest_pair(UNIT_INTERVAL, [Fraction(1, 3)]) is None


@given(points, points, points)
def test_interval_metric_axioms(x, y, z):
    assert distance(UNIT_INTERVAL, x, y) == distance(UNIT_INTERVAL, y, x)
    assert (distance(UNIT_INTERVAL, x, y) == 0) == (x == y)
    assert distance(UNIT_INTERVAL, x, z) <= distance(UNIT_INTERVAL, x, y) + distance(UNIT_INTERVAL, y, z)
