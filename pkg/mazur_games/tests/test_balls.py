from fractions import Fraction
import json

import pytest

from helpers import increasing_ball, product_ball
from mazur.errors import InsufficientPrefixError, InvalidBallError, UsageError
from mazur.geometry.balls import (
    ball_from_dict,
    BallKind,
    contains_prefix,
    IncreasingBall,
    legal_nesting,
    legal_nesting_increasing,
    legal_nesting_product,
    nesting_diagnostic,
    parse_ball,
    ProductBall,
    validate,
    validate_increasing,
    validate_product,
)
from mazur.geometry.hyperspace import EMPTY, FiniteCompact


def test_parse_literal(worked_k1):
    assert worked_k1 == ProductBall((FiniteCompact.of(0), FiniteCompact.of("1/2")), Fraction(1, 10))
    assert worked_k1.index == 2 and worked_k1.radius == Fraction(1, 10)
    assert str(worked_k1) == "[{0/1},{1/2}] 2 1/10"
    assert parse_ball(str(worked_k1), BallKind.PRODUCT) == worked_k1
    assert parse_ball("[{0}, {1/2}], 2, 1/10", "product") == worked_k1


def test_parse_empty_sets_and_json(worked_l1):
    ball = product_ball("[{},∅,{1}] 3 1/4")
    assert ball.prefix == (EMPTY, EMPTY, FiniteCompact.of(1))
    assert parse_ball(json.dumps(worked_l1.to_dict()), BallKind.PRODUCT) == worked_l1
    assert isinstance(ball_from_dict(worked_l1.to_dict()), IncreasingBall)


@pytest.mark.parametrize(
    "text", ["[{0}] 2 1/10", "garbage", "[{0},{1/2}] 2 0.1", '{"kind": "product"}', '{"kind": "oval", "prefix": []}']
)
def test_parse_rejects_malformed_literals(text):
    with pytest.raises(UsageError):
        parse_ball(text, BallKind.PRODUCT)


def test_validate_product_examples(worked_k1):
    assert validate_product(worked_k1).valid
    crowded = validate_product(product_ball("[{0},{1/2}] 2 1/5"))
    assert crowded.codes() == ["separation"]
    assert "0/1 and 1/2" in str(crowded)
    assert "disjoint" in validate_product(product_ball("[{0},{0}] 2 1/10")).codes()


def test_validate_increasing_examples():
    assert validate_increasing(increasing_ball("[{0},{0,1/2}] 2 1/8")).valid
    assert validate_increasing(increasing_ball("[{0,1/2},{0}] 2 1/8")).codes() == ["increasing"]
    assert validate_increasing(increasing_ball("[{0},{0,1/4}] 2 1/10")).codes() == ["separation"]


def test_validate_common_conditions():
    assert "index" in validate(ProductBall((), Fraction(1, 10))).codes()
    assert "radius" in validate(product_ball("[{0}] 1 1")).codes()
    assert "points" in validate(product_ball("[{2}] 1 1/10")).codes()


def test_invalid_report_raises_with_the_report():
    report = validate(product_ball("[{0},{0}] 2 1/10"))
    with pytest.raises(InvalidBallError) as excinfo:
        report.raise_if_invalid()
    assert excinfo.value.report is report


def test_legal_nesting_examples(worked_k2, worked_l1):
    assert legal_nesting_product(worked_k2, product_ball("[{0},{1/2},{1/30}] 3 1/400"))
    assert legal_nesting_product(worked_k2, worked_k2)
    assert not legal_nesting_product(product_ball("[{1/2}] 1 1/10"), product_ball("[{0}] 1 1/10"))
    outer = increasing_ball("[{0},{0,1/2}] 2 1/20")
    assert legal_nesting_increasing(worked_l1, outer)
    assert not legal_nesting_increasing(outer, worked_l1)
    assert not legal_nesting(worked_l1, product_ball("[{0},{0,1/2}] 2 1/20"))


def test_shrinking_in_place_is_always_legal(worked_k1):
    assert legal_nesting(worked_k1.with_radius(worked_k1.radius / 2), worked_k1)


def test_nesting_diagnostic_names_the_problem(worked_k1, worked_k2):
    assert nesting_diagnostic(worked_k1.with_radius(Fraction(1, 20)), worked_k1) is None
    assert "exceeds the previous radius" in nesting_diagnostic(worked_k1.with_radius(Fraction(1, 5)), worked_k1)
    assert "smaller than the previous index" in nesting_diagnostic(worked_k1, worked_k2)
    assert "at index 1" in nesting_diagnostic(product_ball("[{1/2},{0}] 2 1/20"), worked_k1)


def test_contains_prefix_examples():
    ball = product_ball("[{0}] 1 1/10")
    assert contains_prefix(ball, [FiniteCompact.of("1/20")])
    assert contains_prefix(ball, ball.prefix)
    assert not contains_prefix(ball, [EMPTY])
    with pytest.raises(InsufficientPrefixError):
        contains_prefix(product_ball("[{0},{1/2}] 2 1/10"), [FiniteCompact.of(0)])


def test_contains_prefix_requires_increasing_sequences(worked_l1):
    assert contains_prefix(worked_l1, worked_l1.prefix)
    assert not contains_prefix(worked_l1, [FiniteCompact.of(0, "1/30", "1/2"), FiniteCompact.of(0)])
