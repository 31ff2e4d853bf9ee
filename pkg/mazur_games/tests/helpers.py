from fractions import Fraction

from hypothesis import strategies as st

from mazur.geometry.balls import BallKind, parse_ball
from mazur.geometry.hyperspace import FiniteCompact

points = st.fractions(min_value=0, max_value=1, max_denominator=48)
compacts = st.frozensets(points, max_size=5).map(lambda s: FiniteCompact(tuple(s)))
nonempty_compacts = st.frozensets(points, min_size=1, max_size=5).map(lambda s: FiniteCompact(tuple(s)))
radii = st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(999, 1000), max_denominator=1000)


def product_ball(text):
    return parse_ball(text, BallKind.PRODUCT)


def increasing_ball(text):
    return parse_ball(text, BallKind.INCREASING)
