import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from excursion_lab.ring import LaurentPoly
from excursion_lab.stepset import StepSet, parse_stepset

DYCK = "1:1,-1:1"
TWO_THREE = "3:1,-2:1"
FOUR_THREE = "4:1,-3:1"
BASKET_T = "2:t,1:1,-1:1,-2:t"
BASKET_ONE = "2:1,1:1,-1:1,-2:1"


def unit_battery():
    """Every primitive step set inside {-3..3}\\{0} with unit weights."""
    pos, neg = [1, 2, 3], [-1, -2, -3]
    out = []
    for i in range(1, 4):
        for P in combinations(pos, i):
            for j in range(1, 4):
                for N in combinations(neg, j):
                    steps = P + N
                    if math.gcd(*steps) == 1:
                        out.append(StepSet.from_dict({s: 1 for s in steps}))
    return out


def full_battery():
    return unit_battery() + [parse_stepset(BASKET_T), parse_stepset(BASKET_ONE)]


@pytest.fixture
def dyck():
    return parse_stepset(DYCK)


@pytest.fixture
def basket():
    return parse_stepset(BASKET_T)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent_polys(draw, min_exp=-3, max_exp=3, max_terms=4):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(st.integers(min_exp, max_exp))] = draw(small_fractions)
    return LaurentPoly(terms)


@st.composite
def step_sets(draw, max_a=3, max_b=3, weighted=True):
    a = draw(st.integers(1, max_a))
    b = draw(st.integers(1, max_b))
    inner = draw(st.sets(st.integers(-b + 1, a - 1)))
    weight = st.sampled_from(["1", "2", "1/2", "t", "3*t^2", "-1"]) if weighted else st.just("1")
    steps = {a: draw(weight), -b: draw(weight)}
    for s in inner:
        steps[s] = draw(weight)
    return StepSet.from_dict(steps)
