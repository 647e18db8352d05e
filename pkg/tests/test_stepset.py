from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import BASKET_T, DYCK, step_sets
from excursion_lab.ring import LAURENT, LaurentPoly, RingPoly, parse_bivariate
from excursion_lab.stepset import (
    StepSet,
    StepSetError,
    Weight,
    char_poly_L,
    kernel_poly,
    normalize_steps,
    parse_stepset,
    require_primitive,
)

t = LaurentPoly.t()


def test_parse_dyck():
    S = parse_stepset(DYCK)
    assert (S.a, S.b, S.d, S.delta) == (1, 1, 2, 0)


def test_parse_two_step_five_three():
    S = parse_stepset("5:1,-3:1")
    assert (S.a, S.b, S.d) == (5, 3, 56)


def test_parse_basketball():
    S = parse_stepset(BASKET_T)
    assert (S.a, S.b, S.d, S.delta) == (2, 2, 6, 2)
    assert S.weight(2) == Weight(Fraction(1), 1)
    assert S.weight(-1) == Weight(Fraction(1), 0)


def test_parse_weight_grammar():
    S = parse_stepset(" 3 : -2/3*t^4 , 0:5, -1 : 7/2 ")
    assert S.weight(3) == Weight(Fraction(-2, 3), 4)
    assert S.weight(0) == Weight(Fraction(5))
    assert S.weight(-1) == Weight(Fraction(7, 2))


@pytest.mark.parametrize("text, message", [
    ("1:1", "degenerate"),
    ("-1:1,-2:1", "degenerate"),
    ("0:1", "degenerate"),
    ("1:1,1:2,-1:1", "duplicate"),
    ("1:x,-1:1", "malformed weight"),
    ("1:t^2,-1:1", "malformed weight"),
    ("1:0,-1:1", "nonzero"),
    ("1;1,-1:1", "malformed step"),
    ("", "empty"),
    ("1:1/0,-1:1", "denominator"),
])
def test_parse_errors(text, message):
    with pytest.raises(StepSetError, match=message):
        parse_stepset(text)


def test_normalize():
    assert normalize_steps(StepSet.from_dict({2: 1, -2: 1})) == parse_stepset("1:1,-1:1")
    S = parse_stepset(DYCK)
    assert normalize_steps(S) is S
    assert normalize_steps(StepSet.from_dict({4: 1, -2: 1})) == StepSet.from_dict({2: 1, -1: 1})
    weighted = StepSet.from_dict({4: "t", 0: 3, -2: "1/2"})
    assert normalize_steps(weighted) == StepSet.from_dict({2: "t", 0: 3, -1: "1/2"})


def test_require_primitive():
    with pytest.raises(StepSetError, match="normalize"):
        require_primitive(StepSet.from_dict({2: 1, -4: 1}))


@given(step_sets())
def test_normalize_idempotent(S):
    once = normalize_steps(S)
    assert normalize_steps(once) == once


@given(step_sets())
def test_render_parse_roundtrip(S):
    assert parse_stepset(S.render()) == S


def test_kernel_examples():
    assert kernel_poly(parse_stepset(DYCK)) == RingPoly(LAURENT, [-t, 1, -t])
    assert kernel_poly(parse_stepset(BASKET_T)) == parse_bivariate(
        "u^2 - t*(t + u + u^3 + t*u^4)".replace("u", "z"))
    K = kernel_poly(parse_stepset("5:1,-3:1"))
    assert K == parse_bivariate("z^3 - t*(1 + z^8)")


def test_char_poly_examples():
    assert char_poly_L(parse_stepset(DYCK)) == parse_bivariate("1 + z^2 - z/t")
    for a in (1, 2, 3, 4):
        S = StepSet.from_dict({a: 1, -1: 1})
        assert char_poly_L(S) == parse_bivariate(f"1 + z^{a + 1} - z^{a}/t")
    assert char_poly_L(parse_stepset(BASKET_T)) == parse_bivariate("1 + z/t + z^3/t + z^4 - z^2/t^2")


@settings(max_examples=60)
@given(step_sets())
def test_degrees_and_kernel_L_relation(S):
    a, b = S.a, S.b
    K, L = kernel_poly(S), char_poly_L(S)
    assert K.degree == a + b
    assert L.degree == a + b
    assert L.coeff(0) == 1
    assert K.coeff(0) == -t * S.omega(-b)
    assert K.coeff(a + b) == -t * S.omega(a)
    # K(u) = -t w_a u^(a+b) L(1/u): coefficient of u^j is -t w_a [z^(a+b-j)] L
    scale = -t * S.omega(a)
    for j in range(a + b + 1):
        assert K.coeff(j) == scale * L.coeff(a + b - j)


def test_mirror():
    S = parse_stepset("3:t,1:2,-2:1")
    M = S.mirror()
    assert (M.a, M.b) == (2, 3)
    assert M.weight(-3) == S.weight(3)
    assert M.mirror() == S
