"""Weighted step sets, the kernel polynomial K(u) and the platypus input L(z)."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from .ring import LAURENT, LaurentPoly, RingPoly


class StepSetError(ValueError):
    """Invalid step-set text or an invalid step system."""


@dataclass(frozen=True)
class Weight:
    """A step weight ``coeff * t^t_exponent``."""

    coeff: Fraction
    t_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if not self.coeff:
            raise StepSetError("step weights must be nonzero")
        if self.t_exponent < 0:
            raise StepSetError("the t-exponent of a weight must be non-negative")

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.coeff, self.t_exponent)

    def render(self) -> str:
        if self.t_exponent == 0:
            return str(self.coeff)
        if self.t_exponent == 1 and self.coeff == 1:
            return "t"
        return f"{self.coeff}*t^{self.t_exponent}"


WeightLike = Union[Weight, int, Fraction, str]


def _as_weight(w: WeightLike) -> Weight:
    if isinstance(w, Weight):
        return w
    if isinstance(w, str):
        return parse_weight(w)
    return Weight(Fraction(w))


@dataclass(frozen=True)
class StepSet:
    """A finite set of integer steps, each carrying a monomial weight.

    ``a`` is the largest step, ``-b`` the smallest; both must exist with
    ``a >= 1`` and ``b >= 1``.
    """

    steps: Tuple[Tuple[int, Weight], ...]

    def __post_init__(self):
        seen = set()
        for s, w in self.steps:
            if s in seen:
                raise StepSetError(f"duplicate step {s}")
            seen.add(s)
            if not isinstance(w, Weight):
                raise StepSetError(f"weight of step {s} is not a Weight")
        object.__setattr__(self, "steps", tuple(sorted(self.steps)))
        if not self.steps or self.steps[-1][0] < 1 or self.steps[0][0] > -1:
            raise StepSetError(
                "degenerate step set: need at least one positive and one negative step"
            )

    @classmethod
    def from_dict(cls, steps: Mapping[int, WeightLike]) -> "StepSet":
        return cls(tuple((int(s), _as_weight(w)) for s, w in steps.items()))

    @property
    def a(self) -> int:
        return self.steps[-1][0]

    @property
    def b(self) -> int:
        return -self.steps[0][0]

    @property
    def d(self) -> int:
        """Degree C(a+b, a) of the annihilating polynomial."""
        return math.comb(self.a + self.b, self.a)

    @property
    def delta(self) -> int:
        """Degree bound d - a - b of the numerator N(t, z)."""
        return self.d - self.a - self.b

    def as_dict(self) -> Dict[int, Weight]:
        return dict(self.steps)

    def weight(self, s: int) -> Weight | None:
        return self.as_dict().get(s)

    def omega(self, s: int) -> LaurentPoly:
        """The weight of step ``s`` as a Laurent polynomial (zero if absent)."""
        w = self.weight(s)
        return w.as_laurent() if w is not None else LaurentPoly()

    def step_gcd(self) -> int:
        return math.gcd(*(s for s, _ in self.steps))

    def mirror(self) -> "StepSet":
        """The step set -S with each step keeping its weight."""
        return StepSet(tuple((-s, w) for s, w in self.steps))

    def render(self) -> str:
        return ",".join(f"{s}:{w.render()}" for s, w in reversed(self.steps))

    def __str__(self) -> str:
        return self.render()


_RAT = r"([+-]?\d+)(?:/(\d+))?"
_ITEM = re.compile(r"^([+-]?\d+):(.+)$")
_W_RAT = re.compile(rf"^{_RAT}$")
_W_MONO = re.compile(rf"^{_RAT}\*t\^(\d+)$")


def _rat(num: str, den: str | None) -> Fraction:
    if den is not None and int(den) == 0:
        raise StepSetError("zero denominator in weight")
    return Fraction(int(num), int(den) if den else 1)


def parse_weight(text: str) -> Weight:
    text = re.sub(r"\s+", "", text)
    if text == "t":
        return Weight(Fraction(1), 1)
    m = _W_RAT.match(text)
    if m:
        return Weight(_rat(m.group(1), m.group(2)), 0)
    m = _W_MONO.match(text)
    if m:
        return Weight(_rat(m.group(1), m.group(2)), int(m.group(3)))
    raise StepSetError(f"malformed weight {text!r}")


def parse_stepset(text: str) -> StepSet:
    """Parse ``"s:w,s:w,..."``, e.g. ``"2:t,1:1,-1:1,-2:t"``.

    Weights are ``RAT``, ``t`` or ``RAT*t^m``. Whitespace is ignored.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise StepSetError("empty step set")
    items = []
    for chunk in compact.split(","):
        m = _ITEM.match(chunk)
        if not m:
            raise StepSetError(f"malformed step item {chunk!r}")
        items.append((int(m.group(1)), parse_weight(m.group(2))))
    return StepSet(tuple(items))


def normalize_steps(S: StepSet) -> StepSet:
    """Divide every step by the gcd of the steps, keeping the weights."""
    g = S.step_gcd()
    if g <= 1:
        return S
    return StepSet(tuple((s // g, w) for s, w in S.steps))


def require_primitive(S: StepSet) -> StepSet:
    g = S.step_gcd()
    if g > 1:
        raise StepSetError(
            f"steps share the common factor {g}; rescale them with normalize_steps "
            "(or pass --normalize on the command line)"
        )
    return S


def kernel_poly(S: StepSet) -> RingPoly:
    """K(u) = u^b (1 - t P(u)) as a polynomial in u over Q[t, 1/t]."""
    b = S.b
    coeffs = [LaurentPoly() for _ in range(S.a + b + 1)]
    t = LaurentPoly.t()
    for s, w in S.steps:
        coeffs[s + b] = coeffs[s + b] - t * w.as_laurent()
    coeffs[b] = coeffs[b] + 1
    return RingPoly(LAURENT, coeffs)


def char_poly_L(S: StepSet) -> RingPoly:
    """L(z) = sum_s (w_s/w_a) z^(a-s) - z^a/(t w_a), whose constant term is 1."""
    a = S.a
    inv_top = S.omega(a).inverse()
    coeffs = [LaurentPoly() for _ in range(a + S.b + 1)]
    for s, w in S.steps:
        coeffs[a - s] = coeffs[a - s] + w.as_laurent() * inv_top
    coeffs[a] = coeffs[a] - LaurentPoly.t().inverse() * inv_top
    return RingPoly(LAURENT, coeffs)
