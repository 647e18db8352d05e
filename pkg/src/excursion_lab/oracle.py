"""Brute-force ground truth: excursion counts by dynamic programming over levels.

Nothing here uses the algebraic machinery; it only walks the level graph.
A step s with weight c*t^m contributes c*t^(1+m) to a path's weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .ring import LaurentPoly, RingPoly
from .stepset import StepSet


@dataclass(frozen=True)
class CountSeries:
    """Coefficients of t^0..t^order of a weighted excursion count."""

    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.order + 1:
            raise ValueError("CountSeries needs order + 1 coefficients")

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def perturbed(self, n: int, delta=1) -> "CountSeries":
        """A copy with the t^n coefficient shifted by ``delta`` (for negative controls)."""
        cs = list(self.coefficients)
        cs[n] += delta
        return CountSeries(self.order, tuple(cs))


def _count(S: StepSet, order: int, height: Optional[int]) -> CountSeries:
    if order < 0:
        raise ValueError("order must be non-negative")
    top = order * S.a
    if height is not None:
        if height < 0:
            raise ValueError("height must be non-negative")
        top = min(top, height)
    moves = [(s, w.coeff, 1 + w.t_exponent) for s, w in S.steps]
    # walks[n][h]: total weight of non-negative walks of t-degree n ending at level h
    walks = [[Fraction(0)] * (top + 1) for _ in range(order + 1)]
    walks[0][0] = Fraction(1)
    for n in range(1, order + 1):
        row = walks[n]
        for s, c, cost in moves:
            if cost > n:
                continue
            prev = walks[n - cost]
            lo = max(0, s)
            hi = min(top, top + s)
            for h in range(lo, hi + 1):
                v = prev[h - s]
                if v:
                    row[h] += c * v
    return CountSeries(order, tuple(walks[n][0] for n in range(order + 1)))


def count_excursions(S: StepSet, order: int) -> CountSeries:
    """Weighted count of all excursions, coefficient of t^0..t^order."""
    return _count(S, order, None)


def count_bounded(S: StepSet, k: int, order: int) -> CountSeries:
    """Weighted count of excursions that never rise above level k."""
    return _count(S, order, k)


def _substitute(P: RingPoly, E: CountSeries) -> list:
    """Coefficients t^0..t^order of P(t, E(t)), Horner in truncated series."""
    N = E.order
    e = list(E.coefficients)
    acc = [Fraction(0)] * (N + 1)
    for c in reversed(P.coeffs):
        if not isinstance(c, LaurentPoly) or not c.is_polynomial():
            raise ValueError("coefficients must be polynomials in t with no negative powers")
        nxt = [Fraction(0)] * (N + 1)
        for i, x in enumerate(acc):
            if x:
                for j in range(N + 1 - i):
                    if e[j]:
                        nxt[i + j] += x * e[j]
        for exp, v in c.items():
            if exp <= N:
                nxt[exp] += v
        acc = nxt
    return acc


def verify_annihilation(D: RingPoly, E: CountSeries) -> bool:
    """True iff D(t, E(t)) vanishes through t^order."""
    return not any(_substitute(D, E))


@dataclass(frozen=True)
class NonzeroReport:
    order: int
    valuation: Optional[int]
    value: Optional[Fraction] = None

    @property
    def certified(self) -> bool:
        """Nonzero is certified only by an actual nonzero coefficient."""
        return self.valuation is not None

    def describe(self) -> str:
        if self.valuation is None:
            return f"all zero up to t^{self.order} (inconclusive)"
        return f"valuation {self.valuation} (coefficient {self.value})"


def verify_numerator_nonzero(N: RingPoly, E: CountSeries) -> NonzeroReport:
    """Lowest t-power with a nonzero coefficient in N(t, E(t)), if any up to the order."""
    coeffs = _substitute(N, E)
    for n, v in enumerate(coeffs):
        if v:
            return NonzeroReport(E.order, n, v)
    return NonzeroReport(E.order, None)
