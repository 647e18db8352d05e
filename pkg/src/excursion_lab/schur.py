"""Rectangular Schur functions and the checks built on them.

Two uses: F_k evaluated as a dual Jacobi-Trudi determinant in the
elementary symmetric functions of V = -U (Laurent in t), and, for numeric
alphabets, the rational generating function sum_k s_{k^a} z^k = P/Q.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Sequence, Tuple

from .ring import LAURENT, QQ, LaurentPoly, RingPoly, bareiss_det
from .stepset import StepSet


class AlphabetError(ValueError):
    pass


def e_spec(S: StepSet, i: int) -> LaurentPoly:
    """e_i(V) = w_{a-i}/w_a - [i = a]/(t w_a), with V the negated kernel roots."""
    a, n = S.a, S.a + S.b
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    inv_top = S.omega(a).inverse()
    value = S.omega(a - i) * inv_top
    if i == a:
        value = value - LaurentPoly.t().inverse() * inv_top
    return value


def _dual_jacobi_trudi(e: Sequence, a: int, k: int, ring):
    """det(e_{a+i-j})_{1<=i,j<=k} = s_{k^a}, given e_0..e_n."""
    n = len(e) - 1

    def entry(m: int):
        return e[m] if 0 <= m <= n else ring.zero

    M = [[entry(a + i - j) for j in range(k)] for i in range(k)]
    return bareiss_det(M, ring)


def f_via_jacobi_trudi(S: StepSet, k: int) -> LaurentPoly:
    """F_k as (-t w_a)^k s_{k^a}(V)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    e = [e_spec(S, i) for i in range(S.a + S.b + 1)]
    s = _dual_jacobi_trudi(e, S.a, k, LAURENT)
    return s * (LaurentPoly.t() * S.omega(S.a) * -1) ** k


@dataclass(frozen=True)
class NumericAlphabet:
    """Distinct nonzero rationals u_1..u_n."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise AlphabetError("alphabet is empty")
        if any(v == 0 for v in vals):
            raise AlphabetError("alphabet values must be nonzero")
        if len(set(vals)) != len(vals):
            raise AlphabetError("alphabet values must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.values)

    def elementary(self) -> list:
        """[e_0, ..., e_n] from the coefficients of prod (1 + u_i z)."""
        e = [Fraction(1)]
        for u in self.values:
            e = [(e[i] if i < len(e) else 0) + (u * e[i - 1] if i else 0) for i in range(len(e) + 1)]
        return e

    def subset_products(self, a: int) -> Dict[Tuple[int, ...], Fraction]:
        return {I: math.prod((self.values[i] for i in I), start=Fraction(1))
                for I in combinations(range(self.n), a)}

    def is_generic(self, a: int) -> bool:
        prods = list(self.subset_products(a).values())
        return len(set(prods)) == len(prods)


def random_alphabet(n: int, a: int, rng: random.Random, bound: int = 9) -> NumericAlphabet:
    """A random alphabet with small numerators/denominators whose a-products are distinct."""
    while True:
        vals = {Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)}
        vals.discard(Fraction(0))
        if len(vals) != n:
            continue
        alphabet = NumericAlphabet(tuple(sorted(vals)))
        if alphabet.is_generic(a):
            return alphabet


def rect_schur_numeric(alphabet: NumericAlphabet, a: int, k: int) -> Fraction:
    """s_{k^a}(u_1..u_n)."""
    if not 1 <= a <= alphabet.n:
        raise ValueError(f"need 1 <= a <= n, got a={a}, n={alphabet.n}")
    if k < 0:
        raise ValueError("k must be non-negative")
    return _dual_jacobi_trudi(alphabet.elementary(), a, k, QQ)


def subset_product_poly(alphabet: NumericAlphabet, a: int) -> RingPoly:
    """Q(z) = prod over a-subsets I of (1 - z u_I), multiplied out directly."""
    Q = RingPoly(QQ, [1])
    for prod in alphabet.subset_products(a).values():
        Q = Q * RingPoly(QQ, [1, -prod])
    return Q


def rect_schur_gf(alphabet: NumericAlphabet, a: int) -> Tuple[RingPoly, RingPoly]:
    """(P, Q) with sum_k s_{k^a} z^k = P(z)/Q(z).

    P is read off Q * sum_k s_{k^a} z^k below degree C(n,a) - n; the
    coefficients from there up to C(n,a) are verified to vanish.
    """
    n = alphabet.n
    if not 1 <= a <= n:
        raise ValueError(f"need 1 <= a <= n, got a={a}, n={n}")
    if a == n:
        e_n = alphabet.elementary()[n]
        return RingPoly(QQ, [1]), RingPoly(QQ, [1, -e_n])
    if not alphabet.is_generic(a):
        raise AlphabetError("alphabet not generic: two a-subset products coincide")
    d = math.comb(n, a)
    delta = d - n
    Q = subset_product_poly(alphabet, a)
    schur = RingPoly(QQ, [rect_schur_numeric(alphabet, a, k) for k in range(d + 1)])
    prod = (Q * schur).truncate(d)
    for k in range(delta + 1, d + 1):
        if prod.coeff(k):
            raise ArithmeticError(f"internal error: [z^{k}] Q * sum s_k z^k is nonzero")
    return prod.truncate(delta), Q


def p_leading_coefficient(alphabet: NumericAlphabet, a: int) -> Fraction:
    """Closed form of [z^(C(n,a)-n)] P: (-1)^(C(n,a)+ab-1) (u_1...u_n)^(C(n-1,a-1)-a)."""
    n = alphabet.n
    b = n - a
    sign = (-1) ** (math.comb(n, a) + a * b - 1)
    e_n = math.prod(alphabet.values, start=Fraction(1))
    return sign * e_n ** (math.comb(n - 1, a - 1) - a)


def p_at_inverse_subset(alphabet: NumericAlphabet, a: int, J: Sequence[int]) -> Fraction:
    """Closed form of P(1/u_J): product of (1 - u_I/u_J) over I with |I symdiff J| >= 4."""
    J = frozenset(J)
    prods = alphabet.subset_products(a)
    uJ = prods[tuple(sorted(J))]
    out = Fraction(1)
    for I, uI in prods.items():
        if len(J.symmetric_difference(I)) >= 4:
            out *= 1 - uI / uJ
    return out
