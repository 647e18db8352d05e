"""Products of a-subsets of inverse roots via power sums (the platypus algorithm).

Given ``L(z) = prod_k (1 - z U_k)`` of degree n, the polynomial
``Q(z) = prod_{|I|=a} (1 - z U_I)`` is obtained without ever touching the
roots: power sums of the U_k come from ``log(1/L)``, Newton's identities
packaged as one polynomial ``Phi_a`` turn them into ``log Q``, and a final
``exp`` returns Q, exactly, because Q has degree C(n, a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .ring import (
    LAURENT,
    LaurentPoly,
    MultiPoly,
    Ring,
    RingPoly,
    RingSeries,
    format_terms,
    multi_ring,
    multipoly_to_json,
    series_exp,
    series_log,
)
from .stepset import StepSet, char_poly_L

#: refuse Q(z) of degree beyond this (C(14, 5) = 2002, C(14, 6) = 3003)
MAX_DEGREE = 3003


class PlatypusError(ValueError):
    """Invalid arguments to the platypus algorithm."""


@lru_cache(maxsize=None)
def phi_elementary(a: int) -> MultiPoly:
    """Phi_a with e_a = Phi_a(p_1, ..., p_a), as a polynomial in p_1..p_a."""
    if a < 1:
        raise PlatypusError("phi_elementary needs a >= 1")
    R = multi_ring(a, "p")
    # e_a = [z^a] exp(-sum_i (-z)^i p_i / i)
    f = [R.zero] + [R.gen(i) * ((-1) ** (i + 1)) / i for i in range(1, a + 1)]
    return series_exp(RingSeries(R, f), a).coeff(a)


def power_sums(L: RingPoly, count: int) -> list:
    """[p_1(U), ..., p_count(U)] for the inverse roots U of L, via ``-i [z^i] log L``."""
    if L.coeff(0) != L.ring.one:
        raise PlatypusError(f"L(0) must be 1, got {L.coeff(0)!r}")
    logs = series_log(L, count)
    return [logs.coeff(i) * (-i) for i in range(1, count + 1)]


def _check_size(n: int, a: int) -> int:
    if not 1 <= a <= n:
        raise PlatypusError(f"need 1 <= a <= n, got a={a}, n={n}")
    d = math.comb(n, a)
    if d > MAX_DEGREE:
        raise PlatypusError(f"C({n},{a}) = {d} exceeds the limit of {MAX_DEGREE}")
    return d


def _platypus(L: RingPoly, n: int, a: int) -> RingPoly:
    ring = L.ring
    d = _check_size(n, a)
    p = power_sums(L, a * d)
    phi = phi_elementary(a)
    log_q: List = [ring.zero]
    for i in range(1, d + 1):
        args = [p[i * j - 1] for j in range(1, a + 1)]
        log_q.append(-ring.divide_int(phi.evaluate(args, one=ring.one), i))
    return series_exp(RingSeries(ring, log_q, d), d).to_poly()


def platypus_q(L: RingPoly, a: int) -> RingPoly:
    """Q(z) = prod over a-subsets I of (1 - z U_I), where L(z) = prod (1 - z U_k)."""
    n = L.degree
    if n < 1:
        raise PlatypusError("L must have positive degree")
    if a > n:
        raise PlatypusError(f"a={a} exceeds deg L = {n}")
    Q = _platypus(L, n, a)
    # deg L = n means the product of all U_k is nonzero, so Q is of full degree
    if Q.degree != math.comb(n, a):
        raise ArithmeticError(
            f"platypus output has degree {Q.degree}, expected C({n},{a}) = {math.comb(n, a)}"
        )
    return Q


def annihilator(S: StepSet) -> RingPoly:
    """D(t, z) = Q((-1)^(a+1) t w_a z), a polynomial with D(t, E(t)) = 0."""
    a = S.a
    Q = platypus_q(char_poly_L(S), a)
    scale = LaurentPoly.t() * S.omega(a) * ((-1) ** (a + 1))
    D = Q.scale_variable(scale)
    for k, c in enumerate(D.coeffs):
        if not c.is_polynomial():
            raise ArithmeticError(
                f"internal error: z^{k} coefficient of D keeps negative t-powers: {c.render()}"
            )
    if D.degree != S.d or D.coeff(0) != LAURENT.one:
        raise ArithmeticError("internal error: D has the wrong degree or constant term")
    return D


@dataclass(frozen=True)
class PlethysmExpansion:
    """e_k[e_a] for k = 0..C(n, a), each in the elementary basis e_1..e_n."""

    a: int
    n: int
    coefficients: Tuple[MultiPoly, ...]
    restrict: Optional[FrozenSet[int]] = None

    def q_poly(self) -> RingPoly:
        """Q(z) = sum_k (-z)^k e_k[e_a]."""
        R = multi_ring(self.n, "e")
        return RingPoly(R, [c * ((-1) ** k) for k, c in enumerate(self.coefficients)])

    def render(self, var: str = "z") -> str:
        """Q(z) in multiplicative index notation, e.g. ``1 - e_2*z + e_{3,1}*z^2``."""
        terms = []
        for k, c in enumerate(self.q_poly().coeffs):
            zf = [] if k == 0 else [var if k == 1 else f"{var}^{k}"]
            for exp, coeff in c.sorted_terms():
                idx = [str(i + 1) for i in range(self.n - 1, -1, -1) for _ in range(exp[i])]
                if not idx:
                    ef = []
                elif len(idx) == 1:
                    ef = [f"e_{idx[0]}"]
                else:
                    ef = [f"e_{{{','.join(idx)}}}"]
                terms.append((coeff, ef + zf))
        return format_terms(terms)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "n": self.n,
            "restrict": sorted(self.restrict) if self.restrict is not None else None,
            "coefficients": [
                {"k": k, "terms": multipoly_to_json(c)} for k, c in enumerate(self.coefficients)
            ],
        }


def plethysm_elementary(a: int, n: int, restrict: Iterable[int] | None = None) -> PlethysmExpansion:
    """Expand every e_k[e_a] on n letters in the elementary basis.

    With ``restrict``, e_i is set to zero for i outside it before running the
    algorithm, which yields the expansion modulo the ideal of those e_i.
    """
    _check_size(n, a)
    keep = None
    if restrict is not None:
        keep = frozenset(int(i) for i in restrict)
        bad = [i for i in keep if not 1 <= i <= n]
        if bad:
            raise PlatypusError(f"restrict indices {sorted(bad)} outside 1..{n}")
    R = multi_ring(n, "e")
    L = [R.one] + [
        R.gen(i) * ((-1) ** i) if keep is None or i in keep else R.zero for i in range(1, n + 1)
    ]
    Q = _platypus(RingPoly(R, L), n, a)
    d = math.comb(n, a)
    coeffs = tuple(Q.coeff(k) * ((-1) ** k) for k in range(d + 1))
    return PlethysmExpansion(a=a, n=n, coefficients=coeffs, restrict=keep)


def substitute_alphabet(expansion: PlethysmExpansion, e_values: Sequence) -> list:
    """Evaluate each e_k[e_a] at numeric values of e_1..e_n."""
    return [c.evaluate(list(e_values)) for c in expansion.coefficients]
