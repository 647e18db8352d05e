"""Bounded-height excursions via the transfer matrix.

``F_0 = 1`` and ``F_{k+1} = det(1 - t A^(k))`` where ``A^(k)`` is the
weighted adjacency matrix on levels 0..k; excursions of height at most k
are counted by ``F_k / F_{k+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .platypus import annihilator
from .ring import (
    LAURENT,
    QQ,
    LaurentPoly,
    RingPoly,
    RingSeries,
    bareiss_det,
    leading_minors,
    series_inverse,
)
from .stepset import StepSet


class RecurrenceError(ArithmeticError):
    """The product D(t,z) * sum F_k z^k fails to truncate where it must."""


@dataclass(frozen=True)
class TransferMatrix:
    k: int
    entries: Tuple[Tuple[LaurentPoly, ...], ...]

    def size(self) -> int:
        return self.k + 1


def transfer_matrix(S: StepSet, k: int) -> TransferMatrix:
    """Entry (i, j) is the weight of step j - i, or 0 when j - i is not a step."""
    if k < 0:
        raise ValueError("height must be non-negative")
    weights = {s: w.as_laurent() for s, w in S.steps}
    zero = LaurentPoly()
    rows = tuple(
        tuple(weights.get(j - i, zero) for j in range(k + 1)) for i in range(k + 1)
    )
    return TransferMatrix(k, rows)


def _identity_minus_tA(S: StepSet, size: int) -> List[List[LaurentPoly]]:
    t = LaurentPoly.t()
    A = transfer_matrix(S, size - 1).entries
    return [
        [(1 if i == j else 0) - t * A[i][j] for j in range(size)] for i in range(size)
    ]


def f_polynomial(S: StepSet, k: int) -> LaurentPoly:
    """F_k = det(1 - t A^(k-1)), with F_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return LAURENT.one
    return bareiss_det(_identity_minus_tA(S, k), LAURENT)


def f_polynomials(S: StepSet, kmax: int) -> List[LaurentPoly]:
    """[F_0, ..., F_kmax].

    F_j is the leading j x j principal minor of 1 - t A^(kmax-1), so one
    elimination pass yields them all.
    """
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    if kmax == 0:
        return [LAURENT.one]
    minors = leading_minors(_identity_minus_tA(S, kmax), LAURENT)
    Fs = [LAURENT.one] + minors
    for k, F in enumerate(Fs):
        if not F.is_polynomial() or F.constant_term() != 1:
            raise ArithmeticError(f"internal error: F_{k}(0) != 1 or F_{k} not a polynomial")
    return Fs


def _dense(F: LaurentPoly, order: int) -> RingSeries:
    return RingSeries(QQ, F.to_dense(order), order)


def bounded_series(S: StepSet, k: int, order: int) -> RingSeries:
    """Expansion of F_k / F_{k+1} in t up to t^order (excursions of height <= k)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    Fs = f_polynomials(S, k + 1)
    return _dense(Fs[k], order) * series_inverse(_dense(Fs[k + 1], order), order)


def _f_series(Fs: List[LaurentPoly]) -> RingPoly:
    return RingPoly(LAURENT, Fs)


def numerator(S: StepSet, D: Optional[RingPoly] = None, Fs: Optional[List[LaurentPoly]] = None) -> RingPoly:
    """N(t, z) = D(t, z) * sum_k F_k z^k, which is a polynomial of degree <= delta.

    The product is computed a+b coefficients past d = C(a+b, a); every
    coefficient strictly between delta and that margin must vanish.
    """
    if D is None:
        D = annihilator(S)
    d, delta = S.d, S.delta
    top = d + S.a + S.b
    if Fs is None or len(Fs) <= top:
        Fs = f_polynomials(S, top)
    prod = (D * _f_series(Fs[: top + 1])).truncate(top)
    for k in range(delta + 1, top + 1):
        if prod.coeff(k):
            raise RecurrenceError(
                f"recurrence does not close: z^{k} coefficient is {prod.coeff(k).render()}"
            )
    N = prod.truncate(delta)
    if N.coeff(0) != LAURENT.one:
        raise RecurrenceError("recurrence does not close: N(t, 0) != 1")
    return N


def check_recurrence(S: StepSet, kmax: int, D: Optional[RingPoly] = None,
                     Fs: Optional[List[LaurentPoly]] = None) -> bool:
    """Whether sum_i [z^i]D * F_{k-i} = 0 for every delta < k <= kmax (F_i = 0 for i < 0)."""
    if D is None:
        D = annihilator(S)
    if Fs is None or len(Fs) <= kmax:
        Fs = f_polynomials(S, kmax)
    for k in range(S.delta + 1, kmax + 1):
        total = LAURENT.zero
        for i in range(min(D.degree, k) + 1):
            c = D.coeff(i)
            if c:
                total = total + c * Fs[k - i]
        if total:
            return False
    return True


@dataclass(frozen=True)
class RationalGF:
    """sum_k F_k z^k = N(t, z) / D(t, z)."""

    numerator: RingPoly
    denominator: RingPoly
    delta: int

    def recurrence_coefficients(self) -> Tuple[LaurentPoly, ...]:
        return self.denominator.coeffs


def rational_gf(S: StepSet) -> RationalGF:
    D = annihilator(S)
    return RationalGF(numerator(S, D), D, S.delta)


def exact_quotient(P: RingPoly, F: RingPoly) -> Optional[RingPoly]:
    """P / F in Q[t, 1/t][z] when F divides P exactly, else None."""
    try:
        return P.exact_quotient(F)
    except ArithmeticError:
        return None
