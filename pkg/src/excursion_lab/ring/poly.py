"""Dense univariate polynomials and truncated power series over a :class:`Ring`."""

from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

from .base import NotInvertibleError, Ring

#: degree of the zero polynomial
MINUS_INFINITY = -math.inf


class RingPoly:
    """Polynomial ``sum c_i z^i`` with coefficients in ``ring``.

    The coefficient tuple never ends in a zero; the zero polynomial has an
    empty tuple and degree :data:`MINUS_INFINITY`.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable = ()):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, ring: Ring, c, k: int) -> "RingPoly":
        return cls(ring, [ring.zero] * k + [c])

    @classmethod
    def constant(cls, ring: Ring, c) -> "RingPoly":
        return cls(ring, [c])

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: "RingPoly") -> None:
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, RingPoly):
            other = RingPoly.constant(self.ring, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RingPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "RingPoly":
        return RingPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, RingPoly):
            other = RingPoly.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RingPoly):
            return RingPoly(self.ring, [c * other for c in self.coeffs])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return RingPoly(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return RingPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingPoly":
        result = RingPoly.constant(self.ring, self.ring.one)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __call__(self, x):
        """Horner evaluation at ``x`` (any value that mixes with the coefficients)."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return self.ring.zero if acc is None else acc

    def scale_variable(self, c) -> "RingPoly":
        """The polynomial ``p(c*z)``."""
        out = []
        power = self.ring.one
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return RingPoly(self.ring, out)

    def truncate(self, n: int) -> "RingPoly":
        """Drop every term of degree > n."""
        return RingPoly(self.ring, self.coeffs[: n + 1])

    def divmod(self, divisor: "RingPoly"):
        """Long division by ``divisor``, dividing leading coefficients exactly.

        Raises ArithmeticError when a leading-coefficient division is inexact
        in the ring (so no quotient with ring coefficients exists).
        """
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        lead = divisor.coeffs[-1]
        quot = [ring.zero] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            if not rem[k]:
                continue
            q = ring.divide_exact(rem[k], lead)
            quot[k - dd] = q
            for j, c in enumerate(divisor.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - q * c
        return RingPoly(ring, quot), RingPoly(ring, rem)

    def exact_quotient(self, divisor: "RingPoly") -> "RingPoly":
        """``self / divisor``; raises ArithmeticError if the division leaves a remainder."""
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("polynomial division leaves a nonzero remainder")
        return q

    def render(self, var: str = "z", coeff_var: str | None = None) -> str:
        from .render import render_poly

        return render_poly(self, var, coeff_var)

    def __repr__(self) -> str:
        return f"RingPoly({self.ring.name}, {self.render()!r})"


class RingSeries:
    """Power series truncated after ``z^order``; coefficients 0..order are exact."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable, order: int | None = None):
        cs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([ring.zero] * (order + 1 - len(cs)))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: RingPoly, order: int) -> "RingSeries":
        return cls(p.ring, p.coeffs, order)

    def coeff(self, i: int):
        return self.coeffs[i]

    def to_poly(self) -> RingPoly:
        return RingPoly(self.ring, self.coeffs)

    def truncate(self, order: int) -> "RingSeries":
        return RingSeries(self.ring, self.coeffs, min(order, self.order))

    def _check(self, other) -> "RingSeries":
        if isinstance(other, RingPoly):
            other = RingSeries.from_poly(other, self.order)
        if not isinstance(other, RingSeries):
            return None
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return RingSeries(self.ring, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> "RingSeries":
        return RingSeries(self.ring, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (RingSeries, RingPoly)):
            other = self._check(other)
            n = min(self.order, other.order)
            out = [self.ring.zero] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return RingSeries(self.ring, out, n)
        return RingSeries(self.ring, [c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingSeries):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.order, self.coeffs))

    def render(self, var: str = "z", coeff_var: str | None = None) -> str:
        from .render import render_poly

        body = render_poly(self.to_poly(), var, coeff_var)
        return f"{body} + O({var}^{self.order + 1})"

    def __repr__(self) -> str:
        return f"RingSeries({self.ring.name}, {self.render()!r})"


def _as_coeffs(f: Union[RingSeries, RingPoly, Sequence], order: int, ring: Ring | None):
    """Coefficients 0..n of f and the order n actually known (min rule)."""
    if isinstance(f, RingSeries):
        n = min(order, f.order)
        return f.ring, list(f.coeffs[: n + 1]), n
    if isinstance(f, RingPoly):
        ring = f.ring
        cs = list(f.coeffs[: order + 1])
    else:
        if ring is None:
            raise TypeError("a ring is required for plain coefficient lists")
        cs = [ring.coerce(c) for c in f[: order + 1]]
    cs.extend([ring.zero] * (order + 1 - len(cs)))
    return ring, cs, order


def series_inverse(f, order: int, ring: Ring | None = None) -> RingSeries:
    """``1/f`` to the given order; the constant term of ``f`` must be a unit."""
    ring, fc, n = _as_coeffs(f, order, ring)
    try:
        g0 = ring.inverse(fc[0])
    except NotInvertibleError as exc:
        raise NotInvertibleError(f"not invertible: constant term {fc[0]!r} ({exc})") from None
    g = [g0]
    for m in range(1, n + 1):
        acc = ring.zero
        for k in range(1, m + 1):
            if fc[k]:
                acc = acc + fc[k] * g[m - k]
        g.append(-(g0 * acc))
    return RingSeries(ring, g, n)


def series_log(f, order: int, ring: Ring | None = None) -> RingSeries:
    """``log f`` for ``f(0) = 1`` over a Q-algebra."""
    ring, fc, n = _as_coeffs(f, order, ring)
    if not ring.qalgebra:
        raise TypeError(f"series_log needs a Q-algebra, got {ring.name}")
    if fc[0] != ring.one:
        raise ValueError(f"series_log: constant term must be 1, got {fc[0]!r}")
    g = [ring.zero]
    for m in range(1, n + 1):
        acc = fc[m] * m
        for k in range(1, m):
            if g[k] and fc[m - k]:
                acc = acc - g[k] * fc[m - k] * k
        g.append(ring.divide_int(acc, m))
    return RingSeries(ring, g, n)


def series_exp(f, order: int, ring: Ring | None = None) -> RingSeries:
    """``exp f`` for ``f(0) = 0`` over a Q-algebra."""
    ring, fc, n = _as_coeffs(f, order, ring)
    if not ring.qalgebra:
        raise TypeError(f"series_exp needs a Q-algebra, got {ring.name}")
    if fc[0]:
        raise ValueError(f"series_exp: constant term must be 0, got {fc[0]!r}")
    g = [ring.one]
    for m in range(1, n + 1):
        acc = ring.zero
        for k in range(1, m + 1):
            if fc[k] and g[m - k]:
                acc = acc + fc[k] * g[m - k] * k
        g.append(ring.divide_int(acc, m))
    return RingSeries(ring, g, n)
