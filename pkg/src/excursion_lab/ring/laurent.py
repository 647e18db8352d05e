"""Laurent polynomials in a single variable ``t`` with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, Fraction]


class LaurentPoly:
    """A finite sum ``sum c_k t^k`` with ``k`` any integer.

    Instances are immutable. Zero coefficients are never stored, so the
    empty map is the unique zero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[Tuple[int, Scalar]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: Dict[int, Fraction] = {}
        for exp, coeff in items:
            if coeff:
                exp = int(exp)
                total = clean.get(exp, 0) + Fraction(coeff)
                if total:
                    clean[exp] = total
                else:
                    clean.pop(exp, None)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Fraction]) -> "LaurentPoly":
        # caller guarantees: no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, exp: int) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no minimal exponent")
        return next(iter(self._terms))

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no maximal exponent")
        return next(reversed(self._terms))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True when no negative power of t occurs."""
        return not self._terms or self.min_exp() >= 0

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def to_dense(self, order: int | None = None) -> list:
        """Coefficients of t^0..t^order as a list; requires no negative powers."""
        if not self.is_polynomial():
            raise ValueError("negative powers of t cannot be written densely")
        top = self.max_exp() if self._terms else 0
        if order is None:
            order = top
        out = [Fraction(0)] * (order + 1)
        for e, c in self._terms.items():
            if e <= order:
                out[e] = c
        return out

    def evaluate(self, value: Scalar) -> Fraction:
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * value ** e
        return total

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly._raw({})
        out: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar or by a Laurent monomial."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of Laurent polynomial by zero")
            return LaurentPoly._raw({e: c / other for e, c in self._terms.items()})
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def inverse(self) -> "LaurentPoly":
        if len(self._terms) != 1:
            raise ArithmeticError("not invertible: only Laurent monomials are units")
        (e, c), = self._terms.items()
        return LaurentPoly._raw({-e: 1 / c})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other`` in Q[t, 1/t]; raises if it does not exist."""
        if not other:
            raise ZeroDivisionError("exact division by zero")
        if not self:
            return self
        if other.is_monomial():
            return self * other.inverse()
        # normalise both to genuine polynomials with nonzero constant term,
        # then long-divide from the top
        num_shift = self.min_exp()
        den_shift = other.min_exp()
        rem = {e - num_shift: c for e, c in self._terms.items()}
        den = {e - den_shift: c for e, c in other._terms.items()}
        den_top = max(den)
        den_lead = den[den_top]
        quot: Dict[int, Fraction] = {}
        while rem:
            top = max(rem)
            if top < den_top:
                raise ArithmeticError("inexact division of Laurent polynomials")
            q = rem[top] / den_lead
            k = top - den_top
            quot[k] = q
            for e, c in den.items():
                v = rem.get(e + k, 0) - q * c
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        return LaurentPoly._raw(quot).shift(num_shift - den_shift)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"

    def monomial_terms(self, var: str = "t"):
        """(coefficient, factor list) pairs in increasing exponent order."""
        for e, c in self._terms.items():
            yield c, ([] if e == 0 else [_power(var, e)])

    def render(self, var: str = "t") -> str:
        from .render import format_terms

        return format_terms(self.monomial_terms(var))


def _power(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"
