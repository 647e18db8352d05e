"""The coefficient-ring contract shared by every higher module.

Elements of a ring are plain Python objects supporting ``+``, ``-``, ``*``
and equality (``Fraction``, ``LaurentPoly``, ``MultiPoly``, ``int``).  A
:class:`Ring` carries the pieces that cannot be recovered from an element
alone: the zero and one, unit inversion, exact division and, for
Q-algebras, division by a nonzero integer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .multi import MultiPoly


class NotInvertibleError(ArithmeticError):
    """Raised when a ring element that must be a unit is not one."""


class Ring:
    name = "ring"
    qalgebra = True

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        """Map an int or Fraction into the ring."""
        return self.one * x

    def is_zero(self, x) -> bool:
        return not x

    def inverse(self, x):
        raise NotImplementedError

    def divide_exact(self, x, y):
        """The unique q with q*y == x; raises ArithmeticError if none exists."""
        raise NotImplementedError

    def divide_int(self, x, n: int):
        if not self.qalgebra:
            raise TypeError(f"{self.name} is not a Q-algebra; cannot divide by {n}")
        if n == 0:
            raise ZeroDivisionError("division by the integer 0")
        return x / n

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"<ring {self.name}>"


class RationalField(Ring):
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def inverse(self, x):
        if not x:
            raise NotInvertibleError("not invertible: zero rational")
        return 1 / Fraction(x)

    def divide_exact(self, x, y):
        if not y:
            raise ZeroDivisionError("exact division by zero")
        return Fraction(x) / y


class IntegerRing(Ring):
    """Z: an integral domain that is not a Q-algebra (log/exp are refused)."""

    name = "ZZ"
    qalgebra = False

    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def inverse(self, x):
        if x not in (1, -1):
            raise NotInvertibleError(f"not invertible: {x} in ZZ")
        return x

    def divide_exact(self, x, y):
        q, r = divmod(x, y)
        if r:
            raise ArithmeticError(f"inexact division {x} / {y} in ZZ")
        return q


class LaurentRing(Ring):
    name = "QQ[t,1/t]"

    zero = LaurentPoly()
    one = LaurentPoly.constant(1)

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            return x
        return LaurentPoly.constant(x)

    def inverse(self, x):
        try:
            return x.inverse()
        except ArithmeticError as exc:
            raise NotInvertibleError(str(exc)) from None

    def divide_exact(self, x, y):
        return x.divide_exact(y)


class MultiPolyRing(Ring):
    """Q[x_1..x_n]; the symbol prefix only matters for display."""

    def __init__(self, n_vars: int, prefix: str = "e"):
        self.n_vars = n_vars
        self.prefix = prefix
        self.name = f"QQ[{prefix}_1..{prefix}_{n_vars}]"
        self._zero = MultiPoly(n_vars)
        self._one = MultiPoly.constant(n_vars, 1)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def coerce(self, x):
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.constant(self.n_vars, x)

    def gen(self, index: int) -> MultiPoly:
        return MultiPoly.var(self.n_vars, index)

    def inverse(self, x):
        if not x.is_monomial() or any(next(iter(x.terms))):
            raise NotInvertibleError("not invertible: only nonzero constants are units")
        return self.one / x.constant_term()

    def divide_exact(self, x, y):
        if y.is_monomial() and not any(next(iter(y.terms))):
            return x / y.constant_term()
        raise NotImplementedError("multivariate exact division by non-constants")


QQ = RationalField()
ZZ = IntegerRing()
LAURENT = LaurentRing()


@lru_cache(maxsize=None)
def multi_ring(n_vars: int, prefix: str = "e") -> MultiPolyRing:
    return MultiPolyRing(n_vars, prefix)
