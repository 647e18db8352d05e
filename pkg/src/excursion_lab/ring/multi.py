"""Sparse multivariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Exponent = Tuple[int, ...]


class MultiPoly:
    """Polynomial in ``n_vars`` symbols, stored as ``{exponent vector: coeff}``.

    Symbol ``i`` (0-based) is displayed as ``<prefix>_<i+1>``, so with the
    default prefix the symbols read e_1, ..., e_n.
    """

    __slots__ = ("n_vars", "_terms", "_hash")

    def __init__(self, n_vars: int, terms: Mapping[Exponent, Scalar] | Iterable[Tuple[Exponent, Scalar]] = ()):
        if n_vars < 1:
            raise ValueError("a multivariate polynomial needs at least one variable")
        self.n_vars = n_vars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[Exponent, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != n_vars:
                raise ValueError(f"exponent vector {exp} does not have length {n_vars}")
            if any(x < 0 for x in exp):
                raise ValueError(f"negative exponent in {exp}")
            if coeff:
                total = clean.get(exp, 0) + Fraction(coeff)
                if total:
                    clean[exp] = total
                else:
                    clean.pop(exp, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n_vars: int, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.n_vars = n_vars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, n_vars: int, c: Scalar) -> "MultiPoly":
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def var(cls, n_vars: int, index: int) -> "MultiPoly":
        """The symbol with 1-based ``index``."""
        if not 1 <= index <= n_vars:
            raise ValueError(f"variable index {index} outside 1..{n_vars}")
        exp = [0] * n_vars
        exp[index - 1] = 1
        return cls(n_vars, {tuple(exp): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def sorted_terms(self):
        """Terms in the canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n_vars, Fraction(0))

    def weighted_degrees(self) -> set:
        """Set of sum(i * exp[i-1]) over the terms (degree when var i has weight i)."""
        return {sum((i + 1) * x for i, x in enumerate(exp)) for exp in self._terms}

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.n_vars != self.n_vars:
                raise ValueError("mismatched number of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.n_vars, other)
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
        return MultiPoly._raw(self.n_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.n_vars, {e: -c for e, c in self._terms.items()})

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
                return MultiPoly._raw(self.n_vars, {})
            return MultiPoly._raw(self.n_vars, {e: c * other for e, c in self._terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.n_vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            return MultiPoly._raw(self.n_vars, {e: c / other for e, c in self._terms.items()})
        if isinstance(other, MultiPoly) and other.is_monomial():
            (exp, c), = other._terms.items()
            if any(exp):
                raise ArithmeticError("not invertible: non-constant monomial")
            return self / c
        return NotImplemented

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a multivariate polynomial")
        result = MultiPoly.constant(self.n_vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, values: Sequence, one=1):
        """Substitute ``values[i]`` for symbol ``i+1``.

        ``values`` may live in any ring whose elements support ``+``, ``*``
        and ``**``; ``one`` is that ring's unit.
        """
        if len(values) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} values, got {len(values)}")
        cache: Dict[Tuple[int, int], object] = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in cache:
                cache[key] = values[i] ** k
            return cache[key]

        total = None
        for exp, c in self._terms.items():
            term = one * c
            for i, k in enumerate(exp):
                if k:
                    term = term * power(i, k)
            total = term if total is None else total + term
        if total is None:
            return one * 0
        return total

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n_vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n_vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.n_vars}, {self.render()!r})"

    def monomial_terms(self, prefix: str = "e"):
        for exp, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(exp):
                if k == 1:
                    factors.append(f"{prefix}_{i + 1}")
                elif k:
                    factors.append(f"{prefix}_{i + 1}^{k}")
            yield c, factors

    def render(self, prefix: str = "e") -> str:
        from .render import format_terms

        return format_terms(self.monomial_terms(prefix))

    def render_indexed(self, prefix: str = "e") -> str:
        """Multiplicative index notation: e_3*e_1 is written e_{3,1}."""
        from .render import format_terms

        def factors(exp):
            idx = []
            for i in range(self.n_vars - 1, -1, -1):
                idx.extend([str(i + 1)] * exp[i])
            if not idx:
                return []
            if len(idx) == 1:
                return [f"{prefix}_{idx[0]}"]
            return [f"{prefix}_{{{','.join(idx)}}}"]

        return format_terms((c, factors(exp)) for exp, c in self.sorted_terms())
