"""Canonical text and JSON forms for polynomials, and a parser for the text form.

Text form: terms in increasing exponent order (main variable first, then
the coefficient variable), coefficients written ``num/den`` with the
denominator omitted when it is 1, e.g. ``1 - z + t^2*z^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Tuple

from .base import LAURENT, MultiPolyRing
from .laurent import LaurentPoly
from .poly import RingPoly


def format_terms(terms: Iterable[Tuple[Fraction, List[str]]]) -> str:
    parts: List[str] = []
    for coeff, factors in terms:
        coeff = Fraction(coeff)
        if not coeff:
            continue
        mag = abs(coeff)
        mono = "*".join(factors)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _coeff_terms(c, ring, coeff_var):
    if isinstance(c, (int, Fraction)):
        return [(c, [])]
    if coeff_var is None:
        coeff_var = ring.prefix if isinstance(ring, MultiPolyRing) else "t"
    return list(c.monomial_terms(coeff_var))


def render_poly(p: RingPoly, var: str = "z", coeff_var: str | None = None) -> str:
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        zf = [] if k == 0 else [var if k == 1 else f"{var}^{k}"]
        for coeff, factors in _coeff_terms(c, p.ring, coeff_var):
            terms.append((coeff, factors + zf))
    return format_terms(terms)


def render_rational(q) -> str:
    return str(Fraction(q))


# -- JSON ----------------------------------------------------------------


def bivariate_to_json(p: RingPoly) -> list:
    """``[{"z": k, "t": [[exp, "num/den"], ...]}, ...]`` sorted by z then t."""
    out = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        if isinstance(c, LaurentPoly):
            t_terms = [[e, render_rational(v)] for e, v in c.items()]
        else:
            t_terms = [[0, render_rational(c)]]
        out.append({"z": k, "t": t_terms})
    return out


def bivariate_from_json(data: list) -> RingPoly:
    coeffs = {}
    for entry in data:
        coeffs[int(entry["z"])] = LaurentPoly({int(e): Fraction(v) for e, v in entry["t"]})
    top = max(coeffs, default=-1)
    return RingPoly(LAURENT, [coeffs.get(k, LaurentPoly()) for k in range(top + 1)])


def multipoly_to_json(p) -> list:
    """``[[exponent vector, "num/den"], ...]`` in canonical order."""
    return [[list(exp), render_rational(c)] for exp, c in p.sorted_terms()]


# -- parsing -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([tz])|(\*\*|[-+*/^()]))")


class PolyParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m or m.end() == pos:
                raise PolyParseError(f"unexpected character at {pos} in {text!r}")
            if m.group(1):
                self.tokens.append(("int", int(m.group(1))))
            elif m.group(2):
                self.tokens.append(("var", m.group(2)))
            else:
                op = m.group(3)
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> RingPoly:
        if not self.tokens:
            raise PolyParseError("empty polynomial")
        value = self.expr()
        if self.i != len(self.tokens):
            raise PolyParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self) -> RingPoly:
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RingPoly:
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                value = _divide(value, rhs, self.text)
        return value

    def unary(self) -> RingPoly:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RingPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            negative = False
            if self.peek() == ("op", "-"):
                self.take()
                negative = True
            kind, val = self.take()
            if kind != "int":
                raise PolyParseError(f"exponent must be an integer in {self.text!r}")
            if negative:
                if base.degree != 0 or not base.coeffs[0].is_monomial():
                    raise PolyParseError("negative powers only of t-monomials")
                return RingPoly(LAURENT, [base.coeffs[0] ** (-val)])
            return base ** val
        return base

    def atom(self) -> RingPoly:
        kind, val = self.take()
        if kind == "int":
            return RingPoly(LAURENT, [LaurentPoly.constant(val)])
        if kind == "var":
            if val == "t":
                return RingPoly(LAURENT, [LaurentPoly.t()])
            return RingPoly(LAURENT, [LaurentPoly(), LaurentPoly.constant(1)])
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolyParseError(f"unexpected token {val!r} in {self.text!r}")


def _divide(num: RingPoly, den: RingPoly, text: str) -> RingPoly:
    if den.degree != 0 or not den.coeffs[0].is_monomial():
        raise PolyParseError(f"can only divide by constants or t-monomials in {text!r}")
    return num * den.coeffs[0].inverse()


def parse_bivariate(text: str) -> RingPoly:
    """Parse a polynomial in ``z`` with Laurent-in-``t`` coefficients.

    Accepts the canonical rendering plus parentheses and ``^``/``**``
    powers, e.g. ``(1 + t^2*z)^2``.
    """
    return _Parser(text).parse()
