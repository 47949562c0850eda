"""Finite Puiseux series with rational exponents and rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction


class Series:
    """Finite sum of c * t^q, kept sorted by exponent with nonzero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        for q, c in terms:
            q, c = Fraction(q), Fraction(c)
            acc[q] = acc.get(q, 0) + c
        self.terms = tuple(sorted((q, c) for q, c in acc.items() if c != 0))

    @classmethod
    def const(cls, c):
        return cls([(0, c)])

    def __eq__(self, other):
        return isinstance(other, Series) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return Series(self.terms + other.terms)

    def __neg__(self):
        return Series((q, -c) for q, c in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return Series((q1 + q2, c1 * c2) for q1, c1 in self.terms for q2, c2 in other.terms)

    def is_zero(self):
        return not self.terms

    def val(self):
        """Lowest exponent; None stands for +infinity (the zero series)."""
        return self.terms[0][0] if self.terms else None

    def __repr__(self):
        return f"Series({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for q, c in self.terms:
            mono = "" if q == 0 else ("t" if q == 1 else f"t^{_num(q)}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = _num(c) + ("*" + mono if mono else "")
            out.append(s)
        text = " + ".join(out)
        return text.replace("+ -", "- ")


def _num(q):
    return str(q.numerator) if q.denominator == 1 else f"({q})"


_TERM = re.compile(r"^\s*([+-]?)\s*(\(?[-0-9/]+\)?)?\s*\*?\s*(t(?:\^\(?([-0-9/]+)\)?)?)?\s*$")


def parse_series(text):
    """Parse sums like ``3*t^2 + 9*t^4`` or ``-3*t^2 + 7*t^(3/2)``."""
    text = text.strip()
    if text == "0":
        return Series()
    pieces = re.split(r"\s+(?=[+-]\s)", text)
    terms = []
    for piece in pieces:
        m = _TERM.match(piece)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse series term {piece!r}")
        sign, coef, mono, exp = m.groups()
        c = Fraction(coef.strip("()")) if coef else Fraction(1)
        if sign == "-":
            c = -c
        q = Fraction(0) if mono is None else (Fraction(exp) if exp else Fraction(1))
        terms.append((q, c))
    return Series(terms)
