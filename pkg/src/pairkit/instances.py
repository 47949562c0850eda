"""Constructors for the standard pairs.

A nontrivial finite ordered group does not exist, so pairs built on (Q, +) or
(Z, +) are symbolic: their laws are checked on a window of the group with all
arithmetic done exactly in the infinite structure.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import total_ordering

from .core import Pair
from .puiseux import Series, parse_series


@total_ordering
class _NegInf:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "-inf"

    __str__ = __repr__


NEG_INF = _NegInf()


def fmt_q(x):
    if x is NEG_INF:
        return "-inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else str(x)


def parse_q(text):
    text = text.strip()
    if text == "-inf":
        return NEG_INF
    return Fraction(text)


def _is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class OrderedMonoid:
    """Totally ordered commutative monoid, optionally with an absorbing minimum."""

    def __init__(self, name, op, identity, bottom=None, elements=None, sample=None,
                 fmt=fmt_q, parse=parse_q, contains=None):
        self.name = name
        self.op = op
        self.identity = identity
        self.bottom = bottom
        self.elements = tuple(elements) if elements is not None else None
        self._sample = tuple(sample) if sample is not None else None
        self.fmt = fmt
        self.parse = parse
        self._contains = contains

    def sample(self):
        return self.elements if self.elements is not None else self._sample

    def contains(self, g):
        if self.elements is not None:
            return g in self.elements
        return self._contains(g) if self._contains else True


def max_plus_monoid(integral=False, window=range(-2, 4)):
    """(Q, +) or (Z, +) with -inf adjoined; ``window`` picks the sample."""
    def op(a, b):
        if a is NEG_INF or b is NEG_INF:
            return NEG_INF
        return a + b

    def contains(g):
        if g is NEG_INF:
            return True
        if integral:
            return _is_rational(g) and Fraction(g).denominator == 1
        return _is_rational(g)

    sample = [NEG_INF] + [Fraction(i) for i in window]
    if not integral:
        sample.append(Fraction(1, 2))
    return OrderedMonoid("(Z,+)" if integral else "(Q,+)", op, Fraction(0), bottom=NEG_INF,
                         sample=sample, contains=contains)


def boolean_monoid():
    return OrderedMonoid("{0,1}", lambda a, b: a * b, 1, bottom=0, elements=[0, 1],
                         fmt=str, parse=int)


# elementary pairs -------------------------------------------------------------


def make_vandiver(n, nulls="top"):
    """{0, 1, ..., n} with addition and multiplication truncated at n.

    T = {1}.  ``nulls="top"`` gives A0 = {0, n}; ``nulls="upper"`` gives
    A0 = {0, 2, ..., n}, the variant in which 1 + 1 is null.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if nulls == "top":
        A0 = {0, n}
        name = f"vandiver-{n}"
    elif nulls == "upper":
        A0 = {0} | set(range(2, n + 1))
        name = f"vandiver-upper-{n}"
    else:
        raise ValueError(nulls)
    return Pair(name, add=lambda a, b: min(a + b, n), mul=lambda a, b: min(a * b, n),
                zero=0, one=1, dag_unit=1, tangible={1}, null=A0,
                elements=range(n + 1), fmt=str, info={"family": "vandiver", "n": n})


def make_boolean():
    """The Boolean semifield 1 + 1 = 1, with every element null (e = 1)."""
    p = make_vandiver(1)
    p.name = "boolean"
    p.info = {"family": "boolean"}
    return p


def make_max_plus():
    """(Q ∪ {-inf}, max, +) as the trivial pair; it has no Property N."""
    G = max_plus_monoid()
    sample = G.sample()
    return Pair("max-plus-q", add=max, mul=G.op, zero=NEG_INF, one=Fraction(0),
                dag_unit=Fraction(0), tangible=_is_rational,
                null=lambda b: b is NEG_INF, sample=sample,
                contains=lambda b: b is NEG_INF or _is_rational(b),
                leq=lambda a, b: a == b, fmt=fmt_q, parse=parse_q,
                info={"family": "max-plus", "lacks": "trivial pair lacks Property N"})


def make_naturals(bound=5):
    """(N, {0}); the sample is {0, ..., bound}."""
    def contains(b):
        return isinstance(b, int) and not isinstance(b, bool) and b >= 0
    return Pair("naturals", add=lambda a, b: a + b, mul=lambda a, b: a * b, zero=0, one=1,
                dag_unit=1, tangible=lambda b: contains(b) and b > 0, null=lambda b: b == 0,
                sample=range(bound + 1), contains=contains, leq=lambda a, b: a == b,
                fmt=str, parse=int, info={"family": "naturals", "lacks": "trivial pair lacks Property N"})


def make_field(q):
    """The prime field F_q as the classical pair (F, {0}) with 1dag = -1."""
    return Pair(f"field-F{q}", add=lambda a, b: (a + b) % q, mul=lambda a, b: (a * b) % q,
                zero=0, one=1, dag_unit=q - 1, tangible=set(range(1, q)), null={0},
                elements=range(q), fmt=str, info={"family": "field", "q": q})


def make_example_e(order=1):
    """T0 ∪ {e} with a1 + a2 = e for all tangibles; T is cyclic of the given order."""
    tang = ["1"] + ["t" if i == 1 else f"t^{i}" for i in range(1, order)]
    exp = {name: i for i, name in enumerate(tang)}

    def add(a, b):
        if a == "0":
            return b
        if b == "0":
            return a
        return "e"

    def mul(a, b):
        if a == "0" or b == "0":
            return "0"
        if a == "e" or b == "e":
            return "e"
        return tang[(exp[a] + exp[b]) % order]

    return Pair(f"ex-e-{order}", add=add, mul=mul, zero="0", one="1", dag_unit="1",
                tangible=set(tang), null={"0", "e"}, elements=["0"] + tang + ["e"],
                info={"family": "ex-e"})


def make_example_infinity():
    """T0 ∪ {inf}, a + a = a and a + a' = inf otherwise; T = {1, t}."""
    def add(a, b):
        if a == "0":
            return b
        if b == "0" or a == b:
            return a
        return "inf"

    def mul(a, b):
        if a == "0" or b == "0":
            return "0"
        if a == "inf" or b == "inf":
            return "inf"
        return "1" if a == b else "t"

    return Pair("ex-infinity", add=add, mul=mul, zero="0", one="1", dag_unit="t",
                tangible={"1", "t"}, null={"0", "inf"}, elements=["0", "1", "t", "inf"],
                info={"family": "ex-infinity"})


# supertropical ---------------------------------------------------------------


def make_supertropical(T, G, mu=None, name=None):
    """Supertropical pair T(T; G) with ghost map mu: T -> G.

    Elements are ('t', a) for a in T and ('g', g) for g in G; the zero is the
    ghost of G's bottom.  A0 is the ghost layer, which makes the pair shallow,
    bipotent up to ghosts, and of the first kind.
    """
    mu = mu or (lambda a: a)
    zero = ("g", G.bottom)
    one = ("t", G.identity)

    def nu(x):
        return x[1] if x[0] == "g" else mu(x[1])

    def add(x, y):
        gx, gy = nu(x), nu(y)
        if gx > gy:
            return x
        if gx < gy:
            return y
        return ("g", gx)

    def mul(x, y):
        if x[0] == "t" and y[0] == "t":
            g = G.op(x[1], y[1])
            return zero if g == G.bottom else ("t", g)
        return ("g", G.op(nu(x), nu(y)))

    def fmt(x):
        if x == zero:
            return G.fmt(G.bottom)
        return G.fmt(x[1]) + ("g" if x[0] == "g" else "")

    def parse(text):
        if text.endswith("g"):
            return ("g", G.parse(text[:-1]))
        g = G.parse(text)
        return zero if g == G.bottom else ("t", g)

    def contains(x):
        if not (isinstance(x, tuple) and len(x) == 2 and x[0] in ("t", "g")):
            return False
        if x[0] == "t":
            if x[1] == G.bottom:
                return False
            return x[1] in T if T is not None else G.contains(x[1])
        return G.contains(x[1])

    def leq(a, b):
        return a == b or (b[0] == "g" and nu(b) >= nu(a))

    tangs = T if T is not None else [g for g in G.sample() if g != G.bottom]
    carrier = [zero] + [("t", a) for a in tangs] + [("g", g) for g in G.sample() if g != G.bottom]
    finite = G.elements is not None
    return Pair(name or f"supertropical-{G.name}", add=add, mul=mul, zero=zero, one=one,
                dag_unit=one, tangible=lambda x: x[0] == "t", null=lambda x: x[0] == "g",
                elements=carrier if finite else None, sample=None if finite else carrier,
                contains=contains, leq=None if finite else leq, fmt=fmt, parse=parse,
                info={"family": "supertropical", "nu": nu})


def make_supertropical_boolean():
    """{0, 1, 1g} with 1 + 1 = 1g."""
    return make_supertropical([1], boolean_monoid(), name="supertropical-boolean")


def make_supertropical_q():
    return make_supertropical(None, max_plus_monoid(), name="supertropical-q")


def make_supertropical_z(window=range(-2, 3)):
    return make_supertropical(None, max_plus_monoid(True, window), name="supertropical-z")


# tropical extension -------------------------------------------------------------


def make_tropical_extension(L, G, name=None):
    """L ⋊ G: the larger G-coordinate wins a sum, ties add in L.

    The carrier is (L minus zero) x G plus an adjoined zero (None); G is the
    group part of an ordered monoid (its bottom is not used as a layer).
    """
    def norm(l, g):
        return None if l == L.zero or g == G.bottom else (l, g)

    def add(x, y):
        if x is None:
            return y
        if y is None:
            return x
        if x[1] > y[1]:
            return x
        if x[1] < y[1]:
            return y
        return norm(L.add(x[0], y[0]), x[1])

    def mul(x, y):
        if x is None or y is None:
            return None
        return norm(L.mul(x[0], y[0]), G.op(x[1], y[1]))

    def null(x):
        return x is None or L.is_null(x[0])

    def leq(x, y):
        if x == y:
            return True
        if x is None:
            return null(y)
        if y is None:
            return False
        if y[1] > x[1]:
            return null(y)
        return y[1] == x[1] and any(L.add(x[0], c) == y[0] for c in L.nulls())

    def fmt(x):
        return "0" if x is None else f"({L.fmt(x[0])},{G.fmt(x[1])})"

    def contains(x):
        return x is None or (isinstance(x, tuple) and len(x) == 2 and L.contains(x[0])
                             and x[0] != L.zero and x[1] != G.bottom and G.contains(x[1]))

    layers = [g for g in G.sample() if g != G.bottom]
    carrier = [None] + [(l, g) for l in L.elements if l != L.zero for g in layers]
    finite = G.elements is not None
    return Pair(name or f"trop-ext-{L.name}-{G.name}", add=add, mul=mul, zero=None,
                one=(L.one, G.identity), dag_unit=(L.dag_unit, G.identity),
                tangible=lambda x: x is not None and L.is_tangible(x[0]), null=null,
                elements=carrier if finite else None, sample=None if finite else carrier,
                contains=contains, leq=None if finite else leq,
                distributive=L.distributive, fmt=fmt,
                info={"family": "trop-ext", "layers": L.name})


def make_trop_ext_sample(window=range(-2, 3)):
    """V2 ⋊ (Z, +) checked on a window of layers."""
    return make_tropical_extension(make_vandiver(2), max_plus_monoid(True, window),
                                   name="trop-ext")


# doubling and function pairs ----------------------------------------------------


def make_doubled(A, name=None):
    """A x A with the twist product; A0 is the diagonal, 1dag = (0, 1)."""
    z, o = A.zero, A.one

    def add(x, y):
        return (A.add(x[0], y[0]), A.add(x[1], y[1]))

    def mul(x, y):
        return (A.add(A.mul(x[0], y[0]), A.mul(x[1], y[1])),
                A.add(A.mul(x[0], y[1]), A.mul(x[1], y[0])))

    def tangible(x):
        return (A.is_tangible(x[0]) and x[1] == z) or (x[0] == z and A.is_tangible(x[1]))

    def contains(x):
        return isinstance(x, tuple) and len(x) == 2 and A.contains(x[0]) and A.contains(x[1])

    def fmt(x):
        return f"({A.fmt(x[0])},{A.fmt(x[1])})"

    def parse(text):
        inner = text.strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ValueError(text)
        depth = 0
        for i, ch in enumerate(inner[1:-1], start=1):
            depth += ch in "([{"
            depth -= ch in ")]}"
            if ch == "," and depth == 0:
                return (A.parse(inner[1:i]), A.parse(inner[i + 1:-1]))
        raise ValueError(text)

    base = A.sample()
    carrier = list(itertools.product(base, repeat=2))
    return Pair(name or f"doubled-{A.name}", add=add, mul=mul, zero=(z, z), one=(o, z),
                dag_unit=(z, o), tangible=tangible, null=lambda x: x[0] == x[1],
                elements=carrier if A.finite else None, sample=None if A.finite else carrier,
                contains=contains, distributive=A.distributive, commutative=A.commutative,
                fmt=fmt, parse=parse, info={"family": "doubled", "base": A})


def absolute_value(A, x):
    """||(b1, b2)|| = b1 + b2, a homomorphism from the doubled pair onto A."""
    return A.add(x[0], x[1])


def project_doubled(A, x):
    """(b1, b2) -> b1 + 1dag b2; multiplicative when (1dag)^2 = 1 in A."""
    return A.add(x[0], A.dag(x[1]))


def make_function_pair(A, labels, name=None):
    """(A^S, A0^S); tangibles are tangible functions supported at one point."""
    labels = tuple(labels)
    k = len(labels)
    z = A.zero

    def tangible(x):
        support = [b for b in x if b != z]
        return len(support) == 1 and A.is_tangible(support[0])

    carrier = list(itertools.product(A.sample(), repeat=k))
    return Pair(name or f"function-{A.name}-{k}",
                add=lambda x, y: tuple(A.add(a, b) for a, b in zip(x, y)),
                mul=lambda x, y: tuple(A.mul(a, b) for a, b in zip(x, y)),
                zero=(z,) * k, one=(A.one,) * k, dag_unit=(A.dag_unit,) * k,
                tangible=tangible, null=lambda x: all(A.is_null(b) for b in x),
                elements=carrier if A.finite else None, sample=None if A.finite else carrier,
                distributive=A.distributive,
                fmt=lambda x: "[" + ",".join(A.fmt(b) for b in x) + "]",
                info={"family": "function", "labels": labels})


# series ----------------------------------------------------------------------


def puiseux_sample():
    f = parse_series("3*t^2 + 9*t^4")
    g = parse_series("-3*t^2 + 7*t^3 + 7*t^4")
    h = parse_series("5*t^3 + 7*t^4")
    out = [Series(), f, g, h, -f, f + g, f + h, parse_series("1"), parse_series("-1"),
           parse_series("t"), parse_series("t^(1/2)"), parse_series("2*t^(-1) + t")]
    return out


def make_puiseux():
    """The field of Puiseux series over Q as the classical pair (K, {0})."""
    return Pair("puiseux", add=lambda a, b: a + b, mul=lambda a, b: a * b,
                zero=Series(), one=Series.const(1), dag_unit=Series.const(-1),
                tangible=lambda b: isinstance(b, Series) and not b.is_zero(),
                null=lambda b: b.is_zero(), sample=puiseux_sample(),
                contains=lambda b: isinstance(b, Series), leq=lambda a, b: a == b,
                fmt=str, parse=parse_series, info={"family": "puiseux"})


def minus_val(target):
    """-val: series -> supertropical element; 0 goes to the zero."""
    def f(b):
        v = b.val()
        return target.zero if v is None else ("t", -v)
    return f
