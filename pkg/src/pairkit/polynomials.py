"""Sparse polynomials over a pair: convolution, roots, divisibility.

One ring class covers three key types: ints (one variable), exponent tuples
(several commuting variables) and words (tuples of variable indices, for
noncommutative identities).  Coefficient sums are always formed in ascending
key order so results are reproducible even when addition is only
associative up to the carrier's own rules.
"""

from __future__ import annotations

import itertools
import re

from .core import BoundExceeded, Report

SEARCH_CAP = 10 ** 6


class Poly:
    __slots__ = ("ring", "items")

    def __init__(self, ring, items):
        self.ring = ring
        self.items = items  # sorted tuple of (key, coefficient), no zeros

    def coeffs(self):
        return dict(self.items)

    def coeff(self, key):
        for k, c in self.items:
            if k == key:
                return c
        return self.ring.pair.zero

    def keys(self):
        return [k for k, _ in self.items]

    @property
    def degree(self):
        if not self.items:
            return -1
        return max(self.ring.key_degree(k) for k, _ in self.items)

    def is_zero(self):
        return not self.items

    def leading(self):
        return self.coeff(self.degree) if self.items else self.ring.pair.zero

    def __eq__(self, other):
        return isinstance(other, Poly) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __add__(self, other):
        return self.ring.add(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __call__(self, *point):
        return self.ring.eval(self, *point)

    def __repr__(self):
        return f"Poly({self.ring.fmt(self)})"

    def __str__(self):
        return self.ring.fmt(self)


class PolyRing:
    """A[l] (kind "uni"), A[x1..xn] ("multi") or the free algebra ("word")."""

    def __init__(self, pair, kind="uni", variables=None):
        self.pair = pair
        self.kind = kind
        if variables is None:
            variables = ("l",) if kind == "uni" else ("x", "y")
        self.variables = tuple(variables)
        self.zero = Poly(self, ())
        self.one = self.const(pair.one)

    # keys --------------------------------------------------------------------

    def key_degree(self, k):
        if self.kind == "uni":
            return k
        if self.kind == "multi":
            return sum(k)
        return len(k)

    def key_mul(self, k1, k2):
        if self.kind == "uni":
            return k1 + k2
        if self.kind == "multi":
            return tuple(a + b for a, b in zip(k1, k2))
        return k1 + k2

    def unit_key(self):
        if self.kind == "uni":
            return 0
        if self.kind == "multi":
            return (0,) * len(self.variables)
        return ()

    # construction ------------------------------------------------------------

    def make(self, terms):
        """Build from an iterable of (key, coefficient); repeated keys are added."""
        p = self.pair
        acc = {}
        for k, c in terms:
            acc[k] = p.add(acc[k], c) if k in acc else c
        return Poly(self, tuple(sorted((k, c) for k, c in acc.items() if c != p.zero)))

    def from_coeffs(self, coeffs):
        """Univariate from a list, lowest degree first."""
        return self.make(enumerate(coeffs))

    def const(self, c):
        return self.make([(self.unit_key(), c)])

    def var(self, i=0):
        if self.kind == "uni":
            return self.make([(1, self.pair.one)])
        if self.kind == "multi":
            k = tuple(1 if j == i else 0 for j in range(len(self.variables)))
            return self.make([(k, self.pair.one)])
        return self.make([((i,), self.pair.one)])

    def linear(self, a):
        """l + a-dagger, the stand-in for l - a."""
        p = self.pair
        return self.make([(0, p.dag(a)), (1, p.one)])

    # arithmetic --------------------------------------------------------------

    def add(self, f, g):
        return self.make(f.items + g.items)

    def mul(self, f, g):
        p = self.pair
        terms = []
        for k1, c1 in f.items:
            for k2, c2 in g.items:
                terms.append((self.key_mul(k1, k2), p.mul(c1, c2)))
        terms.sort(key=lambda t: t[0])
        return self.make(terms)

    def scale(self, c, f):
        return self.make((k, self.pair.mul(c, a)) for k, a in f.items)

    def dag(self, f):
        return self.scale(self.pair.dag_unit, f)

    def power(self, f, n):
        r = self.one
        for _ in range(n):
            r = self.mul(r, f)
        return r

    def is_null(self, f):
        return all(self.pair.is_null(c) for _, c in f.items)

    def is_tangible(self, f):
        return all(self.pair.is_tangible(c) for _, c in f.items)

    def is_monic(self, f):
        return not f.is_zero() and f.leading() == self.pair.one

    def leq(self, f, g, rel=None):
        """Coefficientwise extension of a relation on the pair."""
        rel = rel or self.pair.relation
        z = self.pair.zero
        fc, gc = f.coeffs(), g.coeffs()
        return all(rel(fc.get(k, z), gc.get(k, z)) for k in sorted(set(fc) | set(gc)))

    # evaluation --------------------------------------------------------------

    def eval(self, f, *point):
        p = self.pair
        if self.kind == "uni":
            (b,) = point
            return p.sum(p.mul(c, p.power(b, k)) for k, c in f.items)
        if self.kind == "multi":
            return p.sum(p.mul(c, p.prod(p.power(b, e) for b, e in zip(point, k)))
                          for k, c in f.items)
        raise TypeError("words are evaluated with eval_word")

    def derivative(self, f):
        p = self.pair
        return self.make((k - 1, p.times(k, c)) for k, c in f.items if k > 0)

    # text --------------------------------------------------------------------

    def fmt(self, f):
        if f.is_zero():
            return "0"
        p = self.pair
        out = []
        for k, c in f.items:
            mono = self._fmt_key(k)
            cs = p.fmt(c)
            if not mono:
                out.append(cs)
            elif c == p.one:
                out.append(mono)
            else:
                out.append(f"{cs}*{mono}")
        return " + ".join(out)

    def _fmt_key(self, k):
        if self.kind == "uni":
            return "" if k == 0 else (self.variables[0] if k == 1 else f"{self.variables[0]}^{k}")
        if self.kind == "multi":
            return "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, k) if e)
        return "*".join(self.variables[i] for i in k)

    def parse(self, text):
        """Terms separated by `` + `` or `` - ``; ``-`` scales by 1-dagger.

        A term is ``coef*mono``, ``mono`` or ``coef`` with monomials such as
        ``l^2`` (one variable), ``x*y^2`` (several) or ``X*Y`` (words).
        """
        p = self.pair
        text = text.strip()
        if text in ("", "0"):
            return self.zero
        parts = re.split(r"\s+([+-])\s+", " " + text if text[0] not in "+-" else text)
        if parts[0].strip() == "":
            parts = parts[1:]
        else:
            parts = ["+"] + parts
        terms = []
        for sign, term in zip(parts[0::2], parts[1::2]):
            c, key = self._parse_term(term.strip())
            if sign == "-":
                c = p.dag(c)
            terms.append((key, c))
        return self.make(terms)

    def _parse_term(self, term):
        p = self.pair
        factors = _split_factors(term)
        coef = p.one
        key = self.unit_key()
        for fac in factors:
            name, _, exp = fac.partition("^")
            if name in self.variables:
                e = int(exp) if exp else 1
                i = self.variables.index(name)
                if self.kind == "uni":
                    key += e
                elif self.kind == "multi":
                    key = tuple(v + (e if j == i else 0) for j, v in enumerate(key))
                else:
                    key = key + (i,) * e
            else:
                coef = p.mul(coef, p.parse(fac))
        return coef, key


def _split_factors(term):
    out, depth, cur = [], 0, ""
    for ch in term:
        depth += ch in "([{"
        depth -= ch in ")]}"
        if ch == "*" and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    return [x for x in out if x]


# enumeration helpers --------------------------------------------------------------


def tangible_polys(ring, degree, palette=None, exact_degree=True):
    """All univariate polynomials of the given degree with coefficients in
    T0 (or ``palette`` plus zero); the leading coefficient is nonzero."""
    p = ring.pair
    coeffs = list(palette) if palette is not None else list(p.tangibles())
    if degree < 0:
        yield ring.zero
        return
    low = [p.zero] + coeffs
    if (len(low) ** degree) * len(coeffs) > SEARCH_CAP:
        raise BoundExceeded("tangible polynomial search space too large")
    lows = range(degree) if exact_degree else range(degree + 1)
    for top in coeffs if exact_degree else low:
        for rest in itertools.product(low, repeat=len(lows)):
            yield ring.from_coeffs(list(rest) + ([top] if exact_degree else []))


def all_polys(ring, max_degree, coeffs=None):
    p = ring.pair
    coeffs = list(coeffs) if coeffs is not None else list(p.sample())
    for vals in itertools.product(coeffs, repeat=max_degree + 1):
        yield ring.from_coeffs(vals)


# divisibility -------------------------------------------------------------------


def divides(ring, f1, f2, palette=None):
    """Tangible g with f2 = g f1, or None."""
    d = f2.degree - f1.degree
    for g in tangible_polys(ring, d, palette):
        if ring.mul(g, f1) == f2:
            return g
    return None


def divides_preceq(ring, f1, f2, rel=None, palette=None, degree_bound=None):
    """Tangible g with f2 <= g f1, or None (within the degree bound)."""
    hi = degree_bound if degree_bound is not None else max(f2.degree - f1.degree, 0)
    for d in range(0, hi + 1):
        for g in tangible_polys(ring, d, palette):
            if ring.leq(f2, ring.mul(g, f1), rel):
                return g
    return None


def divides_null(ring, f1, f2, palette=None, degree_bound=None):
    """Tangible g with f2 + g f1 null, or None."""
    hi = degree_bound if degree_bound is not None else max(f2.degree - f1.degree, 0)
    for d in range(0, hi + 1):
        for g in tangible_polys(ring, d, palette):
            if ring.is_null(ring.add(f2, ring.mul(g, f1))):
                return g
    return None


# the g_{b,n} factorization ------------------------------------------------------------


def g_shift(ring, b, n):
    """sum_{j<n} b^{n-1-j} l^j."""
    p = ring.pair
    return ring.make((j, p.power(b, n - 1 - j)) for j in range(n))


def factor_identity_sides(ring, b, n):
    p = ring.pair
    lhs = ring.mul(ring.linear(b), g_shift(ring, b, n))
    terms = [(n, p.one), (0, p.dag(p.power(b, n)))]
    for j in range(1, n):
        terms.append((n - j, p.circ(p.power(b, j))))
    return lhs, ring.make(terms)


def factor_identity_check(ring, b, n):
    """(l + b-dag) g_{b,n} = l^n + (b^n)-dag + sum_j (b^j)° l^{n-j}, exactly."""
    lhs, rhs = factor_identity_sides(ring, b, n)
    return lhs == rhs


def shift_bound_check(ring, b, n, rel=None):
    """l^n + (b^n)-dag <= (l + b-dag) g_{b,n}."""
    p = ring.pair
    small = ring.make([(n, p.one), (0, p.dag(p.power(b, n)))])
    return ring.leq(small, ring.mul(ring.linear(b), g_shift(ring, b, n)), rel)


def combined_shift(ring, f, b):
    """g = sum_{j>=1} alpha_j g_{b,j} for f = sum alpha_j l^j."""
    g = ring.zero
    for j, a in f.items:
        if j >= 1:
            g = ring.add(g, ring.scale(a, g_shift(ring, b, j)))
    return g


def shift_expansion_check(ring, f, b):
    """Exact form of the expansion of (l + b-dag) g for g = combined_shift(f, b):

        (l + b-dag) g + alpha_0° = f + f(b)-dag + sum_i alpha_i sum_{0<j<i} (b^j)° l^{i-j}.

    The alpha_0° term is absent from the literal statement; see
    ``shift_bound_literal`` for that reading.
    """
    p = ring.pair
    g = combined_shift(ring, f, b)
    lhs = ring.add(ring.mul(ring.linear(b), g), ring.const(p.circ(f.coeff(0))))
    extra = [(i - j, p.mul(a, p.circ(p.power(b, j)))) for i, a in f.items for j in range(1, i)]
    rhs = ring.add(ring.add(f, ring.const(p.dag(ring.eval(f, b)))), ring.make(extra))
    return lhs == rhs


def shift_bound_literal(ring, f, b, rel=None):
    """f + f(b)-dag <= (l + b-dag) g, read literally (fails for f = 1)."""
    p = ring.pair
    g = combined_shift(ring, f, b)
    return ring.leq(ring.add(f, ring.const(p.dag(ring.eval(f, b)))),
                    ring.mul(ring.linear(b), g), rel)


# roots -----------------------------------------------------------------------


def is_root(ring, f, b):
    return ring.pair.is_null(ring.eval(f, b))


def preceq_root_witness(ring, f, a, rel=None, palette=None):
    """Tangible g with deg g = deg f - 1 and f <= (l + a-dag) g, or None."""
    lin = ring.linear(a)
    for g in tangible_polys(ring, f.degree - 1, palette):
        if ring.leq(f, ring.mul(lin, g), rel):
            return g
    return None


def is_preceq_root(ring, f, a, rel=None, palette=None):
    return preceq_root_witness(ring, f, a, rel, palette) is not None


def preceq_roots(ring, f, rel=None, palette=None):
    cands = list(palette) if palette is not None else list(ring.pair.tangibles())
    out = []
    for a in cands:
        g = preceq_root_witness(ring, f, a, rel, palette)
        if g is not None:
            out.append((a, g))
    return out


def root_theorem_report(ring, max_degree=2, rel=None, palette=None, coeffs=None):
    """A <=-root is a root (all f), and with fissure every tangible root of a
    nonconstant tangible f is a <=-root (a constant has no <=-roots).  Exhaustive over the given degree."""
    p = ring.pair
    T = list(palette) if palette is not None else list(p.tangibles())
    r = Report(f"root theorem on {p.name} (deg <= {max_degree})", sampled=not p.finite)
    bad_i = None
    bad_ii = None
    witnesses = 0
    for f in all_polys(ring, max_degree, coeffs):
        tang = ring.is_tangible(f)
        for a in T:
            w = preceq_root_witness(ring, f, a, rel, palette)
            if w is not None:
                witnesses += 1
                if bad_i is None and not is_root(ring, f, a):
                    bad_i = (ring.fmt(f), p.fmt(a), ring.fmt(w))
            elif tang and f.degree >= 1 and bad_ii is None and is_root(ring, f, a):
                bad_ii = (ring.fmt(f), p.fmt(a))
    r.add("<=-root implies root", bad_i)
    r.add("tangible root is a <=-root", bad_ii)
    r.witnesses = witnesses
    return r


def distinct_root_count_witness(ring, max_degree=2, rel=None, palette=None):
    """A monic f with more than deg f distinct tangible <=-roots, or None."""
    p = ring.pair
    coeffs = list(p.sample())
    for d in range(1, max_degree + 1):
        for low in itertools.product(coeffs, repeat=d):
            f = ring.from_coeffs(list(low) + [p.one])
            roots = preceq_roots(ring, f, rel, palette)
            if len(roots) > d:
                return ring.fmt(f), [p.fmt(a) for a, _ in roots]
    return None


def double_root(ring, f, a, variant, rel=None, palette=None):
    """Three candidate notions of a double root.

    (i) f <= (l + a-dag)^2 h with h tangible; (ii) f + ((l + a-dag) g)-dag
    null for a tangible g having a as a <=-root; (iii) a is a <=-root of f
    and of f'.
    """
    lin = ring.linear(a)
    if variant in ("i", 1):
        sq = ring.mul(lin, lin)
        return any(ring.leq(f, ring.mul(sq, h), rel)
                   for h in tangible_polys(ring, f.degree - 2, palette))
    if variant in ("ii", 2):
        for g in tangible_polys(ring, f.degree - 1, palette):
            if ring.is_null(ring.add(f, ring.dag(ring.mul(lin, g)))) and \
                    is_preceq_root(ring, g, a, rel, palette):
                return True
        return False
    if variant in ("iii", 3):
        return is_preceq_root(ring, f, a, rel, palette) and \
            is_preceq_root(ring, ring.derivative(f), a, rel, palette)
    raise ValueError(f"unknown variant {variant!r}")


# functions and identities --------------------------------------------------------------


def psi_to_function(ring, f, domain=None):
    """Pointwise table of f over the carrier (or a declared sample)."""
    dom = domain if domain is not None else ring.pair.sample()
    return tuple(ring.eval(f, b) for b in dom)


def function_equal(ring, f, g, domain=None):
    return psi_to_function(ring, f, domain) == psi_to_function(ring, g, domain)


def eval_word(f, point, alg, scale=None):
    """Evaluate a noncommutative polynomial at elements of ``alg``."""
    scale = scale or alg.info.get("scale") or alg.mul
    total = alg.zero
    for word, c in f.items:
        val = alg.one
        for i in word:
            val = alg.mul(val, point[i])
        total = alg.add(total, scale(c, val))
    return total


def a0_pi_witness(f, alg, scale=None):
    """First point where f leaves the null part, or None when f is an A0-PI."""
    nv = len(f.ring.variables)
    for point in itertools.product(alg.sample(), repeat=nv):
        if not alg.is_null(eval_word(f, point, alg, scale)):
            return tuple(alg.fmt(b) for b in point)
    return None


def product_rule_check(ring, g, a):
    """((l + a-dag) g)' = g + (l + a-dag) g'."""
    lin = ring.linear(a)
    lhs = ring.derivative(ring.mul(lin, g))
    rhs = ring.add(g, ring.mul(lin, ring.derivative(g)))
    return lhs == rhs


# regression: a <=-root that is not a root ------------------------------------------------


def _np(terms):
    acc = {}
    for k, c in terms:
        acc[k] = acc.get(k, 0) + c
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def _np_mul(f, g):
    return _np((tuple(a + b for a, b in zip(k1, k2)), c1 * c2) for k1, c1 in f for k2, c2 in g)


def _np_sub(f, g):
    """f - g when it stays in N[x], else None."""
    d = dict(f)
    for k, c in g:
        d[k] = d.get(k, 0) - c
        if d[k] < 0:
            return None
    return _np(d.items())


def _in_ideal(r, gens):
    """Is r = sum_g g*u_g with u_g in N[x]?  Peels one monomial multiple at a time."""
    if not r:
        return True
    m = r[-1][0]
    for g in gens:
        for t, _ in g:
            if all(a >= b for a, b in zip(m, t)):
                shift = ((tuple(a - b for a, b in zip(m, t)), 1),)
                rest = _np_sub(r, _np_mul(g, shift))
                if rest is not None and _in_ideal(rest, gens):
                    return True
    return False


def _sub_diag(P, Q):
    common = sorted(set(dict(P)) & set(dict(Q)))
    ranges = [range(min(dict(P)[k], dict(Q)[k]) + 1) for k in common]
    for counts in itertools.product(*ranges):
        D = _np(zip(common, counts))
        yield _np_sub(P, D), _np_sub(Q, D)


def doubled_ideal_pair(nvars=3):
    """Doubled N[x1..x3] with nulls diag + e2*A + e1*A (elementary symmetric e1, e2)."""
    from .core import Pair

    unit = [tuple(1 if j == i else 0 for j in range(nvars)) for i in range(nvars)]
    e1 = _np((u, 1) for u in unit)
    e2 = _np((tuple(a + b for a, b in zip(unit[i], unit[j])), 1)
             for i in range(nvars) for j in range(i + 1, nvars))
    gens = (e1, e2)
    z = ()
    one = (((0,) * nvars, 1),)

    def add(a, b):
        return _np(a[0] + b[0]), _np(a[1] + b[1])

    def mul(a, b):
        return (_np(_np_mul(a[0], b[0]) + _np_mul(a[1], b[1])),
                _np(_np_mul(a[0], b[1]) + _np_mul(a[1], b[0])))

    def null(b):
        return any(_in_ideal(p, gens) and _in_ideal(q, gens) for p, q in _sub_diag(*b))

    def leq(a, b):
        p, q = _np_sub(b[0], a[0]), _np_sub(b[1], a[1])
        return p is not None and q is not None and null((p, q))

    def tangible(b):
        return (b[0] == z) != (b[1] == z)

    def fmt(b):
        def side(f):
            if not f:
                return "0"
            return " + ".join(
                (str(c) + "*" if c != 1 else "") + "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                                                            for i, e in enumerate(k) if e)
                if any(k) else str(c) for k, c in f)
        return f"({side(b[0])}, {side(b[1])})"

    p = Pair("doubled-N[x1,x2,x3]", add=add, mul=mul, zero=(z, z), one=(one, z),
             dag_unit=(z, one), tangible=tangible, null=null, leq=leq,
             sample=[(z, z), (one, z)], fmt=fmt, memo=False)
    xs = [(((u, 1),), z) for u in unit]
    return p, xs


def preceq_root_not_root_example():
    """f = l^3 - x1 x2 x3 has every x_i as a <=-root but f(x1) is not null.

    Returns (ring, f, [(x_i, g_i, is <=-root via g_i, is root)]).
    """
    p, xs = doubled_ideal_pair()
    ring = PolyRing(p)
    f = ring.make([(3, p.one), (0, p.dag(p.prod(xs)))])
    out = []
    for i, x in enumerate(xs):
        others = [y for j, y in enumerate(xs) if j != i]
        g = ring.mul(ring.linear(others[0]), ring.linear(others[1]))
        out.append((x, g, ring.is_tangible(g) and ring.leq(f, ring.mul(ring.linear(x), g)),
                    is_root(ring, f, x)))
    return ring, f, out
