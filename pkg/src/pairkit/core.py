"""Pairs (A, A0): a carrier with a distinguished null part.

A ``Pair`` bundles the two operations, the tangible elements T, the null
part A0 and the unit 1-dagger used as a negation substitute.  Finite pairs
are decided exhaustively; symbolic ones (rationals, series) are checked on a
declared sample and the results are tagged ``sampled``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce


class PairError(Exception):
    pass


class DomainMismatch(PairError, ValueError):
    pass


class Undecidable(PairError):
    pass


class NotMetatangible(PairError):
    pass


class BoundExceeded(PairError):
    pass


def _membership(spec):
    if spec is None:
        return None
    if callable(spec):
        return spec
    frozen = frozenset(spec)
    return frozen.__contains__


class Pair:
    """A pair (A, A0) with tangible set T and unit 1-dagger.

    ``tangible`` and ``null`` accept either a predicate or a collection.
    Pass ``elements`` for a finite carrier; pass ``sample`` (and ideally
    ``contains``) for an infinite one.
    """

    def __init__(self, name, *, add, mul, zero, one, dag_unit, tangible, null,
                 elements=None, sample=None, contains=None, leq=None,
                 distributive=True, commutative=True, fmt=None, parse=None,
                 relation=None, info=None, memo=True):
        self.name = name
        self._add = add
        self._mul = mul
        self.zero = zero
        self.one = one
        self.dag_unit = dag_unit
        self.is_tangible = _membership(tangible)
        self.is_null = _membership(null)
        self.elements = tuple(elements) if elements is not None else None
        self._sample = tuple(sample) if sample is not None else None
        self.distributive = distributive
        self.commutative = commutative
        self.info = dict(info or {})
        self._leq_hook = leq
        self._fmt = fmt or str
        self._parse = parse
        if self.elements is not None:
            self._elset = frozenset(self.elements)
            self._contains = self._elset.__contains__
            self._index = {b: i for i, b in enumerate(self.elements)}
        else:
            self._elset = None
            self._index = None
            self._contains = contains
        self._memo = memo and self.elements is not None
        self._addc = {}
        self._mulc = {}
        self._leq_pairs = None
        self._relation = relation
        self._names = None

    # basic data -----------------------------------------------------------

    @property
    def finite(self):
        return self.elements is not None

    @property
    def nd_only(self):
        return not self.distributive

    def sample(self):
        """Elements to range over: the whole carrier when finite."""
        if self.elements is not None:
            return self.elements
        if self._sample is None:
            raise Undecidable(f"{self.name}: no carrier and no declared sample")
        return self._sample

    def contains(self, b):
        if self._contains is None:
            return True
        try:
            return bool(self._contains(b))
        except TypeError:
            return False

    def check(self, *bs):
        for b in bs:
            if not self.contains(b):
                raise DomainMismatch(f"{b!r} is not an element of {self.name}")

    def tangibles(self):
        return tuple(b for b in self.sample() if self.is_tangible(b))

    def tangibles0(self):
        return (self.zero,) + tuple(b for b in self.tangibles() if b != self.zero)

    def nulls(self):
        return tuple(b for b in self.sample() if self.is_null(b))

    def index(self, b):
        return self._index[b]

    # naming ---------------------------------------------------------------

    def fmt(self, b):
        return self._fmt(b)

    def names(self):
        if self._names is None:
            self._names = {self.fmt(b): b for b in self.sample()}
        return self._names

    def parse(self, text):
        text = text.strip()
        if self.elements is not None or self._sample is not None:
            hit = self.names().get(text)
            if hit is not None:
                return hit
        if self._parse is not None:
            b = self._parse(text)
            self.check(b)
            return b
        raise DomainMismatch(f"unknown element {text!r} for {self.name}")

    # operations -----------------------------------------------------------

    def add(self, a, b):
        if not self._memo:
            return self._add(a, b)
        key = (a, b)
        try:
            return self._addc[key]
        except KeyError:
            r = self._addc[key] = self._add(a, b)
            return r

    def mul(self, a, b):
        if not self._memo:
            return self._mul(a, b)
        key = (a, b)
        try:
            return self._mulc[key]
        except KeyError:
            r = self._mulc[key] = self._mul(a, b)
            return r

    def sum(self, items):
        return reduce(self.add, items, self.zero)

    def prod(self, items):
        return reduce(self.mul, items, self.one)

    def power(self, b, n):
        r = self.one
        for _ in range(n):
            r = self.mul(r, b)
        return r

    def times(self, n, b):
        """n*b = b + ... + b (n copies)."""
        r = self.zero
        for _ in range(n):
            r = self.add(r, b)
        return r

    def dag(self, b):
        return self.mul(self.dag_unit, b)

    def circ(self, b):
        return self.add(b, self.dag(b))

    @property
    def e(self):
        return self.add(self.one, self.dag_unit)

    # relations ------------------------------------------------------------

    def leq0(self, a, b):
        """a <=_0 b: b = a + c for some null c."""
        if self._leq_hook is not None:
            return self._leq_hook(a, b)
        if self.elements is None:
            raise Undecidable(f"{self.name}: <=_0 needs a finite carrier or a decision hook")
        if self._leq_pairs is None:
            nulls = self.nulls()
            self._leq_pairs = {(x, self.add(x, c)) for x in self.elements for c in nulls}
        return (a, b) in self._leq_pairs

    @property
    def relation(self):
        if self._relation is None:
            self._relation = Relation("<=0", self.leq0)
        return self._relation

    def __repr__(self):
        return f"Pair({self.name!r})"


@dataclass(frozen=True)
class Relation:
    """A pre-order on a pair, given by a decision procedure."""
    name: str
    decide: object = field(compare=False)

    def __call__(self, a, b):
        return self.decide(a, b)


def subset_relation():
    return Relation("subset", lambda a, b: a <= b)


def equality_relation():
    return Relation("=", lambda a, b: a == b)


def leq0(p, b1, b2):
    p.check(b1, b2)
    return p.leq0(b1, b2)


def add(p, b1, b2):
    p.check(b1, b2)
    return p.add(b1, b2)


def mul(p, b1, b2):
    p.check(b1, b2)
    return p.mul(b1, b2)


def dag(p, b):
    p.check(b)
    return p.dag(b)


def circ(p, b):
    p.check(b)
    return p.circ(b)


# reports --------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None
    required: bool = True

    def as_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        if not self.required:
            d["required"] = False
        return d


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)
    sampled: bool = False

    @property
    def ok(self):
        return all(c.passed for c in self.checks if c.required)

    def failures(self):
        return [c for c in self.checks if c.required and not c.passed]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, name, witness, required=True):
        """Record a check; ``witness`` is None on success."""
        self.checks.append(Check(name, witness is None, witness, required))

    def __str__(self):
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"
                 + (" (sampled)" if self.sampled else "")]
        for c in self.checks:
            mark = "pass" if c.passed else ("FAIL" if c.required else "note")
            extra = "" if c.witness is None else f"  witness={c.witness}"
            lines.append(f"  {mark:4} {c.name}{extra}")
        return "\n".join(lines)


def _first(iterable):
    for w in iterable:
        return w
    return None


def _show(p, *bs):
    return tuple(p.fmt(b) for b in bs)


# axioms -----------------------------------------------------------------------


def verify_pair_axioms(p):
    """Check the (nd-)semiring axioms and the pair conditions on T and A0."""
    S = p.sample()
    T = p.tangibles()
    N = p.nulls()
    r = Report(f"pair axioms for {p.name}", sampled=not p.finite)
    r.add("zero != one", None if p.zero != p.one else _show(p, p.zero))
    r.add("add commutative", _first(_show(p, a, b) for a, b in itertools.combinations(S, 2)
                                     if p.add(a, b) != p.add(b, a)))
    r.add("add associative", _first(_show(p, a, b, c) for a, b, c in itertools.product(S, repeat=3)
                                    if p.add(p.add(a, b), c) != p.add(a, p.add(b, c))))
    r.add("zero neutral", _first(_show(p, a) for a in S if p.add(a, p.zero) != a))
    r.add("mul associative", _first(_show(p, a, b, c) for a, b, c in itertools.product(S, repeat=3)
                                    if p.mul(p.mul(a, b), c) != p.mul(a, p.mul(b, c))))
    r.add("one unit", _first(_show(p, a) for a in S
                             if p.mul(a, p.one) != a or p.mul(p.one, a) != a))
    r.add("zero absorbing", _first(_show(p, a) for a in S
                                   if p.mul(a, p.zero) != p.zero or p.mul(p.zero, a) != p.zero))
    if p.commutative:
        r.add("mul commutative", _first(_show(p, a, b) for a, b in itertools.combinations(S, 2)
                                        if p.mul(a, b) != p.mul(b, a)))
    # T acts distributively in every pair; full distributivity only when claimed
    r.add("T-module distributivity", _first(
        _show(p, a, b, c) for a in T for b, c in itertools.product(S, repeat=2)
        if p.mul(a, p.add(b, c)) != p.add(p.mul(a, b), p.mul(a, c))
        or p.mul(p.add(b, c), a) != p.add(p.mul(b, a), p.mul(c, a))))
    if p.distributive:
        r.add("distributive", _first(
            _show(p, a, b, c) for a, b, c in itertools.product(S, repeat=3)
            if p.mul(a, p.add(b, c)) != p.add(p.mul(a, b), p.mul(a, c))
            or p.mul(p.add(b, c), a) != p.add(p.mul(b, a), p.mul(c, a))))
    r.add("one tangible", None if p.is_tangible(p.one) else _show(p, p.one))
    r.add("zero not tangible", None if not p.is_tangible(p.zero) else _show(p, p.zero))
    r.add("T0 closed under mul", _first(_show(p, a, b) for a, b in itertools.product(T, repeat=2)
                                        if not (p.is_tangible(p.mul(a, b)) or p.mul(a, b) == p.zero)))
    r.add("zero null", None if p.is_null(p.zero) else _show(p, p.zero))
    r.add("A0 closed under add", _first(_show(p, a, b) for a, b in itertools.product(N, repeat=2)
                                        if not p.is_null(p.add(a, b))))
    r.add("T A0 in A0", _first(_show(p, a, b) for a in T for b in N
                               if not p.is_null(p.mul(a, b)) or not p.is_null(p.mul(b, a))))
    r.add("ab in A0 with a in T forces b in A0", _first(
        _show(p, a, b) for a in T for b in S
        if not p.is_null(b) and (p.is_null(p.mul(a, b)) or p.is_null(p.mul(b, a)))))
    r.add("faithful T-action", _first(
        _show(p, a, b, c) for a in T for b, c in itertools.combinations(S, 2)
        if p.mul(a, b) == p.mul(a, c)), required=False)
    return r


def _dag_inverse(p):
    return _first(a for a in p.tangibles()
                  if p.mul(a, p.dag_unit) == p.one and p.mul(p.dag_unit, a) == p.one)


def verify_property_n(p):
    """Negation-like unit: e = 1 + 1dag is null, unique, and b + 1dag b is null."""
    r = Report(f"Property N for {p.name}", sampled=not p.finite)
    e = p.e
    r.add("dagUnit tangible", None if p.is_tangible(p.dag_unit) else _show(p, p.dag_unit))
    r.add("dagUnit invertible", None if _dag_inverse(p) is not None else _show(p, p.dag_unit))
    r.add("e null", None if p.is_null(e) else _show(p, e))
    r.add("e unique", _first(_show(p, a, p.add(p.one, a)) for a in p.tangibles()
                             if p.is_null(p.add(p.one, a)) and p.add(p.one, a) != e))
    r.add("b° null", _first(_show(p, b, p.circ(b)) for b in p.sample() if not p.is_null(p.circ(b))))
    return r


def has_property_n(p):
    return verify_property_n(p).ok


def verify_e_identities(p):
    """1dag e = e, and e^2 = e + e."""
    r = Report(f"e identities for {p.name}")
    e = p.e
    r.add("1dag e = e", None if p.dag(e) == e else _show(p, p.dag(e), e))
    r.add("e^2 = e + e", None if p.mul(e, e) == p.add(e, e) else _show(p, p.mul(e, e), p.add(e, e)))
    return r


def uniquely_negated(p):
    e = p.e
    others = [a for a in p.tangibles() if a != p.dag_unit and p.add(p.one, a) == e]
    return not others and p.mul(p.dag_unit, p.dag_unit) == p.one


# classification ---------------------------------------------------------------


def is_first_kind(p):
    return p.is_null(p.add(p.one, p.one))


def is_proper(p):
    return all(not p.is_null(a) for a in p.tangibles())


def is_shallow(p):
    return all(p.is_tangible(b) or p.is_null(b) for b in p.sample())


def is_a0_bipotent(p):
    T = p.tangibles()
    return all(p.add(a, b) in (a, b) or p.is_null(p.add(a, b)) for a in T for b in T)


def is_weakly_metatangible(p):
    T = p.tangibles()
    return all(p.is_tangible(p.add(a, b)) or p.is_null(p.add(a, b)) for a in T for b in T)


def is_metatangible(p):
    if not is_weakly_metatangible(p):
        return False
    reach = {p.add(a, c) for a in p.tangibles0() for c in p.nulls()}
    return all(b in reach for b in p.sample())


def is_a0_domain(p):
    S = p.sample()
    return all(p.is_null(a) or p.is_null(b) or not p.is_null(p.mul(a, b))
               for a in S for b in S)


def _msets(items, k):
    return itertools.combinations_with_replacement(items, k)


def reversibility_witness(p, N=4, rel=None):
    """First counterexample to T-reversibility with at most N summands."""
    rel = rel or p.relation
    T = p.tangibles()
    for n in range(1, N + 1):
        for a0 in T:
            for a1 in T:
                for rest in _msets(T, n - 1):
                    total = p.sum((a1,) + rest)
                    if rel(p.dag(a0), total) and not rel(p.dag(a1), p.sum((a0,) + rest)):
                        return _show(p, a0, a1, *rest)
    return None


def strong_reversibility_witness(p, rel=None):
    """a + b null with a tangible must force a-dagger <= b."""
    rel = rel or p.relation
    for a in p.tangibles():
        for b in p.sample():
            if p.is_null(p.add(a, b)) and not rel(p.dag(a), b):
                return _show(p, a, b)
    return None


def fissure_witness(p, N=4, rel=None):
    """a0 <= a1 + ... + an must split as a0 <= a1 + a with a <= a2 + ... + an."""
    rel = rel or p.relation
    T0 = p.tangibles0()
    for n in range(1, N + 1):
        for a0 in T0:
            for a1 in T0:
                for rest in _msets(T0, n - 1):
                    if not rel(a0, p.sum((a1,) + rest)):
                        continue
                    tail = p.sum(rest)
                    if not any(rel(a0, p.add(a1, a)) and rel(a, tail) for a in T0):
                        return _show(p, a0, a1, *rest)
    return None


def check_reversibility(p, N=4, rel=None):
    return reversibility_witness(p, N, rel) is None


def check_strong_reversibility(p, rel=None):
    return strong_reversibility_witness(p, rel) is None


def check_fissure(p, N=4, rel=None):
    return fissure_witness(p, N, rel) is None


@dataclass(frozen=True)
class Classification:
    first_kind: bool
    proper: bool
    shallow: bool
    weakly_metatangible: bool
    metatangible: bool
    a0_bipotent: bool
    a0_domain: bool
    uniquely_negated: bool
    property_n: bool
    reversible: bool
    strongly_reversible: bool
    fissure: bool
    bound: int
    sampled: bool

    def as_dict(self):
        return {
            "kind": "first" if self.first_kind else "second",
            "proper": self.proper,
            "shallow": self.shallow,
            "weaklyMetatangible": self.weakly_metatangible,
            "metatangible": self.metatangible,
            "a0Bipotent": self.a0_bipotent,
            "a0Domain": self.a0_domain,
            "uniquelyNegated": self.uniquely_negated,
            "propertyN": self.property_n,
            "reversible": self.reversible,
            "stronglyReversible": self.strongly_reversible,
            "fissure": self.fissure,
            "bound": self.bound,
            "sampled": self.sampled,
        }


def classify(p, N=4, rel=None):
    return Classification(
        first_kind=is_first_kind(p),
        proper=is_proper(p),
        shallow=is_shallow(p),
        weakly_metatangible=is_weakly_metatangible(p),
        metatangible=is_metatangible(p),
        a0_bipotent=is_a0_bipotent(p),
        a0_domain=is_a0_domain(p),
        uniquely_negated=uniquely_negated(p),
        property_n=has_property_n(p),
        reversible=check_reversibility(p, N, rel),
        strongly_reversible=check_strong_reversibility(p, rel),
        fissure=check_fissure(p, N, rel),
        bound=N,
        sampled=not p.finite,
    )


def uniform_presentation(p, c, max_multiple=None):
    """Write c as m * c_T (first kind) or as 0, c_T, c_T° (second kind).

    Returns ``(c_T, m)``.  Raises NotMetatangible when the pair does not
    admit the presentation.
    """
    p.check(c)
    if not is_metatangible(p):
        raise NotMetatangible(f"{p.name} is not metatangible")
    if c == p.zero:
        return p.one, 0
    if p.is_tangible(c):
        return c, 1
    T = p.tangibles()
    if is_first_kind(p):
        bound = max_multiple or (len(p.sample()) + 2)
        for m in range(2, bound + 1):
            for a in T:
                if p.times(m, a) == c:
                    return a, m
    else:
        for a in T:
            if p.circ(a) == c:
                return a, 2
    raise NotMetatangible(f"{p.fmt(c)} has no uniform presentation in {p.name}")
