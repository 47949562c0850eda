"""Hypergroups, hyperfields and their power-set pairs.

A finite hypergroup is stored as a table a ⊞ b -> frozenset.  Its nonempty
subsets form a pair: the null part is the sets containing 0, the tangibles
are the singletons, and the natural order is inclusion.  Two infinite
hyperfields are modelled exactly with their own set descriptors: the phase
hyperfield (angles in turns, rational) and the tropical hyperfield.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from fractions import Fraction

from .core import Pair, Report, subset_relation
from .instances import NEG_INF, fmt_q

MAX_POWERSET = 12


class Hypergroup:
    """Finite commutative hypergroup, optionally with a multiplication."""

    def __init__(self, name, carrier, hsum, zero, mul=None, one=None, fmt=str):
        self.name = name
        self.carrier = tuple(carrier)
        self._hsum = {}
        for a in self.carrier:
            for b in self.carrier:
                self._hsum[(a, b)] = frozenset(hsum(a, b))
        self.zero = zero
        self._mul = mul
        self.one = one
        self.fmt = fmt
        self._order = {a: i for i, a in enumerate(self.carrier)}

    @property
    def has_mul(self):
        return self._mul is not None

    def hsum(self, a, b):
        return self._hsum[(a, b)]

    def mul(self, a, b):
        return self._mul(a, b)

    def set_sum(self, S1, S2):
        out = set()
        for a in S1:
            for b in S2:
                out |= self._hsum[(a, b)]
        return frozenset(out)

    def set_mul(self, S1, S2):
        return frozenset(self._mul(a, b) for a in S1 for b in S2)

    def neg(self, a):
        cands = [b for b in self.carrier if self.zero in self._hsum[(a, b)]]
        if len(cands) != 1:
            raise ValueError(f"{self.fmt(a)} has {len(cands)} hypernegatives")
        return cands[0]

    def fmt_set(self, S):
        return "{" + ",".join(self.fmt(a) for a in sorted(S, key=self._order.__getitem__)) + "}"

    def __repr__(self):
        return f"Hypergroup({self.name!r})"


def verify_hypergroup(h):
    C = h.carrier
    r = Report(f"hypergroup axioms for {h.name}")
    r.add("sums nonempty", next((h.fmt(a) + "+" + h.fmt(b) for a in C for b in C
                                 if not h.hsum(a, b)), None))
    r.add("commutative", next(((h.fmt(a), h.fmt(b)) for a in C for b in C
                               if h.hsum(a, b) != h.hsum(b, a)), None))
    r.add("associative", next(((h.fmt(a), h.fmt(b), h.fmt(c)) for a in C for b in C for c in C
                               if h.set_sum(h.hsum(a, b), {c}) != h.set_sum({a}, h.hsum(b, c))),
                              None))
    r.add("zero neutral", next((h.fmt(a) for a in C if h.hsum(h.zero, a) != {a}), None))
    bad = None
    for a in C:
        n = [b for b in C if h.zero in h.hsum(a, b)]
        if len(n) != 1:
            bad = (h.fmt(a), len(n))
            break
    r.add("unique hypernegative", bad)
    if h.has_mul:
        r.add("mul associative", next(((h.fmt(a), h.fmt(b), h.fmt(c))
                                       for a in C for b in C for c in C
                                       if h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c))), None))
        r.add("one unit", next((h.fmt(a) for a in C if h.mul(h.one, a) != a), None))
        r.add("zero absorbing", next((h.fmt(a) for a in C if h.mul(h.zero, a) != h.zero), None))
        r.add("distributive", next(((h.fmt(a), h.fmt(b), h.fmt(c))
                                    for a in C for b in C for c in C
                                    if h.set_mul({a}, h.hsum(b, c))
                                    != h.set_sum({h.mul(a, b)}, {h.mul(a, c)})), None))
    return r


def check_distributivity(h):
    """Single distributivity a(b ⊞ c) = ab ⊞ ac, and the double form
    (a ⊞ b)(c ⊞ d) = ac ⊞ ad ⊞ bc ⊞ bd.  Returns (single, double) witnesses."""
    C = h.carrier
    single = next(((a, b, c) for a in C for b in C for c in C
                   if h.set_mul({a}, h.hsum(b, c)) != h.set_sum({h.mul(a, b)}, {h.mul(a, c)})),
                  None)
    double = None
    for a, b, c, d in itertools.product(C, repeat=4):
        lhs = h.set_mul(h.hsum(a, b), h.hsum(c, d))
        rhs = h.set_sum(h.set_sum({h.mul(a, c)}, {h.mul(a, d)}),
                        h.set_sum({h.mul(b, c)}, {h.mul(b, d)}))
        if lhs != rhs:
            double = (a, b, c, d)
            break
    return single, double


def is_stringent(h):
    """Every sum of two elements is a singleton or contains 0."""
    return all(len(h.hsum(a, b)) == 1 or h.zero in h.hsum(a, b)
               for a in h.carrier for b in h.carrier)


# named hyperfields ------------------------------------------------------------


def krasner():
    """{0, 1} with 1 ⊞ 1 = {0, 1}."""
    def hsum(a, b):
        if a == 0:
            return {b}
        if b == 0:
            return {a}
        return {0, 1}
    return Hypergroup("krasner", [0, 1], hsum, 0, mul=lambda a, b: a * b, one=1)


def signs():
    """{0, 1, -1}: 1 ⊞ 1 = {1}, 1 ⊞ -1 = {-1, 0, 1}."""
    def hsum(a, b):
        if a == 0:
            return {b}
        if b == 0 or a == b:
            return {a}
        return {-1, 0, 1}
    return Hypergroup("signs", [0, 1, -1], hsum, 0, mul=lambda a, b: a * b, one=1)


def quotient_hyperfield(q, subgroup):
    """F_q / G for a subgroup G of the units: cosets with ā ⊞ b̄ the classes of
    all a' + b' over representatives."""
    G = sorted({g % q for g in subgroup})
    for g in G:
        for h in G:
            if (g * h) % q not in G:
                raise ValueError(f"{G} is not a subgroup of F_{q}^x")
    if 1 not in G:
        raise ValueError("subgroup must contain 1")

    def cls(a):
        return 0 if a % q == 0 else min((a * g) % q for g in G)

    reps = sorted({cls(a) for a in range(q)})
    members = {r: [a for a in range(q) if cls(a) == r] for r in reps}

    def hsum(x, y):
        return {cls(a + b) for a in members[x] for b in members[y]}

    name = f"F{q}/{{{','.join(map(str, G))}}}"
    return Hypergroup(name, reps, hsum, 0, mul=lambda x, y: cls(x * y), one=1)


def sign_quotient(bound=3):
    """Q / Q_{>0} computed from the rationals -bound..bound; the sign hyperfield."""
    sample = [Fraction(i) for i in range(-bound, bound + 1)]

    def sgn(a):
        return (a > 0) - (a < 0)

    reps = [0, 1, -1]
    members = {r: [a for a in sample if sgn(a) == r] for r in reps}

    def hsum(x, y):
        return {sgn(a + b) for a in members[x] for b in members[y]}

    return Hypergroup("Q/Q>0", reps, hsum, 0, mul=lambda x, y: x * y, one=1)


def hypergroup_isomorphism(h1, h2, mapping):
    """Witness that ``mapping`` fails to be an isomorphism, or None."""
    if sorted(map(repr, mapping.values())) != sorted(map(repr, h2.carrier)):
        return "not a bijection"
    if mapping[h1.zero] != h2.zero:
        return "zero"
    for a in h1.carrier:
        for b in h1.carrier:
            if frozenset(mapping[c] for c in h1.hsum(a, b)) != h2.hsum(mapping[a], mapping[b]):
                return ("sum", a, b)
            if h1.has_mul and mapping[h1.mul(a, b)] != h2.mul(mapping[a], mapping[b]):
                return ("mul", a, b)
    return None


def find_hypergroup_isomorphism(h1, h2):
    if len(h1.carrier) != len(h2.carrier):
        return None
    for perm in itertools.permutations(h2.carrier):
        m = dict(zip(h1.carrier, perm))
        if hypergroup_isomorphism(h1, h2, m) is None:
            return m
    return None


# power-set pairs --------------------------------------------------------------


def nonempty_subsets(carrier):
    out = []
    for k in range(1, len(carrier) + 1):
        out.extend(frozenset(c) for c in itertools.combinations(carrier, k))
    return out


def power_set_pair(h, elements=None, name=None):
    """The hyperpair (P*(H), sets containing 0).

    ``elements`` restricts the carrier to a subfamily closed under both
    operations (for instance the singletons plus the whole set).
    """
    if not h.has_mul:
        raise ValueError("the power-set pair needs a hypersemiring")
    if elements is None:
        if len(h.carrier) > MAX_POWERSET:
            raise ValueError(f"power set of {len(h.carrier)} elements is not materialized")
        elements = nonempty_subsets(h.carrier)
    zero = frozenset([h.zero])
    one = frozenset([h.one])
    dag_unit = frozenset([h.neg(h.one)])

    def parse(text):
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(text)
        names = {h.fmt(a): a for a in h.carrier}
        return frozenset(names[t.strip()] for t in text[1:-1].split(",") if t.strip())

    return Pair(name or f"P({h.name})", add=h.set_sum, mul=h.set_mul, zero=zero, one=one,
                dag_unit=dag_unit,
                tangible=lambda S: len(S) == 1 and h.zero not in S,
                null=lambda S: h.zero in S, elements=elements,
                leq=lambda a, b: a <= b, relation=subset_relation(),
                distributive=False, fmt=h.fmt_set, parse=parse,
                info={"family": "hyperpair", "hypergroup": h})


def sub_pair(p, elements, name=None):
    """Restrict a finite pair to a subset closed under + and *."""
    elements = list(elements)
    S = set(elements)
    for a in elements:
        for b in elements:
            if p.add(a, b) not in S or p.mul(a, b) not in S:
                raise ValueError(f"{p.fmt(a)}, {p.fmt(b)} leave the subset")
    return Pair(name or f"{p.name}|sub", add=p.add, mul=p.mul, zero=p.zero, one=p.one,
                dag_unit=p.dag_unit, tangible=p.is_tangible, null=p.is_null,
                elements=elements, leq=(lambda a, b: p.relation(a, b)) if p._relation else None,
                relation=p._relation, distributive=p.distributive, fmt=p.fmt,
                info=dict(p.info, parent=p.name))


def krasner_pair():
    return power_set_pair(krasner(), name="krasner-hyperpair")


def signs_pair():
    return power_set_pair(signs(), name="sign-hyperpair")


def signs4_pair():
    """The singletons of the sign hyperfield together with the whole set."""
    h = signs()
    els = [frozenset([a]) for a in h.carrier] + [frozenset(h.carrier)]
    return sub_pair(signs_pair(), els, name="sign4-hyperpair")


def quotient_pair(q, subgroup):
    h = quotient_hyperfield(q, subgroup)
    return power_set_pair(h, name=f"quotient-{h.name}")


def krasner_to_supertropical():
    """N(K) -> supertropical Boolean: {0}->0, {1}->1, {0,1}->1g."""
    return {frozenset([0]): ("g", 0), frozenset([1]): ("t", 1),
            frozenset([0, 1]): ("g", 1)}


def signs4_to_doubled_boolean():
    """{1} -> (1,0), {-1} -> (0,1), {0,1,-1} -> (1,1)."""
    return {frozenset([0]): (0, 0), frozenset([1]): (1, 0), frozenset([-1]): (0, 1),
            frozenset([0, 1, -1]): (1, 1)}


def pair_isomorphism_witness(p, q, mapping):
    """None when ``mapping`` is a bijection respecting +, *, T, A0, 1dag."""
    if set(mapping) != set(p.elements) or set(mapping.values()) != set(q.elements):
        return "not a bijection"
    if len(set(mapping.values())) != len(mapping):
        return "not injective"
    for a in p.elements:
        if p.is_tangible(a) != q.is_tangible(mapping[a]) or p.is_null(a) != q.is_null(mapping[a]):
            return ("structure", p.fmt(a))
        for b in p.elements:
            if mapping[p.add(a, b)] != q.add(mapping[a], mapping[b]):
                return ("add", p.fmt(a), p.fmt(b))
            if mapping[p.mul(a, b)] != q.mul(mapping[a], mapping[b]):
                return ("mul", p.fmt(a), p.fmt(b))
    if mapping[p.dag_unit] != q.dag_unit:
        return "dagUnit"
    return None


# lifting maps ------------------------------------------------------------------


def lift_map(f):
    """f: H -> H' (dict) lifted to subsets: S -> f(S)."""
    def lifted(S):
        return frozenset(f[a] for a in S)
    return lifted


def hyper_weak_witness(h1, h2, f, n=4):
    """0 ∈ a1 ⊞ ... ⊞ an must give 0 ∈ f(a1) ⊞ ... ⊞ f(an)."""
    for k in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(h1.carrier, k):
            S = frozenset([combo[0]])
            T = frozenset([f[combo[0]]])
            for a in combo[1:]:
                S = h1.set_sum(S, {a})
                T = h2.set_sum(T, {f[a]})
            if h1.zero in S and h2.zero not in T:
                return combo
    return None


def hyper_strong_witness(h1, h2, f, n=4):
    """f(a1 ⊞ ... ⊞ an) ⊆ f(a1) ⊞ ... ⊞ f(an)."""
    for k in range(2, n + 1):
        for combo in itertools.combinations_with_replacement(h1.carrier, k):
            S = frozenset([combo[0]])
            T = frozenset([f[combo[0]]])
            for a in combo[1:]:
                S = h1.set_sum(S, {a})
                T = h2.set_sum(T, {f[a]})
            if not frozenset(f[a] for a in S) <= T:
                return combo
    return None


# phase hyperfield -------------------------------------------------------------

HALF = Fraction(1, 2)


def _mod1(x):
    return Fraction(x) % 1


class PhaseSet:
    """Subset of {0} ∪ S^1 with rational breakpoints (angles in turns).

    Angles print as ``@q``.  Stored canonically as sorted breakpoints with a bit for the breakpoint
    itself and one for the open gap after it.  With no breakpoints the
    nonzero part is empty or the whole circle.
    """

    __slots__ = ("zero", "marks", "full")

    def __init__(self, zero, marks, full=False):
        self.zero = zero
        self.marks = marks
        self.full = full

    @classmethod
    def build(cls, zero, breakpoints, member):
        bps = sorted({_mod1(b) for b in breakpoints})
        if not bps:
            return cls(zero, (), member(Fraction(0)))
        marks = []
        for i, b in enumerate(bps):
            nxt = bps[i + 1] if i + 1 < len(bps) else bps[0] + 1
            marks.append((b, member(b), member(_mod1((b + nxt) / 2))))
        # drop breakpoints that separate nothing
        changed = True
        while changed and marks:
            changed = False
            for i, (b, pt, gap) in enumerate(marks):
                prev_gap = marks[i - 1][2]
                if prev_gap == pt == gap:
                    del marks[i]
                    changed = True
                    break
        if not marks:
            return cls(zero, (), member(Fraction(0)))
        return cls(zero, tuple(marks), False)

    @classmethod
    def point(cls, a):
        if a is None:
            return cls(True, ())
        a = _mod1(a)
        return cls.build(False, [a], lambda z: z == a)

    @classmethod
    def arc(cls, s, e):
        """Open arc running counterclockwise from s to e."""
        s, e = _mod1(s), _mod1(e)
        length = _mod1(e - s)
        return cls.build(False, [s, e], lambda z: 0 < _mod1(z - s) < length)

    @classmethod
    def everything(cls):
        return cls(True, (), True)

    @classmethod
    def zero_only(cls):
        return cls(True, (), False)

    def breakpoints(self):
        return [m[0] for m in self.marks]

    def contains_angle(self, z):
        if not self.marks:
            return self.full
        z = _mod1(z)
        bps = [m[0] for m in self.marks]
        i = bisect_right(bps, z) - 1
        if i >= 0 and bps[i] == z:
            return self.marks[i][1]
        return self.marks[i][2]  # i == -1 wraps to the last gap

    def components(self):
        """Points and open arcs whose union is the nonzero part."""
        if not self.marks:
            return [("full",)] if self.full else []
        out = []
        n = len(self.marks)
        for i, (b, pt, gap) in enumerate(self.marks):
            if pt:
                out.append(("pt", b))
            if gap:
                nxt = self.marks[(i + 1) % n][0]
                out.append(("arc", b, nxt))
        return out

    def is_empty(self):
        return not self.zero and not self.marks and not self.full

    def _key(self):
        return (self.zero, self.marks, self.full)

    def __eq__(self, other):
        return isinstance(other, PhaseSet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PhaseSet({self})"

    def __str__(self):
        parts = ["0"] if self.zero else []
        for c in self.components():
            if c[0] == "full":
                parts.append("S1")
            elif c[0] == "pt":
                parts.append(f"@{c[1]}")
            else:
                parts.append(f"(@{c[1]} @{c[2]})")
        return "{" + ", ".join(parts) + "}"


def _union(A, B):
    return PhaseSet.build(A.zero or B.zero, A.breakpoints() + B.breakpoints(),
                          lambda z: A.contains_angle(z) or B.contains_angle(z))


def _antipode(A):
    return PhaseSet.build(A.zero, [b + HALF for b in A.breakpoints()],
                          lambda z: A.contains_angle(z + HALF)) if A.marks else A


def _comp_breaks(c):
    if c[0] == "pt":
        return [c[1]]
    if c[0] == "arc":
        return [c[1], c[2]]
    return []


def _inf_before(c, z):
    """inf of (z - x) mod 1 over x in c with the value in (0, 1/2)."""
    if c[0] == "full":
        return Fraction(0)
    if c[0] == "pt":
        d = _mod1(z - c[1])
        return d if 0 < d < HALF else None
    s, e = c[1], c[2]
    length = _mod1(e - s) or Fraction(1)
    d0 = _mod1(z - e)
    if d0 + length > 1:
        return Fraction(0)
    return d0 if d0 < HALF else None


def _inf_after(c, z):
    """inf of (y - z) mod 1 over y in c with the value in (0, 1/2)."""
    if c[0] == "full":
        return Fraction(0)
    if c[0] == "pt":
        d = _mod1(c[1] - z)
        return d if 0 < d < HALF else None
    s, e = c[1], c[2]
    length = _mod1(e - s) or Fraction(1)
    d0 = _mod1(s - z)
    if d0 + length > 1:
        return Fraction(0)
    return d0 if d0 < HALF else None


def _between(c1, c2, z):
    for x, y in ((c1, c2), (c2, c1)):
        i1, i2 = _inf_before(x, z), _inf_after(y, z)
        if i1 is not None and i2 is not None and i1 + i2 < HALF:
            return True
    return False


def _as_set(c):
    if c[0] == "full":
        return PhaseSet(False, (), True)
    if c[0] == "pt":
        return PhaseSet.point(c[1])
    return PhaseSet.arc(c[1], c[2])


def _comp_sum(c1, c2):
    A, B = _as_set(c1), _as_set(c2)
    meet = PhaseSet.build(False, A.breakpoints() + B.breakpoints(),
                          lambda z: A.contains_angle(z) and B.contains_angle(z))
    nB = _antipode(B)
    anti = PhaseSet.build(False, A.breakpoints() + nB.breakpoints(),
                          lambda z: A.contains_angle(z) and nB.contains_angle(z))
    has_anti = bool(anti.marks) or anti.full
    bps = _comp_breaks(c1) + _comp_breaks(c2)
    bps = bps + [b + HALF for b in bps]
    short = PhaseSet.build(False, bps, lambda z: _between(c1, c2, z))
    out = _union(_union(meet, short), _union(anti, _antipode(anti)))
    if has_anti:
        out = PhaseSet(True, out.marks, out.full)
    return out


class PhaseHyperfield:
    """S^1 ∪ {0}: a ⊞ b is the open short arc, {a} when a = b, and
    {-a, 0, a} when b = -a.  Nonzero elements are Fractions (turns); the
    zero is None."""

    name = "phase"
    zero = None
    one = Fraction(0)

    @staticmethod
    def is_zero(a):
        return a is None

    def neg(self, a):
        return a if self.is_zero(a) else _mod1(a + HALF)

    def mul(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            return None
        return _mod1(a + b)

    def hsum(self, a, b):
        return self.set_sum(PhaseSet.point(a), PhaseSet.point(b))

    def set_sum(self, A, B):
        out = PhaseSet(False, (), False)
        if A.zero:
            out = _union(out, PhaseSet(B.zero, B.marks, B.full))
        if B.zero:
            out = _union(out, PhaseSet(A.zero, A.marks, A.full))
        for c1 in A.components():
            for c2 in B.components():
                out = _union(out, _comp_sum(c1, c2))
        return out

    def set_mul(self, A, B):
        out = PhaseSet((A.zero and not B.is_empty()) or (B.zero and not A.is_empty()), (), False)
        for c1 in A.components():
            for c2 in B.components():
                out = _union(out, _comp_mul(c1, c2))
        return out


def _comp_mul(c1, c2):
    if c1[0] == "full" or c2[0] == "full":
        return PhaseSet(False, (), True)
    if c1[0] == "pt" and c2[0] == "pt":
        return PhaseSet.point(c1[1] + c2[1])
    if c1[0] == "pt" or c2[0] == "pt":
        p, a = (c1, c2) if c1[0] == "pt" else (c2, c1)
        return PhaseSet.arc(a[1] + p[1], a[2] + p[1])
    l1 = _mod1(c1[2] - c1[1]) or Fraction(1)
    l2 = _mod1(c2[2] - c2[1]) or Fraction(1)
    if l1 + l2 >= 1:
        return PhaseSet(False, (), True)
    return PhaseSet.arc(c1[1] + c2[1], c1[1] + c2[1] + l1 + l2)


def phase_double_distributivity_witness(a=Fraction(0), b=Fraction(1, 4)):
    """Compare (1 ⊞ -1)(a ⊞ b) with a ⊞ b ⊞ -a ⊞ -b.

    Returns (lhs, rhs); they differ whenever a != ±b.
    """
    H = PhaseHyperfield()
    ab = H.hsum(a, b)
    lhs = H.set_mul(H.hsum(H.one, H.neg(H.one)), ab)
    rhs = H.set_sum(ab, H.set_sum(PhaseSet.point(H.neg(a)), PhaseSet.point(H.neg(b))))
    return lhs, rhs


def phase_is_stringent_witness(samples=None):
    H = PhaseHyperfield()
    samples = samples or [Fraction(i, 8) for i in range(8)]
    for a in samples:
        for b in samples:
            s = H.hsum(a, b)
            single = not s.zero and len(s.components()) == 1 and s.components()[0][0] == "pt"
            if not (single or s.zero):
                return a, b, s
    return None


# tropical hyperfield ---------------------------------------------------------


class TropSet:
    """Subset of Q ∪ {-inf}: a closed down-interval [-inf, m] plus points above m."""

    __slots__ = ("top", "points")

    def __init__(self, top=None, points=()):
        pts = frozenset(points)
        if top is not None:
            pts = frozenset(x for x in pts if x > top)
        self.top = top
        self.points = pts

    def __eq__(self, other):
        return isinstance(other, TropSet) and (self.top, self.points) == (other.top, other.points)

    def __hash__(self):
        return hash((self.top, self.points))

    def contains_zero(self):
        return self.top is not None or NEG_INF in self.points

    def __str__(self):
        parts = [] if self.top is None else [f"[-inf,{fmt_q(self.top)}]"]
        parts += [fmt_q(x) for x in sorted(self.points)]
        return "{" + ", ".join(parts) + "}"

    __repr__ = __str__


class TropicalHyperfield:
    """Q ∪ {-inf}: a ⊞ b = max(a, b) for a != b, a ⊞ a = [-inf, a]."""

    name = "tropical-hyperfield"
    zero = NEG_INF
    one = Fraction(0)

    def hsum(self, a, b):
        if a == b:
            return TropSet(a) if a is not NEG_INF else TropSet(None, [NEG_INF])
        return TropSet(None, [max(a, b)])

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a is NEG_INF or b is NEG_INF:
            return NEG_INF
        return a + b

    def set_sum(self, A, B):
        top = None
        pts = set()

        def bump(m):
            nonlocal top
            top = m if top is None else max(top, m)

        if A.top is not None and B.top is not None:
            bump(max(A.top, B.top))
        for X, Y in ((A, B), (B, A)):
            if X.top is not None:
                for y in Y.points:
                    if y is NEG_INF or y <= X.top:
                        bump(X.top)
                    else:
                        pts.add(y)
        for x in A.points:
            for y in B.points:
                s = self.hsum(x, y)
                if s.top is not None:
                    bump(s.top)
                pts |= s.points
        return TropSet(top, pts)


def tropical_stringent_witness(samples=None):
    H = TropicalHyperfield()
    samples = samples or [NEG_INF] + [Fraction(i) for i in range(-2, 3)]
    for a in samples:
        for b in samples:
            s = H.hsum(a, b)
            if not (len(s.points) == 1 and s.top is None) and not s.contains_zero():
                return a, b
    return None
