"""Maps between pairs: paired homomorphisms, weak morphisms and
relation-morphisms, decided exactly on finite pairs by additive closure."""

from __future__ import annotations

import itertools

from .core import Report


class PairedMap:
    """A total function between the carriers of two pairs.

    ``operation`` picks the operation the weak and relation checks track:
    "add" for pairs, "mul" for maps of monoid pairs such as determinants.
    """

    def __init__(self, source, target, fn, name=None, operation="add"):
        self.source = source
        self.target = target
        self._fn = dict(fn) if isinstance(fn, dict) else fn
        self.name = name or f"{source.name}->{target.name}"
        self.operation = operation

    def __call__(self, b):
        f = self._fn
        return f[b] if isinstance(f, dict) else f(b)

    def graph(self):
        return {b: self(b) for b in self.source.sample()}

    def flags(self):
        s, t = self.source, self.target
        return {
            "preservesTangibles": all(t.is_tangible(self(a)) for a in s.tangibles()),
            "preservesNulls": all(t.is_null(self(b)) for b in s.nulls()),
            "multiplicative": multiplicative_witness(self) is None,
        }

    def __repr__(self):
        return f"PairedMap({self.name})"


def _op(p, operation):
    return p.add if operation == "add" else p.mul


def multiplicative_witness(f, tangible_only=False):
    s, t = f.source, f.target
    left = list(s.tangibles()) if tangible_only else s.sample()
    for a in left:
        for b in s.sample():
            if f(s.mul(a, b)) != t.mul(f(a), f(b)):
                return (s.fmt(a), s.fmt(b))
    return None


def map_axioms_report(f):
    """f(T) in T', f(0) = 0', f(1) = 1', f(ab) = f(a) f(b) for a tangible, f(A0) in A0'."""
    s, t = f.source, f.target
    r = Report(f"map {f.name}")
    r.add("f(T) in T'", next((s.fmt(a) for a in s.tangibles() if not t.is_tangible(f(a))), None))
    r.add("f(0) = 0'", None if f(s.zero) == t.zero else s.fmt(s.zero))
    r.add("f(1) = 1'", None if f(s.one) == t.one else s.fmt(s.one))
    r.add("f(ab) = f(a)f(b), a tangible", multiplicative_witness(f, tangible_only=True))
    r.add("f(A0) in A0'", next((s.fmt(b) for b in s.nulls() if not t.is_null(f(b))), None))
    return r


def is_paired_map(f):
    s, t = f.source, f.target
    return f(s.zero) == t.zero and all(t.is_null(f(b)) for b in s.nulls())


def homomorphism_witness(f):
    s, t = f.source, f.target
    op_s, op_t = _op(s, f.operation), _op(t, f.operation)
    for a, b in itertools.combinations_with_replacement(s.sample(), 2):
        if f(op_s(a, b)) != op_t(f(a), f(b)):
            return (s.fmt(a), s.fmt(b))
    return None


def is_homomorphism(f):
    """Paired map preserving the tracked operation."""
    return is_paired_map(f) and homomorphism_witness(f) is None


# closure decisions ---------------------------------------------------------------------


def graph_closure(f):
    """Semigroup generated by {(b, f(b))} in A x A' under the tracked operation.

    Returns {(s, s'): generator list} with one generating list per element.
    """
    s, t = f.source, f.target
    op_s, op_t = _op(s, f.operation), _op(t, f.operation)
    gens = [(b, f(b)) for b in s.sample()]
    seen = {}
    for b, fb in gens:
        seen.setdefault((b, fb), (b,))
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for b, fb in gens:
                y = (op_s(x[0], b), op_t(x[1], fb))
                if y not in seen:
                    seen[y] = seen[x] + (b,)
                    nxt.append(y)
        frontier = nxt
    return seen


def weak_morphism_witness(f):
    """Generators b_1..b_n with the combined b in A0 but combined f(b_i) not in A0'."""
    if not is_paired_map(f):
        return ("not a paired map",)
    s, t = f.source, f.target
    for (x, y), word in graph_closure(f).items():
        if s.is_null(x) and not t.is_null(y):
            return tuple(s.fmt(b) for b in word)
    return None


def is_weak_morphism(f):
    return weak_morphism_witness(f) is None


def preceq_morphism_witness(f, rel_s=None, rel_t=None, dual=False):
    """Monotonicity plus f(sum b_i) <= sum f(b_i) on the whole closure.
    ``dual`` checks the reversed inequality (a >=-morphism)."""
    s, t = f.source, f.target
    rel_s = rel_s or s.relation
    rel_t = rel_t or t.relation
    if not is_paired_map(f):
        return ("not a paired map",)
    for a in s.sample():
        for b in s.sample():
            if rel_s(a, b) and not rel_t(f(a), f(b)):
                return ("monotone", s.fmt(a), s.fmt(b))
    for (x, y), word in graph_closure(f).items():
        ok = rel_t(y, f(x)) if dual else rel_t(f(x), y)
        if not ok:
            return tuple(s.fmt(b) for b in word)
    return None


def is_preceq_morphism(f, rel_s=None, rel_t=None, dual=False):
    return preceq_morphism_witness(f, rel_s, rel_t, dual) is None


# naive bounded oracles --------------------------------------------------------------------


def _combine(p, op, items):
    acc = items[0]
    for b in items[1:]:
        acc = op(acc, b)
    return acc


def naive_weak_witness(f, n=6):
    """Check every multiset of at most n elements directly."""
    if not is_paired_map(f):
        return ("not a paired map",)
    s, t = f.source, f.target
    op_s, op_t = _op(s, f.operation), _op(t, f.operation)
    for k in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(s.sample(), k):
            if s.is_null(_combine(s, op_s, combo)) and \
                    not t.is_null(_combine(t, op_t, [f(b) for b in combo])):
                return tuple(s.fmt(b) for b in combo)
    return None


def naive_preceq_witness(f, n=6, rel_s=None, rel_t=None):
    s, t = f.source, f.target
    rel_s = rel_s or s.relation
    rel_t = rel_t or t.relation
    if not is_paired_map(f):
        return ("not a paired map",)
    for a in s.sample():
        for b in s.sample():
            if rel_s(a, b) and not rel_t(f(a), f(b)):
                return ("monotone", s.fmt(a), s.fmt(b))
    op_s, op_t = _op(s, f.operation), _op(t, f.operation)
    for k in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(s.sample(), k):
            if not rel_t(f(_combine(s, op_s, combo)), _combine(t, op_t, [f(b) for b in combo])):
                return tuple(s.fmt(b) for b in combo)
    return None


def sampled_preceq_witness(f, sample, n=3, rel_t=None):
    """f(sum) <= sum f on every multiset of at most n sample elements; for
    symbolic sources (verdicts are sampled)."""
    s, t = f.source, f.target
    rel_t = rel_t or t.relation
    for k in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(sample, k):
            total = _combine(s, s.add, combo)
            if s.is_null(total) and not t.is_null(_combine(t, t.add, [f(b) for b in combo])):
                return ("weak", tuple(s.fmt(b) for b in combo))
            if not rel_t(f(total), _combine(t, t.add, [f(b) for b in combo])):
                return tuple(s.fmt(b) for b in combo)
    return None


def classify_map(f):
    """Verdicts for the three morphism classes (exact for finite pairs)."""
    return {"paired": is_paired_map(f), "homomorphism": is_homomorphism(f),
            "preceq": is_preceq_morphism(f), "weak": is_weak_morphism(f),
            "exact": f.source.finite and f.target.finite}


def inclusion_chain_witness(f):
    """homomorphism => relation-morphism => weak morphism."""
    c = classify_map(f)
    if c["homomorphism"] and not c["preceq"]:
        return "homomorphism but not a relation-morphism"
    if c["preceq"] and not c["weak"]:
        return "relation-morphism but not weak"
    return None


# Hom as a module ------------------------------------------------------------------------


def map_add(f1, f2):
    t = f1.target
    return PairedMap(f1.source, t, lambda b: t.add(f1(b), f2(b)), name=f"({f1.name}+{f2.name})")


def map_scale(a, f):
    t = f.target
    return PairedMap(f.source, t, lambda b: t.mul(a, f(b)), name=f"{t.fmt(a)}*{f.name}")


def compose(f, g):
    """f after g."""
    return PairedMap(g.source, f.target, lambda b: f(g(b)), name=f"{f.name}.{g.name}")


def zero_map(source, target):
    return PairedMap(source, target, lambda b: target.zero, name="0")


def identity_map(p):
    return PairedMap(p, p, lambda b: b, name=f"id-{p.name}")


def same_map(f, g):
    return all(f(b) == g(b) for b in f.source.sample())


def hom_module_report(maps, scalars):
    """Pointwise sum and action, associativity of composition, distributivity."""
    r = Report("Hom(A, A) operations")
    maps = list(maps)
    r.add("f + 0 = f", next((f.name for f in maps
                             if not same_map(map_add(f, zero_map(f.source, f.target)), f)), None))
    r.add("(af)(b) = a f(b)", next(((f.name,) for f in maps for a in scalars
                                    if not all(map_scale(a, f)(b) == f.target.mul(a, f(b))
                                               for b in f.source.sample())), None))
    r.add("composition associative", next(((f.name, g.name, h.name) for f in maps for g in maps
                                           for h in maps
                                           if not same_map(compose(f, compose(g, h)),
                                                           compose(compose(f, g), h))), None))
    r.add("f(g + h) = fg + fh", next(((f.name, g.name, h.name) for f in maps for g in maps for h in maps
                                      if not same_map(compose(f, map_add(g, h)),
                                                      map_add(compose(f, g), compose(f, h)))), None))
    r.add("(g + h)f = gf + hf", next(((f.name, g.name, h.name) for f in maps for g in maps for h in maps
                                      if not same_map(compose(map_add(g, h), f),
                                                      map_add(compose(g, f), compose(h, f)))), None))
    return r
