"""Congruences on small pairs, quotients, kernels, the twist-product prime
spectrum, and the A0-locus correspondence on truncated polynomial spaces."""

from __future__ import annotations

import itertools

from .core import BoundExceeded, Pair, Report

CARRIER_CAP = 6


class Congruence:
    """A partition of a finite carrier, stored as one class label per element."""

    __slots__ = ("pair", "labels")

    def __init__(self, pair, labels):
        # canonical relabelling by first occurrence
        seen = {}
        self.pair = pair
        self.labels = tuple(seen.setdefault(x, len(seen)) for x in labels)

    def related(self, a, b):
        p = self.pair
        return self.labels[p.index(a)] == self.labels[p.index(b)]

    def classes(self):
        elems = self.pair.sample()
        out = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(elems[i])
        return [tuple(c) for _, c in sorted(out.items())]

    def members(self):
        """All related pairs (b1, b2) as a set."""
        return {(a, b) for c in self.classes() for a in c for b in c}

    def null_members(self):
        p = self.pair
        return {(a, b) for a, b in self.members() if p.is_null(a) and p.is_null(b)}

    def __le__(self, other):
        return all(other.labels[i] == other.labels[j]
                   for i in range(len(self.labels)) for j in range(i)
                   if self.labels[i] == self.labels[j])

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __and__(self, other):
        return Congruence(self.pair, list(zip(self.labels, other.labels)))

    def is_trivial(self):
        return len(set(self.labels)) == len(self.labels)

    def is_total(self):
        return len(set(self.labels)) == 1

    def fmt(self):
        p = self.pair
        return " | ".join(",".join(p.fmt(b) for b in c) for c in self.classes())

    def __repr__(self):
        return f"Congruence({self.fmt()})"


def diag(p):
    return Congruence(p, range(len(p.sample())))


def total(p):
    return Congruence(p, [0] * len(p.sample()))


def _rgs(n):
    """Restricted growth strings of length n (one per set partition)."""
    def rec(prefix, m):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(m + 2):
            yield from rec(prefix + [v], max(m, v))
    if n == 0:
        yield ()
        return
    yield from rec([0], 0)


def is_congruence(p, labels):
    elems = p.sample()
    idx = {b: i for i, b in enumerate(elems)}
    n = len(elems)
    for i in range(n):
        for j in range(i + 1, n):
            if labels[i] != labels[j]:
                continue
            for c in elems:
                for op in (p.add, p.mul):
                    if labels[idx[op(elems[i], c)]] != labels[idx[op(elems[j], c)]]:
                        return False
                    if labels[idx[op(c, elems[i])]] != labels[idx[op(c, elems[j])]]:
                        return False
    return True


def enumerate_congruences(p):
    if not p.finite:
        raise BoundExceeded(f"{p.name} is not enumerable")
    n = len(p.sample())
    if n > CARRIER_CAP:
        raise BoundExceeded(f"carrier of {p.name} has {n} > {CARRIER_CAP} elements")
    return [Congruence(p, s) for s in _rgs(n) if is_congruence(p, s)]


# quotients and kernels ---------------------------------------------------------------


def quotient_pair(p, c, name=None):
    """(A/c, A0/c0): classes as elements, tangibles and nulls the images of T and A0."""
    classes = c.classes()
    cls_of = {b: cl for cl in classes for b in cl}

    def proj(b):
        return cls_of[b]

    def lift(op):
        return lambda x, y: proj(op(x[0], y[0]))

    T = {proj(a) for a in p.tangibles()}
    N = {proj(b) for b in p.nulls()}
    return Pair(name or f"{p.name}/({c.fmt()})", add=lift(p.add), mul=lift(p.mul),
                zero=proj(p.zero), one=proj(p.one), dag_unit=proj(p.dag_unit),
                tangible=T, null=N, elements=classes,
                distributive=p.distributive, commutative=p.commutative,
                fmt=lambda x: "[" + ",".join(p.fmt(b) for b in x) + "]",
                info={"family": "quotient", "base": p, "projection": proj})


def projection(p, c):
    q = quotient_pair(p, c)
    return q, q.info["projection"]


def kernel_congruence(source, target, fn):
    """(Theta_f, Theta_f0): equal images, and the related pairs with null image."""
    theta = Congruence(source, [fn(b) for b in source.sample()])
    return theta, {(a, b) for a, b in theta.members() if target.is_null(fn(a))}


def decompose(source, target, fn):
    """Factor fn as (projection onto A/Theta_f) then an injective map whose only
    change is an extension of the null part.  Returns a dict of checks."""
    theta = Congruence(source, [fn(b) for b in source.sample()])
    q, proj = projection(source, theta)
    induced = {cl: fn(cl[0]) for cl in q.sample()}
    recomposes = all(induced[proj(b)] == fn(b) for b in source.sample())
    injective = len(set(induced.values())) == len(induced)
    paired = all(target.is_null(induced[cl]) for cl in q.nulls())
    extension = {cl for cl in q.sample() if target.is_null(induced[cl])} >= set(q.nulls())
    return {"quotient": q, "induced": induced, "recomposes": recomposes,
            "injective": injective, "paired": paired, "null extension": extension}


# twist products and the prime spectrum -------------------------------------------------------


def twist(p, x, y):
    return (p.add(p.mul(x[0], y[0]), p.mul(x[1], y[1])),
            p.add(p.mul(x[0], y[1]), p.mul(x[1], y[0])))


def twist_product(c1, c2):
    p = c1.pair
    return {twist(p, x, y) for x in c1.members() for y in c2.members()}


def _twist_within(c1, c2, c):
    return all(c.related(a, b) for a, b in twist_product(c1, c2))


def _above(c, congs):
    return [d for d in congs if c <= d]


def is_semiprime(c, congs):
    return all(d == c for d in _above(c, congs) if _twist_within(d, d, c))


def is_prime(c, congs):
    up = _above(c, congs)
    return all(d1 == c or d2 == c for d1 in up for d2 in up if _twist_within(d1, d2, c))


def is_irreducible(c, congs):
    up = _above(c, congs)
    return all(d1 == c or d2 == c for d1 in up for d2 in up if (d1 & d2) == c)


def spectrum_report(p):
    """Closure, prime <=> semiprime and irreducible, semiprime intersections,
    and semiprime = intersection of the primes above it."""
    congs = enumerate_congruences(p)
    r = Report(f"congruences of {p.name} ({len(congs)})")
    r.add("enumerated partitions close", next((c.fmt() for c in congs
                                               if not is_congruence(p, c.labels)), None))
    r.add("diag is a congruence", None if diag(p) in congs else "diag missing")
    flags = {c: (is_prime(c, congs), is_semiprime(c, congs), is_irreducible(c, congs)) for c in congs}
    r.add("prime iff semiprime and irreducible",
          next((c.fmt() for c, (pr, sp, ir) in flags.items() if pr != (sp and ir)), None))
    semi = [c for c in congs if flags[c][1]]
    r.add("intersection of semiprimes is semiprime",
          next(((a.fmt(), b.fmt()) for a in semi for b in semi
                if (a & b) in flags and not flags[a & b][1]), None))
    bad = None
    for c in semi:
        primes = [d for d in congs if flags[d][0] and c <= d]
        meet = total(p)
        for d in primes:
            meet = meet & d
        if meet != c:
            bad = (c.fmt(), meet.fmt())
            break
    r.add("semiprime is the intersection of primes above it", bad)
    r.flags = flags
    return r


# A0-loci and the Zariski correspondence ---------------------------------------------------------


class TruncatedSpace:
    """All polynomials in ``nvars`` commuting variables of degree <= ``degree``
    with coefficients from the carrier, with a value table on A^nvars."""

    def __init__(self, p, nvars=1, degree=2, coeffs=None, cap=10 ** 5):
        self.pair = p
        self.nvars = nvars
        self.monos = [m for d in range(degree + 1)
                      for m in itertools.product(range(d + 1), repeat=nvars) if sum(m) == d]
        self.coeffs = list(coeffs) if coeffs is not None else list(p.sample())
        if len(self.coeffs) ** len(self.monos) > cap:
            raise BoundExceeded("truncated polynomial space too large")
        self.points = list(itertools.product(p.sample(), repeat=nvars))
        mono_vals = [[p.prod(p.power(b, e) for b, e in zip(pt, m)) for pt in self.points]
                     for m in self.monos]
        self.polys = list(itertools.product(self.coeffs, repeat=len(self.monos)))
        self.values = []
        for f in self.polys:
            row = []
            for k in range(len(self.points)):
                acc = p.zero
                for c, mv in zip(f, mono_vals):
                    if c != p.zero:
                        acc = p.add(acc, p.mul(c, mv[k]))
                row.append(acc)
            self.values.append(tuple(row))
        self.nulls = [tuple(p.is_null(v) for v in row) for row in self.values]

    def fmt_poly(self, f):
        p = self.pair
        names = "xyzw"
        terms = []
        for c, m in zip(f, self.monos):
            if c == p.zero:
                continue
            mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
            terms.append(p.fmt(c) if not mono else (mono if c == p.one else f"{p.fmt(c)}*{mono}"))
        return " + ".join(terms) or "0"

    def locus(self, poly_indices):
        """Points where every listed polynomial takes a null value."""
        return frozenset(k for k in range(len(self.points))
                         if all(self.nulls[i][k] for i in poly_indices))

    def cong_of_locus(self, Z):
        """cong(Z) as (class key per polynomial, indices of polynomials null on Z)."""
        Z = sorted(Z)
        keys = [tuple(row[k] for k in Z) for row in self.values]
        null_on_Z = [i for i, nz in enumerate(self.nulls) if all(nz[k] for k in Z)]
        return keys, null_on_Z

    def locus_of_cong(self, cong):
        """Points b with f(b) = g(b) in A0 for all related f, g in the null part."""
        keys, null_idx = cong
        out = set()
        for k in range(len(self.points)):
            vals = {}
            ok = True
            for i in null_idx:
                if not self.nulls[i][k]:
                    ok = False
                    break
                v = vals.setdefault(keys[i], self.values[i][k])
                if v != self.values[i][k]:
                    ok = False
                    break
            if ok:
                out.add(k)
        return frozenset(out)

    def all_loci(self):
        """Distinct loci of single polynomials, plus the whole space."""
        seen = {frozenset(range(len(self.points)))}
        for i in range(len(self.polys)):
            seen.add(self.locus([i]))
        return sorted(seen, key=lambda z: (len(z), sorted(z)))


def zariski_report(p, nvars=1, degree=2):
    space = TruncatedSpace(p, nvars, degree)
    r = Report(f"Z(cong(Z)) = Z on {p.name} (vars {nvars}, deg <= {degree})")
    bad = None
    loci = space.all_loci()
    for Z in loci:
        back = space.locus_of_cong(space.cong_of_locus(Z))
        if back != Z:
            bad = ([space.points[k] for k in sorted(Z)], [space.points[k] for k in sorted(back)])
            break
    r.add("Z(cong(Z)) = Z", bad)
    r.loci = len(loci)
    return r


def is_radical(space, cong):
    """(cong(Z(Theta)) contains Theta, and equals it) for a congruence given as
    (keys, null indices) on the truncated space."""
    keys, null_idx = cong
    back_keys, back_null = space.cong_of_locus(space.locus_of_cong(cong))
    n = len(keys)
    contains = all(back_keys[i] == back_keys[j] for i in range(n) for j in range(i)
                   if keys[i] == keys[j]) and set(null_idx) <= set(back_null)
    equal = contains and all(keys[i] == keys[j] for i in range(n) for j in range(i)
                             if back_keys[i] == back_keys[j]) and set(back_null) == set(null_idx)
    return contains, equal
