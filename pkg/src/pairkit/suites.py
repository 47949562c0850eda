"""Law catalog and suite runner.

Each law maps a pair to (status, witness, detail).  Status is one of
pass / fail / sampled / skipped; sampled means the law passed on the
declared sample of a symbolic instance.
"""

from __future__ import annotations

import fnmatch
import itertools
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import congruences as cg
from . import core
from . import linalg as la
from . import matrices as mx
from . import morphisms as mo
from . import polynomials as po

DEFAULT_SEED = 20240607


class Skip(Exception):
    pass


@dataclass(frozen=True)
class Law:
    law_id: str
    ref: str
    suite: str
    fn: object


@dataclass
class Context:
    seed: int = DEFAULT_SEED
    bound: int = 4
    palette: tuple = None


def _need_finite(p, limit=None):
    if not p.finite:
        raise Skip("instance is not enumerable")
    if limit is not None and len(p.sample()) > limit:
        raise Skip(f"carrier larger than {limit}")


def _need_property_n(p):
    if "lacks" in p.info:
        raise Skip(p.info["lacks"])


def _report_result(r):
    if r.ok:
        return None, None
    c = r.failures()[0]
    return [c.name, c.witness], None


# pair laws --------------------------------------------------------------------


def law_axioms(p, ctx):
    return _report_result(core.verify_pair_axioms(p))


def law_property_n(p, ctx):
    _need_property_n(p)
    return _report_result(core.verify_property_n(p))


def law_e_identities(p, ctx):
    _need_property_n(p)
    return _report_result(core.verify_e_identities(p))


def law_proper_shallow(p, ctx):
    _need_finite(p)
    if core.is_proper(p) and core.is_shallow(p) and not core.is_a0_domain(p):
        return "proper and shallow but not an A0-domain", None
    return None, None


def law_uniform(p, ctx):
    _need_finite(p)
    if not core.is_metatangible(p):
        raise Skip("not metatangible")
    for c in p.sample():
        try:
            a, m = core.uniform_presentation(p, c)
        except core.NotMetatangible:
            return p.fmt(c), None
        rebuilt = p.zero if m == 0 else (p.circ(a) if m == 2 and not core.is_first_kind(p)
                                         else p.times(m, a))
        if rebuilt != c:
            return [p.fmt(c), p.fmt(a), m], None
    return None, None


def _hyper_only(p):
    if p.info.get("family") != "hyperpair":
        raise Skip("not a hyperpair")


def law_fissure(p, ctx):
    _hyper_only(p)
    return core.fissure_witness(p, ctx.bound), None


def law_strong_rev(p, ctx):
    _hyper_only(p)
    return core.strong_reversibility_witness(p), None


def law_a0_domain(p, ctx):
    _hyper_only(p)
    return None if core.is_a0_domain(p) else "not an A0-domain", None


# roots ------------------------------------------------------------------------


def _shift_points(p):
    # without distributivity only tangible b multiply termwise
    return p.sample() if p.distributive else list(p.tangibles0())


def law_shift_identity(p, ctx):
    R = po.PolyRing(p)
    bad = [(p.fmt(b), n) for b in _shift_points(p) for n in range(1, 5)
           if not po.factor_identity_check(R, b, n)]
    return (bad[0] if bad else None), None


def law_shift_bound(p, ctx):
    R = po.PolyRing(p)
    bad = [(p.fmt(b), n) for b in _shift_points(p) for n in range(1, 5)
           if not po.shift_bound_check(R, b, n)]
    return (bad[0] if bad else None), None


def law_shift_expansion(p, ctx):
    R = po.PolyRing(p)
    coeffs = _shift_points(p)[:4]
    for f in po.all_polys(R, 2, coeffs):
        for b in _shift_points(p):
            if not po.shift_expansion_check(R, f, b):
                return [R.fmt(f), p.fmt(b)], None
    return None, None


def _poly_ready(p):
    _need_finite(p, 16)
    if not p.distributive and p.info.get("family") != "hyperpair":
        raise Skip("polynomial evaluation needs a distributive carrier")


def law_root_i(p, ctx):
    _poly_ready(p)
    r = po.root_theorem_report(p_ring(p), 2)
    c = r.get("<=-root implies root")
    return c.witness, {"witnesses": r.witnesses}


def law_root_ii(p, ctx):
    _poly_ready(p)
    if not core.check_fissure(p, ctx.bound):
        raise Skip("fissure fails")
    r = po.root_theorem_report(p_ring(p), 2)
    return r.get("tangible root is a <=-root").witness, None


def law_root_count(p, ctx):
    _poly_ready(p)
    if not core.is_a0_domain(p):
        raise Skip("not an A0-domain")
    return po.distinct_root_count_witness(p_ring(p), 2), None


def law_divisibility(p, ctx):
    """Every <=-division witness g yields the null-division witness g-dag."""
    _poly_ready(p)
    R = p_ring(p)
    T = list(p.tangibles())[:3]
    targets = list(po.all_polys(R, 2, p.sample()[:4]))
    targets += [R.make([(2, p.one), (0, p.dag(p.power(b, 2)))]) for b in T]
    found = 0
    for a in T:
        f1 = R.linear(a)
        for f2 in targets:
            g = po.divides_preceq(R, f1, f2)
            if g is None:
                continue
            found += 1
            if not R.is_null(R.add(f2, R.mul(R.dag(g), f1))):
                return [R.fmt(f1), R.fmt(f2), R.fmt(g)], None
    return None, {"witnesses": found}


def law_product_rule(p, ctx):
    _need_finite(p)
    rng = random.Random(ctx.seed)
    R = p_ring(p)
    S = p.sample()
    for _ in range(50):
        g = R.from_coeffs([rng.choice(S) for _ in range(rng.randint(1, 4))])
        a = rng.choice(list(p.tangibles()))
        if not po.product_rule_check(R, g, a):
            return [R.fmt(g), p.fmt(a)], None
    return None, None


def p_ring(p):
    return po.PolyRing(p)


# matrices -----------------------------------------------------------------------


def _mats(p, n=2, cap=300):
    _need_finite(p)
    if len(p.sample()) ** (n * n) > cap:
        raise Skip(f"more than {cap} matrices of size {n}")
    return list(mx.all_matrices(p, n))


def law_cayley_hamilton(p, ctx):
    for A in _mats(p):
        if not mx.cayley_hamilton_check(p, A):
            return mx.fmt_matrix(p, A), None
    return None, None


def _det_law(which):
    def law(p, ctx):
        ms = _mats(p)
        for A in ms:
            for B in ms:
                if not mx.det_product_check(p, A, B)[which]:
                    return [mx.fmt_matrix(p, A), mx.fmt_matrix(p, B)], None
        return None, None
    return law


def law_laplace(p, ctx):
    n = 3 if len(p.sample()) <= 3 else 2
    ms = _mats(p, n, cap=20000)
    readings = mx.laplace_readings(p, ms)
    holds = sorted("/".join(k) for k, w in readings.items() if w is None)
    cb = mx.cauchy_binet_readings(p, ms, 1)
    cb_holds = sorted("/".join(k) for k, w in cb.items() if w is None)
    detail = {"laplace": holds, "cauchyBinet1": cb_holds, "n": n}
    if not holds:
        return "no reading holds", detail
    return None, detail


def law_adjoint(p, ctx):
    for A in _mats(p):
        C = mx.mat_mul(p, A, mx.dag_adjoint(p, A))
        d = mx.dag_det(p, A)
        n = len(A)
        if any(C[i][i] != d for i in range(n)) or \
                any(not p.is_null(C[i][j]) for i in range(n) for j in range(n) if i != j):
            return mx.fmt_matrix(p, A), None
    return None, None


def law_eigen(p, ctx):
    for A in _mats(p):
        w = mx.eigenvalue_root_witness(p, A)
        if w is not None:
            return [mx.fmt_matrix(p, A), p.fmt(w)], None
    return None, None


def law_perm_det(p, ctx):
    for n in (2, 3):
        for perm in itertools.permutations(range(n)):
            d = mx.dag_det(p, mx.permutation_matrix(p, perm))
            if d not in (p.one, p.dag_unit):
                return [list(perm), p.fmt(d)], None
    return None, None


def law_trace(p, ctx):
    ms = _mats(p)
    for A in ms:
        for B in ms:
            if not mx.trace_cyclicity_check(p, A, B) or not mx.trace_commutator_null(p, A, B):
                return [mx.fmt_matrix(p, A), mx.fmt_matrix(p, B)], None
    return None, None


def law_involutions(p, ctx):
    ms = _mats(p)
    for name, star in (("transpose", mx.transpose), ("symplectic", lambda A: mx.symplectic(p, A))):
        r = mx.involution_report(p, star, ms)
        if not r.ok:
            c = r.failures()[0]
            return [name, c.name, c.witness], None
    return None, None


# linear algebra --------------------------------------------------------------------


def law_row_sum(p, ctx):
    _need_finite(p)
    n = 3 if len(p.sample()) <= 4 else 2
    for M in mx.all_matrices(p, n - 1, n):
        if not mx.is_singular(p, la.row_sum_matrix(p, M)):
            return mx.fmt_matrix(p, la.row_sum_matrix(p, M)), None
    return None, None


def law_conditions(p, ctx):
    _need_finite(p, 4)
    n = 3 if len(p.sample()) <= 3 else 2
    r = la.condition_harness(p, n)
    return _report_result(r)[0], {"nMax": n}


# congruences --------------------------------------------------------------------------


def law_spectrum(p, ctx):
    _need_finite(p, cg.CARRIER_CAP)
    return _report_result(cg.spectrum_report(p))


def law_quotients(p, ctx):
    _need_finite(p, cg.CARRIER_CAP)
    for c in cg.enumerate_congruences(p):
        if c.is_total():
            continue
        r = core.verify_pair_axioms(cg.quotient_pair(p, c))
        if not r.ok:
            return [c.fmt(), r.failures()[0].name], None
    return None, None


def law_zariski(p, ctx):
    _need_finite(p, 4)
    for nv in (1, 2):
        r = cg.zariski_report(p, nv, 2)
        if not r.ok:
            return [nv, r.failures()[0].witness], None
    return None, None


# morphisms -------------------------------------------------------------------------------


def _maps_from(p):
    from .registry import registered_maps
    maps = [f for f in registered_maps() if f.source.name == p.name]
    if not maps:
        raise Skip("no registered maps from this instance")
    return maps


def law_chain(p, ctx):
    for f in _maps_from(p):
        w = mo.inclusion_chain_witness(f)
        if w is not None:
            return [f.name, w], None
    return None, None


def law_closure_oracle(p, ctx):
    for f in _maps_from(p):
        if (mo.weak_morphism_witness(f) is None) != (mo.naive_weak_witness(f, 6) is None):
            return f.name, None
    return None, None


CATALOG = sorted([
    Law("pair.axioms", "semiring pair axioms", "pair-axioms", law_axioms),
    Law("pair.property-n", "Property N with unique e", "pair-axioms", law_property_n),
    Law("pair.e-identities", "1dag e = e and e^2 = e + e", "pair-axioms", law_e_identities),
    Law("class.proper-shallow-domain", "proper and shallow implies A0-domain", "classification",
        law_proper_shallow),
    Law("class.uniform-presentation", "uniform presentation of metatangible pairs",
        "classification", law_uniform),
    Law("hyper.fissure", "fissure for the subset relation", "hyper", law_fissure),
    Law("hyper.strong-reversibility", "strong T-reversibility for the subset relation", "hyper",
        law_strong_rev),
    Law("hyper.a0-domain", "hyperpairs of hyperfields are A0-domains", "hyper", law_a0_domain),
    Law("roots.shift-identity", "(l + b dag) g_{b,n} expansion", "roots", law_shift_identity),
    Law("roots.shift-bound", "l^n + (b^n) dag <= (l + b dag) g_{b,n}", "roots", law_shift_bound),
    Law("roots.shift-expansion", "(l + b dag) g + alpha_0 circ expansion", "roots",
        law_shift_expansion),
    Law("roots.preceq-root-is-root", "a <=-root is a root", "roots", law_root_i),
    Law("roots.root-is-preceq-root", "tangible roots are <=-roots under fissure", "roots",
        law_root_ii),
    Law("roots.root-count", "at most deg f tangible <=-roots over an A0-domain", "roots",
        law_root_count),
    Law("roots.divisibility", "<=-divisibility implies null divisibility", "roots",
        law_divisibility),
    Law("roots.product-rule", "((l - a) g)' = g + (l - a) g'", "roots", law_product_rule),
    Law("matrices.cayley-hamilton", "f_A(A) null in the doubled pair", "matrices",
        law_cayley_hamilton),
    Law("matrices.det-product", "|AB|dag >= |A|dag |B|dag", "matrices", _det_law(0)),
    Law("matrices.det-product-op", "dag|AB| >= dag|A| dag|B|", "matrices", _det_law(1)),
    Law("matrices.laplace", "row expansion of the dagger-determinant", "matrices", law_laplace),
    Law("matrices.adjoint", "A adj A = |A|dag I + off-diagonal nulls", "matrices", law_adjoint),
    Law("matrices.eigen-roots", "eigenvalues are roots of f_A", "matrices", law_eigen),
    Law("matrices.permutation-det", "permutation matrices have determinant 1 or 1dag",
        "matrices", law_perm_det),
    Law("matrices.trace", "tr(AB) = tr(BA), tr(AB - BA) null", "matrices", law_trace),
    Law("matrices.involutions", "transpose and symplectic involutions", "matrices",
        law_involutions),
    Law("linalg.row-sum-singular", "a row equal to the sum of the others gives a singular matrix",
        "linalg", law_row_sum),
    Law("linalg.conditions", "conditions A1-A5", "linalg", law_conditions),
    Law("cong.spectrum", "prime, semiprime and irreducible congruences", "congruences",
        law_spectrum),
    Law("cong.quotients", "quotients by congruences are pairs", "congruences", law_quotients),
    Law("cong.zariski", "Z(cong(Z)) = Z", "congruences", law_zariski),
    Law("morph.inclusion-chain", "homomorphism => relation-morphism => weak", "morphisms",
        law_chain),
    Law("morph.closure-oracle", "closure decision agrees with bounded search", "morphisms",
        law_closure_oracle),
], key=lambda law: law.law_id)

SUITES = sorted({law.suite for law in CATALOG}) + ["all"]


def select(suite="all", pattern=None):
    laws = [law for law in CATALOG if suite == "all" or law.suite == suite]
    if pattern:
        laws = [law for law in laws if fnmatch.fnmatch(law.law_id, pattern)]
    return laws


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def _run_law(law, p, ctx, timing):
    start = time.perf_counter()
    entry = {"lawId": law.law_id, "ref": law.ref}
    try:
        if "lacks" in p.info and law.law_id != "pair.axioms":
            raise Skip(p.info["lacks"])
        witness, detail = law.fn(p, ctx)
    except (Skip, core.BoundExceeded) as why:
        entry["status"] = "skipped"
        entry["reason"] = str(why)
    else:
        if witness is None:
            entry["status"] = "pass" if p.finite else "sampled"
        else:
            entry["status"] = "fail"
            entry["witness"] = _jsonable(witness)
        if detail:
            entry["detail"] = _jsonable(detail)
    if timing:
        entry["seconds"] = round(time.perf_counter() - start, 3)
    return entry


def run_suite(p, suite="all", pattern=None, ctx=None, timing=False, jobs=1):
    """Run the selected laws on p; the report is ordered by lawId.

    With jobs > 1 laws run on a thread pool; the report is the same.
    """
    ctx = ctx or Context()
    laws = select(suite, pattern)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(lambda law: _run_law(law, p, ctx, timing), laws))
    else:
        checks = [_run_law(law, p, ctx, timing) for law in laws]
    counts = {s: sum(1 for c in checks if c["status"] == s)
              for s in ("pass", "fail", "sampled", "skipped")}
    return {"instance": p.name, "suite": suite, "pattern": pattern, "seed": ctx.seed,
            "bound": ctx.bound, "checks": checks, "summary": counts}


def report_failed(report):
    return any(c["status"] == "fail" for c in report["checks"])
