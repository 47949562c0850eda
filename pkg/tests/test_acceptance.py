"""Acceptance criteria 1-9.

Each criterion is a function returning (ok, problems).  The tests print one
PASS/FAIL line per criterion; ``python tests/test_acceptance.py`` prints the
same lines without pytest.  All arithmetic is exact, so every comparison is
equality (tolerance zero); the time budgets are part of each criterion.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from pairkit import congruences as cg
from pairkit import core, descriptor, hyper, linalg, registry, suites
from pairkit import matrices as mx
from pairkit import morphisms as mo
from pairkit import polynomials as po
from pairkit.instances import minus_val
from pairkit.puiseux import Series, parse_series

BUDGET = {1: 10, 2: 10, 3: 30, 4: 60, 5: 300, 6: 120, 7: 120, 8: 30, 9: None}

AXIOM_INSTANCES = ["boolean", "vandiver-2", "vandiver-3", "vandiver-4", "supertropical-boolean",
                   "doubled-boolean", "trop-ext", "krasner-hyperpair", "sign-hyperpair",
                   "sign4-hyperpair", "quotient-F3/{1}", "quotient-F3/{1,2}", "quotient-F5/{1}",
                   "quotient-F5/{1,4}", "quotient-F5/{1,2,3,4}"]
HYPERPAIRS = ["krasner-hyperpair", "sign-hyperpair", "sign4-hyperpair", "quotient-F3/{1}",
              "quotient-F3/{1,2}", "quotient-F5/{1}", "quotient-F5/{1,4}", "quotient-F5/{1,2,3,4}"]
# hyperpairs built from hyperfields (sign4 comes from a hypergroup only)
HYPERFIELD_PAIRS = [n for n in HYPERPAIRS if n != "sign4-hyperpair"]


def finite_names():
    return [n for n in registry.listed() if registry.get(n).finite]


def _report_problems(problems, name, r):
    problems += [f"{name}: {c.name} {c.witness}" for c in r.failures()]


# 1 --------------------------------------------------------------------------------


def criterion_1():
    problems = []
    for name in AXIOM_INSTANCES:
        p = registry.get(name)
        _report_problems(problems, name, core.verify_pair_axioms(p))
        _report_problems(problems, name, core.verify_property_n(p))
        _report_problems(problems, name, core.verify_e_identities(p))
    return not problems, problems


# 2 --------------------------------------------------------------------------------


def _rebuilds(p, c):
    a, m = core.uniform_presentation(p, c)
    if m == 0:
        return c == p.zero
    if core.is_first_kind(p):
        return p.times(m, a) == c
    return c == (a if m == 1 else p.circ(a))


def criterion_2():
    problems = []
    c = core.classify(registry.get("supertropical-boolean"))
    if not (c.shallow and c.a0_bipotent and c.first_kind):
        problems.append(f"supertropical-boolean flags {c.as_dict()}")
    for name in registry.listed():
        p = registry.get(name)
        if core.is_proper(p) and core.is_shallow(p) and not core.is_a0_domain(p):
            problems.append(f"{name}: proper and shallow but not an A0-domain")
        if not core.is_metatangible(p):
            continue
        for b in p.sample():
            try:
                ok = _rebuilds(p, b)
            except core.NotMetatangible as exc:
                ok, why = False, str(exc)
            else:
                why = "rebuilt element differs"
            if not ok:
                problems.append(f"{name}: {p.fmt(b)}: {why}")
    return not problems, problems


# 3 --------------------------------------------------------------------------------


def criterion_3():
    problems = []
    for name in HYPERPAIRS:
        p = registry.get(name)
        if not core.check_fissure(p, 4):
            problems.append(f"{name}: fissure fails (N = 4)")
        if not core.check_strong_reversibility(p):
            problems.append(f"{name}: strong reversibility fails")
    for name in HYPERFIELD_PAIRS:
        if not core.is_a0_domain(registry.get(name)):
            problems.append(f"{name}: not an A0-domain")
    w = hyper.pair_isomorphism_witness(registry.get("krasner-hyperpair"),
                                       registry.get("supertropical-boolean"),
                                       hyper.krasner_to_supertropical())
    if w is not None:
        problems.append(f"Krasner isomorphism: {w}")
    lhs, rhs = hyper.phase_double_distributivity_witness(Fraction(0), Fraction(1, 4))
    if lhs == rhs:
        problems.append("phase double distributivity did not fail at angles 0, 1/4")
    return not problems, problems


# 4 --------------------------------------------------------------------------------


def criterion_4():
    problems = []
    for name in finite_names():
        p = registry.get(name)
        R = po.PolyRing(p)
        for b in p.sample():
            for n in range(1, 5):
                if not po.factor_identity_check(R, b, n):
                    problems.append(f"{name}: shift identity at b = {p.fmt(b)}, n = {n}")
    for name in ("supertropical-boolean", "doubled-boolean"):
        p = registry.get(name)
        R = po.PolyRing(p)
        for b in p.tangibles():
            f2 = R.make([(2, p.one), (0, p.dag(p.power(b, 2)))])
            if po.divides_preceq(R, R.linear(b), f2) is None:
                problems.append(f"{name}: no <=-division witness for l + {p.fmt(b)}")
    for name in ("sign-hyperpair", "supertropical-boolean"):
        r = po.root_theorem_report(po.PolyRing(registry.get(name)), 2)
        _report_problems(problems, name, r)
        if r.witnesses == 0:
            problems.append(f"{name}: no <=-root witnesses found")
    for name in finite_names():
        p = registry.get(name)
        if core.is_a0_domain(p):
            w = po.distinct_root_count_witness(po.PolyRing(p), 2)
            if w is not None:
                problems.append(f"{name}: more roots than the degree {w}")
    return not problems, problems


# 5 --------------------------------------------------------------------------------


def criterion_5():
    problems = []
    sb, db = registry.get("supertropical-boolean"), registry.get("doubled-boolean")
    ms = list(mx.all_matrices(sb, 2))
    if len(ms) != 81:
        problems.append(f"expected 81 matrices, got {len(ms)}")
    for p, mats in ((sb, ms), (db, list(mx.all_matrices(db, 2)))):
        bad = next((A for A in mats if not mx.cayley_hamilton_check(p, A)), None)
        if bad is not None:
            problems.append(f"{p.name}: Cayley-Hamilton at {mx.fmt_matrix(p, bad)}")
    bad = next(((A, B) for A in ms for B in ms if not mx.det_product_check(sb, A, B)[0]), None)
    if bad is not None:
        problems.append(f"det product at {[mx.fmt_matrix(sb, M) for M in bad]}")
    m3 = list(mx.all_matrices(sb, 3))
    readings = mx.laplace_readings(sb, m3)
    holding = [k for k, w in readings.items() if w is None]
    if not holding:
        problems.append("no reading of the Laplace identity holds at n = 3")
    cb = {}
    for m in (1, 2):
        cb[m] = [k for k, w in mx.cauchy_binet_readings(sb, m3, m).items() if w is None]
        if not cb[m]:
            problems.append(f"no reading of the Cauchy-Binet identity holds at n = 3, |I| = {m}")
    for A in ms:
        if mx.adjoint_quasi_identity(sb, A)[0] is None:
            C = mx.mat_mul(sb, A, mx.dag_adjoint(sb, A))
            problems.append(f"A adj A = {mx.fmt_matrix(sb, C)} is not |A|dag = "
                            f"{sb.fmt(mx.dag_det(sb, A))} times a quasi-identity at "
                            f"A = {mx.fmt_matrix(sb, A)}")
            break
    for M in mx.all_matrices(sb, 2, 3):
        if not mx.is_singular(sb, linalg.row_sum_matrix(sb, M), "balanced"):
            problems.append(f"row-sum matrix of {mx.fmt_matrix(sb, M)} is nonsingular")
            break
    return not problems, problems, f"Laplace readings holding: {holding}; " \
        f"Cauchy-Binet readings holding: {cb}"


# 6 --------------------------------------------------------------------------------


def criterion_6():
    problems = []
    sb = registry.get("supertropical-boolean")
    r = linalg.condition_harness(sb, 3)
    _report_problems(problems, sb.name, r)
    bad = next((A for A in mx.all_matrices(sb, 2) if mx.eigenvalue_root_witness(sb, A) is not None),
               None)
    if bad is not None:
        problems.append(f"eigenvalue that is not a root at {mx.fmt_matrix(sb, bad)}")
    return not problems, problems


# 7 --------------------------------------------------------------------------------


def criterion_7():
    problems = []
    for name in finite_names():
        p = registry.get(name)
        if len(p.sample()) > 4:
            continue
        _report_problems(problems, name, cg.spectrum_report(p))
        for nvars in (1, 2):
            _report_problems(problems, name, cg.zariski_report(p, nvars, 2))
    return not problems, problems


# 8 --------------------------------------------------------------------------------


def puiseux_sample():
    """30 series: the worked pair f, g, f + g, their negatives, and a seeded
    set of further series with some exact cancellations."""
    import random
    f, g = parse_series("3*t^2 + 9*t^4"), parse_series("-3*t^2 + 7*t^3 + 7*t^4")
    out = [Series(), f, g, f + g, -f, -g, -(f + g)]
    rng = random.Random(suites.DEFAULT_SEED)
    while len(out) < 30:
        s = parse_series(" + ".join(f"{rng.choice([-3, -1, 1, 2, 5])}*t^{e}"
                                    for e in sorted(rng.sample(range(-2, 5), rng.randint(1, 3)))))
        out.append(s)
        if len(out) < 30 and rng.random() < 0.3:
            out.append(-s)
    return out


def criterion_8():
    problems = []
    maps = registry.registered_maps()
    if len(maps) < 20:
        problems.append(f"only {len(maps)} registered maps")
    for f in maps:
        if (mo.weak_morphism_witness(f) is None) != (mo.naive_weak_witness(f, 6) is None):
            problems.append(f"{f.name}: closure and bounded weak verdicts differ")
        w = mo.inclusion_chain_witness(f)
        if w:
            problems.append(f"{f.name}: {w}")
    S, K = hyper.signs(), hyper.krasner()
    lift = {0: 0, 1: 1, -1: 1}
    if hyper.hyper_weak_witness(S, K, lift) is not None:
        problems.append("sign->Krasner is not a weak hypergroup map")
    lifted = mo.PairedMap(registry.get("sign-hyperpair"), registry.get("krasner-hyperpair"),
                          hyper.lift_map(lift))
    if not mo.is_weak_morphism(lifted):
        problems.append("lift of sign->Krasner is not weak")
    P, sq = registry.get("puiseux"), registry.get("supertropical-q")
    v = mo.PairedMap(P, sq, minus_val(sq), name="-val")
    sample = puiseux_sample()
    if len(sample) != 30:
        problems.append(f"Puiseux sample has {len(sample)} elements")
    w = mo.sampled_preceq_witness(v, sample, 3)
    if w is not None:
        problems.append(f"-val fails on {w}")
    f, g = sample[1], sample[2]
    if (f + g).val() != 3:
        problems.append(f"v(f + g) = {(f + g).val()}")
    return not problems, problems


# 9 --------------------------------------------------------------------------------


def _cli(*argv):
    return subprocess.Popen([sys.executable, "-m", "pairkit.cli", *argv],
                            stdout=subprocess.PIPE, stderr=subprocess.PIPE)


def criterion_9():
    problems = []
    runs = [_cli("verify", "supertropical-boolean", "--suite", "all", "--json") for _ in range(2)]
    outs = [r.communicate() for r in runs]
    if outs[0][0] != outs[1][0] or not outs[0][0]:
        problems.append("verify --json output differs between runs")
    if any(r.returncode != 0 for r in runs):
        problems.append(f"supertropical-boolean exit codes {[r.returncode for r in runs]}")
    else:
        rep = json.loads(outs[0][0])
        if rep["summary"]["fail"]:
            problems.append(f"supertropical-boolean summary {rep['summary']}")
    for argv, want in ((("verify", "vandiver-3", "--suite", "pair-axioms"), 1),
                       (("verify", "no-such-pair"), 2),
                       (("verify", "max-plus-q", "--suite", "pair-axioms"), 0)):
        r = _cli(*argv)
        r.communicate()
        if r.returncode != want:
            problems.append(f"{' '.join(argv)}: exit {r.returncode}, expected {want}")
    for name in finite_names():
        p = registry.get(name)
        q = descriptor.load(json.loads(descriptor.dumps(descriptor.describe(p))))
        S, T = p.sample(), q.sample()
        same = all(p.fmt(p.add(a, b)) == q.add(x, y) and p.fmt(p.mul(a, b)) == q.mul(x, y)
                   and p.relation(a, b) == q.relation(x, y)
                   for a, x in zip(S, T) for b, y in zip(S, T))
        same = same and all(p.is_tangible(a) == q.is_tangible(x) and p.is_null(a) == q.is_null(x)
                            for a, x in zip(S, T))
        strip = lambda rep: [(c["lawId"], c["status"]) for c in rep["checks"]]  # noqa: E731
        same = same and strip(suites.run_suite(p, "pair-axioms")) == \
            strip(suites.run_suite(q, "pair-axioms"))
        if not same:
            problems.append(f"{name}: descriptor round-trip changes behaviour")
    return not problems, problems


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9}


def evaluate(n):
    start = time.perf_counter()
    out = CRITERIA[n]()
    elapsed = time.perf_counter() - start
    ok, problems = out[0], list(out[1])
    note = out[2] if len(out) > 2 else ""
    budget = BUDGET[n]
    if budget is not None and elapsed >= budget:
        ok = False
        problems.append(f"took {elapsed:.1f} s, budget {budget} s")
    head = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f} s"
    head += f", budget {budget} s)" if budget else ")"
    lines = [head] + [f"    {x}" for x in problems[:8]]
    if len(problems) > 8:
        lines.append(f"    ... {len(problems) - 8} more")
    if note:
        lines.append(f"    {note}")
    return ok, "\n".join(lines)


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, text = evaluate(n)
    with capsys.disabled():
        print("\n" + text)
    assert ok, text


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, text in results:
        print(text)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
