import random

import pytest

from pairkit import instances, registry
from pairkit import morphisms as mo
from pairkit.puiseux import Series, parse_series

MAPS = registry.registered_maps()


def test_enough_maps_for_the_oracle():
    assert len(MAPS) >= 20


@pytest.mark.parametrize("f", MAPS, ids=lambda f: f.name)
def test_closure_agrees_with_bounded_oracle(f):
    assert (mo.weak_morphism_witness(f) is None) == (mo.naive_weak_witness(f, 6) is None)
    assert (mo.preceq_morphism_witness(f) is None) == (mo.naive_preceq_witness(f, 6) is None)


@pytest.mark.parametrize("f", MAPS, ids=lambda f: f.name)
def test_inclusion_chain(f):
    assert mo.inclusion_chain_witness(f) is None


def by_name(name):
    return next(f for f in MAPS if f.name == name)


def test_f3_to_sign_is_not_weak():
    # 1 + 1 + 1 = 0 in F3, but {1} + {1} + {1} = {1} is not null
    f = by_name("F3->sign")
    assert mo.weak_morphism_witness(f) == ("1", "1", "1")
    assert mo.is_paired_map(f)


def test_f3_to_krasner_is_weak_but_not_a_homomorphism():
    c = mo.classify_map(by_name("F3->krasner"))
    assert c["weak"] and c["preceq"] and not c["homomorphism"]


def test_ghost_lift_is_rejected():
    f = by_name("ghost-lift (rejected)")
    assert mo.weak_morphism_witness(f) == ("1", "1")
    assert not mo.is_preceq_morphism(f)


def test_lift_of_sign_is_weak_only():
    c = mo.classify_map(by_name("lift-sign->krasner"))
    assert c["weak"] and c["preceq"] and not c["homomorphism"]


def test_determinant_is_a_reverse_relation_morphism_but_not_weak():
    d = registry.det_map()
    assert mo.is_paired_map(d)
    assert mo.is_preceq_morphism(d, dual=True)
    assert not mo.is_preceq_morphism(d)
    w = mo.weak_morphism_witness(d)
    assert w == ("[[0,1],[1,1]]", "[[0,1],[1,1g]]", "[[0,1],[1,1]]")


def test_map_axioms_report():
    r = mo.map_axioms_report(by_name("abs-doubled-boolean"))
    assert r.ok, str(r)
    assert by_name("abs-doubled-boolean").flags()["multiplicative"]


def series_sample(n=30, seed=3):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        terms = " + ".join(f"{rng.choice([-3, -1, 1, 2, 5])}*t^{e}"
                           for e in sorted(rng.sample(range(-2, 5), rng.randint(1, 3))))
        s = parse_series(terms)
        out.append(s)
        if rng.random() < 0.3:
            out.append(-s)  # exact cancellations exercise the weak condition
    return out[:n]


def test_minus_val_is_a_relation_morphism_on_a_sample():
    P, sq = registry.get("puiseux"), registry.get("supertropical-q")
    f = mo.PairedMap(P, sq, instances.minus_val(sq), name="-val")
    sample = [Series()] + series_sample(29)
    assert len(sample) == 30
    assert mo.sampled_preceq_witness(f, sample, 3) is None
    a, b = parse_series("3*t^2 + 9*t^4"), parse_series("-3*t^2 + 7*t^3 + 7*t^4")
    # cancellation: v(a + b) = 3 while -val(a) + -val(b) is the ghost of t^-2
    assert f(a + b) == ("t", -3)
    assert sq.is_null(sq.add(f(a), f(b)))
    assert sq.leq0(f(a + b), sq.add(f(a), f(b)))


def test_hom_module_operations():
    sb = registry.get("supertropical-boolean")
    maps = [mo.identity_map(sb), by_name("L[1g]-supertropical-boolean"), mo.zero_map(sb, sb)]
    r = mo.hom_module_report(maps, list(sb.sample()))
    assert r.ok, str(r)


def test_composition():
    f, g = by_name("krasner->supertropical"), by_name("supertropical->krasner")
    assert mo.same_map(mo.compose(g, f), mo.identity_map(f.source))
