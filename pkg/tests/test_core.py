import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairkit import core, registry
from conftest import FINITE, el


@pytest.mark.parametrize("name", FINITE)
def test_pair_axioms_on_every_finite_instance(name):
    r = core.verify_pair_axioms(registry.get(name))
    assert r.ok, str(r)


@pytest.mark.parametrize("name", ["boolean", "vandiver-2", "supertropical-boolean",
                                  "doubled-boolean", "krasner-hyperpair", "sign-hyperpair",
                                  "field-F3", "quotient-F3/{1,2}", "quotient-F5/{1}"])
def test_property_n_and_e_identities(name):
    p = registry.get(name)
    assert core.verify_property_n(p).ok
    assert core.verify_e_identities(p).ok


@pytest.mark.parametrize("n", [3, 4])
def test_vandiver_top_nulls_lack_property_n(n):
    # 1 + 1 = 2 is not null, so no e can exist
    r = core.verify_property_n(registry.get(f"vandiver-{n}"))
    assert not r.ok


@pytest.mark.parametrize("n", [3, 4])
def test_vandiver_upper_nulls_have_property_n(n):
    assert core.verify_property_n(registry.get(f"vandiver-upper-{n}")).ok


def test_quotient_f5_1_4_breaks_e_squared():
    p = registry.get("quotient-F5/{1,4}")
    e = p.e
    # classes 0, 1 = {1,4}, 2 = {2,3}; 1 + 4 meets classes 0 and 2
    assert p.fmt(e) == "{0,2}"
    assert p.fmt(p.mul(e, e)) == "{0,1}"
    assert p.fmt(p.add(e, e)) == "{0,1,2}"
    assert not core.verify_e_identities(p).ok


def test_vandiver_tables():
    p = registry.get("vandiver-3")
    assert p.add(2, 2) == 3 and p.mul(2, 2) == 3 and p.add(1, 1) == 2
    assert p.is_null(3) and not p.is_null(2)


def test_supertropical_boolean_classification(sb):
    c = core.classify(sb)
    assert c.shallow and c.a0_bipotent and c.first_kind
    assert c.proper and c.a0_domain and c.metatangible


def test_supertropical_case_addition(sb):
    one, g = el(sb, "1", "1g")
    assert sb.add(one, one) == g
    assert sb.add(one, g) == g
    assert sb.add(sb.zero, one) == one
    assert sb.mul(one, g) == g


def test_doubled_boolean_is_second_kind(db):
    assert not core.is_first_kind(db)
    assert db.e == (1, 1)


@pytest.mark.parametrize("name", FINITE)
def test_proper_and_shallow_imply_a0_domain(name):
    p = registry.get(name)
    if core.is_proper(p) and core.is_shallow(p):
        assert core.is_a0_domain(p)


@pytest.mark.parametrize("name", ["supertropical-boolean", "doubled-boolean", "ex-e-1",
                                  "ex-e-2", "krasner-hyperpair", "boolean"])
def test_uniform_presentation_rebuilds_every_element(name):
    p = registry.get(name)
    assert core.is_metatangible(p)
    for c in p.sample():
        a, m = core.uniform_presentation(p, c)
        if m == 0:
            assert c == p.zero
        elif core.is_first_kind(p):
            assert p.times(m, a) == c
        else:
            assert c == (a if m == 1 else p.circ(a))


def test_uniform_presentation_fails_on_full_powerset_of_f5():
    # {0,1} is null, lies in T + A0, yet is not a° for any tangible a
    p = registry.get("quotient-F5/{1}")
    assert core.is_metatangible(p)
    with pytest.raises(core.NotMetatangible):
        core.uniform_presentation(p, p.parse("{0,1}"))


def test_uniform_presentation_refuses_non_metatangible():
    p = registry.get("sign-hyperpair")
    assert not core.is_metatangible(p)
    with pytest.raises(core.NotMetatangible):
        core.uniform_presentation(p, p.one)


@pytest.mark.parametrize("name", ["krasner-hyperpair", "sign-hyperpair", "sign4-hyperpair",
                                  "quotient-F3/{1,2}", "quotient-F5/{1,4}"])
def test_subset_relation_fissure_and_strong_reversibility(name):
    p = registry.get(name)
    assert core.check_fissure(p, 4)
    assert core.check_strong_reversibility(p)


def test_leq0_is_null_extension(sb):
    one, g = el(sb, "1", "1g")
    assert sb.leq0(one, g) and not sb.leq0(g, one)
    assert all(sb.leq0(b, b) for b in sb.sample())


def test_parse_rejects_unknown_element(sb):
    with pytest.raises(core.DomainMismatch):
        sb.parse("7")


@pytest.mark.parametrize("name", FINITE)
def test_fmt_parse_round_trip(name):
    p = registry.get(name)
    assert all(p.parse(p.fmt(b)) == b for b in p.sample())


def test_symbolic_instances_are_marked_sampled():
    p = registry.get("supertropical-z")
    assert not p.finite
    assert core.verify_pair_axioms(p).sampled


# properties ---------------------------------------------------------------------

SEMIRINGS = [n for n in FINITE if registry.get(n).distributive]


@st.composite
def triples(draw):
    name = draw(st.sampled_from(SEMIRINGS))
    p = registry.get(name)
    S = p.sample()
    return p, draw(st.sampled_from(S)), draw(st.sampled_from(S)), draw(st.sampled_from(S))


@settings(max_examples=300, deadline=None)
@given(triples())
def test_semiring_laws(t):
    p, a, b, c = t
    assert p.add(a, p.add(b, c)) == p.add(p.add(a, b), c)
    assert p.mul(a, p.mul(b, c)) == p.mul(p.mul(a, b), c)
    assert p.mul(a, p.add(b, c)) == p.add(p.mul(a, b), p.mul(a, c))
    assert p.add(a, b) == p.add(b, a)


@settings(max_examples=200, deadline=None)
@given(triples())
def test_nulls_form_an_ideal(t):
    p, a, b, _ = t
    if p.is_null(a) and p.is_null(b):
        assert p.is_null(p.add(a, b))
    if p.is_null(a):
        assert p.is_null(p.mul(a, b)) and p.is_null(p.mul(b, a))


@settings(max_examples=200, deadline=None)
@given(triples())
def test_leq0_is_a_preorder_compatible_with_addition(t):
    p, a, b, c = t
    if p.leq0(a, b) and p.leq0(b, c):
        assert p.leq0(a, c)
    if p.leq0(a, b):
        assert p.leq0(p.add(a, c), p.add(b, c))


def test_times_matches_repeated_sum(sb):
    for b, n in itertools.product(sb.sample(), range(5)):
        assert sb.times(n, b) == sb.sum([b] * n)
