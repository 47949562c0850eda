import pytest

from pairkit import registry, suites


def test_catalog_is_ordered_and_unique():
    ids = [law.law_id for law in suites.CATALOG]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert all(law.ref for law in suites.CATALOG)


@pytest.mark.parametrize("suite", suites.SUITES)
def test_every_suite_selects_laws(suite):
    assert suites.select(suite)


def test_glob_selection():
    assert [law.law_id for law in suites.select("all", "pair.*")] == \
        ["pair.axioms", "pair.e-identities", "pair.property-n"]
    assert suites.select("roots", "matrices.*") == []


def test_every_law_appears_once_per_run():
    rep = suites.run_suite(registry.get("boolean"))
    assert [c["lawId"] for c in rep["checks"]] == [law.law_id for law in suites.CATALOG]
    assert sum(rep["summary"].values()) == len(suites.CATALOG)


def test_boolean_passes_everything():
    rep = suites.run_suite(registry.get("boolean"))
    assert not suites.report_failed(rep)
    assert rep["summary"]["fail"] == 0


def test_failures_carry_witnesses():
    rep = suites.run_suite(registry.get("vandiver-4"), "pair-axioms")
    fails = [c for c in rep["checks"] if c["status"] == "fail"]
    assert fails and all(c.get("witness") for c in fails)


def test_symbolic_instances_report_sampled():
    rep = suites.run_suite(registry.get("supertropical-z"), "pair-axioms")
    statuses = {c["lawId"]: c["status"] for c in rep["checks"]}
    assert statuses["pair.axioms"] == "sampled"


def test_trivial_pairs_skip_all_but_the_axioms():
    rep = suites.run_suite(registry.get("naturals"))
    for c in rep["checks"]:
        if c["lawId"] == "pair.axioms":
            assert c["status"] in ("pass", "sampled")
        else:
            assert c["status"] == "skipped" and c["reason"] == "trivial pair lacks Property N"


def test_threads_give_the_same_report():
    for name, suite in (("boolean", "all"), ("vandiver-4", "pair-axioms"), ("krasner-hyperpair", "roots")):
        p = registry.get(name)
        assert suites.run_suite(p, suite, jobs=1) == suites.run_suite(p, suite, jobs=4)


def test_timing_only_on_request():
    p = registry.get("boolean")
    plain = suites.run_suite(p, "pair-axioms")
    timed = suites.run_suite(p, "pair-axioms", timing=True)
    assert all("seconds" not in c for c in plain["checks"])
    assert all("seconds" in c for c in timed["checks"])


def test_report_records_seed_and_bound():
    rep = suites.run_suite(registry.get("boolean"), "pair-axioms", ctx=suites.Context(seed=5, bound=3))
    assert rep["seed"] == 5 and rep["bound"] == 3
