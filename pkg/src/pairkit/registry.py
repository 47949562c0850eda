"""Named instances and named maps."""

from __future__ import annotations

import re
from functools import lru_cache

from . import hyper
from . import instances as inst
from .matrices import dag_det, matrix_pair
from .morphisms import PairedMap, identity_map


class UnknownInstance(KeyError):
    pass


_FIXED = {
    "boolean": inst.make_boolean,
    "max-plus-q": inst.make_max_plus,
    "naturals": inst.make_naturals,
    "supertropical-boolean": inst.make_supertropical_boolean,
    "supertropical-q": inst.make_supertropical_q,
    "supertropical-z": inst.make_supertropical_z,
    "trop-ext": inst.make_trop_ext_sample,
    "ex-infinity": inst.make_example_infinity,
    "puiseux": inst.make_puiseux,
    "krasner-hyperpair": hyper.krasner_pair,
    "sign-hyperpair": hyper.signs_pair,
    "sign4-hyperpair": hyper.signs4_pair,
}

LISTED = [
    "boolean", "vandiver-2", "vandiver-3", "vandiver-4", "vandiver-upper-3", "vandiver-upper-4",
    "supertropical-boolean", "doubled-boolean", "doubled-supertropical-boolean", "trop-ext",
    "supertropical-z", "supertropical-q", "max-plus-q", "naturals", "field-F3", "field-F5",
    "ex-e-1", "ex-e-2", "ex-infinity", "krasner-hyperpair", "sign-hyperpair", "sign4-hyperpair",
    "quotient-F3/{1}", "quotient-F3/{1,2}", "quotient-F5/{1}", "quotient-F5/{1,4}",
    "quotient-F5/{1,2,3,4}", "puiseux",
]

_QUOTIENT = re.compile(r"^quotient-F(\d+)/\{?([\d,\s]+)\}?$")


def canonical_name(name):
    m = _QUOTIENT.match(name)
    if m:
        G = sorted({int(x) for x in m.group(2).split(",") if x.strip()})
        return f"quotient-F{m.group(1)}/{{{','.join(map(str, G))}}}"
    return name


@lru_cache(maxsize=None)
def _build(name):
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"vandiver-(\d+)", name)
    if m:
        return inst.make_vandiver(int(m.group(1)))
    m = re.fullmatch(r"vandiver-upper-(\d+)", name)
    if m:
        return inst.make_vandiver(int(m.group(1)), nulls="upper")
    m = re.fullmatch(r"field-F(\d+)", name)
    if m:
        q = int(m.group(1))
        if q < 2 or any(q % d == 0 for d in range(2, q)):
            raise UnknownInstance(f"unknown instance {name!r} (field order must be prime)")
        return inst.make_field(q)
    m = re.fullmatch(r"ex-e-(\d+)", name)
    if m:
        return inst.make_example_e(int(m.group(1)))
    m = _QUOTIENT.match(name)
    if m:
        G = [int(x) for x in m.group(2).split(",") if x.strip()]
        try:
            return hyper.quotient_pair(int(m.group(1)), G)
        except ValueError as exc:
            raise UnknownInstance(f"{name}: {exc}") from None
    if name.startswith("doubled-"):
        return inst.make_doubled(get(name[len("doubled-"):]))
    raise UnknownInstance(f"unknown instance {name!r}; see 'pairkit instance list'")


def get(name):
    """Instance by name; ``quotient-F5/1,4`` and ``quotient-F5/{1,4}`` agree."""
    try:
        return _build(canonical_name(name))
    except (ValueError, RecursionError) as exc:
        raise UnknownInstance(f"{name}: {exc}") from None


def listed():
    return list(LISTED)


# maps ---------------------------------------------------------------------------


def _graph_map(src, dst, graph, name):
    s, t = get(src), get(dst)
    return PairedMap(s, t, {s.parse(a): t.parse(b) for a, b in graph.items()}, name=name)


def _left_mult(name, a):
    p = get(name)
    x = p.parse(a)
    return PairedMap(p, p, lambda b: p.mul(x, b), name=f"L[{a}]-{name}")


@lru_cache(maxsize=None)
def registered_maps():
    """Maps between finite registered pairs, used by the morphism suite."""
    sb = get("supertropical-boolean")
    db = get("doubled-boolean")
    B = get("boolean")
    K = get("krasner-hyperpair")
    S = get("sign-hyperpair")
    S4 = get("sign4-hyperpair")
    F3 = get("field-F3")
    dsb = get("doubled-supertropical-boolean")
    maps = [identity_map(get(n)) for n in
            ("boolean", "supertropical-boolean", "doubled-boolean", "krasner-hyperpair",
             "sign-hyperpair", "field-F3", "vandiver-2")]
    maps += [
        PairedMap(K, sb, hyper.krasner_to_supertropical(), name="krasner->supertropical"),
        PairedMap(sb, K, {v: k for k, v in hyper.krasner_to_supertropical().items()},
                  name="supertropical->krasner"),
        PairedMap(S4, db, hyper.signs4_to_doubled_boolean(), name="sign4->doubled"),
        PairedMap(db, S4, {v: k for k, v in hyper.signs4_to_doubled_boolean().items()},
                  name="doubled->sign4"),
        PairedMap(db, B, lambda x: inst.absolute_value(B, x), name="abs-doubled-boolean"),
        PairedMap(dsb, sb, lambda x: inst.absolute_value(sb, x), name="abs-doubled-supertropical"),
        PairedMap(dsb, sb, lambda x: inst.project_doubled(sb, x), name="proj-doubled-supertropical"),
        PairedMap(S, K, hyper.lift_map({0: 0, 1: 1, -1: 1}), name="lift-sign->krasner"),
        PairedMap(F3, S, {0: frozenset([0]), 1: frozenset([1]), 2: frozenset([-1])},
                  name="F3->sign"),
        PairedMap(F3, K, {0: frozenset([0]), 1: frozenset([1]), 2: frozenset([1])},
                  name="F3->krasner"),
        PairedMap(sb, B, lambda x: B.zero if x == sb.zero else B.one, name="nu-supertropical->boolean"),
        _left_mult("doubled-boolean", "(0,1)"),
        _left_mult("field-F3", "2"),
        _left_mult("supertropical-boolean", "1g"),
        _left_mult("sign-hyperpair", "{-1}"),
        _graph_map("supertropical-boolean", "doubled-boolean",
                   {"0": "(0,0)", "1": "(1,0)", "1g": "(1,1)"}, "ghost-lift (rejected)"),
        _graph_map("vandiver-2", "boolean", {"0": "0", "1": "1", "2": "1"}, "vandiver-2->boolean"),
        _graph_map("vandiver-3", "vandiver-upper-3", {"0": "0", "1": "1", "2": "2", "3": "3"},
                   "vandiver-3->upper (null extension)"),
        _graph_map("field-F3", "supertropical-boolean", {"0": "0", "1": "1", "2": "1"},
                   "F3->supertropical"),
    ]
    return tuple(maps)


def det_map(base="supertropical-boolean", n=2):
    """|A|_dag as a map of multiplicative monoid pairs M_n(A) -> A."""
    p = get(base)
    M = matrix_pair(p, n)
    return PairedMap(M, p, lambda A: dag_det(p, A), name=f"det-M{n}({base})", operation="mul")
