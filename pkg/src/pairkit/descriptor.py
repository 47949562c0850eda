"""JSON descriptors for finite pairs, hypergroups and maps.

A pair descriptor lists element names and row-major index tables:

    {"name": ..., "carrier": [names], "add": [[i, ...]], "mul": [[i, ...]],
     "zero": name, "one": name, "dagUnit": name, "tangibles": [names],
     "nulls": [names], "relation": {"name": "<=0"}}

Table entries index into "carrier"; element names are accepted too, and
"elements" is read as a synonym of "carrier".  A relation other than <=0
carries its table as "leq" (rows of booleans).
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Pair, Relation, classify
from .hyper import Hypergroup
from .morphisms import PairedMap


class DescriptorError(ValueError):
    """Malformed descriptor; ``location`` is a JSON path such as $.add[2][1]."""

    def __init__(self, message, location="$"):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


def _capabilities(p):
    return {"finite": p.finite, "distributive": p.distributive,
            "commutative": p.commutative, "propertyN": "lacks" not in p.info}


def describe(p, classification=True):
    """Descriptor of a finite pair, with every element written by name."""
    if not p.finite:
        raise DescriptorError(f"{p.name} is not finite", "$.carrier")
    elems = p.sample()
    f = p.fmt
    d = {
        "name": p.name,
        "carrier": [f(b) for b in elems],
        "add": [[p.index(p.add(a, b)) for b in elems] for a in elems],
        "mul": [[p.index(p.mul(a, b)) for b in elems] for a in elems],
        "zero": f(p.zero),
        "one": f(p.one),
        "dagUnit": f(p.dag_unit),
        "tangibles": [f(b) for b in p.tangibles()],
        "nulls": [f(b) for b in p.nulls()],
        "relation": {"name": p.relation.name},
        "capabilities": _capabilities(p),
    }
    if "lacks" in p.info:
        d["lacks"] = p.info["lacks"]
    if _overlap(set(p.tangibles()), set(p.nulls()), p.zero):
        d["flags"] = ["tangible-null overlap"]
    if p.relation.name != "<=0":
        d["relation"]["leq"] = [[p.relation(a, b) for b in elems] for a in elems]
    if classification:
        d["classification"] = classify(p).as_dict()
    return d


def _overlap(T, N, zero):
    # non-proper pairs are legitimate, but worth a flag
    return bool((T & N) - {zero})


def _read(source):
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"invalid JSON: {exc.msg} (line {exc.lineno})") from None
    except OSError as exc:
        raise DescriptorError(f"cannot read {source}: {exc.strerror}") from None


def _field(d, key, loc="$"):
    if key not in d:
        raise DescriptorError("missing field", f"{loc}.{key}")
    return d[key]


def _name_in(x, names, loc):
    if not isinstance(x, str) or x not in names:
        raise DescriptorError(f"{x!r} is not an element", loc)
    return x


def _entry(x, elems, names, loc):
    """A table entry: an index into the carrier or an element name."""
    if isinstance(x, int) and not isinstance(x, bool):
        if not 0 <= x < len(elems):
            raise DescriptorError(f"index {x} out of range", loc)
        return elems[x]
    if not isinstance(x, str) or x not in names:
        raise DescriptorError(f"{x!r} is not an element", loc)
    return x


def _table(d, key, elems):
    rows = _field(d, key)
    n = len(elems)
    names = set(elems)
    if not isinstance(rows, list) or len(rows) != n:
        raise DescriptorError(f"expected {n} rows", f"$.{key}")
    out = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DescriptorError(f"expected {n} entries", f"$.{key}[{i}]")
        for j, x in enumerate(row):
            out[(elems[i], elems[j])] = _entry(x, elems, names, f"$.{key}[{i}][{j}]")
    return out


def _subset(d, key, names):
    xs = _field(d, key)
    if not isinstance(xs, list):
        raise DescriptorError("expected a list", f"$.{key}")
    return frozenset(_name_in(x, names, f"$.{key}[{i}]") for i, x in enumerate(xs))


def load(source):
    """Rebuild a pair from a descriptor (dict or path).  Elements are names."""
    d = _read(source)
    if not isinstance(d, dict):
        raise DescriptorError("expected an object")
    key = "carrier" if "carrier" in d or "elements" not in d else "elements"
    elems = _field(d, key)
    if not isinstance(elems, list) or not elems:
        raise DescriptorError("carrier must be a nonempty list", f"$.{key}")
    for i, x in enumerate(elems):
        if not isinstance(x, str):
            raise DescriptorError("element names must be strings", f"$.{key}[{i}]")
    if len(set(elems)) != len(elems):
        raise DescriptorError("duplicate element names", f"$.{key}")
    names = set(elems)
    add = _table(d, "add", elems)
    mul = _table(d, "mul", elems)
    consts = {k: _name_in(_field(d, k), names, f"$.{k}") for k in ("zero", "one", "dagUnit")}
    T = _subset(d, "tangibles", names)
    N = _subset(d, "nulls", names)
    rel = None
    rd = d.get("relation") or {"name": "<=0"}
    if "leq" in rd:
        leq = rd["leq"]
        n = len(elems)
        if not isinstance(leq, list) or len(leq) != n or \
                any(not isinstance(r, list) or len(r) != n for r in leq):
            raise DescriptorError(f"expected an {n} x {n} boolean table", "$.relation.leq")
        pairs = {(elems[i], elems[j]) for i in range(n) for j in range(n) if leq[i][j]}
        rel = Relation(rd.get("name", "custom"), lambda a, b: (a, b) in pairs)
    caps = d.get("capabilities", {})
    info = {"family": "descriptor"}
    if "lacks" in d:
        info["lacks"] = d["lacks"]
    if _overlap(T, N, consts["zero"]):
        info["flags"] = ["tangible-null overlap"]
    return Pair(d.get("name", "descriptor"),
                add=lambda a, b: add[(a, b)], mul=lambda a, b: mul[(a, b)],
                zero=consts["zero"], one=consts["one"], dag_unit=consts["dagUnit"],
                tangible=T, null=N, elements=elems, relation=rel, leq=rel,
                distributive=caps.get("distributive", True),
                commutative=caps.get("commutative", True), info=info)


def dumps(d):
    return json.dumps(d, sort_keys=True, indent=2)


# hypergroups and maps -------------------------------------------------------------


def load_hypergroup(source):
    """{"name", "carrier", "hsum": rows of element lists, "zero", optional "mul"
    and "one"}.  "sum" is read as a synonym of "hsum"."""
    d = _read(source)
    carrier = _field(d, "carrier")
    if not isinstance(carrier, list) or not carrier:
        raise DescriptorError("carrier must be a nonempty list", "$.carrier")
    names = set(carrier)
    idx = {x: i for i, x in enumerate(carrier)}
    key = "hsum" if "hsum" in d or "sum" not in d else "sum"
    rows = _field(d, key)
    n = len(carrier)
    if not isinstance(rows, list) or len(rows) != n:
        raise DescriptorError(f"expected {n} rows", f"$.{key}")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DescriptorError(f"expected {n} entries", f"$.{key}[{i}]")
        for j, S in enumerate(row):
            if not isinstance(S, list) or not S:
                raise DescriptorError("expected a nonempty list", f"$.{key}[{i}][{j}]")
            for k, x in enumerate(S):
                _name_in(x, names, f"$.{key}[{i}][{j}][{k}]")
    zero = _name_in(_field(d, "zero"), names, "$.zero")
    mul = one = None
    if "mul" in d:
        mt = _table(d, "mul", carrier)
        mul = lambda a, b: mt[(a, b)]  # noqa: E731
        one = _name_in(_field(d, "one"), names, "$.one")
    return Hypergroup(d.get("name", "hypergroup"), carrier,
                      lambda a, b: rows[idx[a]][idx[b]], zero, mul=mul, one=one)


def load_map(source, resolve):
    """{"from", "to", "graph": {element: element}}; ``resolve`` maps a name to a pair."""
    d = _read(source)
    src, dst = resolve(_field(d, "from")), resolve(_field(d, "to"))
    graph = _field(d, "graph")
    if not isinstance(graph, dict):
        raise DescriptorError("expected an object", "$.graph")
    fn = {}
    for k, v in graph.items():
        try:
            fn[src.parse(k)] = dst.parse(v)
        except (ValueError, KeyError) as exc:
            raise DescriptorError(str(exc), f"$.graph[{k!r}]") from None
    missing = [src.fmt(b) for b in src.sample() if b not in fn]
    if missing:
        raise DescriptorError(f"no image for {missing[0]}", "$.graph")
    return PairedMap(src, dst, fn, name=d.get("name"), operation=d.get("operation", "add"))
