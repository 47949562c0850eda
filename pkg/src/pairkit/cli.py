"""pairkit command line.

Exit status: 0 when every check passes, 1 when a law fails, 2 on usage or
parse errors (unknown instance, malformed matrix or descriptor).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import congruences as cg
from . import core, descriptor, hyper, linalg, registry, suites
from . import matrices as mx
from . import morphisms as mo
from . import polynomials as po


class UsageError(Exception):
    pass


def resolve_instance(name):
    """Registered name, or a path to a pair descriptor."""
    if name.endswith(".json") or Path(name).is_file():
        return descriptor.load(name)
    return registry.get(name)


def _palette(p, args):
    if not getattr(args, "palette", None):
        return None
    return [p.parse(x) for x in args.palette.split(",")]


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


# commands ----------------------------------------------------------------------


def cmd_instance(args):
    words = list(args.words)
    if not words:
        raise UsageError("instance needs 'list', 'describe NAME' or 'NAME --describe'")
    if words[0] == "list":
        action, name = "list", None
    elif words[0] == "describe":
        action, name = "describe", (words[1] if len(words) > 1 else None)
    else:
        action, name = "describe", words[0]
    if len(words) > (2 if words[0] == "describe" else 1):
        raise UsageError(f"unexpected arguments: {' '.join(words)}")
    if action == "list":
        rows = []
        for name in registry.listed():
            p = registry.get(name)
            rows.append({"name": name, "finite": p.finite,
                         "size": len(p.sample()) if p.finite else None,
                         "family": p.info.get("family")})
        _emit(args, rows, "\n".join(
            f"{r['name']:32} {r['family'] or '':12} "
            f"{r['size'] if r['finite'] else 'symbolic'}" for r in rows))
        return 0
    if not name:
        raise UsageError("instance describe needs a name")
    p = resolve_instance(name)
    if p.finite:
        d = descriptor.describe(p)
    else:
        d = {"name": p.name, "sample": [p.fmt(b) for b in p.sample()],
             "capabilities": {"finite": False, "distributive": p.distributive},
             "classification": core.classify(p, args.bound).as_dict()}
    print(json.dumps(d, sort_keys=True, indent=2))
    return 0


def cmd_verify(args):
    p = resolve_instance(args.instance)
    if args.suite not in suites.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(suites.SUITES)}")
    ctx = suites.Context(seed=args.seed, bound=args.bound)
    report = suites.run_suite(p, args.suite, args.law, ctx, timing=args.timing, jobs=args.jobs)
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for c in report["checks"]:
            extra = c.get("reason") or (json.dumps(c["witness"]) if "witness" in c else "")
            print(f"{c['status']:8} {c['lawId']:32} {extra}".rstrip())
        s = report["summary"]
        print(f"{p.name}: {s['pass']} pass, {s['sampled']} sampled, "
              f"{s['fail']} fail, {s['skipped']} skipped")
    return 1 if suites.report_failed(report) else 0


def _matrix(p, text):
    try:
        return mx.parse_matrix(p, text)
    except (ValueError, json.JSONDecodeError, core.PairError) as exc:
        raise UsageError(f"bad matrix: {exc}") from None


def cmd_matrix(args):
    p = resolve_instance(args.instance)
    A = _matrix(p, args.matrix)
    if args.action != "det" and len(A) != len(A[0]):
        raise UsageError("matrix must be square")
    if args.action == "det":
        plus, minus = mx.det_plus(p, A), mx.det_minus(p, A)
        d = mx.dag_det(p, A)
        data = {"detPlus": p.fmt(plus), "detMinus": p.fmt(minus), "dagDet": p.fmt(d),
                "singular": mx.is_singular(p, A, args.mode)}
        text = f"|A|_dag = {p.fmt(d)}  (Det+ = {p.fmt(plus)}, Det- = {p.fmt(minus)})" \
               f"\nsingular ({args.mode}): {data['singular']}"
    elif args.action == "charpoly":
        R, f = mx.char_poly(p, A)
        base, fp = mx.char_poly_projected(p, A)
        ch = mx.cayley_hamilton_check(p, A)
        data = {"doubled": R.fmt(f), "projected": base.fmt(fp), "cayleyHamilton": ch}
        text = f"f_A = {R.fmt(f)}\nprojected: {base.fmt(fp)}\nf_A(A) null: {ch}"
    elif args.action == "adjoint":
        adj = mx.dag_adjoint(p, A)
        prod = mx.mat_mul(p, A, adj)
        data = {"adjoint": mx.fmt_matrix(p, adj), "product": mx.fmt_matrix(p, prod),
                "dagDet": p.fmt(mx.dag_det(p, A))}
        text = f"adj_dag A = {data['adjoint']}\nA adj_dag A = {data['product']}" \
               f"\n|A|_dag = {data['dagDet']}"
    else:
        pairs = mx.eigen_search(p, A, palette=_palette(p, args))
        vals = sorted({a for a, _ in pairs}, key=p.index)
        data = {"eigenvalues": [p.fmt(a) for a in vals],
                "pairs": [[p.fmt(a), [p.fmt(x) for x in v]] for a, v in pairs],
                "nonRootEigenvalue": (lambda w: None if w is None else p.fmt(w))(
                    mx.eigenvalue_root_witness(p, A))}
        text = "eigenvalues: " + (", ".join(data["eigenvalues"]) or "none")
    _emit(args, data, text)
    return 0


def cmd_poly(args):
    p = resolve_instance(args.instance)
    R = po.PolyRing(p)
    try:
        f = R.parse(args.poly)
    except (ValueError, core.PairError) as exc:
        raise UsageError(f"bad polynomial: {exc}") from None
    pal = _palette(p, args)
    if args.action == "eval":
        if args.at is None:
            raise UsageError("poly eval needs --at")
        b = p.parse(args.at)
        v = R.eval(f, b)
        data = {"value": p.fmt(v), "root": p.is_null(v)}
        text = f"f({p.fmt(b)}) = {p.fmt(v)}{'  (root)' if data['root'] else ''}"
    elif args.action == "roots":
        cands = pal if pal is not None else list(p.tangibles())
        roots = [a for a in cands if po.is_root(R, f, a)]
        proots = po.preceq_roots(R, f, palette=pal)
        data = {"roots": [p.fmt(a) for a in roots],
                "preceqRoots": [[p.fmt(a), R.fmt(g)] for a, g in proots]}
        text = "roots: " + (", ".join(data["roots"]) or "none") + "\n<=-roots: " + (
            ", ".join(f"{a} (g = {g})" for a, g in data["preceqRoots"]) or "none")
    else:
        if args.by is None:
            raise UsageError("poly divides needs --by")
        f1 = R.parse(args.by)
        out = {}
        for key, fn in (("divides", po.divides), ("preceq", po.divides_preceq),
                        ("null", po.divides_null)):
            g = fn(R, f1, f, palette=pal)
            out[key] = None if g is None else R.fmt(g)
        data = out
        text = "\n".join(f"{k:8} {v if v is not None else 'no witness'}" for k, v in out.items())
    _emit(args, data, text)
    return 0


def cmd_linalg(args):
    p = resolve_instance(args.instance)
    r = linalg.condition_harness(p, args.n_max, palette=_palette(p, args), mode=args.mode)
    _emit(args, {"subject": r.subject, "checks": [c.as_dict() for c in r.checks],
                 "sampled": r.sampled}, str(r))
    return 0 if r.ok else 1


def cmd_cong(args):
    p = resolve_instance(args.instance)
    congs = cg.enumerate_congruences(p)
    if args.action == "enumerate":
        data = [c.fmt() for c in congs]
        _emit(args, data, "\n".join(data))
        return 0
    r = cg.spectrum_report(p)
    rows = [{"congruence": c.fmt(), "prime": pr, "semiprime": sp, "irreducible": ir}
            for c, (pr, sp, ir) in r.flags.items()]
    text = "\n".join(f"{'prime' if x['prime'] else ('semiprime' if x['semiprime'] else '-'):9}"
                     f" {x['congruence']}" for x in rows) + "\n" + str(r)
    _emit(args, {"congruences": rows, "checks": [c.as_dict() for c in r.checks]}, text)
    return 0 if r.ok else 1


def cmd_hyper(args):
    try:
        G = [int(x) for x in args.subgroup.replace("{", "").replace("}", "").split(",") if x.strip()]
        h = hyper.quotient_hyperfield(args.field, G)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = hyper.verify_hypergroup(h)
    table = {f"{h.fmt(a)}+{h.fmt(b)}": h.fmt_set(h.hsum(a, b))
             for a in h.carrier for b in h.carrier}
    text = "\n".join(f"{k} = {v}" for k, v in table.items()) + "\n" + str(r)
    _emit(args, {"name": h.name, "carrier": [h.fmt(a) for a in h.carrier], "hsum": table,
                 "checks": [c.as_dict() for c in r.checks]}, text)
    return 0 if r.ok else 1


def _find_map(name):
    if name.endswith(".json") or Path(name).is_file():
        return descriptor.load_map(name, resolve_instance)
    for f in registry.registered_maps():
        if f.name == name:
            return f
    if name.startswith("det-M"):
        n, _, base = name[len("det-M"):].partition("(")
        return registry.det_map(base.rstrip(")") or "supertropical-boolean", int(n))
    raise UsageError(f"unknown map {name!r}")


def cmd_morphism(args):
    if args.action == "list":
        names = [f.name for f in registry.registered_maps()]
        _emit(args, names, "\n".join(names))
        return 0
    if not args.map:
        raise UsageError("morphism check needs --map")
    f = _find_map(args.map)
    if args.cls == "weak":
        w = mo.weak_morphism_witness(f)
    elif args.cls == "preceq":
        w = mo.preceq_morphism_witness(f)
    else:
        w = None if mo.is_homomorphism(f) else (mo.homomorphism_witness(f) or ("not a paired map",))
    data = {"map": f.name, "class": args.cls, "holds": w is None,
            "witness": None if w is None else list(w)}
    text = f"{f.name}: {args.cls} {'holds' if w is None else 'fails'}" + \
        ("" if w is None else f"  witness={list(w)}")
    _emit(args, data, text)
    return 0 if w is None else 1


# parser ---------------------------------------------------------------------------


def _field_order(text):
    t = text[1:] if text[:1] in "Ff" else text
    if not t.isdigit():
        raise argparse.ArgumentTypeError(f"not a field order: {text!r}")
    return int(t)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    common.add_argument("--bound", type=int, default=4, help="search bound N (summands)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--palette", help="comma-separated tangible search palette")
    common.add_argument("--timing", action="store_true", help="include per-law seconds")

    ap = argparse.ArgumentParser(prog="pairkit", description="Semiring pair toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("instance", parents=[common], help="list or describe instances")
    s.add_argument("words", nargs="*", metavar="list | describe NAME | NAME")
    s.add_argument("--describe", action="store_true", help="dump the descriptor (the default)")
    s.set_defaults(func=cmd_instance)

    s = sub.add_parser("verify", parents=[common], help="run a law suite")
    s.add_argument("instance")
    s.add_argument("--suite", default="all")
    s.add_argument("--law", help="glob on lawId, e.g. 'roots.*'")
    s.add_argument("--jobs", type=int, default=1, help="laws run in parallel threads")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("matrix", parents=[common], help="matrix computations")
    s.add_argument("action", choices=["det", "charpoly", "adjoint", "eigen"])
    s.add_argument("--instance", required=True)
    s.add_argument("--matrix", required=True, help='JSON rows, e.g. [["1","0"],["1g","1"]]')
    s.add_argument("--mode", choices=["equal", "balanced"], default="balanced")
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("poly", parents=[common], help="polynomial evaluation and roots")
    s.add_argument("action", choices=["eval", "roots", "divides"])
    s.add_argument("--instance", required=True)
    s.add_argument("--poly", required=True, help="e.g. 'l^2 + 1g*l + 1'")
    s.add_argument("--at")
    s.add_argument("--by", help="divisor for 'divides'")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("linalg", parents=[common], help="conditions A1-A5")
    s.add_argument("action", choices=["conditions"])
    s.add_argument("--instance", required=True)
    s.add_argument("--n-max", "--nmax", dest="n_max", type=int, default=2)
    s.add_argument("--mode", choices=["equal", "balanced"], default="balanced")
    s.set_defaults(func=cmd_linalg)

    s = sub.add_parser("cong", parents=[common], help="congruences and the prime spectrum")
    s.add_argument("action", choices=["enumerate", "primes"])
    s.add_argument("--instance", required=True)
    s.set_defaults(func=cmd_cong)

    s = sub.add_parser("hyper", parents=[common], help="quotient hyperfields")
    s.add_argument("action", choices=["quotient"])
    s.add_argument("--field", type=_field_order, required=True, help="prime, e.g. 5 or F5")
    s.add_argument("--subgroup", required=True, help="e.g. 1,4")
    s.set_defaults(func=cmd_hyper)

    s = sub.add_parser("morphism", parents=[common], help="morphism classes")
    s.add_argument("action", choices=["check", "list"])
    s.add_argument("--map")
    s.add_argument("--class", dest="cls", choices=["weak", "preceq", "hom"], default="weak")
    s.set_defaults(func=cmd_morphism)
    return ap


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, registry.UnknownInstance, descriptor.DescriptorError,
            core.DomainMismatch) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pairkit: error: {msg}", file=sys.stderr)
        return 2
    except core.BoundExceeded as exc:
        print(f"pairkit: bound exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
