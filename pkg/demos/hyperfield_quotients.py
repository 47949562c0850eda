"""Quotient hyperfields F_q / G and the pairs built from them."""

from pairkit import core, hyper, registry

for q, G in ((3, [1]), (3, [1, 2]), (5, [1, 4]), (5, [1, 2, 3, 4])):
    h = hyper.quotient_hyperfield(q, G)
    print(f"F{q}/{set(G)}: classes {list(h.carrier)}, hypergroup ok: {hyper.verify_hypergroup(h).ok}")
    for a in h.carrier:
        print("   " + "  ".join(f"{a}+{b}={h.fmt_set(h.hsum(a, b))}" for b in h.carrier))

K = hyper.quotient_hyperfield(5, [1, 2, 3, 4])
print("\nF5/F5* is Krasner:", hyper.find_hypergroup_isomorphism(K, hyper.krasner()) is not None)

p = registry.get("quotient-F5/{1,4}")
e = p.e
print(f"\nin the pair of F5/{{1,4}}: e = {p.fmt(e)}, e*e = {p.fmt(p.mul(e, e))}, "
      f"e+e = {p.fmt(p.add(e, e))}")
print("e identities:", core.verify_e_identities(p))
