"""Classify every registered map: homomorphism, relation-morphism, weak."""

from pairkit import registry
from pairkit import morphisms as mo

maps = list(registry.registered_maps()) + [registry.det_map()]
print(f"{'map':42} hom   preceq weak")
for f in maps:
    c = mo.classify_map(f)
    mark = lambda x: "yes" if x else "-"  # noqa: E731
    print(f"{f.name:42} {mark(c['homomorphism']):5} {mark(c['preceq']):6} {mark(c['weak'])}")
    w = mo.weak_morphism_witness(f)
    if w:
        print(f"{'':42} weak fails on {list(w)}")
