"""A short walk through the supertropical Boolean pair {0, 1, 1g}."""

from pairkit import core, registry
from pairkit import matrices as mx
from pairkit import polynomials as po

sb = registry.get("supertropical-boolean")
names = [sb.fmt(b) for b in sb.sample()]
print("elements:", names)
for label, op in (("+", sb.add), ("*", sb.mul)):
    print(f"\n {label}  " + " ".join(f"{n:>3}" for n in names))
    for a in sb.sample():
        print(f"{sb.fmt(a):>3}  " + " ".join(f"{sb.fmt(op(a, b)):>3}" for b in sb.sample()))

print("\nclassification:", {k: v for k, v in core.classify(sb).as_dict().items() if v is True})

R = po.PolyRing(sb)
f = R.parse("l^2 + 1g*l + 1")
print(f"\nf = {R.fmt(f)}")
for b in sb.sample():
    print(f"  f({sb.fmt(b)}) = {sb.fmt(R.eval(f, b))}  root: {po.is_root(R, f, b)}")
print("  l + 1 <=-divides f with quotient",
      R.fmt(po.divides_preceq(R, R.parse("l + 1"), f) or R.zero))

A = mx.parse_matrix(sb, "[[1,1],[0,1]]")
print(f"\nA = {mx.fmt_matrix(sb, A)}, |A|dag = {sb.fmt(mx.dag_det(sb, A))}")
Rd, chi = mx.char_poly(sb, A)
print(f"characteristic polynomial (doubled): {Rd.fmt(chi)}")
print("Cayley-Hamilton (f_A(A) null):", mx.cayley_hamilton_check(sb, A))
print("A adj A =", mx.fmt_matrix(sb, mx.mat_mul(sb, A, mx.dag_adjoint(sb, A))))
