"""Matrices over a pair: signed determinants, dagger-determinants, adjoints,
characteristic polynomials via the doubled pair, eigenvalues, GL/SL,
involutions and traces.

Matrices are tuples of row tuples.  Determinant routines only need an
object with ``add``, ``mul``, ``zero``, ``one`` and ``dag``, so they run
unchanged over a pair or over a polynomial ring.
"""

from __future__ import annotations

import itertools
import json
from functools import reduce

from .core import BoundExceeded, Pair, Report
from .instances import make_doubled, project_doubled
from .polynomials import PolyRing

MAX_DET_N = 5


# basics ---------------------------------------------------------------------


def mat(rows):
    return tuple(tuple(r) for r in rows)


def size(A):
    return len(A)


def identity(p, n):
    return mat([[p.one if i == j else p.zero for j in range(n)] for i in range(n)])


def zeros(p, n, m=None):
    return mat([[p.zero] * (n if m is None else m) for _ in range(n)])


def diag(p, entries):
    n = len(entries)
    return mat([[entries[i] if i == j else p.zero for j in range(n)] for i in range(n)])


def transpose(A):
    return mat(zip(*A)) if A else A


def mat_add(p, A, B):
    return mat([[p.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)])


def mat_mul(p, A, B):
    Bt = transpose(B)
    return mat([[reduce(p.add, (p.mul(a, b) for a, b in zip(row, col)), p.zero)
                 for col in Bt] for row in A])


def mat_scale(p, c, A):
    return mat([[p.mul(c, a) for a in row] for row in A])


def mat_dag(p, A):
    return mat_scale(p, p.dag_unit, A)


def mat_power(p, A, k):
    R = identity(p, len(A))
    for _ in range(k):
        R = mat_mul(p, R, A)
    return R


def is_null_matrix(p, A):
    return all(p.is_null(a) for row in A for a in row)


def is_tangible_matrix(p, A):
    return all(p.is_tangible(a) for row in A for a in row)


def mat_leq(p, A, B, rel=None):
    rel = rel or p.relation
    return all(rel(a, b) for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def all_matrices(p, n, m=None, entries=None):
    vals = list(entries) if entries is not None else list(p.sample())
    m = n if m is None else m
    for flat in itertools.product(vals, repeat=n * m):
        yield mat([flat[i * m:(i + 1) * m] for i in range(n)])


def fmt_matrix(p, A):
    return "[" + ",".join("[" + ",".join(p.fmt(a) for a in row) + "]" for row in A) + "]"


def _split_top(text):
    """Split on commas outside any bracket."""
    out, depth, cur = [], 0, ""
    for ch in text:
        depth += ch in "([{"
        depth -= ch in ")]}"
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    return out


def _rows_from_text(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"cannot read matrix {text!r}")
    rows = []
    for r in _split_top(t[1:-1]):
        if not (r.startswith("[") and r.endswith("]")):
            raise ValueError(f"cannot read row {r!r}")
        rows.append(_split_top(r[1:-1]))
    return rows


def parse_matrix(p, text):
    """JSON rows, or the bracketed form printed by ``fmt_matrix``."""
    rows = _rows_from_text(text) if isinstance(text, str) else text
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must be nonempty and of equal length")
    return mat([[p.parse(str(x)) for x in r] for r in rows])


def minor(A, rows, cols):
    """Delete the given rows and columns."""
    return mat([[a for j, a in enumerate(r) if j not in cols]
                for i, r in enumerate(A) if i not in rows])


def submatrix(A, rows, cols):
    return mat([[A[i][j] for j in cols] for i in rows])


# determinants --------------------------------------------------------------------


def _perms(n):
    if n > MAX_DET_N:
        raise BoundExceeded(f"determinant enumeration refused for n = {n} > {MAX_DET_N}")
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        yield perm, inv % 2


def track(ops, A, perm):
    """a_{pi(1),1} ... a_{pi(n),n}."""
    return reduce(ops.mul, (A[perm[j]][j] for j in range(len(A))), ops.one)


def det_parts(ops, A):
    """(Det_+, Det_-): sums of even and odd tracks."""
    plus = minus = ops.zero
    for perm, odd in _perms(len(A)):
        t = track(ops, A, perm)
        if odd:
            minus = ops.add(minus, t)
        else:
            plus = ops.add(plus, t)
    return plus, minus


def det_plus(ops, A):
    return det_parts(ops, A)[0]


def det_minus(ops, A):
    return det_parts(ops, A)[1]


def dag_det(ops, A):
    """|A|_dag = Det_+ + Det_- dag."""
    if len(A) == 0:
        return ops.one
    plus, minus = det_parts(ops, A)
    return ops.add(plus, ops.dag(minus))


def dag_det_op(ops, A):
    """dag|A| = Det_+ dag + Det_-."""
    if len(A) == 0:
        return ops.one
    plus, minus = det_parts(ops, A)
    return ops.add(ops.dag(plus), minus)


def is_singular(p, A, mode="equal"):
    """``equal``: Det_+ = Det_-.  ``balanced``: |A|_dag lies in A0."""
    if mode == "equal":
        plus, minus = det_parts(p, A)
        return plus == minus
    if mode == "balanced":
        return p.is_null(dag_det(p, A))
    raise ValueError(f"unknown singularity mode {mode!r}")


def det_product_check(p, A, B, rel=None):
    """|AB|_dag >= |A|_dag |B|_dag and dag|AB| >= dag|A| dag|B|."""
    rel = rel or p.relation
    AB = mat_mul(p, A, B)
    first = rel(p.mul(dag_det(p, A), dag_det(p, B)), dag_det(p, AB))
    second = rel(p.mul(dag_det_op(p, A), dag_det_op(p, B)), dag_det_op(p, AB))
    return first, second


def det_product_pairing(p, A, B):
    """Independent expansion of |AB|_dag by excess-track pairing.

    Each track of AB expands over maps k: [n] -> [n].  Terms with k a
    bijection make up the product part; when k repeats a value, swapping
    the two rows of sigma that hit it flips the parity and keeps the
    product, so those terms pair off into b + b-dag.  Returns
    (product part, excess, total), with total the recombined |AB|_dag.
    """
    n = len(A)
    perms = dict(_perms(n))
    bij = p.zero
    excess = p.zero
    seen = set()
    for sigma, odd in perms.items():
        for k in itertools.product(range(n), repeat=n):
            t = reduce(p.mul, (p.mul(A[sigma[j]][k[j]], B[k[j]][j]) for j in range(n)), p.one)
            if len(set(k)) == n:
                bij = p.add(bij, p.dag(t) if odd else t)
                continue
            if (sigma, k) in seen:
                continue
            j1, j2 = next((a, b) for a in range(n) for b in range(a + 1, n) if k[a] == k[b])
            partner = list(sigma)
            partner[j1], partner[j2] = partner[j2], partner[j1]
            partner = tuple(partner)
            seen.add((partner, k))
            pt = reduce(p.mul, (p.mul(A[partner[j]][k[j]], B[k[j]][j]) for j in range(n)), p.one)
            excess = p.add(excess, p.add(p.dag(t) if odd else t, pt if odd else p.dag(pt)))
    return bij, excess, p.add(bij, excess)


# adjoints, Laplace, Cauchy-Binet --------------------------------------------------------------


def adj_entry(p, A, i, j):
    """a'_{ij}: the (j,i) minor with the parity rule (0-based indices)."""
    M = minor(A, {j}, {i})
    return dag_det(p, M) if (i + j) % 2 == 0 else dag_det_op(p, M)


def dag_adjoint(p, A):
    n = len(A)
    if n < 2:
        raise ValueError("adjoint needs n >= 2")
    return mat([[adj_entry(p, A, i, j) for j in range(n)] for i in range(n)])


DET_READINGS = {"dag": dag_det, "op": dag_det_op}


def laplace_check(p, A, i, det_reading="dag", index_reading="transposed"):
    """Compare a full determinant with a row-i expansion.

    ``index_reading="literal"`` pairs a'_{ij} with a_{ij} as printed;
    ``"transposed"`` pairs a'_{ji} with a_{ij} (the classical row expansion).
    """
    n = len(A)
    lhs = DET_READINGS[det_reading](p, A)
    terms = []
    for j in range(n):
        a_adj = adj_entry(p, A, i, j) if index_reading == "literal" else adj_entry(p, A, j, i)
        terms.append(p.mul(a_adj, A[i][j]))
    return lhs == reduce(p.add, terms, p.zero)


def cauchy_binet_check(p, A, I, det_reading="dag", parity="sum"):
    """Generalized Laplace expansion along the row set I.

    ``parity="product"`` uses the printed rule (sum I)(sum J) even;
    ``"sum"`` uses sum I + sum J even.  Indices are 1-based in the rule.
    """
    n = len(A)
    I = tuple(sorted(I))
    m = len(I)
    lhs = DET_READINGS[det_reading](p, A)
    sI = sum(i + 1 for i in I)
    terms = []
    for J in itertools.combinations(range(n), m):
        sJ = sum(j + 1 for j in J)
        even = (sI * sJ) % 2 == 0 if parity == "product" else (sI + sJ) % 2 == 0
        comp = minor(A, set(I), set(J))
        a_comp = dag_det(p, comp) if even else dag_det_op(p, comp)
        terms.append(p.mul(a_comp, dag_det(p, submatrix(A, I, J))))
    return lhs == reduce(p.add, terms, p.zero)


def laplace_readings(p, matrices, rows=None):
    """Which (det reading, index reading) combinations hold on every matrix."""
    combos = {(d, ix): None for d in DET_READINGS for ix in ("literal", "transposed")}
    for A in matrices:
        for i in (rows if rows is not None else range(len(A))):
            for key in combos:
                if combos[key] is None and not laplace_check(p, A, i, *key):
                    combos[key] = (fmt_matrix(p, A), i)
    return combos


def cauchy_binet_readings(p, matrices, m):
    combos = {(d, par): None for d in DET_READINGS for par in ("sum", "product")}
    for A in matrices:
        for I in itertools.combinations(range(len(A)), m):
            for key in combos:
                if combos[key] is None and not cauchy_binet_check(p, A, I, *key):
                    combos[key] = (fmt_matrix(p, A), I)
    return combos


# quasi-identities, GL, SL ---------------------------------------------------------------


def is_quasi_identity(p, Q):
    """I + B0 with B0 null off the diagonal and 0 on it, so the diagonal is exactly 1."""
    n = len(Q)
    for i in range(n):
        for j in range(n):
            if i == j:
                if Q[i][i] != p.one:
                    return False
            elif not p.is_null(Q[i][j]):
                return False
    return True


def quasi_identity_factor(p, C, d):
    """A quasi-identity Q with C = d Q, or None (searches A0 entrywise)."""
    n = len(C)
    nulls = list(p.nulls())
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            cands = [p.one] if i == j else nulls
            hit = next((q for q in cands if p.mul(d, q) == C[i][j]), None)
            if hit is None:
                return None
            row.append(hit)
        rows.append(row)
    return mat(rows)


def adjoint_quasi_identity(p, A):
    """(Q1, Q2) with A adj A = |A|_dag Q1 and adj A A = dag|A| Q2 (None if absent)."""
    ad = dag_adjoint(p, A)
    q1 = quasi_identity_factor(p, mat_mul(p, A, ad), dag_det(p, A))
    q2 = quasi_identity_factor(p, mat_mul(p, ad, A), dag_det_op(p, A))
    return q1, q2


def gl_membership(p, A, candidates=None):
    """Some B with AB and BA quasi-identities, or None."""
    cands = candidates if candidates is not None else all_matrices(p, len(A))
    for B in cands:
        if is_quasi_identity(p, mat_mul(p, A, B)) and is_quasi_identity(p, mat_mul(p, B, A)):
            return B
    return None


def sl_membership(p, A, rel=None, candidates=None):
    rel = rel or p.relation
    return gl_membership(p, A, candidates) is not None and rel(p.one, dag_det(p, A))


def permutation_matrix(p, perm):
    n = len(perm)
    return mat([[p.one if perm[j] == i else p.zero for j in range(n)] for i in range(n)])


# characteristic polynomial and Cayley-Hamilton -----------------------------------------------


def doubled_of(p):
    """The doubled pair of p, cached on p."""
    d = p.info.get("_doubled")
    if d is None:
        d = make_doubled(p)
        p.info["_doubled"] = d
    return d


def lift(p, A):
    """(A, 0): entries into the first slot of the doubled pair."""
    return mat([[(a, p.zero) for a in row] for row in A])


def char_poly(p, A):
    """f_A(l) = |(0, l I) + (A, 0)|_dag in (doubled p)[l]."""
    D = doubled_of(p)
    R = PolyRing(D)
    n = len(A)
    lam = R.make([(1, D.dag_unit)])
    M = mat([[R.add(R.const((A[i][j], p.zero)), lam if i == j else R.zero)
              for j in range(n)] for i in range(n)])
    return R, dag_det(R, M)


def char_poly_projected(p, A):
    """f_A pushed to p[l] by (b1, b2) -> b1 + b2 dag."""
    R, f = char_poly(p, A)
    base = PolyRing(p)
    return base, base.make((k, project_doubled(p, c)) for k, c in f.items)


def eval_matrix_poly(D, f, M):
    n = len(M)
    total = zeros(D, n)
    for k, c in f.items:
        total = mat_add(D, total, mat_scale(D, c, mat_power(D, M, k)))
    return total


def cayley_hamilton_check(p, A):
    """f_A(A) has every entry in the diagonal of the doubled pair."""
    R, f = char_poly(p, A)
    D = R.pair
    return is_null_matrix(D, eval_matrix_poly(D, f, lift(p, A)))


# eigenvalues -----------------------------------------------------------------------------


def mat_vec(p, A, v):
    return tuple(reduce(p.add, (p.mul(a, x) for a, x in zip(row, v)), p.zero) for row in A)


def eigen_search(p, A, rel=None, palette=None):
    """All (alpha, v) with alpha v <= A v, alpha tangible, v with a tangible entry."""
    rel = rel or p.relation
    n = len(A)
    alphas = list(palette) if palette is not None else list(p.tangibles())
    out = []
    for v in itertools.product(p.sample(), repeat=n):
        if not any(p.is_tangible(x) for x in v):
            continue
        Av = mat_vec(p, A, v)
        for a in alphas:
            if all(rel(p.mul(a, x), y) for x, y in zip(v, Av)):
                out.append((a, v))
    return out


def eigenvalue_root_witness(p, A, rel=None):
    """An eigenvalue that is not a root of the projected f_A, or None."""
    base, f = char_poly_projected(p, A)
    for a in sorted({a for a, _ in eigen_search(p, A, rel)}, key=p.index):
        if not p.is_null(base.eval(f, a)):
            return a
    return None


def eigen_matrix_check(p, A, pairs, rel=None):
    """B D <= A B with the eigenvectors as columns of B and D = diag(alphas)."""
    B = transpose(mat([v for _, v in pairs]))
    D = diag(p, [a for a, _ in pairs])
    return mat_leq(p, mat_mul(p, B, D), mat_mul(p, A, B), rel)


# involutions, trace ---------------------------------------------------------------------------


def symplectic(p, A):
    """[[A11, A12 dag], [A21, A22]] -> [[A22^t, A12^t], [(A21 dag)^t, A11^t]]."""
    n = len(A)
    if n % 2:
        raise ValueError("symplectic involution needs even n")
    m = n // 2
    from .core import _dag_inverse
    u = _dag_inverse(p)
    lo, hi = range(m), range(m, n)
    A11, A12 = submatrix(A, lo, lo), submatrix(A, lo, hi)
    A21, A22 = submatrix(A, hi, lo), submatrix(A, hi, hi)
    top = [list(r1) + list(r2) for r1, r2 in zip(transpose(A22), transpose(mat_scale(p, u, A12)))]
    bot = [list(r1) + list(r2) for r1, r2 in zip(transpose(mat_dag(p, A21)), transpose(A11))]
    return mat(top + bot)


def involution_report(p, star, matrices, rel=None):
    """Properties (i)-(v) of an involution plus (c circ)* = (c*) circ."""
    rel = rel or p.relation
    ms = list(matrices)
    r = Report(f"involution on {p.name}")
    show = lambda *As: tuple(fmt_matrix(p, A) for A in As)
    r.add("(b*)* = b", next((show(A) for A in ms if star(star(A)) != A), None))
    r.add("(b1 b2)* = b2* b1*", next((show(A, B) for A in ms for B in ms
                                      if star(mat_mul(p, A, B)) != mat_mul(p, star(B), star(A))), None))
    r.add("(b dag)* = (b*) dag", next((show(A) for A in ms
                                       if star(mat_dag(p, A)) != mat_dag(p, star(A))), None))
    r.add("tangible to tangible", next((show(A) for A in ms
                                        if is_tangible_matrix(p, A) != is_tangible_matrix(p, star(A))), None))
    r.add("preserves the relation", next((show(A, B) for A in ms for B in ms
                                          if mat_leq(p, A, B, rel) and not mat_leq(p, star(A), star(B), rel)),
                                         None))
    circ = lambda A: mat_add(p, A, mat_dag(p, A))
    r.add("(c circ)* = (c*) circ", next((show(A) for A in ms if star(circ(A)) != circ(star(A))), None))
    return r


def trace(p, A):
    return reduce(p.add, (A[i][i] for i in range(len(A))), p.zero)


def trace_cyclicity_check(p, A, B):
    return trace(p, mat_mul(p, A, B)) == trace(p, mat_mul(p, B, A))


def trace_commutator_null(p, A, B):
    """tr(AB + (BA) dag) lies in A0."""
    return p.is_null(trace(p, mat_add(p, mat_mul(p, A, B), mat_dag(p, mat_mul(p, B, A)))))


# matrix pair -----------------------------------------------------------------------------


def matrix_pair(p, n, cap=10 ** 4):
    """(M_n(A), M_n(A0)).  Tangibles are the monomial matrices with tangible
    entries, so that T is a monoid containing I and 1dag I."""
    vals = list(p.sample())
    if len(vals) ** (n * n) > cap:
        raise BoundExceeded("matrix carrier too large to enumerate")
    elems = list(all_matrices(p, n))

    def tangible(A):
        for row in A:
            nz = [a for a in row if a != p.zero]
            if len(nz) != 1 or not p.is_tangible(nz[0]):
                return False
        return all(sum(1 for row in A if row[j] != p.zero) == 1 for j in range(n))

    return Pair(f"M{n}({p.name})", add=lambda A, B: mat_add(p, A, B),
                mul=lambda A, B: mat_mul(p, A, B), zero=zeros(p, n), one=identity(p, n),
                dag_unit=mat_scale(p, p.dag_unit, identity(p, n)), tangible=tangible,
                null=lambda A: is_null_matrix(p, A), elements=elems if p.finite else None,
                sample=None if p.finite else elems, commutative=False,
                fmt=lambda A: fmt_matrix(p, A), parse=lambda s: parse_matrix(p, s),
                info={"family": "matrix", "base": p, "n": n,
                      "scale": lambda c, A: mat_scale(p, c, A)})
