"""Vector-space pairs A^(J): null dependence, ranks, spanning and the
A1-A5 condition harness.

Ranks used here:
  row rank       largest V0-independent set of rows
  column rank    the same for columns
  submatrix rank largest k with a nonsingular k x k submatrix
Singularity defaults to "balanced" (|A|_dag in A0); "equal" asks for
Det_+ = Det_-.
"""

from __future__ import annotations

import itertools
from functools import reduce

from .core import BoundExceeded, Report
from .matrices import all_matrices, fmt_matrix, is_singular, submatrix, transpose

PALETTE_CAP = 10 ** 7


def vec_add(p, u, v):
    return tuple(p.add(a, b) for a, b in zip(u, v))


def vec_scale(p, a, v):
    return tuple(p.mul(a, x) for x in v)


def vec_leq(p, u, v, rel=None):
    rel = rel or p.relation
    return all(rel(a, b) for a, b in zip(u, v))


def is_null_vector(p, v):
    return all(p.is_null(x) for x in v)


def combination(p, coeffs, vectors):
    dim = len(vectors[0]) if vectors else 0
    return reduce(lambda u, w: vec_add(p, u, w),
                  (vec_scale(p, a, v) for a, v in zip(coeffs, vectors)), (p.zero,) * dim)


def _palette(p, palette):
    return list(palette) if palette is not None else list(p.tangibles())


def v0_dependence(p, vectors, palette=None):
    """First (indices, coefficients) with sum a_i v_i in V0, a_i tangible; else None."""
    pal = _palette(p, palette)
    vectors = list(vectors)
    if len(pal) ** len(vectors) > PALETTE_CAP:
        raise BoundExceeded("dependence search exceeds the palette cap")
    for k in range(1, len(vectors) + 1):
        for idx in itertools.combinations(range(len(vectors)), k):
            sub = [vectors[i] for i in idx]
            for coeffs in itertools.product(pal, repeat=k):
                if is_null_vector(p, combination(p, coeffs, sub)):
                    return idx, coeffs
    return None


def is_v0_dependent(p, vectors, palette=None):
    return v0_dependence(p, vectors, palette) is not None


def _largest_independent(p, vectors, palette):
    vectors = list(vectors)
    for k in range(len(vectors), 0, -1):
        for idx in itertools.combinations(range(len(vectors)), k):
            if not is_v0_dependent(p, [vectors[i] for i in idx], palette):
                return k
    return 0


def row_rank(p, A, palette=None):
    return _largest_independent(p, A, palette)


def column_rank(p, A, palette=None):
    return _largest_independent(p, transpose(A), palette)


def submatrix_rank(p, A, mode="balanced"):
    m, n = len(A), len(A[0]) if A else 0
    for k in range(min(m, n), 0, -1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                if not is_singular(p, submatrix(A, rows, cols), mode):
                    return k
    return 0


def pad_zero_columns(p, A):
    """Append m - n zero columns to an m x n matrix (m > n)."""
    m, n = len(A), len(A[0])
    return tuple(tuple(row) + (p.zero,) * (m - n) for row in A)


def row_sum_matrix(p, vectors):
    """Rows v_1..v_{n-1} followed by their sum."""
    vs = list(vectors)
    return tuple(vs) + (reduce(lambda u, w: vec_add(p, u, w), vs),)


# spanning ---------------------------------------------------------------------------


def preceq_span_witness(p, v, spanners, rel=None, palette=None):
    """Coefficients a_i in T0 with v <= sum a_i v_i, or None."""
    rel = rel or p.relation
    pal = [p.zero] + _palette(p, palette)
    spanners = list(spanners)
    if len(pal) ** len(spanners) > PALETTE_CAP:
        raise BoundExceeded("spanning search exceeds the palette cap")
    for coeffs in itertools.product(pal, repeat=len(spanners)):
        if vec_leq(p, v, combination(p, coeffs, spanners) if spanners else (p.zero,) * len(v), rel):
            return coeffs
    return None


def is_preceq_spanned(p, v, spanners, rel=None, palette=None):
    return preceq_span_witness(p, v, spanners, rel, palette) is not None


def exchange_witness(p, vectors, rel=None, palette=None):
    """v1 spanned by v2.. with a nonzero coefficient on v2, yet v2 not spanned
    by v1, v3, ...; returns the failing tuple or None."""
    rel = rel or p.relation
    pal = _palette(p, palette)
    v1, v2, rest = vectors[0], vectors[1], list(vectors[2:])
    for coeffs in itertools.product(pal, repeat=1):
        for tail in itertools.product([p.zero] + pal, repeat=len(rest)):
            cs = coeffs + tail
            if vec_leq(p, v1, combination(p, cs, [v2] + rest), rel):
                if not is_preceq_spanned(p, v2, [v1] + rest, rel, palette):
                    return vectors
                return None
    return None


# condition harness ------------------------------------------------------------------------


def condition_harness(p, n_max=3, palette=None, entries=None, mode="balanced"):
    """Check A1-A5 on every matrix with entries from ``entries`` up to n_max.

    A1-A3 run over square matrices n <= n_max; A4 and A5 over m x n with
    n < m <= n_max.  A3 => A4 is realized by zero-column padding.
    """
    ents = list(entries) if entries is not None else list(p.sample())
    r = Report(f"conditions A1-A5 on {p.name} (n <= {n_max}, {mode})", sampled=not p.finite)
    w = {k: None for k in ("A1", "A2", "A3", "A4", "A5", "pad")}
    for n in range(1, n_max + 1):
        for A in all_matrices(p, n, entries=ents):
            rr, cr = row_rank(p, A, palette), column_rank(p, A, palette)
            sr = submatrix_rank(p, A, mode)
            if w["A1"] is None and not (sr <= rr and sr <= cr):
                w["A1"] = (fmt_matrix(p, A), sr, rr, cr)
            if w["A2"] is None and not (sr >= rr and sr >= cr):
                w["A2"] = (fmt_matrix(p, A), sr, rr, cr)
            if w["A3"] is None and rr == n and cr == n and is_singular(p, A, mode):
                w["A3"] = (fmt_matrix(p, A),)
    for m in range(2, n_max + 1):
        for n in range(1, m):
            for A in all_matrices(p, m, n, entries=ents):
                dep = is_v0_dependent(p, A, palette)
                if w["A4"] is None and not dep:
                    w["A4"] = (fmt_matrix(p, A),)
                if w["A5"] is None and not dep and not any(
                        is_singular(p, submatrix(A, rows, range(n)), mode)
                        for rows in itertools.combinations(range(m), n)):
                    w["A5"] = (fmt_matrix(p, A),)
                padded = pad_zero_columns(p, A)
                if w["pad"] is None and (not is_singular(p, padded, mode)
                                         or is_v0_dependent(p, padded, palette) != dep):
                    w["pad"] = (fmt_matrix(p, A),)
    for key, label in (("A1", "A1 submatrix rank <= row, column rank"),
                       ("A2", "A2 submatrix rank >= row, column rank"),
                       ("A3", "A3 full row and column rank => nonsingular"),
                       ("A4", "A4 m > n rows are dependent"),
                       ("A5", "A5 dependent or singular n x n submatrix"),
                       ("pad", "zero-column padding is singular, keeps dependence")):
        r.add(label, w[key])
    return r
