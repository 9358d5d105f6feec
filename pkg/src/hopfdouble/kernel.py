"""Dense integer kernels for algebras whose structure constants are rational.

Every tensor is stored as an integer array scaled by a common denominator.
Floating point is used only where a magnitude bound proves each partial sum
is an exactly representable integer (below 2**52); otherwise the computation
falls back to int64 with a separate bound, and finally to Python integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .scalars import CycScalar

EXACT_FLOAT = 2.0**52
EXACT_INT = 2.0**62


def _den(values) -> int | None:
    d = 1
    for x in values:
        if x.conductor != 1:
            return None
        d = lcm(d, x.den)
    return d


def to_int_array(entries, shape, den: int) -> np.ndarray:
    """entries: iterable of (index tuple, CycScalar) with rational values."""
    A = np.zeros(shape, dtype=object)
    for key, x in entries:
        A[key] = x.num[0] * (den // x.den)
    return A


class RationalStructure:
    """Integer images of the structure tensors of a rational Hopf algebra."""

    def __init__(self, H, den: int):
        n = H.dim
        self.n = n
        self.den = den
        self.mult = _pack(((i, j, k), c) for (i, j), v in H.mult.items() for k, c in v.items())((n, n, n), den)
        self.unit = _pack(((k,), c) for k, c in H.unit.items())((n,), den)
        comult = getattr(H, "comult", None)
        if comult is not None:
            self.comult = _pack(((i, j, k), c) for i, t in enumerate(comult)
                                for (j, k), c in t.items())((n, n, n), den)
            self.counit = _pack(((k,), c) for k, c in H.counit.items())((n,), den)
            self.antipode = _pack(((i, j), c) for i, v in enumerate(H.antipode)
                                  for j, c in v.items())((n, n), den)

    def mul_vec(self, x: dict, y: dict) -> dict:
        """Product of two rational sparse vectors, exactly; None if not rational."""
        xd, yd = _den(x.values()), _den(y.values())
        if xd is None or yd is None:
            return None
        n = self.n
        xa = np.zeros(n, dtype=object)
        ya = np.zeros(n, dtype=object)
        for k, c in x.items():
            xa[k] = c.num[0] * (xd // c.den)
        for k, c in y.items():
            ya[k] = c.num[0] * (yd // c.den)
        M = self.mult
        rows = list(x)
        cols = list(y)
        sub = M[np.ix_(rows, cols)]  # (r, c, n)
        out = exact_contract(xa[rows], sub, ya[cols])
        scale = xd * yd * self.den
        res = {}
        for k in np.flatnonzero(out != 0):
            res[int(k)] = CycScalar.rational(Fraction(int(out[k]), scale))
        return res


def _pack(entries):
    items = list(entries)

    def build(shape, den):
        A = np.zeros(shape, dtype=np.int64)
        big = False
        for key, x in items:
            v = x.num[0] * (den // x.den)
            if abs(v) >= 2**62:
                big = True
                break
            A[key] = v
        if big:
            A = np.zeros(shape, dtype=object)
            for key, x in items:
                A[key] = x.num[0] * (den // x.den)
        return A

    return build


def exact_contract(x, M, y):
    """sum_ij x_i y_j M[i, j, :] exactly (object or integer arrays)."""
    if M.dtype != object:
        xa = np.array([abs(int(v)) for v in x], dtype=float)
        ya = np.array([abs(int(v)) for v in y], dtype=float)
        bound = float(np.max(np.einsum("i,j,ijk->k", xa, ya, np.abs(M).astype(float)), initial=0.0))
        if bound < EXACT_FLOAT:
            r = np.einsum("i,j,ijk->k", np.array(x, dtype=float), np.array(y, dtype=float),
                          M.astype(float))
            return np.rint(r).astype(np.int64).astype(object)
    Mo = M.astype(object)
    return np.tensordot(np.tensordot(np.array(x, dtype=object), Mo, axes=(0, 0)),
                        np.array(y, dtype=object), axes=(0, 0))


def rational_structure(H) -> RationalStructure | None:
    cached = H.__dict__.get("_rational_structure", False)
    if cached is not False:
        return cached
    vals = [c for v in H.mult.values() for c in v.values()]
    vals += list(H.unit.values())
    if hasattr(H, "comult"):
        vals += [c for t in H.comult for c in t.values()]
        vals += list(H.counit.values()) + [c for v in H.antipode for c in v.values()]
    den = _den(vals)
    rs = None if den is None else RationalStructure(H, den)
    H.__dict__["_rational_structure"] = rs
    return rs


# exact dense matrix products --------------------------------------------------------

def exact_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Integer matrix product, using float64 or int64 when provably exact."""
    if A.dtype != object and B.dtype != object:
        Af, Bf = A.astype(float), B.astype(float)
        bound = float(np.max(np.abs(Af) @ np.abs(Bf), initial=0.0))
        if bound < EXACT_FLOAT:
            return np.rint(Af @ Bf).astype(np.int64)
        if bound < EXACT_INT:
            return A.astype(np.int64) @ B.astype(np.int64)
    return A.astype(object) @ B.astype(object)


# brute-force Hopf identities ----------------------------------------------------------

def verify_axioms_dense(H) -> list[tuple[str, tuple]] | None:
    """All seven Hopf identities on all basis tuples, or None if not rational.

    Returns (identity, witness) pairs with the first witness in lexicographic
    order.  Each identity is compared after scaling both sides to the same
    power of the common denominator.
    """
    rs = rational_structure(H)
    if rs is None:
        return None
    n, d = rs.n, rs.den
    M, U, D, E, S = rs.mult, rs.unit, rs.comult, rs.counit, rs.antipode
    fails: list[tuple[str, tuple]] = []
    delta = np.eye(n, dtype=np.int64)

    # associativity: (b_i b_j) b_k = b_i (b_j b_k)
    Mflat = M.reshape(n, n * n)
    MjkL = M.reshape(n * n, n)
    bad = None
    for i in range(n):
        left = exact_matmul(M[i], Mflat).reshape(n, n, n)  # j, k, r
        right = exact_matmul(MjkL, M[i]).reshape(n, n, n)  # j, k, r
        diff = left != right
        if diff.any():
            bad = (i,) + tuple(int(v) for v in np.argwhere(diff)[0][:2])
            break
    if bad:
        fails.append(("associativity", bad))

    # unit
    lu = exact_matmul(U.reshape(1, n), Mflat).reshape(n, n)
    ru = exact_matmul(U.reshape(1, n), M.transpose(1, 0, 2).reshape(n, n * n)).reshape(n, n)
    target = delta * d * d
    mask = (lu != target) | (ru != target)
    w = np.argwhere(mask)
    if w.size:
        fails.append(("unit", (int(w[0][0]),)))

    # coassociativity
    Dflat = D.reshape(n, n * n)
    bad = None
    for i in range(n):
        t1 = exact_matmul(D[i].T, Dflat).reshape(n, n, n).transpose(1, 2, 0)  # (a,b,v)
        t2 = exact_matmul(D[i], Dflat).reshape(n, n, n)  # (u,a,b) = (a,b,v) after rename
        if (t1 != t2).any():
            bad = (i,)
            break
    if bad:
        fails.append(("coassociativity", bad))

    # counit
    lc = exact_matmul(E.reshape(1, n), D.transpose(1, 0, 2).reshape(n, n * n)).reshape(n, n)
    rc = exact_matmul(D.reshape(n * n, n), E.reshape(n, 1)).reshape(n, n)
    mask = (lc != target) | (rc != target)
    w = np.argwhere(mask)
    if w.size:
        fails.append(("counit", (int(w[0][0]),)))

    # comultiplication is multiplicative: Delta(b_i b_j) = Delta(b_i) Delta(b_j)
    bad = None
    one = exact_matmul(U.reshape(1, n), Dflat).reshape(n, n)
    if (one != np.outer(U, U)).any():
        bad = ("unit",)
    if bad is None:
        bad = _check_comult_multiplicative(M, D, d, n)
    if bad:
        fails.append(("comultiplication-multiplicative", bad))

    # counit is multiplicative
    em = exact_matmul(M.reshape(n * n, n), E.reshape(n, 1)).reshape(n, n)
    ee = np.outer(E, E).astype(object) if E.dtype == object else np.outer(E, E)
    w = np.argwhere(em != ee)
    if int(np.dot(E.astype(object), U.astype(object))) != d * d:
        fails.append(("counit-multiplicative", ("unit",)))
    elif w.size:
        fails.append(("counit-multiplicative", tuple(int(v) for v in w[0])))

    # antipode: m(S (x) id)Delta = unit eps = m(id (x) S)Delta
    # left: sum_{u,v} D[i,u,v] S[u,w] M[w,v,r]
    T = np.einsum("iuv,uw->iwv", D.astype(object), S.astype(object))
    left = exact_matmul(np.array(T.reshape(n, n * n), dtype=_dtype(T)), M.reshape(n * n, n))
    T2 = np.einsum("iuv,vw->iuw", D.astype(object), S.astype(object))
    right = exact_matmul(np.array(T2.reshape(n, n * n), dtype=_dtype(T2)), M.reshape(n * n, n))
    target = np.outer(E, U) * d
    mask = (left != target) | (right != target)
    w = np.argwhere(mask)
    if w.size:
        fails.append(("antipode", (int(w[0][0]),)))
    return fails


def _dtype(T):
    try:
        return np.int64 if max(abs(int(v)) for v in T.flat) < 2**62 else object
    except ValueError:
        return np.int64


def _check_comult_multiplicative(M, D, d, n):
    """First (i, j) with Delta(b_i b_j) != Delta(b_i) Delta(b_j), or None.

    Delta(b_i) Delta(b_j) = sum_a L_a Y_j N_{ia}^T where L_a is left
    multiplication by b_a, Y_j the coefficient matrix of Delta(b_j) and
    N_{ia} = sum_b D[i,a,b] L_b; only rows a in the support of Delta(b_i)
    contribute.
    """
    L = M.transpose(0, 2, 1)  # L[a][u, c] = M[a, c, u]
    lhs_all = exact_matmul(M.reshape(n * n, n), D.reshape(n, n * n)).reshape(n, n, n, n)
    Lf = L.astype(float) if L.dtype != object else None
    Df = D.astype(float) if D.dtype != object else None
    maxL = float(np.max(np.abs(L))) if L.size else 0.0
    maxD = float(np.max(np.abs(D))) if D.size else 0.0
    for i in range(n):
        rows = np.flatnonzero(np.any(D[i] != 0, axis=1))
        # bound on |sum| : rows * n^3 * maxD^2 * maxL^2
        bound = len(rows) * n**3 * maxD * maxD * maxL * maxL
        use_float = Lf is not None and Df is not None and bound < EXACT_FLOAT
        acc = np.zeros((n, n, n), dtype=float if use_float else object)
        for a in rows:
            a = int(a)
            if use_float:
                N = np.tensordot(Df[i, a], Lf, axes=(0, 0))  # (u', e) = sum_b D[i,a,b] L_b
                acc += np.matmul(np.matmul(Lf[a][None, :, :], Df), N.T[None, :, :])
            else:
                N = np.tensordot(D[i, a].astype(object), L.astype(object), axes=(0, 0))
                acc += np.matmul(np.matmul(L[a].astype(object)[None], D.astype(object)),
                                 N.T[None])
        rhs = np.rint(acc).astype(np.int64) if use_float else acc
        lhs = lhs_all[i] * (d * d)  # (j, u, v)
        diff = lhs != rhs
        if diff.any():
            j = int(np.argwhere(diff)[0][0])
            return (i, j)
    return None
