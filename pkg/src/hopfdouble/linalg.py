"""Exact linear algebra over cyclotomic scalars.

Vectors are sparse dicts ``{index: CycScalar}`` with zero entries omitted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, CycScalar, cyc

Vec = dict  # int -> CycScalar


# sparse vector helpers -------------------------------------------------------

def vec(entries: Mapping | Iterable) -> Vec:
    if isinstance(entries, Mapping):
        items = entries.items()
    else:
        items = enumerate(entries)
    out = {}
    for k, v in items:
        v = cyc(v)
        if v:
            out[k] = v
    return out


def basis_vec(i: int) -> Vec:
    return {i: ONE}


def vadd(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def vsub(a: Vec, b: Vec) -> Vec:
    return vadd(a, vscale(b, -ONE))


def vscale(a: Vec, c) -> Vec:
    c = cyc(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def axpy(out: Vec, c: CycScalar, x: Vec) -> None:
    """out += c * x, in place."""
    if not c:
        return
    for k, v in x.items():
        w = out.get(k)
        t = c * v
        if w is None:
            out[k] = t
        else:
            w = w + t
            if w:
                out[k] = w
            else:
                del out[k]


def dot(f: Vec, x: Vec) -> CycScalar:
    if len(f) > len(x):
        f, x = x, f
    s = ZERO
    for k, v in f.items():
        w = x.get(k)
        if w is not None:
            s = s + v * w
    return s


def dense(v: Vec, n: int) -> list[CycScalar]:
    return [v.get(i, ZERO) for i in range(n)]


def lincomb(pairs: Iterable[tuple[CycScalar, Vec]]) -> Vec:
    out: Vec = {}
    for c, x in pairs:
        axpy(out, c, x)
    return out


# echelon forms -----------------------------------------------------------------

class Echelon:
    """Incremental semi-echelon basis with exact reduction.

    While every vector seen is rational the reduction runs fraction-free on
    Python integers, which is far cheaper than generic field arithmetic; the
    first irrational vector switches the basis to field arithmetic.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[Vec] = []
        self.pivots: list[int] = []
        self._int: list[dict] | None = []  # primitive integer rows, pivot > 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce_int(self, v: dict) -> dict:
        for row, p in zip(self._int, self.pivots):
            a = v.get(p)
            if a is None:
                continue
            pr = row[p]
            g = gcd(a, pr)
            s, t = pr // g, a // g
            if s != 1:
                for k in v:
                    v[k] *= s
            for k, x in row.items():
                w = v.get(k, 0) - t * x
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
        if v:
            g = 0
            for x in v.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g != 1:
                v = {k: x // g for k, x in v.items()}
        return v

    def reduce(self, v: Vec) -> Vec:
        if self._int is not None:
            iv = _as_int_row(v)
            if iv is not None:
                r = self._reduce_int(iv)
                return {k: CycScalar.rational(x) for k, x in r.items()}
        v = dict(v)
        for row, p in zip(self.rows, self.pivots):
            c = v.get(p)
            if c is not None:
                axpy(v, -c, row)
        return v

    def add(self, v: Vec) -> bool:
        if self._int is not None:
            iv = _as_int_row(v)
            if iv is not None:
                r = self._reduce_int(iv)
                if not r:
                    return False
                p = min(r)
                if r[p] < 0:
                    r = {k: -x for k, x in r.items()}
                self._int.append(r)
                d = r[p]
                self.rows.append({k: CycScalar.rational(Fraction(x, d)) for k, x in r.items()})
                self.pivots.append(p)
                return True
            self._int = None
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        v = {k: x * inv for k, x in v.items()}
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def rref(self) -> list[Vec]:
        """Fully reduced rows sorted by pivot column."""
        n = len(self.rows)
        order = sorted(range(n), key=lambda i: self.pivots[i])
        if self._int is not None:
            rows = [dict(r) for r in self._int]
            for i in range(n - 1, -1, -1):
                r = rows[i]
                for j in range(i + 1, n):
                    a = r.get(self.pivots[j])
                    if a is not None:
                        pr = rows[j][self.pivots[j]]
                        g = gcd(a, pr)
                        s, t = pr // g, a // g
                        if s != 1:
                            for k in r:
                                r[k] *= s
                        for k, x in rows[j].items():
                            w = r.get(k, 0) - t * x
                            if w:
                                r[k] = w
                            else:
                                r.pop(k, None)
            out = []
            for i in order:
                r = rows[i]
                d = r[self.pivots[i]]
                out.append({k: CycScalar.rational(Fraction(x, d)) for k, x in r.items()})
            return out
        rows = [dict(r) for r in self.rows]
        for i in range(n - 1, -1, -1):
            r = rows[i]
            for j in range(i + 1, n):
                c = r.get(self.pivots[j])
                if c is not None:
                    axpy(r, -c, rows[j])
        return [rows[i] for i in order]


def _as_int_row(v: Vec) -> dict | None:
    """Clear denominators of a rational vector; None if some entry is irrational."""
    den = 1
    for x in v.values():
        if x.conductor != 1:
            return None
        d = x.den
        if den % d:
            den = den * d // gcd(den, d)
    return {k: x.num[0] * (den // x.den) for k, x in v.items() if x.num[0]}


def rref(vectors: Iterable[Vec], ncols: int) -> list[Vec]:
    E = Echelon(ncols)
    for v in vectors:
        E.add(v)
    return E.rref()


def nullspace(equations: Iterable[Vec], ncols: int) -> list[Vec]:
    """Basis of {x : e . x = 0 for every equation e}."""
    equations = [e for e in equations if e]
    if len(equations) > 2 * ncols + 8:
        sol = _nullspace_preselected(equations, ncols)
        if sol is not None:
            return sol
    return _nullspace_exact(equations, ncols)


def _nullspace_exact(equations, ncols):
    R = rref(equations, ncols)
    pivots = [min(r) for r in R]
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = {free: ONE}
        for r, p in zip(R, pivots):
            c = r.get(free)
            if c is not None:
                x[p] = -c
        basis.append(x)
    return basis


# modular preselection ---------------------------------------------------------------
#
# Tall systems are first reduced modulo a prime p = 1 (mod N).  Rows that are
# independent modulo p are independent over Q(zeta_N), so the exact solve only
# needs those rows; the result is then checked exactly against every row, and
# the plain exact path is used whenever that check fails.

_PRIME_BASE = 2**31


@lru_cache(maxsize=None)
def _modular_setup(n: int) -> tuple[int, list[int]]:
    """A prime p = 1 mod n below 2**31 and the powers of an n-th root of unity mod p."""
    p = (_PRIME_BASE - 1) // n * n + 1
    while True:
        p -= n
        if _is_prime(p):
            break
    # primitive n-th root of unity: g^((p-1)/n) for g of full order
    for g in range(2, p):
        w = pow(g, (p - 1) // n, p)
        if all(pow(w, n // q, p) != 1 for q in _prime_factors(n)):
            break
    return p, [pow(w, k, p) for k in range(n)]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _mod_image(x: CycScalar, p: int, powers: list[int], n: int) -> int:
    step = n // x.conductor
    s = 0
    for k, c in enumerate(x.num):
        if c:
            s += c * powers[(k * step) % n]
    return s * pow(x.den, -1, p) % p


def independent_rows_mod_p(rows: list[Vec], ncols: int) -> list[int] | None:
    """Indices of a maximal set of rows independent modulo a large prime."""
    import numpy as np

    N = 1
    for r in rows:
        for x in r.values():
            c = x.conductor
            if N % c:
                N = N * c // gcd(N, c)
    p, powers = _modular_setup(N)
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for k, x in r.items():
            if x.den % p == 0:
                return None
            A[i, k] = _mod_image(x, p, powers, N)
    chosen = []
    active = np.ones(len(rows), dtype=bool)
    for c in range(ncols):
        col = A[:, c]
        cand = np.flatnonzero(active & (col != 0))
        if cand.size == 0:
            continue
        i = int(cand[0])
        chosen.append(i)
        active[i] = False
        inv = pow(int(A[i, c]), -1, p)
        prow = (A[i] * inv) % p
        others = np.flatnonzero(active & (col != 0))
        if others.size:
            f = A[others, c][:, None]
            A[others] = (A[others] - (f * prow) % p) % p
    return sorted(chosen)


def _nullspace_preselected(equations, ncols):
    idx = independent_rows_mod_p(equations, ncols)
    if idx is None:
        return None
    basis = _nullspace_exact([equations[i] for i in idx], ncols)
    chosen = set(idx)
    for i, e in enumerate(equations):
        if i in chosen:
            continue
        for x in basis:
            if dot(e, x):
                return None
    return basis


def solve_dense(A: list[list], b: list):
    """One solution x of A x = b (dense), or None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    E = Echelon(n + 1)
    for i in range(m):
        row = {j: cyc(A[i][j]) for j in range(n) if A[i][j]}
        if b[i]:
            row[n] = cyc(b[i])
        E.add(row)
    R = E.rref()
    x = [ZERO] * n
    for r in R:
        p = min(r)
        if p == n:
            return None
        x[p] = r.get(n, ZERO)
    return x


def rank(vectors: Iterable[Vec], ncols: int) -> int:
    E = Echelon(ncols)
    for v in vectors:
        E.add(v)
    return E.rank


def matrix_inverse(M: list[list[CycScalar]]) -> list[list[CycScalar]] | None:
    n = len(M)
    E = Echelon(2 * n)
    for i in range(n):
        row = {j: M[i][j] for j in range(n) if M[i][j]}
        row[n + i] = ONE
        E.add(row)
    R = E.rref()
    if len(R) != n or any(min(r) >= n for r in R):
        return None
    return [[r.get(n + j, ZERO) for j in range(n)] for r in R]


def determinant(M: list[list[CycScalar]]) -> CycScalar:
    n = len(M)
    A = [[cyc(x) for x in row] for row in M]
    det = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det = det * A[c][c]
        inv = A[c][c].inverse()
        for r in range(c + 1, n):
            f = A[r][c]
            if f:
                f = f * inv
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det


def mat_mul(A, B):
    n, m, k = len(A), len(B), len(B[0]) if B else 0
    out = [[ZERO] * k for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for j in range(m):
            a = Ai[j]
            if a:
                Bj = B[j]
                for l in range(k):
                    b = Bj[l]
                    if b:
                        Oi[l] = Oi[l] + a * b
    return out


def identity(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def trace(M) -> CycScalar:
    s = ZERO
    for i in range(len(M)):
        s = s + M[i][i]
    return s


# subspaces ---------------------------------------------------------------------

class Subspace:
    """A subspace of k^n stored by its reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Vec] = ()):
        self.ambient_dim = ambient_dim
        self.rows = tuple(rref(vectors, ambient_dim))
        self.pivots = tuple(min(r) for r in self.rows)

    @classmethod
    def _from_rref(cls, ambient_dim, rows):
        S = cls.__new__(cls)
        S.ambient_dim = ambient_dim
        S.rows = tuple(rows)
        S.pivots = tuple(min(r) for r in S.rows)
        return S

    @classmethod
    def whole(cls, n: int):
        return cls._from_rref(n, [{i: ONE} for i in range(n)])

    @classmethod
    def zero(cls, n: int):
        return cls._from_rref(n, [])

    @classmethod
    def span(cls, n: int, vectors: Iterable[Vec]):
        return cls(n, vectors)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def basis(self) -> list[Vec]:
        return [dict(r) for r in self.rows]

    def coords(self, v: Vec) -> list[CycScalar] | None:
        """Coordinates of v in the echelon basis, or None if v is outside."""
        c = [v.get(p, ZERO) for p in self.pivots]
        rem = dict(v)
        for ci, r in zip(c, self.rows):
            if ci:
                axpy(rem, -ci, r)
        return None if rem else c

    def contains(self, v: Vec) -> bool:
        return self.coords(v) is not None

    def __contains__(self, v: Vec) -> bool:
        return self.contains(v)

    def issubset(self, other: Subspace) -> bool:
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, len(self.rows)))

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, ambient={self.ambient_dim})"

    def sum(self, other: Subspace) -> Subspace:
        return type(self)(self.ambient_dim, list(self.rows) + list(other.rows))

    def equations(self) -> list[Vec]:
        """Linear equations cutting out this subspace."""
        pivset = set(self.pivots)
        eqs = []
        for c in range(self.ambient_dim):
            if c in pivset:
                continue
            e = {c: ONE}
            for r, p in zip(self.rows, self.pivots):
                x = r.get(c)
                if x is not None:
                    e[p] = -x
            eqs.append(e)
        return eqs

    def intersect(self, other: Subspace) -> Subspace:
        if self.dim > other.dim:
            return other.intersect(self)
        # x = sum a_i row_i must satisfy the equations of other
        eqs = []
        for e in other.equations():
            eqs.append({i: dot(e, r) for i, r in enumerate(self.rows) if dot(e, r)})
        sols = nullspace(eqs, self.dim)
        vecs = [lincomb((c, self.rows[i]) for i, c in s.items()) for s in sols]
        return type(self)(self.ambient_dim, vecs)

    def to_lists(self) -> list[list[CycScalar]]:
        return [dense(r, self.ambient_dim) for r in self.rows]


class LinearFunctionalSpace(Subspace):
    """A subspace of the dual space A*, in dual-basis coordinates."""

    __slots__ = ()
