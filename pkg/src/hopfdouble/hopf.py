"""Finite-dimensional Hopf algebras given by structure constants.

Basis elements are b_0..b_{n-1}.  Elements are sparse vectors, elements of
H (x) H are dicts keyed by index pairs, and covectors (elements of H*) are
sparse vectors in the dual basis.  The antipode is stored row-wise:
``antipode[i]`` is the vector S(b_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd

from .kernel import rational_structure, verify_axioms_dense
from .linalg import (
    Echelon,
    LinearFunctionalSpace,
    Subspace,
    Vec,
    axpy,
    dot,
    lincomb,
    matrix_inverse,
    nullspace,
    vadd,
    vscale,
    vsub,
)
from .scalars import ONE, ZERO, CycScalar, cyc


class DimensionError(ValueError):
    pass


class NotSemisimple(ArithmeticError):
    pass


class PreconditionError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """An identity guaranteed by theory failed: signals a bug or a bad input."""


def tensor_add(out: dict, c: CycScalar, key) -> None:
    w = out.get(key)
    if w is None:
        if c:
            out[key] = c
    else:
        w = w + c
        if w:
            out[key] = w
        else:
            del out[key]


DENSE_PRODUCT_THRESHOLD = 48


class Algebra:
    """Associative unital algebra: mult[(i, j)] = b_i b_j as a sparse vector."""

    def __init__(self, dim: int, mult: dict, unit: Vec, labels=None, conductor: int = 1):
        self.dim = dim
        self.mult = {k: v for k, v in mult.items() if v}
        self.unit = {k: v for k, v in dict(unit).items() if v}
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(dim)]
        self.conductor = conductor

    def mul(self, x: Vec, y: Vec) -> Vec:
        if len(x) * len(y) > DENSE_PRODUCT_THRESHOLD:
            rs = rational_structure(self)
            if rs is not None:
                res = rs.mul_vec(x, y)
                if res is not None:
                    return res
        return self.mul_sparse(x, y)

    def mul_sparse(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        mult = self.mult
        for i, a in x.items():
            for j, b in y.items():
                r = mult.get((i, j))
                if r:
                    axpy(out, a * b, r)
        return out

    def mul_basis(self, i: int, j: int) -> Vec:
        return self.mult.get((i, j), {})

    def power(self, x: Vec, k: int) -> Vec:
        out = dict(self.unit)
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def commutator_free(self, x: Vec, y: Vec) -> bool:
        return self.mul(x, y) == self.mul(y, x)

    def is_commutative(self) -> bool:
        return all(self.mul_basis(i, j) == self.mul_basis(j, i)
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    @cached_property
    def regular_trace(self) -> Vec:
        """The covector x -> Tr(left multiplication by x)."""
        t: Vec = {}
        for (i, j), r in self.mult.items():
            c = r.get(j)
            if c:
                tensor_add(t, c, i)
        return t

    def left_matrix(self, x: Vec) -> list[list[CycScalar]]:
        n = self.dim
        M = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            col = self.mul(x, {j: ONE})
            for k, c in col.items():
                M[k][j] = c
        return M

    def subalgebra(self, W: Subspace, labels=None) -> tuple[Algebra, list[Vec]]:
        """The subalgebra W as an abstract algebra, with its basis in self."""
        basis = W.basis()
        r = len(basis)
        mult = {}
        for a in range(r):
            for b in range(r):
                c = W.coords(self.mul(basis[a], basis[b]))
                if c is None:
                    raise PreconditionError("subspace is not closed under multiplication")
                v = {k: x for k, x in enumerate(c) if x}
                if v:
                    mult[(a, b)] = v
        uc = W.coords(self.unit)
        if uc is None:
            raise PreconditionError("subspace does not contain the unit")
        unit = {k: x for k, x in enumerate(uc) if x}
        return Algebra(r, mult, unit, labels, self.conductor), basis


class HopfAlgebra(Algebra):
    def __init__(self, dim, mult, unit, comult, counit, antipode, labels=None, conductor=1,
                 name: str | None = None):
        super().__init__(dim, mult, unit, labels, conductor)
        self.comult = [{k: v for k, v in t.items() if v} for t in comult]
        self.counit = {k: v for k, v in dict(counit).items() if v}
        self.antipode = [dict(v) for v in antipode]
        self.name = name or f"H{dim}"
        self.subspaces: dict[str, Subspace] = {}
        self._check_shapes()

    def __repr__(self):
        return f"HopfAlgebra({self.name!r}, dim={self.dim})"

    def _check_shapes(self):
        n = self.dim
        if len(self.labels) != n or len(self.comult) != n or len(self.antipode) != n:
            raise DimensionError(f"structure tensors inconsistent with dim={n}")
        for (i, j), v in self.mult.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in v):
                raise DimensionError(f"mult entry ({i},{j}) out of range")
        for i, t in enumerate(self.comult):
            if any(not (0 <= a < n and 0 <= b < n) for a, b in t):
                raise DimensionError(f"comult entry for b_{i} out of range")
        for v in [self.unit, self.counit, *self.antipode]:
            if any(not 0 <= k < n for k in v):
                raise DimensionError("vector index out of range")

    # structure maps ------------------------------------------------------
    def comul(self, x: Vec) -> dict:
        out: dict = {}
        for i, a in x.items():
            for key, c in self.comult[i].items():
                tensor_add(out, a * c, key)
        return out

    def eps(self, x: Vec) -> CycScalar:
        return dot(self.counit, x)

    def S(self, x: Vec) -> Vec:
        return lincomb((a, self.antipode[i]) for i, a in x.items())

    @cached_property
    def antipode_inverse(self) -> list[Vec]:
        n = self.dim
        M = [[self.antipode[i].get(j, ZERO) for j in range(n)] for i in range(n)]
        inv = matrix_inverse(M)
        if inv is None:
            raise PreconditionError("antipode is not invertible")
        return [{j: inv[i][j] for j in range(n) if inv[i][j]} for i in range(n)]

    def S_inv(self, x: Vec) -> Vec:
        return lincomb((a, self.antipode_inverse[i]) for i, a in x.items())

    def tensor_mul(self, X: dict, Y: dict) -> dict:
        """Product in H (x) H."""
        out: dict = {}
        for (a, b), c in X.items():
            for (p, q), d in Y.items():
                l = self.mult.get((a, p))
                if not l:
                    continue
                r = self.mult.get((b, q))
                if not r:
                    continue
                cd = c * d
                for u, x in l.items():
                    cdx = cd * x
                    for v, y in r.items():
                        tensor_add(out, cdx * y, (u, v))
        return out

    def comul2(self, i: int) -> dict:
        """(Delta (x) id) Delta (b_i) keyed by index triples."""
        out: dict = {}
        for (j, k), c in self.comult[i].items():
            for (u, v), d in self.comult[j].items():
                tensor_add(out, c * d, (u, v, k))
        return out

    def ad(self, x: Vec, a: Vec) -> Vec:
        """Left adjoint action x_1 a S(x_2)."""
        out: Vec = {}
        for (j, k), c in self.comul(x).items():
            axpy(out, c, self.mul(self.mul({j: ONE}, a), self.antipode[k]))
        return out

    def is_cocommutative(self) -> bool:
        return all(t == {(k, j): c for (j, k), c in t.items()} for t in self.comult)

    def s_squared_is_identity(self) -> bool:
        return all(self.S(self.antipode[i]) == {i: ONE} for i in range(self.dim))

    # functionals ---------------------------------------------------------
    def func_mul(self, f: Vec, g: Vec) -> Vec:
        """Convolution product in H*: (fg)(x) = f(x_1) g(x_2)."""
        out: Vec = {}
        for i, t in enumerate(self.comult):
            s = ZERO
            for (j, k), c in t.items():
                a = f.get(j)
                if a is None:
                    continue
                b = g.get(k)
                if b is None:
                    continue
                s = s + c * a * b
            if s:
                out[i] = s
        return out

    def func_S(self, f: Vec) -> Vec:
        """f o S as a covector."""
        out: Vec = {}
        for i in range(self.dim):
            s = dot(f, self.antipode[i])
            if s:
                out[i] = s
        return out

    def func_S_inv(self, f: Vec) -> Vec:
        out: Vec = {}
        for i in range(self.dim):
            s = dot(f, self.antipode_inverse[i])
            if s:
                out[i] = s
        return out

    def hit(self, a: Vec, f: Vec) -> Vec:
        """a -> f as a covector: (a -> f)(x) = f(x a)."""
        out: Vec = {}
        for i in range(self.dim):
            s = dot(f, self.mul({i: ONE}, a))
            if s:
                out[i] = s
        return out

    def hit_right(self, f: Vec, b: Vec) -> Vec:
        """f <- b as a covector: (f <- b)(x) = f(b x)."""
        out: Vec = {}
        for i in range(self.dim):
            s = dot(f, self.mul(b, {i: ONE}))
            if s:
                out[i] = s
        return out

    def translate_right(self, y: Vec, g: Vec) -> Vec:
        """y <- g = g(y_1) y_2, the right action of H* on H."""
        out: Vec = {}
        for (j, k), c in self.comul(y).items():
            a = g.get(j)
            if a is not None:
                tensor_add(out, c * a, k)
        return out

    def translate_left(self, g: Vec, y: Vec) -> Vec:
        """g -> y = y_1 g(y_2), the left action of H* on H."""
        out: Vec = {}
        for (j, k), c in self.comul(y).items():
            a = g.get(k)
            if a is not None:
                tensor_add(out, c * a, j)
        return out


# axioms --------------------------------------------------------------------

IDENTITIES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplication-multiplicative",
    "counit-multiplicative",
    "antipode",
)


@dataclass
class AxiomFailure:
    identity: str
    witness: tuple

    def as_dict(self):
        return {"identity": self.identity, "witness": list(self.witness)}


def verify_axioms(H: HopfAlgebra) -> list[AxiomFailure]:
    """Check the Hopf algebra identities exactly on all basis tuples.

    Returns one failure per broken identity, with the first basis-index
    witness found; an empty list means H is a Hopf algebra.  Checking basis
    elements suffices because every identity is multilinear.
    """
    H._check_shapes()
    if H.dim > 8:
        dense_report = verify_axioms_dense(H)
        if dense_report is not None:
            return [AxiomFailure(name, w) for name, w in dense_report]
    return verify_axioms_generic(H)


def verify_axioms_generic(H: HopfAlgebra) -> list[AxiomFailure]:
    """Sparse evaluation of every identity; works over any conductor."""
    n = H.dim
    fails: list[AxiomFailure] = []
    P = [[H.mult.get((i, j), {}) for j in range(n)] for i in range(n)]

    def first(name, gen):
        for w in gen:
            fails.append(AxiomFailure(name, w))
            return

    def assoc():
        for i in range(n):
            for j in range(n):
                Pij = P[i][j]
                for k in range(n):
                    left = lincomb((c, P[p][k]) for p, c in Pij.items())
                    right = lincomb((c, P[i][q]) for q, c in P[j][k].items())
                    if left != right:
                        yield (i, j, k)

    first("associativity", assoc())

    def unit():
        for i in range(n):
            e = {i: ONE}
            if H.mul(H.unit, e) != e or H.mul(e, H.unit) != e:
                yield (i,)

    first("unit", unit())

    def coassoc():
        for i in range(n):
            left: dict = {}
            right: dict = {}
            for (j, k), c in H.comult[i].items():
                for (u, v), d in H.comult[j].items():
                    tensor_add(left, c * d, (u, v, k))
                for (u, v), d in H.comult[k].items():
                    tensor_add(right, c * d, (j, u, v))
            if left != right:
                yield (i,)

    first("coassociativity", coassoc())

    def counit():
        for i in range(n):
            l: Vec = {}
            r: Vec = {}
            for (j, k), c in H.comult[i].items():
                e = H.counit.get(j)
                if e is not None:
                    tensor_add(l, c * e, k)
                e = H.counit.get(k)
                if e is not None:
                    tensor_add(r, c * e, j)
            if l != {i: ONE} or r != {i: ONE}:
                yield (i,)

    first("counit", counit())

    def comult_mult():
        one = H.comul(H.unit)
        uu = {(a, b): x * y for a, x in H.unit.items() for b, y in H.unit.items()}
        if one != {k: v for k, v in uu.items() if v}:
            yield ("unit",)
        for i in range(n):
            for j in range(n):
                if H.comul(P[i][j]) != H.tensor_mul(H.comult[i], H.comult[j]):
                    yield (i, j)

    first("comultiplication-multiplicative", comult_mult())

    def counit_mult():
        if H.eps(H.unit) != ONE:
            yield ("unit",)
        for i in range(n):
            for j in range(n):
                if H.eps(P[i][j]) != H.counit.get(i, ZERO) * H.counit.get(j, ZERO):
                    yield (i, j)

    first("counit-multiplicative", counit_mult())

    def antipode():
        for i in range(n):
            l: Vec = {}
            r: Vec = {}
            for (j, k), c in H.comult[i].items():
                axpy(l, c, H.mul(H.antipode[j], {k: ONE}))
                axpy(r, c, H.mul({j: ONE}, H.antipode[k]))
            target = vscale(H.unit, H.counit.get(i, ZERO))
            if l != target or r != target:
                yield (i,)

    first("antipode", antipode())
    return fails


# duals and variants -----------------------------------------------------------

def dual(H: HopfAlgebra, name: str | None = None) -> HopfAlgebra:
    """The dual Hopf algebra H* in the dual basis."""
    n = H.dim
    mult: dict = {}
    for k, t in enumerate(H.comult):
        for (i, j), c in t.items():
            mult.setdefault((i, j), {})
            tensor_add(mult[(i, j)], c, k)
    comult = [dict() for _ in range(n)]
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            tensor_add(comult[k], c, (i, j))
    antipode = [dict() for _ in range(n)]
    for i in range(n):
        for j, c in H.antipode[i].items():
            antipode[j][i] = c
    labels = [_dual_label(l) for l in H.labels]
    return HopfAlgebra(n, mult, dict(H.counit), comult, dict(H.unit), antipode, labels,
                       H.conductor, name or _dual_name(H.name))


def _dual_label(l: str) -> str:
    if l.startswith("d(") and l.endswith(")"):
        return l[2:-1]
    return f"d({l})"


def _dual_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def variant(H: HopfAlgebra, kind: str) -> HopfAlgebra:
    """H^op, H^cop or H^op,cop."""
    if kind not in ("op", "cop", "op_cop"):
        raise ValueError(f"unknown variant {kind!r}")
    mult = H.mult
    comult = H.comult
    if kind in ("op", "op_cop"):
        mult = {(j, i): v for (i, j), v in H.mult.items()}
    if kind in ("cop", "op_cop"):
        comult = [{(k, j): c for (j, k), c in t.items()} for t in H.comult]
    antipode = H.antipode if kind == "op_cop" else H.antipode_inverse
    return HopfAlgebra(H.dim, mult, H.unit, comult, H.counit, antipode, H.labels,
                       H.conductor, f"{H.name}^{kind.replace('_', ',')}")


# integrals --------------------------------------------------------------------

def subspace_integral(H: Algebra, W: Subspace, counit: Vec) -> Vec:
    """The idempotent element L of W with wL = eps(w)L for w in W, eps(L) = 1."""
    basis = W.basis()
    r = len(basis)
    prods = [[H.mul(w, v) for v in basis] for w in basis]
    eqs = []
    for a, w in enumerate(basis):
        e = dot(counit, w)
        for k in range(H.dim):
            row = {}
            for b in range(r):
                x = prods[a][b].get(k, ZERO) - e * basis[b].get(k, ZERO)
                if x:
                    row[b] = x
            if row:
                eqs.append(row)
    sols = nullspace(eqs, r)
    for s in sols:
        lam = lincomb((c, basis[b]) for b, c in s.items())
        e = dot(counit, lam)
        if e:
            return vscale(lam, e.inverse())
    raise NotSemisimple("no integral with nonzero counit: algebra is not semisimple")


def integral(H: HopfAlgebra) -> Vec:
    """Normalized left integral: x L = eps(x) L, eps(L) = 1."""
    lam = subspace_integral(H, Subspace.whole(H.dim), H.counit)
    if H.mul(lam, lam) != lam:
        raise ConsistencyError("normalized integral is not idempotent")
    return lam


# subspace classification ----------------------------------------------------------

FLAGS = (
    "subalgebra",
    "subcoalgebra",
    "S-stable",
    "left-coideal",
    "hopf-subalgebra",
    "normal-hopf-subalgebra",
    "normal-left-coideal-subalgebra",
)


def _legs(t: dict, n: int):
    """Left-leg and right-leg vectors of a two-tensor."""
    left: dict[int, Vec] = {}
    right: dict[int, Vec] = {}
    for (j, k), c in t.items():
        left.setdefault(k, {})[j] = c
        right.setdefault(j, {})[k] = c
    return list(left.values()), list(right.values())


def is_subalgebra(H: Algebra, W: Subspace) -> bool:
    if not W.contains(H.unit):
        return False
    B = W.basis()
    return all(W.contains(H.mul(a, b)) for a in B for b in B)


def is_left_coideal(H: HopfAlgebra, W: Subspace) -> bool:
    for w in W.basis():
        _, right = _legs(H.comul(w), H.dim)
        if not all(W.contains(v) for v in right):
            return False
    return True


def is_subcoalgebra(H: HopfAlgebra, W: Subspace) -> bool:
    for w in W.basis():
        left, right = _legs(H.comul(w), H.dim)
        if not all(W.contains(v) for v in left + right):
            return False
    return True


def is_ad_stable(H: HopfAlgebra, W: Subspace) -> bool:
    B = W.basis()
    return all(W.contains(H.ad({i: ONE}, w)) for i in range(H.dim) for w in B)


def classify_subspace(H: HopfAlgebra, W: Subspace) -> dict[str, bool]:
    if W.ambient_dim != H.dim:
        raise DimensionError("subspace ambient dimension differs from the algebra")
    sub = is_subalgebra(H, W)
    coalg = is_subcoalgebra(H, W)
    sstable = all(W.contains(H.S(w)) for w in W.basis())
    coideal = coalg or is_left_coideal(H, W)
    adst = is_ad_stable(H, W) if sub else False
    hopf = sub and coalg and sstable
    return {
        "subalgebra": sub,
        "subcoalgebra": coalg,
        "S-stable": sstable,
        "left-coideal": coideal,
        "hopf-subalgebra": hopf,
        "normal-hopf-subalgebra": hopf and adst,
        "normal-left-coideal-subalgebra": sub and coideal and adst,
    }


# quotients --------------------------------------------------------------------------

@dataclass
class Quotient:
    algebra: HopfAlgebra
    projection: list[Vec]  # projection[i] = pi(b_i) in quotient coordinates
    kept: list[int]  # basis indices of A whose images form the quotient basis
    ideal: Subspace

    def project(self, x: Vec) -> Vec:
        return lincomb((c, self.projection[i]) for i, c in x.items())


def augmentation(H: HopfAlgebra, L: Subspace) -> list[Vec]:
    """Basis of L+ = L intersect ker(eps)."""
    out = []
    for w in L.basis():
        e = H.eps(w)
        out.append(vsub(w, vscale(H.unit, e)) if e else w)
    return [v for v in out if v]


def quotient(H: HopfAlgebra, L: Subspace, check: bool = True) -> Quotient:
    """A//L = A / A L+ for a normal left coideal subalgebra L."""
    flags = classify_subspace(H, L)
    if not flags["normal-left-coideal-subalgebra"]:
        raise PreconditionError("quotient needs a normal left coideal subalgebra")
    n = H.dim
    Lplus = augmentation(H, L)
    E = Echelon(n)
    for i in range(n):
        for l in Lplus:
            E.add(H.mul({i: ONE}, l))
    I = Subspace(n, E.rows)
    for l in Lplus:
        for i in range(n):
            if not I.contains(H.mul(l, {i: ONE})):
                raise ConsistencyError("A L+ differs from L+ A")
    if n % L.dim or n - I.dim != n // L.dim:
        raise ConsistencyError(f"quotient dimension {n - I.dim} is not dim A / dim L = {n}/{L.dim}")
    pivset = set(I.pivots)
    kept = [c for c in range(n) if c not in pivset]
    pos = {c: a for a, c in enumerate(kept)}
    proj: list[Vec] = []
    for i in range(n):
        if i in pos:
            proj.append({pos[i]: ONE})
        else:
            r = I.rows[I.pivots.index(i)]
            proj.append({pos[c]: -x for c, x in r.items() if c != i})

    def pi(x: Vec) -> Vec:
        return lincomb((c, proj[i]) for i, c in x.items())

    q = len(kept)
    mult = {}
    for a, i in enumerate(kept):
        for b, j in enumerate(kept):
            v = pi(H.mul_basis(i, j))
            if v:
                mult[(a, b)] = v
    comult = []
    for i in kept:
        t: dict = {}
        for (j, k), c in H.comult[i].items():
            for u, x in proj[j].items():
                for v, y in proj[k].items():
                    tensor_add(t, c * x * y, (u, v))
        comult.append(t)
    counit = {a: H.counit[i] for a, i in enumerate(kept) if i in H.counit}
    antipode = [pi(H.antipode[i]) for i in kept]
    labels = [f"[{H.labels[i]}]" for i in kept]
    Q = HopfAlgebra(q, mult, pi(H.unit), comult, counit, antipode, labels, H.conductor,
                    f"{H.name}//{L.dim}")
    out = Quotient(Q, proj, kept, I)
    if check:
        for i in range(n):
            if H.eps({i: ONE}) != Q.eps(proj[i]):
                raise ConsistencyError("projection does not preserve the counit")
            for j in range(n):
                if pi(H.mul_basis(i, j)) != Q.mul(proj[i], proj[j]):
                    raise ConsistencyError("projection is not multiplicative")
            dq: dict = {}
            for (j, k), c in H.comult[i].items():
                for u, x in proj[j].items():
                    for v, y in proj[k].items():
                        tensor_add(dq, c * x * y, (u, v))
            if dq != Q.comul(proj[i]):
                raise ConsistencyError("projection is not comultiplicative")
    return out


def dual_quotient_subalgebra(H: HopfAlgebra, L: Subspace) -> LinearFunctionalSpace:
    """{f in A* : f(a l) = f(a) eps(l) for all a in A, l in L}."""
    n = H.dim
    eqs = []
    for l in L.basis():
        e = H.eps(l)
        for a in range(n):
            row = dict(H.mul({a: ONE}, l))
            if e:
                tensor_add(row, -e, a)
            if row:
                eqs.append(row)
    return LinearFunctionalSpace(n, nullspace(eqs, n))


# coideal subalgebra calculus --------------------------------------------------------

def coideal_product(H: Algebra, L: Subspace, K: Subspace) -> Subspace:
    return Subspace(H.dim, [H.mul(l, k) for l in L.basis() for k in K.basis()])


def generated_subalgebra(H: Algebra, vectors, closed_under=None) -> Subspace:
    """Smallest subalgebra containing the vectors (and optionally closed under a map)."""
    E = Echelon(H.dim)
    E.add(H.unit)
    for v in vectors:
        E.add(v)
    frontier = list(E.rows)
    gens = list(E.rows)
    while frontier:
        new = []
        for x in frontier:
            cands = [H.mul(x, g) for g in gens] + [H.mul(g, x) for g in gens]
            if closed_under is not None:
                cands.append(closed_under(x))
            for c in cands:
                if E.add(c):
                    new.append(E.rows[-1])
        frontier = new
        gens = list(E.rows)
    return Subspace(H.dim, E.rows)


def coideal_join(H: Algebra, L: Subspace, K: Subspace) -> Subspace:
    return generated_subalgebra(H, L.basis() + K.basis())


def subspace_lattice_ops(V: Subspace, W: Subspace, kind: str) -> Subspace:
    if V.ambient_dim != W.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    if kind == "intersect":
        return V.intersect(W)
    if kind == "sum":
        return V.sum(W)
    raise ValueError(f"unknown lattice operation {kind!r}")


# representations ----------------------------------------------------------------------

class Representation:
    """Action matrices rho(b_i) (acting on column vectors) of a module."""

    def __init__(self, algebra_dim: int, matrices: list, name: str = ""):
        self.algebra_dim = algebra_dim
        self.matrices = matrices
        self.name = name
        self.dim = len(matrices[0]) if matrices else 0
        if len(matrices) != algebra_dim:
            raise DimensionError("one action matrix per basis element is required")

    def act(self, x: Vec):
        m = self.dim
        out = [[ZERO] * m for _ in range(m)]
        for i, c in x.items():
            M = self.matrices[i]
            for r in range(m):
                Mr, Or = M[r], out[r]
                for s in range(m):
                    if Mr[s]:
                        Or[s] = Or[s] + c * Mr[s]
        return out

    def character(self) -> Vec:
        out: Vec = {}
        for i, M in enumerate(self.matrices):
            t = ZERO
            for r in range(self.dim):
                t = t + M[r][r]
            if t:
                out[i] = t
        return out

    def verify(self, A: Algebra) -> bool:
        from .linalg import identity, mat_mul

        if self.act(A.unit) != identity(self.dim):
            return False
        for i in range(A.dim):
            for j in range(A.dim):
                if mat_mul(self.matrices[i], self.matrices[j]) != self.act(A.mul_basis(i, j)):
                    return False
        return True


def module_from_action(A: Algebra, K: Subspace, action, name="") -> Representation:
    """Representation on K given action(i, k) -> vector for basis i of A and k in K."""
    basis = K.basis()
    m = len(basis)
    mats = []
    for i in range(A.dim):
        M = [[ZERO] * m for _ in range(m)]
        for c, k in enumerate(basis):
            coords = K.coords(action(i, k))
            if coords is None:
                raise PreconditionError("subspace is not stable under the action")
            for r, x in enumerate(coords):
                M[r][c] = x
        mats.append(M)
    return Representation(A.dim, mats, name)


def adjoint_module(H: HopfAlgebra, K: Subspace) -> Representation:
    """K as an H-module under x . a = x_1 a S(x_2)."""
    return module_from_action(H, K, lambda i, k: H.ad({i: ONE}, k), "adjoint")


def regular_module(A: Algebra) -> Representation:
    return module_from_action(A, Subspace.whole(A.dim), lambda i, k: A.mul({i: ONE}, k), "regular")


def trivial_module(H: HopfAlgebra) -> Representation:
    return Representation(H.dim, [[[H.counit.get(i, ZERO)]] for i in range(H.dim)], "trivial")


def sub_hopf(H: HopfAlgebra, W: Subspace, name: str | None = None) -> tuple[HopfAlgebra, list[Vec]]:
    """A Hopf subalgebra W as a Hopf algebra in its echelon basis."""
    alg, basis = H.subalgebra(W)
    comult = []
    for w in basis:
        t: dict = {}
        D = H.comul(w)
        left: dict[int, Vec] = {}
        for (j, k), c in D.items():
            left.setdefault(j, {})[k] = c
        # D = sum_j b_j (x) left[j]; rewrite right legs, then left legs
        partial: dict[int, Vec] = {}
        for j, rv in left.items():
            rc = W.coords(rv)
            if rc is None:
                raise PreconditionError("subspace is not a subcoalgebra")
            for b, x in enumerate(rc):
                if x:
                    partial.setdefault(b, {})[j] = x
        for b, lv in partial.items():
            lc = W.coords(lv)
            if lc is None:
                raise PreconditionError("subspace is not a subcoalgebra")
            for a, x in enumerate(lc):
                if x:
                    t[(a, b)] = x
        comult.append(t)
    counit = {a: H.eps(w) for a, w in enumerate(basis) if H.eps(w)}
    antipode = []
    for w in basis:
        c = W.coords(H.S(w))
        if c is None:
            raise PreconditionError("subspace is not stable under the antipode")
        antipode.append({k: x for k, x in enumerate(c) if x})
    labels = [_vec_label(H, w) for w in basis]
    K = HopfAlgebra(alg.dim, alg.mult, alg.unit, comult, counit, antipode, labels, H.conductor,
                    name or f"{H.name}|{W.dim}")
    return K, basis


def _vec_label(H: HopfAlgebra, w: Vec) -> str:
    if len(w) == 1:
        (i, c), = w.items()
        if c == ONE:
            return H.labels[i]
    return "+".join(f"{c}*{H.labels[i]}" for i, c in sorted(w.items()))
