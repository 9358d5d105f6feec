"""Drinfeld doubles, their braided structure and modular data.

D(A) has basis b_p^* |x| b_a at index p*n + a.  Its coalgebra is A^{*cop} (x) A,
the product is the twisted one

    (f |x| a)(g |x| b) = f g(S^{-1}(a_3) . a_1) |x| a_2 b,

and R = sum_i (eps |x| b_i) (x) (b_i^* |x| 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import mpmath

from .hopf import (
    ConsistencyError,
    HopfAlgebra,
    PreconditionError,
    Representation,
    dual,
    dual_quotient_subalgebra,
    integral,
    module_from_action,
    tensor_add,
    variant,
    verify_axioms,
)
from .linalg import (
    Subspace,
    Vec,
    axpy,
    dot,
    lincomb,
    matrix_inverse,
    rank,
    vscale,
)
from .repthy import (
    FusionSubcategory,
    IrrDecomposition,
    character_ring,
    fusion_closure,
    irreducible_characters,
    rep_trivial_on,
)
from .scalars import ONE, ZERO, CycScalar, abs_upper, cyc, embeddings


# construction ------------------------------------------------------------------------

def _dual_products(A: HopfAlgebra) -> dict[tuple[int, int], Vec]:
    """b_p^* b_z^* in A* for all p, z."""
    out: dict[tuple[int, int], Vec] = {}
    for y, t in enumerate(A.comult):
        for (p, z), c in t.items():
            out.setdefault((p, z), {})[y] = c
    return out


def _double_mult(A: HopfAlgebra) -> dict[tuple[int, int], Vec]:
    n = A.dim
    PZ = _dual_products(A)
    Sinv = A.antipode_inverse
    # T[(w, u)][z] = S^{-1}(b_w) b_z b_u
    T: dict[tuple[int, int], list[Vec]] = {}
    for w in range(n):
        for u in range(n):
            T[(w, u)] = [A.mul(A.mul(Sinv[w], {z: ONE}), {u: ONE}) for z in range(n)]
    # X[(a, q)] = sum over Delta^2(b_a) of c * sum_z (coeff of b_q) b_z^* (x) b_v
    X: dict[tuple[int, int], dict] = {}
    for a in range(n):
        d2 = A.comul2(a)
        for q in range(n):
            acc: dict = {}
            for (u, v, w), c in d2.items():
                row = T[(w, u)]
                for z in range(n):
                    x = row[z].get(q)
                    if x:
                        tensor_add(acc, c * x, (z, v))
            X[(a, q)] = acc
    mult: dict[tuple[int, int], Vec] = {}
    for p in range(n):
        for a in range(n):
            for q in range(n):
                Xaq = X[(a, q)]
                if not Xaq:
                    continue
                for b in range(n):
                    out: Vec = {}
                    for (z, v), c in Xaq.items():
                        f = PZ.get((p, z))
                        h = A.mult.get((v, b))
                        if not f or not h:
                            continue
                        for y, fy in f.items():
                            cf = c * fy
                            for k, hk in h.items():
                                tensor_add(out, cf * hk, y * n + k)
                    if out:
                        mult[(p * n + a, q * n + b)] = out
    return mult


def _double_comult(A: HopfAlgebra) -> list[dict]:
    n = A.dim
    # Delta_{A*}(b_p^*) = sum m[i][j][p] b_i^* (x) b_j^*; the cop flips the legs
    dual_comult: list[list[tuple[int, int, CycScalar]]] = [[] for _ in range(n)]
    for (i, j), v in A.mult.items():
        for p, c in v.items():
            dual_comult[p].append((i, j, c))
    out = []
    for p in range(n):
        for a in range(n):
            t: dict = {}
            for i, j, c in dual_comult[p]:
                for (u, v), d in A.comult[a].items():
                    tensor_add(t, c * d, (j * n + u, i * n + v))
            out.append(t)
    return out


ANTIPODE_CONVENTIONS = (
    "S(f|x|h) = (eps|x|S^-1 h)(f o S^-1 |x| 1)",
    "S(f|x|h) = (eps|x|S h)(f o S^-1 |x| 1)",
    "S(f|x|h) = (eps|x|S^-1 h)(f o S |x| 1)",
    "S(f|x|h) = (eps|x|S h)(f o S |x| 1)",
)


@dataclass
class QuasitriangularHopf:
    H: HopfAlgebra
    R: dict
    base: HopfAlgebra | None = None
    antipode_convention: str = ""
    report: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.base.dim if self.base is not None else 0

    def idx(self, p: int, a: int) -> int:
        return p * self.n + a

    def embed_A(self, x: Vec) -> Vec:
        """a -> eps |x| a."""
        A = self.base
        out: Vec = {}
        for p, e in A.counit.items():
            for a, c in x.items():
                out[self.idx(p, a)] = e * c
        return out

    def embed_dual(self, f: Vec) -> Vec:
        """f -> f |x| 1."""
        A = self.base
        out: Vec = {}
        for p, c in f.items():
            for k, u in A.unit.items():
                out[self.idx(p, k)] = c * u
        return out

    def bowtie(self, f: Vec, x: Vec) -> Vec:
        """The pure tensor f |x| x."""
        return {self.idx(p, a): c * d for p, c in f.items() for a, d in x.items()}

    def embed_subspace_A(self, K: Subspace) -> Subspace:
        return Subspace(self.H.dim, [self.embed_A(k) for k in K.basis()])

    def embed_subspace_dual(self, K: Subspace) -> Subspace:
        return Subspace(self.H.dim, [self.embed_dual(k) for k in K.basis()])


def drinfeld_double(A: HopfAlgebra, check: bool = True) -> QuasitriangularHopf:
    """D(A) with its R-matrix; axioms, R-matrix identities and inclusions are checked."""
    cached = A.__dict__.get("_double")
    if cached is not None:
        return cached
    n = A.dim
    N = n * n
    mult = _double_mult(A)
    comult = _double_comult(A)
    counit = {p * n + a: A.unit.get(p, ZERO) * A.counit.get(a, ZERO)
              for p in range(n) for a in range(n)}
    unit = {p * n + k: A.counit.get(p, ZERO) * A.unit.get(k, ZERO)
            for p in range(n) for k in range(n)}
    labels = [f"{_star(A.labels[p])}|{A.labels[a]}" for p in range(n) for a in range(n)]
    placeholder = [{i: ONE} for i in range(N)]
    D = HopfAlgebra(N, mult, unit, comult, counit, placeholder, labels, A.conductor, f"D({A.name})")
    Q = QuasitriangularHopf(D, {}, A)
    chosen = None
    for k, name in enumerate(ANTIPODE_CONVENTIONS):
        D.antipode = _double_antipode(A, Q, inverse_h=(k % 2 == 0), inverse_f=(k < 2))
        D.__dict__.pop("_rational_structure", None)
        D.__dict__.pop("antipode_inverse", None)
        if not check or not verify_axioms(D):
            chosen = name
            break
    axioms_ok = chosen is not None
    if chosen is None:
        raise ConsistencyError("no antipode convention satisfies the Hopf axioms on D(A)")
    Q.antipode_convention = chosen
    R: dict = {}
    for i in range(n):
        left = Q.embed_A({i: ONE})
        right = Q.embed_dual({i: ONE})
        for x, c in left.items():
            for y, d in right.items():
                tensor_add(R, c * d, (x, y))
    Q.R = R
    D.generators = [Q.embed_A({a: ONE}) for a in range(n)] + [Q.embed_dual({p: ONE}) for p in range(n)]
    if check:
        Q.report = check_double(Q, axioms_ok)
        bad = [k for k, v in Q.report.items() if v is False]
        if bad:
            raise ConsistencyError(f"double fails: {', '.join(bad)}")
        A.__dict__["_double"] = Q
    return Q


def _star(label: str) -> str:
    return f"{label}*"


def _double_antipode(A: HopfAlgebra, Q: QuasitriangularHopf, inverse_h: bool, inverse_f: bool):
    n = A.dim
    D = Q.H
    hmap = A.antipode_inverse if inverse_h else A.antipode
    out = []
    for p in range(n):
        f = {p: ONE}
        f2 = A.func_S_inv(f) if inverse_f else A.func_S(f)
        right = Q.embed_dual(f2)
        for a in range(n):
            left = Q.embed_A(hmap[a])
            out.append(D.mul_sparse(left, right))
    return out


def check_double(Q: QuasitriangularHopf, axioms_ok: bool | None = None) -> dict:
    """Hopf axioms, R-matrix identities and the two inclusions."""
    D, A, R = Q.H, Q.base, Q.R
    n = A.dim
    rep = {"hopf-axioms": not verify_axioms(D) if axioms_ok is None else axioms_ok}
    rep.update(check_r_matrix(D, R, D.generators))
    ok_a = all(D.mul(Q.embed_A({a: ONE}), Q.embed_A({b: ONE})) == Q.embed_A(A.mul_basis(a, b))
               for a in range(n) for b in range(n))
    ok_f = all(D.mul(Q.embed_dual({p: ONE}), Q.embed_dual({q: ONE}))
               == Q.embed_dual(A.func_mul({p: ONE}, {q: ONE}))
               for p in range(n) for q in range(n))
    rep["inclusion-of-A"] = ok_a
    rep["inclusion-of-dual"] = ok_f
    return rep


def _flip(t: dict) -> dict:
    return {(b, a): c for (a, b), c in t.items()}


def _tensor3_mul(H: HopfAlgebra, X: dict, Y: dict) -> dict:
    out: dict = {}
    for (a, b, c), x in X.items():
        for (p, q, r), y in Y.items():
            l = H.mult.get((a, p))
            m = H.mult.get((b, q))
            k = H.mult.get((c, r))
            if not l or not m or not k:
                continue
            xy = x * y
            for u, s in l.items():
                xys = xy * s
                for v, t in m.items():
                    xyst = xys * t
                    for w, z in k.items():
                        tensor_add(out, xyst * z, (u, v, w))
    return out


def check_r_matrix(H: HopfAlgebra, R: dict, generators) -> dict:
    """The four quasitriangularity identities.

    R Delta(x) = Delta^cop(x) R is multiplicative in x, so it is checked on
    algebra generators; the others are single identities.
    """
    rep = {}
    rep["R-intertwines-coproduct"] = all(
        H.tensor_mul(R, H.comul(x)) == H.tensor_mul(_flip(H.comul(x)), R) for x in generators)
    one = H.unit
    R13 = {}
    R23 = {}
    R12 = {}
    for (a, b), c in R.items():
        for u, x in one.items():
            tensor_add(R13, c * x, (a, u, b))
            tensor_add(R23, c * x, (u, a, b))
            tensor_add(R12, c * x, (a, b, u))
    dl: dict = {}
    dr: dict = {}
    for (a, b), c in R.items():
        for (u, v), d in H.comult[a].items():
            tensor_add(dl, c * d, (u, v, b))
        for (u, v), d in H.comult[b].items():
            tensor_add(dr, c * d, (a, u, v))
    rep["R-coproduct-left"] = dl == _tensor3_mul(H, R13, R23)
    rep["R-coproduct-right"] = dr == _tensor3_mul(H, R13, R12)
    el: Vec = {}
    er: Vec = {}
    for (a, b), c in R.items():
        axpy(el, c * H.counit.get(a, ZERO), {b: ONE})
        axpy(er, c * H.counit.get(b, ZERO), {a: ONE})
    u = {k: v for k, v in one.items() if v}
    rep["R-counit"] = el == u and er == u
    return rep


# phi, S-matrix, twist -------------------------------------------------------------

def monodromy(Q: QuasitriangularHopf) -> dict:
    """R_21 R as a two-tensor."""
    return Q.H.tensor_mul(_flip(Q.R), Q.R)


def phi_matrix(Q: QuasitriangularHopf) -> list[list[CycScalar]]:
    """Columns are phi(b_y^*) = (id (x) b_y^*)(R_21 R)."""
    N = Q.H.dim
    M = [[ZERO] * N for _ in range(N)]
    for (x, y), c in monodromy(Q).items():
        M[x][y] = c
    return M


def apply_matrix(M, f: Vec) -> Vec:
    out: Vec = {}
    for y, c in f.items():
        for x in range(len(M)):
            v = M[x][y]
            if v:
                tensor_add(out, c * v, x)
    return out


def phi(Q: QuasitriangularHopf):
    """The map f -> (id (x) f)(R_21 R) as a matrix, with the factorizability flag."""
    M = phi_matrix(Q)
    N = Q.H.dim
    cols = [{x: M[x][y] for x in range(N) if M[x][y]} for y in range(N)]
    return M, rank(cols, N) == N


@dataclass
class SMatrix:
    entries: list[list[CycScalar]]
    degrees: list[int]
    dual_map: list[int]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def invariants(self, unit: int = 0, precision: int = 128) -> dict:
        s = self.entries
        k = self.size
        d = self.degrees
        dm = self.dual_map
        out = {
            "symmetric": all(s[i][j] == s[j][i] for i in range(k) for j in range(k)),
            "unit-row-is-degrees": all(s[unit][j] == cyc(d[j]) for j in range(k)),
            "dual-invariant": all(s[i][j] == s[dm[i]][dm[j]] for i in range(k) for j in range(k)),
        }
        rows = [{j: s[i][j] for j in range(k) if s[i][j]} for i in range(k)]
        out["invertible"] = rank(rows, k) == k
        bound = True
        for i in range(k):
            for j in range(k):
                cap = d[i] * d[j]
                for z in embeddings(s[i][j], precision):
                    if abs_upper(z) > mpmath.mpf(cap) + mpmath.mpf(2) ** (-precision // 2):
                        bound = False
        out["bounded-by-degrees"] = bound
        return out

    def to_csv(self) -> str:
        return "\n".join(",".join(x.compact() for x in row) for row in self.entries) + "\n"


class DoubleContext:
    """A, D(A), decompositions of D and D*, phi, S-matrix, u and the E_j."""

    def __init__(self, A: HopfAlgebra, check: bool = True):
        self.A = A
        self.Q = drinfeld_double(A, check=check)
        self.D = self.Q.H

    @cached_property
    def irr(self) -> IrrDecomposition:
        return irreducible_characters(self.D)

    @cached_property
    def dual_double(self) -> HopfAlgebra:
        return dual(self.D)

    @cached_property
    def dual_irr(self) -> IrrDecomposition:
        return irreducible_characters(self.dual_double)

    @cached_property
    def phi_data(self):
        return phi(self.Q)

    @property
    def phi_matrix(self):
        return self.phi_data[0]

    @property
    def factorizable(self) -> bool:
        return self.phi_data[1]

    def phi(self, f: Vec) -> Vec:
        return apply_matrix(self.phi_matrix, f)

    @cached_property
    def phi_inverse(self):
        inv = matrix_inverse(self.phi_matrix)
        if inv is None:
            raise ConsistencyError("phi is not invertible")
        return inv

    @cached_property
    def s_matrix(self) -> SMatrix:
        irr = self.irr
        s = irr.size
        images = [self.phi(irr.characters[irr.dual_map[j]]) for j in range(s)]
        entries = [[dot(irr.characters[i], images[j]) for j in range(s)] for i in range(s)]
        return SMatrix(entries, list(irr.degrees), list(irr.dual_map))

    @cached_property
    def E(self) -> list[Vec]:
        """E_j = phi^{-1}(e_j), checked to be orthogonal idempotents of D* summing to eps."""
        inv = self.phi_inverse
        out = [apply_matrix(inv, e) for e in self.irr.idempotents]
        D = self.D
        for j, Ej in enumerate(out):
            for k, Ek in enumerate(out):
                want = Ej if j == k else {}
                if D.func_mul(Ej, Ek) != want:
                    raise ConsistencyError("the E_j are not orthogonal idempotents")
        total: Vec = {}
        for Ej in out:
            axpy(total, ONE, Ej)
        if total != {k: v for k, v in D.counit.items() if v}:
            raise ConsistencyError("the E_j do not sum to the counit")
        return out

    def evaluate(self, j: int, d: Vec) -> CycScalar:
        return dot(self.E[j], d)

    def check_character_expansion(self) -> bool:
        """chi_i = sum_j (s_ij / s_0j) E_j for every i."""
        s = self.s_matrix
        u = self.irr.unit_index
        for i, chi in enumerate(self.irr.characters):
            rhs: Vec = {}
            for j, Ej in enumerate(self.E):
                axpy(rhs, s[i, j] / s[u, j], Ej)
            if rhs != chi:
                return False
        return True

    @cached_property
    def drinfeld_element(self) -> Vec:
        """u = sum S(R^2) R^1."""
        D = self.D
        out: Vec = {}
        for (a, b), c in self.Q.R.items():
            axpy(out, c, D.mul(D.antipode[b], {a: ONE}))
        return out

    @cached_property
    def twist(self) -> tuple[list[CycScalar], str]:
        """theta_j with the element that validated (u or its inverse)."""
        D, irr = self.D, self.irr
        u = self.drinfeld_element
        for name, elt in (("u", u), ("u^-1", _inverse_element(D, u))):
            thetas = [dot(ch, elt) / cyc(d) for ch, d in zip(irr.characters, irr.degrees)]
            scalar = all(D.mul(elt, e) == vscale(e, t) for e, t in zip(irr.idempotents, thetas))
            if not scalar:
                raise ConsistencyError(f"{name} does not act by scalars on the simples")
            if thetas[irr.unit_index] == ONE and all(
                    thetas[irr.dual_map[j]] == thetas[j] for j in range(irr.size)):
                return thetas, name
        raise ConsistencyError("neither u nor u^-1 gives a twist with theta_unit = 1, theta_j* = theta_j")

    def monodromy_trivial(self, i: int, j: int) -> bool:
        """Whether c_{Y,X} c_{X,Y} is the identity on X_i (x) X_j.

        R_21 R acts on the isotypic block (D (x) D)(e_i (x) e_j) by the identity
        exactly when (R_21 R)(e_i (x) e_j) = e_i (x) e_j, since e_i (x) e_j is central.
        """
        D, irr = self.D, self.irr
        ei, ej = irr.idempotents[i], irr.idempotents[j]
        left = {a: D.mul({a: ONE}, ei) for a in range(D.dim)}
        right = {b: D.mul({b: ONE}, ej) for b in range(D.dim)}
        rows: dict[int, Vec] = {}
        for (a, b), c in monodromy(self.Q).items():
            axpy(rows.setdefault(a, {}), c, right[b])
        out: dict = {}
        for a, w in rows.items():
            for x, cx in left[a].items():
                for y, cy in w.items():
                    tensor_add(out, cx * cy, (x, y))
        want = {(x, y): cx * cy for x, cx in ei.items() for y, cy in ej.items()}
        return {k: v for k, v in out.items() if v} == {k: v for k, v in want.items() if v}

    def balancing(self) -> dict:
        """Twist balancing diagnostic, reported per sign convention.

        Each entry records whether theta_i^e theta_j^e s_ij = sum_k N_{i* j}^k theta_k^e d_k
        holds for every pair, with e = 1 or -1.
        """
        irr, s = self.irr, self.s_matrix
        thetas, _ = self.twist
        dm, n = irr.dual_map, irr.size
        out = {}
        for e in (1, -1):
            th = thetas if e == 1 else [t.inverse() for t in thetas]
            ok = True
            for i in range(n):
                for j in range(n):
                    rhs = ZERO
                    for k, m in irr.fusion[dm[i]][j].items():
                        rhs = rhs + th[k] * cyc(m * irr.degrees[k])
                    if th[i] * th[j] * s[i, j] != rhs:
                        ok = False
            out["theta" if e == 1 else "theta^-1"] = ok
        return out

    # subcategories -----------------------------------------------------------------
    def centralizer(self, K) -> FusionSubcategory:
        return centralizer(K, self.s_matrix, self.irr)

    def d_of(self, K: Subspace) -> FusionSubcategory:
        return rep_trivial_on(K, self.irr)

    def b_of(self, K: Subspace, L: Subspace):
        return b_of(self, K, L)

    @cached_property
    def opposite(self) -> DoubleContext:
        """The context of A^{*op,cop}, whose double is anti-isomorphic to D(A)."""
        return DoubleContext(variant(dual(self.A), "op_cop"))


def _inverse_element(D: HopfAlgebra, x: Vec) -> Vec:
    M = D.left_matrix(x)
    inv = matrix_inverse(M)
    if inv is None:
        raise ConsistencyError("element is not invertible")
    N = D.dim
    # x^{-1} = x^{-1} * 1 is the image of the unit under the inverse of left multiplication
    return {r: s for r in range(N) if (s := sum((inv[r][k] * c for k, c in D.unit.items()), ZERO))}


def centralizer(K, S: SMatrix, irr: IrrDecomposition) -> FusionSubcategory:
    """{i : s_ij = deg_i deg_j for every j in K}, checked to be a fusion subcategory."""
    d = S.degrees
    out = [i for i in range(S.size) if all(S[i, j] == cyc(d[i] * d[j]) for j in K)]
    C = FusionSubcategory.of(out)
    if fusion_closure(C.simple_indices, irr) != C:
        raise ConsistencyError("centralizer is not closed under fusion")
    return C


def b_of(ctx: DoubleContext, K: Subspace, L: Subspace):
    """B(K, L) = span{f |x| l : f in (A//K)^*, l in L} with the commuting-pair report."""
    A, Q = ctx.A, ctx.Q
    F = dual_quotient_subalgebra(A, K)
    B = Subspace(Q.H.dim, [Q.bowtie(f, l) for f in F.basis() for l in L.basis()])
    G = dual_quotient_subalgebra(A, L)
    kl = all(A.mul(k, l) == A.mul(l, k) for k in K.basis() for l in L.basis())
    fg = all(A.func_mul(f, g) == A.func_mul(g, f) for f in F.basis() for g in G.basis())
    return B, {"[K,L]=0": kl, "[(A//K)*,(A//L)*]=0": fg}


# modules ---------------------------------------------------------------------------

def module_on_K(ctx: DoubleContext, K: Subspace, form: str = "S-inverse") -> Representation:
    """D(A) acting on a normal K by (f |x| a) x = ad(a)(x) <- g.

    form "S-inverse" uses g = f o S^{-1}, form "S" uses g = f o S; here y <- g
    means g(y_1) y_2.
    """
    A, Q = ctx.A, ctx.Q
    n = A.dim

    def action(i, x):
        p, a = divmod(i, n)
        f = {p: ONE}
        g = A.func_S_inv(f) if form == "S-inverse" else A.func_S(f)
        return A.translate_right(A.ad({a: ONE}, x), g)

    M = module_from_action(ctx.D, K, action, f"K-module[{form}]")
    return M


def dual_module_model(ctx: DoubleContext) -> Representation:
    """D(A) acting on A* by (f |x| a) g = f (z -> g(S(a_2) z a_1))."""
    A = ctx.A
    n = A.dim

    def action(i, g):
        p, a = divmod(i, n)
        h: Vec = {}
        for (u, v), c in A.comult[a].items():
            # z -> g(S(b_v) z b_u)
            inner = A.hit({u: ONE}, A.hit_right(g, A.antipode[v]))
            axpy(h, c, inner)
        return A.func_mul({p: ONE}, h)

    return module_from_action(ctx.D, Subspace.whole(n), action, "dual-model")


def transpose_index(n: int, i: int) -> int:
    """b_p^* |x| b_a  ->  b_a |x| b_p^*, from D(A) to D(A^{*op,cop})."""
    p, a = divmod(i, n)
    return a * n + p


def check_transpose(ctx: DoubleContext) -> dict:
    """The transpose is an algebra anti-isomorphism and a coalgebra isomorphism."""
    D, DB, n = ctx.D, ctx.opposite.D, ctx.A.dim
    N = D.dim
    t = [transpose_index(n, i) for i in range(N)]
    anti = all(
        {t[k]: c for k, c in D.mul_basis(i, j).items()} == DB.mul_basis(t[j], t[i])
        for i in range(N) for j in range(N))
    coalg = all(
        {(t[a], t[b]): c for (a, b), c in D.comult[i].items()} == DB.comult[t[i]]
        for i in range(N))
    return {"anti-multiplicative": anti, "comultiplicative": coalg}


def module_on_dual_quotient(ctx: DoubleContext, L: Subspace, form: str = "S-inverse") -> Representation:
    """(A//L)^* as a D(A)-module, pulled back from the double of A^{*op,cop}.

    (A//L)^* is a normal Hopf subalgebra of A^{*op,cop}, so it carries the
    conjugation-type module of that double.  Composing the transpose
    anti-isomorphism with the antipode of D(A) turns it into a D(A)-module.
    """
    opp = ctx.opposite
    F = dual_quotient_subalgebra(ctx.A, L)
    MB = module_on_K(opp, Subspace(F.ambient_dim, F.basis()), form)
    n = ctx.A.dim
    mats = []
    for i in range(ctx.D.dim):
        s_i = ctx.D.antipode[i]
        mats.append(MB.act({transpose_index(n, k): c for k, c in s_i.items()}))
    M = Representation(ctx.D.dim, mats, f"dual-quotient-module[{form}]")
    if not M.verify(ctx.D):
        raise ConsistencyError("pulled-back action is not a module")
    return M


# Fourier transform -----------------------------------------------------------------

def _image(M: Representation, x: Vec, basis) -> list[Vec]:
    mat = M.act(x)
    m = M.dim
    out = []
    for c in range(m):
        col = {r: mat[r][c] for r in range(m) if mat[r][c]}
        out.append(lincomb((x, basis[r]) for r, x in col.items()))
    return out


def character_algebra_idempotents(A: HopfAlgebra) -> list[Vec]:
    """Primitive idempotents of the algebra of cocommutative functionals on A."""
    Ad = dual(A)
    C = character_ring(A)
    sub, vecs = Ad.subalgebra(Subspace(A.dim, C.basis()))
    irr = irreducible_characters(sub)
    return [lincomb((c, vecs[k]) for k, c in e.items()) for e in irr.idempotents]


def fourier_check(ctx: DoubleContext) -> dict:
    """a -> (x -> t(x a)) against the module structures on A and A*.

    Reports whether the map intertwines, and for every isotypic component V
    of A whether the functional equal to eps on V and zero on the other
    components is S(E) for the primitive idempotent E with F(V) = A* E.
    """
    A, D, irr = ctx.A, ctx.D, ctx.irr
    n = A.dim
    t = integral(dual(A))
    F = [A.hit({a: ONE}, t) for a in range(n)]
    fourier = lambda x: lincomb((c, F[a]) for a, c in x.items())  # noqa: E731
    out = {"F(1)=t": fourier(A.unit) == {k: v for k, v in t.items() if v},
           "injective": rank([dict(v) for v in F], n) == n}
    MA = module_on_K(ctx, Subspace.whole(n), "S")
    MD = dual_module_model(ctx)
    units = [{k: ONE} for k in range(n)]
    inter = True
    for i in range(D.dim):
        left = [fourier(v) for v in _image(MA, {i: ONE}, units)]
        images = _image(MD, {i: ONE}, units)
        right = [lincomb((c, images[k]) for k, c in F[a].items()) for a in range(n)]
        if left != right:
            inter = False
            break
    out["intertwines"] = inter
    comps = []
    for j, e in enumerate(irr.idempotents):
        V = Subspace(n, _image(MA, e, units))
        if V.dim:
            comps.append((j, V))
    out["components"] = [j for j, _ in comps]
    if Subspace(n, [v for _, V in comps for v in V.basis()]).dim != n:
        raise ConsistencyError("isotypic components do not span A")
    idems = character_algebra_idempotents(A)
    matched = {}
    for j, V in comps:
        FV = Subspace(n, [fourier(v) for v in V.basis()])
        hits = [k for k, E in enumerate(idems)
                if Subspace(n, [A.func_mul({r: ONE}, E) for r in range(n)]) == FV]
        matched[j] = hits[0] if len(hits) == 1 else None
    out["matched"] = matched
    ok = all(k is not None for k in matched.values()) and len(set(matched.values())) == len(matched)
    indicator_ok = ok
    if ok:
        for j, V in comps:
            # p_V: eps on V, zero on the other components
            rows, rhs = [], []
            for j2, V2 in comps:
                for v in V2.basis():
                    rows.append(v)
                    rhs.append(A.eps(v) if j2 == j else ZERO)
            target = A.func_S(idems[matched[j]])
            if any(dot(target, v) != r for v, r in zip(rows, rhs)):
                indicator_ok = False
    out["indicator=S(E)"] = indicator_ok
    out["ok"] = all(out[k] for k in ("F(1)=t", "injective", "intertwines", "indicator=S(E)"))
    return out
