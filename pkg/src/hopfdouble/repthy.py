"""Representation theory of split semisimple algebras and Hopf algebras.

Simple modules are indexed by central primitive idempotents.  The blocks are
found by splitting the center: every central element acts on a block of the
center through its minimal polynomial, whose roots are located numerically,
recognized in Q(zeta_N) and then checked exactly.  Nothing numerical survives
into the results.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import isqrt, lcm

import mpmath

from .hopf import (
    Algebra,
    ConsistencyError,
    HopfAlgebra,
    NotSemisimple,
    PreconditionError,
    Representation,
    generated_subalgebra,
    subspace_integral,
    tensor_add,
)
from .linalg import (
    Echelon,
    LinearFunctionalSpace,
    Subspace,
    Vec,
    axpy,
    dot,
    lincomb,
    nullspace,
    rank,
    vscale,
    vsub,
)
from .scalars import (
    ONE,
    ZERO,
    ConductorOverflow,
    CycScalar,
    cyc,
    max_conductor,
    normalize_conductor,
    reconstruct,
)

EXHAUSTIVE_BOUND = 16
ENUMERATION_BOUND = 22


# center and semisimplicity -----------------------------------------------------

def center(B: Algebra, generators=None) -> Subspace:
    """Elements commuting with every generator (default: every basis element)."""
    n = B.dim
    gens = generators if generators is not None else [{i: ONE} for i in range(n)]
    eqs: list[Vec] = []
    for g in gens:
        rows: dict[int, Vec] = {}
        for k in range(n):
            bk = {k: ONE}
            for r, c in vsub(B.mul(bk, g), B.mul(g, bk)).items():
                rows.setdefault(r, {})[k] = c
        eqs.extend(rows.values())
    return Subspace(n, nullspace(eqs, n))


def trace_form(B: Algebra) -> list[Vec]:
    """Rows T[i] with T[i][k] = Tr_reg(b_i b_k)."""
    t = B.regular_trace
    n = B.dim
    T: list[Vec] = [{} for _ in range(n)]
    for (i, k), v in B.mult.items():
        s = dot(t, v)
        if s:
            T[i][k] = s
    return T


def is_semisimple(B: Algebra) -> bool:
    """Nondegeneracy of the trace form (characteristic zero)."""
    return rank(trace_form(B), B.dim) == B.dim


# splitting the center -------------------------------------------------------------

class _CenterAlgebra:
    """The center in its own coordinates."""

    def __init__(self, B: Algebra, Z: Subspace):
        self.B = B
        self.Z = Z
        self.basis = Z.basis()
        m = len(self.basis)
        self.m = m
        self.table: dict[tuple[int, int], Vec] = {}
        for a in range(m):
            for b in range(a, m):
                c = Z.coords(B.mul(self.basis[a], self.basis[b]))
                if c is None:
                    raise ConsistencyError("center is not closed under multiplication")
                v = {k: x for k, x in enumerate(c) if x}
                self.table[(a, b)] = v
                self.table[(b, a)] = v
        uc = Z.coords(B.unit)
        self.unit = {k: x for k, x in enumerate(uc) if x}

    def mul(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for a, p in x.items():
            for b, q in y.items():
                r = self.table.get((a, b))
                if r:
                    axpy(out, p * q, r)
        return out

    def to_ambient(self, x: Vec) -> Vec:
        return lincomb((c, self.basis[a]) for a, c in x.items())


def _minimal_polynomial(Z: _CenterAlgebra, x: Vec, e: Vec) -> list[CycScalar]:
    """Monic minimal polynomial (low degree first) of x inside the block eZ."""
    powers = [e]
    E = Echelon(Z.m)
    E.add(e)
    while True:
        nxt = Z.mul(powers[-1], x)
        if not E.add(nxt):
            powers.append(nxt)
            break
        powers.append(nxt)
    k = len(powers) - 1
    eqs: dict[int, Vec] = {}
    for i, p in enumerate(powers):
        for r, c in p.items():
            eqs.setdefault(r, {})[i] = c
    sol = nullspace(list(eqs.values()), k + 1)
    if len(sol) != 1:
        raise ConsistencyError("Krylov dependency is not unique")
    v = sol[0]
    lead = v.get(k)
    if not lead:
        raise ConsistencyError("minimal polynomial lost its leading term")
    inv = lead.inverse()
    return [v.get(i, ZERO) * inv for i in range(k + 1)]


def _poly_eval(p: list[CycScalar], r: CycScalar) -> CycScalar:
    acc = ZERO
    for c in reversed(p):
        acc = acc * r + c
    return acc


def _approximate_roots(p: list[CycScalar], dps: int):
    with mpmath.workdps(dps):
        coeffs = [c.to_complex(dps) for c in reversed(p)]
        return mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps, cleanup=True)


def _conductor_ladder(n0: int):
    """Conductors to try after n0, smallest first: lcm(n0, k) for k = 2, 3, ..."""
    bound = max_conductor()
    seen = {n0}
    out = []
    for k in range(2, bound + 1):
        c = lcm(n0, k)
        if c <= bound and c not in seen:
            seen.add(c)
            out.append(c)
    return sorted(out)


def _exact_roots(p: list[CycScalar], conductor: int) -> tuple[list[CycScalar], int]:
    """All roots of a squarefree polynomial, exactly, escalating the conductor."""
    deg = len(p) - 1
    for dps in (60, 200):
        approx = _approximate_roots(p, dps)
        tried = [conductor] + _conductor_ladder(conductor)
        for n in tried:
            roots = []
            for z in approx:
                r = reconstruct(z, n, 10**9, precision=int(dps * 3.32))
                if r is None or _poly_eval(p, r):
                    break
                roots.append(r)
            if len(roots) == deg and len(set(roots)) == deg:
                return roots, n
    raise ConductorOverflow(f"minimal polynomial of degree {deg} does not split below conductor "
                            f"{max_conductor()}")


def _split_center(Z: _CenterAlgebra, conductor: int) -> tuple[list[Vec], int]:
    blocks = [Z.unit]
    for a in range(Z.m):
        if len(blocks) == Z.m:
            break
        z = {a: ONE}
        refined = []
        for e in blocks:
            x = Z.mul(z, e)
            p = _minimal_polynomial(Z, x, e)
            if len(p) == 2:
                refined.append(e)
                continue
            roots, conductor = _exact_roots(p, conductor)
            for r in roots:
                proj = e
                for s in roots:
                    if s is r:
                        continue
                    factor = vsub(x, vscale(e, s))
                    proj = vscale(Z.mul(proj, factor), (r - s).inverse())
                refined.append(proj)
        blocks = refined
    if len(blocks) != Z.m:
        raise ConsistencyError("center did not split into one-dimensional blocks")
    return blocks, conductor


# decomposition ---------------------------------------------------------------------

@dataclass(frozen=True)
class FusionSubcategory:
    """A set of simple indices closed under tensor products and duals."""

    simple_indices: tuple[int, ...]

    @classmethod
    def of(cls, indices) -> FusionSubcategory:
        return cls(tuple(sorted(set(indices))))

    def __contains__(self, j) -> bool:
        return j in self.simple_indices

    def __iter__(self):
        return iter(self.simple_indices)

    def __len__(self):
        return len(self.simple_indices)

    def __le__(self, other: FusionSubcategory) -> bool:
        return set(self.simple_indices) <= set(other.simple_indices)

    def meet(self, other: FusionSubcategory) -> FusionSubcategory:
        return FusionSubcategory.of(set(self.simple_indices) & set(other.simple_indices))


class IrrDecomposition:
    """Central primitive idempotents, characters and degrees of a semisimple algebra."""

    def __init__(self, algebra: Algebra, idempotents, characters, degrees, conductor: int):
        self.algebra = algebra
        self.idempotents: list[Vec] = idempotents
        self.characters: list[Vec] = characters
        self.degrees: list[int] = degrees
        self.conductor = conductor
        self.unit_index: int | None = None
        self.dual_map: list[int] | None = None
        if isinstance(algebra, HopfAlgebra):
            counit = {k: v for k, v in algebra.counit.items() if v}
            hits = [j for j, ch in enumerate(characters) if ch == counit]
            if len(hits) != 1:
                raise ConsistencyError("the counit is not exactly one irreducible character")
            self.unit_index = hits[0]
            dm = []
            for ch in characters:
                f = algebra.func_S(ch)
                match = [k for k, c in enumerate(characters) if c == f]
                if len(match) != 1:
                    raise ConsistencyError("chi o S is not an irreducible character")
                dm.append(match[0])
            self.dual_map = dm

    def __len__(self):
        return len(self.characters)

    @property
    def size(self) -> int:
        return len(self.characters)

    def fpdim(self, indices) -> int:
        return sum(self.degrees[j] ** 2 for j in indices)

    def constituents(self, chi: Vec) -> dict[int, int]:
        """Multiplicities of the simples in a module with character chi."""
        out = {}
        for j, e in enumerate(self.idempotents):
            v = dot(chi, e)
            if v:
                q = v / cyc(self.degrees[j])
                if q.conductor != 1 or q.den != 1 or q.num[0] < 0:
                    raise ConsistencyError("covector is not the character of a module")
                out[j] = q.num[0]
        return out

    @cached_property
    def fusion(self) -> list[list[dict[int, int]]]:
        """N[i][j] = {k: N_ij^k} from (chi_i chi_j)(e_k) / deg_k."""
        H = self.algebra
        if not isinstance(H, HopfAlgebra):
            raise PreconditionError("fusion rules need a Hopf algebra")
        s = self.size
        N = [[{} for _ in range(s)] for _ in range(s)]
        for i in range(s):
            for j in range(s):
                prod = H.func_mul(self.characters[i], self.characters[j])
                c = self.constituents(prod)
                if sum(self.degrees[k] * m for k, m in c.items()) != self.degrees[i] * self.degrees[j]:
                    raise ConsistencyError("fusion constituents do not add up to the product degree")
                N[i][j] = c
        return N

    def fusion_support(self) -> list[list[int]]:
        """Bitmasks of fusion constituents for every pair."""
        return [[sum(1 << k for k in cell) for cell in row] for row in self.fusion]

    def as_table(self) -> dict:
        H = self.algebra
        return {
            "labels": list(H.labels),
            "degrees": list(self.degrees),
            "dual_map": list(self.dual_map) if self.dual_map is not None else None,
            "characters": [[ch.get(i, ZERO).compact() for i in range(H.dim)] for ch in self.characters],
        }


def irreducible_characters(B: Algebra, generators=None) -> IrrDecomposition:
    """Complete decomposition, cached on the algebra."""
    cached = B.__dict__.get("_irr")
    if cached is not None:
        return cached
    if not is_semisimple(B):
        raise NotSemisimple("trace form is degenerate")
    if generators is None:
        generators = getattr(B, "generators", None)
    Zs = center(B, generators)
    Z = _CenterAlgebra(B, Zs)
    blocks, conductor = _split_center(Z, normalize_conductor(B.conductor))
    T = trace_form(B)
    t = B.regular_trace
    idems, chars, degs = [], [], []
    for e_z in blocks:
        e = Z.to_ambient(e_z)
        tr = dot(t, e)
        if tr.conductor != 1 or tr.den != 1 or tr.num[0] <= 0 or isqrt(tr.num[0]) ** 2 != tr.num[0]:
            raise ConsistencyError(f"regular trace {tr} of a block is not a square integer")
        d = isqrt(tr.num[0])
        inv = cyc(d).inverse()
        chi: Vec = {}
        for i in range(B.dim):
            v = dot(T[i], e)
            if v:
                chi[i] = v * inv
        idems.append(e)
        chars.append(chi)
        degs.append(d)
    order = _ordering(B, chars, degs)
    irr = IrrDecomposition(B, [idems[j] for j in order], [chars[j] for j in order],
                           [degs[j] for j in order], conductor)
    _check_decomposition(B, irr)
    B.__dict__["_irr"] = irr
    return irr


def _ordering(B: Algebra, chars, degs) -> list[int]:
    counit = {k: v for k, v in getattr(B, "counit", {}).items() if v}

    def key(j):
        unit_first = 0 if (counit and chars[j] == counit) else 1
        return (unit_first, degs[j], tuple(chars[j].get(i, ZERO).sort_key() for i in range(B.dim)))

    return sorted(range(len(chars)), key=key)


def _check_decomposition(B: Algebra, irr: IrrDecomposition) -> None:
    n = B.dim
    if sum(d * d for d in irr.degrees) != n:
        raise ConsistencyError("sum of squared degrees differs from the dimension")
    total: Vec = {}
    for e in irr.idempotents:
        axpy(total, ONE, e)
    if total != {k: v for k, v in B.unit.items() if v}:
        raise ConsistencyError("block idempotents do not sum to one")
    for j, e in enumerate(irr.idempotents):
        for k, ch in enumerate(irr.characters):
            want = cyc(irr.degrees[j]) if j == k else ZERO
            if dot(ch, e) != want:
                raise ConsistencyError("chi_k(e_j) differs from delta_jk deg_j")


def central_primitive_idempotents(B: Algebra) -> list[Vec]:
    return irreducible_characters(B).idempotents


# character ring, multiplicities, fusion ------------------------------------------

def character_ring(A: Algebra) -> LinearFunctionalSpace:
    """Covectors f with f(ab) = f(ba), by a linear solve."""
    n = A.dim
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            row = vsub(A.mul_basis(i, j), A.mul_basis(j, i))
            if row:
                eqs.append(row)
    return LinearFunctionalSpace(n, nullspace(eqs, n))


def multiplicity(A: HopfAlgebra, chi: Vec, mu: Vec, lam: Vec | None = None) -> int:
    """dim Hom_A(M, N) = sum chi(S(L_1)) mu(L_2) for the idempotent integral L."""
    if lam is None:
        lam = integral_of(A)
    total = ZERO
    for (j, k), c in A.comul(lam).items():
        a = dot(chi, A.antipode[j])
        if not a:
            continue
        b = mu.get(k)
        if b:
            total = total + c * a * b
    if total.conductor != 1 or total.den != 1 or total.num[0] < 0:
        raise ConsistencyError(f"multiplicity {total} is not a nonnegative integer")
    return total.num[0]


def integral_of(A: HopfAlgebra) -> Vec:
    cached = A.__dict__.get("_integral")
    if cached is None:
        from .hopf import integral

        cached = integral(A)
        A.__dict__["_integral"] = cached
    return cached


def fusion_closure(seed, irr: IrrDecomposition) -> FusionSubcategory:
    """Smallest fusion subcategory containing the seed simples."""
    N = irr.fusion
    have = set(seed) | {irr.unit_index}
    frontier = list(have)
    while frontier:
        new = set()
        for i in frontier:
            new.add(irr.dual_map[i])
            for j in list(have):
                new.update(N[i][j])
                new.update(N[j][i])
        new -= have
        have |= new
        frontier = list(new)
    return FusionSubcategory.of(have)


def join(C: FusionSubcategory, D: FusionSubcategory, irr: IrrDecomposition) -> FusionSubcategory:
    return fusion_closure(set(C) | set(D), irr)


def is_fusion_subcategory(indices, irr: IrrDecomposition) -> bool:
    X = set(indices)
    if irr.unit_index not in X:
        return False
    N = irr.fusion
    return all(irr.dual_map[i] in X for i in X) and all(
        set(N[i][j]) <= X for i in X for j in X)


def character_of(M) -> Vec:
    return M.character() if isinstance(M, Representation) else dict(M)


def generated_subcategory(M, irr: IrrDecomposition) -> FusionSubcategory:
    """Fusion closure of the irreducible constituents of a module (or character)."""
    return fusion_closure(irr.constituents(character_of(M)), irr)


def rep_trivial_on(L: Subspace, irr: IrrDecomposition) -> FusionSubcategory:
    """Simples on which L acts through the counit, by two independent tests."""
    H = irr.algebra
    basis = L.basis()
    by_basis = set()
    for j, ch in enumerate(irr.characters):
        d = cyc(irr.degrees[j])
        if all(dot(ch, x) == H.eps(x) * d for x in basis):
            by_basis.add(j)
    lam = subspace_integral(H, L, H.counit)
    by_integral = {j for j, ch in enumerate(irr.characters) if dot(ch, lam) == cyc(irr.degrees[j])}
    if by_basis != by_integral:
        raise ConsistencyError("basis test and integral test disagree on triviality")
    return FusionSubcategory.of(by_basis)


# kernels ---------------------------------------------------------------------------

def subcoalgebra_of(H: HopfAlgebra, dual_idempotent: Vec) -> Subspace:
    """The simple subcoalgebra e -> H for a central primitive idempotent e of H*."""
    return Subspace(H.dim, [H.translate_left(dual_idempotent, {i: ONE}) for i in range(H.dim)])


def hopf_kernel(H: HopfAlgebra, chi_M: Vec, dual_irr: IrrDecomposition) -> Subspace:
    """Largest Hopf subalgebra acting trivially on a module with character chi_M."""
    chi_M = character_of(chi_M)
    deg_M = dot(chi_M, H.unit)
    pieces = []
    for d, e in zip(dual_irr.characters, dual_irr.idempotents):
        if dot(chi_M, d) == H.eps(d) * deg_M:
            pieces.extend(subcoalgebra_of(H, e).basis())
    K = generated_subalgebra(H, pieces, closed_under=H.S)
    lam = subspace_integral(H, K, H.counit)
    if dot(chi_M, lam) != deg_M:
        raise ConsistencyError("closure of the qualifying subcoalgebras does not act trivially")
    return K


def block_idempotent(irr: IrrDecomposition, indices) -> Vec:
    out: Vec = {}
    for j in indices:
        axpy(out, ONE, irr.idempotents[j])
    return out


def left_kernel_of_blocks(H: HopfAlgebra, e: Vec) -> Subspace:
    """{a : a_1 (x) a_2 e = a (x) e} for a central idempotent e."""
    n = H.dim
    right = [H.mul({k: ONE}, e) for k in range(n)]
    eqs: dict[tuple[int, int], Vec] = {}
    for i in range(n):
        col: dict = {}
        for (j, k), c in H.comult[i].items():
            for r, x in right[k].items():
                tensor_add(col, c * x, (j, r))
        for r, x in e.items():
            tensor_add(col, -x, (i, r))
        for key, c in col.items():
            eqs.setdefault(key, {})[i] = c
    return Subspace(n, nullspace(list(eqs.values()), n))


def left_kernel(H: HopfAlgebra, M, irr: IrrDecomposition | None = None) -> Subspace:
    """{a : a_1 (x) a_2 m = a (x) m for all m}.

    With a decomposition the module is replaced by the sum of its distinct
    constituents, realized by the block idempotent; otherwise the defining
    equations are solved on the given action matrices.
    """
    if irr is not None:
        J = irr.constituents(character_of(M))
        return left_kernel_of_blocks(H, block_idempotent(irr, J))
    if not isinstance(M, Representation):
        raise PreconditionError("a character alone needs a decomposition")
    n, m = H.dim, M.dim
    eqs: dict[tuple, Vec] = {}
    for i in range(n):
        col: dict = {}
        for (j, k), c in H.comult[i].items():
            R = M.matrices[k]
            for r in range(m):
                for s in range(m):
                    x = R[r][s]
                    if x:
                        tensor_add(col, c * x, (j, r, s))
        for r in range(m):
            tensor_add(col, -ONE, (i, r, r))
        for key, c in col.items():
            eqs.setdefault(key, {})[i] = c
    return Subspace(n, nullspace(list(eqs.values()), n))


def grouplikes(H: HopfAlgebra, dual_irr: IrrDecomposition) -> list[Vec]:
    """Degree-one characters of H*, read as elements of H; Delta g = g (x) g is checked."""
    out = []
    for d, deg in zip(dual_irr.characters, dual_irr.degrees):
        if deg != 1:
            continue
        g = dict(d)
        gg: dict = {}
        for a, x in g.items():
            for b, y in g.items():
                tensor_add(gg, x * y, (a, b))
        if H.comul(g) != gg or H.eps(g) != ONE:
            raise ConsistencyError("a linear character of the dual is not grouplike")
        out.append(g)
    return out


# lattice ----------------------------------------------------------------------------

def enumerate_fusion_subcategories(irr: IrrDecomposition, bound: int = ENUMERATION_BOUND):
    """All fusion subcategories, and whether the enumeration is provably complete.

    Up to EXHAUSTIVE_BOUND simples every subset containing the unit is tested.
    Beyond that the joins of singleton closures are iterated to a fixed point.
    Both are complete: a fusion subcategory is the join of the closures of its
    own simples, and that finite join is reached by iterated pairwise joins.
    """
    s = irr.size
    if s > bound:
        raise PreconditionError(f"{s} simples exceeds the enumeration bound {bound}")
    u = irr.unit_index
    if s <= EXHAUSTIVE_BOUND:
        sup = irr.fusion_support()
        dual = irr.dual_map
        found = []
        others = [j for j in range(s) if j != u]
        for bits in range(1 << len(others)):
            mask = 1 << u
            members = [u]
            for t, j in enumerate(others):
                if bits >> t & 1:
                    mask |= 1 << j
                    members.append(j)
            ok = all(mask >> dual[i] & 1 for i in members)
            if ok:
                for a, i in enumerate(members):
                    row = sup[i]
                    for j in members[a:]:
                        if row[j] & ~mask:
                            ok = False
                            break
                    if not ok:
                        break
            if ok and all(sup[j][i] & ~mask == 0 for i in members for j in members):
                found.append(FusionSubcategory.of(members))
        return sorted(found, key=lambda C: (irr.fpdim(C), C.simple_indices)), True
    cats = {fusion_closure({j}, irr) for j in range(s)}
    cats.add(fusion_closure(set(), irr))
    while True:
        new = {join(a, b, irr) for a in cats for b in cats} - cats
        if not new:
            break
        cats |= new
    return sorted(cats, key=lambda C: (irr.fpdim(C), C.simple_indices)), True
