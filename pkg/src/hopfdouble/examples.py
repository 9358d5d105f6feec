"""Generators for the concrete Hopf algebras used throughout the package."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .hopf import HopfAlgebra, PreconditionError, dual, tensor_add
from .linalg import Subspace, nullspace
from .scalars import ONE, ZERO, cyc


class InvalidGroup(ValueError):
    pass


@dataclass
class GroupPresentation:
    """A finite group given by its Cayley table (table[a][b] = index of ab)."""

    name: str
    table: list[list[int]]
    element_names: list[str]
    subgroups: dict[str, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.table)
        if any(len(r) != n for r in self.table) or len(self.element_names) != n:
            raise InvalidGroup("Cayley table is not square")
        ids = [e for e in range(n) if all(self.table[e][a] == a == self.table[a][e] for a in range(n))]
        if len(ids) != 1:
            raise InvalidGroup("no two-sided identity")
        self.identity = ids[0]
        self.inverse = []
        for a in range(n):
            inv = [b for b in range(n) if self.table[a][b] == self.identity]
            if len(inv) != 1 or self.table[inv[0]][a] != self.identity:
                raise InvalidGroup(f"element {self.element_names[a]} has no inverse")
            self.inverse.append(inv[0])
        t = self.table
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise InvalidGroup("Cayley table is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def exponent(self) -> int:
        from math import lcm

        e = 1
        for a in range(self.order):
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            e = lcm(e, k)
        return e

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(self.order))

    def closure(self, gens) -> list[int]:
        out = {self.identity}
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            if x in out:
                continue
            out.add(x)
            frontier.extend(self.table[x][y] for y in list(out))
            frontier.extend(self.table[y][x] for y in list(out))
        return sorted(out)

    def all_subgroups(self) -> list[list[int]]:
        seen = set()
        for a in range(self.order):
            for b in range(a, self.order):
                seen.add(tuple(self.closure([a, b])))
        return sorted(seen, key=lambda s: (len(s), s))

    def is_normal(self, H) -> bool:
        Hs = set(H)
        return all(self.table[self.table[g][h]][self.inverse[g]] in Hs for g in range(self.order) for h in H)

    def conjugacy_classes(self) -> list[list[int]]:
        seen, out = set(), []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({self.table[self.table[g][a]][self.inverse[g]] for g in range(self.order)})
            seen.update(cls)
            out.append(cls)
        return out


def from_permutations(name: str, perms, names=None, subgroups=None) -> GroupPresentation:
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(len(q)))] for q in perms] for p in perms]
    # table[a][b] = a o b (apply b first)
    return GroupPresentation(name, table, names or [str(p) for p in perms], subgroups or {})


def cyclic_group(n: int) -> GroupPresentation:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    names = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    names = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    subs = {}
    for d in range(1, n + 1):
        if n % d == 0:
            subs["1" if d == 1 else f"Z{d}"] = sorted({(k * (n // d)) % n for k in range(d)})
    return GroupPresentation(f"Z{n}", table, names, subs)


def symmetric_group_3() -> GroupPresentation:
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    names = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"]
    G = from_permutations("S3", perms, names)
    G.subgroups = {
        "1": [0],
        "S2": [0, 1],
        "S2b": [0, 2],
        "S2c": [0, 3],
        "A3": [0, 4, 5],
        "S3": list(range(6)),
    }
    return G


def trivial_group() -> GroupPresentation:
    return GroupPresentation("1", [[0]], ["e"], {"1": [0]})


# Hopf algebras from groups ---------------------------------------------------------

def group_algebra(G: GroupPresentation) -> HopfAlgebra:
    n = G.order
    mult = {(a, b): {G.mul(a, b): ONE} for a in range(n) for b in range(n)}
    comult = [{(a, a): ONE} for a in range(n)]
    antipode = [{G.inverse[a]: ONE} for a in range(n)]
    H = HopfAlgebra(n, mult, {G.identity: ONE}, comult, {a: ONE for a in range(n)}, antipode,
                    list(G.element_names), G.exponent(), f"k{G.name}")
    for name, els in G.subgroups.items():
        H.subspaces[name] = Subspace(n, [{a: ONE} for a in els])
    return H


def dual_group_algebra(G: GroupPresentation) -> HopfAlgebra:
    """The function algebra k^G in the basis of point indicators."""
    H = dual(group_algebra(G), f"k^{G.name}")
    H.subspaces["k^G"] = Subspace.whole(G.order)
    for name, els in G.subgroups.items():
        if G.is_normal(els):
            # k^(G/N): functions constant on cosets of N
            cosets = {tuple(sorted(G.mul(g, h) for h in els)) for g in range(G.order)}
            H.subspaces[f"k^{G.name}/{name}"] = Subspace(
                G.order, [{a: ONE for a in c} for c in sorted(cosets)])
    return H


@dataclass
class MatchedPair:
    """Matched pair from an exact factorization Sigma = G F.

    ``left[x][s]`` is x |> s in G and ``right[x][s]`` is x <| s in F, defined
    by x s = (x |> s)(x <| s) in Sigma.  Indices refer to positions in the
    element lists ``G`` and ``F``.
    """

    sigma: GroupPresentation
    G: list[int]
    F: list[int]
    name: str = ""

    def __post_init__(self):
        S = self.sigma
        if S.order != len(self.G) * len(self.F):
            raise PreconditionError("orders do not multiply to |Sigma|")
        fact = {}
        for gi, g in enumerate(self.G):
            for fi, f in enumerate(self.F):
                fact[S.mul(g, f)] = (gi, fi)
        if len(fact) != S.order:
            raise PreconditionError("Sigma = G F is not an exact factorization")
        self.left = [[fact[S.mul(x, s)][0] for s in self.G] for x in self.F]
        self.right = [[fact[S.mul(x, s)][1] for s in self.G] for x in self.F]
        self._check()

    def _check(self):
        S = self.sigma
        gi = {g: i for i, g in enumerate(self.G)}
        fi = {f: i for i, f in enumerate(self.F)}
        gmul = lambda a, b: gi[S.mul(self.G[a], self.G[b])]
        fmul = lambda a, b: fi[S.mul(self.F[a], self.F[b])]
        for x in range(len(self.F)):
            for s in range(len(self.G)):
                for t in range(len(self.G)):
                    if self.left[x][gmul(s, t)] != gmul(self.left[x][s], self.left[self.right[x][s]][t]):
                        raise PreconditionError("matched pair compatibility fails")
                    if self.right[x][gmul(s, t)] != self.right[self.right[x][s]][t]:
                        raise PreconditionError("right action is not an action")
            for y in range(len(self.F)):
                for s in range(len(self.G)):
                    if self.left[fmul(x, y)][s] != self.left[x][self.left[y][s]]:
                        raise PreconditionError("left action is not an action")


def bismash_product(M: MatchedPair) -> HopfAlgebra:
    """k^G # kF with (e_s#x)(e_t#y) = [s = x|>t] e_s#xy.

    The coproduct is Delta(e_s#x) = sum_{ab=s} (e_a#x) (x) (e_b # x<|(x^-1|>a)),
    the unique one making k^G a Hopf subalgebra with 1#x mapping to the
    grouplikes of kF; the antipode is solved for linearly.
    """
    S = M.sigma
    nG, nF = len(M.G), len(M.F)
    gi = {g: i for i, g in enumerate(M.G)}
    fi = {f: i for i, f in enumerate(M.F)}
    gmul = lambda a, b: gi[S.mul(M.G[a], M.G[b])]
    fmul = lambda a, b: fi[S.mul(M.F[a], M.F[b])]
    finv = lambda a: fi[S.inverse[M.F[a]]]
    idx = lambda s, x: s * nF + x
    n = nG * nF
    mult = {}
    for s, x, t, y in itertools.product(range(nG), range(nF), range(nG), range(nF)):
        if s == M.left[x][t]:
            mult[(idx(s, x), idx(t, y))] = {idx(s, fmul(x, y)): ONE}
    comult = []
    for s in range(nG):
        for x in range(nF):
            t: dict = {}
            xinv = finv(x)
            for a in range(nG):
                for b in range(nG):
                    if gmul(a, b) == s:
                        x2 = M.right[x][M.left[xinv][a]]
                        tensor_add(t, ONE, (idx(a, x), idx(b, x2)))
            comult.append(t)
    e = gi[S.identity]
    one = fi[S.identity]
    unit = {idx(s, one): ONE for s in range(nG)}
    counit = {idx(e, x): ONE for x in range(nF)}
    labels = [f"e{S.element_names[M.G[s]]}#{S.element_names[M.F[x]]}" for s in range(nG) for x in range(nF)]
    antipode = solve_antipode(n, mult, unit, comult, counit)
    name = M.name or f"k^{nG}#k{nF}"
    H = HopfAlgebra(n, mult, unit, comult, counit, antipode, labels, S.exponent(), name)
    H.subspaces["k^G"] = Subspace(n, [{idx(s, one): ONE} for s in range(nG)])
    return H


def solve_antipode(n, mult, unit, comult, counit):
    """Solve m (S (x) id) Delta = unit eps for the matrix of S."""
    # unknown S(b_i) = sum_j s[i][j] b_j, variable index i*n + j
    antipode = []
    for i in range(n):
        eqs = []
        rhs = {k: v * counit.get(i, ZERO) for k, v in unit.items()}
        # sum_{(j,k)} c s[j][l] (b_l b_k) = rhs
        rows: dict[int, dict] = {}
        for (j, k), c in comult[i].items():
            for l in range(n):
                for out, v in mult.get((l, k), {}).items():
                    tensor_add(rows.setdefault(out, {}), c * v, j * n + l)
        for out in range(n):
            row = dict(rows.get(out, {}))
            r = rhs.get(out, ZERO)
            if r:
                row[n * n] = -r
            if row:
                eqs.append(row)
        sols = nullspace(eqs, n * n + 1)
        sol = next((s for s in sols if s.get(n * n) == ONE), None)
        if sol is None:
            for s in sols:
                if s.get(n * n):
                    c = s[n * n].inverse()
                    sol = {k: v * c for k, v in s.items()}
                    break
        if sol is None:
            raise PreconditionError("no antipode exists")
        antipode.append(sol)
    # each S(b_j) appears in the equations for several i; collect the consistent solution
    S = [dict() for _ in range(n)]
    for i in range(n):
        for var, v in antipode[i].items():
            if var == n * n:
                continue
            j, l = divmod(var, n)
            if any(j2 == j for (j2, _k) in comult[i]):
                S[j].setdefault(l, v)
    return S


def s3_matched_pair() -> MatchedPair:
    """S3 = Z3 Z2 with G = A3 and F = <(12)>.

    A3 is normal, so x <| s is trivial and the bismash product is
    cocommutative (it is isomorphic to kS3).
    """
    S3 = symmetric_group_3()
    return MatchedPair(S3, [0, 4, 5], [0, 1], "k^Z3#kZ2")


def s3_matched_pair_swapped() -> MatchedPair:
    """S3 = Z2 Z3 with G = <(12)> and F = A3.

    A3 can only fix the two points of G, so the algebra is commutative and
    not cocommutative (another presentation of k^S3).
    """
    S3 = symmetric_group_3()
    return MatchedPair(S3, [0, 1], [0, 4, 5], "k^Z2#kZ3")


def kac_paljutkin_h8() -> HopfAlgebra:
    """The 8-dimensional Kac-Paljutkin algebra.

    Generators x, y, z with x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz,
    z^2 = (1 + x + y - xy)/2, x and y grouplike and
    Delta(z) = (1(x)1 + 1(x)x + y(x)1 - y(x)x)(z(x)z)/2.
    Basis order: 1, x, y, xy, z, xz, yz, xyz.
    """
    half = cyc(Fraction(1, 2))
    # group part indices: 0=1, 1=x, 2=y, 3=xy (xor of bit masks)
    swap = {0: 0, 1: 2, 2: 1, 3: 3}

    def elt(g, e):
        return g + 4 * e

    zz = {0: half, 1: half, 2: half, 3: -half}  # z^2 as group-part combination
    mult = {}
    for a, ea in itertools.product(range(4), range(2)):
        for b, eb in itertools.product(range(4), range(2)):
            h = swap[b] if ea else b
            g = a ^ h
            if ea + eb < 2:
                mult[(elt(a, ea), elt(b, eb))] = {elt(g, ea + eb): ONE}
            else:
                v = {}
                for k, c in zz.items():
                    tensor_add(v, c, elt(g ^ k, 0))
                mult[(elt(a, ea), elt(b, eb))] = v
    n = 8
    comult = []
    dz = {}
    for (l, r), c in {(0, 0): half, (0, 1): half, (2, 0): half, (2, 1): -half}.items():
        # (l (x) r)(z (x) z)
        tensor_add(dz, c, (elt(l, 1), elt(r, 1)))
    for g in range(4):
        comult.append({(g, g): ONE})
    for g in range(4):
        t: dict = {}
        for (u, v), c in dz.items():
            for p, x in mult[(g, u)].items():
                for q, y in mult[(g, v)].items():
                    tensor_add(t, c * x * y, (p, q))
        comult.append(t)
    counit = {i: ONE for i in range(n)}
    antipode = [{g: ONE} for g in range(4)] + [mult[(4, g)] for g in range(4)]
    labels = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]
    H = HopfAlgebra(n, mult, {0: ONE}, comult, counit, antipode, labels, 4, "H8")
    H.subspaces["kG"] = Subspace(n, [{g: ONE} for g in range(4)])
    H.subspaces["kx"] = Subspace(n, [{0: ONE}, {1: ONE}])
    H.subspaces["ky"] = Subspace(n, [{0: ONE}, {2: ONE}])
    H.subspaces["kxy"] = Subspace(n, [{0: ONE}, {3: ONE}])
    return H


def trivial_hopf() -> HopfAlgebra:
    return group_algebra(trivial_group())


GROUPS = {
    "Z1": trivial_group,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "S3": symmetric_group_3,
}


def builtin(name: str) -> HopfAlgebra:
    """Look up a generated algebra by fixture name (kS3, k^S3, H8, ...)."""
    table = {
        "k": trivial_hopf,
        "H8": kac_paljutkin_h8,
        "kZ3#kZ2": lambda: bismash_product(s3_matched_pair()),
        "k^Z3#kZ2": lambda: bismash_product(s3_matched_pair()),
        "k^Z2#kZ3": lambda: bismash_product(s3_matched_pair_swapped()),
    }
    if name in table:
        return table[name]()
    if name.startswith("k^") and name[2:] in GROUPS:
        return dual_group_algebra(GROUPS[name[2:]]())
    if name.startswith("k") and name[1:] in GROUPS:
        return group_algebra(GROUPS[name[1:]]())
    raise KeyError(f"no built-in algebra named {name!r}")
