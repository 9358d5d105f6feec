from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hopfdouble.linalg import (
    Subspace,
    determinant,
    dot,
    identity,
    lincomb,
    mat_mul,
    matrix_inverse,
    nullspace,
    rank,
    rref,
    vadd,
    vec,
    vscale,
    vsub,
)
from hopfdouble.scalars import ONE, ZERO, cyc, zeta

small = st.integers(-3, 3)


@st.composite
def vectors(draw, n=5, cyclotomic=False):
    out = {}
    for i in range(n):
        a = draw(small)
        b = draw(small) if cyclotomic else 0
        x = cyc(a) + cyc(b) * zeta(3)
        if x:
            out[i] = x
    return out


def test_vec_drops_zeros():
    assert vec([0, 1, 0, -2]) == {1: ONE, 3: cyc(-2)}
    assert vadd({0: ONE}, {0: -ONE}) == {}


def test_nullspace_and_rank():
    eqs = [vec([1, 1, 0]), vec([0, 1, 1])]
    ns = nullspace(eqs, 3)
    assert len(ns) == 1
    for e in eqs:
        assert dot(e, ns[0]) == ZERO
    assert rank(eqs, 3) == 2


def test_inverse_and_determinant():
    w = zeta(3)
    M = [[ONE, w], [w * w, cyc(2)]]
    inv = matrix_inverse(M)
    assert mat_mul(M, inv) == identity(2)
    assert determinant(M) == cyc(2) - w ** 3
    assert matrix_inverse([[ONE, ONE], [ONE, ONE]]) is None


def test_subspace_ops():
    A = Subspace(4, [vec([1, 0, 0, 0]), vec([0, 1, 1, 0])])
    B = Subspace(4, [vec([0, 1, 0, 0]), vec([0, 0, 1, 0])])
    meet = A.intersect(B)
    assert meet.dim == 1 and meet.contains(vec([0, 1, 1, 0]))
    assert A.sum(B).dim == 3
    assert Subspace.zero(4) <= A <= Subspace.whole(4)
    assert A.coords(vec([2, 3, 3, 0])) == [cyc(2), cyc(3)]
    assert A.coords(vec([0, 0, 0, 1])) is None


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors(cyclotomic=True), min_size=1, max_size=4),
       st.lists(st.tuples(small, small), min_size=4, max_size=4))
def test_span_contains_combinations(vs, coeffs):
    W = Subspace(5, vs)
    x = lincomb((cyc(a) + cyc(Fraction(b, 2)) * zeta(3), v) for (a, b), v in zip(coeffs, vs))
    assert W.contains(x)
    assert W.dim == rank(vs, 5)


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors(), min_size=1, max_size=5))
def test_rank_nullity(eqs):
    ns = nullspace(eqs, 5)
    assert len(ns) + rank(eqs, 5) == 5
    for e in eqs:
        for v in ns:
            assert dot(e, v) == ZERO


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors(), max_size=3), st.lists(vectors(), max_size=3))
def test_modular_law_dims(a, b):
    A, B = Subspace(5, a), Subspace(5, b)
    assert A.sum(B).dim + A.intersect(B).dim == A.dim + B.dim
    assert A.intersect(B) <= A and A.intersect(B) <= B


@settings(max_examples=40, deadline=None)
@given(vectors(cyclotomic=True), vectors(cyclotomic=True))
def test_vector_algebra(x, y):
    assert vsub(vadd(x, y), y) == x
    assert vscale(x, 0) == {}
    assert rref([x, y, vadd(x, y)], 5) == rref([x, y], 5)
