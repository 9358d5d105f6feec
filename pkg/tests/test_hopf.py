from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from hopfdouble import builtin, classify_subspace, dual, quotient, verify_axioms
from hopfdouble.examples import (
    GROUPS,
    InvalidGroup,
    MatchedPair,
    bismash_product,
    cyclic_group,
    group_algebra,
)
from hopfdouble.hopf import (
    HopfAlgebra,
    PreconditionError,
    dual_quotient_subalgebra,
    integral,
    sub_hopf,
    variant,
    verify_axioms_generic,
)
from hopfdouble.kernel import verify_axioms_dense
from hopfdouble.linalg import Subspace, lincomb, vscale
from hopfdouble.scalars import ONE, cyc

ALGEBRAS = ["kZ2", "kZ3", "kZ4", "kS3", "k^S3", "k^Z3#kZ2", "k^Z2#kZ3", "H8"]


@pytest.mark.parametrize("name", ALGEBRAS)
def test_axioms(name):
    A = builtin(name)
    assert verify_axioms(A) == []
    assert verify_axioms(dual(A)) == []


@pytest.mark.parametrize("name", ["kS3", "H8", "k^Z3#kZ2"])
@pytest.mark.parametrize("kind", ["op", "cop", "op_cop"])
def test_variants_are_hopf(name, kind):
    assert verify_axioms(variant(builtin(name), kind)) == []


@pytest.mark.parametrize("name", ["kZ2", "kS3", "H8"])
def test_dense_and_generic_checkers_agree(name):
    A = builtin(name)
    dense = verify_axioms_dense(A)
    assert dense in (None, [])
    assert verify_axioms_generic(A) == []


def test_broken_antipode_named():
    A = builtin("kZ2")
    bad = HopfAlgebra(A.dim, A.mult, A.unit, A.comult, A.counit, [{0: ONE}, {0: ONE}],
                      A.labels, A.conductor, "bad")
    failures = verify_axioms(bad)
    assert [f.identity for f in failures] == ["antipode"]


@pytest.mark.parametrize("name,dims", [("kS3", 6), ("H8", 8), ("k^S3", 6)])
def test_double_dual(name, dims):
    A = builtin(name)
    AA = dual(dual(A))
    assert AA.dim == dims
    assert AA.mult == {k: v for k, v in A.mult.items() if v}
    assert AA.comult == A.comult


def test_h8_is_neither_commutative_nor_cocommutative():
    H = builtin("H8")
    assert not H.is_commutative()
    assert not H.is_cocommutative()
    assert H.s_squared_is_identity()


def test_bismash_products_of_s3():
    # A3 normal: the right action is trivial and the product is cocommutative
    H = builtin("k^Z3#kZ2")
    assert H.dim == 6 and H.is_cocommutative() and not H.is_commutative()
    # with the factors swapped the left action is trivial instead
    H2 = builtin("k^Z2#kZ3")
    assert H2.is_commutative() and not H2.is_cocommutative()


@pytest.mark.parametrize("name", ["kS3", "k^S3", "H8"])
def test_integral(name):
    A = builtin(name)
    t = integral(A)
    assert A.eps(t) == ONE
    for i in range(A.dim):
        x = {i: ONE}
        assert A.mul(x, t) == vscale(t, A.eps(x))
        assert A.mul(t, x) == vscale(t, A.eps(x))
    assert A.mul(t, t) == t


def test_classify_kS3():
    A = builtin("kS3")
    flags = {k: classify_subspace(A, W) for k, W in A.subspaces.items()}
    assert flags["A3"]["normal-hopf-subalgebra"]
    assert flags["S2"]["hopf-subalgebra"] and not flags["S2"]["normal-hopf-subalgebra"]
    assert flags["S3"]["normal-hopf-subalgebra"]
    span = Subspace(6, [{1: ONE}])
    assert not classify_subspace(A, span)["subalgebra"]


def test_quotient_by_A3():
    A = builtin("kS3")
    Q = quotient(A, A.subspaces["A3"])
    assert Q.algebra.dim == 2
    assert verify_axioms(Q.algebra) == []
    with pytest.raises(PreconditionError):
        quotient(A, A.subspaces["S2"])


def test_dual_quotient_dimension():
    A = builtin("kS3")
    for key, dim in (("1", 6), ("A3", 2), ("S3", 1)):
        assert dual_quotient_subalgebra(A, A.subspaces[key]).dim == dim


def test_sub_hopf():
    A = builtin("H8")
    K, basis = sub_hopf(A, A.subspaces["kG"])
    assert K.dim == 4 and verify_axioms(K) == []


def test_invalid_group():
    with pytest.raises(InvalidGroup):
        GROUPS["Z2"]().__class__("bad", [[0, 1], [1, 1]], ["e", "g"])


def test_group_subgroups():
    S3 = GROUPS["S3"]()
    subs = S3.all_subgroups()
    assert len(subs) == 6
    assert sum(S3.is_normal(H) for H in subs) == 3
    assert sorted(len(c) for c in S3.conjugacy_classes()) == [1, 2, 3]


def test_matched_pair_validation():
    S3 = GROUPS["S3"]()
    with pytest.raises(PreconditionError):
        MatchedPair(S3, [0, 1], [0, 1, 2])
    with pytest.raises(PreconditionError):
        MatchedPair(S3, [0, 4, 5], [0, 4])
    assert bismash_product(MatchedPair(S3, [0, 4, 5], [0, 1])).dim == 6


# properties ------------------------------------------------------------------------------

coeffs = st.lists(st.integers(-3, 3), min_size=6, max_size=6)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_comultiplication_is_multiplicative(a, b):
    A = builtin("k^Z3#kZ2")
    x = {i: cyc(c) for i, c in enumerate(a) if c}
    y = {i: cyc(c) for i, c in enumerate(b) if c}
    assert A.comul(A.mul(x, y)) == A.tensor_mul(A.comul(x), A.comul(y))
    assert A.eps(A.mul(x, y)) == A.eps(x) * A.eps(y)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_antipode_is_anti_multiplicative(a, b):
    A = builtin("kS3")
    x = {i: cyc(c) for i, c in enumerate(a) if c}
    y = {i: cyc(c) for i, c in enumerate(b) if c}
    assert A.S(A.mul(x, y)) == A.mul(A.S(y), A.S(x))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 7))
def test_cyclic_group_algebras(n):
    A = group_algebra(cyclic_group(n))
    assert verify_axioms(A) == []
    assert A.is_commutative() and A.is_cocommutative()
    g = {1 % n: ONE}
    assert A.power(g, n) == A.unit


@settings(max_examples=30, deadline=None)
@given(coeffs)
def test_ad_action_preserves_normal_subalgebra(a):
    A = builtin("kS3")
    K = A.subspaces["A3"]
    x = {i: cyc(c) for i, c in enumerate(a) if c}
    for k in K.basis():
        assert K.contains(A.ad(x, k))


def test_lincomb_helper():
    assert lincomb([(cyc(2), {0: ONE}), (cyc(-2), {0: ONE})]) == {}
