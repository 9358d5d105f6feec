from __future__ import annotations

from collections import Counter

import pytest
from conftest import double_of
from hypothesis import given, settings, strategies as st

from hopfdouble import builtin, fourier_check
from hopfdouble.double import (
    check_double,
    check_transpose,
    module_on_K,
    module_on_dual_quotient,
    transpose_index,
)
from hopfdouble.linalg import dot, rank
from hopfdouble.scalars import ONE, ZERO, cyc, zeta

NAMES = ["kZ2", "kZ4", "kS3", "k^S3", "k^Z3#kZ2"]


@pytest.mark.parametrize("name", NAMES)
def test_double_report(name):
    Q = double_of(name).Q
    assert Q.H.dim == Q.base.dim ** 2
    assert all(check_double(Q).values())


@pytest.mark.parametrize("name", NAMES)
def test_factorizable(name):
    assert double_of(name).factorizable


@pytest.mark.parametrize("name,count", [("kZ2", 4), ("kZ4", 16), ("kS3", 8), ("k^S3", 8),
                                        ("k^Z3#kZ2", 8)])
def test_simple_count(name, count):
    ctx = double_of(name)
    assert ctx.irr.size == count
    assert sum(d * d for d in ctx.irr.degrees) == ctx.D.dim


def test_double_of_kZ2_is_pointed():
    # s_{(a,chi),(b,psi)} = chi(b) psi(a): six of the sixteen sign pairs are odd
    ctx = double_of("kZ2")
    s = ctx.s_matrix
    assert ctx.irr.degrees == [1, 1, 1, 1]
    assert sorted(Counter(x.to_fraction() for row in s.entries for x in row).items()) == [(-1, 6), (1, 10)]


def test_kS3_double_degrees_and_twists():
    ctx = double_of("kS3")
    assert sorted(ctx.irr.degrees) == [1, 1, 2, 2, 2, 2, 3, 3]
    thetas, _ = ctx.twist
    w = zeta(3)
    assert Counter(thetas) == Counter([ONE] * 5 + [-ONE, w, w * w])


def test_kZ2_twists():
    thetas, _ = double_of("kZ2").twist
    assert sorted(t.to_fraction() for t in thetas) == [-1, 1, 1, 1]


@pytest.mark.parametrize("name", ["kZ2", "kS3", "k^Z3#kZ2"])
def test_verlinde_unitarity(name):
    # sum_k s_ik s_kj = dim D(A) when j = i*, else 0
    ctx = double_of(name)
    s, dm, n = ctx.s_matrix, ctx.irr.dual_map, ctx.irr.size
    for i in range(n):
        for j in range(n):
            total = sum((s[i, k] * s[k, j] for k in range(n)), ZERO)
            assert total == (cyc(ctx.D.dim) if j == dm[i] else ZERO)


@pytest.mark.parametrize("name", ["kZ2", "kS3"])
def test_character_expansion(name):
    assert double_of(name).check_character_expansion()


@pytest.mark.parametrize("name", ["kZ2", "kS3"])
def test_E_are_idempotents(name):
    ctx = double_of(name)
    D = ctx.D
    for E in ctx.E:
        assert D.func_mul(E, E) == E
    # the E_j sum to eps, so their values at 1 add up to 1
    assert sum((ctx.evaluate(j, D.unit) for j in range(ctx.irr.size)), ZERO) == ONE


@pytest.mark.parametrize("name", ["kS3", "H8"])
def test_transpose(name):
    ctx = double_of(name)
    assert all(check_transpose(ctx).values())
    n = ctx.A.dim
    assert all(transpose_index(n, transpose_index(n, i)) == i for i in range(n * n))


@pytest.mark.parametrize("name", ["kZ2", "kS3", "k^S3", "k^Z3#kZ2"])
def test_fourier(name):
    rep = fourier_check(double_of(name))
    assert rep["ok"], rep


@pytest.mark.parametrize("name,key", [("kS3", "A3"), ("kS3", "S3"), ("kZ4", "Z2")])
def test_modules_on_K(name, key):
    ctx = double_of(name)
    K = builtin(name).subspaces[key]
    a = module_on_K(ctx, K, "S-inverse")
    b = module_on_K(ctx, K, "S")
    assert a.verify(ctx.D) and b.verify(ctx.D)
    assert a.character() == b.character()
    d = module_on_dual_quotient(ctx, K)
    assert d.dim == ctx.A.dim // K.dim


def test_drinfeld_element_trace():
    ctx = double_of("kS3")
    u = ctx.drinfeld_element
    thetas, conv = ctx.twist
    assert conv in ("u", "u^-1")
    # tr(u) on the regular module equals sum deg_j^2 theta_j^(+-1)
    irr = ctx.irr
    tr = sum((dot(ch, u) * cyc(d) for ch, d in zip(irr.characters, irr.degrees)), ZERO)
    want = sum((cyc(d * d) * (t if conv == "u" else t.inverse())
                for d, t in zip(irr.degrees, thetas)), ZERO)
    assert tr == want


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7))
def test_phi_is_multiplicative_on_characters(i, j):
    # the Drinfeld map is an algebra map from C(D*) onto the center
    ctx = double_of("kS3")
    D, ch = ctx.D, ctx.irr.characters
    prod = D.func_mul(ch[i], ch[j])
    assert ctx.phi(prod) == D.mul(ctx.phi(ch[i]), ctx.phi(ch[j]))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=16, max_size=16))
def test_R_intertwines_on_random_elements(coeffs):
    ctx = double_of("kZ4")
    D, R = ctx.D, ctx.Q.R
    x = {i: cyc(c) for i, c in enumerate(coeffs) if c}
    left = D.tensor_mul(R, D.comul(x))
    right = D.tensor_mul({(b, a): c for (a, b), c in D.comul(x).items()}, R)
    assert left == right


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["kZ2", "kS3", "k^Z3#kZ2"]), st.data())
def test_E_values_on_random_characters(name, data):
    ctx = double_of(name)
    dirr = ctx.dual_irr
    mults = data.draw(st.lists(st.integers(0, 2), min_size=dirr.size, max_size=dirr.size))
    d: dict = {}
    for m, ch in zip(mults, dirr.characters):
        for k, c in ch.items():
            d[k] = d.get(k, ZERO) + c * m
    vals = [ctx.evaluate(j, d) for j in range(ctx.irr.size)]
    assert all(v.is_rational() and v.to_fraction() >= 0 for v in vals)
    assert sum(vals, ZERO) == ctx.D.eps(d)


@pytest.mark.parametrize("name", ["kZ2", "kZ4", "kS3", "k^Z3#kZ2"])
def test_monodromy_trivial_exactly_when_s_is_maximal(name):
    ctx = double_of(name)
    s, deg, n = ctx.s_matrix, ctx.irr.degrees, ctx.irr.size
    for i in range(n):
        for j in range(n):
            assert ctx.monodromy_trivial(i, j) == (s[i, j] == cyc(deg[i] * deg[j]))


@pytest.mark.parametrize("name", ["kZ2", "kZ4", "kS3", "k^Z3#kZ2"])
def test_balancing_holds_for_inverse_twist(name):
    # kZ4 separates the two sign conventions, the others satisfy both
    rep = double_of(name).balancing()
    assert rep["theta^-1"]
    assert rep["theta"] == (name != "kZ4")


@pytest.mark.parametrize("name", ["kZ2", "kS3"])
def test_phi_maps_characters_onto_center(name):
    ctx = double_of(name)
    D = ctx.D
    images = [ctx.phi(ch) for ch in ctx.irr.characters]
    for z in images:
        for i in range(D.dim):
            assert D.mul(z, {i: ONE}) == D.mul({i: ONE}, z)
    # the center has one idempotent per simple, so the images must span it
    assert rank(images, D.dim) == ctx.irr.size
