from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfdouble.scalars import (
    ONE,
    ZERO,
    ConductorOverflow,
    CycScalar,
    LiteralError,
    cyc,
    embed,
    embeddings,
    parse_literal,
    reconstruct,
    zeta,
)

CONDUCTORS = [1, 3, 4, 5, 8, 12]

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


@st.composite
def scalars(draw, conductor=None):
    n = conductor or draw(st.sampled_from(CONDUCTORS))
    terms = draw(st.lists(st.tuples(st.integers(0, 2 * n), fractions), max_size=4))
    return CycScalar.from_terms(n, terms)


@st.composite
def triples(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    return draw(scalars(n)), draw(scalars(n)), draw(scalars(n))


def test_zeta_power_is_one():
    for n in (2, 3, 4, 6, 12):
        assert zeta(n) ** n == ONE
        assert zeta(n) ** (n - 1) * zeta(n) == ONE


def test_cube_root_identities():
    w = zeta(3)
    assert ONE + w + w * w == ZERO
    # 1 + w = -w^2, so its inverse is -w
    assert (ONE + w).inverse() == -w


def test_odd_conductor_normalized():
    # zeta_6 = -zeta_3^2
    assert zeta(6) == -zeta(3, 2)
    assert zeta(6).canonical().conductor == 3


def test_mixed_conductors():
    i = zeta(4)
    w = zeta(3)
    x = i * w
    assert x.conductor == 12
    assert x * x.inverse() == ONE
    assert (i * i).is_rational() and (i * i).to_fraction() == -1


def test_rational_shrinks():
    x = zeta(5) + zeta(5, 4)
    y = zeta(5, 2) + zeta(5, 3)
    # the two Gaussian periods satisfy t^2 + t - 1 = 0
    assert x + y == cyc(-1)
    assert (x * y).to_fraction() == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conj_and_complex_conj():
    i = zeta(4)
    assert i.complex_conj() == -i
    assert (i * i.complex_conj()) == ONE
    with pytest.raises(ValueError):
        zeta(4).conj(2)


def test_conductor_bound(monkeypatch):
    monkeypatch.setenv("HOPF_MAX_CONDUCTOR", "12")
    with pytest.raises(ConductorOverflow):
        zeta(13)


@pytest.mark.parametrize("text,value", [
    ("1/2", Fraction(1, 2)),
    ("-3", Fraction(-3)),
    ("zeta(4)[0:1/1]", Fraction(1)),
    ("zeta(3)[0:1, 1:1]", None),
])
def test_parse_literal(text, value):
    x = parse_literal(text)
    if value is not None:
        assert x.to_fraction() == value
    else:
        assert x == ONE + zeta(3)


@pytest.mark.parametrize("bad", ["", "zeta(3)[", "zeta(x)[0:1]", "1/0", "zeta(3)[0:1:2]"])
def test_parse_literal_rejects(bad):
    with pytest.raises(LiteralError):
        parse_literal(bad)


def test_embedding_bounds():
    w = zeta(3)
    zs = embeddings(ONE + w, 128)
    assert len(zs) == 2
    for z in zs:
        assert abs(complex(z.real.mid, z.imag.mid) - complex(0.5, 0.8660254037844386)) < 1e-9 \
            or abs(complex(z.real.mid, z.imag.mid) - complex(0.5, -0.8660254037844386)) < 1e-9


def test_reconstruct_roundtrip():
    x = Fraction(2, 3) + zeta(12) * cyc(Fraction(-5, 7))
    z = embed(x, 200)
    assert reconstruct(z, 12, 21, 200) == x


# properties ------------------------------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=80, deadline=None)
@given(scalars())
def test_inverse(a):
    if a:
        assert a * a.inverse() == ONE
        assert a / a == ONE


@settings(max_examples=80, deadline=None)
@given(scalars())
def test_literal_roundtrip(a):
    assert parse_literal(a.literal()) == a
    assert parse_literal(a.compact()) == a
    assert hash(parse_literal(a.compact())) == hash(a)


@settings(max_examples=60, deadline=None)
@given(scalars(12), scalars(12))
def test_galois_is_ring_map(a, b):
    for k in (5, 7, 11):
        assert (a * b).conj(k) == a.conj(k) * b.conj(k)
        assert (a + b).conj(k) == a.conj(k) + b.conj(k)


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_canonical_is_same_element(a):
    c = a.canonical()
    assert c == a
    assert c.conductor <= a.conductor
