from __future__ import annotations

import json
import re

import pytest
from conftest import double_of

from hopfdouble import THEOREMS, builtin, irreducible_characters, verify_theorem
from hopfdouble.verify import normal_hopf_subalgebras, lattice_identities


def test_descriptions_are_behavioural():
    for tid, (desc, fn) in THEOREMS.items():
        assert callable(fn) and desc
        assert not re.search(r"\b(theorem|proposition|corollary|lemma|section|eq)\b", desc, re.I), tid


def test_unknown_id():
    with pytest.raises(KeyError):
        verify_theorem("thm9.9", double_of("kZ2"))


def test_report_shape():
    rep = verify_theorem("thm1.2", double_of("kS3"), names={"K": "A3"},
                         K=builtin("kS3").subspaces["A3"])
    data = json.loads(rep.to_json())
    assert list(data) == ["theorem", "description", "algebra", "inputs", "hypotheses",
                          "lhs_indices", "rhs_indices", "fpdims", "verdict", "details"]
    assert data["inputs"]["K selector"] == "A3"
    assert data["fpdims"]["D(K)"] * data["fpdims"]["D(K)'"] == 36
    assert "verdict" in rep.table()


def test_non_normal_is_not_applicable():
    rep = verify_theorem("thm1.2", double_of("kS3"), K=builtin("kS3").subspaces["S2"])
    assert rep.verdict == "not-applicable"
    assert rep.hypotheses == [{"name": "K is a normal Hopf subalgebra of A", "holds": False}]


def test_thm11_fpdim_formulas():
    ctx = double_of("kS3")
    A3 = builtin("kS3").subspaces["A3"]
    rep = verify_theorem("thm1.1", ctx, K=A3, L=A3)
    assert rep.fpdims["dim A * dim K / dim L"] == rep.fpdims["dim A * dim L / dim K"] == 6


@pytest.mark.parametrize("k,l", [("Z2", "Z4"), ("Z4", "Z2"), ("1", "Z2")])
def test_thm11_with_unequal_subalgebras(k, l):
    # FPdim D(K,L) = n k / l, so its centralizer has n l / k
    ctx = double_of("kZ4")
    A = builtin("kZ4")
    K, L = A.subspaces[k], A.subspaces[l]
    rep = verify_theorem("thm1.1", ctx, K=K, L=L)
    assert rep.ok, rep.table()
    assert rep.fpdims["D(K,L)"] == 4 * K.dim // L.dim
    assert rep.fpdims["D(K,L)'"] == 4 * L.dim // K.dim


def test_thm11_needs_commuting_pair():
    A = builtin("kS3")
    rep = verify_theorem("thm1.1", double_of("kS3"), K=A.subspaces["A3"], L=A.subspaces["S3"])
    assert rep.verdict == "not-applicable"
    assert {"name": "[K,L]=0", "holds": False} in rep.hypotheses


def test_normal_hopf_subalgebras_of_kS3():
    A = builtin("kS3")
    found = sorted(W.dim for _, W in normal_hopf_subalgebras(A, irreducible_characters(A)))
    assert found == [1, 3, 6]


def test_lattice_counts_d_kz2():
    ctx = double_of("kZ2")
    res = lattice_identities(ctx.D, ctx.irr)
    assert res["ok"] and res["subalgebras"] == 5
    assert res["hopf join dimension"]["checked"] == 25


@pytest.mark.parametrize("name", ["kZ2", "kS3"])
def test_single_d(name):
    rep = verify_theorem("thm4.8", double_of(name), d=0)
    assert rep.ok and len(rep.lhs_indices) == 1


def test_subcategory_trivial_on_A3_is_self_centralizing():
    # Rep(D(kS3)) trivial on A3: simples of degree 1, 1, 2, so FPdim 6, and the centralizer is itself
    ctx = double_of("kS3")
    C = ctx.d_of(ctx.Q.embed_subspace_A(builtin("kS3").subspaces["A3"]))
    Z = ctx.centralizer(C)
    assert sum(ctx.irr.degrees[i] ** 2 for i in C.simple_indices) == 6
    assert Z == C
