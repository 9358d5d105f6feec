from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from hopfdouble import builtin, load, save
from hopfdouble.examples import GROUPS
from hopfdouble.io import (
    FIXTURE_ALGEBRAS,
    FIXTURE_DIR,
    FIXTURE_GROUPS,
    AxiomError,
    FixtureError,
    dumps,
    hopf_from_json,
    hopf_to_json,
    resolve_path,
    subspace_from_json,
    subspace_to_json,
    write_fixtures,
)
from hopfdouble.linalg import Subspace
from hopfdouble.scalars import cyc, zeta


def same_algebra(A, B) -> bool:
    return (A.dim == B.dim and A.mult == B.mult and A.unit == B.unit and A.comult == B.comult
            and A.counit == B.counit
            and [{k: v for k, v in s.items() if v} for s in A.antipode]
            == [{k: v for k, v in s.items() if v} for s in B.antipode]
            and A.subspaces == B.subspaces)


@pytest.mark.parametrize("name", FIXTURE_ALGEBRAS)
def test_shipped_fixtures_match_builtins(name):
    assert same_algebra(load(FIXTURE_DIR / f"{name}.hopf.json"), builtin(name))


@pytest.mark.parametrize("name", FIXTURE_GROUPS)
def test_group_fixtures(name):
    G = load(name)
    assert G.table == GROUPS[name]().table


def test_regenerated_fixtures_are_identical(tmp_path):
    for p in write_fixtures(tmp_path):
        assert p.read_bytes() == (FIXTURE_DIR / p.name).read_bytes()


def test_roundtrip_with_cyclotomic_scalars(tmp_path):
    A = builtin("kZ4")
    p = tmp_path / "kz4.hopf.json"
    save(p, A)
    B = load(p)
    assert same_algebra(A, B)
    assert dumps(B) == p.read_text()


def test_resolve_by_short_name():
    assert resolve_path("kS3").name == "kS3.hopf.json"
    with pytest.raises(FileNotFoundError):
        resolve_path("no-such-algebra")


def test_broken_fixture():
    with pytest.raises(AxiomError) as exc:
        load("broken")
    assert [f.identity for f in exc.value.failures] == ["antipode"]
    assert load("broken", strict=False).dim == 2


def _data():
    return hopf_to_json(builtin("kZ2"))


@pytest.mark.parametrize("mutate,where", [
    (lambda d: d["mult"][3].__setitem__(3, "1/0"), "mult[3]"),
    (lambda d: d["mult"][1].__setitem__(3, "zeta(3)[0:x]"), "mult[1]"),
    (lambda d: d["comult"][0].__setitem__(0, 7), "comult[0]"),
    (lambda d: d["antipode"].append([0, 1]), "antipode[2]"),
    (lambda d: d.__setitem__("format", "other"), "format"),
    (lambda d: d.__setitem__("dim", 0), "dim"),
    (lambda d: d.__setitem__("labels", ["e"]), "labels"),
    (lambda d: d["subspaces"].__setitem__("Z2", [{"5": "1"}]), "subspaces[Z2][0]"),
])
def test_malformed_entries_are_named(mutate, where):
    d = _data()
    mutate(d)
    with pytest.raises(FixtureError) as exc:
        hopf_from_json(d)
    assert str(exc.value).startswith(where)


def test_malformed_json_file(tmp_path):
    p = tmp_path / "bad.hopf.json"
    p.write_text('{"format": "hopf-algebra/1",')
    with pytest.raises(FixtureError) as exc:
        load(p)
    assert "line 1" in str(exc.value)


def test_subspace_roundtrip():
    W = Subspace(4, [{0: cyc(1), 1: zeta(3)}, {3: cyc(-2)}])
    back = subspace_from_json(json.loads(json.dumps(subspace_to_json(W))))
    assert back == W


@settings(max_examples=40, deadline=None)
@given(st.lists(st.dictionaries(st.integers(0, 5), st.integers(-5, 5).filter(bool), max_size=4),
                max_size=4),
       st.sampled_from([1, 3, 4, 8]))
def test_subspace_json_property(rows, n):
    w = zeta(n)
    W = Subspace(6, [{k: cyc(v) * w ** k for k, v in r.items()} for r in rows])
    assert subspace_from_json(subspace_to_json(W)) == W
