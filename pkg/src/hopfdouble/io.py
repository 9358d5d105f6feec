"""JSON fixtures for Hopf algebras, subspaces and group presentations.

A Hopf algebra file lists its structure constants sparsely, with scalars as
literal strings (``"1/2"`` or ``"zeta(4)[1:1/1]"``):

    {"format": "hopf-algebra/1", "name": "kZ2", "dim": 2, "conductor": 2,
     "labels": ["e", "g"],
     "mult": [[i, j, k, c], ...], "unit": [[k, c]],
     "comult": [[i, j, k, c], ...], "counit": [[k, c], ...],
     "antipode": [[i, j, c], ...],
     "subspaces": {"Z2": [{"0": "1"}, {"1": "1"}]}}

where ``mult`` holds b_i b_j = sum c b_k, ``comult`` holds Delta(b_i) = sum
c b_j (x) b_k and ``antipode`` holds S(b_i) = sum c b_j.  Parse errors name
the entry they come from.
"""

from __future__ import annotations

import json
from pathlib import Path

from .examples import GroupPresentation, InvalidGroup
from .hopf import AxiomFailure, HopfAlgebra, tensor_add, verify_axioms
from .linalg import Subspace, Vec
from .scalars import CycScalar, LiteralError, parse_literal

HOPF_FORMAT = "hopf-algebra/1"
SUBSPACE_FORMAT = "subspace/1"
GROUP_FORMAT = "group/1"
FIXTURE_DIR = Path(__file__).parent / "fixtures"


class FixtureError(ValueError):
    """Malformed fixture; the message names the offending entry."""


class AxiomError(ValueError):
    def __init__(self, failures: list[AxiomFailure]):
        self.failures = failures
        super().__init__("axioms fail: " + ", ".join(f.identity for f in failures))


# scalars -------------------------------------------------------------------------

def scalar_text(c: CycScalar) -> str:
    return c.compact()


def _scalar(text, where: str) -> CycScalar:
    if isinstance(text, int) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise FixtureError(f"{where}: expected a scalar literal string, got {text!r}")
    try:
        return parse_literal(text)
    except LiteralError as exc:
        raise FixtureError(f"{where}: {exc}") from None


def _index(x, dim: int, where: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < dim:
        raise FixtureError(f"{where}: index {x!r} out of range for dimension {dim}")
    return x


def _entries(data: dict, key: str, width: int, dim: int) -> list[tuple[tuple[int, ...], CycScalar]]:
    raw = data.get(key)
    if not isinstance(raw, list):
        raise FixtureError(f"{key}: missing or not a list")
    out = []
    for pos, e in enumerate(raw):
        where = f"{key}[{pos}]"
        if not isinstance(e, list) or len(e) != width + 1:
            raise FixtureError(f"{where}: expected {width} indices and a scalar, got {e!r}")
        idx = tuple(_index(x, dim, where) for x in e[:width])
        out.append((idx, _scalar(e[width], where)))
    return out


# vectors and subspaces -------------------------------------------------------------

def vec_to_json(v: Vec) -> dict[str, str]:
    return {str(k): scalar_text(c) for k, c in sorted(v.items()) if c}


def vec_from_json(d, dim: int, where: str) -> Vec:
    if not isinstance(d, dict):
        raise FixtureError(f"{where}: expected an object of index: scalar")
    out: Vec = {}
    for k, c in d.items():
        try:
            i = int(k)
        except ValueError:
            raise FixtureError(f"{where}: bad index {k!r}") from None
        _index(i, dim, where)
        x = _scalar(c, f"{where}[{k}]")
        if x:
            out[i] = x
    return out


def subspace_to_json(W: Subspace) -> dict:
    return {"format": SUBSPACE_FORMAT, "dim": W.ambient_dim,
            "basis": [vec_to_json(v) for v in W.basis()]}


def subspace_from_json(data: dict) -> Subspace:
    if data.get("format") != SUBSPACE_FORMAT:
        raise FixtureError(f"format: expected {SUBSPACE_FORMAT!r}")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise FixtureError("dim: expected a positive integer")
    return Subspace(dim, [vec_from_json(v, dim, f"basis[{i}]") for i, v in enumerate(data.get("basis", []))])


# Hopf algebras ------------------------------------------------------------------------

def hopf_to_json(H: HopfAlgebra) -> dict:
    n = H.dim
    mult = [[i, j, k, scalar_text(c)] for (i, j), v in sorted(H.mult.items())
            for k, c in sorted(v.items()) if c]
    comult = [[i, j, k, scalar_text(c)] for i in range(n)
              for (j, k), c in sorted(H.comult[i].items()) if c]
    return {
        "format": HOPF_FORMAT,
        "name": H.name,
        "dim": n,
        "conductor": H.conductor,
        "labels": list(H.labels),
        "mult": mult,
        "unit": [[k, scalar_text(c)] for k, c in sorted(H.unit.items()) if c],
        "comult": comult,
        "counit": [[k, scalar_text(c)] for k, c in sorted(H.counit.items()) if c],
        "antipode": [[i, j, scalar_text(c)] for i in range(n)
                     for j, c in sorted(H.antipode[i].items()) if c],
        "subspaces": {name: [vec_to_json(v) for v in W.basis()]
                      for name, W in sorted(H.subspaces.items())},
    }


def hopf_from_json(data: dict, strict: bool = True) -> HopfAlgebra:
    """Build a Hopf algebra; with strict, axiom failures raise AxiomError."""
    if not isinstance(data, dict):
        raise FixtureError("top level: expected an object")
    if data.get("format") != HOPF_FORMAT:
        raise FixtureError(f"format: expected {HOPF_FORMAT!r}, got {data.get('format')!r}")
    n = data.get("dim")
    if not isinstance(n, int) or n < 1:
        raise FixtureError("dim: expected a positive integer")
    mult: dict = {}
    for (i, j, k), c in _entries(data, "mult", 3, n):
        tensor_add(mult.setdefault((i, j), {}), c, k)
    mult = {key: v for key, v in mult.items() if v}
    unit: Vec = {}
    for (k,), c in _entries(data, "unit", 1, n):
        tensor_add(unit, c, k)
    comult: list[dict] = [{} for _ in range(n)]
    for (i, j, k), c in _entries(data, "comult", 3, n):
        tensor_add(comult[i], c, (j, k))
    counit: Vec = {}
    for (k,), c in _entries(data, "counit", 1, n):
        tensor_add(counit, c, k)
    antipode: list[Vec] = [{} for _ in range(n)]
    for (i, j), c in _entries(data, "antipode", 2, n):
        tensor_add(antipode[i], c, j)
    labels = data.get("labels") or [f"b{i}" for i in range(n)]
    if not isinstance(labels, list) or len(labels) != n:
        raise FixtureError(f"labels: expected {n} labels")
    conductor = data.get("conductor", 1)
    if not isinstance(conductor, int) or conductor < 1:
        raise FixtureError("conductor: expected a positive integer")
    H = HopfAlgebra(n, mult, unit, comult, counit, antipode, [str(x) for x in labels],
                    conductor, str(data.get("name", "")))
    subs = data.get("subspaces", {})
    if not isinstance(subs, dict):
        raise FixtureError("subspaces: expected an object")
    for name, basis in subs.items():
        if not isinstance(basis, list):
            raise FixtureError(f"subspaces[{name}]: expected a list of vectors")
        H.subspaces[name] = Subspace(
            n, [vec_from_json(v, n, f"subspaces[{name}][{p}]") for p, v in enumerate(basis)])
    if strict:
        failures = verify_axioms(H)
        if failures:
            raise AxiomError(failures)
    return H


# groups --------------------------------------------------------------------------------

def group_to_json(G: GroupPresentation) -> dict:
    return {"format": GROUP_FORMAT, "name": G.name, "elements": list(G.element_names),
            "table": [list(r) for r in G.table],
            "subgroups": {k: list(v) for k, v in sorted(G.subgroups.items())}}


def group_from_json(data: dict) -> GroupPresentation:
    if not isinstance(data, dict) or data.get("format") != GROUP_FORMAT:
        raise FixtureError(f"format: expected {GROUP_FORMAT!r}")
    table = data.get("table")
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise FixtureError("table: expected a square list of lists")
    n = len(table)
    for a, row in enumerate(table):
        for b, x in enumerate(row):
            _index(x, n, f"table[{a}][{b}]")
    names = data.get("elements") or [str(i) for i in range(n)]
    subgroups = data.get("subgroups", {})
    try:
        return GroupPresentation(str(data.get("name", "")), table, list(names),
                                 {k: list(v) for k, v in subgroups.items()})
    except InvalidGroup as exc:
        raise FixtureError(f"table: {exc}") from None


# files -----------------------------------------------------------------------------------

SUFFIXES = (".hopf.json", ".group.json", ".json")


def resolve_path(path: str | Path, suffixes=SUFFIXES) -> Path:
    """A path as given, with a fixture suffix appended, or a shipped fixture of that name."""
    p = Path(path)
    cands = [p] + [p.with_name(p.name + s) for s in suffixes]
    cands += [FIXTURE_DIR / p.name] + [FIXTURE_DIR / (p.name + s) for s in suffixes]
    for cand in cands:
        if cand.is_file():
            return cand
    raise FileNotFoundError(f"no fixture found for {str(path)!r}")


def read_json(path: str | Path, suffixes=SUFFIXES) -> dict:
    p = resolve_path(path, suffixes)
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{p.name}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load(path: str | Path, strict: bool = True):
    """Load a Hopf algebra, subspace or group fixture according to its format tag."""
    data = read_json(path)
    fmt = data.get("format") if isinstance(data, dict) else None
    if fmt == SUBSPACE_FORMAT:
        return subspace_from_json(data)
    if fmt == GROUP_FORMAT:
        return group_from_json(data)
    return hopf_from_json(data, strict=strict)


def dumps(obj) -> str:
    if isinstance(obj, HopfAlgebra):
        data = hopf_to_json(obj)
    elif isinstance(obj, Subspace):
        data = subspace_to_json(obj)
    elif isinstance(obj, GroupPresentation):
        data = group_to_json(obj)
    else:
        raise TypeError(f"cannot save {type(obj).__name__}")
    return json.dumps(data, indent=1) + "\n"


def save(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj))


FIXTURE_ALGEBRAS = ("kZ2", "kZ4", "kS3", "k^S3", "k^Z3#kZ2", "H8")
FIXTURE_GROUPS = ("Z2", "Z3", "Z4", "S3")


def write_fixtures(directory: str | Path = FIXTURE_DIR) -> list[Path]:
    """Regenerate the shipped fixtures from the built-in constructors."""
    from .examples import GROUPS, builtin

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for name in FIXTURE_ALGEBRAS:
        p = d / f"{name}.hopf.json"
        save(p, builtin(name))
        written.append(p)
    for name in FIXTURE_GROUPS:
        p = d / f"{name}.group.json"
        save(p, GROUPS[name]())
        written.append(p)
    # kZ2 with S(g) = e: every identity except the antipode holds
    broken = hopf_to_json(builtin("kZ2"))
    broken["name"] = "broken"
    broken["antipode"] = [[0, 0, "1"], [1, 0, "1"]]
    p = d / "broken.hopf.json"
    p.write_text(json.dumps(broken, indent=1) + "\n")
    written.append(p)
    return written
