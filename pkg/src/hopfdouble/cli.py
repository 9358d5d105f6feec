"""Command-line front end: hopfdouble <subcommand> ...

Exit status: 0 success, 1 verification failure, 2 hypothesis not applicable,
3 input or parse error.  Output is text by default, JSON with --json and
CSV with --csv where a table makes sense; it depends only on the inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .double import DoubleContext, check_double, fourier_check, module_on_dual_quotient, module_on_K
from .hopf import (
    HopfAlgebra,
    PreconditionError,
    adjoint_module,
    classify_subspace,
    dual,
    regular_module,
    trivial_module,
    verify_axioms,
)
from .io import AxiomError, FixtureError, load
from .linalg import Subspace
from .repthy import (
    character_of,
    enumerate_fusion_subcategories,
    fusion_closure,
    hopf_kernel,
    irreducible_characters,
    left_kernel,
)
from .scalars import ONE, ConductorOverflow, LiteralError, cyc
from .verify import THEOREMS, describe, lattice_identities, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_NA, EXIT_INPUT = 0, 1, 2, 3


class InputError(ValueError):
    pass


# selectors -----------------------------------------------------------------------

def resolve_selector(H: HopfAlgebra, text: str) -> Subspace:
    """subgroup:<name>, span:<i,j+k,...>, named:<key>, whole, unit, or a bare key."""
    n = H.dim
    kind, _, arg = text.partition(":")
    if not arg:
        kind, arg = "named", text
    if kind == "named":
        if arg == "whole":
            return Subspace.whole(n)
        if arg == "unit":
            return Subspace(n, [H.unit])
        if arg in H.subspaces:
            return H.subspaces[arg]
        raise InputError(f"{H.name} has no subspace named {arg!r}; known: {', '.join(sorted(H.subspaces))}")
    if kind == "subgroup":
        if arg in H.subspaces:
            return H.subspaces[arg]
        # on a function algebra k^G a normal subgroup N names k^(G/N)
        hits = [k for k in H.subspaces if k.endswith("/" + arg)]
        if len(hits) == 1:
            return H.subspaces[hits[0]]
        raise InputError(f"no subgroup {arg!r} for {H.name}; known: {', '.join(sorted(H.subspaces))}")
    if kind == "span":
        vecs = []
        for part in arg.split(","):
            v = {}
            for tok in part.split("+"):
                try:
                    i = int(tok)
                except ValueError:
                    raise InputError(f"span selector: bad index {tok!r}") from None
                if not 0 <= i < n:
                    raise InputError(f"span selector: index {i} out of range for dimension {n}")
                v[i] = v.get(i, 0 * ONE) + ONE
            vecs.append(v)
        return Subspace(n, vecs)
    if kind == "file":
        W = load(arg)
        if not isinstance(W, Subspace) or W.ambient_dim != n:
            raise InputError(f"{arg}: not a subspace of dimension {n}")
        return W
    raise InputError(f"unknown selector kind {kind!r}")


# output helpers ------------------------------------------------------------------

def _emit(args, data, text: str, csv: str | None = None) -> None:
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=False) + "\n")
    elif args.csv and csv is not None:
        sys.stdout.write(csv)
    else:
        sys.stdout.write(text)


def _table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "".join("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def _csv(rows: list[list[str]]) -> str:
    return "".join(",".join(r) + "\n" for r in rows)


def _load_algebra(path: str, strict: bool = True) -> HopfAlgebra:
    H = load(path, strict=strict)
    if not isinstance(H, HopfAlgebra):
        raise InputError(f"{path}: not a Hopf algebra fixture")
    return H


# subcommands ----------------------------------------------------------------------

def cmd_axioms(args) -> int:
    H = _load_algebra(args.path, strict=False)
    targets = [("A", H)]
    if args.double:
        targets.append(("D(A)", DoubleContext(H, check=False).D))
    data, lines, bad = [], [], False
    for tag, X in targets:
        fails = verify_axioms(X)
        bad |= bool(fails)
        data.append({"algebra": X.name, "dim": X.dim, "failures": [f.as_dict() for f in fails]})
        lines.append(f"{tag} {X.name} (dim {X.dim}): " + ("all identities hold" if not fails else
                     "FAILED " + ", ".join(f"{f.identity} at {list(f.witness)}" for f in fails)))
    _emit(args, data if args.double else data[0], "\n".join(lines) + "\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_irr(args) -> int:
    H = _load_algebra(args.A)
    X = DoubleContext(H).D if args.double else H
    irr = irreducible_characters(X)
    tab = irr.as_table()
    header = ["simple", "degree", "dual"] + tab["labels"]
    rows = [header] + [[str(j), str(irr.degrees[j]), str(irr.dual_map[j])] + tab["characters"][j]
                       for j in range(irr.size)]
    data = {"algebra": X.name, "conductor": irr.conductor, **tab}
    _emit(args, data, _table(rows), _csv(rows))
    return EXIT_OK


def cmd_double(args) -> int:
    ctx = DoubleContext(_load_algebra(args.A))
    chk = check_double(ctx.Q)
    thetas, conv = ctx.twist
    irr = ctx.irr
    data = {
        "algebra": ctx.A.name,
        "dim": ctx.D.dim,
        "antipode convention": ctx.Q.antipode_convention,
        "checks": chk,
        "factorizable": ctx.factorizable,
        "simples": irr.size,
        "degrees": list(irr.degrees),
        "twist": [t.compact() for t in thetas],
        "twist element": conv,
        "character expansion": ctx.check_character_expansion(),
        "monodromy matches s": all(
            ctx.monodromy_trivial(i, j) == (ctx.s_matrix[i, j] == cyc(irr.degrees[i] * irr.degrees[j]))
            for i in range(irr.size) for j in range(irr.size)),
        "balancing": ctx.balancing(),
        "fourier": {k: v for k, v in fourier_check(ctx).items() if k != "matched"},
    }
    lines = [f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in data.items()]
    _emit(args, data, "\n".join(lines) + "\n")
    ok = all(v for v in chk.values() if isinstance(v, bool)) and data["character expansion"]
    ok = ok and data["monodromy matches s"]
    return EXIT_OK if ok else EXIT_FAIL


def cmd_smatrix(args) -> int:
    ctx = DoubleContext(_load_algebra(args.A))
    S = ctx.s_matrix
    inv = S.invariants(ctx.irr.unit_index, args.precision)
    rows = [[x.compact() for x in row] for row in S.entries]
    data = {"algebra": ctx.A.name, "entries": rows, "degrees": list(S.degrees), "invariants": inv}
    text = _table(rows) + "".join(f"# {k}: {'yes' if v else 'NO'}\n" for k, v in inv.items())
    _emit(args, data, text, S.to_csv())
    return EXIT_OK if all(inv.values()) else EXIT_FAIL


def cmd_centralizer(args) -> int:
    ctx = DoubleContext(_load_algebra(args.A))
    irr = ctx.irr
    if args.K:
        K = resolve_selector(ctx.A, args.K)
        C = ctx.d_of(ctx.Q.embed_subspace_A(K))
        source = f"reps trivial on {args.K}"
    else:
        try:
            seed = [int(x) for x in args.simples.split(",")] if args.simples else []
        except ValueError:
            raise InputError(f"--simples: expected comma-separated indices, got {args.simples!r}") from None
        if any(not 0 <= j < irr.size for j in seed):
            raise InputError(f"--simples: indices must lie in 0..{irr.size - 1}")
        C = fusion_closure(seed, irr)
        source = f"closure of {seed}"
    Cp = ctx.centralizer(C)
    data = {"algebra": ctx.A.name, "subcategory": list(C.simple_indices), "source": source,
            "fpdim": irr.fpdim(C), "centralizer": list(Cp.simple_indices),
            "centralizer fpdim": irr.fpdim(Cp)}
    lines = [f"{k}: {json.dumps(v)}" for k, v in data.items()]
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK


def _module(args, ctx: DoubleContext | None, H: HopfAlgebra):
    """Resolve --module for A or for D(A)."""
    kind, _, arg = args.module.partition(":")
    X = ctx.D if ctx is not None else H
    irr = irreducible_characters(X)
    if kind == "simple":
        try:
            j = int(arg)
        except ValueError:
            raise InputError(f"--module simple:<index>, got {args.module!r}") from None
        if not 0 <= j < irr.size:
            raise InputError(f"simple index {j} out of range 0..{irr.size - 1}")
        return X, irr, irr.characters[j]
    if kind == "regular":
        return X, irr, regular_module(X)
    if kind == "trivial":
        return X, irr, trivial_module(X)
    if kind == "adjoint" and ctx is None:
        return X, irr, adjoint_module(H, resolve_selector(H, arg or "whole"))
    if kind == "K" and ctx is not None:
        return X, irr, module_on_K(ctx, resolve_selector(H, arg))
    if kind == "dual-quotient" and ctx is not None:
        return X, irr, module_on_dual_quotient(ctx, resolve_selector(H, arg))
    raise InputError(f"unknown module {args.module!r} for {'D(A)' if ctx else 'A'}")


def cmd_kernels(args) -> int:
    H = _load_algebra(args.A)
    ctx = DoubleContext(H) if args.double else None
    X, irr, M = _module(args, ctx, H)
    dual_irr = irreducible_characters(ctx.dual_double if ctx is not None else dual(X))
    hk = hopf_kernel(X, character_of(M), dual_irr)
    lk = left_kernel(X, M, irr)
    data = {"algebra": X.name, "module": args.module,
            "constituents": {str(k): v for k, v in sorted(irr.constituents(character_of(M)).items())},
            "HKer": {"dim": hk.dim, "basis": describe(hk)},
            "LKer": {"dim": lk.dim, "basis": describe(lk),
                     "classification": classify_subspace(X, lk)}}
    lines = [f"module {args.module} over {X.name}",
             f"constituents {json.dumps(data['constituents'])}",
             f"HKer dim {hk.dim}: {json.dumps(describe(hk))}",
             f"LKer dim {lk.dim}: {json.dumps(describe(lk))}"]
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_lattice(args) -> int:
    H = _load_algebra(args.A)
    if args.double:
        ctx = DoubleContext(H)
        X, irr = ctx.D, ctx.irr
    else:
        ctx, X = None, H
        irr = irreducible_characters(X)
    cats, complete = enumerate_fusion_subcategories(irr)
    rows = [["subcategory", "fpdim"] + (["centralizer", "fpdim'", "product"] if ctx else [])]
    entries = []
    for C in cats:
        e = {"simples": list(C.simple_indices), "fpdim": irr.fpdim(C)}
        row = [json.dumps(e["simples"]), str(e["fpdim"])]
        if ctx:
            Cp = ctx.centralizer(C)
            e.update({"centralizer": list(Cp.simple_indices), "centralizer fpdim": irr.fpdim(Cp),
                      "double centralizer": ctx.centralizer(Cp) == C})
            row += [json.dumps(e["centralizer"]), str(e["centralizer fpdim"]),
                    str(e["fpdim"] * e["centralizer fpdim"])]
        entries.append(e)
        rows.append(row)
    data = {"algebra": X.name, "complete": complete, "subcategories": entries}
    ok = complete
    if ctx:
        reports = [verify_theorem(t, ctx) for t in ("eq2.5", "eq2.6", "double_centralizer")]
        data["identities"] = {r.theorem: r.verdict for r in reports}
        ok = ok and all(r.ok for r in reports)
    if args.identities:
        res = lattice_identities(X, irr)
        data["coideal lattice"] = res
        ok = ok and res["ok"]
    text = _table(rows)
    for k in ("identities", "coideal lattice"):
        if k in data:
            text += f"{k}: {json.dumps(data[k], sort_keys=True)}\n"
    _emit(args, data, text, _csv(rows))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check(args) -> int:
    H = _load_algebra(args.A)
    ctx = DoubleContext(H)
    inputs, names = {}, {}
    for key in ("K", "L"):
        sel = getattr(args, key)
        if sel is None and args.theorem == "thm5.10" and key == "K":
            sel = "named:k^G"
        if sel is not None:
            inputs[key] = resolve_selector(H, sel)
            names[key] = sel
    if args.d is not None:
        inputs["d"] = args.d
    try:
        report = verify_theorem(args.theorem, ctx, names=names, **inputs)
    except TypeError as exc:
        raise InputError(f"{args.theorem}: {exc}") from None
    _emit(args, report.as_dict(), report.table())
    return {"pass": EXIT_OK, "fail": EXIT_FAIL}.get(report.verdict, EXIT_NA)


# parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfdouble", description="Exact computations for semisimple "
                                "Hopf algebras and their Drinfeld doubles.")
    p.add_argument("--max-conductor", type=int, help="bound on cyclotomic conductor escalation")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="machine-readable output")
        fmt.add_argument("--csv", action="store_true", help="CSV output for tables")
        return sp

    sp = add("axioms", cmd_axioms, "check the Hopf algebra identities of a fixture")
    sp.add_argument("path")
    sp.add_argument("--double", action="store_true", help="also check the Drinfeld double")
    sp = add("irr", cmd_irr, "character table")
    sp.add_argument("--A", required=True)
    sp.add_argument("--double", action="store_true")
    sp = add("double", cmd_double, "construct D(A) and report its structure checks")
    sp.add_argument("--A", required=True)
    sp = add("smatrix", cmd_smatrix, "S-matrix of Rep(D(A))")
    sp.add_argument("--A", required=True)
    sp.add_argument("--precision", type=int, default=128, help="bits for the magnitude bound")
    sp = add("centralizer", cmd_centralizer, "Mueger centralizer in Rep(D(A))")
    sp.add_argument("--A", required=True)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--simples", help="comma-separated simple indices generating the subcategory")
    grp.add_argument("--K", help="selector of a subspace of A; uses the reps trivial on it")
    sp = add("kernels", cmd_kernels, "Hopf and left kernels of a module")
    sp.add_argument("--A", required=True)
    sp.add_argument("--double", action="store_true", help="take the module over D(A)")
    sp.add_argument("--module", required=True,
                    help="simple:<j>, regular, trivial, adjoint:<sel> (over A), K:<sel> or "
                         "dual-quotient:<sel> (over D(A))")
    sp = add("lattice", cmd_lattice, "fusion subcategories and lattice identities")
    sp.add_argument("--A", required=True)
    sp.add_argument("--double", action="store_true", help="work in Rep(D(A))")
    sp.add_argument("--identities", action="store_true",
                    help="also check the coideal subalgebra lattice identities")
    sp = add("check", cmd_check, "verify a theorem instance")
    sp.add_argument("theorem", choices=sorted(THEOREMS))
    sp.add_argument("--A", required=True)
    sp.add_argument("--K")
    sp.add_argument("--L")
    sp.add_argument("--d", type=int, help="index of an irreducible character of D(A)*")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.max_conductor:
        os.environ["HOPF_MAX_CONDUCTOR"] = str(args.max_conductor)
    try:
        return args.func(args)
    except (FixtureError, InputError, LiteralError, FileNotFoundError, AxiomError) as exc:
        kind = type(exc).__name__
        if args.json:
            sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
        else:
            sys.stderr.write(f"error ({kind}): {exc}\n")
        return EXIT_INPUT
    except (PreconditionError, ConductorOverflow) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_NA if isinstance(exc, PreconditionError) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
