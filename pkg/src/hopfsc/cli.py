"""Command-line driver.  Exit codes: 0 all checks pass, 1 a check failed,
2 usage or parse error."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as hsc
from .cosmash import cosmash
from .cotensor import cotensor
from .equivariant import (
    Probes, XiFamily, check_bimodule_coalgebra, check_lax_axioms, default_probes,
    roundtrip_bijection,
)
from .errors import HopfSCError
from .exactla import Field
from .hopf import (
    _counit_entries, beta_corank, coinvariants, extract_antipode, fundamental_theorem_check,
    ground_module_coalgebra, hopf_module_probes,
)
from .structures import (
    Bicomodule, CheckReport, EquivariantBicomodule, HopfAlgebra, LeftComodule, ModuleCoalgebra,
    RightComodule, check_algebra, check_bialgebra, check_bicomodule, check_coalgebra,
    check_equivariant_bicomodule, check_hopf, check_left_comodule, check_module,
    check_module_coalgebra, check_right_comodule,
)
from .subcat import check_equivariance_inclusion, check_subcoalgebra, morita_witness_check, tau
from .ydmod import check_lax_center, check_yd, yd_roundtrip


class UsageError(Exception):
    pass


def _entries(f):
    return [[r, c, str(v)] for r, c, v in f.entries]


# ---------------------------------------------------------------------------
# checker dispatch


def check_structure(obj, kind: str) -> CheckReport:
    if kind == "coalgebra":
        return check_coalgebra(obj)
    if kind == "algebra":
        return check_algebra(obj)
    if kind == "bialgebra":
        return check_bialgebra(obj)
    if kind == "hopf":
        return check_hopf(obj)
    if kind == "comodule_r":
        return check_right_comodule(obj)
    if kind == "comodule_l":
        return check_left_comodule(obj)
    if kind == "module_l":
        return check_module(obj)
    if kind == "module_coalgebra":
        return check_module_coalgebra(obj)
    if kind == "bimodule_coalgebra":
        return check_bimodule_coalgebra(obj)
    if kind == "equivariant_bicomodule":
        if isinstance(obj, EquivariantBicomodule):
            return check_equivariant_bicomodule(obj)
        return check_bicomodule(obj)
    if kind == "yd_module":
        return check_yd(obj)
    if kind == "subcoalgebra":
        return check_subcoalgebra(obj, H_stable=isinstance(obj.parent, ModuleCoalgebra))
    if kind == "xi_block":
        return check_lax_axioms(obj.family())
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# helpers


def _get(doc, name, kinds, what):
    if name is None:
        cands = [n for n in doc.names() if doc.kinds[n] in kinds]
        if not cands:
            raise UsageError(f"no {what} in the document")
        name = cands[0]
    if name not in doc:
        raise UsageError(f"no block named {name!r}")
    if doc.kinds[name] not in kinds:
        raise UsageError(f"{name!r} is a {doc.kinds[name]}, expected {what}")
    return name, doc[name]


def _as_right(obj):
    if isinstance(obj, RightComodule):
        return obj
    if isinstance(obj, Bicomodule):
        return obj.as_right
    raise UsageError("expected a right comodule or a bicomodule")


def _as_left(obj):
    if isinstance(obj, LeftComodule):
        return obj
    if isinstance(obj, Bicomodule):
        return obj.as_left
    raise UsageError("expected a left comodule or a bicomodule")


def _file_probes(doc, H, C) -> Probes:
    """Right comodules of the document over H (as X) and over C (as W)."""
    base = default_probes(H, C)
    xs = [(n, o) for n, o in doc if doc.kinds[n] == "comodule_r" and o.over is H]
    ws = [(n, o) for n, o in doc if doc.kinds[n] == "comodule_r" and o.over is C]
    return Probes(xs or base.xs, ws or base.ws)


# ---------------------------------------------------------------------------
# subcommands; each returns (reports, result dict, text lines)


def cmd_check(doc, args):
    names = [args.name] if args.name else doc.names()
    reports = []
    for n in names:
        if n not in doc:
            raise UsageError(f"no block named {n!r}")
        R = check_structure(doc[n], doc.kinds[n])
        R.title = f"{n} ({doc.kinds[n]}): {R.title}"
        reports.append(R)
    return reports, {"checked": names}, []


def cmd_cotensor(doc, args):
    _, A = _get(doc, args.left, ("comodule_r", "equivariant_bicomodule"), "a right comodule")
    _, B = _get(doc, args.right, ("comodule_l", "equivariant_bicomodule"), "a left comodule")
    M, N = _as_right(A), _as_left(B)
    if M.over.dim != N.over.dim:
        raise UsageError("the comodules are over coalgebras of different dimension")
    S = cotensor(M, N)
    basis = S.basis_labels()
    lines = [f"dim = {S.dim}"] + [f"  {b}" for b in basis]
    return [], {"dim": S.dim, "basis": basis, "inclusion": _entries(S.inclusion)}, lines


def cmd_xi(doc, args):
    name, M = _get(doc, args.bicomodule, ("equivariant_bicomodule",), "an equivariant bicomodule")
    if not isinstance(M, EquivariantBicomodule):
        raise UsageError(f"{name!r} carries no action")
    probes = _file_probes(doc, M.H, M.C) if args.probes == "file" else default_probes(M.H, M.C)
    xi = XiFamily.from_action(M, name=f"xi for {name}")
    return [check_lax_axioms(xi, probes)], {"bicomodule": name}, []


def cmd_action(doc, args):
    name, X = _get(doc, args.xi, ("xi_block",), "an xi_block")
    fam = X.family()
    lax = check_lax_axioms(fam)
    M = X.bicomodule
    a = fam.M.action
    EM = EquivariantBicomodule(M.H, M.C, M.D, M.dim, M.left, M.right, a, M.labels)
    rt = roundtrip_bijection(EM, xi=fam)
    return [lax, rt], {"xi": name, "action": _entries(a)}, []


def cmd_antipode(doc, args):
    name, H = _get(doc, args.name, ("bialgebra", "hopf"), "a bialgebra")
    corank = beta_corank(H)
    if corank:
        line = f"NOT A HOPF ALGEBRA (beta singular, corank={corank})"
        return [], {"bialgebra": name, "is_hopf": False, "beta_corank": corank}, [line]
    S = extract_antipode(H)
    R = CheckReport("antipode from beta")
    R.add("beta is invertible", True)
    if isinstance(H, HopfAlgebra):
        R.compare("extracted antipode equals the stored antipode", S, H.antipode, H.labels)
    lines = ["antipode (row, col, value):"] + [f"  {r} {c} {v}" for r, c, v in S.entries]
    return [R], {"bialgebra": name, "is_hopf": True, "beta_corank": 0,
                 "antipode": _entries(S)}, lines


def cmd_coinv(doc, args):
    name, M = _get(doc, args.object, ("equivariant_bicomodule",), "an equivariant bicomodule")
    if not isinstance(M, EquivariantBicomodule):
        raise UsageError(f"{name!r} carries no action")
    K = coinvariants(M)
    R = CheckReport(f"coinvariants of {name}")
    R.extend(check_equivariant_bicomodule(M), "input: ")
    _counit_entries(R, M, name)
    lines = [f"dim coinvariants = {K.dim}"]
    return [R], {"object": name, "dim": K.dim, "inclusion": _entries(K.inclusion)}, lines


def cmd_fundthm(doc, args):
    hname, H = _get(doc, args.bialgebra, ("bialgebra", "hopf"), "a bialgebra")
    if args.coalgebra:
        _, D = _get(doc, args.coalgebra, ("module_coalgebra",), "a module coalgebra")
        if D.H is not H:
            raise UsageError("the module coalgebra is not over the chosen bialgebra")
    else:
        D = ground_module_coalgebra(H)
    probes = hopf_module_probes(H, D)
    if args.probes == "file":
        own = [(n, o) for n, o in doc if doc.kinds[n] == "comodule_r" and o.over is D]
        probes = own or probes
    objs = [(n, o) for n, o in doc if isinstance(o, EquivariantBicomodule)
            and o.H is H and o.D is D and o.C.dim == H.dim]
    R = fundamental_theorem_check(H, D, probes, objs, budget=args.budget)
    return [R], {"bialgebra": hname, "beta_corank": beta_corank(H)}, []


def cmd_yd(doc, args):
    name, M = _get(doc, args.object, ("yd_module",), "a yd_module")
    yd = check_yd(M)
    lc = check_lax_center(M)
    reports = [yd, lc]
    agree = CheckReport("YD condition and lax-center coherences agree")
    agree.add("check_yd passes iff the lax-center checks pass", yd.ok == lc.ok,
              detail=f"yd: {yd.ok}, lax center: {lc.ok}")
    reports.append(agree)
    if yd.ok:
        reports.append(yd_roundtrip(M))
    return reports, {"object": name, "is_yd": yd.ok, "lax_center": lc.ok}, []


def cmd_cosmash(doc, args):
    name, C = _get(doc, args.coalgebra, ("module_coalgebra",), "a module coalgebra")
    HC = cosmash(C.H, C)
    text = hsc.serialize(HC, f"{name}_cosmash")
    R = check_module_coalgebra(HC)
    R.title = f"cosmash of {name}: {R.title}"
    return [R], {"coalgebra": name, "dim": HC.dim, "document": text}, [text.rstrip("\n")]


def cmd_tau(doc, args):
    sname, D = _get(doc, args.sub, ("subcoalgebra",), "a subcoalgebra")
    oname, obj = _get(doc, args.object, ("comodule_r", "equivariant_bicomodule"), "a right comodule")
    M = _as_right(obj)
    if M.over is not D.parent:
        raise UsageError(f"{oname!r} is not a comodule over the parent of {sname!r}")
    T = tau(D, M)
    R = CheckReport(f"tau_{sname}({oname})")
    R.add("tau is a D-subcomodule", check_right_comodule(T.comodule).ok,
          detail=f"dim {T.dim}, {T.steps} refinement steps")
    result = {"sub": sname, "object": oname, "dim": T.dim, "steps": T.steps,
              "history": T.history, "inclusion": _entries(T.inclusion)}
    lines = [f"dim tau = {T.dim} (refinement steps: {T.steps})"]
    if args.x:
        xname, X = _get(doc, args.x, ("comodule_r",), "a right comodule")
        C = D.parent
        if not isinstance(C, ModuleCoalgebra) or X.over is not C.H:
            raise UsageError(f"{xname!r} must be a comodule over the bialgebra acting on the parent")
        inc = check_equivariance_inclusion(C.H, C, D, X, M)
        R.add(f"{xname}⊗tau(M) inside tau({xname}⊗M)", inc.included,
              detail=f"dims {inc.dims[0]} / {inc.dims[1]}, strict: {inc.strict}")
        result["inclusion_check"] = inc.to_dict()
        lines.append(f"included: {inc.included}, strict: {inc.strict}, dims: {inc.dims}")
    return [R], result, lines


def cmd_morita(doc, args):
    mname, M = _get(doc, args.m, ("equivariant_bicomodule",), "an equivariant bicomodule")
    nname, N = _get(doc, args.n, ("equivariant_bicomodule",), "an equivariant bicomodule")
    if not isinstance(M, EquivariantBicomodule) or not isinstance(N, EquivariantBicomodule):
        raise UsageError("both bicomodules need an action")
    res = morita_witness_check(M.H, M.C, M.D, M, N, seed=args.seed, tries=args.tries)
    R = CheckReport(f"Morita witnesses for ({mname}, {nname})")
    R.add("M□N ≅ C and N□M ≅ D as equivariant bicomodules", res.verified,
          detail=f"status: {res.status}")
    out = res.to_dict()
    out.update({"m": mname, "n": nname, "seed": args.seed})
    return [R], out, [f"status: {res.status}"]


COMMANDS = {
    "check": cmd_check, "cotensor": cmd_cotensor, "xi": cmd_xi, "action": cmd_action,
    "antipode": cmd_antipode, "coinv": cmd_coinv, "fundthm": cmd_fundthm, "yd": cmd_yd,
    "cosmash": cmd_cosmash, "tau": cmd_tau, "morita": cmd_morita,
}


# ---------------------------------------------------------------------------
# zoo


def cmd_zoo(args, out):
    if args.action == "list":
        from .zoo import zoo_catalog
        cat = {e.name: e for e in zoo_catalog()}
        names = hsc.zoo_document_names()
        if args.format == "json-report":
            out.write(_dump({"command": "zoo list", "ok": True, "reports": [],
                             "result": {"names": names,
                                        "expect": {n: cat[n].expect for n in names if n in cat}}}))
        else:
            for n in names:
                out.write(n + "\n")
        return 0
    field = Field.parse(args.field)
    names = hsc.zoo_document_names() if args.name == "all" else [args.name]
    unknown = [n for n in names if n not in hsc.zoo_document_names()]
    if unknown:
        raise UsageError(f"unknown zoo entry {unknown[0]!r}")
    if args.out == "-":
        for n in names:
            out.write(hsc.serialize(hsc.zoo_document(n, field)))
        return 0
    os.makedirs(args.out, exist_ok=True)
    written = []
    for n in names:
        path = os.path.join(args.out, f"{n}.hsc")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(hsc.serialize(hsc.zoo_document(n, field)))
        written.append(path)
    if args.format == "json-report":
        out.write(_dump({"command": "zoo export", "ok": True, "reports": [],
                         "result": {"written": written}}))
    else:
        for p in written:
            out.write(f"wrote {p}\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json-report"), default=argparse.SUPPRESS)
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="hopfsc", description="Exact checks for module coalgebras, "
                                "equivariant bicomodules and their lax module functors.")
    p.add_argument("--format", choices=("text", "json-report"), default="text")
    p.add_argument("--verbose", action="store_true", default=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help):
        s = sub.add_parser(name, help=help, parents=[common])
        if name != "zoo":
            s.add_argument("file")
        return s

    s = add("check", "run the full checker suite on every block")
    s.add_argument("--name")
    s = add("cotensor", "dimension and basis of a cotensor product")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s = add("xi", "build xi from an action and check the lax axioms")
    s.add_argument("--bicomodule")
    s.add_argument("--probes", choices=("default", "file"), default="default")
    s = add("action", "recover the action from an xi block and run the round trip")
    s.add_argument("--xi")
    s = add("antipode", "antipode from beta, or the corank of beta")
    s.add_argument("--name")
    s = add("coinv", "coinvariants of an equivariant bicomodule")
    s.add_argument("--object")
    s = add("fundthm", "Hopf module equivalence on probes")
    s.add_argument("--bialgebra")
    s.add_argument("--coalgebra")
    s.add_argument("--probes", choices=("default", "file"), default="default")
    s.add_argument("--budget", type=int, default=20000)
    s = add("yd", "Yetter-Drinfeld and lax-center checks")
    s.add_argument("--object")
    s = add("cosmash", "emit the cosmash coalgebra H*#C")
    s.add_argument("--coalgebra")
    s = add("tau", "torsion subcomodule for a subcoalgebra")
    s.add_argument("--sub")
    s.add_argument("--object")
    s.add_argument("--x", help="right H-comodule for the inclusion X⊗tau(M) -> tau(X⊗M)")
    s = add("morita", "search for Morita witness isomorphisms")
    s.add_argument("--m", required=True)
    s.add_argument("--n", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tries", type=int, default=200)
    s = add("zoo", "list or export the golden documents")
    zs = s.add_subparsers(dest="action", required=True)
    zl = zs.add_parser("list", parents=[common])
    zl.set_defaults(name=None)
    ze = zs.add_parser("export", parents=[common])
    ze.add_argument("name", help="entry name or 'all'")
    ze.add_argument("--out", default="zoo", help="directory, or '-' for stdout")
    ze.add_argument("--field", default="Q")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "zoo":
            return cmd_zoo(args, out)
        doc = hsc.load(args.file)
        reports, result, lines = COMMANDS[args.command](doc, args)
    except (UsageError, hsc.HSCError, OSError) as exc:
        err.write(f"hopfsc: error: {exc}\n")
        return 2
    except HopfSCError as exc:
        err.write(f"hopfsc: error: {type(exc).__name__}: {exc}\n")
        return 2
    ok = all(r.ok for r in reports)
    if args.format == "json-report":
        out.write(_dump({
            "command": args.command,
            "file": args.file,
            "ok": ok,
            "reports": [r.to_dict() for r in reports],
            "result": result,
        }))
    else:
        for line in lines:
            out.write(line + "\n")
        # cosmash prints a document, so its verdict goes into comments
        pre = "# " if args.command == "cosmash" else ""
        for r in reports:
            for line in r.text(args.verbose).split("\n"):
                out.write(pre + line + "\n")
        if reports:
            out.write(pre + ("PASS\n" if ok else "FAIL\n"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
