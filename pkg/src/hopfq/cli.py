"""Command line interface: ``hopfq <command> [args] [--field F] [--out DIR] [--seed N]``.

Exit status is 0 when every check passes, 1 when some check fails and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .comodules import ComoduleMagma, NotAMorphism, NotCocommutative, bullet, verify_comodule_magma
from .exactlin import FieldSpec, LinAlgError
from .galois import (
    NotGalois,
    UnsupportedField,
    ZeroObject,
    aut_grouplike_bijection,
    bullet_galois,
    default_seed,
    h_iso,
    make_galois,
    normal_basis,
)
from .gnb import gnb_from_galois, gnb_product, verify_gnb
from .loops import BudgetExceeded, LoopError, enumerate_ip_loops, loop_from_table
from .report import Report
from .structures import HopfQuasigroup, associativity_probe, loop_algebra, verify_hopf_quasigroup

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(args):
    if args.field is None:
        return None
    try:
        return FieldSpec.parse(args.field)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _out(args, default=None):
    d = args.out or default
    if d is None:
        return None
    p = Path(d)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _emit(args, rep: Report, extra=None):
    if args.json:
        d = rep.to_dict()
        if extra:
            d.update(extra)
        print(json.dumps(d, indent=1))
    else:
        print(rep.render())
        for k, v in (extra or {}).items():
            print(f"{k}: {v}")
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _galois_or_fail(a, title):
    try:
        return make_galois(a), None
    except (NotGalois, ZeroObject) as e:
        rep = Report(title)
        rep.flag("galois", False, note=str(e))
        return None, rep


# -- commands ---------------------------------------------------------------------


def cmd_check(args):
    p = io.resolve(args.path)
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise io.FormatError(f"invalid JSON ({e.msg}, line {e.lineno})", str(p)) from None
    if isinstance(doc, dict) and doc.get("kind") == "loop_table":
        rep = Report(f"loop table {p.name}")
        try:
            loop = loop_from_table(doc.get("table", []))
        except LoopError as e:
            witness = (e.u, e.v) if hasattr(e, "u") else None
            rep.flag(type(e).__name__, False, witness=witness, note=str(e))
            return _emit(args, rep)
        rep.flag("valid I.P. loop", True)
        f = _field(args) or FieldSpec()
        rep.extend(verify_hopf_quasigroup(loop_algebra(loop, f)))
        return _emit(args, rep, {"associative": loop.is_associative(), "commutative": loop.is_commutative()})
    obj = io.load(p, _field(args))
    if isinstance(obj, HopfQuasigroup):
        rep = verify_hopf_quasigroup(obj)
        probe = associativity_probe(obj.magma)
        return _emit(args, rep, {"associative": probe.passed})
    if isinstance(obj, ComoduleMagma):
        return _emit(args, verify_comodule_magma(obj))
    raise UsageError(f"nothing to check in a {type(obj).__name__} file")


def cmd_galois(args):
    a = io.load_comodule(args.path, _field(args))
    g, fail = _galois_or_fail(a, f"Galois object {a.name}")
    if fail:
        return _emit(args, fail)
    out = _out(args)
    if out:
        io.save(g.gamma, out / "gamma.json", note="canonical map")
        io.save(g.gamma_inv, out / "gamma_inv.json", note="inverse canonical map")
        io.save(g.f_map, out / "f_map.json", note="gamma inverse applied to 1 (x) H")
    return _emit(args, g.report, {"strong": g.strong})


def cmd_product(args):
    f = _field(args)
    a = io.load_comodule(args.path, f)
    b = io.load_comodule(args.other, f)
    out = _out(args, ".")
    try:
        ga, gb = make_galois(a), make_galois(b)
    except (NotGalois, ZeroObject):
        ga = gb = None
    if ga is not None:
        prod = bullet_galois(ga, gb)
        rep, res, inc = prod.report, prod.result.base, prod.inclusion
        extra = {"dim": res.dim, "strong": prod.result.strong}
        rep.extend(prod.result.report, prefix="product: ")
    else:
        bp = bullet(a, b)
        res, inc = bp.result, bp.inclusion
        rep = verify_comodule_magma(res)
        extra = {"dim": res.dim}
    io.save(inc, out / "inclusion.json", note="equalizer inclusion into the tensor product")
    io.save(res, out / "product.json")
    return _emit(args, rep, extra)


def cmd_inverse_class(args):
    a = io.load_comodule(args.path, _field(args))
    g, fail = _galois_or_fail(a, f"inverse class of {a.name}")
    if fail:
        return _emit(args, fail)
    ic = h_iso(g)
    out = _out(args, ".")
    io.save(ic.opposite.base, out / "opposite.json")
    io.save(ic.h, out / "h.json", note="A.op(A) -> H")
    io.save(ic.h_inv, out / "h_inv.json", note="H -> A.op(A)")
    (out / "report.json").write_text(json.dumps(ic.report.to_dict(), indent=1) + "\n", encoding="utf-8")
    return _emit(args, ic.report, {"strong": g.strong})


def cmd_normal_basis(args):
    a = io.load_comodule(args.path, _field(args))
    res = normal_basis(a, seed=args.seed)
    rep = Report(f"normal basis for {a.name}")
    rep.flag("normal basis", res.found, note=f"{res.status}: {res.certificate}")
    out = _out(args)
    if out and res.found:
        io.save(res.morphism, out / "normal_basis.json", note="comodule isomorphism A -> H")
    return _emit(args, rep, {"status": res.status, "solution space dim": res.dimension})


def cmd_grouplikes(args):
    h = io.load_hopf(args.path, _field(args))
    b = aut_grouplike_bijection(h)
    rep = b.report
    if args.json:
        extra = {
            "grouplikes": [[h.field.format_scalar(x) for x in g.data[:, 0]] for g in b.grouplikes],
            "table": b.table,
            "automorphisms": [a.to_strings() for a in b.automorphisms],
        }
        return _emit(args, rep, extra)
    print(f"{len(b.grouplikes)} grouplike(s) in the dual of {h.name}")
    for k, g in enumerate(b.grouplikes):
        vals = " ".join(h.field.format_scalar(x) for x in g.data[:, 0])
        diag = b.automorphisms[k].to_strings()
        print(f"  [{k}] values ({vals})  automorphism {diag}")
    print("convolution table:")
    for row in b.table:
        print("  " + " ".join(str(x) for x in row))
    return _emit(args, rep)


def cmd_enumerate_loops(args):
    if args.order < 1:
        raise UsageError("order must be positive")
    try:
        loops = enumerate_ip_loops(args.order, limit=args.limit)
    except BudgetExceeded as e:
        raise UsageError(str(e)) from None
    out = _out(args)
    nonassoc = 0
    for k, loop in enumerate(loops):
        assoc = loop.is_associative()
        nonassoc += not assoc
        if out:
            io.save(loop, out / f"loop{args.order}_{k + 1:04d}.json", note="associative" if assoc else "nonassociative")
    rep = Report(f"I.P. loops of order {args.order}")
    rep.flag("enumeration", True, note=f"{len(loops)} normalized tables, {nonassoc} nonassociative")
    return _emit(args, rep, {"count": len(loops), "nonassociative": nonassoc})


def cmd_gnb(args):
    f = _field(args)
    a = io.load_comodule(args.path, f)
    ga, fail = _galois_or_fail(a, f"geometric normal basis for {a.name}")
    if fail:
        return _emit(args, fail)
    w = gnb_from_galois(ga)
    rep = verify_gnb(w)
    if args.other is None:
        return _emit(args, rep)
    b = io.load_comodule(args.other, f)
    gb, fail = _galois_or_fail(b, f"geometric normal basis for {b.name}")
    if fail:
        return _emit(args, fail)
    rep.extend(verify_gnb(gnb_from_galois(gb)), prefix="right: ")
    prod = gnb_product(w, gnb_from_galois(gb))
    rep.extend(prod.report, prefix="product: ")
    return _emit(args, rep, {"scaffold dim": prod.witness.scaffold.dim, "dim": prod.witness.comodule.dim})


# -- parser ----------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q or Fp:<p>; reinterprets the input over this field")
    common.add_argument("--out", help="directory for output files")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized searches (HOPFQ_SEED wins)")
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    p = argparse.ArgumentParser(prog="hopfq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *pos):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for arg, kw in pos:
            sp.add_argument(arg, **kw)
        sp.set_defaults(func=fn)
        return sp

    structure = {"help": "structure file or bundled name (qz2, qz3, qs3, f7z3, ...)"}
    add("check", cmd_check, "verify the axioms of a structure file", ("path", structure))
    add("galois", cmd_galois, "canonical map, its inverse and the strong flag", ("path", structure))
    add("product", cmd_product, "bullet product of two comodule magmas", ("path", structure), ("other", structure))
    add("inverse_class", cmd_inverse_class, "opposite object and A.op(A) -> H", ("path", structure))
    add("normal_basis", cmd_normal_basis, "search for a comodule isomorphism onto H", ("path", structure))
    add("grouplikes", cmd_grouplikes, "grouplikes of the dual and automorphisms of H", ("path", structure))
    sp = add("enumerate_loops", cmd_enumerate_loops, "enumerate normalized I.P. loops", ("order", {"type": int}))
    sp.add_argument("--limit", type=int, default=10**9)
    add("gnb", cmd_gnb, "geometric normal basis witnesses", ("path", structure),
        ("other", {"nargs": "?", "default": None, **structure}))
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_PASS
    args.seed = default_seed(args.seed)
    try:
        return args.func(args)
    except (UsageError, io.FormatError, FileNotFoundError, LinAlgError, UnsupportedField,
            NotCocommutative, NotAMorphism) as e:
        print(f"hopfq: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"hopfq: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
