"""Command line interface: generators, constructions, verifiers and exporters.

Every construction reads a quiver document on stdin (or ``--input``) and writes
one to stdout (or ``--output``), so commands compose with pipes::

    mckaycone mckay --orders 3 --weights 1,2 | mckaycone check-stq --loewy 2 --side theta
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path as FsPath

from . import interchange
from .character import FIXTURES, load_fixture, table_from_json
from .constructions import (cone, cyclic_cover, mckay_returning_arrows_rho,
                            mckay_returning_arrows_theta, t_algebra)
from .mckay import AbelianMcKaySpec, abelian_bound_mckay, mckay_quiver, nakayama_from_det
from .pathalg import QuotientEngine, stable_translation_check
from .quiver import BoundQuiver, QuiverError, render
from .truncation import (PipelinePreconditionError, is_truncation, mckay_truncation_check,
                         t_algebra_chain)

log = logging.getLogger("mckaycone")


class UsageError(Exception):
    pass


def parse_orders(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad --orders {text!r}") from None


def parse_weights(text: str, arity: int) -> tuple:
    """``1,2`` (one entry per coordinate) or ``1:0,0:1`` for several cyclic factors."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            w = tuple(int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"bad weight {item!r}") from None
        if len(w) != arity:
            raise UsageError(f"weight {item!r} needs {arity} components")
        out.append(w)
    if not out:
        raise UsageError("at least one weight is required")
    return tuple(out)


def _read_doc(args) -> BoundQuiver:
    text = FsPath(args.input).read_text() if args.input else sys.stdin.read()
    return interchange.loads(text)


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        FsPath(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit(args, b: BoundQuiver) -> int:
    _write(args, interchange.dumps(b))
    return 0


def _vertex_by_id(b: BoundQuiver, ident: str):
    for v in b.quiver.vertices:
        if render(v) == ident:
            return v
    raise UsageError(f"no vertex with id {ident!r}")


# subcommands

def cmd_mckay(args) -> int:
    if args.table:
        if args.table in FIXTURES:
            table, rep = load_fixture(args.table)
        else:
            table, rep = table_from_json(json.loads(FsPath(args.table).read_text()))
        if rep is None:
            raise UsageError("table document has no rep_character")
        q = mckay_quiver(table, rep)
        nu = nakayama_from_det(table, rep.det_values) if rep.det_values is not None else None
        return _emit(args, BoundQuiver(q, (), nu))
    if not args.orders or not args.weights:
        raise UsageError("mckay needs --orders and --weights, or --table")
    orders = parse_orders(args.orders)
    spec = AbelianMcKaySpec(orders, parse_weights(args.weights, len(orders)))
    b = abelian_bound_mckay(spec)
    return _emit(args, b.on_side(args.side) if args.side else b)


def cmd_returning(args) -> int:
    b = _read_doc(args)
    side = args.side or b.side or "rho"
    fn = mckay_returning_arrows_rho if side == "rho" else mckay_returning_arrows_theta
    return _emit(args, fn(b.on_side(side), twist=args.twist))


def cmd_cover(args) -> int:
    b = _read_doc(args)
    return _emit(args, cyclic_cover(b, args.m, side=args.side, twist=args.twist))


def cmd_cone(args) -> int:
    return _emit(args, cone(_read_doc(args)))


def cmd_t_algebra(args) -> int:
    if args.s < 1 or args.n < 1:
        raise UsageError("--s and --n must be positive")
    return _emit(args, t_algebra(args.s, args.n))


def _report_out(args, doc: dict, verdict: bool) -> int:
    _write(args, json.dumps(doc, indent=1) + "\n")
    return 0 if verdict else 1


def cmd_truncate_check(args) -> int:
    sub = interchange.loads(FsPath(args.sub).read_text()) if args.sub else _read_doc(args)
    amb = interchange.loads(FsPath(args.ambient).read_text())
    w = interchange.embedding_from_document(json.loads(FsPath(args.embedding).read_text()))
    rep = mckay_truncation_check(w, sub, amb) if args.mckay else is_truncation(w, sub, amb)
    return _report_out(args, rep.to_json(), rep.verdict)


def cmd_verify_main(args) -> int:
    try:
        results = t_algebra_chain(args.s, args.n, args.group_order, args.m, args.twist)
    except PipelinePreconditionError as e:
        return _report_out(args, {"verdict": False, "error": str(e), "precondition": e.report.to_json()}, False)
    steps = []
    for k, res in enumerate(results):
        steps.append({"verifies": f"T^{k + 2}_{args.s}", "m": res.m,
                      "group": res.extended_group.to_json(),
                      "cone_vertices": len(res.cone.quiver.vertices),
                      "cover_vertices": len(res.cover.quiver.vertices),
                      "report": res.report.to_json()})
    verdict = len(results) == args.n and all(r.verdict for r in results)
    return _report_out(args, {"verdict": verdict, "s": args.s, "n": args.n, "steps": steps}, verdict)


def cmd_dims(args) -> int:
    b = _read_doc(args).on_side(args.side)
    drop = [_vertex_by_id(b, x) for x in args.drop_vertices]
    eng = QuotientEngine(b.quiver, b.relations, args.max_degree, drop)
    dims = eng.dims()
    if eng.vanish_from is None:
        log.warning("quotient does not vanish by degree %d; dimensions are truncated", args.max_degree)
    _write(args, json.dumps(dims.to_json(), indent=1) + "\n")
    return 0


def cmd_check_stq(args) -> int:
    b = _read_doc(args).on_side(args.side)
    rep = stable_translation_check(b, args.loewy)
    doc = {"passed": rep.passed, "loewy_length": rep.loewy,
           "violations": [{"condition": c, "message": m} for c, m in rep.violations],
           "totals": rep.dims.totals() if rep.dims is not None else None}
    return _report_out(args, doc, rep.passed)


def cmd_export(args) -> int:
    b = _read_doc(args)
    _write(args, interchange.export_dot(b) if args.format == "dot" else interchange.dumps(b))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mckaycone", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def doc_io(sp, reads=True):
        if reads:
            sp.add_argument("-i", "--input", help="input document (default stdin)")
        sp.add_argument("-o", "--output", help="output file (default stdout)")

    sp = sub.add_parser("mckay", help="bound McKay quiver of a diagonal abelian group or a character table")
    sp.add_argument("--orders", help="cyclic factor orders, e.g. 3 or 2,2")
    sp.add_argument("--weights", help="weights, e.g. 1,2 or 1:0,0:1")
    sp.add_argument("--table", help=f"fixture name ({', '.join(FIXTURES)}) or table file")
    sp.add_argument("--side", choices=("rho", "theta"))
    doc_io(sp, reads=False)
    sp.set_defaults(func=cmd_mckay)

    sp = sub.add_parser("returning", help="add returning arrows (embedding into SL)")
    sp.add_argument("--side", choices=("rho", "theta"))
    sp.add_argument("--twist", type=int, default=-1, choices=(1, -1))
    doc_io(sp)
    sp.set_defaults(func=cmd_returning)

    sp = sub.add_parser("cover", help="cyclic cover of order m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--side", choices=("rho", "theta"))
    sp.add_argument("--twist", type=int, default=-1, choices=(1, -1))
    doc_io(sp)
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("cone", help="cone of a bound quiver with translation")
    doc_io(sp)
    sp.set_defaults(func=cmd_cone)

    sp = sub.add_parser("t-algebra", help="bound quiver of T^n_s")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    doc_io(sp, reads=False)
    sp.set_defaults(func=cmd_t_algebra)

    sp = sub.add_parser("truncate-check", help="check an embedding is a truncation")
    sp.add_argument("--sub", help="sub bound quiver (default stdin)")
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--embedding", required=True)
    sp.add_argument("--mckay", action="store_true", help="also check translation against Nakayama")
    doc_io(sp)
    sp.set_defaults(func=cmd_truncate_check)

    sp = sub.add_parser("verify-main", help="cone of T^n_s as a truncation of a McKay quiver cover")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--group-order", type=int, help="order of the base cyclic group (default s+1)")
    sp.add_argument("--m", type=int, help="cover order of the last step (default minimal)")
    sp.add_argument("--twist", type=int, default=-1, choices=(1, -1))
    doc_io(sp, reads=False)
    sp.set_defaults(func=cmd_verify_main)

    sp = sub.add_parser("dims", help="graded dimensions of kQ/(rho, E)")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--drop-vertices", nargs="*", default=[], metavar="ID")
    sp.add_argument("--side", choices=("rho", "theta"))
    doc_io(sp)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("check-stq", help="stable translation quiver conditions")
    sp.add_argument("--loewy", type=int, help="top degree l (default loewy_length - 1)")
    sp.add_argument("--side", choices=("rho", "theta"))
    doc_io(sp)
    sp.set_defaults(func=cmd_check_stq)

    sp = sub.add_parser("export", help="render a document as DOT or canonical JSON")
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    doc_io(sp)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except (QuiverError, interchange.DocumentError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
