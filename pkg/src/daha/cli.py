"""Command-line front end.

Verbs:

    e         nonsymmetric Macdonald polynomial for a weight
    p         symmetric Macdonald polynomial for a dominant weight
    y         apply a Y-operator to a polynomial given as JSON
    verify    relation / property suites (hecke, braid, xcommute,
              symmetrizer, order, demazure)
    order     compare two weights in the Cherednik order
    demazure  iterated Demazure-operator character
    sl2       the module laboratory (build, char, validate)

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .roots import root_system
from .polyring import (
    QTLaurent,
    integral_form,
    laurent_from_json,
    laurent_to_json,
    laurent_to_latex,
    laurent_to_text,
)
from .hecke import (
    demazure_char,
    verify_demazure,
    verify_relations,
    verify_symmetrizer,
    y_op,
)
from . import macdonald
from . import sl2 as sl2lab


def _parse_weight(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(","))


def _emit(f: QTLaurent, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(laurent_to_json(f), separators=(",", ":"))
    if fmt == "latex":
        return laurent_to_latex(f)
    return laurent_to_text(f)


def _cmd_e(args) -> int:
    rs = root_system(args.type)
    for weight in args.weight:
        lam = _parse_weight(weight)
        res = macdonald.nonsym_e(rs, lam)
        poly = res.e_poly
        if args.integral:
            poly = integral_form(poly, lam)
        line = _emit(poly, args.format)
        if len(args.weight) > 1:
            line = f"{weight}: {line}"
        print(line)
        if res.conjectural and args.format == "text":
            print(
                f"# note: {lam} is not dominant; the eigenvalue formula is conjecture-level",
                file=sys.stderr,
            )
    return 0


def _e_one(payload):
    type_name, weight, do_integral, fmt = payload
    rs = root_system(type_name)
    lam = _parse_weight(weight)
    poly = macdonald.nonsym_e(rs, lam).e_poly
    if do_integral:
        poly = integral_form(poly, lam)
    return weight, _emit(poly, fmt)


def _cmd_e_parallel(args) -> int:
    payloads = [(args.type, w, args.integral, args.format) for w in args.weight]
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        for weight, line in pool.map(_e_one, payloads):
            print(f"{weight}: {line}" if len(args.weight) > 1 else line)
    return 0


def _cmd_p(args) -> int:
    rs = root_system(args.type)
    for weight in args.weight:
        lam = _parse_weight(weight)
        f = macdonald.sym_p(rs, lam)
        line = _emit(f, args.format)
        print(f"{weight}: {line}" if len(args.weight) > 1 else line)
    return 0


def _cmd_y(args) -> int:
    rs = root_system(args.type)
    mu = _parse_weight(args.mu)
    if args.apply == "-":
        data = json.load(sys.stdin)
    else:
        data = json.loads(args.apply)
    f = laurent_from_json(rs, data)
    print(_emit(y_op(rs, mu, f), args.format))
    return 0


def _cmd_verify(args) -> int:
    rs = root_system(args.type)
    if args.subject == "hecke":
        report = verify_relations(rs, args.bound)
    elif args.subject == "braid":
        full = verify_relations(rs, args.bound)
        report = type(full)(full.title)
        report.checks = [c for c in full.checks if c[0].startswith("braid")]
    elif args.subject == "xcommute":
        full = verify_relations(rs, args.bound)
        report = type(full)(full.title)
        report.checks = [c for c in full.checks if c[0].startswith("x-")]
    elif args.subject == "symmetrizer":
        report = verify_symmetrizer(rs, args.bound)
    elif args.subject == "demazure":
        report = verify_demazure(rs, args.bound)
    elif args.subject == "order":
        from .orders import verify_order
        report = verify_order(rs, args.bound)
    else:
        print(f"unknown verify subject {args.subject}", file=sys.stderr)
        return 2
    print(report.title)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _cmd_order(args) -> int:
    rs = root_system(args.type)
    a, b = _parse_weight(args.a), _parse_weight(args.b)
    print(rs.cherednik_cmp(a, b))
    return 0


def _cmd_demazure(args) -> int:
    rs = root_system(args.type)
    word = tuple(int(p) for p in args.word.split(",")) if args.word else ()
    lam = _parse_weight(args.weight)
    print(_emit(demazure_char(rs, word, lam), args.format))
    return 0


def _cmd_sl2(args) -> int:
    if args.action == "build":
        rep = sl2lab.fusion(args.k)
        rep.check_brackets()
        print(f"fusion({args.k}): dimension {rep.dim}, cyclic, brackets verified")
        return 0
    if args.action == "char":
        f = sl2lab.graded_character(sl2lab.fusion(args.k))
        print(_emit(f, args.format))
        return 0
    if args.action == "validate":
        reports = sl2lab.cross_validate(args.k)
        ok = True
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} k={r.k}: dim {r.dimension}, char {laurent_to_text(r.character)}")
            for name, good, detail in r.checks:
                if not good:
                    ok = False
                    print(f"  FAIL {name}: {detail}")
        return 0 if ok else 1
    print(f"unknown sl2 action {args.action}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="daha", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="verb")

    def common(p, weights=False):
        p.add_argument("--type", required=True, help="root system name (A1, A2, B2, C2, A1xA1, A3, ...)")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        if weights:
            p.add_argument("--weight", required=True, nargs="+",
                           help="weight(s) as comma-separated fundamental-weight coordinates")
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel workers across independent weights")

    pe = sub.add_parser("e", help="nonsymmetric Macdonald polynomial")
    common(pe, weights=True)
    pe.add_argument("--integral", action="store_true", help="integral form")

    pp = sub.add_parser("p", help="symmetric Macdonald polynomial")
    common(pp, weights=True)

    py = sub.add_parser("y", help="apply Y^mu to a polynomial")
    common(py)
    py.add_argument("--mu", required=True, help="coroot vector, comma-separated")
    py.add_argument("--apply", required=True, help="polynomial JSON (or - for stdin)")

    pv = sub.add_parser("verify", help="relation/property suites")
    pv.add_argument("subject", choices=("hecke", "braid", "xcommute", "symmetrizer", "order", "demazure"))
    pv.add_argument("--type", required=True)
    pv.add_argument("--bound", type=int, default=3)

    po = sub.add_parser("order", help="Cherednik order comparison")
    po.add_argument("action", choices=("cmp",))
    po.add_argument("--type", required=True)
    po.add_argument("--a", required=True)
    po.add_argument("--b", required=True)

    pd = sub.add_parser("demazure", help="iterated Demazure character")
    common(pd)
    pd.add_argument("--word", default="", help="word over finite indices, comma-separated")
    pd.add_argument("--weight", required=True)

    ps = sub.add_parser("sl2", help="module laboratory")
    ps.add_argument("action", choices=("build", "char", "validate"))
    ps.add_argument("-k", type=int, default=2)
    ps.add_argument("--format", choices=("text", "json", "latex"), default="text")

    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.verb is None:
        ap.print_usage()
        return 2
    try:
        if args.verb == "e":
            if getattr(args, "jobs", 1) > 1 and len(args.weight) > 1:
                return _cmd_e_parallel(args)
            return _cmd_e(args)
        if args.verb == "p":
            return _cmd_p(args)
        if args.verb == "y":
            return _cmd_y(args)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "order":
            return _cmd_order(args)
        if args.verb == "demazure":
            return _cmd_demazure(args)
        if args.verb == "sl2":
            return _cmd_sl2(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
