"""Command line reports.

Every command prints either CSV or JSON.  Rationals are written as
``a/b``.  Exit status: 0 when every checked bound holds, 1 when some bound
fails, 2 on bad input.

CSV columns
-----------
verify-theorem : element,N,k,sup_defect,bound,witness,mode,pass
ext            : s,x,N,n,eta_defect,nu_defect,total_defect,bound_ok
amenability    : germ,kind,n,defect,bound,pass
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import CapExceeded, ThompsonError
from .germs import (
    CantorGerm,
    cantor_bound,
    compose_germs,
    condition_ii_defect_cantor,
    condition_ii_defect_dyadic,
    dyadic_bound,
    germ_at,
    germ_equal,
    invert_germ,
    parse_germ,
    phi_tilde,
    standard_germ_set,
)
from .measures import DEFAULT_CAP, DefectReport, sampled_sup_defect, sup_defect
from .relam import ext_defect
from .thompson import (
    PrefixMap,
    abelianization,
    is_in_F,
    is_in_T,
    k_of,
    load_element,
    parse_word,
    slope_exponents,
)
from .words import DyadicPoint, EPWord, format_rational, phi

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _int_list(values) -> list[int]:
    out = []
    for v in values or []:
        out.extend(int(part) for part in str(v).split(",") if part.strip())
    return out


def _elements(args) -> list[tuple[str, PrefixMap]]:
    out = [(w, parse_word(w)) for w in args.word or []]
    out += [(path, load_element(path)) for path in args.element or []]
    if not out:
        raise ThompsonError("no element given (use --word or --element)")
    return out


def _point(text: str):
    x = EPWord.parse(text)
    return DyadicPoint(x.preperiod) if x.is_dyadic else x


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish(header, rows, ok_column) -> int:
    """Exit status for a table; failing rows are named on stderr."""
    col = header.index(ok_column)
    bad = [i for i, r in enumerate(rows, start=1) if not r[col]]
    for i in bad:
        print(f"violation: row {i}: " + ",".join(map(str, rows[i - 1])), file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _table_output(args, header, rows) -> str:
    if args.format == "json":
        return _json([dict(zip(header, r)) for r in rows])
    return _csv(header, rows)


def cmd_element(args) -> int:
    docs = []
    for name, s in _elements(args):
        doc = {
            "element": name,
            "pairs": [list(p) for p in s.pairs],
            "in_V": True,
            "in_T": is_in_T(s),
            "in_F": is_in_F(s),
            "k": k_of(s),
            "slopes": {},
            "abelianization": list(abelianization(s)) if is_in_F(s) else None,
        }
        for text in args.at or []:
            d = DyadicPoint.parse(text)
            doc["slopes"][str(d)] = list(slope_exponents(s, d))
        docs.append(doc)
    if args.format == "csv":
        header = ["element", "pairs", "in_T", "in_F", "k", "abelianization"]
        rows = [
            [d["element"], json.dumps(d["pairs"]), d["in_T"], d["in_F"], d["k"],
             "" if d["abelianization"] is None else "({},{})".format(*d["abelianization"])]
            for d in docs
        ]
        _emit(args, _csv(header, rows))
    else:
        _emit(args, _json(docs if len(docs) > 1 else docs[0]))
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    Ns = _int_list(args.N) or [4, 8, 16]
    header = ["element", "N", "k", "sup_defect", "bound", "witness", "mode", "pass"]
    rows = []
    for name, s in _elements(args):
        for N in Ns:
            try:
                report = sup_defect(s, N, cap=args.cap)
            except CapExceeded:
                if args.seed is None:
                    raise ThompsonError(f"{name} at N={N} exceeds the cap; sampling needs --seed")
                k = k_of(s)
                report = DefectReport(s, N, k, sampled_sup_defect(s, N, args.samples, args.seed),
                                      Fraction(4 * k, N), "", exact=False)
            d = report.to_dict(name)
            rows.append([d[h] for h in header])
    _emit(args, _table_output(args, header, rows))
    return _finish(header, rows, "pass")


def cmd_ext(args) -> int:
    header = ["s", "x", "N", "n", "eta_defect", "nu_defect", "total_defect", "bound_ok"]
    rows = []
    xs = [EPWord.parse(t) for t in args.x] if args.x else [EPWord("", "1")]
    for name, s in _elements(args):
        for x in xs:
            for N in _int_list(args.N) or [8]:
                for n in _int_list(args.n) or [4]:
                    r = ext_defect(s, x, N, n)
                    rows.append([name, str(x), N, n, format_rational(r.eta_defect),
                                 format_rational(r.nu_defect), format_rational(r.total_defect),
                                 r.telescoping_ok])
    _emit(args, _table_output(args, header, rows))
    return _finish(header, rows, "bound_ok")


def _germ_doc(g) -> dict:
    kind = "cantor" if isinstance(g, CantorGerm) else "dyadic"
    return {"germ": str(g), "kind": kind}


def cmd_germ(args) -> int:
    op = args.op
    if op == "at":
        (_, g), = _elements(args)
        x = phi(Fraction(args.theta)) if args.theta else _point(args.x)
        doc = _germ_doc(germ_at(g, x))
    elif op == "equal":
        (_, g), (_, h) = _elements(args)
        x = phi(Fraction(args.theta)) if args.theta else _point(args.x)
        doc = {"equal": germ_equal(g, h, x)}
    elif op == "compose":
        a, b = (parse_germ(t) for t in args.germ)
        doc = _germ_doc(compose_germs(a, b))
    elif op == "invert":
        (a,) = (parse_germ(t) for t in args.germ)
        doc = _germ_doc(invert_germ(a))
    else:
        (_, g), = _elements(args)
        doc = _germ_doc(phi_tilde(g, Fraction(args.theta)))
    _emit(args, _json(doc))
    return EXIT_OK


def cmd_amenability(args) -> int:
    germs = [parse_germ(t) for t in args.germ] if args.germ else standard_germ_set()
    ns = _int_list(args.n) or [4, 8, 16, 32]
    header = ["germ", "kind", "n", "defect", "bound", "pass"]
    rows = []
    for g in germs:
        previous = None
        for n in ns:
            if isinstance(g, CantorGerm):
                defect, bound, kind = condition_ii_defect_cantor(g, n), cantor_bound(g, n), "cantor"
            else:
                defect, bound, kind = condition_ii_defect_dyadic(g, n), dyadic_bound(g, n), "dyadic"
            passed = defect <= bound and (previous is None or defect <= previous)
            previous = defect
            rows.append([str(g), kind, n, format_rational(defect), format_rational(bound), passed])
    _emit(args, _table_output(args, header, rows))
    return _finish(header, rows, "pass")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompsonkit",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt="csv"):
        p.add_argument("--word", action="append", help='group word, e.g. "A*B^-1*rot:1/2"')
        p.add_argument("--element", action="append", help='JSON file {"pairs": [["0","00"], ...]}')
        p.add_argument("--format", choices=["csv", "json"], default=fmt)
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("element", help="table, memberships, k(s), slopes")
    common(p, fmt="json")
    p.add_argument("--at", action="append", help='dyadic point such as "1(0)" for slope pairs')
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("verify-theorem", help="exact sup defect of mu_N against 4k/N")
    common(p)
    p.add_argument("--N", action="append", help="comma separated or repeated")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("ext", help="defect split of the composed T/[F,F] map")
    common(p)
    p.add_argument("--x", action="append", help='point such as "(1)" or "1(01)"')
    p.add_argument("--N", action="append")
    p.add_argument("--n", action="append")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("germ", help="germ construction, composition, equality")
    common(p, fmt="json")
    p.add_argument("op", choices=["at", "equal", "compose", "invert", "phi"])
    p.add_argument("--x", help="point as an EPWord, e.g. (01) or 1(0)")
    p.add_argument("--theta", help="rational circle point, e.g. 1/3")
    p.add_argument("--germ", action="append", help='"x ==k==> y" or "x --(a,b)--> y"')
    p.set_defaults(func=cmd_germ)

    p = sub.add_parser("amenability", help="condition (ii) defects of fiber measures")
    p.add_argument("--germ", action="append")
    p.add_argument("--n", action="append")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_amenability)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", DEFAULT_CAP) > DEFAULT_CAP:
        parser.error(f"--cap may not exceed {DEFAULT_CAP}")
    try:
        return args.func(args)
    except (ThompsonError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
