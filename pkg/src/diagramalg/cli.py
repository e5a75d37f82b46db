"""Command-line interface.

Subcommands cover diagram multiplication, basis and module enumeration,
representation matrices, characters, character tables, and a self-check
suite.  Exit codes: 0 on success, 1 for domain errors (bad diagrams,
labels outside a family, caps), 2 for usage errors.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import characters, diagrams, irreps, symrep
from .coeff import Element, LaurentPoly
from .errors import DiagramAlgebraError
from .partitions import lambda_star_labels, rank_set


def _family_type(text):
    try:
        return diagrams.normalize_family(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition_type(text):
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.replace(",", " ").strip()
    if not body:
        return ()
    try:
        parts = tuple(sorted((int(tok) for tok in body.split()), reverse=True))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected a partition like [2,1], got %r" % (text,)
        ) from None
    if any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(
            "partition parts must be positive, got %r" % (text,)
        )
    return parts


def _fraction_type(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "expected a rational number, got %r" % (text,)
        ) from None


def _basis_type(text):
    try:
        return irreps._normalize_basis(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text, out_path):
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _diagram_json(d):
    return {"k": d.k, "blocks": [list(b) for b in d.blocks]}


def _element_json(elem):
    return [
        {"coeff": c.to_json_obj(), "diagram": _diagram_json(d)}
        for d, c in elem.terms()
    ]


def _tableau_json(tab):
    return {
        "lambda_star": list(tab.lambda_star),
        "first_row": [list(b) for b in tab.first_row],
        "body": [[list(b) for b in row] for row in tab.body],
    }


def _cmd_mul(args):
    lhs = diagrams.parse_diagram(args.lhs, args.k)
    rhs = diagrams.parse_diagram(args.rhs, args.k)
    product = Element.from_diagram(lhs, args.family) * Element.from_diagram(
        rhs, args.family
    )
    if args.format == "json":
        if args.n is not None:
            payload = [
                {
                    "coeff": {"num": c.numerator, "den": c.denominator},
                    "diagram": _diagram_json(d),
                }
                for d, c in product.evaluate(args.n).items()
            ]
        else:
            payload = _element_json(product)
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
        return 0
    lines = []
    if args.n is not None:
        for d, c in product.evaluate(args.n).items():
            lines.append("%s * %s" % (c, d.text()))
    else:
        for d, c in product.terms():
            lines.append("%s * %s" % (c, d.text()))
    _emit("\n".join(lines) if lines else "0", args.out)
    return 0


def _cmd_basis(args):
    basis = diagrams.enumerate_basis(args.family, args.k)
    if args.format == "json":
        payload = {
            "family": args.family,
            "k": args.k,
            "count": len(basis),
            "diagrams": [_diagram_json(d) for d in basis],
        }
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
        return 0
    _emit("\n".join(d.text() for d in basis), args.out)
    return 0


def _cmd_dims(args):
    labels = lambda_star_labels(args.family, args.k)
    lines = []
    total = 0
    for lam in labels:
        m = sum(lam)
        count_w = len(irreps.enumerate_symmetric(args.family, args.k, m))
        f = symrep.sym_dim(lam)
        dim = count_w * f
        total += dim * dim
        lines.append(
            "lambda_star=%s m=%d symmetric=%d tableaux=%d dim=%d"
            % (characters.format_partition(lam), m, count_w, f, dim)
        )
    alg = diagrams.algebra_dim(args.family, args.k)
    lines.append(
        "sum_of_squares=%d algebra_dim=%d ok=%s"
        % (total, alg, "true" if total == alg else "false")
    )
    _emit("\n".join(lines), args.out)
    return 0 if total == alg else 1


def _cmd_symdiag(args):
    ws = irreps.enumerate_symmetric(args.family, args.k, args.m)
    if args.format == "json":
        payload = [
            {
                "top": [list(b) for b in w.top],
                "propagating": [list(b) for b in w.propagating],
            }
            for w in ws
        ]
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
        return 0
    _emit("\n".join(w.text() for w in ws), args.out)
    return 0


def _cmd_sspt(args):
    tabs = irreps.enumerate_sspt(args.family, args.k, args.lambda_star)
    if args.format == "json":
        payload = [_tableau_json(t) for t in tabs]
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
        return 0
    _emit("\n".join(t.text() for t in tabs), args.out)
    return 0


def _cmd_irrep(args):
    d = diagrams.parse_diagram(args.d, args.k)
    mat = irreps.rep_matrix_irrep(
        d, args.family, args.k, args.lambda_star, args.basis
    )
    if args.n is not None:
        values = [[entry.evaluate(args.n) for entry in row] for row in mat]
        if args.format == "json":
            payload = [
                [{"num": v.numerator, "den": v.denominator} for v in row]
                for row in values
            ]
            _emit(json.dumps(payload, separators=(",", ":")), args.out)
            return 0
        _emit(
            "\n".join(", ".join(str(v) for v in row) for row in values),
            args.out,
        )
        return 0
    if args.format == "json":
        payload = [[entry.to_json_obj() for entry in row] for row in mat]
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
        return 0
    _emit(
        "\n".join(", ".join(str(entry) for entry in row) for row in mat),
        args.out,
    )
    return 0


def _cmd_char(args):
    value = characters.irr_character(
        args.family, args.k, args.lambda_star, args.kappa, args.s
    )
    _emit(str(value), args.out)
    return 0


def _cmd_table(args):
    table = characters.character_table(args.family, args.k)
    if args.format == "json":
        _emit(table.to_json(factor=args.factor), args.out)
        return 0
    if args.format == "csv":
        _emit(table.to_csv(factor=args.factor), args.out)
        return 0
    text = table.to_text()
    if args.factor:
        fac = table.factor()
        text += "\ns_block:\n"
        text += "\n".join(
            "  ".join(str(v) for v in row) for row in fac.s_block
        )
        text += "\n\nf_block:\n"
        text += "\n".join(
            "  ".join(str(v) for v in row) for row in fac.f_block
        )
    _emit(text, args.out)
    return 0


def _suite_ring_axioms(family, k, rng, cases, report):
    basis = diagrams.enumerate_basis(family, k)
    ident = Element.identity(k, family)
    ok = True
    for _ in range(cases):
        a, b, c = (
            Element.from_diagram(rng.choice(basis), family) for _ in range(3)
        )
        if (a * b) * c != a * (b * c):
            report("FAIL ring-axioms: associativity broke")
            ok = False
        if a * (b + c) != a * b + a * c:
            report("FAIL ring-axioms: left distributivity broke")
            ok = False
        if (b + c) * a != b * a + c * a:
            report("FAIL ring-axioms: right distributivity broke")
            ok = False
        if ident * a != a or a * ident != a:
            report("FAIL ring-axioms: identity broke")
            ok = False
    if ok:
        report(
            "ok ring-axioms (%s, k=%d, %d random triples)" % (family, k, cases)
        )
    return ok


def _suite_module_axiom(family, k, rng, cases, report):
    basis = diagrams.enumerate_basis(family, k)
    labels = lambda_star_labels(family, k)
    ok = True
    for _ in range(cases):
        a = rng.choice(basis)
        b = rng.choice(basis)
        lam = rng.choice(labels)
        cols_a = irreps.rep_columns(a, family, k, lam)
        cols_b = irreps.rep_columns(b, family, k, lam)
        prod, deleted = diagrams.concat(a, b)
        cols_ab = irreps.rep_columns(prod, family, k, lam)
        scale = LaurentPoly.monomial(deleted)
        scaled = [
            {i: scale * c for i, c in col.items()} for col in cols_ab
        ]
        if irreps.compose_columns(cols_a, cols_b) != scaled:
            report(
                "FAIL module-axiom: M(a)M(b) != M(ab) at %s, k=%d, %s"
                % (family, k, characters.format_partition(lam))
            )
            ok = False
    if ok:
        report(
            "ok module-axiom (%s, k=%d, %d random pairs)" % (family, k, cases)
        )
    return ok


_FAMILY_GENERATORS = {
    diagrams.PARTITION: "SPBELR",
    diagrams.SYMMETRIC_GROUP: "S",
    diagrams.ROOK: "SPLR",
    diagrams.BRAUER: "SE",
    diagrams.ROOK_BRAUER: "SPELR",
    diagrams.TEMPERLEY_LIEB: "E",
    diagrams.MOTZKIN: "ELR",
    diagrams.PLANAR_ROOK: "LR",
}


def family_generators(family, k):
    """The standard generating diagrams of the family at k strands."""
    family = diagrams.normalize_family(family)
    if family == diagrams.PLANAR_PARTITION:
        kinds = "PBELR"
    else:
        kinds = _FAMILY_GENERATORS[family]
    out = []
    for kind in kinds:
        hi = k if kind == "P" else k - 1
        for i in range(1, hi + 1):
            out.append(diagrams.generator(kind, i, k))
    return out


def _suite_basis_equivalence(family, k, report):
    ok = True
    for lam in lambda_star_labels(family, k):
        for g in family_generators(family, k):
            twisted = irreps.rep_columns(g, family, k, lam, "Twisted")
            tableau = irreps.rep_columns(g, family, k, lam, "Tableau")
            if twisted != tableau:
                report(
                    "FAIL basis-equivalence: %s at %s, k=%d, %s"
                    % (
                        g.text(),
                        family,
                        k,
                        characters.format_partition(lam),
                    )
                )
                ok = False
    if ok:
        report("ok basis-equivalence (%s, k=%d)" % (family, k))
    return ok


def _suite_wedderburn(family, k, report):
    total = 0
    for lam in lambda_star_labels(family, k):
        count_w = len(irreps.enumerate_symmetric(family, k, sum(lam)))
        dim = count_w * symrep.sym_dim(lam)
        total += dim * dim
    alg = diagrams.algebra_dim(family, k)
    if total == alg:
        report("ok wedderburn (%s, k=%d, dim=%d)" % (family, k, alg))
        return True
    report(
        "FAIL wedderburn: %s, k=%d, sum of squares %d != %d"
        % (family, k, total, alg)
    )
    return False


def _suite_fixedpoint(family, k, report):
    ok = True
    for kappa in characters.class_labels(family, k):
        if sum(kappa) != k:
            continue
        for m in rank_set(family, k):
            counted = characters.fixed_points(family, k, m, kappa)
            for mu, ws in counted.items():
                if len(ws) != characters.f_coeff(family, kappa, mu):
                    report(
                        "FAIL fixedpoint-vs-formula: %s k=%d kappa=%s mu=%s"
                        % (
                            family,
                            k,
                            characters.format_partition(kappa),
                            characters.format_partition(mu),
                        )
                    )
                    ok = False
    if ok:
        report("ok fixedpoint-vs-formula (%s, k=%d)" % (family, k))
    return ok


def _suite_table_regression(report):
    ok = True
    for (family, k), ref in sorted(characters.REFERENCE_TABLES.items()):
        table = characters.character_table(family, k)
        if (
            table.row_labels != ref["rows"]
            or table.col_labels != ref["cols"]
            or table.values != ref["values"]
        ):
            report("FAIL table-regression: %s, k=%d" % (family, k))
            ok = False
            continue
        fac = table.factor()
        size = len(table.row_labels)
        product = [
            [
                sum(
                    fac.s_block[i][l] * fac.f_block[l][j] for l in range(size)
                )
                for j in range(len(table.col_labels))
            ]
            for i in range(size)
        ]
        if product != table.values:
            report(
                "FAIL table-regression: factorization at %s, k=%d"
                % (family, k)
            )
            ok = False
    if ok:
        report("ok table-regression (%d frozen tables)" % len(
            characters.REFERENCE_TABLES
        ))
    return ok


def _suite_determinant(family, k, report):
    check = characters.table_determinant_check(family, k)
    if check.ok:
        report(
            "ok determinant (%s, k=%d, |det|=%d)"
            % (family, k, check.determinant)
        )
        return True
    report(
        "FAIL determinant: %s, k=%d, got %d, expected %d"
        % (family, k, check.determinant, check.expected)
    )
    return False


_MODULE_FAMILIES = tuple(f for f in diagrams.FAMILIES if f != diagrams.PLANAR_PARTITION)

_SUITES = (
    "ring-axioms",
    "module-axiom",
    "basis-equivalence",
    "wedderburn",
    "fixedpoint-vs-formula",
    "table-regression",
    "determinant",
)


def _cmd_verify(args):
    suites = [args.suite] if args.suite else list(_SUITES)
    rng = random.Random(args.seed)
    lines = []
    ok = True

    def report(line):
        lines.append(line)

    for suite in suites:
        if suite == "ring-axioms":
            fams = [args.family] if args.family else [diagrams.PARTITION]
            for fam in fams:
                k = args.k or 2
                ok &= _suite_ring_axioms(fam, k, rng, args.cases, report)
        elif suite == "module-axiom":
            fams = [args.family] if args.family else [diagrams.PARTITION]
            for fam in fams:
                if fam == diagrams.PLANAR_PARTITION:
                    continue
                k = args.k or 2
                ok &= _suite_module_axiom(fam, k, rng, args.cases, report)
        elif suite == "basis-equivalence":
            fams = [args.family] if args.family else [diagrams.PARTITION]
            for fam in fams:
                if fam == diagrams.PLANAR_PARTITION:
                    continue
                k = args.k or 3
                ok &= _suite_basis_equivalence(fam, k, report)
        elif suite == "wedderburn":
            fams = [args.family] if args.family else list(_MODULE_FAMILIES)
            for fam in fams:
                k = args.k or (3 if fam == diagrams.PARTITION else 4)
                ok &= _suite_wedderburn(fam, k, report)
        elif suite == "fixedpoint-vs-formula":
            fams = [args.family] if args.family else [diagrams.PARTITION]
            for fam in fams:
                if fam == diagrams.PLANAR_PARTITION:
                    continue
                k = args.k or 3
                ok &= _suite_fixedpoint(fam, k, report)
        elif suite == "table-regression":
            ok &= _suite_table_regression(report)
        elif suite == "determinant":
            fams = [args.family] if args.family else list(_MODULE_FAMILIES)
            for fam in fams:
                k = args.k or 3
                ok &= _suite_determinant(fam, k, report)
    lines.append("all checks passed" if ok else "FAILURES above")
    _emit("\n".join(lines), args.out)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="diagramalg",
        description="Diagram algebras: bases, modules, characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_flag=False, fmt=("text", "json")):
        p.add_argument(
            "--family", type=_family_type, required=True, help="diagram family"
        )
        p.add_argument("--k", type=int, required=True, help="strand count")
        if n_flag:
            p.add_argument(
                "--n",
                type=_fraction_type,
                default=None,
                help="numeric value for the parameter (default: symbolic)",
            )
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("mul", help="multiply two diagrams")
    add_common(p, n_flag=True)
    p.add_argument("--lhs", required=True, help="left diagram, block notation")
    p.add_argument("--rhs", required=True, help="right diagram, block notation")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("basis", help="list all diagrams of the family")
    add_common(p)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("dims", help="module dimensions and the square sum")
    add_common(p, fmt=None)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("symdiag", help="list symmetric diagrams of rank m")
    add_common(p)
    p.add_argument("--m", type=int, required=True, help="propagating blocks")
    p.set_defaults(func=_cmd_symdiag)

    p = sub.add_parser("sspt", help="list standard set-partition tableaux")
    add_common(p)
    p.add_argument(
        "--lambda-star", type=_partition_type, required=True, dest="lambda_star"
    )
    p.set_defaults(func=_cmd_sspt)

    p = sub.add_parser("irrep", help="matrix of a diagram on a module")
    add_common(p, n_flag=True)
    p.add_argument(
        "--lambda-star", type=_partition_type, required=True, dest="lambda_star"
    )
    p.add_argument("--d", required=True, help="diagram, block notation")
    p.add_argument("--basis", type=_basis_type, default="Twisted")
    p.set_defaults(func=_cmd_irrep)

    p = sub.add_parser("char", help="irreducible character value")
    add_common(p, fmt=None)
    p.add_argument(
        "--lambda-star", type=_partition_type, required=True, dest="lambda_star"
    )
    p.add_argument("--kappa", type=_partition_type, required=True)
    p.add_argument("--s", type=int, default=None, help="tail length check")
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("table", help="full character table")
    add_common(p, fmt=("text", "json", "csv"))
    p.add_argument("--factor", action="store_true", help="include S and F")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run consistency suites")
    p.add_argument("--suite", choices=_SUITES, default=None)
    p.add_argument("--family", type=_family_type, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=25)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (DiagramAlgebraError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
