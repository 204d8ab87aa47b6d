"""Command-line surface: print polynomials, matrices and series, and run the
verification suites with a pass/fail exit code.

Exact mode takes rational input only ("3/5", "-4/5i", "1/2+1/3i"); decimals
need --backend float.  --format json is the machine format; csv is limited
to coefficient tables; pretty writes z and z~ for the conjugate pair.
Verification subcommands exit 0 exactly when every assertion passed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .coeffs import Coeff, parse_coeff
from .deform import (
    GL2,
    biorthogonality_check,
    deformed_generating_series,
    deformed_hermite,
    dual_family,
    eigenvalue_structure_check,
    intertwine_check,
    rep_action_check,
    rep_matrix,
)
from .hermite import (
    HermiteTable,
    generating_series_complex,
    generating_series_real,
    hermite_sum,
    normalizer_sq,
    orthonormality_check,
    real_hermite,
)
from .lie import (
    basis_change,
    bilinear_generators,
    classify,
    lie_report,
    rescale,
    structure_constants,
)
from .ncqm import FLOAT_TOL, AlphaPoint, alpha_matrix, ncqm_commutator_suite, qp_representation_suite
from .report import Report

VERIFY_SUITES = (
    "orthonormal",
    "biorth",
    "repmat",
    "eigen",
    "intertwine",
    "ncqm",
    "qp",
    "lie",
    "all",
)


def parse_alpha(text: str, exact: bool) -> AlphaPoint:
    s = text.strip()
    if s in ("1/sqrt2", "sqrt(1/2)"):
        if exact:
            raise ValueError("alpha = 1/sqrt2 is irrational; pass --backend float")
        return AlphaPoint.make(0.5**0.5, exact=False)
    if exact:
        return AlphaPoint.make(Fraction(s), exact=True)
    return AlphaPoint.make(float(Fraction(s)) if "/" in s else float(s), exact=False)


def parse_gl2(args, exact: bool) -> GL2:
    if args.alpha is not None:
        return alpha_matrix(parse_alpha(args.alpha, exact))
    if args.g is not None:
        e = [parse_coeff(tok, exact) for tok in args.g]
        return GL2(*e)
    raise ValueError("pass either --alpha or --g g11 g12 g21 g22")


def emit(obj, fmt: str, pretty_text: str | None = None, csv_rows=None):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    elif fmt == "csv":
        if csv_rows is None:
            raise ValueError("csv output is limited to coefficient tables")
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    else:
        print(pretty_text if pretty_text is not None else json.dumps(obj, indent=2))


def cmd_hermite(args) -> int:
    if args.table:
        table = HermiteTable(args.Lmax)
        rows = table.to_csv_rows()
        emit(
            table.to_json(),
            args.format,
            "\n".join(
                f"H[{m},{n}] = {table[(m, n)].pretty()}   (normalizer sqrt({normalizer_sq(m, n)}))"
                for m, n in table.ordered_keys()
            ),
            csv_rows=rows,
        )
        return 0
    m, n = args.m, args.n
    h = hermite_sum(m, n)
    payload = {"m": m, "n": n, "normalizer_sq": normalizer_sq(m, n), **h.to_json_dict()}
    csv_rows = [("z", "zbar", "re", "im")] + [
        (a, b, str(c.re), str(c.im)) for (a, b), c in h.sorted_terms()
    ]
    emit(
        payload,
        args.format,
        f"H[{m},{n}] = {h.pretty()}   (normalizer sqrt({normalizer_sq(m, n)}))",
        csv_rows=csv_rows,
    )
    return 0


def cmd_real_hermite(args) -> int:
    h = real_hermite(args.n)
    payload = {"n": args.n, **h.to_json_dict()}
    csv_rows = [("x1", "x2", "re", "im")] + [
        (a, b, str(c.re), str(c.im)) for (a, b), c in h.sorted_terms()
    ]
    emit(payload, args.format, f"H_{args.n} = {h.pretty()}", csv_rows=csv_rows)
    return 0


def cmd_deform(args) -> int:
    exact = args.backend == "exact"
    g = parse_gl2(args, exact)
    m, n = args.m, args.n
    h = deformed_hermite(g, m, n)
    payload = {"m": m, "n": n, "normalizer_sq": normalizer_sq(m, n), **h.to_json_dict()}
    csv_rows = [("z", "zbar", "re", "im")] + [
        (a, b, str(c.re), str(c.im)) for (a, b), c in h.sorted_terms()
    ]
    emit(payload, args.format, f"Hg[{m},{n}] = {h.pretty()}", csv_rows=csv_rows)
    return 0


def cmd_repmat(args) -> int:
    exact = args.backend == "exact"
    g = parse_gl2(args, exact)
    M = rep_matrix(g, args.L)
    pretty = "\n".join("[" + ", ".join(str(c) for c in row) + "]" for row in M.entries)
    emit(M.to_json(), args.format, pretty)
    return 0


def cmd_dual(args) -> int:
    exact = args.backend == "exact"
    g = parse_gl2(args, exact)
    fam = dual_family(g, args.L)
    payload = {
        "L": args.L,
        "dual_matrix_consistent": fam.consistent,
        "g_dual": [c.to_json_value() for c in fam.g_dual.entries()],
        "polys": [
            {"m": m, "n": n, **p.to_json_dict()}
            for (m, n), p in zip(fam.basis.indices, fam.basis.polys)
        ],
        "matrix": fam.matrix_direct.to_json(),
    }
    pretty_lines = [f"dual family at level {args.L} (matrix routes consistent: {fam.consistent})"]
    pretty_lines += [
        f"Hdual[{m},{n}] = {p.pretty()}" for (m, n), p in zip(fam.basis.indices, fam.basis.polys)
    ]
    emit(payload, args.format, "\n".join(pretty_lines))
    return 0


def cmd_genfun(args) -> int:
    exact = args.backend == "exact"
    N = args.order
    if args.kind == "complex":
        series = generating_series_complex(N)
    elif args.kind == "real":
        series = generating_series_real(N)
    else:
        series = deformed_generating_series(parse_gl2(args, exact), N)
    entries = []
    pretty_lines = [f"{args.kind} generating series, total order <= {N}"]
    for (j, k) in sorted(series.terms, key=lambda jk: (jk[0] + jk[1], jk[0])):
        poly = series.terms[(j, k)]
        entries.append({"u": j, "ubar": k, **poly.to_json_dict()})
        pretty_lines.append(f"u^{j} ubar^{k}: {poly.pretty()}")
    emit({"order": N, "kind": args.kind, "coefficients": entries}, args.format, "\n".join(pretty_lines))
    return 0


def _random_rational_gl2(rng: random.Random, exact: bool) -> GL2:
    while True:
        entries = [
            Coeff(
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                exact=True,
            )
            for _ in range(4)
        ]
        if not exact:
            entries = [c.to_float() for c in entries]
        try:
            return GL2(*entries)
        except ValueError:
            continue


def _verify_repmat(args, exact: bool, tol: float) -> Report:
    rng = random.Random(args.seed)
    g = _random_rational_gl2(rng, exact)
    h = _random_rational_gl2(rng, exact)
    failures = []
    for L in range(args.Lmax + 1):
        Mg, Mh = rep_matrix(g, L), rep_matrix(h, L)
        checks = {
            "identity": rep_matrix(GL2.identity(exact), L).is_identity(),
            "product": _match(Mg @ Mh, rep_matrix(g @ h, L), tol),
            "adjoint": _match(Mg.adjoint(), rep_matrix(g.conj_transpose(), L), tol),
            "inverse": _match(Mg.inverse(), rep_matrix(g.inverse(), L), tol),
        }
        action = rep_action_check(g, L, tol)
        if not action.ok:
            checks["action"] = False
        for name, ok in checks.items():
            if not ok:
                failures.append({"L": L, "law": name})
    status = "pass" if not failures else "fail"
    return Report(
        status,
        f"representation-matrix laws up to level {args.Lmax}: {status}",
        {"Lmax": args.Lmax, "seed": args.seed, "failures": failures, "status": status},
    )


def _match(a, b, tol: float) -> bool:
    return a == b if tol == 0.0 else a.close_to(b, tol)


def _verify_eigen(args, exact: bool, tol: float) -> Report:
    cases = [
        ("diagonal", GL2.diagonal(2, 3)),
        ("triangular", GL2(2, 1, 0, 3)),
        ("generic", GL2(Coeff(1, 2), Coeff(Fraction(3, 7)), Coeff(Fraction(-1, 3)), Coeff(2, -1))),
    ]
    sub = []
    ok = True
    for name, g in cases:
        for L in range(args.Lmax + 1):
            rep = eigenvalue_structure_check(g, L)
            ok = ok and rep.ok
            sub.append({"case": name, "L": L, "status": rep.status})
    status = "pass" if ok else "fail"
    return Report(status, f"eigenvalue structure: {status}", {"cases": sub, "status": status})


def run_suite(name: str, args) -> Report:
    exact = args.backend == "exact"
    tol = 0.0 if exact else FLOAT_TOL
    alpha_default = args.alpha if args.alpha is not None else "3/5"
    if name == "orthonormal":
        return orthonormality_check(args.Lmax)
    if name == "biorth":
        g = alpha_matrix(parse_alpha(alpha_default, exact))
        return biorthogonality_check(g, args.Lmax, tol)
    if name == "repmat":
        return _verify_repmat(args, exact, tol)
    if name == "eigen":
        return _verify_eigen(args, exact, tol)
    if name == "intertwine":
        g = alpha_matrix(parse_alpha(alpha_default, exact))
        return intertwine_check(g, args.Lmax, tol)
    if name == "ncqm":
        return ncqm_commutator_suite(parse_alpha(alpha_default, exact))
    if name == "qp":
        theta = Fraction(args.theta) if exact else float(Fraction(args.theta))
        gamma = Fraction(args.gamma) if exact else float(Fraction(args.gamma))
        return qp_representation_suite(theta, gamma, exact)
    if name == "lie":
        return lie_report(parse_alpha(alpha_default, exact))
    raise ValueError(f"unknown suite {name!r}")


def _suite_defaults(name: str, args) -> argparse.Namespace:
    """Per-suite default level bounds when --Lmax was not given."""
    lmax = {"orthonormal": 6, "biorth": 4, "repmat": 5, "eigen": 4, "intertwine": 5}.get(name, 4)
    ns = argparse.Namespace(**vars(args))
    if ns.Lmax is None:
        ns.Lmax = lmax
    return ns


def cmd_verify(args) -> int:
    run_all = args.suite == "all"
    names = list(VERIFY_SUITES[:-1]) if run_all else [args.suite]
    reports = {}
    for name in names:
        if run_all:
            # one broken suite must not mask the others in the battery
            try:
                reports[name] = run_suite(name, _suite_defaults(name, args))
            except ValueError as exc:
                reports[name] = Report("error", f"{name}: {exc}", {"status": "error"})
        else:
            reports[name] = run_suite(name, _suite_defaults(name, args))
    all_ok = all(r.ok for r in reports.values())
    if args.seed_manifest:
        doc = {
            "battery": {name: reports[name].to_json() for name in names},
            "backend": args.backend,
            "status": "pass" if all_ok else "fail",
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "json":
        if len(reports) == 1:
            print(json.dumps(next(iter(reports.values())).to_json(), indent=2))
        else:
            print(json.dumps({n: r.to_json() for n, r in reports.items()}, indent=2))
    else:
        for name, rep in reports.items():
            print(f"[{rep.status.upper():5s}] {name}: {rep.summary}")
    return 0 if all_ok else 1


def cmd_lie_report(args) -> int:
    exact = args.backend == "exact"
    point = None if args.alpha is None else parse_alpha(args.alpha, exact)
    if args.basis == "report":
        rep = lie_report(point)
        emit(rep.to_json(), args.format, f"[{rep.status.upper()}] {rep.summary}")
        return 0 if rep.ok else 1
    jb = bilinear_generators(point)
    basis = {"J": jb, "X": basis_change(jb)}.get(args.basis)
    if basis is None:
        basis = rescale(basis_change(jb))
    sc = structure_constants(basis)
    klass = classify(sc)
    payload = sc.to_json(klass)
    pretty = [f"basis {args.basis}, class {klass}"]
    for (i, j) in sorted(sc.table):
        coords = ", ".join(
            f"{c} {name}" for c, name in zip(sc.table[(i, j)], sc.names) if c
        )
        pretty.append(f"[{sc.names[i]}, {sc.names[j]}] = {coords or '0'}")
    emit(payload, args.format, "\n".join(pretty))
    return 0


def _add_common(p, backend=True):
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    if backend:
        p.add_argument("--backend", choices=("exact", "float"), default="exact")


def _add_matrix_args(p):
    p.add_argument("--alpha", help="rational deformation parameter, e.g. 3/5")
    p.add_argument(
        "--g", nargs=4, metavar=("G11", "G12", "G21", "G22"), help="matrix entries, e.g. 3/5 4/5i -4/5i 3/5"
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bihermite",
        description="Exact complex Hermite families, matrix deformations, and their verification suites.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hermite", help="print H[m,n] (or the whole table)")
    p.add_argument("m", type=int, nargs="?", default=0)
    p.add_argument("n", type=int, nargs="?", default=0)
    p.add_argument("--table", action="store_true", help="emit every H with m+n <= --Lmax")
    p.add_argument("--Lmax", type=int, default=6)
    _add_common(p, backend=False)
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("real-hermite", help="print the degree-n real Hermite polynomial")
    p.add_argument("n", type=int)
    _add_common(p, backend=False)
    p.set_defaults(func=cmd_real_hermite)

    p = sub.add_parser("deform", help="print the deformed polynomial Hg[m,n]")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    _add_matrix_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("repmat", help="print the level-L matrix M(g, L)")
    p.add_argument("--L", type=int, required=True)
    _add_matrix_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_repmat)

    p = sub.add_parser("dual", help="print the dual family at level L")
    p.add_argument("--L", type=int, required=True)
    _add_matrix_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("genfun", help="print generating-series coefficients")
    p.add_argument("kind", choices=("complex", "real", "deformed"))
    p.add_argument("--order", type=int, default=6)
    _add_matrix_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", help="run a verification suite (exit 0 iff pass)")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--alpha")
    p.add_argument("--theta", default="3/5")
    p.add_argument("--gamma", default="16/15")
    p.add_argument("--Lmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--seed-manifest",
        action="store_true",
        help="dump the whole battery as one JSON document",
    )
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lie-report", help="structure constants and algebra class")
    p.add_argument("--alpha", help="deformation parameter; omit for the undeformed set")
    p.add_argument("--basis", choices=("J", "X", "Z", "report"), default="report")
    _add_common(p)
    p.set_defaults(func=cmd_lie_report)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
