"""Command-line entry point: ``coxweight``.

Exit codes: 0 success, 1 a criterion or table check failed, 2 usage or
parse errors, 3 a malformed poset file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .criterion import (
    COMPATIBLE,
    POSET_FAMILIES,
    IncompatibleFamilies,
    PolynomialView,
    check_family,
    family_id,
    poset_family,
    weight_coxeter_polynomial,
)
from .posets.families import SizeTooLarge
from .posets.mutation import DEFAULT_SEED_CAP, ExplosionGuard
from .posets.poset import MalformedPosetFile, Poset, PosetError, coxeter_polynomial
from .weights import families as wfam
from .weights.factor import factorizations, is_prime
from .weights.milnor_orlik import NonIntegralInversion, milnor_orlik
from .weights.naming import describe, factor_label
from .weights.tables import TableError, default_table, load_table, verify_table
from .weights.weight import (
    Weight,
    WeightError,
    canonicalize,
    central_charge,
    cy_dimension,
    format_weight,
    is_weak_weight,
    is_weight,
    milnor_number,
    parse,
    product,
    q_milnor,
)

# factorization is a subset search; skip it in family tables beyond this many degrees
FAMILY_FACTOR_MAX_DEGREES = 12

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


def _fmt_fraction(x: Fraction) -> str:
    return str(x)


def _times(ascii: bool) -> str:
    return "x" if ascii else "×"


def _parse_weight(text: str) -> Weight:
    try:
        return parse(text)
    except WeightError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------- weight


def weight_report(w: Weight, ascii: bool = False) -> dict:
    c = canonicalize(w)
    table = default_table()
    mu = milnor_number(c)
    out: dict = {
        "input": format_weight(w),
        "canonical": format_weight(c),
        "m": c.m,
        "milnor_number": _fmt_fraction(mu),
        "is_weight": is_weight(c),
        "is_weak_weight": is_weak_weight(c),
        "central_charge": _fmt_fraction(central_charge(c)),
        "cy_dimension": list(cy_dimension(c)),
        "name": table.lookup_name(c),
    }
    qm = q_milnor(c)
    if qm.is_polynomial():
        out["q_milnor"] = {"coeffs": qm.expand().to_list(), "factored": qm.format(ascii)}
    else:
        out["q_milnor"] = {"coeffs": None, "factored": qm.format(ascii)}
    try:
        trace = milnor_orlik(c)
        out["milnor_orlik"] = {
            "u": list(trace.u),
            "chi": {str(j): str(v) for j, v in trace.chi.items()},
            "s": {str(j): v for j, v in trace.s.items()},
        }
        out["char_poly"] = trace.result.format(ascii)
    except NonIntegralInversion as exc:
        out["milnor_orlik"] = None
        out["char_poly"] = None
        out["note"] = str(exc)
    if out["is_weight"]:
        view = PolynomialView.of(weight_coxeter_polynomial(c))
        out["coxeter_polynomial"] = view.to_json(ascii)
        out["prime"] = is_prime(c)
    else:
        out["coxeter_polynomial"] = None
        out["prime"] = None
    return out


def _print_weight_report(r: dict) -> None:
    yes = {True: "yes", False: "no", None: "n/a"}
    rows = [
        ("weight", r["input"]),
        ("canonical", r["canonical"]),
        ("name", r["name"] or "-"),
        ("m", r["m"]),
        ("milnor number", r["milnor_number"]),
        ("is weight", f"{yes[r['is_weight']]} (weak: {yes[r['is_weak_weight']]})"),
    ]
    qm = r["q_milnor"]
    if qm["coeffs"] is not None:
        from .algebra.polynomial import IntPolynomial

        rows.append(("q-milnor", IntPolynomial(qm["coeffs"]).format("q")))
    rows.append(("q-milnor factored", qm["factored"]))
    rows.append(("central charge", r["central_charge"]))
    rows.append(("CY dimension", "({}, {})".format(*r["cy_dimension"])))
    mo = r["milnor_orlik"]
    if mo is not None:
        rows.append(("u", ", ".join(map(str, mo["u"]))))
        rows.append(("chi", "  ".join(f"{j}:{v}" for j, v in mo["chi"].items())))
        rows.append(("s", "  ".join(f"{j}:{v}" for j, v in mo["s"].items())))
        rows.append(("char poly", r["char_poly"]))
    elif "note" in r:
        rows.append(("milnor-orlik", r["note"]))
    cp = r["coxeter_polynomial"]
    if cp is not None:
        rows.append(("coxeter poly", cp["factored"]))
    rows.append(("prime", yes[r["prime"]]))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}")


def cmd_weight_info(args) -> int:
    w = _parse_weight(args.spec)
    report = weight_report(w, args.ascii)
    if args.json:
        _emit(report)
    else:
        _print_weight_report(report)
    return EXIT_OK


def cmd_weight_product(args) -> int:
    a = _parse_weight(args.a)
    b = _parse_weight(args.b)
    p = product(a, b)
    if args.json:
        _emit({"a": format_weight(a), "b": format_weight(b), "product": format_weight(p)})
    else:
        print(format_weight(p))
    return EXIT_OK


def cmd_weight_factor(args) -> int:
    w = _parse_weight(args.spec)
    c = canonicalize(w)
    if not is_weight(c):
        raise UsageError(f"({format_weight(c)}) is not a Weight")
    table = default_table()
    facs = factorizations(c)
    sep = _times(args.ascii)
    prime = len(facs) == 1 and len(facs[0]) <= 1
    if args.json:
        _emit(
            {
                "weight": format_weight(c),
                "prime": prime,
                "factorizations": [
                    [{"weight": format_weight(f), "name": table.lookup_name(f)} for f in fac]
                    for fac in facs
                ],
            }
        )
        return EXIT_OK
    if prime:
        print("prime")
        return EXIT_OK
    for fac in facs:
        plain = sep.join(f"({format_weight(f)})" for f in fac)
        names = sep.join(factor_label(f, table) for f in fac)
        print(f"{plain}    {names}")
    return EXIT_OK


# ---------------------------------------------------------------- poset


def _load_poset(args) -> Poset:
    fam = family_id(args.family)
    if fam == "file":
        try:
            return Poset.load(args.arg)
        except OSError as exc:
            raise UsageError(f"cannot read {args.arg}: {exc.strerror or exc}") from exc
        except UnicodeDecodeError as exc:
            raise MalformedPosetFile(f"{args.arg}: not UTF-8 text") from exc
    if fam not in POSET_FAMILIES:
        raise UsageError(f"unknown poset family {args.family!r}; choose from {sorted(POSET_FAMILIES)} or file")
    try:
        n = int(args.arg)
    except ValueError as exc:
        raise UsageError(f"expected an integer size, got {args.arg!r}") from exc
    try:
        return poset_family(fam, n, seed_cap=args.seed_cap)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_poset_gen(args) -> int:
    p = _load_poset(args)
    print(json.dumps(p.to_json(), sort_keys=True, ensure_ascii=False))
    return EXIT_OK


def cmd_poset_coxpoly(args) -> int:
    p = _load_poset(args)
    view = PolynomialView.of(coxeter_polynomial(p))
    if args.json:
        _emit({"size": p.size, **view.to_json(args.ascii)})
    else:
        print(view.poly.format())
        print(view.factored_string(args.ascii))
    return EXIT_OK


# ---------------------------------------------------------------- criterion


def _n_range(args, lo_default: int, hi_default: int) -> range:
    lo = args.n_min if args.n_min is not None else (args.n_lo if args.n_lo is not None else lo_default)
    hi = args.n_max if args.n_max is not None else (args.n_hi if args.n_hi is not None else hi_default)
    if lo > hi:
        raise UsageError(f"empty range: n from {lo} to {hi}")
    return range(lo, hi + 1)


def cmd_criterion(args) -> int:
    pair = (family_id(args.posets), family_id(args.weights))
    if pair not in COMPATIBLE:
        raise UsageError(
            f"IncompatibleFamilies: no indexing relates poset family {args.posets!r} "
            f"and weight family {args.weights!r}"
        )
    lo = COMPATIBLE[pair]
    ns = _n_range(args, lo, lo + 4)
    try:
        reports = check_family(pair[0], pair[1], ns, seed_cap=args.seed_cap)
    except IncompatibleFamilies as exc:
        raise UsageError(f"IncompatibleFamilies: {exc}") from exc
    except (SizeTooLarge, ExplosionGuard) as exc:
        raise UsageError(str(exc)) from exc
    ok = all(r.match for r in reports)
    if args.json:
        _emit(
            {
                "posets": pair[0],
                "weights": pair[1],
                "all_match": ok,
                "reports": [r.to_json(args.ascii) for r in reports],
            }
        )
    else:
        print(f"{'n':>3}  {'|P|':>6}  {'mu':>6}  {'result':<6}  weight  polynomial")
        for r in reports:
            status = "MATCH" if r.match else "FAIL"
            print(
                f"{r.n:>3}  {r.poset_size:>6}  {r.milnor_number:>6}  {status:<6}  "
                f"({r.weight})  {r.poset_polynomial.factored_string(args.ascii)}"
            )
            for d in r.diagnostics:
                print(f"{'':>5}note: {d}")
        print(f"{sum(r.match for r in reports)}/{len(reports)} match")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- family


def family_rows(name: str, ns, ascii: bool = False) -> list[dict]:
    rows = []
    for n in ns:
        w = wfam.family_weight(name, n)
        mu = milnor_number(w)
        row = {
            "n": n,
            "weight": format_weight(w),
            "milnor_number": _fmt_fraction(mu),
            "is_weight": is_weight(w),
            "is_weak_weight": is_weak_weight(w),
            "cy_dimension": list(cy_dimension(w)),
            "names": None,
        }
        if not w.degrees:
            row["note"] = "empty Weight, listed as A1"
        if row["is_weight"] and w.m <= FAMILY_FACTOR_MAX_DEGREES:
            row["names"] = describe(w, ascii=ascii)
        rows.append(row)
    return rows


def cmd_family(args) -> int:
    key = args.family.replace("_", "-")
    if key not in wfam.WEIGHT_FAMILIES:
        raise UsageError(f"unknown weight family {args.family!r}; choose from {sorted(wfam.WEIGHT_FAMILIES)}")
    lo = wfam.WEIGHT_FAMILIES[key][1]
    ns = _n_range(args, lo, lo + 5)
    if ns.start < lo:
        raise UsageError(f"{key} starts at n = {lo}")
    rows = family_rows(key, ns, args.ascii)
    if args.json:
        _emit({"family": key, "rows": rows})
        return EXIT_OK
    yes = {True: "yes", False: "no"}
    table = [
        (
            str(r["n"]),
            f"({r['weight']})",
            r["milnor_number"],
            yes[r["is_weight"]],
            yes[r["is_weak_weight"]],
            "({}, {})".format(*r["cy_dimension"]),
            " | ".join(r["names"]) if r["names"] else "-",
        )
        for r in rows
    ]
    header = ("n", "weight", "mu", "weight?", "weak?", "CY", "names")
    widths = [max(len(row[i]) for row in table + [header]) for i in range(len(header))]
    for row in [header] + table:
        cells = [row[0].rjust(widths[0]), row[1].ljust(widths[1]), row[2].rjust(widths[2])]
        cells += [c.ljust(wd) for c, wd in zip(row[3:], widths[3:])]
        print("  ".join(cells).rstrip())
    return EXIT_OK


# ---------------------------------------------------------------- tables


def cmd_tables_verify(args) -> int:
    try:
        table = load_table()
    except TableError as exc:
        raise UsageError(str(exc)) from exc
    failures = verify_table(table)
    if args.json:
        _emit({"entries": len(table.entries), "failures": failures, "ok": not failures})
    else:
        for f in failures:
            print(f"FAIL {f}")
        print(f"{len(table.entries)} entries, {len(failures)} failures")
    return EXIT_OK if not failures else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    # output flags are accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON document")
    common.add_argument("--ascii", action="store_true", default=argparse.SUPPRESS, help="write F instead of Φ")

    parser = argparse.ArgumentParser(
        prog="coxweight",
        description="Weights, monodromy polynomials, posets and Coxeter polynomials.",
        parents=[common],
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    weight = verbs.add_parser("weight", help="degree data d1,...,dm;D")
    wsub = weight.add_subparsers(dest="action", required=True)
    p = wsub.add_parser("info", parents=[common], help="everything known about one Weight")
    p.add_argument("spec")
    p.set_defaults(func=cmd_weight_info)
    p = wsub.add_parser("product", parents=[common], help="canonical product of two Weights")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_weight_product)
    p = wsub.add_parser("factor", parents=[common], help="all factorizations into primes")
    p.add_argument("spec")
    p.set_defaults(func=cmd_weight_factor)

    poset = verbs.add_parser("poset", help="generate posets or compute Coxeter polynomials")
    psub = poset.add_subparsers(dest="action", required=True)
    for action, func in (("gen", cmd_poset_gen), ("coxpoly", cmd_poset_coxpoly)):
        p = psub.add_parser(action, parents=[common])
        p.add_argument("family", help="tamari, dyck, green-cyclic, chain or file")
        p.add_argument("arg", help="size n, or a path for 'file'")
        p.add_argument("--seed-cap", type=int, default=DEFAULT_SEED_CAP)
        p.set_defaults(func=func)

    p = verbs.add_parser("criterion", parents=[common], help="compare a poset family with a Weight family")
    p.add_argument("posets")
    p.add_argument("weights")
    p.add_argument("n_lo", nargs="?", type=int)
    p.add_argument("n_hi", nargs="?", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--seed-cap", type=int, default=DEFAULT_SEED_CAP)
    p.set_defaults(func=cmd_criterion)

    p = verbs.add_parser("family", parents=[common], help="tabulate a Weight family")
    p.add_argument("family")
    p.add_argument("n_lo", nargs="?", type=int)
    p.add_argument("n_hi", nargs="?", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.set_defaults(func=cmd_family)

    tables = verbs.add_parser("tables", help="named Weight table")
    tsub = tables.add_subparsers(dest="action", required=True)
    p = tsub.add_parser("verify", parents=[common], help="check every table row")
    p.set_defaults(func=cmd_tables_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.ascii = getattr(args, "ascii", False)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coxweight: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MalformedPosetFile, PosetError) as exc:
        print(f"coxweight: malformed poset: {exc}", file=sys.stderr)
        return EXIT_DATA
    except TableError as exc:
        print(f"coxweight: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
