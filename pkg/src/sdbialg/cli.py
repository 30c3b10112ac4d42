"""Command-line entry point: ``sdbialg <command> [options]``.

Every command prints one JSON report on stdout.  Exit status is 0 when all
requested checks pass, 1 when one fails and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms, classifier, knot, quandle
from .tensor import Algebra, Bialgebra, basis_names, structure_from_json

COMMANDS = ("check", "classify", "audit", "idempotents", "quandles", "color", "families")

EXPECTATIONS = (
    "associativity",
    "coassociativity",
    "cocommutativity",
    "consistency",
    "sd",
    "sd-pointwise",
    "cube-zero",
    "counital",
    "non-counital",
    "unital",
    "non-unital",
)


class InputError(Exception):
    pass


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return text, json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc


def _load_structure(path):
    _, obj = _read_json(path)
    try:
        return structure_from_json(obj)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_quandle(path):
    _, obj = _read_json(path)
    try:
        return quandle.CayleyTable.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"{args.command} needs --{name.replace('_', '-')}")


def _algebra_of(X):
    return X.algebra if isinstance(X, Bialgebra) else X


def cmd_check(args):
    _require(args, "infile")
    X = _load_structure(args.infile)
    A = _algebra_of(X)
    wanted = [e for e in (args.expect or "").split(",") if e]
    for e in wanted:
        if e not in EXPECTATIONS:
            raise InputError(f"unknown expectation {e!r}; choose from {', '.join(EXPECTATIONS)}")
        if e in ("coassociativity", "cocommutativity", "consistency", "sd", "counital", "non-counital") and not isinstance(X, Bialgebra):
            raise InputError(f"{args.infile}: expectation {e!r} needs a \"comul\" tensor")

    names = basis_names(A.dim)
    checks = {"associativity": axioms.check_associativity(A), "cube-zero": axioms.check_cube_zero(A)}
    if A.field.kind == "prime" and A.field.p ** A.dim <= axioms.MAX_CARRIER:
        checks["sd-pointwise"] = axioms.check_sd_algebra_pointwise(A)
    elif "sd-pointwise" in wanted:
        raise InputError(f"{args.infile}: sd-pointwise needs a small prime field")
    unit = axioms.find_unit(A)
    report = {"file": args.infile, "field": A.field.to_json(), "dim": A.dim}
    verdicts = {
        "unital": unit is not None,
        "non-unital": unit is None,
    }
    report["unit"] = unit.render(names) if unit is not None else None
    if isinstance(X, Bialgebra):
        C = X.coalgebra
        checks["coassociativity"] = axioms.check_coassociativity(C)
        checks["cocommutativity"] = axioms.check_cocommutativity(C)
        checks["consistency"] = axioms.check_consistency(X)
        checks["sd"] = axioms.check_sd_bialgebra(X)
        counit = axioms.find_counit(C)
        report["counit"] = None if counit is None else [c.render() for c in counit]
        verdicts["counital"] = counit is not None
        verdicts["non-counital"] = counit is None
    for name, rep in checks.items():
        verdicts[name] = rep.verdict
    report["checks"] = {name: rep.to_json() for name, rep in checks.items()}
    report["expect"] = {e: verdicts[e] for e in wanted}
    report["passed"] = all(verdicts[e] for e in wanted)
    return report, 0 if report["passed"] else 1


def _prime(args):
    _require(args, "p")
    try:
        classifier.check_small_prime(args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return args.p


def cmd_classify(args):
    p = _prime(args)
    classes = []
    for cls, cases in classifier.match_associative_tables(p):
        classes.append(
            {
                "canonical": classifier.nested(cls.canonical),
                "orbit_size": cls.orbit_size,
                "representative": classifier.nested(cls.representative),
                "matches": cases,
            }
        )
    duals = classifier.dual_type_report(p)
    report = {
        "p": p,
        "classes": classes,
        "all_matched": all(c["matches"] for c in classes),
        "duals": duals,
        "duals_match_claims": all(d["matches_claim"] for d in duals),
    }
    ok = report["all_matched"] and report["duals_match_claims"]
    return report, 0 if ok else 1


def cmd_audit(args):
    _require(args, "type")
    p = _prime(args)
    report = classifier.verify_family_completeness(args.type, p)
    return report, 0 if report["sound"] else 1


def cmd_families(args):
    types = [args.type] if args.type else sorted(classifier.FAMILIES)
    out = []
    ok = True
    for t in types:
        for f in classifier.family_catalog(t):
            entry = f.to_json()
            sym = classifier.symbolic_soundness(f)
            entry["symbolic"] = {k: sym[k] for k in ("consistency", "sd", "non_counital", "sound")}
            ok &= sym["sound"]
            if args.p is not None:
                p = _prime(args)
                checked, failures = classifier.pointwise_soundness(f, p)
                entry["pointwise"] = {"p": p, "points": checked, "failures": failures}
                ok &= not failures
            out.append(entry)
    return {"families": out, "all_sound": ok}, 0 if ok else 1


def _prime_algebra(args):
    _require(args, "infile")
    A = _algebra_of(_load_structure(args.infile))
    if A.field.kind != "prime":
        raise InputError(f"{args.infile}: needs a prime field, got {A.field}")
    if A.field.p ** A.dim > axioms.MAX_CARRIER:
        raise InputError(f"{args.infile}: carrier of {A.field.p ** A.dim} elements is too large")
    return A


def cmd_idempotents(args):
    A = _prime_algebra(args)
    names = basis_names(A.dim)
    idem = axioms.find_idempotents(A)
    return {"field": A.field.to_json(), "idempotents": [u.render(names) for u in idem]}, 0


def cmd_quandles(args):
    if args.quandle is not None:
        T = _load_quandle(args.quandle)
        q, r = quandle.is_quandle(T), quandle.is_rack(T)
        report = {"order": T.n, "is_quandle": q.to_json(), "is_rack": r.to_json()}
        return report, 0 if q.verdict else 1
    A = _prime_algebra(args)
    return quandle.idempotent_quandle_report(A), 0


def cmd_color(args):
    _require(args, "pd", "quandle")
    text, _ = _read_json(args.pd)
    try:
        D = knot.diagram(text)
    except knot.PDError as exc:
        raise InputError(f"{args.pd}: {exc}") from exc
    Q = _load_quandle(args.quandle)
    if not quandle.is_quandle(Q, limit=1):
        raise InputError(f"{args.quandle}: table is not a quandle")
    return {
        "crossings": len(D.crossings),
        "components": D.components,
        "quandle_order": Q.n,
        "colorings": knot.count_colorings(D, Q),
    }, 0


HANDLERS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "audit": cmd_audit,
    "idempotents": cmd_idempotents,
    "quandles": cmd_quandles,
    "color": cmd_color,
    "families": cmd_families,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="sdbialg", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--in", dest="infile", metavar="FILE")
    parser.add_argument("--type", type=int, choices=range(1, 6))
    parser.add_argument("--p", type=int)
    parser.add_argument("--pd", metavar="FILE")
    parser.add_argument("--quandle", metavar="FILE")
    parser.add_argument("--expect", metavar="LIST")
    parser.add_argument("--pretty", action="store_true")
    return parser


def dispatch(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        report, status = HANDLERS[args.command](args)
    except InputError as exc:
        print(f"sdbialg: error: {exc}", file=err)
        return 2
    json.dump(report, out, indent=2 if args.pretty else None)
    out.write("\n")
    return status


def main(argv=None):
    sys.exit(dispatch(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
