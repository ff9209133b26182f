"""Command-line interface.

Commands: classify, canonical, exp, verify, fixtures.  Exit codes are stable:
0 success, 1 input or validation error, 2 verification failure, 3 I/O error.

Algebra files are single JSON documents holding the structure constants under
the key "C" as three 3-vectors keyed "01", "02", "12" (the components
C_ij^0, C_ij^1, C_ij^2 of [E_i, E_j]), plus optional "name"/"description"
metadata.  Antisymmetry is implicit in the storage, never validated away.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import StructureConstants, validate_jacobi
from .classify import (
    BASIC_CLASSES,
    canonical_algebra,
    classify,
    extract_profile,
    recover_parameters,
)
from .expgroups import (
    FamilyViolationError,
    closed_form_exp,
    reference_expm,
    table1_coefficients,
    table1_matrix,
)
from .fixtures import (
    FIXTURE_NAMES,
    GIII_VARIANTS,
    algebra_file_dict,
    example_algebra,
    fixture_exp_consistency,
    rodrigues_report,
)
from .verify import report_passes, report_to_json, run_verification


class AlgebraFileError(ValueError):
    """Malformed or invalid algebra file."""


def _require_triple(obj, key):
    if key not in obj:
        raise AlgebraFileError(f'missing key "{key}" in "C"')
    arr = obj[key]
    if not isinstance(arr, (list, tuple)) or len(arr) != 3:
        raise AlgebraFileError(f'key "{key}" must hold exactly 3 numbers')
    try:
        vals = [float(v) for v in arr]
    except (TypeError, ValueError):
        raise AlgebraFileError(f'key "{key}" holds a non-numeric entry') from None
    if not all(np.isfinite(v) for v in vals):
        raise AlgebraFileError(f'key "{key}" holds a non-finite entry')
    return np.array(vals)


def parse_algebra_file(path):
    """Read, validate, and convert an algebra file to StructureConstants.

    Raises AlgebraFileError on structural problems (named key in the message)
    and on Jacobi failure; raises OSError on unreadable paths.
    """
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AlgebraFileError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "C" not in doc:
        raise AlgebraFileError('top-level object must contain key "C"')
    allowed = {"C", "name", "description"}
    extra = set(doc) - allowed
    if extra:
        raise AlgebraFileError(f"unexpected top-level keys: {sorted(extra)}")
    cmap = doc["C"]
    if not isinstance(cmap, dict):
        raise AlgebraFileError('"C" must be an object with keys "01", "02", "12"')
    unknown = set(cmap) - {"01", "02", "12"}
    if unknown:
        raise AlgebraFileError(f'unexpected keys in "C": {sorted(unknown)}')
    C = StructureConstants(
        c01=_require_triple(cmap, "01"),
        c02=_require_triple(cmap, "02"),
        c12=_require_triple(cmap, "12"),
    )
    report = validate_jacobi(C)
    if not report.ok:
        raise AlgebraFileError(
            f"constants violate the Jacobi identity (max residual {report.max_residual:.3e})"
        )
    return C


def _fmt(x):
    return f"{x + 0.0:g}"


def cmd_classify(args):
    try:
        C = parse_algebra_file(args.infile)
    except (AlgebraFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.tol < 0.0:
        print("error: --tol must be nonnegative", file=sys.stderr)
        return 1
    profile = extract_profile(C)
    sig = classify(profile, tol=args.tol)
    recovered = None
    if len(sig.members) == 1:
        alpha, beta = recover_parameters(C, sig.members[0], tol=args.tol)
        recovered = (alpha, beta)
    if args.json:
        out = {
            "signature": sig.text(),
            "members": list(sig.members),
            "is_f0": bool(sig.is_f0),
            "profile": profile.as_dict(),
        }
        if recovered is not None:
            out["recovered"] = {"alpha": recovered[0], "beta": recovered[1]}
        print(json.dumps(out, sort_keys=True, indent=2))
        return 0
    headline = sig.text()
    if recovered is not None:
        headline += f", α = {_fmt(recovered[0])}"
        if sig.members[0] in ("F1", "F11"):
            headline += f", β = {_fmt(recovered[1])}"
    print(headline)
    for key, val in profile.as_dict().items():
        print(f"  {key} = {_fmt(val)}")
    return 0


def cmd_canonical(args):
    try:
        C = canonical_algebra(args.cls, args.alpha, args.beta)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = {
        "name": f"{args.cls} canonical",
        "description": f"alpha = {_fmt(args.alpha)}, beta = {_fmt(args.beta)}",
        "C": {
            "01": [float(v) for v in C.c01],
            "02": [float(v) for v in C.c02],
            "12": [float(v) for v in C.c12],
        },
    }
    text = json.dumps(doc, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    return 0


def _parse_coords(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError('--coords expects three comma-separated reals "a,b,c"')
    return tuple(float(p) for p in parts)


def cmd_exp(args):
    try:
        a, b, c = _parse_coords(args.coords)
        A = table1_matrix(args.cls, args.alpha, args.beta, a, b, c)
        coeffs = table1_coefficients(args.cls, A, args.mode)
    except (ValueError, FamilyViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    closed = closed_form_exp(A, coeffs)
    ref = reference_expm(A)
    err = float(np.linalg.norm(closed - ref)) / max(1.0, float(np.linalg.norm(ref)))
    with np.printoptions(precision=12, suppress=False):
        print("A =")
        print(A)
        print(f"t = {coeffs.t!r}, u = {coeffs.u!r}, branch = {coeffs.branch}, mode = {coeffs.mode}")
        print("exp(A) =")
        print(closed)
    print(f"error vs reference = {err:.3e}")
    return 0


def cmd_verify(args):
    if args.samples < 1:
        print("error: --samples must be at least 1", file=sys.stderr)
        return 1
    if args.tol <= 0.0:
        print("error: --tol must be positive", file=sys.stderr)
        return 1
    report = run_verification(samples=args.samples, seed=args.seed, tol=args.tol)
    text = report_to_json(report)
    if args.report is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.report}: {exc}", file=sys.stderr)
            return 3
    ok = report_passes(report)
    n_div = len(report["divergence_cells"])
    print(
        f"verify: {'PASS' if ok else 'FAIL'} "
        f"({n_div} printed-mode divergence cells, "
        f"reconciliation {'succeeded' if report['reconciliation_success'] else 'failed'})",
        file=sys.stderr,
    )
    return 0 if ok else 2


def _fixture_records(name):
    if name is None:
        names = FIXTURE_NAMES
    elif name in FIXTURE_NAMES:
        names = (name,)
    else:
        raise ValueError(f"unknown fixture name {name!r}; expected one of {FIXTURE_NAMES}")
    records = []
    for nm in names:
        if nm == "GIII":
            records.extend(example_algebra(nm, v) for v in GIII_VARIANTS)
        else:
            records.append(example_algebra(nm))
    return records


def cmd_fixtures(args):
    try:
        records = _fixture_records(args.name)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    failures = 0
    for rec in records:
        jac = validate_jacobi(rec.constants)
        sig = classify(extract_profile(rec.constants))
        ok = jac.ok and sig.members == rec.expected_signature.members
        status = "ok" if ok else "FAIL"
        failures += 0 if ok else 1
        print(
            f"{rec.name:5s} {rec.bianchi_label:10s} expected {rec.expected_signature.text():12s} "
            f"got {sig.text():12s} jacobi {'ok' if jac.ok else 'FAIL'}  [{status}]"
        )
        print(f"      substitution: {rec.substitution}")
    if args.name in (None, "GII"):
        rep = fixture_exp_consistency("GII")
        print(
            f"GII exp-consistency: max error {rep['max_error']:.3e} "
            f"(tol {rep['tolerance']:g})  [{'ok' if rep['pass'] else 'FAIL'}]"
        )
        failures += 0 if rep["pass"] else 1
    if args.name in (None, "SO3"):
        rep = rodrigues_report()
        print(
            f"SO3 rodrigues vs reference: max error {rep['max_error']:.3e} "
            f"(tol {rep['tolerance']:g})  [{'ok' if rep['pass'] else 'FAIL'}]"
        )
        failures += 0 if rep["pass"] else 1
    return 0 if failures == 0 else 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="acbm",
        description="Classification and closed-form exponentials for "
        "3-dimensional Lie algebras with almost contact B-metric structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an algebra file")
    p.add_argument("--in", dest="infile", required=True, help="algebra file (JSON)")
    p.add_argument("--tol", type=float, default=1e-9, help="membership tolerance")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canonical", help="write a canonical algebra file")
    p.add_argument("--class", dest="cls", required=True, choices=list(BASIC_CLASSES))
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--out", default=None, help="output path (stdout when omitted)")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("exp", help="closed-form exponential of a class representation")
    p.add_argument("--class", dest="cls", required=True, choices=list(BASIC_CLASSES))
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--coords", required=True, help='coefficients "a,b,c"')
    p.add_argument("--mode", choices=["printed", "corrected"], default="corrected")
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("verify", help="run the verification sweep and arbitration")
    p.add_argument("--samples", type=int, default=1000, help="samples per cell")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--report", default=None, help="report path (stdout when omitted)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", help="run the example-group checks")
    p.add_argument("--name", default=None, help=f"one of {', '.join(FIXTURE_NAMES)}")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
