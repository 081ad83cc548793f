"""Command line front end.

Exit codes: 0 success, 1 a check failed, 2 bad usage or bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import crosscheck, fps_core, glueback, matrix_fps
from .errors import SealspaceError
from .signed_perm import parse_tuple, validate_tuple


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_matrix(path: str) -> matrix_fps.ZeroDiagMatrix:
    try:
        return matrix_fps.parse_zero_diag(_read(path))
    except SealspaceError as exc:
        raise InputError(f"{path}: {exc}") from None


def _flag(b: bool) -> str:
    return "yes" if b else "no"


def _print_report(r: matrix_fps.AnalysisReport) -> None:
    print(f"n: {r.n}")
    for key in ("is_bott", "is_perfect", "is_strong", "is_manifold", "is_orientable"):
        print(f"{key[3:]}: {_flag(getattr(r, key))}")
    for d, (count, sizes) in enumerate(zip(r.family_counts, r.family_sizes)):
        print(f"dim {d} families: {count} sizes {' '.join(map(str, sizes))}")
    if r.betti_z2 is not None:
        print(f"betti_z2: {' '.join(map(str, r.betti_z2))}")


def cmd_analyze(args) -> int:
    a = _load_matrix(args.matrix)
    report = matrix_fps.analyze(a, homology=not args.no_homology)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        _print_report(report)
    return 0


def cmd_families(args) -> int:
    a = _load_matrix(args.matrix)
    fams = fps_core.all_families(matrix_fps.build_fps(a))
    if args.json:
        doc = {
            str(d): [[_face_literal(f) for f in sorted(fam)] for fam in fams[d]] for d in range(a.n)
        }
        print(json.dumps(doc, sort_keys=True))
        return 0
    for d in range(a.n):
        for i, fam in enumerate(fams[d], start=1):
            faces = " ".join(str(f) for f in sorted(fam))
            print(f"dim {d} family {i} size {len(fam)}: {faces}")
    return 0


def _face_literal(f) -> str:
    return ",".join(str(j) for j in f.sorted_indices())


def cmd_homology(args) -> int:
    a = _load_matrix(args.matrix)
    cx = glueback.build_complex(glueback.cube(a.n), glueback.lambda_from_matrix(a), structure=args.structure)
    betti = glueback.betti_z2(cx)
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(glueback.export_complex(cx))
    if args.json:
        doc = {
            "structure": cx.structure,
            "cell_counts": cx.cell_counts(),
            "betti_z2": betti,
            "euler_characteristic": cx.euler_characteristic(),
            "cw_faithful": cx.cw_faithful,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"structure: {cx.structure}")
        print(f"cells: {' '.join(map(str, cx.cell_counts()))}")
        print(f"betti_z2: {' '.join(map(str, betti))}")
        print(f"euler characteristic: {cx.euler_characteristic()}")
        if not cx.cw_faithful:
            print("warning: cells are not embedded (structure is not strong); use --structure orbit")
    return 0


FILTERS = {
    "all": lambda r: True,
    "bott": lambda r: r.is_bott,
    "strong": lambda r: r.is_strong,
    "manifold": lambda r: r.is_manifold,
}


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= 4:
        raise InputError(f"enumerate supports 1 <= n <= 4, got {args.n}")
    classes = matrix_fps.enumerate_classes(args.n, workers=args.threads)
    rows = [c for c in classes if FILTERS[args.filter](c.report)]
    if args.json:
        doc = [
            {
                "representative": list(c.representative.row_strings()),
                "size": c.size,
                "is_bott": c.report.is_bott,
                "is_strong": c.report.is_strong,
                "is_manifold": c.report.is_manifold,
                "is_orientable": c.report.is_orientable,
            }
            for c in rows
        ]
        print(json.dumps(doc))
        return 0
    for c in rows:
        r = c.report
        flags = ",".join(k[3:] for k in ("is_bott", "is_strong", "is_manifold", "is_orientable") if getattr(r, k))
        print(f"{'/'.join(c.representative.row_strings())}\t{c.size}\t{flags or '-'}")
    return 0


def cmd_tuple_validate(args) -> int:
    try:
        t = parse_tuple(_read(args.tuple))
    except SealspaceError as exc:
        raise InputError(f"{args.tuple}: {exc}") from None
    report = validate_tuple(t)
    if args.json:
        doc = {
            "a": report.a_ok,
            "b": report.b_ok,
            "c": report.c_ok,
            "a_witness": report.a_witness,
            "b_witness": report.b_witness,
            "c_witness": list(report.c_witness) if report.c_witness else None,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for part in report.summary().split(", "):
            print(part)
    return 0 if report.ok else 1


def cmd_crosscheck(args) -> int:
    if not 1 <= args.n <= 3:
        raise InputError(f"crosscheck supports 1 <= n <= 3, got {args.n}")
    results = crosscheck.run_crosscheck(args.n, workers=args.threads)
    if args.json:
        doc = {
            r.name: {"checked": r.checked, "ok": r.ok, "counterexample": r.failure and list(r.failure[0]),
                     "message": r.failure and r.failure[1]}
            for r in results
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for r in results:
            if r.ok:
                print(f"PASS {r.name} ({r.checked} matrices)")
            else:
                rows, msg = r.failure
                print(f"FAIL {r.name}: matrix {'/'.join(rows)}: {msg}")
    return 0 if all(r.ok for r in results) else 1


def _threads(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("thread count must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sealspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    default_threads = os.cpu_count() or 1

    p = sub.add_parser("analyze", help="criteria, family census and Betti numbers of F_A")
    p.add_argument("matrix", help="matrix file ('-' for stdin)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-homology", action="store_true", help="skip the glue-back homology")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("families", help="list the face families of F_A")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("homology", help="glue-back complex and Z2 Betti numbers")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.add_argument("--structure", choices=["seal", "orbit"], default="orbit")
    p.add_argument("--export", metavar="FILE", help="write the complex in text form")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("enumerate", help="equivalence classes of n x n matrices")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=sorted(FILTERS), default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=_threads, default=default_threads)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tuple-validate", help="check a tuple file against the regularity conditions")
    p.add_argument("tuple")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tuple_validate)

    p = sub.add_parser("crosscheck", help="exhaustive formula vs brute-force agreement")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=_threads, default=default_threads)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
