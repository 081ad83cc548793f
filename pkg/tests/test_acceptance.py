"""Acceptance criteria 1-13, one check each.

Every check returns (ok, detail).  Under pytest each criterion prints one
``[acceptance N] PASS|FAIL detail`` line; run this file directly to get the
same lines without pytest.
"""
import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from sealspace import glueback as gb  # noqa: E402
from sealspace.cube import proper_faces  # noqa: E402
from sealspace.fps_core import family_closure, is_perfect_brute, is_strong_brute, seal_cell_census  # noqa: E402
from sealspace.gf2 import principal_minor_matrix, rank, row_submatrix  # noqa: E402
from sealspace.matrix_fps import (  # noqa: E402
    ZeroDiagMatrix,
    all_principal_minors_one,
    all_zero_diag,
    build_fps,
    enumerate_classes,
    family_census,
    family_size,
    is_bott,
    is_manifold,
    is_orientable,
    is_perfect,
    is_strong,
    matrices_equivalent,
    strong_witness,
)
from sealspace.signed_perm import tuples_equivalent  # noqa: E402

from oracles import set_partitions  # noqa: E402

Z = ZeroDiagMatrix.of


def complex_of(a, structure=None):
    return gb.build_complex(gb.cube(a.n), gb.lambda_from_matrix(a), structure=structure)


def upper_triangular(n):
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((0, 1), repeat=len(cells)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), b in zip(cells, bits):
            rows[i][j] = b
        yield Z(rows)


def criterion_1():
    a = Z([[0, 0, 0], [0, 0, 1], [1, 1, 0]])
    w = strong_witness(a)
    idx = [1, 2]
    minor = rank(principal_minor_matrix(a.tilde, idx))
    rows = rank(row_submatrix(a.tilde, idx))
    ok = not is_strong(a) and w == (2, 3) and (minor, rows) == (1, 2)
    return ok, f"strong={is_strong(a)} witness={w} ranks {minor} vs {rows}"


def criterion_2():
    a = Z([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    counts, sizes = family_census(a)
    ok = is_strong(a) and not is_perfect(a) and counts[0] == 2 and sizes[0] == [4, 4] and not is_manifold(a)
    return ok, f"strong={is_strong(a)} perfect={is_perfect(a)} vertex families {sizes[0]} manifold={is_manifold(a)}"


def criterion_3():
    j = Z([[0, 1], [1, 0]])
    cx = complex_of(j)
    betti = gb.betti_z2(cx)
    part = gb.canonical_partition(j)
    base = gb.smooth(part)
    lattice_ok = gb.theta_isomorphism(base) is not None and len(base.faces) == len(gb.simplex_product_faces([2]))
    ok = (
        is_manifold(j) and not is_bott(j) and not is_orientable(j)
        and betti == [1, 1, 1] and cx.euler_characteristic() == 1
        and part == [(1, 2)] and lattice_ok
    )
    return ok, f"betti={betti} chi={cx.euler_characteristic()} partition={part} simplex lattice={lattice_ok}"


def criterion_4():
    checked = 0
    for n in range(1, 5):
        for a in upper_triangular(n):
            fps = build_fps(a)
            counts, sizes = family_census(a)
            flags = (is_bott(a), is_perfect(a), is_strong(a), is_manifold(a))
            if not all(flags) or counts[0] != 1 or sizes[0] != [2 ** n]:
                return False, f"{a.row_strings()}: flags {flags} vertex families {sizes[0]}"
            if n <= 3 and not (is_perfect_brute(fps) and is_strong_brute(fps)):
                return False, f"{a.row_strings()}: brute force disagrees"
            checked += 1
    return True, f"{checked} upper triangular matrices, n=1..4"


def criterion_5():
    mats = list(all_zero_diag(3))
    bad = []
    for a in mats:
        fps = build_fps(a)
        strong = is_strong_brute(fps)
        manifold = not gb.vertex_singularities(gb.cube(3), gb.lambda_from_matrix(a))
        if (is_perfect_brute(fps) or manifold) and not strong:
            bad.append(a.row_strings())
    return not bad, f"{len(mats)} matrices at n=3 (all zero-diagonal ones), counterexamples {bad}"


def criterion_6():
    mismatches = checked = 0
    for n in range(1, 4):
        for a in all_zero_diag(n):
            fps = build_fps(a)
            for f in proper_faces(n):
                checked += 1
                mismatches += family_size(a, f) != len(family_closure(fps, f))
    return mismatches == 0, f"{checked} (matrix, face) pairs, {mismatches} mismatches"


def criterion_7():
    checked = mismatches = 0
    for n in range(1, 5):
        for a in all_zero_diag(n):
            checked += 1
            mismatches += is_bott(a) != all_principal_minors_one(a.tilde)
    return mismatches == 0, f"{checked} matrices n=1..4, {mismatches} mismatches"


def criterion_8():
    checked = mismatches = 0
    for n in range(1, 4):
        for a in all_zero_diag(n):
            checked += 1
            sing = gb.vertex_singularities(gb.cube(n), gb.lambda_from_matrix(a))
            mismatches += is_manifold(a) != (not sing)
    return mismatches == 0, f"{checked} matrices n=1..3, {mismatches} mismatches"


def criterion_9():
    checked = mismatches = 0
    for n in range(1, 4):
        for a in all_zero_diag(n):
            if not is_strong(a):
                continue
            checked += 1
            mismatches += complex_of(a).cell_counts() != seal_cell_census(build_fps(a))
    return mismatches == 0, f"{checked} strong matrices n=1..3, {mismatches} mismatches"


NAMED = {
    "T2": ([[0, 0], [0, 0]], [1, 2, 1]),
    "Klein": ([[0, 1], [0, 0]], [1, 2, 1]),
    "RP2": ([[0, 1], [1, 0]], [1, 1, 1]),
    "T3": ([[0, 0, 0], [0, 0, 0], [0, 0, 0]], [1, 3, 3, 1]),
    "RP3": ([[0, 1, 1], [1, 0, 1], [1, 1, 0]], [1, 1, 1, 1]),
    "S1xRP2": ([[0, 0, 0], [0, 0, 1], [0, 1, 0]], [1, 2, 2, 1]),
}


def criterion_10():
    checked = 0
    for n in range(1, 4):
        for a in all_zero_diag(n):
            if not is_manifold(a):
                continue
            checked += 1
            betti = gb.betti_z2(complex_of(a, "orbit"))
            h = gb.h_vector(len(b) for b in gb.canonical_partition(a))
            if betti != h:
                return False, f"{a.row_strings()}: betti {betti} vs h-vector {h}"
    for name, (rows, expected) in NAMED.items():
        betti = gb.betti_z2(complex_of(Z(rows), "orbit"))
        if betti != expected:
            return False, f"{name}: betti {betti}, expected {expected}"
    return True, f"{checked} manifold matrices n=1..3 plus {', '.join(NAMED)}"


def criterion_11():
    checked = 0
    for n in range(1, 5):
        for a in all_zero_diag(n):
            if not is_bott(a):
                continue
            checked += 1
            chi = complex_of(a).euler_characteristic()
            if chi != 0:
                return False, f"{a.row_strings()}: chi={chi}"
    return True, f"{checked} Bott matrices n=1..4, chi=0"


def criterion_12():
    checked = 0
    for n in range(1, 5):
        for part in set_partitions(list(range(1, n + 1))):
            base = gb.smooth(part)
            if gb.theta_isomorphism(base) is None:
                return False, f"partition {part}: no isomorphism"
            checked += 1
    return True, f"{checked} partitions n=1..4"


def criterion_13():
    classes = enumerate_classes(2)
    sizes = [c.size for c in classes]
    mats = list(all_zero_diag(2))
    disagree = sum(
        (matrices_equivalent(a, b) is not None) != (tuples_equivalent(build_fps(a).tuple, build_fps(b).tuple) is not None)
        for a in mats
        for b in mats
    )
    ok = len(classes) == 3 and sorted(sizes) == [1, 1, 2] and disagree == 0
    return ok, f"{len(classes)} classes sizes {sizes}, {len(mats) ** 2} pairs, {disagree} disagreements"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 14)}


def report(i):
    try:
        ok, detail = CRITERIA[i]()
    except Exception as exc:  # a crash is a failure with a reason
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    line = f"[acceptance {i}] {'PASS' if ok else 'FAIL'} {detail}"
    return ok, line


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_acceptance(i, capsys):
    ok, line = report(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(i) for i in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
