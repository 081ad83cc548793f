"""Exhaustive agreement checks between closed-form criteria and brute force.

Each check takes one matrix and returns None on agreement or a short
description of the mismatch.  Functions are looked up through their modules
at call time so a deliberately broken criterion can be swapped in.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import fps_core, glueback, matrix_fps, signed_perm
from .cube import proper_faces


def _tuple_valid(a):
    report = signed_perm.validate_tuple(matrix_fps.build_fps(a).tuple)
    return None if report.ok else report.summary()


def _perfect(a):
    brute = fps_core.is_perfect_brute(matrix_fps.build_fps(a))
    formula = matrix_fps.is_perfect(a)
    return None if brute == formula else f"is_perfect={formula}, brute force says {brute}"


def _strong(a):
    brute = fps_core.is_strong_brute(matrix_fps.build_fps(a))
    formula = matrix_fps.is_strong(a)
    return None if brute == formula else f"is_strong={formula}, brute force says {brute}"


def _bott(a):
    dag = matrix_fps.is_bott(a)
    minors = matrix_fps.all_principal_minors_one(a.tilde)
    return None if dag == minors else f"is_bott={dag}, principal minors say {minors}"


def _family_sizes(a):
    fps = matrix_fps.build_fps(a)
    for f in proper_faces(a.n):
        brute = len(fps_core.family_closure(fps, f))
        formula = matrix_fps.family_size(a, f)
        if brute != formula:
            return f"face {f}: family_size={formula}, closure has {brute}"
    return None


def _components(a):
    fps = matrix_fps.build_fps(a)
    for f in proper_faces(a.n):
        base = f.form()
        for r in range(base.codim + 1):
            for sub in itertools.combinations(range(1, base.codim + 1), r):
                if matrix_fps.component(a, base, sub) != fps_core.generate_component(fps, base, sub):
                    return f"face {base}, positions {sub}"
    return None


def _manifold(a):
    formula = matrix_fps.is_manifold(a)
    sing = glueback.vertex_singularities(glueback.cube(a.n), glueback.lambda_from_matrix(a))
    return None if formula == (not sing) else f"is_manifold={formula}, singular vertices {len(sing)}"


def _census(a):
    if not matrix_fps.is_strong(a):
        return None
    cx = glueback.build_complex(glueback.cube(a.n), glueback.lambda_from_matrix(a), structure="seal")
    census = fps_core.seal_cell_census(matrix_fps.build_fps(a))
    return None if cx.cell_counts() == census else f"cells {cx.cell_counts()} vs families {census}"


def _betti(a):
    if not matrix_fps.is_manifold(a):
        return None
    cx = glueback.build_complex(glueback.cube(a.n), glueback.lambda_from_matrix(a), structure="orbit")
    betti = glueback.betti_z2(cx)
    expected = glueback.h_vector(len(b) for b in glueback.canonical_partition(a))
    return None if betti == expected else f"betti {betti} vs h-vector {expected}"


CHECKS = {
    "tuple-valid": _tuple_valid,
    "perfect": _perfect,
    "strong": _strong,
    "bott": _bott,
    "family-size": _family_sizes,
    "components": _components,
    "manifold": _manifold,
    "cell-census": _census,
    "betti": _betti,
}


@dataclass
class CheckResult:
    name: str
    checked: int
    failure: tuple | None = None  # (matrix rows, message)

    @property
    def ok(self) -> bool:
        return self.failure is None


def _run_one(a):
    out = {}
    for name, check in CHECKS.items():
        msg = check(a)
        if msg is not None:
            out[name] = msg
    return out


def run_crosscheck(n: int, workers: int = 1) -> list[CheckResult]:
    if not 1 <= n <= 3:
        raise ValueError(f"crosscheck supports 1 <= n <= 3, got {n}")
    mats = list(matrix_fps.all_zero_diag(n))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_one, mats, chunksize=16))
    else:
        outcomes = [_run_one(a) for a in mats]
    results = []
    for name in CHECKS:
        failure = next(((a.row_strings(), o[name]) for a, o in zip(mats, outcomes) if name in o), None)
        results.append(CheckResult(name, len(mats), failure))
    return results
