"""Definition-level computations for regular facets-pairing structures.

Everything here works from the signed permutations alone.  Nothing reads a
matrix, so these routines serve as the brute-force reference for the
closed-form criteria in ``matrix_fps``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .cube import FaceForm, FaceSet, enumerate_faces, proper_faces
from .errors import InvalidStructure, PositionOutOfRange, SizeMismatch
from .signed_perm import FpsTuple, SignedPerm, compose, validate_tuple


class RegularFps:
    """A tuple that has passed conditions (a)-(c)."""

    def __init__(self, tuple_: FpsTuple):
        report = validate_tuple(tuple_)
        if not report.ok:
            raise InvalidStructure(report)
        self.tuple = tuple_

    @property
    def n(self) -> int:
        return self.tuple.n

    def omega(self, j: int) -> int:
        return self.tuple.omega(j)

    def sigma(self, j: int) -> SignedPerm:
        return self.tuple.sigma[j]

    def __eq__(self, other):
        return isinstance(other, RegularFps) and self.tuple == other.tuple

    def __hash__(self):
        return hash(self.tuple)


@dataclass(frozen=True)
class FaceFamily:
    base: FaceForm
    members: frozenset[FaceSet]
    generator_map: dict = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[FaceSet]:
        return sorted(self.members)


def _apply(p: SignedPerm, f: FaceForm) -> FaceForm:
    return FaceForm(f.n, tuple(p(j) for j in f.indices))


def apply_structure(fps: RegularFps, j: int, f: FaceForm) -> FaceForm:
    if f.n != fps.n:
        raise SizeMismatch(f"face lives in C^{f.n}, structure in C^{fps.n}")
    return _apply(fps.sigma(j), f)


def _walk(fps: RegularFps, base: FaceForm, positions) -> tuple[list[int], SignedPerm]:
    """Derived sequence for ``positions`` and the composite of its maps."""
    s = base.codim
    composite = SignedPerm.identity(fps.n)
    seq = []
    for i in positions:
        if not 1 <= i <= s:
            raise PositionOutOfRange(f"position {i} outside 1..{s}")
        k = composite(base.indices[i - 1])
        seq.append(k)
        composite = compose(fps.sigma(k), composite)
    return seq, composite


def derived_sequence(fps: RegularFps, base: FaceForm, positions) -> list[int]:
    return _walk(fps, base, positions)[0]


def generate_component(fps: RegularFps, base: FaceForm, sigma_set) -> FaceForm:
    _, composite = _walk(fps, base, sorted(sigma_set))
    return _apply(composite, base)


def component_map(fps: RegularFps, base: FaceForm, sigma_set) -> SignedPerm:
    """Composite of the structure maps along the derived sequence of ``sigma_set``."""
    return _walk(fps, base, sorted(sigma_set))[1]


def _subsets(s: int):
    for r in range(s + 1):
        for combo in itertools.combinations(range(1, s + 1), r):
            yield frozenset(combo)


def face_family(fps: RegularFps, base: FaceForm) -> FaceFamily:
    gen = {sub: generate_component(fps, base, sub) for sub in _subsets(base.codim)}
    return FaceFamily(base, frozenset(f.face_set() for f in gen.values()), gen)


def family_closure(fps: RegularFps, face: FaceSet) -> frozenset[FaceSet]:
    """Face family by breadth-first search over valid structure maps.

    A map may be applied to a face only along a facet containing it.  This
    follows the definition directly and does not rely on the subset
    reduction used by ``face_family``.
    """
    seen = {face}
    queue = deque([face])
    while queue:
        f = queue.popleft()
        for j in f.indices:
            p = fps.sigma(j)
            g = FaceSet(f.n, frozenset(p(k) for k in f.indices))
            if g not in seen:
                seen.add(g)
                queue.append(g)
    return frozenset(seen)


def is_perfect_brute(fps: RegularFps) -> bool:
    return all(face_family(fps, f.form()).size == 2 ** f.codim for f in proper_faces(fps.n))


def strong_violation(fps: RegularFps):
    """First (face, subset, subset) breaking strongness, or None.

    Any valid sequence of maps reduces to one generated by a subset of
    positions (cancel repeated positions, then reorder), so comparing the
    2^s subsets of each face covers every sequence.
    """
    for f in proper_faces(fps.n):
        base = f.form()
        by_face: dict[FaceSet, tuple] = {}
        for sub in _subsets(base.codim):
            _, composite = _walk(fps, base, sorted(sub))
            form = _apply(composite, base)
            key = form.face_set()
            if key in by_face:
                other_sub, other_form, other_map = by_face[key]
                if form != other_form or composite != other_map:
                    return base, other_sub, sub
            else:
                by_face[key] = (sub, form, composite)
    return None


def is_strong_brute(fps: RegularFps) -> bool:
    return strong_violation(fps) is None


def all_families(fps: RegularFps) -> list[list[frozenset[FaceSet]]]:
    """Distinct face families grouped by dimension, in lexicographic face order."""
    out: list[list[frozenset[FaceSet]]] = [[] for _ in range(fps.n)]
    assigned = set()
    for s in range(fps.n, 0, -1):
        for f in sorted(enumerate_faces(fps.n, s)):
            if f in assigned:
                continue
            members = face_family(fps, f.form()).members
            assigned |= members
            out[fps.n - s].append(members)
    return out


def seal_cell_census(fps: RegularFps) -> list[int]:
    """Number of cells per dimension: one per face family, plus the top cell."""
    return [len(fams) for fams in all_families(fps)] + [1]
