"""Faces of the n-cube, indexed symbolically by signed facet indices.

Facet ``j`` (j in [±n]) is the side ``x_|j| = sign(j)/4``.  A face of
codimension s is the intersection of s facets with distinct coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import IndexOutOfRange, ParseError


def _check(n: int, indices) -> None:
    seen = set()
    for j in indices:
        if not 1 <= abs(j) <= n:
            raise IndexOutOfRange(f"facet index {j} outside [±{n}]")
        if abs(j) in seen:
            raise ValueError(f"facet indices {sorted(indices, key=abs)} repeat coordinate {abs(j)}")
        seen.add(abs(j))


def face_sort_key(indices) -> tuple:
    """Lexicographic face order: by coordinates, positive side first."""
    return tuple((abs(j), j < 0) for j in sorted(indices, key=abs))


@dataclass(frozen=True)
class FaceForm:
    """Ordered normal form F(j_1, ..., j_s); equality here is strong equality."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        _check(self.n, self.indices)

    @property
    def codim(self) -> int:
        return len(self.indices)

    @property
    def dim(self) -> int:
        return self.n - len(self.indices)

    def face_set(self) -> FaceSet:
        return FaceSet(self.n, frozenset(self.indices))

    def __str__(self):
        return "F(" + ",".join(str(j) for j in self.indices) + ")"


@dataclass(frozen=True)
class FaceSet:
    n: int
    indices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))
        _check(self.n, self.indices)

    @property
    def codim(self) -> int:
        return len(self.indices)

    @property
    def dim(self) -> int:
        return self.n - len(self.indices)

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices, key=abs))

    def form(self) -> FaceForm:
        """Normal form ordered by increasing coordinate."""
        return FaceForm(self.n, self.sorted_indices())

    def sort_key(self) -> tuple:
        return (len(self.indices), face_sort_key(self.indices))

    def __lt__(self, other: FaceSet):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "F(" + ",".join(str(j) for j in self.sorted_indices()) + ")"


def _as_set(f) -> FaceSet:
    return f.face_set() if isinstance(f, FaceForm) else f


def xi(f) -> list[int]:
    """Facets containing the face."""
    return list(_as_set(f).sorted_indices())


def xi_perp(f) -> list[int]:
    """Facets transverse to the face: both sides of every free coordinate."""
    f = _as_set(f)
    used = {abs(j) for j in f.indices}
    return [s * k for k in range(1, f.n + 1) if k not in used for s in (1, -1)]


def enumerate_faces(n: int, codim: int) -> list[FaceSet]:
    if not 0 <= codim <= n:
        raise ValueError(f"codimension {codim} outside 0..{n}")
    out = []
    for coords in itertools.combinations(range(1, n + 1), codim):
        for signs in itertools.product((1, -1), repeat=codim):
            out.append(FaceSet(n, frozenset(s * c for s, c in zip(signs, coords))))
    return out


def proper_faces(n: int) -> list[FaceSet]:
    """All faces of codimension 1..n, highest dimension first."""
    return [f for s in range(1, n + 1) for f in enumerate_faces(n, s)]


def parse_face(literal: str, n: int) -> FaceForm:
    """Parse a face literal such as ``"1,-3"``; the empty string is the whole cube."""
    literal = literal.strip()
    if not literal:
        return FaceForm(n, ())
    try:
        indices = tuple(int(tok) for tok in literal.split(","))
    except ValueError:
        raise ParseError(f"bad face literal {literal!r}") from None
    try:
        return FaceForm(n, indices)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_face(f) -> str:
    indices = f.indices if isinstance(f, FaceForm) else f.sorted_indices()
    return ",".join(str(j) for j in indices)
