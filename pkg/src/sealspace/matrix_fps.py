"""Structures F_A induced by zero-diagonal binary matrices.

Matrix entries use 0-based row/column positions as in ``gf2``; facet and
coordinate indices seen by users (faces, index sets, partitions) are
1-based to match the cube's signed indexing.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Sequence

from .cube import FaceForm, FaceSet
from .errors import (
    BadDiagonalBlock,
    DegenerateMinor,
    IndexOutOfRange,
    NonSquare,
    NonZeroDiagonal,
    ParseError,
    SizeMismatch,
    SizeTooLarge,
)
from .fps_core import RegularFps
from .gf2 import BitMatrix, det, parse_matrix_lines, principal_minor_matrix, rank, rank_of_words, row_submatrix
from .signed_perm import FpsTuple, SignedPerm, signed_indices


class ZeroDiagMatrix(BitMatrix):
    """Square binary matrix with zero diagonal."""

    def __post_init__(self):
        super().__post_init__()
        if self.rows != self.cols:
            raise NonSquare(f"expected a square matrix, got {self.rows}x{self.cols}")
        for i, w in enumerate(self.data):
            if (w >> i) & 1:
                raise NonZeroDiagonal(i)

    @classmethod
    def of(cls, m) -> ZeroDiagMatrix:
        """Coerce a BitMatrix or nested 0/1 lists."""
        if isinstance(m, ZeroDiagMatrix):
            return m
        if isinstance(m, BitMatrix):
            return cls(m.rows, m.cols, m.data)
        b = BitMatrix.from_rows(m)
        return cls(b.rows, b.cols, b.data)

    @property
    def n(self) -> int:
        return self.rows

    @property
    def tilde(self) -> BitMatrix:
        """A + I."""
        return BitMatrix(self.n, self.n, tuple(w ^ (1 << i) for i, w in enumerate(self.data)))

    def __repr__(self):
        return f"ZeroDiagMatrix({list(self.row_strings())})"


def parse_zero_diag(text: str) -> ZeroDiagMatrix:
    """Parse the matrix text format, naming the offending line on failure."""
    m, lines = parse_matrix_lines(text)
    if m.rows != m.cols:
        raise ParseError(f"matrix has {m.rows} rows of length {m.cols}; expected a square matrix", lines[-1])
    try:
        return ZeroDiagMatrix(m.rows, m.cols, m.data)
    except NonZeroDiagonal as exc:
        raise ParseError(f"diagonal entry of row {exc.index + 1} must be 0", lines[exc.index]) from None


def all_zero_diag(n: int):
    """All 2^(n^2 - n) zero-diagonal n x n matrices."""
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(offdiag)):
        words = [0] * n
        for b, (i, j) in enumerate(offdiag):
            if (bits >> b) & 1:
                words[i] |= 1 << j
        yield ZeroDiagMatrix(n, n, tuple(words))


def build_fps(a: ZeroDiagMatrix) -> RegularFps:
    """The structure with omega(j) = -j and sigma_j(k) = (-1)^{A~[|j|][|k|]} k."""
    a = ZeroDiagMatrix.of(a)
    n = a.n
    t = a.tilde
    sigma = {}
    for j in signed_indices(n):
        row = t.data[abs(j) - 1]
        sigma[j] = SignedPerm(tuple(-k if (row >> (k - 1)) & 1 else k for k in range(1, n + 1)))
    return RegularFps(FpsTuple(n, SignedPerm.negation(n), sigma))


def tau_coordinates(a: ZeroDiagMatrix, j: int, x: Sequence[float]) -> tuple:
    """Coordinate form of the structure map along facet ``j``: flips x_i when A~[|j|][i] = 1."""
    a = ZeroDiagMatrix.of(a)
    row = a.tilde.data[abs(j) - 1]
    return tuple(-v if (row >> i) & 1 else v for i, v in enumerate(x))


def _coords(f) -> list[int]:
    indices = f.indices if isinstance(f, FaceForm) else f.sorted_indices()
    return [abs(j) - 1 for j in indices]


def family_size(a: ZeroDiagMatrix, f) -> int:
    """2^rank of the principal minor matrix on the face's coordinates."""
    idx = sorted(_coords(f))
    return 2 ** rank(principal_minor_matrix(ZeroDiagMatrix.of(a).tilde, idx))


def component_signs(a: ZeroDiagMatrix, f: FaceForm, sigma_set) -> tuple[int, ...]:
    """Sign flips (eps_1, ..., eps_s) of the component generated by positions ``sigma_set``."""
    t = ZeroDiagMatrix.of(a).tilde
    coords = _coords(f)
    eps = []
    for p in coords:
        e = 0
        for i in sigma_set:
            if not 1 <= i <= len(coords):
                raise IndexOutOfRange(f"position {i} outside 1..{len(coords)}")
            e ^= t[coords[i - 1], p]
        eps.append(e)
    return tuple(eps)


def component(a: ZeroDiagMatrix, f: FaceForm, sigma_set) -> FaceForm:
    eps = component_signs(a, f, sigma_set)
    return FaceForm(f.n, tuple(-j if e else j for j, e in zip(f.indices, eps)))


def _index_sets(n: int):
    for r in range(1, n + 1):
        yield from itertools.combinations(range(n), r)


def all_principal_minors_one(m: BitMatrix) -> bool:
    return all(det(principal_minor_matrix(m, idx)) == 1 for idx in _index_sets(m.rows))


def is_perfect(a: ZeroDiagMatrix) -> bool:
    return all_principal_minors_one(ZeroDiagMatrix.of(a).tilde)


def is_bott(a: ZeroDiagMatrix) -> bool:
    """Acyclicity of the digraph with an edge i -> j whenever A[i][j] = 1."""
    a = ZeroDiagMatrix.of(a)
    graph = {i: {j for j in range(a.n) if (a.data[i] >> j) & 1} for i in range(a.n)}
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError:
        return False
    return True


def strong_witness(a: ZeroDiagMatrix) -> tuple[int, ...] | None:
    """First 1-based index set where the minor and row block ranks differ."""
    t = ZeroDiagMatrix.of(a).tilde
    for idx in _index_sets(t.rows):
        if rank(principal_minor_matrix(t, idx)) != rank(row_submatrix(t, idx)):
            return tuple(i + 1 for i in idx)
    return None


def is_strong(a: ZeroDiagMatrix) -> bool:
    return strong_witness(a) is None


def distinct_rows_independent(m: BitMatrix) -> bool:
    distinct = set(m.data)
    return rank_of_words(distinct) == len(distinct)


def is_manifold(a: ZeroDiagMatrix) -> bool:
    a = ZeroDiagMatrix.of(a)
    return is_strong(a) and distinct_rows_independent(a.tilde)


def is_orientable(a: ZeroDiagMatrix) -> bool:
    return all(bin(w).count("1") % 2 == 0 for w in ZeroDiagMatrix.of(a).data)


def conjugate(a: ZeroDiagMatrix, perm: Sequence[int]) -> ZeroDiagMatrix:
    """The matrix B with B[i][j] = A[perm[i]][perm[j]] (that is, P^-1 A P)."""
    a = ZeroDiagMatrix.of(a)
    words = []
    for i in range(a.n):
        src = a.data[perm[i]]
        words.append(sum(((src >> perm[j]) & 1) << j for j in range(a.n)))
    return ZeroDiagMatrix(a.n, a.n, tuple(words))


def matrices_equivalent(a: ZeroDiagMatrix, b: ZeroDiagMatrix) -> tuple[int, ...] | None:
    """A 0-based permutation p with conjugate(a, p) == b, or None."""
    a, b = ZeroDiagMatrix.of(a), ZeroDiagMatrix.of(b)
    if a.n != b.n:
        raise SizeMismatch(f"matrices of sizes {a.n} and {b.n}")
    if a.n > 8:
        raise SizeTooLarge(f"permutation search supports n <= 8, got {a.n}")
    if sorted(bin(w).count("1") for w in a.data) != sorted(bin(w).count("1") for w in b.data):
        return None
    for perm in itertools.permutations(range(a.n)):
        if conjugate(a, perm) == b:
            return perm
    return None


def _order_key(m: BitMatrix) -> tuple[str, ...]:
    return m.row_strings()


def canonical_form(a: ZeroDiagMatrix) -> ZeroDiagMatrix:
    """Lexicographically least conjugate, comparing rows as bit strings."""
    a = ZeroDiagMatrix.of(a)
    if a.n > 8:
        raise SizeTooLarge(f"canonical form supports n <= 8, got {a.n}")
    return min((conjugate(a, p) for p in itertools.permutations(range(a.n))), key=_order_key)


@dataclass
class AnalysisReport:
    n: int
    is_bott: bool
    is_perfect: bool
    is_strong: bool
    is_manifold: bool
    is_orientable: bool
    family_counts: list[int]
    family_sizes: list[list[int]]
    betti_z2: list[int] | None = None
    matrix: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        return cls(**d)


def family_census(a: ZeroDiagMatrix) -> tuple[list[int], list[list[int]]]:
    """Per dimension: number of face families and their sorted sizes."""
    a = ZeroDiagMatrix.of(a)
    n = a.n
    sizes: list[list[int]] = [[] for _ in range(n)]
    for s in range(1, n + 1):
        for coords in itertools.combinations(range(1, n + 1), s):
            size = family_size(a, FaceSet(n, frozenset(coords)))
            sizes[n - s] += [size] * (2 ** s // size)
    sizes = [sorted(x) for x in sizes]
    return [len(x) for x in sizes], sizes


def analyze(a: ZeroDiagMatrix, homology: bool = True) -> AnalysisReport:
    a = ZeroDiagMatrix.of(a)
    counts, sizes = family_census(a)
    betti = None
    if homology:
        from . import glueback

        cx = glueback.build_complex(glueback.cube(a.n), glueback.lambda_from_matrix(a), structure="orbit")
        betti = glueback.betti_z2(cx)
    return AnalysisReport(
        n=a.n,
        is_bott=is_bott(a),
        is_perfect=is_perfect(a),
        is_strong=is_strong(a),
        is_manifold=is_manifold(a),
        is_orientable=is_orientable(a),
        family_counts=counts,
        family_sizes=sizes,
        betti_z2=betti,
        matrix=list(a.row_strings()),
    )


@dataclass
class EquivalenceClass:
    representative: ZeroDiagMatrix
    members: list[ZeroDiagMatrix]
    report: AnalysisReport

    @property
    def size(self) -> int:
        return len(self.members)


def enumerate_classes(n: int, workers: int = 1, homology: bool = False) -> list[EquivalenceClass]:
    """Bucket every zero-diagonal n x n matrix by canonical form."""
    if n > 4:
        raise SizeTooLarge(f"class enumeration supports n <= 4, got {n}")
    if n < 1:
        raise ValueError("n must be at least 1")
    mats = list(all_zero_diag(n))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            forms = list(pool.map(canonical_form, mats, chunksize=64))
    else:
        forms = [canonical_form(m) for m in mats]
    buckets: dict[ZeroDiagMatrix, list[ZeroDiagMatrix]] = {}
    for m, c in zip(mats, forms):
        buckets.setdefault(c, []).append(m)
    return [
        EquivalenceClass(rep, buckets[rep], analyze(rep, homology=homology))
        for rep in sorted(buckets, key=_order_key)
    ]


@dataclass(frozen=True)
class VectorMatrix:
    """Rows a_1..a_m of length n = sum(dims); column block i has width dims[i].

    Row words use bit c for column c, as in ``gf2``.
    """

    dims: tuple[int, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "rows", tuple(self.rows))
        if any(d < 1 for d in self.dims):
            raise ValueError("block sizes must be positive")
        if len(self.rows) != len(self.dims):
            raise ValueError(f"{len(self.rows)} rows for {len(self.dims)} blocks")
        for r in self.rows:
            if not 0 <= r < 1 << self.n:
                raise ValueError(f"row word {r} does not fit in {self.n} columns")

    @classmethod
    def from_rows(cls, dims, rows) -> VectorMatrix:
        return cls(tuple(dims), BitMatrix.from_rows(rows).data)

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def n(self) -> int:
        return sum(self.dims)

    def block_columns(self, i: int) -> range:
        start = sum(self.dims[:i])
        return range(start, start + self.dims[i])


def vector_matrix_minors(v: VectorMatrix) -> bool:
    """Every Lambda_{k_1...k_m} has all principal minors equal to 1."""
    for ks in itertools.product(*(v.block_columns(i) for i in range(v.m))):
        words = tuple(sum(((row >> k) & 1) << j for j, k in enumerate(ks)) for row in v.rows)
        if not all_principal_minors_one(BitMatrix(v.m, v.m, words)):
            return False
    return True


def matrix_from_vector_matrix(v: VectorMatrix) -> ZeroDiagMatrix:
    for i in range(v.m):
        cols = v.block_columns(i)
        if any(not (v.rows[i] >> c) & 1 for c in cols):
            raise BadDiagonalBlock(f"diagonal block {i + 1} of row {i + 1} is not all ones")
    if not vector_matrix_minors(v):
        raise DegenerateMinor("some principal minor of the vector matrix vanishes")
    tilde = [v.rows[i] for i in range(v.m) for _ in range(v.dims[i])]
    return ZeroDiagMatrix(v.n, v.n, tuple(w ^ (1 << r) for r, w in enumerate(tilde)))
