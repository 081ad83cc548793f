"""Glue-back spaces M(W, mu) = W x Z2^n / ~ as explicit cell complexes.

The base W is the small cube C_0 = [0, 1/4]^n or one of its partition
smoothings.  Facets are labelled by :class:`Facet`: the coordinate facets
``x_j = 0`` are ``Facet(False, (j,))`` and the far facets are
``Facet(True, block)`` where ``block`` lists the coordinates merged into
that facet (a single coordinate for the unsmoothed cube).  Group elements
of Z2^n are ints with bit k-1 standing for e_k.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .errors import IncompatibleFunction, InconsistentFunction, NotAPartition, ParseError
from .gf2 import BitMatrix, format_matrix, parse_matrix, rank
from .matrix_fps import ZeroDiagMatrix


class Facet(NamedTuple):
    starred: bool
    block: tuple[int, ...]

    def __str__(self):
        if not self.starred:
            return f"F{self.block[0]}"
        if len(self.block) == 1:
            return f"F*{self.block[0]}"
        return "F*{" + ",".join(map(str, self.block)) + "}"


@dataclass(frozen=True)
class Face:
    """A face, recorded by the cube vertices it contains and the facets containing it."""

    vertices: frozenset[frozenset[int]]
    facets: frozenset[Facet]
    dim: int


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                ra, rb = rb, ra
            self.parent[ra] = rb


def _normalize_partition(partition: Iterable[Iterable[int]], n: int | None = None) -> tuple[tuple[int, ...], ...]:
    blocks = [tuple(sorted(b)) for b in partition]
    if not blocks or any(not b for b in blocks):
        raise NotAPartition("partition blocks must be nonempty")
    flat = [x for b in blocks for x in b]
    if n is None:
        n = max(flat)
    if len(flat) != len(set(flat)):
        raise NotAPartition(f"blocks {blocks} overlap")
    if sorted(flat) != list(range(1, n + 1)):
        raise NotAPartition(f"blocks {blocks} do not cover 1..{n} exactly")
    return tuple(sorted(blocks))


class SmoothedCube:
    """The cube C_0 with the far facets of each partition block merged.

    Corners x_l = x_l' = 1/4 with l, l' in one block are smoothed away, which
    removes every vertex of C_0 with two starred coordinates in one block.
    Faces are the nonempty intersections of facets, computed from the
    surviving vertices; dimensions come from chain length in the face poset.
    """

    def __init__(self, partition: Iterable[Iterable[int]], n: int | None = None):
        self.partition = _normalize_partition(partition, n)
        self.n = sum(len(b) for b in self.partition)
        self.facets = tuple(Facet(False, (j,)) for j in range(1, self.n + 1)) + tuple(
            Facet(True, b) for b in self.partition
        )
        self.vertices = [
            frozenset(s)
            for r in range(self.n + 1)
            for s in itertools.combinations(range(1, self.n + 1), r)
            if all(len(set(s) & set(b)) <= 1 for b in self.partition)
        ]
        self._build_faces()

    @property
    def is_plain_cube(self) -> bool:
        return all(len(b) == 1 for b in self.partition)

    def on_facet(self, vertex: frozenset[int], facet: Facet) -> bool:
        if facet.starred:
            return bool(vertex & set(facet.block))
        return facet.block[0] not in vertex

    def _build_faces(self) -> None:
        vsets = {}
        for r in range(len(self.facets) + 1):
            for chosen in itertools.combinations(self.facets, r):
                vs = frozenset(v for v in self.vertices if all(self.on_facet(v, F) for F in chosen))
                if vs and vs not in vsets:
                    vsets[vs] = frozenset(F for F in self.facets if all(self.on_facet(v, F) for v in vs))
        dims: dict[frozenset, int] = {}
        for vs in sorted(vsets, key=len):
            below = [dims[w] for w in dims if w < vs]
            dims[vs] = 1 + max(below) if below else 0
        self.faces = sorted(
            (Face(vs, vsets[vs], dims[vs]) for vs in vsets),
            key=lambda f: (f.dim, sorted((F.starred, F.block) for F in f.facets)),
        )
        self.face_index = {f.vertices: i for i, f in enumerate(self.faces)}
        self.sub_faces = []
        for f in self.faces:
            self.sub_faces.append(
                [i for i, e in enumerate(self.faces) if e.dim == f.dim - 1 and e.vertices < f.vertices]
            )

    def faces_of_dim(self, d: int) -> list[int]:
        return [i for i, f in enumerate(self.faces) if f.dim == d]

    def __repr__(self):
        return f"SmoothedCube({[list(b) for b in self.partition]})"


def cube(n: int) -> SmoothedCube:
    return SmoothedCube([[j] for j in range(1, n + 1)])


def smooth(partition: Iterable[Iterable[int]], n: int | None = None) -> SmoothedCube:
    return SmoothedCube(partition, n)


def simplex_product_faces(dims: Iterable[int]) -> list[tuple[tuple[frozenset[int], ...], int]]:
    """Faces of a product of simplices: per factor a nonempty vertex subset, with dimension."""
    factors = []
    for d in dims:
        subsets = [frozenset(c) for r in range(1, d + 2) for c in itertools.combinations(range(d + 1), r)]
        factors.append(subsets)
    return [(combo, sum(len(s) - 1 for s in combo)) for combo in itertools.product(*factors)]


def theta_isomorphism(base: SmoothedCube) -> dict[int, tuple] | None:
    """Check the facet relabelling onto the product of simplices.

    The l-th coordinate facet of block i goes to the facet opposite vertex l
    of the i-th simplex and the merged far facet to the facet opposite vertex
    0.  Returns the induced map from faces of ``base`` to faces of the product
    if it is a dimension-preserving order isomorphism, else None.
    """
    label = {}
    for i, block in enumerate(base.partition):
        label[Facet(True, block)] = (i, 0)
        for k, j in enumerate(block, start=1):
            label[Facet(False, (j,))] = (i, k)
    dims = [len(b) for b in base.partition]
    product = dict(simplex_product_faces(dims))
    mapping = {}
    for idx, f in enumerate(base.faces):
        removed = {label[F] for F in f.facets}
        image = tuple(frozenset(k for k in range(d + 1) if (i, k) not in removed) for i, d in enumerate(dims))
        if image not in product or product[image] != f.dim:
            return None
        mapping[idx] = image
    if len(set(mapping.values())) != len(mapping) or len(mapping) != len(product):
        return None

    def contained(x, y):
        return all(a <= b for a, b in zip(x, y))

    for a, fa in enumerate(base.faces):
        for b, fb in enumerate(base.faces):
            if (fa.vertices <= fb.vertices) != contained(mapping[a], mapping[b]):
                return None
    return mapping


@dataclass(frozen=True)
class CharFunction:
    n: int
    values: Mapping[Facet, int]

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))
        for F, v in self.values.items():
            if not 0 <= v < 1 << self.n:
                raise ValueError(f"value of {F} does not lie in Z2^{self.n}")

    def __call__(self, facet: Facet) -> int:
        return self.values[facet]


def vector_str(v: int, n: int) -> str:
    terms = [f"e{k}" for k in range(1, n + 1) if (v >> (k - 1)) & 1]
    return "+".join(terms) if terms else "0"


def lambda_from_matrix(a: ZeroDiagMatrix) -> CharFunction:
    """e_j on the coordinate facets, row j of A + I on the far facets."""
    a = ZeroDiagMatrix.of(a)
    values = {}
    for j in range(1, a.n + 1):
        values[Facet(False, (j,))] = 1 << (j - 1)
        values[Facet(True, (j,))] = a.tilde.data[j - 1]
    return CharFunction(a.n, values)


def induced_function(mu: CharFunction, partition) -> CharFunction:
    blocks = _normalize_partition(partition, mu.n)
    values = {}
    for j in range(1, mu.n + 1):
        values[Facet(False, (j,))] = mu(Facet(False, (j,)))
    for b in blocks:
        first = mu(Facet(True, (b[0],)))
        for l in b[1:]:
            if mu(Facet(True, (l,))) != first:
                raise IncompatibleFunction(
                    f"far facets {b[0]} and {l} share a block but carry "
                    f"{vector_str(first, mu.n)} and {vector_str(mu(Facet(True, (l,))), mu.n)}"
                )
        values[Facet(True, b)] = first
    return CharFunction(mu.n, values)


def canonical_partition(a: ZeroDiagMatrix) -> list[tuple[int, ...]]:
    """Coordinates grouped by equal rows of A + I."""
    a = ZeroDiagMatrix.of(a)
    groups: dict[int, list[int]] = {}
    for j, w in enumerate(a.tilde.data, start=1):
        groups.setdefault(w, []).append(j)
    return sorted(tuple(g) for g in groups.values())


def span(vectors: Iterable[int]) -> set[int]:
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


@dataclass
class QuotientComplex:
    """Cells per dimension and Z2 boundary matrices.

    ``cells[d]`` lists representatives ``(face index, group element)``;
    ``boundary[d]`` maps d-chains to (d-1)-chains, so it has one row per
    (d-1)-cell and one column per d-cell (``boundary[0]`` is empty).
    """

    dim: int
    cells: list[list[tuple[int, int]]]
    orbit_sizes: list[list[int]]
    boundary: list[BitMatrix]
    structure: str = "orbit"
    cw_faithful: bool = True
    base: SmoothedCube | None = field(default=None, repr=False)

    def cell_counts(self) -> list[int]:
        return [len(c) for c in self.cells]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.cell_counts()))


def _check_domain(base: SmoothedCube, mu: CharFunction) -> None:
    if mu.n != base.n:
        raise InconsistentFunction(f"function takes values in Z2^{mu.n}, base has dimension {base.n}")
    if set(mu.values) != set(base.facets):
        missing = sorted(map(str, set(base.facets) - set(mu.values)))
        extra = sorted(map(str, set(mu.values) - set(base.facets)))
        raise InconsistentFunction(f"function domain mismatch: missing {missing}, unexpected {extra}")


def _boundary_matrix(rows: int, columns: list[list[int]]) -> BitMatrix:
    """Matrix with one column per entry of ``columns`` (a list of row indices, counted mod 2)."""
    words = [0] * rows
    for c, col in enumerate(columns):
        for r in col:
            words[r] ^= 1 << c
    return BitMatrix(rows, len(columns), tuple(words))


def build_complex(base: SmoothedCube, mu: CharFunction, structure: str | None = None) -> QuotientComplex:
    """Cell structure on M(base, mu).

    ``structure="orbit"`` takes every (face, g) pair and identifies g with
    g + mu(F) for each facet F containing the face; cells are the orbits.

    ``structure="seal"`` (plain cube only, and the default there) further
    merges the 2^n copies across the coordinate facets x_j = 0, which
    reassembles the big cube [-1/4, 1/4]^n.  Its cells are then the images
    of big-cube faces, one per face family of the structure.  Those open
    cells embed only when no big face is folded onto itself; otherwise the
    complex is flagged ``cw_faithful = False``.
    """
    _check_domain(base, mu)
    if structure is None:
        structure = "seal" if base.is_plain_cube else "orbit"
    if structure == "orbit":
        return _orbit_complex(base, mu)
    if structure == "seal":
        if not base.is_plain_cube:
            raise ValueError("the seal cell structure is defined on the unsmoothed cube only")
        return _seal_complex(base, mu)
    raise ValueError(f"unknown cell structure {structure!r}")


def _collect(base, faces, generators, group_size):
    """Union-find over (face, g) pairs; returns per-face orbit representatives and lookup."""
    slot = {f: i for i, f in enumerate(faces)}
    uf = UnionFind(len(faces) * group_size)
    for f in faces:
        offset = slot[f] * group_size
        for v in generators[f]:
            for g in range(group_size):
                uf.union(offset + g, offset + (g ^ v))
    orbit_size: dict[int, int] = {}
    for x in range(len(faces) * group_size):
        r = uf.find(x)
        orbit_size[r] = orbit_size.get(r, 0) + 1

    def rep(f, g):
        return uf.find(slot[f] * group_size + g)

    return rep, orbit_size, slot


def _assemble(base, faces, rep, orbit_size, slot, group_size, boundary_of):
    n = base.n
    cells: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    sizes: list[list[int]] = [[] for _ in range(n + 1)]
    index: dict[int, tuple[int, int]] = {}
    for f in faces:
        d = base.faces[f].dim
        for g in range(group_size):
            r = rep(f, g)
            if r not in index:
                index[r] = (d, len(cells[d]))
                cells[d].append((f, g))
                sizes[d].append(orbit_size[r])
    boundary = [BitMatrix(0, len(cells[0]), ())]
    for d in range(1, n + 1):
        columns = []
        for f, g in cells[d]:
            col = None
            # the column must not depend on the orbit member chosen
            for h in range(group_size):
                if rep(f, h) != rep(f, g):
                    continue
                rows = sorted(index[rep(e, x)][1] for e, x in boundary_of(f, h))
                counted = [r for r in set(rows) if rows.count(r) % 2]
                if col is None:
                    col = sorted(counted)
                elif col != sorted(counted):
                    raise RuntimeError("boundary depends on the orbit representative")
            columns.append(col)
        boundary.append(_boundary_matrix(len(cells[d - 1]), columns))
    for d in range(2, n + 1):
        if any(w for w in _mul(boundary[d - 1], boundary[d]).data):
            raise RuntimeError("boundary of a boundary is nonzero")
    return cells, sizes, boundary


def _mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    words = []
    for w in a.data:
        acc = 0
        for k in range(a.cols):
            if (w >> k) & 1:
                acc ^= b.data[k]
        words.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(words))


def _orbit_complex(base: SmoothedCube, mu: CharFunction) -> QuotientComplex:
    group_size = 1 << base.n
    faces = list(range(len(base.faces)))
    generators = {f: [mu(F) for F in base.faces[f].facets] for f in faces}
    rep, orbit_size, slot = _collect(base, faces, generators, group_size)

    def boundary_of(f, g):
        return [(e, g) for e in base.sub_faces[f]]

    cells, sizes, boundary = _assemble(base, faces, rep, orbit_size, slot, group_size, boundary_of)
    return QuotientComplex(base.n, cells, sizes, boundary, "orbit", True, base)


def _seal_complex(base: SmoothedCube, mu: CharFunction) -> QuotientComplex:
    n = base.n
    group_size = 1 << n
    mirrors = [Facet(False, (j,)) for j in range(1, n + 1)]
    # faces of C_0 lying on far facets only; each is one corner piece of a big-cube face
    faces = [i for i, f in enumerate(base.faces) if all(F.starred for F in f.facets)]
    starred = {f: {F.block[0] for F in base.faces[f].facets} for f in faces}
    generators = {}
    faithful = True
    for f in faces:
        own = [mu(F) for F in base.faces[f].facets]
        across = [mu(M) for M in mirrors if M.block[0] not in starred[f]]
        generators[f] = own + across
        if len(span(own + across)) != len(span(own)) * len(span(across)):
            faithful = False
    rep, orbit_size, slot = _collect(base, faces, generators, group_size)
    by_starred = {frozenset(starred[f]): f for f in faces}

    def boundary_of(f, g):
        out = []
        for l in range(1, n + 1):
            if l in starred[f]:
                continue
            e = by_starred[frozenset(starred[f] | {l})]
            out.append((e, g))
            out.append((e, g ^ mu(Facet(False, (l,)))))
        return out

    cells, sizes, boundary = _assemble(base, faces, rep, orbit_size, slot, group_size, boundary_of)
    return QuotientComplex(n, cells, sizes, boundary, "seal", faithful, base)


def betti_z2(c: QuotientComplex) -> list[int]:
    ranks = [rank(b) for b in c.boundary] + [0]
    return [len(c.cells[d]) - ranks[d] - ranks[d + 1] for d in range(c.dim + 1)]


@dataclass(frozen=True)
class Singularity:
    vertex: frozenset[Facet]
    witness: tuple[Facet, ...]

    @property
    def r(self) -> int:
        return len(self.witness)

    def vertex_name(self) -> str:
        stars = sorted(j for F in self.vertex if F.starred for j in F.block)
        return "u" + "".join(map(str, stars)) if stars else "u0"


def _facet_order(F: Facet):
    return (F.starred, F.block)


def vertex_singularities(base: SmoothedCube, mu: CharFunction) -> list[Singularity]:
    """Vertices where the distinct values of mu are linearly dependent.

    The witness lists facets whose values form a minimal dependent set: all
    but the last are independent and the last value is their sum.
    """
    _check_domain(base, mu)
    out = []
    for f in base.faces:
        if f.dim != 0:
            continue
        basis: dict[int, tuple[int, int]] = {}  # leading bit -> (vector, mask of chosen facets)
        chosen: list[Facet] = []
        seen_values = {}
        witness = None
        for F in sorted(f.facets, key=_facet_order):
            v = mu(F)
            if v in seen_values:
                continue
            seen_values[v] = F
            w, mask = v, 0
            while w:
                top = w.bit_length() - 1
                if top not in basis:
                    break
                w ^= basis[top][0]
                mask ^= basis[top][1]
            if w:
                basis[w.bit_length() - 1] = (w, mask ^ (1 << len(chosen)))
                chosen.append(F)
            else:
                witness = tuple(chosen[i] for i in range(len(chosen)) if (mask >> i) & 1) + (F,)
                break
        if witness is not None:
            out.append(Singularity(f.facets, witness))
    return out


def h_vector(dims: Iterable[int]) -> list[int]:
    """Coefficients of the product of (1 + t + ... + t^d) over ``dims``."""
    poly = [1]
    for d in dims:
        new = [0] * (len(poly) + d)
        for i, c in enumerate(poly):
            for k in range(d + 1):
                new[i + k] += c
        poly = new
    return poly


def export_complex(c: QuotientComplex) -> str:
    lines = [f"dimension {c.dim}"]
    lines += [f"cells {d} {len(cs)}" for d, cs in enumerate(c.cells)]
    out = "\n".join(lines) + "\n"
    for d in range(1, c.dim + 1):
        b = c.boundary[d]
        out += f"boundary {d} {b.rows} {b.cols}\n" + format_matrix(b)
    return out


def parse_complex(text: str) -> tuple[list[int], list[BitMatrix]]:
    """Read an exported complex back as (cell counts, boundary matrices)."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise ParseError("unexpected end of complex file")
        pos += 1
        return lines[pos - 1]

    lineno, head = take()
    parts = head.split()
    if len(parts) != 2 or parts[0] != "dimension":
        raise ParseError("expected 'dimension N'", lineno)
    dim = int(parts[1])
    counts = []
    for d in range(dim + 1):
        lineno, ln = take()
        parts = ln.split()
        if parts[:2] != ["cells", str(d)] or len(parts) != 3:
            raise ParseError(f"expected 'cells {d} COUNT'", lineno)
        counts.append(int(parts[2]))
    boundary = [BitMatrix(0, counts[0], ())]
    for d in range(1, dim + 1):
        lineno, ln = take()
        parts = ln.split()
        if parts[:2] != ["boundary", str(d)] or len(parts) != 4:
            raise ParseError(f"expected 'boundary {d} ROWS COLS'", lineno)
        rows, cols = int(parts[2]), int(parts[3])
        body = [take()[1] for _ in range(rows)]
        m = parse_matrix("\n".join(body)) if rows else BitMatrix(0, cols, ())
        if (m.rows, m.cols) != (rows, cols):
            raise ParseError(f"boundary {d} is {m.rows}x{m.cols}, header says {rows}x{cols}", lineno)
        boundary.append(m)
    return counts, boundary
