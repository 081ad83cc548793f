"""Dense matrices over Z2 with each row packed into a Python int.

Bit ``j`` of a row word holds column ``j``.  Indices in this module are
0-based.  Matrices are immutable values, so elimination always works on a
scratch list of words and never touches the input.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NonSquare, ParseError


@dataclass(frozen=True, eq=False)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} row words, got {len(self.data)}")
        limit = 1 << self.cols
        for i, word in enumerate(self.data):
            if not 0 <= word < limit:
                raise ValueError(f"row {i} does not fit in {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        """Build from nested 0/1 sequences, e.g. ``[[1, 0], [1, 1]]``."""
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        words = []
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ValueError(f"row {i} has {len(r)} entries, expected {cols}")
            word = 0
            for j, bit in enumerate(r):
                if bit not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is {bit!r}, not 0 or 1")
                word |= int(bit) << j
            words.append(word)
        return cls(len(rows), cols, tuple(words))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return (self.data[i] >> j) & 1

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_lists(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.data]

    def row_strings(self) -> tuple[str, ...]:
        return tuple("".join(str((w >> j) & 1) for j in range(self.cols)) for w in self.data)

    def transpose(self) -> BitMatrix:
        words = []
        for j in range(self.cols):
            word = 0
            for i, w in enumerate(self.data):
                word |= ((w >> j) & 1) << i
            words.append(word)
        return BitMatrix(self.cols, self.rows, tuple(words))

    def __repr__(self):
        return f"BitMatrix({list(self.row_strings())})"


def rank_of_words(words: Iterable[int]) -> int:
    """Z2-rank of a collection of row words (XOR basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top in basis:
                w ^= basis[top]
            else:
                basis[top] = w
                break
    return len(basis)


def rank(m: BitMatrix) -> int:
    return rank_of_words(m.data)


def det(m: BitMatrix) -> int:
    if not m.is_square:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return int(rank(m) == m.rows)


def _check_indices(idx: Sequence[int], bound: int) -> tuple[int, ...]:
    idx = tuple(idx)
    for a, b in zip(idx, idx[1:]):
        if a >= b:
            raise IndexOutOfRange(f"indices {list(idx)} are not strictly increasing")
    for i in idx:
        if not 0 <= i < bound:
            raise IndexOutOfRange(f"index {i} outside 0..{bound - 1}")
    return idx


def row_submatrix(m: BitMatrix, rows: Sequence[int]) -> BitMatrix:
    rows = _check_indices(rows, m.rows)
    return BitMatrix(len(rows), m.cols, tuple(m.data[i] for i in rows))


def principal_minor_matrix(m: BitMatrix, idx: Sequence[int]) -> BitMatrix:
    if not m.is_square:
        raise NonSquare(f"principal minor of a {m.rows}x{m.cols} matrix")
    idx = _check_indices(idx, m.rows)
    words = []
    for i in idx:
        word = 0
        for out, j in enumerate(idx):
            word |= ((m.data[i] >> j) & 1) << out
        words.append(word)
    return BitMatrix(len(idx), len(idx), tuple(words))


def parse_matrix_lines(text: str) -> tuple[BitMatrix, tuple[int, ...]]:
    """Parse the matrix text format, also returning the source line of each row."""
    rows = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        bad = [c for c in line if c not in "01"]
        if bad:
            raise ParseError(f"unexpected character {bad[0]!r} in matrix row", lineno)
        if rows and len(line) != len(rows[0]):
            raise ParseError(f"row has {len(line)} columns, expected {len(rows[0])}", lineno)
        rows.append([int(c) for c in line])
        lines.append(lineno)
    if not rows:
        raise ParseError("no matrix rows found")
    return BitMatrix.from_rows(rows), tuple(lines)


def parse_matrix(text: str) -> BitMatrix:
    return parse_matrix_lines(text)[0]


def format_matrix(m: BitMatrix) -> str:
    return "".join(s + "\n" for s in m.row_strings())
