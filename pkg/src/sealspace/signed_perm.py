"""Signed permutations of [±n] and tuples of them.

A signed permutation is stored by the images of 1..n; the image of -k is
always minus the image of k, so negation equivariance cannot be broken.
Signed indices are nonzero ints, 1-based.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import IndexOutOfRange, ParseError, SizeMismatch, SizeTooLarge


@dataclass(frozen=True)
class SignedPerm:
    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(abs(v) for v in self.image) != list(range(1, n + 1)):
            raise ValueError(f"{list(self.image)} is not a signed permutation of [±{n}]")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        if not 1 <= abs(k) <= self.n:
            raise IndexOutOfRange(f"signed index {k} outside [±{self.n}]")
        return self.image[k - 1] if k > 0 else -self.image[-k - 1]

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def negation(cls, n: int) -> SignedPerm:
        return cls(tuple(-k for k in range(1, n + 1)))

    @classmethod
    def from_permutation(cls, perm) -> SignedPerm:
        """Signed permutation induced by a plain 0-based permutation ``k -> perm[k]``."""
        return cls(tuple(p + 1 for p in perm))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))

    def __str__(self):
        return format_signed_perm(self)


def signed_indices(n: int) -> list[int]:
    """[±n] in file order 1, -1, 2, -2, ..."""
    return [s * k for k in range(1, n + 1) for s in (1, -1)]


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """The map ``k -> a(b(k))``."""
    if a.n != b.n:
        raise SizeMismatch(f"cannot compose permutations of sizes {a.n} and {b.n}")
    return SignedPerm(tuple(a(v) for v in b.image))


def inverse(p: SignedPerm) -> SignedPerm:
    out = [0] * p.n
    for k, v in enumerate(p.image, start=1):
        if v > 0:
            out[v - 1] = k
        else:
            out[-v - 1] = -k
    return SignedPerm(tuple(out))


def is_involution(p: SignedPerm) -> bool:
    return compose(p, p).is_identity()


def all_signed_perms(n: int) -> Iterator[SignedPerm]:
    """All 2^n n! elements, permutations outermost."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPerm(tuple(s * v for s, v in zip(signs, perm)))


@dataclass(frozen=True, eq=False)
class FpsTuple:
    """A tuple (omega; sigma_1, sigma_-1, ..., sigma_n, sigma_-n)."""

    n: int
    omega: SignedPerm
    sigma: Mapping[int, SignedPerm]

    def __post_init__(self):
        if self.omega.n != self.n:
            raise SizeMismatch(f"omega acts on [±{self.omega.n}], expected [±{self.n}]")
        if set(self.sigma) != set(signed_indices(self.n)):
            raise SizeMismatch(f"sigma must be given for every index of [±{self.n}]")
        for j, p in self.sigma.items():
            if p.n != self.n:
                raise SizeMismatch(f"sigma[{j}] acts on [±{p.n}], expected [±{self.n}]")
        object.__setattr__(self, "sigma", dict(self.sigma))

    def key(self) -> tuple:
        return (self.omega.image,) + tuple(self.sigma[j].image for j in signed_indices(self.n))

    def __eq__(self, other):
        if not isinstance(other, FpsTuple):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True)
class ValidationReport:
    a_ok: bool
    b_ok: bool
    c_ok: bool
    a_witness: int | None = None
    b_witness: int | None = None
    c_witness: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.a_ok and self.b_ok and self.c_ok

    def summary(self) -> str:
        parts = [
            "(a) pass" if self.a_ok else f"(a) fail at k={self.a_witness}",
            "(b) pass" if self.b_ok else f"(b) fail at j={self.b_witness}",
            "(c) pass" if self.c_ok else f"(c) fail at (j,k)=({self.c_witness[0]},{self.c_witness[1]})",
        ]
        return ", ".join(parts)


def validate_tuple(t: FpsTuple) -> ValidationReport:
    idx = signed_indices(t.n)
    a_wit = next((k for k in idx if t.omega(t.omega(k)) != k), None)
    b_wit = None
    for j in idx:
        sj = t.sigma[j]
        if sj(j) != t.omega(j) or not compose(t.sigma[t.omega(j)], sj).is_identity():
            b_wit = j
            break
    c_wit = None
    for j in idx:
        for k in idx:
            left = compose(t.sigma[t.sigma[j](k)], t.sigma[j])
            right = compose(t.sigma[t.sigma[k](j)], t.sigma[k])
            if left != right:
                c_wit = (j, k)
                break
        if c_wit:
            break
    return ValidationReport(a_wit is None, b_wit is None, c_wit is None, a_wit, b_wit, c_wit)


def shuffled_conjugate(t: FpsTuple, s: SignedPerm) -> FpsTuple:
    """Return (S^-1 omega S; S^-1 sigma_{S(j)} S)."""
    if s.n != t.n:
        raise SizeMismatch(f"conjugator acts on [±{s.n}], tuple on [±{t.n}]")
    si = inverse(s)
    omega = compose(si, compose(t.omega, s))
    sigma = {j: compose(si, compose(t.sigma[s(j)], s)) for j in signed_indices(t.n)}
    return FpsTuple(t.n, omega, sigma)


def tuples_equivalent(t1: FpsTuple, t2: FpsTuple) -> SignedPerm | None:
    """A signed permutation S with shuffled_conjugate(t1, S) == t2, or None."""
    if t1.n != t2.n:
        raise SizeMismatch(f"tuples on [±{t1.n}] and [±{t2.n}]")
    if t1.n > 4:
        raise SizeTooLarge(f"exhaustive conjugacy search supports n <= 4, got {t1.n}")
    for s in all_signed_perms(t1.n):
        if shuffled_conjugate(t1, s) == t2:
            return s
    return None


def signed_involutions(n: int) -> list[SignedPerm]:
    return [p for p in all_signed_perms(n) if is_involution(p)]


def enumerate_valid_tuples(n: int) -> Iterator[FpsTuple]:
    """Every tuple on [±n] satisfying conditions (a)-(c).

    Conditions (a) and (b) are built in: omega ranges over signed involutions
    and for each omega-orbit {j, omega(j)} one map is chosen freely (subject to
    sigma_j(j) = omega(j)) and its partner is its inverse.  Condition (c) is
    filtered.  n = 3 takes a few seconds.
    """
    if n > 3:
        raise SizeTooLarge(f"tuple enumeration supports n <= 3, got {n}")
    perms = list(all_signed_perms(n))
    for omega in signed_involutions(n):
        reps = []
        seen = set()
        for j in signed_indices(n):
            if j not in seen:
                seen.update({j, omega(j)})
                reps.append(j)
        choices = []
        for j in reps:
            if omega(j) == j:
                choices.append([p for p in perms if p(j) == j and is_involution(p)])
            else:
                choices.append([p for p in perms if p(j) == omega(j)])
        for picked in itertools.product(*choices):
            sigma = {}
            for j, p in zip(reps, picked):
                sigma[j] = p
                sigma[omega(j)] = inverse(p) if omega(j) != j else p
            t = FpsTuple(n, omega, sigma)
            if validate_tuple(t).c_ok:
                yield t


def parse_signed_perm(line: str, lineno: int | None = None) -> SignedPerm:
    try:
        image = tuple(int(tok) for tok in line.replace("−", "-").split())
    except ValueError:
        raise ParseError(f"expected signed integers, got {line.strip()!r}", lineno) from None
    try:
        return SignedPerm(image)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def format_signed_perm(p: SignedPerm) -> str:
    return " ".join(str(v) for v in p.image)


def parse_tuple(text: str) -> FpsTuple:
    """Parse a tuple file: omega, then sigma_1, sigma_-1, ..., sigma_n, sigma_-n."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append((lineno, parse_signed_perm(line, lineno)))
    if not entries:
        raise ParseError("empty tuple file")
    n = entries[0][1].n
    for lineno, p in entries[1:]:
        if p.n != n:
            raise ParseError(f"permutation has {p.n} entries, expected {n}", lineno)
    if len(entries) != 2 * n + 1:
        where = entries[2 * n + 1][0] if len(entries) > 2 * n + 1 else None
        raise ParseError(f"expected {2 * n + 1} permutation lines for n={n}, got {len(entries)}", where)
    sigma = {j: p for j, (_, p) in zip(signed_indices(n), entries[1:])}
    return FpsTuple(n, entries[0][1], sigma)


def format_tuple(t: FpsTuple) -> str:
    lines = [format_signed_perm(t.omega)]
    lines += [format_signed_perm(t.sigma[j]) for j in signed_indices(t.n)]
    return "\n".join(lines) + "\n"
