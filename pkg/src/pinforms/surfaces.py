"""Closed surfaces in standard form and their mod-2 intersection pairing.

An orientable genus-g surface carries the block sum of g hyperbolic planes
on the interleaved basis a1, b1, ..., ag, bg.  A nonorientable genus-k
surface carries the k-by-k identity pairing on the core classes of its k
projective-plane summands.  Homology classes are encoded as integers with
bit i giving the coefficient of basis vector i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import gf2

# Generators over all 2**n classes stay usable up to this dimension.
MAX_CLASS_DIM = 24
# Dense per-class value tables (histograms, censuses) stop here.
MAX_TABLE_DIM = 20


class LimitError(RuntimeError):
    """Raised when a computation would exceed the documented size limits."""


@dataclass(frozen=True)
class H1Class:
    """A mod-2 homology class; bit i of ``bits`` is the coefficient of basis vector i."""

    dim: int
    bits: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"class bits {self.bits:#x} out of range for dimension {self.dim}")

    @classmethod
    def from_coeffs(cls, coeffs) -> "H1Class":
        coeffs = tuple(coeffs)
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError("coefficients must be 0 or 1")
            bits |= c << i
        return cls(len(coeffs), bits)

    @classmethod
    def zero(cls, dim: int) -> "H1Class":
        return cls(dim, 0)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.dim))

    def __add__(self, other: "H1Class") -> "H1Class":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return H1Class(self.dim, self.bits ^ other.bits)


def as_bits(x: "H1Class | int", dim: int) -> int:
    """Accept a class or its integer encoding; validate against ``dim``."""
    if isinstance(x, H1Class):
        if x.dim != dim:
            raise ValueError(f"class dimension {x.dim} does not match pairing dimension {dim}")
        return x.bits
    if not 0 <= x < (1 << dim):
        raise ValueError(f"class bits {x:#x} out of range for dimension {dim}")
    return x


@dataclass(frozen=True)
class IntersectionForm:
    """Symmetric nondegenerate bilinear pairing over GF(2), stored as row masks."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.dim
        if n < 0 or len(self.rows) != n:
            raise ValueError("row count must equal dim")
        if any(not 0 <= r < (1 << n) for r in self.rows):
            raise ValueError("row mask out of range")
        if self.rows != gf2.transpose(self.rows, n):
            raise ValueError("pairing matrix must be symmetric")
        if gf2.rank(self.rows) != n:
            raise ValueError("pairing matrix must be invertible over GF(2)")

    @classmethod
    def from_matrix(cls, matrix) -> "IntersectionForm":
        rows = tuple(sum((int(v) & 1) << j for j, v in enumerate(row)) for row in matrix)
        return cls(len(rows), rows)

    @property
    def matrix(self) -> np.ndarray:
        n = self.dim
        out = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(n):
                out[i, j] = (self.rows[i] >> j) & 1
        return out

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple((self.rows[i] >> i) & 1 for i in range(self.dim))

    def pairing_bits(self, x: int, y: int) -> int:
        """Pairing of two classes given as bit masks."""
        return gf2.dot(x, gf2.mat_vec(self.rows, y))


def hyperbolic_form(g: int) -> IntersectionForm:
    """Block sum of g hyperbolic planes on the interleaved basis a1, b1, ..., ag, bg."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    rows = []
    for b in range(g):
        rows.append(1 << (2 * b + 1))
        rows.append(1 << (2 * b))
    return IntersectionForm(2 * g, tuple(rows))


def identity_form(k: int) -> IntersectionForm:
    """Identity pairing on k projective-plane core classes."""
    if k < 0:
        raise ValueError("rank must be nonnegative")
    return IntersectionForm(k, gf2.identity(k))


def direct_sum(f1: IntersectionForm, f2: IntersectionForm) -> IntersectionForm:
    """Block-diagonal sum; the second summand's basis is shifted past the first."""
    rows = f1.rows + tuple(r << f1.dim for r in f2.rows)
    return IntersectionForm(f1.dim + f2.dim, rows)


def intersection(form: IntersectionForm, x: H1Class, y: H1Class) -> int:
    """Mod-2 intersection number of two classes."""
    return form.pairing_bits(as_bits(x, form.dim), as_bits(y, form.dim))


def is_identity_form(form: IntersectionForm) -> bool:
    return form.rows == gf2.identity(form.dim)


def is_hyperbolic_form(form: IntersectionForm) -> bool:
    """Standard orientable layout: [[0,1],[1,0]] blocks on interleaved basis pairs."""
    return form.dim % 2 == 0 and form == hyperbolic_form(form.dim // 2)


def is_alternating(form: IntersectionForm) -> bool:
    return all(d == 0 for d in form.diagonal)


@dataclass(frozen=True)
class Surface:
    """A closed surface in standard form."""

    kind: str
    genus: int
    form: IntersectionForm

    def __post_init__(self):
        if self.kind not in ("orientable", "nonorientable"):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.kind == "orientable":
            if self.genus < 0:
                raise ValueError("orientable genus must be nonnegative")
            if self.form.dim != 2 * self.genus:
                raise ValueError("orientable surface needs a rank-2g pairing")
        else:
            if self.genus < 1:
                raise ValueError("nonorientable genus must be at least 1")
            if self.form.dim != self.genus:
                raise ValueError("nonorientable surface needs a rank-k pairing")

    @property
    def label(self) -> str:
        return ("S:" if self.kind == "orientable" else "N:") + str(self.genus)


def orientable_surface(g: int) -> Surface:
    """Closed orientable surface of genus g."""
    return Surface("orientable", g, hyperbolic_form(g))


def nonorientable_surface(k: int) -> Surface:
    """Connected sum of k projective planes."""
    if k < 1:
        raise ValueError("nonorientable genus must be at least 1")
    return Surface("nonorientable", k, identity_form(k))


def enumerate_classes(form: IntersectionForm, limit: int = MAX_CLASS_DIM) -> Iterator[H1Class]:
    """Yield all 2**n classes in ascending integer encoding."""
    if form.dim > limit:
        raise LimitError(f"class enumeration capped at dimension {limit}, got {form.dim}")
    n = form.dim
    return (H1Class(n, bits) for bits in range(1 << n))


def cross_pairs(form: IntersectionForm, xbits: int) -> int:
    """Sum of pairing entries over bit pairs i < j set in ``xbits``, mod 2."""
    total = 0
    rem = xbits
    rows = form.rows
    while rem:
        i = (rem & -rem).bit_length() - 1
        rem &= rem - 1
        total ^= (rows[i] & rem).bit_count() & 1
    return total


def _check_table_dim(n: int):
    if n > MAX_TABLE_DIM:
        raise LimitError(f"dense class tables capped at dimension {MAX_TABLE_DIM}, got {n}")


@lru_cache(maxsize=32)
def class_bit_matrix(n: int) -> np.ndarray:
    """(2**n, n) coefficient bits of every class, row index = integer encoding."""
    _check_table_dim(n)
    idx = np.arange(1 << n, dtype=np.uint32)
    out = ((idx[:, None] >> np.arange(n, dtype=np.uint32)) & 1).astype(np.uint8)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=32)
def cross_parity_table(form: IntersectionForm) -> np.ndarray:
    """cross_pairs of every class as a dense table, built by peeling the lowest bit."""
    _check_table_dim(form.dim)
    size = 1 << form.dim
    table = np.zeros(size, dtype=np.uint8)
    rows = form.rows
    for x in range(1, size):
        low = x & -x
        i = low.bit_length() - 1
        y = x ^ low
        table[x] = table[y] ^ ((rows[i] & y).bit_count() & 1)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=32)
def self_pairing_table(form: IntersectionForm) -> np.ndarray:
    """x.x for every class; linear in x because the pairing is symmetric."""
    _check_table_dim(form.dim)
    bits = class_bit_matrix(form.dim)
    vec = np.array(form.diagonal, dtype=np.uint8)
    out = (bits @ vec) & 1
    out.setflags(write=False)
    return out
