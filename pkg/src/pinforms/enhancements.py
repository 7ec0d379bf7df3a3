"""Mod-4 quadratic enhancements of the intersection pairing and the Brown invariant.

An enhancement e satisfies e(x+y) = e(x) + e(y) + 2 (x.y) in Z/4 together
with the parity rule e(x) = x.x mod 2, so a projective-plane core class
only ever takes the values 1 or 3.  The Brown invariant reads off the
octant of the Gauss sum of i**e(x) over all classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .refinements import Refinement
from .surfaces import (
    H1Class,
    IntersectionForm,
    MAX_TABLE_DIM,
    LimitError,
    as_bits,
    class_bit_matrix,
    cross_pairs,
    cross_parity_table,
    direct_sum,
    identity_form,
    is_identity_form,
)


class ValueHistogram(NamedTuple):
    """How often an enhancement takes each value in Z/4 over all classes."""

    n0: int
    n1: int
    n2: int
    n3: int

    @property
    def gauss_deltas(self) -> tuple[int, int]:
        """Real and imaginary parts (n0 - n2, n1 - n3) of the Gauss sum."""
        return self.n0 - self.n2, self.n1 - self.n3


@dataclass(frozen=True)
class Enhancement:
    """Function e with e(x+y) = e(x) + e(y) + 2 (x.y), stored by its basis values."""

    form: IntersectionForm
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.form.dim:
            raise ValueError("basis value count must equal the pairing dimension")
        for i, v in enumerate(self.values):
            if v not in (0, 1, 2, 3):
                raise ValueError("enhancement values live in Z/4")
            if (v ^ self.form.entry(i, i)) & 1:
                raise ValueError(
                    f"value {v} at index {i} breaks the parity rule e(x) = x.x mod 2"
                )

    def __call__(self, x: H1Class | int) -> int:
        xbits = as_bits(x, self.form.dim)
        total = 0
        rem = xbits
        while rem:
            i = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            total += self.values[i]
        return (total + 2 * cross_pairs(self.form, xbits)) & 3

    def values_on_all(self) -> np.ndarray:
        """Values on all 2**n classes, indexed by integer encoding."""
        bits = class_bit_matrix(self.form.dim)
        vec = np.array(self.values, dtype=np.uint8)
        return ((bits @ vec) + 2 * cross_parity_table(self.form)) & 3


def enumerate_enhancements(form: IntersectionForm) -> list[Enhancement]:
    """All 2**n enhancements; bit i of the enumeration code adds 2 to basis value i."""
    n = form.dim
    if n > MAX_TABLE_DIM:
        raise LimitError(f"enhancement enumeration capped at dimension {MAX_TABLE_DIM}, got {n}")
    diag = form.diagonal
    return [
        Enhancement(form, tuple(diag[i] + 2 * ((code >> i) & 1) for i in range(n)))
        for code in range(1 << n)
    ]


def value_histogram(e: Enhancement) -> ValueHistogram:
    """Counts of each value of e over all 2**n classes."""
    counts = np.bincount(e.values_on_all(), minlength=4)
    return ValueHistogram(*(int(c) for c in counts[:4]))


def brown_gauss(e: Enhancement) -> int:
    """Brown invariant read off the exact octant of the Gauss sum.

    The sum of i**e(x) over all classes is A + Bi with A = n0 - n2 and
    B = n1 - n3; its squared magnitude is 2**n and its argument is the
    invariant times pi/4.
    """
    hist = value_histogram(e)
    a, b = hist.gauss_deltas
    if (a, b) == (0, 0):
        raise ValueError("zero Gauss sum; not an enhancement of a nondegenerate pairing")
    if a * a + b * b != 1 << e.form.dim:
        raise ValueError(f"Gauss sum magnitude {a * a + b * b} is not 2**{e.form.dim}")
    return round(math.atan2(b, a) * 4 / math.pi) % 8


_OCTANT_BY_SIGNS = {
    (1, 0): 0,
    (1, 1): 1,
    (0, 1): 2,
    (-1, 1): 3,
    (-1, 0): 4,
    (-1, -1): 5,
    (0, -1): 6,
    (1, -1): 7,
}


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def brown_compass(e: Enhancement) -> int:
    """Brown invariant from the sign pair (sign(n0-n2), sign(n1-n3)) via the octant table."""
    a, b = value_histogram(e).gauss_deltas
    signs = (_sign(a), _sign(b))
    if signs == (0, 0):
        raise ValueError("zero Gauss sum; not an enhancement of a nondegenerate pairing")
    return _OCTANT_BY_SIGNS[signs]


def direct_sum_enhancement(e1: Enhancement, e2: Enhancement) -> Enhancement:
    """Enhancement of the block sum acting blockwise."""
    return Enhancement(direct_sum(e1.form, e2.form), e1.values + e2.values)


def enhancement_from_refinement(q: Refinement) -> Enhancement:
    """Doubling: the enhancement 2q induced by a refinement on an orientable surface."""
    return Enhancement(q.form, tuple(2 * v for v in q.values))


def cap_off_summand(e: Enhancement, index: int) -> tuple[Enhancement, int]:
    """Delete one projective-plane summand; returns the smaller enhancement and the removed value.

    The Brown invariant of the input equals that of the output plus that of
    a single projective plane carrying the removed value, mod 8.
    """
    if not is_identity_form(e.form):
        raise ValueError("capping is defined on the standard nonorientable pairing")
    k = e.form.dim
    if k < 2:
        raise ValueError("capping needs at least two summands")
    if not 0 <= index < k:
        raise IndexError(f"summand index {index} out of range for genus {k}")
    rest = e.values[:index] + e.values[index + 1 :]
    return Enhancement(identity_form(k - 1), rest), e.values[index]
