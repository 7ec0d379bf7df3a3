"""Bit-packed linear algebra over GF(2).

A matrix is a tuple of row masks: bit j of ``rows[i]`` holds entry (i, j).
A vector is a single int: bit i holds coordinate i.
"""

from __future__ import annotations

from typing import Sequence


def dot(x: int, y: int) -> int:
    """Parity of the coordinatewise product of two bit vectors."""
    return (x & y).bit_count() & 1


def identity(n: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(n))


def mat_vec(rows: Sequence[int], x: int) -> int:
    """Matrix times column vector."""
    y = 0
    for i, row in enumerate(rows):
        if (row & x).bit_count() & 1:
            y |= 1 << i
    return y


def mat_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Matrix product; row i of the result is the GF(2) sum of the rows of b picked by row i of a."""
    out = []
    for row in a:
        acc = 0
        rem = row
        while rem:
            j = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            acc ^= b[j]
        out.append(acc)
    return tuple(out)


def transpose(rows: Sequence[int], n: int) -> tuple[int, ...]:
    cols = [0] * n
    for i, row in enumerate(rows):
        rem = row
        while rem:
            j = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            cols[j] |= 1 << i
    return tuple(cols)


def rank(rows: Sequence[int]) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        cur = row
        while cur:
            lead = cur.bit_length() - 1
            if lead in basis:
                cur ^= basis[lead]
            else:
                basis[lead] = cur
                break
    return len(basis)


def inverse(rows: Sequence[int], n: int) -> tuple[int, ...] | None:
    """Inverse matrix, or None if singular."""
    a = list(rows)
    inv = list(identity(n))
    for col in range(n):
        piv = None
        for r in range(col, n):
            if (a[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        for r in range(n):
            if r != col and ((a[r] >> col) & 1):
                a[r] ^= a[col]
                inv[r] ^= inv[col]
    return tuple(inv)
