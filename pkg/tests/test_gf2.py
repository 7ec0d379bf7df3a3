"""Bit-packed GF(2) linear algebra."""

import random

from pinforms import gf2


def dense(rows, n):
    return [[(rows[i] >> j) & 1 for j in range(n)] for i in range(len(rows))]


def from_dense(mat):
    return tuple(sum(v << j for j, v in enumerate(row)) for row in mat)


def test_dot_counts_overlap_parity():
    assert gf2.dot(0b101, 0b100) == 1
    assert gf2.dot(0b101, 0b101) == 0
    assert gf2.dot(0, 0b111) == 0


def test_identity():
    assert gf2.identity(3) == (0b001, 0b010, 0b100)
    assert gf2.mat_vec(gf2.identity(5), 0b10110) == 0b10110


def test_mat_vec_small_example():
    # rows of [[1,1],[0,1]]: x -> (x0+x1, x1)
    rows = from_dense([[1, 1], [0, 1]])
    assert gf2.mat_vec(rows, 0b01) == 0b01
    assert gf2.mat_vec(rows, 0b10) == 0b11
    assert gf2.mat_vec(rows, 0b11) == 0b10


def test_mat_mul_agrees_with_dense_arithmetic():
    rng = random.Random(2024)
    n = 5
    for _ in range(40):
        a = tuple(rng.randrange(1 << n) for _ in range(n))
        b = tuple(rng.randrange(1 << n) for _ in range(n))
        ab = gf2.mat_mul(a, b)
        da, db = dense(a, n), dense(b, n)
        expect = [
            [sum(da[i][k] * db[k][j] for k in range(n)) % 2 for j in range(n)]
            for i in range(n)
        ]
        assert dense(ab, n) == expect


def test_transpose_involution():
    rng = random.Random(7)
    for n in (1, 3, 6):
        rows = tuple(rng.randrange(1 << n) for _ in range(n))
        assert gf2.transpose(gf2.transpose(rows, n), n) == rows


def test_rank_and_inverse():
    assert gf2.rank(gf2.identity(4)) == 4
    assert gf2.rank((0b11, 0b11)) == 1
    assert gf2.inverse((0b11, 0b11), 2) is None

    rows = from_dense([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    inv = gf2.inverse(rows, 3)
    assert inv is not None
    assert gf2.mat_mul(rows, inv) == gf2.identity(3)
    assert gf2.mat_mul(inv, rows) == gf2.identity(3)


def test_inverse_of_random_invertible_matrices():
    rng = random.Random(99)
    n = 6
    found = 0
    while found < 25:
        rows = tuple(rng.randrange(1 << n) for _ in range(n))
        inv = gf2.inverse(rows, n)
        if inv is None:
            assert gf2.rank(rows) < n
            continue
        found += 1
        assert gf2.mat_mul(rows, inv) == gf2.identity(n)


def test_mat_vec_linear():
    rng = random.Random(5)
    n = 8
    rows = tuple(rng.randrange(1 << n) for _ in range(n))
    for _ in range(30):
        x, y = rng.randrange(1 << n), rng.randrange(1 << n)
        assert gf2.mat_vec(rows, x ^ y) == gf2.mat_vec(rows, x) ^ gf2.mat_vec(rows, y)
