"""Field arithmetic checked against a slow bit-by-bit reference."""

import random

import numpy as np
import pytest

from ecsim import gf256


def slow_mul(a: int, b: int) -> int:
    """Carry-less shift-and-add product reduced by the 0x11d modulus."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        if a & 0x100:
            a ^= gf256.PRIM
        b >>= 1
    return acc


def test_mul_matches_reference_exhaustively():
    for a in range(256):
        for b in range(256):
            expected = slow_mul(a, b)
            assert gf256.gf_mul(a, b) == expected
            assert int(gf256.MUL_TABLE[a, b]) == expected


def test_exp_log_tables_are_consistent():
    assert gf256.EXP[0] == 1
    assert gf256.LOG[1] == 0
    for a in range(1, 256):
        assert gf256.EXP[gf256.LOG[a]] == a
    for i in range(255):
        assert gf256.LOG[gf256.EXP[i]] == i
        assert gf256.EXP[i + 255] == gf256.EXP[i]
    # alpha = 2 generates the multiplicative group
    assert len({gf256.EXP[i] for i in range(255)}) == 255


def test_inverse_and_division():
    for a in range(1, 256):
        inv = gf256.gf_inv(a)
        assert gf256.gf_mul(a, inv) == 1
    rng = random.Random(1)
    for _ in range(500):
        a = rng.randrange(256)
        b = rng.randrange(1, 256)
        assert gf256.gf_div(gf256.gf_mul(a, b), b) == a
    with pytest.raises(ZeroDivisionError):
        gf256.gf_inv(0)
    with pytest.raises(ZeroDivisionError):
        gf256.gf_div(7, 0)


def test_pow_matches_repeated_multiplication():
    rng = random.Random(2)
    for _ in range(200):
        a = rng.randrange(1, 256)
        n = rng.randrange(0, 600)
        expected = 1
        for _ in range(n):
            expected = gf256.gf_mul(expected, a)
        assert gf256.gf_pow(a, n) == expected
    assert gf256.gf_pow(0, 3) == 0
    assert gf256.gf_pow(5, 0) == 1


def _random_matrix(rng: random.Random, rows: int, cols: int) -> list[list[int]]:
    return [[rng.randrange(256) for _ in range(cols)] for _ in range(rows)]


def test_matmul_identity_and_associativity():
    rng = random.Random(3)
    ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for _ in range(20):
        a = _random_matrix(rng, 4, 4)
        b = _random_matrix(rng, 4, 4)
        c = _random_matrix(rng, 4, 4)
        assert gf256.gf_matmul(a, ident) == a
        assert gf256.gf_matmul(ident, a) == a
        left = gf256.gf_matmul(gf256.gf_matmul(a, b), c)
        right = gf256.gf_matmul(a, gf256.gf_matmul(b, c))
        assert left == right


def test_matmul_small_hand_case():
    a = [[1, 2], [0, 1]]
    b = [[3, 0], [1, 1]]
    expected = [
        [3 ^ gf256.gf_mul(2, 1), gf256.gf_mul(2, 1)],
        [1, 1],
    ]
    assert gf256.gf_matmul(a, b) == expected


def test_mat_inv_round_trips():
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    # Vandermonde matrices over distinct points are invertible
    for points in ([1, 2, 3], [5, 9, 200], [1, 7, 254]):
        vand = [[gf256.gf_pow(p, j) for j in range(3)] for p in points]
        inv = gf256.gf_mat_inv(vand)
        assert gf256.gf_matmul(vand, inv) == ident
        assert gf256.gf_matmul(inv, vand) == ident


def test_mat_inv_rejects_singular():
    singular = [[1, 2], [1, 2]]
    with pytest.raises(ValueError):
        gf256.gf_mat_inv(singular)


def test_combine_matches_scalar_evaluation():
    rng = random.Random(4)
    rows = np.array(
        [[rng.randrange(256) for _ in range(64)] for _ in range(3)], dtype=np.uint8
    )
    coeffs = [7, 0, 113]
    out = gf256.combine(coeffs, rows)
    assert out.dtype == np.uint8
    for j in range(64):
        expected = 0
        for c, row in zip(coeffs, rows):
            expected ^= slow_mul(c, int(row[j]))
        assert int(out[j]) == expected
