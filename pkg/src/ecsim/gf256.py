"""Arithmetic over GF(2^8) with the 0x11d reducing polynomial.

Field elements are ints in 0..255.  Addition is XOR.  Multiplication goes
through log/antilog tables; bulk byte-array transforms go through a full
256x256 product table so numpy can apply them with a single fancy index.
"""

import numpy as np

PRIM = 0x11D  # x^8 + x^4 + x^3 + x^2 + 1, generator alpha = 2

EXP = [0] * 512  # alpha**i, doubled so products need no modulo
LOG = [0] * 256  # log base alpha, LOG[0] unused

_x = 1
for _i in range(255):
    EXP[_i] = _x
    LOG[_x] = _i
    _x <<= 1
    if _x & 0x100:
        _x ^= PRIM
for _i in range(255, 512):
    EXP[_i] = EXP[_i - 255]

# MUL_TABLE[a][b] == a*b in the field; 64 KiB, built once at import
MUL_TABLE = np.zeros((256, 256), dtype=np.uint8)
_logs = np.array(LOG, dtype=np.int32)
_exps = np.array(EXP, dtype=np.uint8)
for _a in range(1, 256):
    MUL_TABLE[_a, 1:] = _exps[(LOG[_a] + _logs[1:]) % 255]


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def gf_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("no inverse for 0 in GF(256)")
    return EXP[255 - LOG[a]]


def gf_div(a: int, b: int) -> int:
    return gf_mul(a, gf_inv(b))


def gf_pow(a: int, n: int) -> int:
    if n == 0:
        return 1
    if a == 0:
        return 0
    return EXP[(LOG[a] * n) % 255]


def gf_matmul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    """Product of two small GF(256) matrices given as row lists."""
    rows, inner, cols = len(A), len(B), len(B[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for j in range(cols):
            acc = 0
            for t in range(inner):
                acc ^= gf_mul(Ai[t], B[t][j])
            out[i][j] = acc
    return out


def gf_mat_inv(A: list[list[int]]) -> list[list[int]]:
    """Invert a square GF(256) matrix by Gauss-Jordan elimination.

    Raises ValueError on a singular matrix.
    """
    n = len(A)
    aug = [list(A[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix over GF(256)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = gf_inv(aug[col][col])
        aug[col] = [gf_mul(v, inv_p) for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v ^ gf_mul(factor, p) for v, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def combine(coeffs: list[int], rows: np.ndarray) -> np.ndarray:
    """XOR-accumulate coeffs[i] * rows[i] over byte arrays (vectorised)."""
    out = np.zeros(rows.shape[1], dtype=np.uint8)
    for c, row in zip(coeffs, rows):
        if c:
            out ^= MUL_TABLE[c][row]
    return out
