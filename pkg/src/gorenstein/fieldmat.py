"""Exact dense linear algebra over a prime field GF(p).

Matrices are plain ``numpy`` integer arrays with entries reduced into
``[0, p)``.  They act on column vectors, so the composite ``g o f`` is the
product ``G @ F``.  Zero-row and zero-column matrices are legal and stand
for maps to or from the zero space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Matrix = np.ndarray

DTYPE = np.int64


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int = 2

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not _is_prime(int(self.p)):
            raise ValueError(f"field modulus must be prime, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))

    def __str__(self):
        return f"GF({self.p})"

    def inv(self, a: int) -> int:
        return inv_mod(a, self.p)


def inv_mod(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def mat(entries, p: int, shape: tuple[int, int] | None = None) -> Matrix:
    """Build a reduced matrix from nested lists (or a flat list plus ``shape``)."""
    a = np.array(entries, dtype=DTYPE)
    if shape is not None:
        a = a.reshape(shape)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a % p


def zeros(rows: int, cols: int) -> Matrix:
    return np.zeros((rows, cols), dtype=DTYPE)


def identity(n: int) -> Matrix:
    return np.eye(n, dtype=DTYPE)


def matmul(*factors: Matrix, p: int) -> Matrix:
    """Product of ``factors`` (left to right) reduced mod ``p``."""
    out = factors[0] % p
    for f in factors[1:]:
        out = (out @ f) % p
    return out


def rref(A: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of ``A`` and its pivot columns."""
    R = np.array(A, dtype=DTYPE) % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * inv_mod(R[r, c], p)) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            R[hit] = (R[hit] - np.outer(col[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: Matrix, p: int) -> int:
    if A.shape[0] == 0 or A.shape[1] == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace_basis(A: Matrix, p: int) -> list[Matrix]:
    """Basis of ``{x : A x = 0}`` as a list of column vectors (shape ``(cols, 1)``)."""
    N = nullspace(A, p)
    return [N[:, [j]] for j in range(N.shape[1])]


def nullspace(A: Matrix, p: int) -> Matrix:
    """Nullspace basis packed as the columns of one matrix."""
    rows, cols = A.shape
    if rows == 0:
        return identity(cols)
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    N = zeros(cols, len(free))
    for j, f in enumerate(free):
        N[f, j] = 1
        for i, pc in enumerate(pivots):
            N[pc, j] = (-R[i, f]) % p
    return N


def column_space(A: Matrix, p: int) -> Matrix:
    """Columns of ``A`` forming a basis of its column span."""
    if A.shape[1] == 0:
        return zeros(A.shape[0], 0)
    _, pivots = rref(A, p)
    return A[:, pivots] % p


def is_invertible(A: Matrix, p: int) -> bool:
    rows, cols = A.shape
    if rows != cols:
        return False
    return rank(A, p) == rows


def inverse(A: Matrix, p: int) -> Matrix:
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"cannot invert non-square matrix of shape {A.shape}")
    if n == 0:
        return zeros(0, 0)
    R, pivots = rref(np.hstack([A % p, identity(n)]), p)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def solve(B: Matrix, V: Matrix, p: int) -> Matrix:
    """Return ``X`` with ``B X = V``.

    ``B`` must have full column rank and every column of ``V`` must lie in
    its span; a ``ValueError`` is raised otherwise.
    """
    m, k = B.shape
    if k == 0:
        if np.any(V % p):
            raise ValueError("right-hand side is not in the (zero) column span")
        return zeros(0, V.shape[1])
    R, pivots = rref(np.hstack([B % p, V % p]), p)
    if pivots[:k] != list(range(k)):
        raise ValueError("basis matrix does not have full column rank")
    if np.any(R[k:, k:]):
        raise ValueError("right-hand side is not in the column span")
    return R[:k, k:]


def complement(C: Matrix, p: int) -> tuple[Matrix, Matrix]:
    """Complete the independent columns of ``C`` to a basis of ``GF(p)^d``.

    Returns ``(Q, pi)`` where the columns of ``Q`` span a complement of
    ``span(C)`` and ``pi`` is the projection onto ``Q``-coordinates along
    ``span(C)``: ``pi @ C == 0`` and ``pi @ Q == I``.
    """
    d, k = C.shape
    _, pivots = rref(np.hstack([C % p, identity(d)]), p)
    extra = [c - k for c in pivots if c >= k]
    Q = identity(d)[:, extra]
    T = np.hstack([C % p, Q])
    pi = inverse(T, p)[k:, :]
    return Q, pi


def batch_invertible(mats: np.ndarray, p: int) -> np.ndarray:
    """Vectorised invertibility test for a stack of square matrices.

    ``mats`` has shape ``(B, d, d)``; returns a boolean array of length ``B``.
    """
    B, d, d2 = mats.shape
    if d != d2:
        raise ValueError("batch_invertible expects square matrices")
    ok = np.ones(B, dtype=bool)
    if d == 0 or B == 0:
        return ok
    inv_table = np.zeros(p, dtype=DTYPE)
    for a in range(1, p):
        inv_table[a] = pow(a, -1, p)
    M = mats.astype(DTYPE) % p
    idx = np.arange(B)
    for c in range(d):
        nz = M[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + np.argmax(nz, axis=1)
        row_c = M[idx, c, :].copy()
        row_p = M[idx, piv, :].copy()
        M[idx, c, :] = row_p
        M[idx, piv, :] = row_c
        scale = inv_table[M[:, c, c]]
        M[:, c, :] = (M[:, c, :] * scale[:, None]) % p
        factors = M[:, :, c].copy()
        factors[:, c] = 0
        M = (M - factors[:, :, None] * M[:, c, None, :]) % p
    return ok


def transpose(A: Matrix) -> Matrix:
    return np.ascontiguousarray(A.T)
