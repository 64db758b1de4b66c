"""Quaternion and octonion arithmetic on signed multiplication tables.

Quaternions also come with their 2x2 complex matrix picture; quaternionic
matrix algebras elsewhere in the package are built directly on that
representation, so the tables here mainly serve the octonionic families
and cross-checks.
"""

from __future__ import annotations

import numpy as np

# ---------------------------------------------------------------------------
# quaternions: basis (1, i, j, k)
# ---------------------------------------------------------------------------

QUAT_TABLE = np.zeros((4, 4, 4))
QUAT_TABLE[0] = np.eye(4)
QUAT_TABLE[:, 0] = np.eye(4)
for (a, b), (c, s) in {(1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
                       (1, 2): (3, 1), (2, 1): (3, -1),
                       (2, 3): (1, 1), (3, 2): (1, -1),
                       (3, 1): (2, 1), (1, 3): (2, -1)}.items():
    QUAT_TABLE[a, b, c] = s
QUAT_TABLE.setflags(write=False)

QUAT_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])
QUAT_NORM_SIGNS = np.ones(4)

# 2x2 complex images of (1, i, j, k): q = z + w j  ->  [[z, w], [-conj w, conj z]]
QUAT_REP = np.array([
    [[1, 0], [0, 1]],
    [[1j, 0], [0, -1j]],
    [[0, 1], [-1, 0]],
    [[0, 1j], [1j, 0]],
], dtype=complex)
QUAT_REP.setflags(write=False)


def _cayley_dickson(table: np.ndarray, conj_signs: np.ndarray, gamma: float) -> np.ndarray:
    """Double an algebra: (a, b)(c, d) = (ac + gamma * conj(d) b, d a + b conj(c))."""
    m = table.shape[0]
    out = np.zeros((2 * m, 2 * m, 2 * m))
    conj = np.diag(conj_signs)
    mul = lambda u, v: np.einsum("abc,a,b->c", table, u, v)
    eye = np.eye(m)
    for a in range(2 * m):
        a1 = eye[a] if a < m else np.zeros(m)
        a2 = eye[a - m] if a >= m else np.zeros(m)
        for b in range(2 * m):
            b1 = eye[b] if b < m else np.zeros(m)
            b2 = eye[b - m] if b >= m else np.zeros(m)
            out[a, b, :m] = mul(a1, b1) + gamma * mul(conj @ b2, a2)
            out[a, b, m:] = mul(b2, a1) + mul(a2, conj @ b1)
    return out


# division octonions: Cayley-Dickson doubling of the quaternions (gamma = -1)
OCT_DIVISION_TABLE = _cayley_dickson(QUAT_TABLE, QUAT_CONJ_SIGNS, -1.0)
OCT_DIVISION_TABLE.setflags(write=False)
OCT_DIVISION_NORM_SIGNS = np.ones(8)

# split octonions: basis (1, j, k, jk, l, jl, kl, (jk)l) with the signed table below
_SPLIT_NAMES = ["1", "j", "k", "jk", "l", "jl", "kl", "jkl"]
_SPLIT_ROWS = [
    ["1", "j", "k", "jk", "l", "jl", "kl", "jkl"],
    ["j", "1", "jk", "k", "jl", "l", "-jkl", "-kl"],
    ["k", "-jk", "1", "-j", "kl", "jkl", "l", "jl"],
    ["jk", "-k", "j", "-1", "jkl", "kl", "-jl", "-l"],
    ["l", "-jl", "-kl", "-jkl", "1", "-j", "-k", "-jk"],
    ["jl", "-l", "-jkl", "-kl", "j", "-1", "jk", "k"],
    ["kl", "jkl", "-l", "jl", "k", "-jk", "-1", "-j"],
    ["jkl", "kl", "-jl", "l", "jk", "-k", "j", "1"],
]
OCT_SPLIT_TABLE = np.zeros((8, 8, 8))
for _a, _row in enumerate(_SPLIT_ROWS):
    for _b, _sym in enumerate(_row):
        _sign = -1.0 if _sym.startswith("-") else 1.0
        OCT_SPLIT_TABLE[_a, _b, _SPLIT_NAMES.index(_sym.lstrip("-"))] = _sign
OCT_SPLIT_TABLE.setflags(write=False)

# n(a) = a conj(a) on the split basis
OCT_SPLIT_NORM_SIGNS = np.array([1.0, -1.0, -1.0, 1.0, -1.0, 1.0, 1.0, -1.0])
OCT_CONJ_SIGNS = np.array([1.0] + [-1.0] * 7)


def hyper_mul(table: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply coefficient vectors (real or complex) on a signed-basis table."""
    return np.einsum("a...,b...,abc->c...", a, b, table)


def hyper_conj(a: np.ndarray) -> np.ndarray:
    out = -np.array(a)
    out[..., 0] = a[..., 0]
    return out


def hyper_norm(norm_signs: np.ndarray, a: np.ndarray):
    """n(a) = a conj(a); real for real coefficients, complex for complex ones."""
    return np.einsum("...p,...p,p->...", a, a, norm_signs)


# ---------------------------------------------------------------------------
# 3x3 Hermitian matrices over an octonion algebra
# ---------------------------------------------------------------------------

def herm3_matmul(table: np.ndarray, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Entrywise-octonionic matrix product of (..., 3, 3, 8) arrays."""
    return np.einsum("...ijp,...jkq,pqr->...ikr", A, B, table)


def herm3_jordan(table: np.ndarray, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return 0.5 * (herm3_matmul(table, A, B) + herm3_matmul(table, B, A))


def herm3_basis(dtype=float) -> np.ndarray:
    """27 Hermitian basis matrices: E_ii and units at (i, j) with conjugate at (j, i)."""
    out = []
    for i in range(3):
        M = np.zeros((3, 3, 8), dtype=dtype)
        M[i, i, 0] = 1
        out.append(M)
    for i in range(3):
        for j in range(i + 1, 3):
            for u in range(8):
                M = np.zeros((3, 3, 8), dtype=dtype)
                M[i, j, u] = 1
                M[j, i, u] = OCT_CONJ_SIGNS[u]
                out.append(M)
    return np.array(out)


def herm3_det(table: np.ndarray, norm_signs: np.ndarray, A: np.ndarray):
    """Generic norm of a Hermitian 3x3 octonionic matrix.

    det A = a11 a22 a33 - a11 n(a23) - a22 n(a31) - a33 n(a12)
            + 2 Re((a12 a23) a31)
    where Re is the coefficient of the real unit.
    """
    a11, a22, a33 = A[..., 0, 0, 0], A[..., 1, 1, 0], A[..., 2, 2, 0]
    n = lambda v: hyper_norm(norm_signs, v)
    trip = hyper_mul(table, hyper_mul(table, np.moveaxis(A[..., 0, 1, :], -1, 0),
                                      np.moveaxis(A[..., 1, 2, :], -1, 0)),
                     np.moveaxis(A[..., 2, 0, :], -1, 0))
    return (a11 * a22 * a33 - a11 * n(A[..., 1, 2, :]) - a22 * n(A[..., 2, 0, :])
            - a33 * n(A[..., 0, 1, :]) + 2.0 * trip[0])


def herm3_sigma(table: np.ndarray, norm_signs: np.ndarray, A: np.ndarray):
    """Second coefficient of the characteristic cubic (sum of principal 2x2 minors)."""
    a11, a22, a33 = A[..., 0, 0, 0], A[..., 1, 1, 0], A[..., 2, 2, 0]
    n = lambda v: hyper_norm(norm_signs, v)
    return (a11 * a22 - n(A[..., 0, 1, :]) + a11 * a33 - n(A[..., 2, 0, :])
            + a22 * a33 - n(A[..., 1, 2, :]))


# ---------------------------------------------------------------------------
# quaternionic matrices in the 2m x 2m complex block picture
# ---------------------------------------------------------------------------

def quat_block(m: int, p: int, q: int, z: complex, w: complex) -> np.ndarray:
    """Embed the quaternion z + w j at entry (p, q) of an m x m quaternionic
    matrix, using the block form [[Z, W], [-conj W, conj Z]]."""
    S = np.zeros((2 * m, 2 * m), dtype=complex)
    S[p, q] = z
    S[p, m + q] = w
    S[m + p, q] = -np.conj(w)
    S[m + p, m + q] = np.conj(z)
    return S


def pfaffian(S: np.ndarray) -> float | complex:
    """Pfaffian of an even-dimensional skew-symmetric matrix.

    Skew tridiagonalization by pivoted congruence transforms (Parlett-Reid);
    the sign convention is pf([[0, 1], [-1, 0]]) = 1.
    """
    A = np.array(S, dtype=complex if np.iscomplexobj(S) else float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("pfaffian needs a square matrix")
    n = A.shape[0]
    if n % 2 != 0:
        raise ValueError("pfaffian needs even dimension")
    if n == 0:
        return 1.0
    if np.abs(A + A.T).max() > 1e-8 * max(1.0, np.abs(A).max()):
        raise ValueError("matrix is not skew-symmetric")
    A = 0.5 * (A - A.T)
    pf = 1.0 + 0j if np.iscomplexobj(A) else 1.0
    for k in range(0, n - 1, 2):
        piv = k + 1 + np.abs(A[k + 1:, k]).argmax()
        if piv != k + 1:
            A[[k + 1, piv]] = A[[piv, k + 1]]
            A[:, [k + 1, piv]] = A[:, [piv, k + 1]]
            pf = -pf
        if A[k + 1, k] == 0:
            return 0.0
        pf = pf * A[k, k + 1]
        if k + 2 < n:
            tau = A[k, k + 2:] / A[k, k + 1]
            col = A[k + 2:, k + 1].copy()
            A[k + 2:, k + 2:] += np.outer(tau, col) - np.outer(col, tau)
    return pf if np.iscomplexobj(pf) else float(np.real(pf))
