"""Dense linear algebra over a prime field F_ell, on numpy int64 arrays.

Everything works on matrices with entries reduced into [0, ell); ell stays
far below 2^31 at the supported group scale, so int64 matmuls cannot
overflow.  Used by the character-table eigenspace splitting.
"""

from __future__ import annotations

import numpy as np

from .errors import InternalInvariantError


def matmul(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    return (a @ b) % ell


def rref(mat: np.ndarray, ell: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    m = mat.copy() % ell
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), -1, ell)
        m[r] = (m[r] * inv) % ell
        other = np.nonzero(m[:, c])[0]
        for i in other:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % ell
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace_rows(b: np.ndarray, ell: int) -> np.ndarray:
    """Canonical basis (RREF rows) of {x : x @ b == 0 mod ell}."""
    red, pivots = rref(b.T % ell, ell)
    n = b.shape[0]
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return np.zeros((0, n), dtype=np.int64)
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-red[i, fc]) % ell
    canon, _ = rref(basis, ell)
    return canon


def hessenberg(mat: np.ndarray, ell: int) -> np.ndarray:
    """Similarity reduction to upper Hessenberg form over F_ell."""
    h = mat.copy() % ell
    n = h.shape[0]
    for k in range(n - 2):
        col = h[k + 1 :, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = k + 1 + int(nz[0])
        if p != k + 1:
            h[[k + 1, p]] = h[[p, k + 1]]
            h[:, [k + 1, p]] = h[:, [p, k + 1]]
        inv = pow(int(h[k + 1, k]), -1, ell)
        f = (h[k + 2 :, k] * inv) % ell
        if np.any(f):
            h[k + 2 :, :] = (h[k + 2 :, :] - np.outer(f, h[k + 1, :])) % ell
            h[:, k + 1] = (h[:, k + 1] + h[:, k + 2 :] @ f) % ell
    return h


def charpoly(mat: np.ndarray, ell: int) -> np.ndarray:
    """Coefficients (ascending) of det(xI - mat) over F_ell."""
    n = mat.shape[0]
    if n == 0:
        return np.array([1], dtype=np.int64)
    h = hessenberg(mat, ell)
    # p[i] = charpoly of leading i x i block, as coefficient row of length n+1
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for i in range(1, n + 1):
        prev = polys[i - 1]
        shifted = np.zeros(n + 1, dtype=np.int64)
        shifted[1:] = prev[:-1]  # x * p_{i-1}
        cur = (shifted - h[i - 1, i - 1] * prev) % ell
        if i >= 2:
            weights = np.zeros(i - 1, dtype=np.int64)
            prod = 1
            for k in range(i - 1, 0, -1):
                prod = (prod * int(h[k, k - 1])) % ell
                weights[k - 1] = (int(h[k - 1, i - 1]) * prod) % ell
            cur = (cur - weights @ polys[: i - 1]) % ell
        polys[i] = cur
    return polys[n]


def poly_roots(coeffs: np.ndarray, ell: int) -> list[int]:
    """All roots in F_ell, ascending (no multiplicities)."""
    xs = np.arange(ell, dtype=np.int64)
    vals = np.zeros(ell, dtype=np.int64)
    for c in coeffs[::-1]:
        vals = (vals * xs + int(c)) % ell
    return [int(x) for x in np.nonzero(vals == 0)[0]]


def eigenvalues(mat: np.ndarray, ell: int) -> list[int]:
    roots = poly_roots(charpoly(mat, ell), ell)
    if not roots:  # pragma: no cover
        raise InternalInvariantError("class-multiplication matrix with no eigenvalue in F_ell")
    return roots
