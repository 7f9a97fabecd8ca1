"""Dense linear algebra over GF(2).

Matrices are two-dimensional numpy arrays of dtype ``uint8`` whose entries
are 0 or 1.  All arithmetic is carried out modulo 2.  Empty matrices (zero
rows or zero columns) are legal everywhere and show up routinely: a code
with k = n has an empty parity-check matrix, and a code with k = 0 has an
empty generator.

Integer matmul on uint8 wraps modulo 256, which is even, so parity survives
the wraparound; ``(a @ b) & 1`` is therefore an exact mod-2 product.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np


def as_bits(m) -> np.ndarray:
    """Coerce ``m`` to a 2-D uint8 matrix of 0/1 entries.

    Args:
        m: anything ``np.asarray`` accepts that is two-dimensional.

    Returns:
        A uint8 array with the same shape.

    Raises:
        ValueError: if ``m`` is not 2-D or contains entries other than 0/1.
    """
    a = np.asarray(m)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    a = a.astype(np.uint8, copy=False)
    if a.size and a.max(initial=0) > 1:
        raise ValueError("matrix entries must be 0 or 1")
    return a


def mat_mul(a, b) -> np.ndarray:
    """Matrix product over GF(2).

    Raises:
        ValueError: on an inner-dimension mismatch.
    """
    a = as_bits(a)
    b = as_bits(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) & 1


class Rref(NamedTuple):
    """Result of Gauss-Jordan elimination."""

    reduced: np.ndarray
    rank: int
    pivot_cols: list


def rref(m) -> Rref:
    """Reduced row-echelon form over GF(2).

    Pivots are eliminated both above and below, so the pivot columns of the
    result are standard basis vectors.  The input is not modified.

    Returns:
        ``Rref(reduced, rank, pivot_cols)`` where ``pivot_cols`` lists the
        pivot column indices in increasing order.
    """
    r = as_bits(m).copy()
    rows, cols = r.shape
    pivot_cols: list = []
    pr = 0
    for c in range(cols):
        if pr >= rows:
            break
        hits = np.nonzero(r[pr:, c])[0]
        if hits.size == 0:
            continue
        k = pr + int(hits[0])
        if k != pr:
            r[[pr, k]] = r[[k, pr]]
        mask = r[:, c].astype(bool).copy()
        mask[pr] = False
        r[mask] ^= r[pr]
        pivot_cols.append(c)
        pr += 1
    return Rref(r, len(pivot_cols), pivot_cols)


def rank(m) -> int:
    """Rank of ``m`` over GF(2)."""
    return rref(m).rank


def kernel_basis(m) -> np.ndarray:
    """Basis for the right kernel ``{v : m @ v = 0}`` as matrix rows.

    Returns:
        A ``(cols - rank, cols)`` matrix whose rows are linearly independent
        and span the kernel.  Rows are emitted in order of increasing free
        column, so the result is deterministic.
    """
    m = as_bits(m)
    red, rk, pivot_cols = rref(m)
    cols = m.shape[1]
    pivot_set = set(pivot_cols)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, p in enumerate(pivot_cols):
            basis[row, p] = red[i, f]
    return basis


def solve(m, y) -> Optional[np.ndarray]:
    """Solve ``m @ x = y`` over GF(2).

    Args:
        m: coefficient matrix, shape (r, c).
        y: right-hand side of length r.

    Returns:
        One solution ``x`` (free variables set to zero), or ``None`` when the
        system is inconsistent.

    Raises:
        ValueError: if the length of ``y`` does not match the row count.
    """
    m = as_bits(m)
    y = np.asarray(y, dtype=np.uint8).reshape(-1)
    if y.shape[0] != m.shape[0]:
        raise ValueError(f"rhs length {y.shape[0]} does not match {m.shape[0]} rows")
    aug = np.hstack([m, y[:, None]])
    red, rk, pivot_cols = rref(aug)
    if pivot_cols and pivot_cols[-1] == m.shape[1]:
        return None
    x = np.zeros(m.shape[1], dtype=np.uint8)
    for i, c in enumerate(pivot_cols):
        x[c] = red[i, -1]
    return x


def inverse(m) -> np.ndarray:
    """Inverse of a square matrix over GF(2).

    Raises:
        ValueError: if ``m`` is not square or is singular.
    """
    m = as_bits(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError(f"matrix {m.shape} is not square")
    aug = np.hstack([m, np.eye(n, dtype=np.uint8)])
    red, _, pivots = rref(aug)
    # The identity block keeps the augmented matrix at full row rank no
    # matter what m is; m is invertible exactly when every pivot falls in
    # the left block.
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:].copy()


def dual_complete(p, g) -> tuple:
    """Complete a parity-check/generator pair to a full dual basis.

    Given a full-rank parity check ``p`` ((n-k) x n) and a full-rank
    generator ``g`` (k x n) with ``p @ g.T = 0``, produce the two complement
    matrices ``(p_c, g_c)`` satisfying the four pairing identities

        p   @ g.T   = 0        p_c @ g.T   = I_k
        p   @ g_c.T = I_(n-k)  p_c @ g_c.T = 0

    The construction is deterministic: rows of ``p`` are greedily extended
    to a basis of the full space with standard basis vectors (lowest index
    first), the extension is dualized by matrix inversion, and the k x k
    block is re-based so that ``p_c`` pairs with the given ``g`` rather than
    with an arbitrary generator of the same code.

    Returns:
        ``(p_c, g_c)`` with shapes (k, n) and (n-k, n).

    Raises:
        ValueError: if shapes are inconsistent, either input is rank
            deficient, or ``p @ g.T != 0``.
    """
    p = as_bits(p)
    g = as_bits(g)
    n = p.shape[1]
    if g.shape[1] != n:
        raise ValueError(f"column counts differ: {p.shape} vs {g.shape}")
    if p.shape[0] + g.shape[0] != n:
        raise ValueError(
            f"row counts {p.shape[0]} + {g.shape[0]} do not add up to {n} columns"
        )
    if rank(p) != p.shape[0]:
        raise ValueError("parity-check rows are linearly dependent")
    if rank(g) != g.shape[0]:
        raise ValueError("generator rows are linearly dependent")
    if np.any(mat_mul(p, g.T)):
        raise ValueError("parity check does not annihilate the generator")

    n_minus_k = p.shape[0]
    k = g.shape[0]

    # Greedy basis extension.  Stored rows are kept forward-reduced: each has
    # zeros at all pivot columns of the rows stored before it.
    reduced_rows: list = []

    def _reduce(v: np.ndarray) -> np.ndarray:
        v = v.copy()
        for c, row in reduced_rows:
            if v[c]:
                v ^= row
        return v

    for row in p:
        rv = _reduce(row.astype(np.uint8))
        c = int(np.nonzero(rv)[0][0])
        reduced_rows.append((c, rv))
    appended = []
    for i in range(n):
        if len(reduced_rows) == n:
            break
        e = np.zeros(n, dtype=np.uint8)
        e[i] = 1
        rv = _reduce(e)
        nz = np.nonzero(rv)[0]
        if nz.size:
            appended.append(i)
            reduced_rows.append((int(nz[0]), rv))
    b = np.zeros((k, n), dtype=np.uint8)
    for row, i in enumerate(appended):
        b[row, i] = 1

    full = np.vstack([p, b]) if p.size or b.size else np.zeros((0, n), np.uint8)
    dual = inverse(full).T
    g_c = dual[:n_minus_k].copy()

    if k:
        w = mat_mul(g, b.T)
        p_c = mat_mul(inverse(w).T, b)
    else:
        p_c = np.zeros((0, n), dtype=np.uint8)

    # The identities are cheap to confirm and catch any internal slip.
    eye_k = np.eye(k, dtype=np.uint8)
    eye_r = np.eye(n_minus_k, dtype=np.uint8)
    if (
        np.any(mat_mul(p_c, g.T) != eye_k)
        or np.any(mat_mul(p, g_c.T) != eye_r)
        or np.any(mat_mul(p_c, g_c.T))
    ):
        raise ValueError("internal error: dual completion identities failed")
    return p_c, g_c
