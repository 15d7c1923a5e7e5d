"""
Exact linear algebra over GF(2).

Bit vectors are tuples of 0/1 ints with index 0 holding level 1, the most
significant level (top of a bit-level diagram).  Matrices are dense numpy
uint8 arrays; row i-1 is level i.  All arithmetic is modulo 2 and exact.
"""

from __future__ import annotations

import numpy as np

BitVector = tuple  # tuple of ints in {0, 1}


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply two binary matrices over GF(2).

    Args:
        a: Binary matrix of shape (m, k).
        b: Binary matrix of shape (k, n).

    Returns:
        The product, shape (m, n), dtype uint8, entries in {0, 1}.

    Raises:
        ValueError: If the inner dimensions do not conform.
    """
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch for GF(2) product: {a.shape} x {b.shape}")
    return (a.astype(np.int64) @ b.astype(np.int64) % 2).astype(np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def shift_matrix(q: int, k: int) -> np.ndarray:
    """Explicit k-fold down-shift matrix S^k of size q x q.

    S moves every level one position down (towards level q) and feeds a
    zero in at the top, so (S^k x)[i] = x[i-k].
    """
    if not 0 <= k <= q:
        raise ValueError(f"shift power {k} outside [0, {q}]")
    m = np.zeros((q, q), dtype=np.uint8)
    for i in range(q - k):
        m[i + k, i] = 1
    return m


def rank(m: np.ndarray) -> int:
    """GF(2) rank by Gaussian elimination; 0 for an empty matrix.

    Rows are packed into Python ints so the elimination works on whole
    rows at a time; exactness is unaffected.
    """
    m = np.asarray(m, dtype=np.uint8)
    if m.size == 0:
        return 0
    rows = []
    for r in m:
        word = 0
        for bit in r:
            word = (word << 1) | int(bit)
        if word:
            rows.append(word)
    rk = 0
    while rows:
        pivot = max(rows)
        top_bit = pivot.bit_length()
        rk += 1
        nxt = []
        for w in rows:
            if w.bit_length() == top_bit:
                w ^= pivot
            if w:
                nxt.append(w)
        rows = nxt
    return rk


def reverse_levels(m: np.ndarray) -> np.ndarray:
    """Flip a matrix upside down: row i becomes row (rows - i + 1)."""
    m = np.asarray(m, dtype=np.uint8)
    return m[::-1].copy()


def shift_apply(q: int, n: int, x: BitVector) -> BitVector:
    """Apply the down-shift S^(q-n) to a length-q bit vector.

    Only the n most significant levels of x survive, landing at the
    bottom n levels of the output.

    Args:
        q: Ambient vector length.
        n: Gain; number of surviving levels. Must satisfy 0 <= n <= q.
        x: Bit vector of length q.

    Returns:
        Tuple of length q: (q-n zeros, then x[0..n-1]).
    """
    if not 0 <= n <= q:
        raise ValueError(f"gain {n} outside [0, {q}]")
    if len(x) != q:
        raise ValueError(f"vector length {len(x)} != q = {q}")
    return (0,) * (q - n) + tuple(x[:n])


def shift_generator(q: int, n: int, g: np.ndarray) -> np.ndarray:
    """Apply S^(q-n) to every column of a q x k generator matrix."""
    g = np.asarray(g, dtype=np.uint8)
    if g.shape[0] != q:
        raise ValueError(f"generator has {g.shape[0]} rows, expected q = {q}")
    if not 0 <= n <= q:
        raise ValueError(f"gain {n} outside [0, {q}]")
    out = np.zeros_like(g)
    if n > 0:
        out[q - n:, :] = g[:n, :]
    return out


def vec_xor(*vecs: BitVector) -> BitVector:
    """Levelwise XOR of equal-length bit vectors (no carry)."""
    if not vecs:
        raise ValueError("need at least one vector")
    q = len(vecs[0])
    for v in vecs[1:]:
        if len(v) != q:
            raise ValueError("length mismatch in XOR")
    return tuple(sum(col) % 2 for col in zip(*vecs))
