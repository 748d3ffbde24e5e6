"""Hot loops of the randomized rank oracle: modular matmul, exp(ad n) and rank.

All arithmetic is over F_p with p < 2^26 so that a product of two residues
fits in 52 bits and a row of up to 2^11 products still fits in int64.
Setting ``FLAGVGIT_DISABLE_NUMBA=1`` selects the pure numpy versions.
"""
from __future__ import annotations

import os

import numpy as np

PRIME = 67108859  # largest prime below 2^26

_DISABLED = os.environ.get("FLAGVGIT_DISABLE_NUMBA", "").strip() not in ("", "0", "false", "False")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag
    HAVE_NUMBA = False


# ---------------------------------------------------------------- numpy

def matmul_mod_np(A, B, p=PRIME):
    return (A @ B) % p


def rank_mod_np(M, p=PRIME):
    A = np.array(M, dtype=np.int64) % p
    nr, nc = A.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[r + 1:, c].copy()
        if col.any():
            A[r + 1:] = (A[r + 1:] - np.outer(col, A[r]) % p) % p
        r += 1
    return r


def exp_apply_np(N, X, p=PRIME):
    """exp(N) X over F_p for nilpotent N (square) and a block of columns X."""
    total = X % p
    term = total.copy()
    k = 1
    while True:
        term = matmul_mod_np(N, term, p)
        if not term.any():
            break
        term = (term * pow(k, p - 2, p)) % p
        total = (total + term) % p
        k += 1
        if k > N.shape[0] + 1:
            raise ArithmeticError("matrix is not nilpotent")
    return total


# ---------------------------------------------------------------- numba

if HAVE_NUMBA:

    @njit(cache=True)
    def _powmod(a, e, p):
        r = 1
        a = a % p
        while e > 0:
            if e & 1:
                r = (r * a) % p
            a = (a * a) % p
            e >>= 1
        return r

    @njit(cache=True)
    def matmul_mod_nb(A, B, p=PRIME):
        n, m = A.shape
        q = B.shape[1]
        out = np.zeros((n, q), dtype=np.int64)
        for i in range(n):
            for k in range(m):
                a = A[i, k]
                if a == 0:
                    continue
                for j in range(q):
                    out[i, j] += a * B[k, j]  # < 2^63 for m <= 2^11
        for i in range(n):
            for j in range(q):
                out[i, j] %= p
        return out

    @njit(cache=True)
    def rank_mod_nb(M, p=PRIME):
        A = M.copy() % p
        nr, nc = A.shape
        r = 0
        for c in range(nc):
            if r == nr:
                break
            piv = -1
            for i in range(r, nr):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(nc):
                    t = A[r, j]
                    A[r, j] = A[piv, j]
                    A[piv, j] = t
            inv = _powmod(A[r, c], p - 2, p)
            for j in range(nc):
                A[r, j] = (A[r, j] * inv) % p
            for i in range(r + 1, nr):
                f = A[i, c]
                if f != 0:
                    for j in range(c, nc):
                        A[i, j] = (A[i, j] - f * A[r, j]) % p
            r += 1
        return r

    @njit(cache=True)
    def exp_apply_nb(N, X, p=PRIME):
        total = X % p
        term = total.copy()
        k = 1
        while True:
            term = matmul_mod_nb(N, term, p)
            if not term.any():
                break
            inv = _powmod(k, p - 2, p)
            for i in range(term.shape[0]):
                for j in range(term.shape[1]):
                    term[i, j] = (term[i, j] * inv) % p
                    total[i, j] = (total[i, j] + term[i, j]) % p
            k += 1
            if k > N.shape[0] + 1:
                raise ArithmeticError("matrix is not nilpotent")
        return total

    matmul_mod = matmul_mod_nb
    rank_mod = rank_mod_nb
    exp_apply = exp_apply_nb
else:
    matmul_mod = matmul_mod_np
    rank_mod = rank_mod_np
    exp_apply = exp_apply_np


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
