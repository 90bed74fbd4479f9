"""Exact smoothness test through a Macaulay matrix rank.

V(F, dF/dx0, ..., dF/dx3) is empty over the algebraic closure exactly when
the degree-d part of the ideal they generate is all of the degree-d forms,
for any d at or past the regularity bound.  With generator degrees
(3, 2, 2, 2, 2) in four variables the bound sum(d_i) - 3 = 8 applies, giving
a 392 x 165 matrix.  F is kept among the generators because the Euler
relation 3F = sum x_i dF/dx_i says nothing in characteristic 3.
"""

from __future__ import annotations

from math import comb

import numpy as np
from numba import njit

from .gf import GF
from .monomials import derivative_terms, monomials, product_columns

DEFAULT_DEGREE = 8


def partial_coefficients(F: GF, coeffs) -> list[list[int]]:
    """Coefficient vectors (over quadric monomials) of the four partials."""
    out = []
    for var in range(4):
        vec = [0] * 10
        for ci, qi, factor in derivative_terms(var):
            c = coeffs[ci]
            if c and factor % F.p:
                vec[qi] = F.add(vec[qi], F.mul(c, factor % F.p))
        out.append(vec)
    return out


def macaulay_matrix(F: GF, coeffs, degree: int = DEFAULT_DEGREE) -> np.ndarray:
    """Rows are x^m * g for g in (F, partials) with m ranging over degree - deg(g)."""
    ncols = comb(degree + 3, 3)
    blocks = []
    gens = [(3, list(coeffs))] + [(2, v) for v in partial_coefficients(F, coeffs)]
    for gdeg, g in gens:
        if not any(g):
            continue
        cols = product_columns(gdeg, degree)
        block = np.zeros((cols.shape[0], ncols), dtype=np.int64)
        block[np.arange(cols.shape[0])[:, None], cols] = np.asarray(g, dtype=np.int64)[None, :]
        blocks.append(block)
    if not blocks:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.vstack(blocks)


def rank_gf2_rows(rows, ncols: int) -> int:
    """Rank over GF(2) of rows packed as Python ints, stopping at full rank."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = r
                break
            r ^= b
        if len(basis) == ncols:
            break
    return len(basis)


def _pack_rows(M: np.ndarray) -> list[int]:
    bits = np.packbits(M.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in bits]


def rank_mod_p(M: np.ndarray, p: int) -> int:
    M = np.array(M, dtype=np.int64) % p
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r, c:] = M[r, c:] * pow(int(M[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(M[r + 1:, c])
        if below.size:
            M[below, c:] = (M[below, c:] - M[below, c:c + 1] * M[r, c:]) % p
        r += 1
    return r


def rank_tables(M: np.ndarray, F: GF) -> int:
    """Rank over a non-prime field using the dense lookup tables."""
    T = F.dense
    M = np.array(M, dtype=np.int64)
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r, c:] = T.mul(T.inv_t[M[r, c]], M[r, c:])
        below = r + 1 + np.flatnonzero(M[r + 1:, c])
        if below.size:
            M[below, c:] = T.sub(M[below, c:], T.mul(M[below, c:c + 1], M[r, c:][None, :]))
        r += 1
    return r


@njit(cache=True)
def _rank_kernel(M, add_t, mul_t, neg_t, inv_t, stop_on_gap):
    nrows, ncols = M.shape
    r = 0
    nzc = np.empty(ncols, dtype=np.int64)
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            if stop_on_gap:
                return r
            continue
        if piv != r:
            for j in range(c, ncols):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        f = inv_t[M[r, c]]
        k = 0
        for j in range(c, ncols):
            if M[r, j] != 0:
                M[r, j] = mul_t[f, M[r, j]]
                nzc[k] = j
                k += 1
        for i in range(r + 1, nrows):
            a = M[i, c]
            if a != 0:
                na = neg_t[a]
                for jj in range(k):
                    j = nzc[jj]
                    M[i, j] = add_t[M[i, j], mul_t[na, M[r, j]]]
        r += 1
    return r


def matrix_rank(F: GF, M: np.ndarray, stop_on_gap: bool = False) -> int:
    """Rank of ``M`` over ``F``.

    With ``stop_on_gap`` the elimination returns as soon as some column has
    no pivot, so the result is only meaningful as "full column rank or not".
    """
    T = F.dense
    work = np.ascontiguousarray(M, dtype=np.int32).copy()
    return int(_rank_kernel(work, T.add_t, T.mul_t, T.neg_t, T.inv_t, stop_on_gap))


def ideal_fills_degree(F: GF, coeffs, degree: int = DEFAULT_DEGREE) -> bool:
    M = macaulay_matrix(F, coeffs, degree)
    ncols = comb(degree + 3, 3)
    if M.shape[0] < ncols:
        return False
    return matrix_rank(F, M, stop_on_gap=True) == ncols


def regularity_bound(degrees=(3, 2, 2, 2, 2), nvars: int = 4) -> int:
    return sum(degrees) - (nvars - 1)


__all__ = [
    "DEFAULT_DEGREE",
    "ideal_fills_degree",
    "macaulay_matrix",
    "matrix_rank",
    "monomials",
    "partial_coefficients",
    "rank_gf2_rows",
    "rank_mod_p",
    "rank_tables",
    "regularity_bound",
]
