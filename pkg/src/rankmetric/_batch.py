"""Vectorized (numpy) kernels for bulk rank computation over GF(q).

Two elimination engines: a digit-array engine for any supported prime q, and
a bit-packed engine for q=2 used by the large covering-radius scans.  Both
process the rows of many matrices in lockstep, keeping one pivot row per
leading column and per sample.
"""
from __future__ import annotations

import numpy as np


def digits_table(field):
    """(order, m) uint8 array: base-q digits of every element encoding."""
    try:
        return field._digits_np
    except AttributeError:
        pass
    xs = np.arange(field.order, dtype=np.int64)
    arr = np.empty((field.order, field.m), dtype=np.uint8)
    for i in range(field.m):
        arr[:, i] = xs % field.q
        xs //= field.q
    field._digits_np = arr
    return arr


def mul_lut(field, c):
    """(order,) int64 lookup array for multiplication by the constant c."""
    try:
        cache = field._mul_luts
    except AttributeError:
        cache = field._mul_luts = {}
    if c not in cache:
        cache[c] = np.array([field.mul(c, x) for x in range(field.order)],
                            dtype=np.int64)
    return cache[c]


def rank_digit_mats(q, mats):
    """Ranks of N matrices over GF(q); mats is (N, m, n) with entries in [0, q)."""
    mats = np.asarray(mats, dtype=np.int64)
    nmat, m, n = mats.shape
    inv = np.zeros(q, dtype=np.int64)
    for v in range(1, q):
        inv[v] = pow(v, -1, q)
    piv = np.zeros((n, nmat, n), dtype=np.int64)
    has = np.zeros((n, nmat), dtype=bool)
    ranks = np.zeros(nmat, dtype=np.uint8)
    for r in range(m):
        cur = mats[:, r, :].copy()
        for c in range(n):
            f = cur[:, c]
            mask = (f != 0) & has[c]
            if mask.any():
                cur[mask] = (cur[mask] - f[mask, None] * piv[c][mask]) % q
        nz = cur.any(axis=1)
        if not nz.any():
            continue
        idx = np.nonzero(nz)[0]
        rows = cur[idx]
        lead = np.argmax(rows != 0, axis=1)
        rows = rows * inv[rows[np.arange(len(idx)), lead]][:, None] % q
        piv[lead, idx] = rows
        has[lead, idx] = True
        ranks[idx] += 1
    return ranks


def rank_words(field, words):
    """Rank weights of N vectors given as an (N, n) array of element encodings."""
    words = np.asarray(words, dtype=np.int64)
    dt = digits_table(field)
    mats = dt[words].transpose(0, 2, 1)  # (N, m, n)
    return rank_digit_mats(field.q, mats)


def bit_rows_gf2(m, n, xs):
    """(N, m) uint32 bitmask rows of the m x n expansions of q=2 encodings.

    Encoding bit j*m + i is digit i of coordinate j, i.e. entry (i, j) of the
    expansion; row i packs entries (i, 0..n-1) into an n-bit mask.
    """
    xs = np.asarray(xs, dtype=np.int64)
    rows = np.zeros((len(xs), m), dtype=np.uint32)
    for i in range(m):
        acc = np.zeros(len(xs), dtype=np.uint32)
        for j in range(n):
            acc |= ((xs >> (j * m + i)) & 1).astype(np.uint32) << np.uint32(j)
        rows[:, i] = acc
    return rows


def rank_bits_gf2(rows, n):
    """Ranks of N binary matrices given as (N, m) arrays of n-bit row masks."""
    rows = np.asarray(rows, dtype=np.uint32)
    nmat, m = rows.shape
    piv = np.zeros((n, nmat), dtype=np.uint32)
    ranks = np.zeros(nmat, dtype=np.uint8)
    for r in range(m):
        cur = rows[:, r].copy()
        for b in range(n - 1, -1, -1):
            mask = (((cur >> np.uint32(b)) & 1) != 0) & (piv[b] != 0)
            cur[mask] ^= piv[b][mask]
        nz = cur != 0
        if not nz.any():
            continue
        idx = np.nonzero(nz)[0]
        vals = cur[idx]
        lead = np.zeros(len(idx), dtype=np.int64)
        found = np.zeros(len(idx), dtype=bool)
        for b in range(n - 1, -1, -1):
            sel = ~found & (((vals >> np.uint32(b)) & 1) != 0)
            lead[sel] = b
            found |= sel
        piv[lead, idx] = vals
        ranks[idx] += 1
    return ranks


_rank_table_cache = {}


def rank_table_gf2(field, n):
    """uint8 table of rank weights for every encoding of GF(2^m)^n."""
    assert field.q == 2
    key = (field.m, field.modulus, n)
    if key not in _rank_table_cache:
        total = 1 << (field.m * n)
        xs = np.arange(total, dtype=np.int64)
        _rank_table_cache[key] = rank_bits_gf2(bit_rows_gf2(field.m, n, xs), n)
    return _rank_table_cache[key]
