"""Certified modular accelerator for large exact nullspaces.

Strategy: clear denominators row by row (nullspace-preserving), reduce the
integer system modulo a few 31-bit primes, eliminate with vectorized int64
arithmetic, CRT-combine, and lift entries by rational reconstruction. Every
candidate vector is then verified exactly over the rationals against the
original system. Verified candidates are provably a full basis: the mod-p
nullity bounds the rational nullity from above, and the candidates are
independent by construction, so matching counts certify completeness.
Any failure returns None and the caller falls back to pure elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

# Deterministic primes just below 2^31 so int64 products never overflow.
PRIMES = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
    2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
    2147483249, 2147483237, 2147483179, 2147483171, 2147483137,
]

_MAX_PRIMES = 12


def _integer_rows(rows):
    """Scale each sparse rational row to integers; preserves the nullspace."""
    out = []
    for entries in rows:
        denom = 1
        for _, v in entries:
            denom = lcm(denom, v.denominator)
        out.append([(j, int(v * denom)) for j, v in entries])
    return out


def _rref_mod(int_rows, ncols: int, p: int):
    """RREF of the integer system mod p. Returns (pivot columns, pivot rows
    as an int64 array, one row per pivot)."""
    nrows = len(int_rows)
    a = np.zeros((nrows, ncols), dtype=np.int64)
    for i, entries in enumerate(int_rows):
        for j, v in entries:
            a[i, j] = v % p
    r = 0
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        sub = a[r:, col]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, col]), -1, p)
        a[r] = (a[r] * inv) % p
        colvals = a[:, col].copy()
        colvals[r] = 0
        hit = np.nonzero(colvals)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(colvals[hit], a[r])) % p
        pivots.append(col)
        r += 1
    return pivots, a[:r]


def _rational_reconstruct(c: int, m: int) -> Fraction | None:
    """Wang lifting: the unique n/d with n = c*d (mod m), |n|, d <= sqrt(m/2)."""
    c %= m
    bound = isqrt(m // 2)
    r0, t0 = m, 0
    r1, t1 = c, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    n, d = r1, t1
    if d < 0:
        n, d = -n, -d
    if gcd(n, d) != 1:
        return None
    return Fraction(n, d)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    inv = pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def certified_nullspace(rows, ncols: int):
    """Nullspace basis of a sparse rational system, exact and canonical,
    or None if certification fails (caller then uses pure elimination).

    Soundness: for any prime, rank mod p <= rational rank, so the mod-p
    nullity bounds the rational nullity from above. The lifted candidates
    are independent by construction (identity pattern on free columns), so
    once all of them verify exactly the count matches the bound and they
    form a complete basis.
    """
    int_rows = _integer_rows(rows)
    structures: dict[tuple[int, ...], list] = {}
    for p in PRIMES[:_MAX_PRIMES]:
        pivots, reduced = _rref_mod(int_rows, ncols, p)
        structures.setdefault(tuple(pivots), []).append((p, pivots, reduced))
        best_rank = max(len(k) for k in structures)
        viable = [v for k, v in structures.items() if len(k) == best_rank and len(v) >= 2]
        if not viable:
            continue
        agreeing = max(viable, key=len)
        candidates = _lift(agreeing, ncols)
        if candidates is None:
            continue
        if _verify(rows, candidates) is not None:
            return _canonicalize(candidates, ncols)
    return None


def _lift(agreeing, ncols):
    """CRT-combine the agreeing primes and rationally reconstruct the
    canonical nullspace vectors (one per free column)."""
    pivots = agreeing[0][1]
    pivot_set = set(pivots)
    free = [f for f in range(ncols) if f not in pivot_set]
    vectors = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pcol in enumerate(pivots):
            if pcol > f:
                break
            residue, modulus = 0, 1
            for prime, _, reduced in agreeing:
                entry = int(reduced[i, f])
                residue, modulus = _crt_pair(residue, modulus, entry, prime) if modulus > 1 else (entry, prime)
            if residue == 0:
                continue
            value = _rational_reconstruct(residue, modulus)
            if value is None:
                return None
            v[pcol] = -value
        vectors.append(v)
    return vectors


def _verify(rows, candidates):
    """Exact check that every candidate annihilates every original row."""
    for v in candidates:
        for entries in rows:
            total = Fraction(0)
            for j, coef in entries:
                x = v[j]
                if x:
                    total += coef * x
            if total:
                return None
    return candidates


def _canonicalize(vectors, ncols):
    """Exact trailing-echelon normal form, matching the pure engine."""
    from .linalg import span_of_vectors

    span = span_of_vectors(vectors, ncols, mode="trail")
    return [list(row) for row in span.basis_rows()]
