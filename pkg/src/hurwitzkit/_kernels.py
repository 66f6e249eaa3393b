"""Integer kernels behind the permutation oracle and the commutator check.

Each kernel has a numba ``@njit`` body and a vectorized numpy body with the
same signature. Set ``HURWITZKIT_DISABLE_NUMBA=1`` (or run without numba
installed) to use the numpy bodies. Both paths work on int64 arrays; callers
bound magnitudes beforehand and fall back to object arrays when int64 could
overflow.

Permutations of {0..d-1} are rows of an (d!, d) array in lexicographic
order. Composition is ``(p o q)[i] = p[q[i]]`` and a permutation is located
by its base-d key, which is increasing in lexicographic order, so
``np.searchsorted`` ranks it.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

__all__ = [
    "NUMBA_AVAILABLE",
    "backend",
    "commutator_weights",
    "convolve",
    "int_commutator_nnz",
    "permutation_table",
    "square_weights",
    "use_numba",
]

try:
    import numba
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_AVAILABLE = False


def use_numba() -> bool:
    flag = os.environ.get("HURWITZKIT_DISABLE_NUMBA", "").strip().lower()
    return NUMBA_AVAILABLE and flag not in ("1", "true", "yes", "on")


def backend() -> str:
    return "numba" if use_numba() else "numpy"


@lru_cache(maxsize=None)
def permutation_table(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(perms, keys, inverse_index) for S_d; inverse_index[r] is the row of perms[r]^-1."""
    perms = np.array(list(itertools.permutations(range(d))), dtype=np.int64).reshape(-1, d)
    weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
    keys = perms @ weights
    inv = np.argsort(perms, axis=1)
    inverse_index = np.searchsorted(keys, inv @ weights)
    perms.setflags(write=False)
    keys.setflags(write=False)
    inverse_index.setflags(write=False)
    return perms, keys, inverse_index


def _encode(rows: np.ndarray, d: int) -> np.ndarray:
    return rows @ (d ** np.arange(d - 1, -1, -1, dtype=np.int64))


# numpy bodies

def _convolve_np(v, w, perms, keys):
    d = perms.shape[1]
    out = np.zeros_like(v)
    for x in np.flatnonzero(w):
        idx = np.searchsorted(keys, _encode(perms[:, perms[x]], d))
        out[idx] += v * w[x]
    return out


def _square_weights_np(perms, keys):
    d = perms.shape[1]
    sq = np.take_along_axis(perms, perms, axis=1)
    return np.bincount(np.searchsorted(keys, _encode(sq, d)), minlength=len(keys)).astype(np.int64)


def _commutator_weights_np(perms, keys, inverse_index):
    d = perms.shape[1]
    inv_perms = perms[inverse_index]
    counts = np.zeros(len(keys), dtype=np.int64)
    for a in range(len(keys)):
        alpha = perms[a]
        t = alpha[perms]                                  # alpha o beta
        t = t[:, inv_perms[a]]                            # ... o alpha^-1
        t = np.take_along_axis(t, inv_perms, axis=1)      # ... o beta^-1
        counts += np.bincount(np.searchsorted(keys, _encode(t, d)), minlength=len(keys))
    return counts


def _commutator_nnz_np(ma, mb):
    return int(np.count_nonzero(ma @ mb - mb @ ma))


# numba bodies

if NUMBA_AVAILABLE:

    @numba.njit(cache=True)
    def _rank(p, keys, d):
        key = 0
        for i in range(d):
            key = key * d + p[i]
        return np.searchsorted(keys, key)

    @numba.njit(cache=True)
    def _convolve_nb(v, w, perms, keys):
        n, d = perms.shape
        out = np.zeros_like(v)
        tmp = np.empty(d, dtype=np.int64)
        for x in range(n):
            wx = w[x]
            if wx == 0:
                continue
            for g in range(n):
                vg = v[g]
                if vg == 0:
                    continue
                for i in range(d):
                    tmp[i] = perms[g, perms[x, i]]
                out[_rank(tmp, keys, d)] += vg * wx
        return out

    @numba.njit(cache=True)
    def _square_weights_nb(perms, keys):
        n, d = perms.shape
        counts = np.zeros(n, dtype=np.int64)
        tmp = np.empty(d, dtype=np.int64)
        for r in range(n):
            for i in range(d):
                tmp[i] = perms[r, perms[r, i]]
            counts[_rank(tmp, keys, d)] += 1
        return counts

    @numba.njit(cache=True)
    def _commutator_weights_nb(perms, keys, inverse_index):
        n, d = perms.shape
        counts = np.zeros(n, dtype=np.int64)
        t1 = np.empty(d, dtype=np.int64)
        t2 = np.empty(d, dtype=np.int64)
        for a in range(n):
            ai = inverse_index[a]
            for b in range(n):
                bi = inverse_index[b]
                # alpha o beta o alpha^-1 o beta^-1, applied right to left
                for i in range(d):
                    t1[i] = perms[ai, perms[bi, i]]
                for i in range(d):
                    t2[i] = perms[a, perms[b, t1[i]]]
                counts[_rank(t2, keys, d)] += 1
        return counts

    @numba.njit(cache=True)
    def _commutator_nnz_nb(ma, mb):
        n = ma.shape[0]
        ab = np.zeros((n, n), dtype=np.int64)
        ba = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for k in range(n):
                aik = ma[i, k]
                bik = mb[i, k]
                if aik == 0 and bik == 0:
                    continue
                for j in range(n):
                    ab[i, j] += aik * mb[k, j]
                    ba[i, j] += bik * ma[k, j]
        nnz = 0
        for i in range(n):
            for j in range(n):
                if ab[i, j] != ba[i, j]:
                    nnz += 1
        return nnz


def convolve(v: np.ndarray, w: np.ndarray, d: int) -> np.ndarray:
    """out[g o x] += v[g] * w[x] over S_d. Object arrays always take the numpy body."""
    perms, keys, _ = permutation_table(d)
    if use_numba() and v.dtype == np.int64 and w.dtype == np.int64:
        return _convolve_nb(v, w, perms, keys)
    return _convolve_np(v, w, perms, keys)


def square_weights(d: int) -> np.ndarray:
    """counts[x] = #{rho : rho o rho = x}."""
    perms, keys, _ = permutation_table(d)
    if use_numba():
        return _square_weights_nb(perms, keys)
    return _square_weights_np(perms, keys)


def commutator_weights(d: int) -> np.ndarray:
    """counts[x] = #{(alpha, beta) : alpha beta alpha^-1 beta^-1 = x}."""
    perms, keys, inverse_index = permutation_table(d)
    if use_numba():
        return _commutator_weights_nb(perms, keys, inverse_index)
    return _commutator_weights_np(perms, keys, inverse_index)


def int_commutator_nnz(ma: np.ndarray, mb: np.ndarray) -> int:
    """Number of nonzero entries of ma @ mb - mb @ ma for int64 matrices."""
    if use_numba():
        return int(_commutator_nnz_nb(ma, mb))
    return _commutator_nnz_np(ma, mb)
