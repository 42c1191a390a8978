"""Sparse int64 polynomial product on packed exponent keys.

Two interchangeable implementations: a numba ``@njit`` loop and a vectorized
numpy fallback. ``GROTHRES_BACKEND=numpy`` (or a missing numba) selects the
fallback. Callers are responsible for the overflow pre-check; see
:func:`fits_int64`.
"""

import os

import numpy as np

_LIMIT = 2**62
_DENSE_MIN = 1 << 16


def fits_int64(max_a: int, max_b: int, n_overlap: int) -> bool:
    """Whether every accumulated coefficient is guaranteed to stay below 2**62."""
    return max_a * max_b * max(n_overlap, 1) < _LIMIT


def mul_numpy(ka, ca, kb, cb):
    keys = np.add.outer(ka, kb).ravel()
    vals = np.multiply.outer(ca, cb).ravel()
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    vals = vals[order]
    if keys.size == 0:
        return keys, vals
    starts = np.flatnonzero(np.concatenate(([True], keys[1:] != keys[:-1])))
    sums = np.add.reduceat(vals, starts)
    out_keys = keys[starts]
    keep = sums != 0
    return out_keys[keep], sums[keep]


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


if njit is not None:

    @njit(cache=True)
    def _mul_dense(ka, ca, kb, cb, lo, span):
        acc = np.zeros(span, dtype=np.int64)
        for i in range(ka.size):
            base = ka[i] - lo
            c = ca[i]
            for j in range(kb.size):
                acc[base + kb[j]] += c * cb[j]
        m = 0
        for x in range(span):
            if acc[x] != 0:
                m += 1
        out_k = np.empty(m, dtype=np.int64)
        out_v = np.empty(m, dtype=np.int64)
        m = 0
        for x in range(span):
            if acc[x] != 0:
                out_k[m] = x + lo
                out_v[m] = acc[x]
                m += 1
        return out_k, out_v

    @njit(cache=True)
    def _mul_sorted(ka, ca, kb, cb):
        n = ka.size * kb.size
        keys = np.empty(n, dtype=np.int64)
        vals = np.empty(n, dtype=np.int64)
        idx = 0
        for i in range(ka.size):
            for j in range(kb.size):
                keys[idx] = ka[i] + kb[j]
                vals[idx] = ca[i] * cb[j]
                idx += 1
        order = np.argsort(keys)
        out_k = np.empty(n, dtype=np.int64)
        out_v = np.empty(n, dtype=np.int64)
        m = 0
        i = 0
        while i < n:
            k = keys[order[i]]
            acc = 0
            while i < n and keys[order[i]] == k:
                acc += vals[order[i]]
                i += 1
            if acc != 0:
                out_k[m] = k
                out_v[m] = acc
                m += 1
        return out_k[:m], out_v[:m]

    def mul_numba(ka, ca, kb, cb):
        if ka.size == 0 or kb.size == 0:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        lo = int(ka.min()) + int(kb.min())
        span = int(ka.max()) + int(kb.max()) - lo + 1
        # A dense accumulator wins whenever the key range is not much larger than the work.
        if span <= max(_DENSE_MIN, 16 * ka.size * kb.size):
            return _mul_dense(ka, ca, kb, cb, lo, span)
        return _mul_sorted(ka, ca, kb, cb)

else:  # pragma: no cover
    mul_numba = None


def _pick(name):
    if name == "numba" and mul_numba is not None:
        return "numba"
    return "numpy"


BACKEND = _pick(os.environ.get("GROTHRES_BACKEND", "numba").strip().lower())


def set_backend(name: str) -> str:
    """Switch implementation at runtime (used by the benchmark and tests)."""
    global BACKEND
    BACKEND = _pick(name)
    return BACKEND


def sparse_mul(ka, ca, kb, cb):
    ka = np.ascontiguousarray(ka, dtype=np.int64)
    kb = np.ascontiguousarray(kb, dtype=np.int64)
    ca = np.ascontiguousarray(ca, dtype=np.int64)
    cb = np.ascontiguousarray(cb, dtype=np.int64)
    if BACKEND == "numba":
        return mul_numba(ka, ca, kb, cb)
    return mul_numpy(ka, ca, kb, cb)
