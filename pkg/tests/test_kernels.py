import numpy as np
from hypothesis import given, strategies as st

from grothres import _kernels


@st.composite
def sparse_inputs(draw, max_len=40, key_top=10**6):
    keys = draw(st.lists(st.integers(0, key_top), min_size=0, max_size=max_len, unique=True))
    coeffs = draw(st.lists(st.integers(-1000, 1000), min_size=len(keys), max_size=len(keys)))
    return np.array(keys, dtype=np.int64), np.array(coeffs, dtype=np.int64)


def reference(ka, ca, kb, cb):
    acc = {}
    for k1, c1 in zip(ka.tolist(), ca.tolist()):
        for k2, c2 in zip(kb.tolist(), cb.tolist()):
            acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
    keys = sorted(k for k, v in acc.items() if v)
    return keys, [acc[k] for k in keys]


@given(sparse_inputs(), sparse_inputs(key_top=200))
def test_backends_agree_with_reference(a, b):
    ka, ca = a
    kb, cb = b
    want = reference(ka, ca, kb, cb)
    for name in ("numba", "numpy"):
        old = _kernels.BACKEND
        try:
            _kernels.set_backend(name)
            keys, vals = _kernels.sparse_mul(ka, ca, kb, cb)
        finally:
            _kernels.set_backend(old)
        assert (keys.tolist(), vals.tolist()) == want


def test_sorted_path_for_wide_keys():
    ka = np.array([0, 10**12], dtype=np.int64)
    kb = np.array([1, 5 * 10**11], dtype=np.int64)
    ca = np.array([2, 3], dtype=np.int64)
    cb = np.array([-1, 4], dtype=np.int64)
    want = reference(ka, ca, kb, cb)
    if _kernels.mul_numba is not None:
        keys, vals = _kernels.mul_numba(ka, ca, kb, cb)
        assert (keys.tolist(), vals.tolist()) == want
    keys, vals = _kernels.mul_numpy(ka, ca, kb, cb)
    assert (keys.tolist(), vals.tolist()) == want


def test_fits_int64():
    assert _kernels.fits_int64(2**20, 2**20, 1000)
    assert not _kernels.fits_int64(2**31, 2**31, 2)


def test_env_flag_selects_backend():
    import os
    import subprocess
    import sys

    code = "from grothres import _kernels; print(_kernels.BACKEND)"
    for flag, want in (("numpy", "numpy"), ("numba", "numba"), ("bogus", "numpy")):
        env = dict(os.environ, GROTHRES_BACKEND=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        assert out.stdout.strip() == want
