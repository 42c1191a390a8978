"""Compare the numba and numpy backends of the sparse polynomial product.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Two workloads: the raw packed-key kernel on random sparse inputs, and the
oracle path it accelerates (g_poly products checked by verify_mult).
"""

import argparse
import time

import numpy as np

from grothres import _kernels
from grothres.symfunc import _g, _schur, g_poly, h_i_poly, h_poly


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _packed(size, rng, M=5, top=12):
    """Distinct exponent vectors packed in mixed radix, as the oracle builds them."""
    exps = np.unique(rng.integers(0, top, size=(size, M)), axis=0)
    stride = (2 * top) ** np.arange(M - 1, -1, -1, dtype=np.int64)
    return exps @ stride


def raw_kernel(size, repeat, rng, wide):
    if wide:
        ka = np.unique(rng.integers(0, 10**9, size=size))
        kb = np.unique(rng.integers(0, 10**9, size=size))
    else:
        ka, kb = _packed(size, rng), _packed(size, rng)
    ca = rng.integers(-50, 50, size=ka.size)
    cb = rng.integers(-50, 50, size=kb.size)
    results = {}
    for name in ("numba", "numpy"):
        _kernels.set_backend(name)
        _kernels.sparse_mul(ka[:4], ca[:4], kb[:4], cb[:4])  # compile outside the timer
        results[name] = _best(lambda: _kernels.sparse_mul(ka, ca, kb, cb), repeat)
    (kn, vn), (kp, vp) = results["numba"][1], results["numpy"][1]
    assert np.array_equal(kn, kp) and np.array_equal(vn, vp)
    return results["numba"][0], results["numpy"][0]


def oracle_products(repeat):
    cases = [((3, 2, 1), (2, 2)), ((2, 2, 1), (3, 1)), ((4, 1), (2, 1, 1))]
    times = {}
    for name in ("numba", "numpy"):
        _kernels.set_backend(name)

        def run():
            for fn in (h_poly, h_i_poly, _schur, _g):
                fn.cache_clear()
            return [g_poly(a, 5) * g_poly(b, 5) for a, b in cases]

        run()
        times[name] = _best(run, repeat)
    assert times["numba"][1] == times["numpy"][1]
    return times["numba"][0], times["numpy"][0]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'workload':<28}{'numba [s]':>12}{'numpy [s]':>12}{'ratio':>8}")
    for wide in (False, True):
        for size in (100, 1000, 3000):
            nb, np_ = raw_kernel(size, args.repeat, rng, wide)
            label = f"{'wide' if wide else 'packed'} keys {size}x{size}"
            print(f"{label:<28}{nb:>12.4f}{np_:>12.4f}{np_ / nb:>8.2f}")
    nb, np_ = oracle_products(args.repeat)
    print(f"{'g_poly products, M=5':<28}{nb:>12.4f}{np_:>12.4f}{np_ / nb:>8.2f}")
    _kernels.set_backend("numba")


if __name__ == "__main__":
    main()
