"""Time the numba kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--degree 6] [--repeat 3]

The backend is switched through HURWITZKIT_DISABLE_NUMBA between runs; both
results are checked for equality before timings are reported.
"""
import argparse
import os
import time

import numpy as np

from hurwitzkit import _kernels
from hurwitzkit.exactcore import Partition
from hurwitzkit.hurwitz import BranchingData, hurwitz_permutation_oracle
from hurwitzkit.matrices import seeded_matrix
from hurwitzkit.weyl import build_powersum_hamiltonian
from hurwitzkit.weyl.verify import _integer_matrix


def _cases(d):
    rng = np.random.default_rng(0)
    n = len(_kernels.permutation_table(d)[0])
    v = rng.integers(-3, 4, n).astype(np.int64)
    w = rng.integers(-3, 4, n).astype(np.int64)
    a = seeded_matrix(3, 1)
    ha = build_powersum_hamiltonian([2, 1], a, 3)
    hb = build_powersum_hamiltonian([3], a, 3)
    ma = _integer_matrix(ha.graded_matrix(3)[1], len(ha.graded_matrix(3)[0])).astype(np.int64)
    mb = _integer_matrix(hb.graded_matrix(3)[1], len(hb.graded_matrix(3)[0])).astype(np.int64)
    torus = BranchingData(d, (Partition([2] + [1] * (d - 2)),) * 2, handles=1)
    return {
        "convolve": lambda: _kernels.convolve(v, w, d),
        "square_weights": lambda: _kernels.square_weights(d),
        "commutator_weights": lambda: _kernels.commutator_weights(d),
        "int_commutator_nnz": lambda: _kernels.int_commutator_nnz(ma, mb),
        "oracle (torus, two profiles)": lambda: hurwitz_permutation_oracle(torus),
    }


def _time(fn, repeat):
    fn()  # warm-up, includes JIT compilation on the numba path
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _same(x, y):
    if isinstance(x, np.ndarray):
        return np.array_equal(x, y)
    return x == y


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    old = os.environ.get("HURWITZKIT_DISABLE_NUMBA")
    print(f"degree {args.degree}, best of {args.repeat}")
    print(f"{'kernel':<30}{'numba [ms]':>12}{'numpy [ms]':>12}{'speed-up':>10}")
    try:
        for name, fn in _cases(args.degree).items():
            os.environ["HURWITZKIT_DISABLE_NUMBA"] = "0"
            fast, t_fast = fn(), _time(fn, args.repeat)
            os.environ["HURWITZKIT_DISABLE_NUMBA"] = "1"
            slow, t_slow = fn(), _time(fn, args.repeat)
            if not _same(fast, slow):
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:<30}{t_fast * 1e3:>12.2f}{t_slow * 1e3:>12.2f}{t_slow / t_fast:>9.1f}x")
    finally:
        if old is None:
            os.environ.pop("HURWITZKIT_DISABLE_NUMBA", None)
        else:
            os.environ["HURWITZKIT_DISABLE_NUMBA"] = old


if __name__ == "__main__":
    main()
