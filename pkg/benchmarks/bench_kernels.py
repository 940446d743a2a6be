"""Compare the numba loop kernels against their vectorized numpy twins.

    python3 benchmarks/bench_kernels.py [--shots N] [--matrices N] [--repeat R]

Set TPSQUBITS_NO_NUMBA=1 to see the loop kernels run as plain Python
(use small sizes then).
"""

import argparse
import time

import numpy as np

from tpsqubits import _kernels
from tpsqubits._accel import HAVE_NUMBA
from tpsqubits.sim import _cdf, analytic_probs
from tpsqubits.states import builtin_state


def best_of(fn, *args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--shots", type=int, default=10**6)
    p.add_argument("--matrices", type=int, default=10**5)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    cdf = _cdf(analytic_probs(builtin_state("uniform"), "123"))
    u = rng.random(args.shots)
    ms = rng.standard_normal((args.matrices, 2, 2)) + 1j * rng.standard_normal((args.matrices, 2, 2))

    # warm-up triggers compilation (or loads the on-disk cache)
    _kernels.categorical_counts_loop(cdf, u[:10])
    _kernels.svd2_batch_loop(ms[:2])

    print(f"numba active: {HAVE_NUMBA}   repeat: {args.repeat} (best time reported)")
    rows = []
    t_loop, c_loop = best_of(_kernels.categorical_counts_loop, cdf, u, repeat=args.repeat)
    t_np, c_np = best_of(_kernels.categorical_counts_numpy, cdf, u, repeat=args.repeat)
    assert np.array_equal(c_loop, c_np)
    rows.append((f"sampler, {args.shots} shots", t_loop, t_np))

    t_loop, (s_loop, _, _) = best_of(_kernels.svd2_batch_loop, ms, repeat=args.repeat)
    t_np, (s_np, _, _) = best_of(_kernels.svd2_batch_numpy, ms, repeat=args.repeat)
    assert np.allclose(s_loop, s_np, atol=1e-12)
    rows.append((f"svd2 batch, {args.matrices} matrices", t_loop, t_np))

    print(f"{'kernel':<32} {'loop [ms]':>10} {'numpy [ms]':>11} {'numpy/loop':>11}")
    for name, a, b in rows:
        print(f"{name:<32} {1e3 * a:>10.2f} {1e3 * b:>11.2f} {b / a:>11.2f}")


if __name__ == "__main__":
    main()
