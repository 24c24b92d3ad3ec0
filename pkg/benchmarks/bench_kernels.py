"""Per-iteration timing of the fused energy/gradient kernel.

Compares the compiled extension against the pure-numpy fallback on the
full benchmark resolution (and a couple of smaller grids), reporting the
median time per evaluation and the speedup.  Run with

    python benchmarks/bench_kernels.py [--sizes 640x480,128x128] [--repeats 20]
"""

import argparse
import statistics
import time

import numpy as np

from phaserec import kernels
from phaserec.kernels import _numpy


def make_instance(rng, m, n):
    shape = (n, m)
    return dict(
        phi=rng.standard_normal(shape),
        ic=rng.standard_normal(shape),
        is_=rng.standard_normal(shape),
        b=rng.uniform(0.5, 1.5, shape),
        p1=rng.standard_normal(shape),
        p2=rng.standard_normal(shape),
        div_p=rng.standard_normal(shape),
    )


def time_kernel(fn, inst, repeats):
    shape = inst["phi"].shape
    grad = np.empty(shape)
    ws1 = np.empty(shape)
    ws2 = np.empty(shape)
    args = (
        inst["phi"], inst["ic"], inst["is_"], inst["b"],
        inst["p1"], inst["p2"], inst["div_p"], 1.0, 1.0, 1.0,
        grad, ws1, ws2,
    )
    fn(*args)  # warm up
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="128x128,320x240,640x480")
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'grid':>10} {'numpy (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}")
    for token in args.sizes.split(","):
        m, n = (int(t) for t in token.lower().split("x"))
        inst = make_instance(rng, m, n)
        t_numpy = time_kernel(_numpy.eval_energy_gradient, inst, args.repeats)
        if kernels.BACKEND == "compiled":
            t_comp = time_kernel(kernels.eval_energy_gradient, inst, args.repeats)
            print(
                f"{token:>10} {t_numpy * 1e3:>12.3f} {t_comp * 1e3:>14.3f} "
                f"{t_numpy / t_comp:>8.2f}"
            )
        else:
            print(f"{token:>10} {t_numpy * 1e3:>12.3f} {'n/a':>14} {'n/a':>8}")


if __name__ == "__main__":
    main()
