"""Time the numba and numpy kernel sets side by side.

Shapes match the desk-scale workloads: MNIST rows for hashing, a 784-500-10
dense model for LRP, and a small conv stack for the conv kernels.

    python benchmarks/bench_kernels.py --repeat 20
"""

import argparse
import timeit

import numpy as np

from nppath import kernels


def workloads(rng):
    x = rng.normal(size=(32, 8, 14, 14))
    w = rng.normal(size=(16, 8, 3, 3))
    b = rng.normal(size=16)
    conv_out = kernels.NUMPY_KERNELS["conv2d_forward"](x, w, b, 1, 1)
    pooled, arg = kernels.NUMPY_KERNELS["maxpool_forward"](x, 2, 2)
    a_dense = np.maximum(rng.normal(size=784), 0)
    w_dense = rng.normal(size=(500, 784))
    r_dense = rng.normal(size=500)
    a_conv = np.maximum(rng.normal(size=(8, 14, 14)), 0)
    r_conv = rng.normal(size=(16, 14, 14))
    return {
        "fnv1a_rows": (rng.integers(0, 256, size=(10000, 785), dtype=np.uint8),),
        "conv2d_forward": (x, w, b, 1, 1),
        "conv2d_backward": (x, w, rng.normal(size=conv_out.shape), 1, 1),
        "maxpool_forward": (x, 2, 2),
        "maxpool_route": (rng.normal(size=pooled.shape), arg, 14, 14),
        "lrp_dense/epsilon": (a_dense, w_dense, r_dense, kernels.RULE_EPSILON, 1e-6, 0.0, 0.0, 0.0),
        "lrp_dense/alpha2beta1": (a_dense, w_dense, r_dense, kernels.RULE_ALPHA_BETA, 0.0, 0.0, 2.0, 1.0),
        "lrp_conv/epsilon": (a_conv, w, r_conv, 1, 1, kernels.RULE_EPSILON, 1e-6, 0.0, 0.0, 0.0),
    }


def best_of(func, args, repeat):
    func(*args)  # warm-up, also triggers numba compilation
    return min(timeit.repeat(lambda: func(*args), number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if not kernels.NUMBA_KERNELS:
        print("numba unavailable (or NPPATH_DISABLE_NUMBA set); timing numpy only")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<24}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, call in workloads(rng).items():
        key = name.split("/")[0]
        t_np = best_of(kernels.NUMPY_KERNELS[key], call, args.repeat)
        if kernels.NUMBA_KERNELS:
            t_nb = best_of(kernels.NUMBA_KERNELS[key], call, args.repeat)
            print(f"{name:<24}{t_np * 1e3:>12.3f}{t_nb * 1e3:>12.3f}{t_np / t_nb:>9.1f}x")
        else:
            print(f"{name:<24}{t_np * 1e3:>12.3f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
