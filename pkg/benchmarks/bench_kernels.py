"""Compare compiled and pure-Python coefficient kernels on the hot workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from buraukit import _core, cyclotomic
from buraukit.burau import mat_pow, zeta
from buraukit.kernel import evaluate, order_of, predicted_min_k


def order_sweep():
    for tau in range(4, 61):
        assert order_of(evaluate(zeta(), tau), 4 * tau) == predicted_min_k(tau)


def small_tau_probe():
    order_of(evaluate(zeta(), 3), 2000)


def symbolic_power():
    mat_pow(zeta(), 3000)


def cyclotomic_table():
    cyclotomic._memo.clear()
    for n in range(1, 400):
        cyclotomic.cyclotomic_poly(n)


WORKLOADS = {
    "order sweep tau<=60": order_sweep,
    "tau=3 probe, cap 2000": small_tau_probe,
    "zeta^3000 over Z[t,1/t]": symbolic_power,
    "Phi_n for n<400": cyclotomic_table,
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _core.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':28s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    original = _core.BACKEND
    try:
        for name, fn in WORKLOADS.items():
            row = {}
            for b in backends:
                _core.use_backend(b)
                row[b] = best_of(fn, args.repeat)
            line = f"{name:28s}" + "".join(f"{row[b]:11.3f}s" for b in backends)
            if "compiled" in row:
                line += f"  {row['python'] / row['compiled']:9.1f}x"
            print(line)
    finally:
        _core.use_backend(original)


if __name__ == "__main__":
    main()
