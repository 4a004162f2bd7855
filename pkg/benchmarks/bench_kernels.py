"""Time the compiled and numpy kernels on the same random frameworks.

    python3 benchmarks/bench_kernels.py [--sizes 50 500 5000] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from catrank import kernels
from catrank.generator import GenSpec, random_af


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 500, 2000])
    ap.add_argument("--degree", type=float, default=3.0, help="mean attackers per argument")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = {"python": kernels.python_backend}
    if kernels.compiled_backend is not None:
        backends["cython"] = kernels.compiled_backend
    else:
        print("compiled kernels not built; timing the numpy fallback only")

    print(f"{'n':>6} {'edges':>8} {'kernel':>10} " + " ".join(f"{b:>11}" for b in backends) + "  speedup")
    for n in args.sizes:
        af = random_af(GenSpec(n, min(1.0, args.degree / n), True, n))
        m = af.attack_matrix()
        ones = np.ones(n)
        jobs = {
            "apply_f": lambda b: b.apply_f(m.indptr, m.indices, ones),
            "solve": lambda b: b.fixed_point(m.indptr, m.indices, ones, 1e-12, 10_000, 1),
            "sandwich": lambda b: b.sandwich(m.indptr, m.indices, n, 1e-12, 10_000, False),
        }
        for name, job in jobs.items():
            times = {b: _best(lambda mod=mod: job(mod), args.repeat) for b, mod in backends.items()}
            speed = f"{times['python'] / times['cython']:7.1f}x" if "cython" in times else ""
            cells = " ".join(f"{times[b] * 1e6:9.1f}us" for b in backends)
            print(f"{n:>6} {len(af.attacks):>8} {name:>10} {cells}  {speed}")


if __name__ == "__main__":
    main()
