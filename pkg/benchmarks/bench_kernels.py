"""Compare the compiled polynomial kernel with the pure-Python fallback.

Kernel timings call both modules directly; the end-to-end timing runs the
oracle in subprocesses so that ``CYLPIERI_PURE`` selects the backend at import.

    python benchmarks/bench_kernels.py [--repeat N] [--skip-end-to-end]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from cylpieri import _kern_py
from cylpieri.polyring import TPoly, linear_diff, linear_product

try:
    from cylpieri import _kern_c
except ImportError:
    _kern_c = None


def random_poly(rng, n_vars, n_factors):
    """A sum of products of linear forms, like the coefficients the oracle handles."""
    out = TPoly()
    for _ in range(6):
        pairs = [tuple(rng.sample(range(1, n_vars + 1), 2)) for _ in range(n_factors)]
        out = out + linear_product(pairs)
    return out


def kernel_cases(rng):
    a = random_poly(rng, 13, 4)._terms
    b = random_poly(rng, 13, 3)._terms
    prod = (random_poly(rng, 13, 3) * linear_diff(9, 2))._terms
    return {
        "mul": lambda k: k.mul(a, b),
        "div_linear": lambda k: k.div_linear(prod, 9, 2),
    }


END_TO_END = (
    "from cylpieri.oracle import crosscheck_pieri; from cylpieri.shapes import Rect; "
    "import time; t = time.perf_counter(); r = crosscheck_pieri(Rect(3, 6)); "
    "assert r.ok; print(time.perf_counter() - t)"
)


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("CYLPIERI_PURE", None)
    if pure:
        env["CYLPIERI_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args()
    if _kern_c is None:
        print("compiled kernel not built; only the pure-Python backend is available")
        return
    cases = kernel_cases(random.Random(7))
    print(f"{'operation':<12} {'python us':>10} {'compiled us':>12} {'speedup':>8}")
    for name, fn in cases.items():
        assert fn(_kern_py) == fn(_kern_c), name
        t_py = min(timeit.repeat(lambda: fn(_kern_py), number=args.repeat, repeat=3)) / args.repeat
        t_c = min(timeit.repeat(lambda: fn(_kern_c), number=args.repeat, repeat=3)) / args.repeat
        print(f"{name:<12} {t_py * 1e6:>10.1f} {t_c * 1e6:>12.1f} {t_py / t_c:>7.2f}x")
    if not args.skip_end_to_end:
        t_py, t_c = end_to_end(True), end_to_end(False)
        print(f"crosscheck Rect(3,6): python {t_py:.2f} s, compiled {t_c:.2f} s, speedup {t_py / t_c:.2f}x")


if __name__ == "__main__":
    main()
