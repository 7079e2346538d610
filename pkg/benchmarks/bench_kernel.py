"""Benchmark the compiled kernels against the pure-Python fallback.

Two layers:
  * micro: raw sparse-polynomial dict operations, both backends imported
    side by side in one process;
  * macro: an end-to-end normal-form workload run in subprocesses with
    SKEWPBW_PURE toggled, since the backend is chosen at import time.

Usage: python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time
from fractions import Fraction

from skewpbw import _kernel_py

try:
    from skewpbw import _speedups
except ImportError:
    _speedups = None

MACRO_SNIPPET = """
import random, time
from fractions import Fraction
import skewpbw
from skewpbw import catalog
from skewpbw.pbwcore import mul

rng = random.Random(2024)
algebras = [
    catalog.weyl(2),
    catalog.additive_analogue([Fraction(3, 2)], over="poly"),
    catalog.q_dilation(3, 2, 5),
]
def rand_elem(P):
    terms = {}
    for _ in range(3):
        alpha = [0] * P.n
        for _ in range(rng.randint(0, 5)):
            alpha[rng.randrange(P.n)] += 1
        c = Fraction(rng.randint(1, 9), rng.choice([1, 2, 3]))
        if P.ring.ngens:
            e = [0] * P.ring.ngens
            e[rng.randrange(P.ring.ngens)] = rng.randint(0, 2)
            terms[tuple(alpha)] = P.ring.from_terms({tuple(e): c})
        else:
            terms[tuple(alpha)] = P.ring.const(c)
    return P.element(terms)

start = time.perf_counter()
for P in algebras:
    for _ in range(120):
        f, g = rand_elem(P), rand_elem(P)
        mul(f, g)
elapsed = time.perf_counter() - start
print(f"{skewpbw.kernel_backend} {elapsed:.4f}")
"""


def random_poly(rng, nvars=3, nterms=6, maxexp=4):
    return {
        tuple(rng.randint(0, maxexp) for _ in range(nvars)): Fraction(
            rng.randint(1, 99), rng.choice([1, 2, 3, 7])
        )
        for _ in range(nterms)
    }


def bench_micro(repeat):
    rng = random.Random(99)
    pairs = [(random_poly(rng), random_poly(rng)) for _ in range(200)]
    backends = [("python", _kernel_py)]
    if _speedups is not None:
        backends.append(("cython", _speedups))
    results = {}
    for name, mod in backends:
        times = []
        for _ in range(repeat):
            start = time.perf_counter()
            for a, b in pairs:
                mod.poly_mul(a, b)
                mod.poly_add(a, b)
                acc = dict(a)
                mod.poly_iadd_scaled(acc, b, Fraction(3, 2))
            times.append(time.perf_counter() - start)
        results[name] = min(times)
    return results


def bench_macro():
    results = {}
    for pure in ("0", "1"):
        env = dict(os.environ, SKEWPBW_PURE=pure) if pure == "1" else {
            k: v for k, v in os.environ.items() if k != "SKEWPBW_PURE"
        }
        out = subprocess.run(
            [sys.executable, "-c", MACRO_SNIPPET],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        ).stdout.split()
        results[out[0]] = float(out[1])
    return results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print("== micro: sparse polynomial kernels (200 op-triples, best of "
          f"{args.repeat}) ==")
    micro = bench_micro(args.repeat)
    for name, t in sorted(micro.items()):
        print(f"  {name:7s} {t * 1e3:8.2f} ms")
    if "cython" in micro:
        print(f"  speedup {micro['python'] / micro['cython']:.2f}x")
    else:
        print("  (compiled kernels not built; micro comparison skipped)")

    print("== macro: 360 normal-form products across three algebras ==")
    macro = bench_macro()
    for name, t in sorted(macro.items()):
        print(f"  {name:7s} {t * 1e3:8.2f} ms")
    if "cython" in macro and "python" in macro:
        print(f"  speedup {macro['python'] / macro['cython']:.2f}x")


if __name__ == "__main__":
    main()
