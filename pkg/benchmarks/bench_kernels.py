"""Compare the compiled kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--vectors N]

Part one times the raw ``affine_shift`` and ``combination_is_zero`` kernels of
each importable backend on identical inputs and checks they agree.  Part two
runs the module-axiom sweep end to end in a fresh interpreter per backend
(``SUPERHV_PURE_PYTHON=1`` selects the fallback).
"""
import argparse
import os
import subprocess
import sys
import timeit

from superhv import kernels, sampling
from superhv.omega import OmegaParams
from superhv.algebra import generators_in_window

SWEEP = """
import time
from superhv import kernels, verify
t = time.perf_counter()
rep = verify.relations_sweep(seed=1, n_beta=1, n_vectors={n})
print(kernels.BACKEND, rep.ok, rep.checks, time.perf_counter() - t)
"""


def kernel_inputs(n: int = 200):
    r = sampling.rng(5)
    p = OmegaParams(sampling.rand_beta(r, 3))
    gens = generators_in_window(-6, 6)
    cases = []
    for _ in range(n):
        f = sampling.rand_bipoly(r, 3)
        g = r.choice(gens)
        plan = p.plan(g, False)
        if plan is None or not f:
            continue
        _, mult, e = plan
        h = g.index.to_rat()
        cases.append((f._t, f._den, h.numerator, h.denominator, mult.a, mult.pcoef, mult.pden, e))
    return cases


def combo_inputs(n: int = 200):
    r = sampling.rng(6)
    out = []
    for _ in range(n):
        fs = [sampling.rand_bipoly(r, 3) for _ in range(3)]
        ws = [sampling.rand_rat(r, nonzero=True) for _ in range(3)]
        out.append([(f._t, f._den, w.numerator, w.denominator) for f, w in zip(fs, ws)])
    return out


def bench_kernels(repeat: int = 5):
    shifts, combos = kernel_inputs(), combo_inputs()
    results = {}
    for name, mod in kernels.available_backends().items():
        t_shift = min(timeit.repeat(lambda: [mod.affine_shift(*c) for c in shifts], number=1, repeat=repeat))
        t_combo = min(timeit.repeat(lambda: [mod.combination_is_zero(c) for c in combos], number=1, repeat=repeat))
        results[name] = ([mod.affine_shift(*c) for c in shifts], [mod.combination_is_zero(c) for c in combos])
        print(f"{name:>8}: affine_shift {1e6 * t_shift / len(shifts):8.1f} us/call   "
              f"combination_is_zero {1e6 * t_combo / len(combos):8.1f} us/call")
    if len(results) == 2:
        same = results["python"] == results["cython"]
        print(f"backends agree on all inputs: {same}")
    else:
        print("compiled backend not built; run `python3 setup.py build_ext --inplace`")


def bench_sweep(n_vectors: int):
    for pure in ("1", "0"):
        env = dict(os.environ, SUPERHV_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP.format(n=n_vectors)], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        backend, ok, checks, secs = out
        print(f"{backend:>8}: relations sweep, {n_vectors} vectors, {checks} checks, ok={ok}: {float(secs):.2f} s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vectors", type=int, default=20)
    args = ap.parse_args()
    bench_kernels()
    bench_sweep(args.vectors)
