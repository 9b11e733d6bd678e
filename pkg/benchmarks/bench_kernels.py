"""Time the compiled GF(p) kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``.  Both backends are imported
directly, so the environment switch does not matter here.
"""

from __future__ import annotations

import argparse
import random
import timeit

from hopfcode import _pykernels

try:
    from hopfcode import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_matrix(rng, n, m, p):
    return [[rng.randrange(p) for _ in range(m)] for _ in range(n)]


def bench(name, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    return name, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[24, 48, 96])
    ap.add_argument("--prime", type=int, default=13)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<12}{'size':>6}" + "".join(f"{b:>12}" for b, _ in backends) + ("     speedup" if _ckernels else ""))
    for n in args.sizes:
        a = random_matrix(rng, n, n, args.prime)
        b = random_matrix(rng, n, n, args.prime)
        for kernel in ("rref_mod_p", "matmul_mod_p"):
            times = []
            results = []
            for _, mod in backends:
                f = getattr(mod, kernel)
                call = (lambda f=f: f(a, n, args.prime)) if kernel == "rref_mod_p" else (lambda f=f: f(a, b, args.prime))
                results.append(call())
                times.append(bench(kernel, call, args.repeat)[1])
            if len(results) == 2 and results[0] != results[1]:
                raise SystemExit(f"{kernel} backends disagree at size {n}")
            line = f"{kernel:<12}{n:>6}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2:
                line += f"{times[0] / times[1]:>11.1f}x"
            print(line)


if __name__ == "__main__":
    main()
