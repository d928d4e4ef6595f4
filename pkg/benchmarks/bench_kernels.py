"""Time the word kernels compiled and as plain Python.

    python3 benchmarks/bench_kernels.py [--words 2000] [--length 40]

Each kernel runs on the same random words through the JIT dispatcher and
through ``py_func`` (the undecorated source). Results must agree.
"""

import argparse
import time

import numpy as np

from raagpeak import _kernels
from raagpeak.graph import path


def _time(fn, words, *rest):
    t = time.perf_counter()
    out = [fn(w, *rest) for w in words]
    return time.perf_counter() - t, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--length", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    g = path(["a", "b", "c", "d", "e", "f"])
    rng = np.random.default_rng(args.seed)
    words = [rng.integers(0, 2 * g.n, size=args.length).astype(np.int64) for _ in range(args.words)]
    nonlink = np.ones(2 * g.n, dtype=np.bool_)
    nonlink[[2, 3, 6, 7]] = False
    left = np.zeros(2 * g.n, dtype=np.bool_)
    left[[0, 4]] = True
    right = ~left & nonlink

    print(f"jit enabled: {_kernels.JIT_ENABLED}; {args.words} words of length {args.length}")
    cases = [
        ("reduce_letters", _kernels.reduce_letters, (g.adj,)),
        ("lex_normal", _kernels.lex_normal, (g.adj,)),
        ("count_segments", _kernels.count_segments, (nonlink, left, right)),
    ]
    for name, fn, rest in cases:
        fn(words[0], *rest)  # compile outside the timing
        t_jit, out_jit = _time(fn, words, *rest)
        t_py, out_py = _time(fn.py_func, words, *rest)
        same = all(np.array_equal(np.asarray(a), np.asarray(b)) for a, b in zip(out_jit, out_py))
        print(f"{name:15s} jit {t_jit * 1e3:8.1f} ms   python {t_py * 1e3:8.1f} ms   "
              f"speedup {t_py / max(t_jit, 1e-9):6.1f}x   agree {same}")


if __name__ == "__main__":
    main()
