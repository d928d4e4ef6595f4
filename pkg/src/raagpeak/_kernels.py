"""Hot loops over integer-coded words.

A letter is coded as ``2*i`` for vertex ``i`` and ``2*i + 1`` for its
inverse, so ``c ^ 1`` inverts and ``c >> 1`` is the vertex. Words are
int64 arrays; adjacency is an ``n x n`` boolean array with a false
diagonal.

The kernels are compiled with numba when it is importable and the
environment variable ``RAAGPEAK_NO_JIT`` is unset (or ``0``). Otherwise
the same source runs as plain Python over numpy arrays.
"""

import os

import numpy as np

_flag = os.environ.get("RAAGPEAK_NO_JIT", "0").strip().lower()
_want_jit = _flag in ("", "0", "false", "no")

try:
    if not _want_jit:
        raise ImportError
    from numba import njit as _njit

    JIT_ENABLED = True
except ImportError:  # numba missing or disabled by flag
    JIT_ENABLED = False

    def _njit(*args, **kwargs):
        def wrap(func):
            func.py_func = func
            return func

        if len(args) == 1 and callable(args[0]) and not kwargs:
            return wrap(args[0])
        return wrap


@_njit(cache=True)
def reduce_letters(w, adj):
    """Graphically reduce ``w``: cancel ``x ... x^-1`` across commuting letters."""
    out = np.empty(len(w), dtype=np.int64)
    m = 0
    for k in range(len(w)):
        x = w[k]
        j = m - 1
        cancelled = False
        while j >= 0:
            y = out[j]
            if y == (x ^ 1):
                for t in range(j, m - 1):
                    out[t] = out[t + 1]
                m -= 1
                cancelled = True
                break
            if not adj[y >> 1, x >> 1]:
                break
            j -= 1
        if not cancelled:
            out[m] = x
            m += 1
    return out[:m].copy()


@_njit(cache=True)
def lex_normal(w, adj):
    """Lexicographically least word in the commutation class of ``w``.

    Greedy: repeatedly emit the smallest letter that can be commuted to
    the front of what remains.
    """
    n = len(w)
    used = np.zeros(n, dtype=np.bool_)
    out = np.empty(n, dtype=np.int64)
    for step in range(n):
        best = -1
        best_pos = -1
        for i in range(n):
            if used[i]:
                continue
            if best >= 0 and w[i] >= best:
                continue
            free = True
            for j in range(i):
                if not used[j] and not adj[w[j] >> 1, w[i] >> 1]:
                    free = False
                    break
            if free:
                best = w[i]
                best_pos = i
        used[best_pos] = True
        out[step] = best
    return out


@_njit(cache=True)
def count_segments(w, nonlink, left, right):
    """Adjacency counter of a cyclic word.

    Each occurrence of a letter ``x`` outside the multiplier's link opens
    one segment ``x u z`` ending at the next such letter ``z`` (cyclically,
    possibly ``x`` itself). The segment is ``b u c^-1`` with ``(b, c) =
    (x, z^-1)`` and also the inverse form with ``(b, c) = (z^-1, x)``;
    when the two readings coincide it counts once.
    """
    n = len(w)
    total = 0
    for i in range(n):
        x = w[i]
        if not nonlink[x]:
            continue
        j = (i + 1) % n
        while not nonlink[w[j]]:
            j = (j + 1) % n
        zi = w[j] ^ 1
        first = left[x] and right[zi]
        second = left[zi] and right[x]
        if x == zi:
            if first:
                total += 1
        else:
            if first:
                total += 1
            if second:
                total += 1
    return total
