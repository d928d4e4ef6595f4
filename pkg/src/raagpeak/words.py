"""Words, cyclic words and tuples of conjugacy classes.

A word is a tuple of letter codes. A canonical word is the lexicographically
least graphically reduced word for its element; a canonical cyclic word is
the least such word over the whole conjugacy class (commutations plus
rotations). A class tuple is a tuple of canonical cyclic words.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from . import _kernels
from .errors import MalformedInput
from .graph import Graph


def parse_word(g: Graph, text: str) -> tuple:
    text = text.strip()
    if text in ("", "1", "()"):
        return ()
    return tuple(g.parse_letter(tok) for tok in text.split())


def format_word(g: Graph, w) -> str:
    return " ".join(g.letter_name(c) for c in w) if w else "1"


def parse_tuple(g: Graph, text: str) -> tuple:
    """Comma-separated cyclic words, e.g. ``"a d d, b"``; canonicalized."""
    text = text.strip()
    if text.startswith("cyclic:"):
        text = text[len("cyclic:"):]
    if not text:
        return ()
    return tuple(reduce_cyclic(g, parse_word(g, part)) for part in text.split(","))


def format_tuple(g: Graph, W) -> str:
    return ", ".join("[" + format_word(g, w) + "]" for w in W)


def invert_word(w) -> tuple:
    return tuple(c ^ 1 for c in reversed(w))


def _as_array(w):
    return np.fromiter(w, dtype=np.int64, count=len(w))


def reduce_word(g: Graph, w) -> tuple:
    """Canonical form of the element represented by ``w``."""
    w = tuple(w)
    cache = g.cache.setdefault("reduce", {})
    got = cache.get(w)
    if got is None:
        if len(w) <= 1:
            got = w
        else:
            r = _kernels.reduce_letters(_as_array(w), g.adj)
            got = tuple(_kernels.lex_normal(r, g.adj).tolist())
        cache[w] = got
    return got


def _front_positions(g: Graph, w) -> list:
    """Positions whose letter can be commuted to the start of ``w``."""
    out = []
    for i, x in enumerate(w):
        if all(g.adj[w[j] >> 1, x >> 1] for j in range(i)):
            out.append(i)
    return out


def _back_positions(g: Graph, w) -> list:
    out = []
    n = len(w)
    for i, x in enumerate(w):
        if all(g.adj[w[j] >> 1, x >> 1] for j in range(i + 1, n)):
            out.append(i)
    return out


def cyclically_reduce(g: Graph, w) -> tuple:
    """Strip conjugating letters until the word is cyclically reduced.

    Result is canonical as a word but not yet minimized over rotations.
    """
    w = reduce_word(g, w)
    while True:
        front = {w[i]: i for i in _front_positions(g, w)}
        hit = None
        for j in _back_positions(g, w):
            i = front.get(w[j] ^ 1)
            if i is not None and i != j:
                hit = (i, j)
                break
        if hit is None:
            return w
        w = reduce_word(g, [c for k, c in enumerate(w) if k not in hit])


def reduce_cyclic(g: Graph, w) -> tuple:
    """Canonical representative of the conjugacy class of ``w``."""
    w = tuple(w)
    cache = g.cache.setdefault("cyclic", {})
    got = cache.get(w)
    if got is not None:
        return got
    start = cyclically_reduce(g, w)
    if len(start) <= 1:
        got = start
    elif g.n and not g.adj.any():
        # free group: rotations are the whole class
        got = min(start[i:] + start[:i] for i in range(len(start)))
    else:
        seen = {start}
        todo = [start]
        while todo:
            s = todo.pop()
            for i in _front_positions(g, s):
                t = s[:i] + s[i + 1:] + (s[i],)
                t = tuple(_kernels.lex_normal(_as_array(t), g.adj).tolist())
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        got = min(seen)
    cache[w] = got
    return got


def canonical_tuple(g: Graph, W) -> tuple:
    return tuple(reduce_cyclic(g, w) for w in W)


def tuple_length(W) -> int:
    return sum(len(w) for w in W)


def is_graphically_reduced(g: Graph, w, cyclic: bool = False) -> bool:
    """Check directly for a subsegment ``x u x^-1`` with ``u`` in lkl(x).

    Independent of the reduction kernel; used as a test oracle too.
    """
    w = tuple(w)
    n = len(w)
    for i in range(n):
        x = w[i]
        span = n if cyclic else n - i
        for step in range(1, span):
            y = w[(i + step) % n]
            if y == x ^ 1:
                return False
            if not g.adj[y >> 1, x >> 1]:
                break
    return True


def class_stats(g: Graph, w):
    """(length, support names, letter counts by name) of a cyclic word."""
    w = reduce_cyclic(g, w)
    support = frozenset(g.vertices[c >> 1] for c in w)
    counts = Counter(g.letter_name(c) for c in w)
    return len(w), support, dict(counts)


def equal_elements(g: Graph, w1, w2) -> bool:
    return reduce_word(g, w1) == reduce_word(g, w2)


def equal_classes(g: Graph, w1, w2) -> bool:
    return reduce_cyclic(g, w1) == reduce_cyclic(g, w2)


def words_up_to(g: Graph, length: int):
    """All words over the letters of ``g`` of length at most ``length``."""
    out = [()]
    layer = [()]
    for _ in range(length):
        layer = [w + (c,) for w in layer for c in g.letters]
        out += layer
    return out


def classes_up_to(g: Graph, length: int, min_length: int = 0) -> list:
    """Canonical cyclic words of length in ``[min_length, length]``, sorted."""
    found = set()
    layer = [()]
    for k in range(length + 1):
        if k:
            # extend only reduced words so growth stays manageable
            layer = [w + (c,) for w in layer for c in g.letters if not w or c != w[-1] ^ 1]
            layer = [w for w in layer if is_graphically_reduced(g, w)]
        for w in layer:
            c = reduce_cyclic(g, w)
            if min_length <= len(c) <= length:
                found.add(c)
    return sorted(found, key=lambda c: (len(c), c))


def check_letters(g: Graph, w) -> tuple:
    w = tuple(w)
    if any(not (0 <= c < 2 * g.n) for c in w):
        raise MalformedInput("letter code out of range")
    return w
