"""Adjacency counters and the length change of a long-range generator.

For ``alpha = (A, a)`` long-range and a class tuple ``W``, the change
``D = |alpha W| - |W|`` can be computed either by applying ``alpha`` or
from segment counts:

    D = <A, L - A> - <a, L>

where ``<B, C>`` counts segments ``b u c^-1`` (or their inverses) with
``b`` in ``B``, ``c`` in ``C`` and ``u`` a word in the link of ``a``.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import MalformedInput
from .graph import Graph
from .whitehead import Type1, Type2, apply_tuple, in_long
from .words import tuple_length


def _mask(g: Graph, letters) -> np.ndarray:
    m = np.zeros(2 * g.n, dtype=np.bool_)
    for c in letters:
        m[c] = True
    return m


def adjacency_counter(g: Graph, W, a: int, left, right) -> int:
    """``<left, right>`` of the tuple ``W`` relative to the multiplier ``a``."""
    link = g.lkl(a)
    nonlink = _mask(g, set(g.letters) - link)
    lm = _mask(g, set(left) - link)
    rm = _mask(g, set(right) - link)
    total = 0
    for w in W:
        if w:
            total += int(_kernels.count_segments(np.asarray(w, dtype=np.int64), nonlink, lm, rm))
    return total


def D(g: Graph, aut, W, method: str = "direct") -> int:
    if method == "direct":
        return tuple_length(apply_tuple(g, aut, W)) - tuple_length(W)
    if method != "formula":
        raise MalformedInput(f"unknown method {method!r}")
    if isinstance(aut, Type1):
        return 0
    if not isinstance(aut, Type2) or not in_long(g, aut):
        raise MalformedInput("the counting formula needs a long-range generator")
    A, a = aut.A, aut.a
    L = set(g.letters)
    return adjacency_counter(g, W, a, A, L - A) - adjacency_counter(g, W, a, {a}, L)


def obvious_representative(g: Graph, W, aut: Type2) -> tuple:
    """Rewrite each cyclic word of ``W`` into a word for its image.

    Inserts or deletes multiplier letters at segment ends; the result is
    graphically reduced but not rotated into canonical form.
    """
    if not isinstance(aut, Type2) or not in_long(g, aut):
        raise MalformedInput("obvious representative needs a long-range type (2) generator")
    A, a = aut.A, aut.a
    ai = a ^ 1
    link = g.lkl(a)
    out = []
    for w in W:
        pos = [i for i, c in enumerate(w) if c not in link]
        if not pos:
            out.append(tuple(w))
            continue
        nxt, prv = {}, {}
        for k, p in enumerate(pos):
            nxt[p] = w[pos[(k + 1) % len(pos)]]
            prv[p] = w[pos[k - 1]]
        new = []
        for i, x in enumerate(w):
            if i not in nxt:
                new.append(x)
                continue
            zi = nxt[i] ^ 1
            before = (x ^ 1) in A and (x ^ 1) != a and prv[i] not in A
            after = x in A and x != a and zi not in A
            drop = (x == ai and prv[i] in A and prv[i] != a) or (x == a and zi in A and zi != a)
            if before:
                new.append(ai)
            if not drop:
                new.append(x)
            if after:
                new.append(a)
        out.append(tuple(new))
    return tuple(out)


# the table of length changes on two-letter classes

ROWS = ("AA", "Ay", "Ai", "rest", "lk", "a", "ai")
COLS = ("AA", "Ay", "Ai")
ROW_LABELS = {
    "AA": "A∩A⁻¹", "Ay": "A−A⁻¹−a", "Ai": "A⁻¹−A−a⁻¹", "rest": "L−lkl(a)−A∪A⁻¹",
    "lk": "lkl(a)", "a": "{a}", "ai": "{a⁻¹}",
}
TABLE1 = {
    ("AA", "AA"): 0,
    ("Ay", "AA"): 1, ("Ay", "Ay"): 2,
    ("Ai", "AA"): 1, ("Ai", "Ay"): 0, ("Ai", "Ai"): 2,
    ("rest", "AA"): 2, ("rest", "Ay"): 1, ("rest", "Ai"): 1,
    ("lk", "AA"): 0, ("lk", "Ay"): 1, ("lk", "Ai"): 1,
    ("a", "AA"): 0, ("a", "Ay"): 1, ("a", "Ai"): -1,
    ("ai", "AA"): 0, ("ai", "Ay"): -1, ("ai", "Ai"): 1,
}


def letter_region(g: Graph, aut: Type2, c: int) -> str:
    A, a = aut.A, aut.a
    if c == a:
        return "a"
    if c == a ^ 1:
        return "ai"
    if c in g.lkl(a):
        return "lk"
    if c in A and (c ^ 1) in A:
        return "AA"
    if c in A:
        return "Ay"
    if (c ^ 1) in A:
        return "Ai"
    return "rest"


def table_cell(g: Graph, aut: Type2, b: int, c: int):
    """The populated cell that the class ``[b c]`` falls into, or None."""
    rb, rc = letter_region(g, aut, b), letter_region(g, aut, c)
    if (rb, rc) in TABLE1:
        return rb, rc
    if (rc, rb) in TABLE1:
        return rc, rb
    return None


def length_two_summary(g: Graph, aut: Type2):
    """Sizes ``(n, m, x, y)`` used in the closed form for the census."""
    v = aut.a >> 1
    n = g.n
    m = n - len(g.lk[v])
    x = sum(1 for c in aut.A if (c ^ 1) in aut.A) // 2
    y = sum(1 for c in aut.A if (c ^ 1) not in aut.A and c != aut.a)
    return n, m, x, y


def census_closed_form(n: int, m: int, x: int, y: int) -> int:
    """Sum of length changes over all two-letter classes.

    ``m`` counts the vertices outside the multiplier's link, the multiplier
    included, so ``m - 1 - x - y`` vertices are left untouched.
    """
    r = m - 1 - x - y
    return 4 * x * y + 8 * x * r + 2 * y * (y + 1) + 4 * y * r + 4 * y * (n - m)


def census_closed_form_as_printed(n: int, m: int, x: int, y: int) -> int:
    """The same sum with ``m - x - y`` untouched vertices (kept for comparison)."""
    r = m - x - y
    return 4 * x * y + 8 * x * r + 2 * y * (y + 1) + 4 * y * r + 4 * y * (n - m)
