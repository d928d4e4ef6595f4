"""The action on the abelianization, and what it says about short-range products.

Matrices are indexed by vertices in declared order; column ``x`` holds the
exponent sums of the image of ``x``. So the transvection ``b -> b a``
maps to ``E_{a,b} = I + e_a e_b^T`` and composition is the matrix product.
"""

from __future__ import annotations

import numpy as np

from .errors import InternalError, MalformedInput
from .graph import Graph, dom_classes, dominates
from .whitehead import (
    Factorization,
    Type2,
    compose,
    equal_auts,
    images,
    in_short,
    transvection,
)


def homology_matrix(g: Graph, f) -> np.ndarray:
    M = np.zeros((g.n, g.n), dtype=np.int64)
    for x, w in enumerate(images(g, f)):
        for c in w:
            M[c >> 1, x] += -1 if c & 1 else 1
    return M


def elementary(n: int, a: int, b: int, power: int = 1) -> np.ndarray:
    E = np.eye(n, dtype=np.int64)
    E[a, b] += power
    return E


def _check_short(g, f):
    for x in f.factors:
        if not (isinstance(x, Type2) and in_short(g, x)):
            raise MalformedInput("factorization must use short-range generators only")


def short_range_is_identity(g: Graph, f: Factorization) -> bool:
    """Decide triviality of a short-range product from its matrix alone."""
    _check_short(g, f)
    return bool((homology_matrix(g, f) == np.eye(g.n, dtype=np.int64)).all())


def support_clique_check(g: Graph, f, c):
    """Support of the image of ``c`` and whether it is a clique inside st(c)."""
    c = g.vertex_index(c)
    w = compose(g, f).images[c]
    supp = {x >> 1 for x in w}
    ok = supp <= g.st[c] and all(g.adj[u, v] for u in supp for v in supp if u != v)
    return frozenset(g.vertices[i] for i in supp), ok


def transvection_power(g: Graph, a: int, b: int, power: int) -> list:
    """Factors for ``b -> b a^power`` (vertex indices), as a list."""
    if power == 0:
        return []
    mult = 2 * a if power > 0 else 2 * a + 1
    t = transvection(g, mult, 2 * b)
    return [t] * abs(power)


class _Reducer:
    """Column operations ``col b += c col a`` recorded as transvections."""

    def __init__(self, g, M, S):
        self.g = g
        self.M = M
        self.S = S
        self.ops = []

    def op(self, a, b, c):
        if c == 0:
            return
        if b in self.S:
            raise InternalError("column operation on a fixed generator")
        if not (self.g.adj[a, b] and dominates(self.g, a, b)):
            raise MalformedInput("matrix is not in the image of the short-range subgroup")
        self.M[:, b] += c * self.M[:, a]
        self.ops.append((a, b, c))

    def rotate(self, x, y):
        # (col x, col y) -> (col y, -col x)
        self.op(y, x, 1)
        self.op(x, y, -1)
        self.op(y, x, 1)

    def reduce_block(self, C):
        M = self.M
        T = [t for t in C if t in self.S]
        U = [u for u in C if u not in self.S]
        for t in T:
            for b in U:
                self.op(t, b, -int(M[t, b]))
        for i, p in enumerate(U):
            cols = U[i:]
            while True:
                nz = [c for c in cols if M[p, c] != 0]
                if len(nz) <= 1:
                    break
                q = min(nz, key=lambda c: abs(int(M[p, c])))
                for r in nz:
                    if r != q:
                        self.op(q, r, -(int(M[p, r]) // int(M[p, q])))
            if not nz or abs(int(M[p, nz[0]])) != 1:
                raise MalformedInput("block is not unimodular")
            if nz[0] != U[i]:
                self.rotate(U[i], nz[0])
            if M[p, U[i]] == -1:
                if i + 1 == len(U):
                    raise MalformedInput("block has determinant -1")
                self.rotate(U[i], U[i + 1])
                self.rotate(U[i], U[i + 1])
        for i, p in enumerate(U):
            for k in range(i + 1, len(U)):
                self.op(U[k], U[i], -int(M[U[k], U[i]]))


def fix_subset_factorization(g: Graph, f, S) -> Factorization:
    """Rewrite a short-range product fixing ``S`` using transvections
    ``b -> b a^{+-1}`` with ``b`` outside ``S`` only."""
    if isinstance(f, Factorization):
        _check_short(g, f)
    S = {g.vertex_index(s) for s in S}
    imgs = images(g, f)
    for s in S:
        if imgs[s] != (2 * s,):
            raise MalformedInput(f"{g.vertices[s]} is not fixed")
    red = _Reducer(g, homology_matrix(g, f), S)
    for C in dom_classes(g, "adjacent"):
        red.reduce_block(list(C))
    weight = {x: sum(1 for y in range(g.n) if dominates(g, x, y)) for x in range(g.n)}
    order = sorted(range(g.n), key=lambda x: (-weight[x], x))
    for b in order:
        if b in S:
            continue
        for a in order:
            if a != b and red.M[a, b] != 0:
                red.op(a, b, -int(red.M[a, b]))
    if not (red.M == np.eye(g.n, dtype=np.int64)).all():
        raise InternalError("row reduction did not reach the identity")
    factors = []
    for a, b, c in reversed(red.ops):
        factors += transvection_power(g, a, b, -c)
    out = Factorization(tuple(factors))
    if not equal_auts(g, out, f):
        raise InternalError("transvection product differs from the input")
    return out


# image of the transvection subgroup

def default_relation(g: Graph) -> set:
    """Adjacent domination, reflexive."""
    return {(x, y) for x in range(g.n) for y in range(g.n)
            if x == y or (g.adj[x, y] and dominates(g, x, y))}


def image_structure(g: Graph, relation=None) -> dict:
    """Classes, nilpotent-part generators and the finite relation list.

    ``relation`` is a set of vertex-index pairs ``(x, y)`` read as
    ``x >= y``. Relations are returned as lists of ``(a, b, exponent)``
    letters in the matrices ``E_{a,b}``.
    """
    R = set(default_relation(g) if relation is None else relation)
    n = g.n
    for x in range(n):
        if (x, x) not in R:
            raise MalformedInput("relation is not reflexive")
    for (x, y) in R:
        if not dominates(g, x, y):
            raise MalformedInput(f"{g.vertices[x]} >= {g.vertices[y]} is not a domination")
        for (y2, z) in R:
            if y2 == y and (x, z) not in R:
                raise MalformedInput("relation is not transitive")
    classes = []
    seen = set()
    for x in range(n):
        if x in seen:
            continue
        C = tuple(y for y in range(n) if (x, y) in R and (y, x) in R)
        seen.update(C)
        classes.append(C)
    gens = sorted((a, b) for (a, b) in R if a != b)
    nil = [(a, b) for (a, b) in gens if (b, a) not in R]
    rels = []
    for i, (a, b) in enumerate(gens):
        for (c, d) in gens[i + 1:]:
            if b != c and a != d:
                rels.append({"form": 1, "word": [(a, b, 1), (c, d, 1), (a, b, -1), (c, d, -1)]})
    for (a, b) in gens:
        for (b2, d) in gens:
            if b2 == b and a != d:
                rels.append({"form": 2, "word": [(a, b, 1), (b, d, 1), (a, b, -1), (b, d, -1), (a, d, -1)]})
    for C in classes:
        for i, a in enumerate(C):
            for b in C[i + 1:]:
                w = [(a, b, 1), (b, a, -1), (a, b, 1)]
                rels.append({"form": 3, "word": w * 4})
                if len(C) == 2:
                    v = [(a, b, 1), (b, a, -1), (a, b, 1), (b, a, 1)]
                    inv_v = [(x, y, -e) for (x, y, e) in reversed(v)]
                    rels.append({"form": 4, "word": w * 2 + inv_v * 3})
    return {"classes": classes, "generators": gens, "nilpotent_generators": nil, "relations": rels}


def relation_matrix(n: int, word) -> np.ndarray:
    M = np.eye(n, dtype=np.int64)
    for a, b, e in word:
        M = M @ elementary(n, a, b, e)
    return M


def relation_holds(n: int, word) -> bool:
    return bool((relation_matrix(n, word) == np.eye(n, dtype=np.int64)).all())
