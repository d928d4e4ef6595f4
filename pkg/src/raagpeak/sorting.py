"""Rewriting a product of Whitehead generators as (short-range part)(long-range part).

The basic move replaces ``alpha beta`` (alpha long-range, beta
short-range) by an equal product in which short-range factors come first.
Sorting a whole factorization repeats that move, pushing each long-range
factor rightwards through the short-range factors already collected.
"""

from __future__ import annotations

from .errors import InternalError, MalformedInput
from .graph import Graph
from .whitehead import (
    Factorization,
    Type1,
    Type2,
    compose,
    fz,
    image_set,
    in_long,
    in_short,
    is_identity,
    make_type2,
    split_ls,
)

STEP_CAP = 200000


def sorting_substitution(g: Graph, alpha, beta: Type2) -> Factorization:
    """An equal word for ``alpha beta`` with the short-range factors first."""
    if not in_long(g, alpha):
        raise MalformedInput("alpha must be long-range")
    if not isinstance(beta, Type2) or not in_short(g, beta):
        raise MalformedInput("beta must be a short-range type (2) generator")
    if isinstance(alpha, Type1):
        moved = make_type2(g, image_set(alpha, beta.A), alpha.perm[beta.a], check=False)
        return fz(moved, alpha)
    A, a = alpha.A, alpha.a
    B, b = beta.A, beta.a
    if a >> 1 == b >> 1 or (a >> 1) not in g.lk[b >> 1]:
        return fz(beta, alpha)
    if a not in B and (a ^ 1) not in B:
        return fz(beta, alpha)
    if a in B:
        # same map written with multiplier b^-1, so that a^-1 is in the set
        beta = make_type2(g, g.stl(b) - B, b ^ 1, check=False)
        B, b = beta.A, beta.a
    gamma = make_type2(g, (A - {a}) | {b}, b)
    s, l = split_ls(g, gamma)
    return fz(beta, s, l, alpha)


def _kind(g, aut):
    if isinstance(aut, Type2) and is_identity(g, aut):
        return None
    if isinstance(aut, Type1) and is_identity(g, aut):
        return None
    if isinstance(aut, Type2) and in_short(g, aut):
        return "short"
    if in_long(g, aut):
        return "long"
    return "mixed"


class _Sorter:
    def __init__(self, g):
        self.g = g
        self.steps = 0

    def push(self, alpha, shorts):
        """``alpha . shorts`` as ``shorts' . longs'``."""
        if not shorts:
            return [], [alpha]
        self.steps += 1
        if self.steps > STEP_CAP:
            raise InternalError("sorting did not terminate within the step cap")
        sub = sorting_substitution(self.g, alpha, shorts[0]).factors
        s1, l1 = [], []
        for x in sub:
            k = _kind(self.g, x)
            if k == "short":
                if l1:
                    raise InternalError("substitution left a short factor after a long one")
                s1.append(x)
            elif k == "long":
                l1.append(x)
        s2, l2 = self.push_many(l1, shorts[1:])
        return s1 + s2, l2

    def push_many(self, longs, shorts):
        out_longs = []
        for alpha in reversed(longs):
            shorts, ls = self.push(alpha, shorts)
            out_longs = ls + out_longs
        return shorts, out_longs


def expand(g: Graph, f: Factorization) -> list:
    """Split mixed generators and drop trivial ones."""
    out = []
    for x in f.factors:
        k = _kind(g, x)
        if k == "mixed":
            s, l = split_ls(g, x)
            out += [y for y in (s, l) if _kind(g, y) is not None]
        elif k is not None:
            out.append(x)
    return out


def sort_factorization(g: Graph, f: Factorization):
    """``(short_f, long_f)`` with ``short_f long_f`` equal to ``f``."""
    sorter = _Sorter(g)
    shorts, longs = [], []
    for x in reversed(expand(g, f)):
        if _kind(g, x) == "short":
            shorts = [x] + shorts
        else:
            s2, l2 = sorter.push(x, shorts)
            shorts, longs = s2, l2 + longs
    short_f, long_f = Factorization(tuple(shorts)), Factorization(tuple(longs))
    if compose(g, short_f + long_f) != compose(g, f):
        raise InternalError("sorting changed the automorphism")
    return short_f, long_f
