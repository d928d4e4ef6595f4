"""Worked computations on the path a - b - c - d.

``phi(p, q, r, s)`` sends ``a -> a b^p c^q`` and ``d -> b^r c^s d``.
For ``w = [a d^k]`` the stabilizer among these is generated by
``phi(0, -k, 0, 1)``, and the classes of length at most ``|w|`` in the
orbit of ``w`` are the eight images of ``w`` under signs and the flip.
"""

from __future__ import annotations

import itertools


from .errors import MalformedInput
from .graph import Graph, path
from .homology import homology_matrix
from .orbits import brute_force_orbit
from .whitehead import (
    Automorphism,
    Factorization,
    apply_tuple,
    compose,
    enumerate_omega,
    images,
    make_type2,
    type1_group,
)
from .words import classes_up_to, cyclically_reduce, invert_word, reduce_cyclic, reduce_word

A, B, C, D = 0, 2, 4, 6


def p4() -> Graph:
    return path(["a", "b", "c", "d"])


_G = None


def _graph():
    global _G
    if _G is None:
        _G = p4()
    return _G


def _power(c, e):
    return (c,) * e if e >= 0 else (c ^ 1,) * (-e)


def _factor(g, kind, e):
    # right multiplication of a by b or c; left multiplication of d by b or c
    mult = {"ab": B, "ac": C, "db": B ^ 1, "dc": C ^ 1}[kind]
    if e < 0:
        mult ^= 1
    if kind[0] == "a":
        t = make_type2(g, {mult, A}, mult)
    else:
        t = make_type2(g, {mult, D ^ 1}, mult)
    return [t] * abs(e)


def phi(p: int, q: int, r: int, s: int, g: Graph = None) -> Factorization:
    """``phi(p, q, r, s)`` as a product of transvections."""
    g = g or _graph()
    factors = (_factor(g, "ab", p) + _factor(g, "ac", q)
               + _factor(g, "db", r) + _factor(g, "dc", s))
    return Factorization(tuple(factors))


def phi_images(p: int, q: int, r: int, s: int, g: Graph = None) -> Automorphism:
    """Generator images written down directly."""
    g = g or _graph()
    return Automorphism((
        reduce_word(g, (A,) + _power(B, p) + _power(C, q)),
        (B,),
        (C,),
        reduce_word(g, _power(B, r) + _power(C, s) + (D,)),
    ))


def w_class(k: int, g: Graph = None) -> tuple:
    g = g or _graph()
    return (reduce_cyclic(g, (A,) + (D,) * k),)


def formula_class(k, p, q, r, s, g: Graph = None) -> tuple:
    g = g or _graph()
    word = (A,) + _power(B, p + r) + _power(C, q + k * s) + (D,) + (_power(B, r) + (D,)) * (k - 1)
    return (reduce_cyclic(g, word),)


def image_formula_check(k: int, p: int, q: int, r: int, s: int) -> bool:
    """Does ``phi(p, q, r, s)`` send ``[a d^k]`` to the predicted class?"""
    if k < 2:
        raise MalformedInput("k must be at least 2")
    g = _graph()
    got = apply_tuple(g, phi(p, q, r, s, g), w_class(k, g))
    return got == formula_class(k, p, q, r, s, g)


def stabilizer_scan(k: int, bound: int) -> set:
    """All ``(p, q, r, s)`` in the box ``|entry| <= bound`` fixing ``[a d^k]``."""
    if k < 2:
        raise MalformedInput("k must be at least 2")
    g = _graph()
    w = w_class(k, g)
    rng = range(-bound, bound + 1)
    found = set()
    for p, q, r, s in itertools.product(rng, rng, rng, rng):
        aut = phi_images(p, q, r, s, g)
        word = [x for c in w[0] for x in (aut.images[c >> 1] if c % 2 == 0
                                          else invert_word(aut.images[c >> 1]))]
        # cheap length test before the full canonical form
        if len(cyclically_reduce(g, word)) != len(w[0]):
            continue
        if (reduce_cyclic(g, word),) == w:
            found.add((p, q, r, s))
    expected = {(0, -k * s, 0, s) for s in rng if abs(k * s) <= bound}
    if found != expected:
        raise AssertionError(f"stabilizer scan {sorted(found)} != {sorted(expected)}")
    return found


def probe_family(k: int, g: Graph = None) -> list:
    """Classes used to compare automorphisms up to inner ones."""
    g = g or _graph()
    fam = [(c,) for c in classes_up_to(g, 3, 1)]
    return fam + [w_class(k, g)]


def _signature(g, aut, family):
    return (tuple(apply_tuple(g, aut, W) for W in family),
            homology_matrix(g, aut).tobytes())


def level_orbit_check(k: int, slack: int = 2) -> dict:
    """Level census of the orbit of ``[a d^k]`` and the move check.

    The orbit is explored by BFS over all Whitehead generators up to
    length ``k + 1 + slack``. Every generator keeping some class of
    ``P w`` at its length must send it into ``P w`` and agree, on a fixed
    family of classes and on homology, with a signed graph symmetry.
    """
    if k not in (2, 3):
        raise MalformedInput("level check is sized for k in {2, 3}")
    g = _graph()
    w = w_class(k, g)
    n = k + 1
    perms = type1_group(g)
    Pw = {apply_tuple(g, s, w) for s in perms}
    orbit = brute_force_orbit(g, w, n + slack)
    low = {V for V in orbit if sum(len(x) for x in V) <= n}
    family = probe_family(k, g)
    sigs = {_signature(g, s, family) for s in perms}
    checked = ok = 0
    bad = []
    for t in enumerate_omega(g, "all"):
        for u in sorted(Pw):
            v = apply_tuple(g, t, u)
            if sum(len(x) for x in v) != n:
                continue
            checked += 1
            if v in Pw and _signature(g, t, family) in sigs:
                ok += 1
            else:
                bad.append((t, u))
    return {
        "k": k,
        "P_images": len(Pw),
        "low_classes": len(low),
        "low_equals_P_images": low == Pw,
        "moves_checked": checked,
        "moves_in_P": ok,
        "failures": bad,
        "passed": len(Pw) == 8 and low == Pw and not bad,
    }


def homomorphism_check(v, v2, k: int = 2) -> bool:
    """``phi(v) phi(v2)`` and ``phi(v + v2)`` act alike on test classes."""
    g = _graph()
    lhs = Factorization(phi(*v, g).factors + phi(*v2, g).factors)
    rhs = phi(*(x + y for x, y in zip(v, v2)), g)
    fam = probe_family(k, g)
    return all(apply_tuple(g, lhs, W) == apply_tuple(g, rhs, W) for W in fam)


def partial_conjugations_are_inner(g: Graph = None) -> bool:
    """No star separates the path, so every partial conjugation is full."""
    from .graph import components_without_star
    g = g or _graph()
    return all(len(components_without_star(g, v)) <= 1 for v in g.vertices)


def phi_matches_images(p, q, r, s) -> bool:
    g = _graph()
    return compose(g, phi(p, q, r, s, g)).images == images(g, phi_images(p, q, r, s, g))


__all__ = [
    "p4", "phi", "phi_images", "w_class", "formula_class", "image_formula_check",
    "stabilizer_scan", "level_orbit_check", "homomorphism_check",
    "partial_conjugations_are_inner", "phi_matches_images",
]
