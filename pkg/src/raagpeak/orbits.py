"""Length descent and orbit questions for tuples of conjugacy classes.

Descent and orbit equivalence use only long-range Whitehead generators.
Whitehead graphs and stabilizers are offered for tuples of length-one
classes, where long-range and short-range generators together suffice.
``brute_force_orbit`` is the plain BFS used as ground truth in tests.
"""

from __future__ import annotations

from collections import deque

from .errors import CapExceeded, InternalError, MalformedInput
from .graph import Graph
from .whitehead import (
    Factorization,
    apply_tuple,
    enumerate_omega,
    invert_factorization,
)
from .words import canonical_tuple, tuple_length

FRONTIER_CAP = 10 ** 5


def long_range_moves(g: Graph) -> list:
    return enumerate_omega(g, "long")


def minimize_long_range(g: Graph, W):
    """Greedy descent: apply the first strictly shortening long-range
    generator until none is left. Returns ``(W_min, f)`` with ``f W = W_min``."""
    W = canonical_tuple(g, W)
    moves = long_range_moves(g)
    factors = []
    n = tuple_length(W)
    progress = True
    while progress:
        progress = False
        for t in moves:
            V = apply_tuple(g, t, W)
            m = tuple_length(V)
            if m < n:
                W, n = V, m
                factors.insert(0, t)
                progress = True
                break
    return W, Factorization(tuple(factors))


def _minimize_cached(g, W):
    cache = g.cache.setdefault("minimize", {})
    W = canonical_tuple(g, W)
    if W not in cache:
        cache[W] = minimize_long_range(g, W)
    return cache[W]


def level_component(g: Graph, root, cap: int = FRONTIER_CAP) -> dict:
    """Tuples reachable from ``root`` by length-preserving long-range moves.

    Maps each tuple to the factorization carrying ``root`` onto it.
    """
    root = canonical_tuple(g, root)
    n = tuple_length(root)
    moves = long_range_moves(g)
    seen = {root: Factorization(())}
    queue = deque([root])
    while queue:
        W = queue.popleft()
        path = seen[W]
        for t in moves:
            V = apply_tuple(g, t, W)
            if V in seen or tuple_length(V) != n:
                continue
            seen[V] = Factorization((t,)) + path
            if len(seen) > cap:
                raise CapExceeded(f"level search exceeded {cap} tuples")
            queue.append(V)
    return seen


def _component_cached(g, W_min, cap):
    """``(key, component)``; every member of a component shares one entry."""
    comps = g.cache.setdefault("level", {})
    if W_min not in comps:
        comp = level_component(g, W_min, cap)
        entry = ((len(W_min), min(comp, key=lambda V: (tuple_length(V), V))), comp)
        for V in comp:
            comps[V] = entry
    return comps[W_min]


def orbit_key(g: Graph, W, cap: int = FRONTIER_CAP) -> tuple:
    """Canonical label of the long-range orbit of ``W``: the least tuple
    of its minimal level. Two tuples share an orbit iff their keys agree."""
    m, _ = _minimize_cached(g, W)
    return _component_cached(g, m, cap)[0]


def same_orbit_long_range(g: Graph, W1, W2, cap: int = FRONTIER_CAP):
    """A long-range factorization taking ``W1`` to ``W2``, or ``None``."""
    W1, W2 = canonical_tuple(g, W1), canonical_tuple(g, W2)
    if len(W1) != len(W2):
        return None
    m1, f1 = _minimize_cached(g, W1)
    m2, f2 = _minimize_cached(g, W2)
    if tuple_length(m1) != tuple_length(m2):
        return None
    _, comp = _component_cached(g, m1, cap)
    if m2 not in comp:
        return None
    # root -> m1 and root -> m2 give m1 -> m2
    step = comp[m2] + invert_factorization(g, comp[m1])
    out = invert_factorization(g, f2) + step + f1
    if apply_tuple(g, out, W1) != W2:
        raise InternalError("orbit factorization does not carry W1 to W2")
    return out


def _length_one(g, W):
    W = canonical_tuple(g, W)
    if any(len(w) != 1 for w in W):
        raise MalformedInput("every entry must be a length-one class")
    return W


def level_moves(g: Graph) -> list:
    """Long-range and short-range generators, without repeats."""
    out, seen = [], set()
    for t in enumerate_omega(g, "long") + enumerate_omega(g, "short"):
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def whitehead_graph_length1(g: Graph, W, cap: int = FRONTIER_CAP) -> dict:
    """Connected component of ``W`` in the graph of equal-length tuples."""
    W = _length_one(g, W)
    moves = level_moves(g)
    n = tuple_length(W)
    nodes = [W]
    index = {W: 0}
    edges = []
    i = 0
    while i < len(nodes):
        U = nodes[i]
        for t in moves:
            V = apply_tuple(g, t, U)
            if tuple_length(V) != n:
                continue
            if V not in index:
                index[V] = len(nodes)
                nodes.append(V)
                if len(nodes) > cap:
                    raise CapExceeded(f"Whitehead graph exceeded {cap} nodes")
            edges.append((U, V, t))
        i += 1
    return {"nodes": nodes, "edges": edges}


def stabilizer_generators_length1(g: Graph, W) -> list:
    """Generators of the stabilizer of ``W``: the level moves fixing it."""
    W = _length_one(g, W)
    return [t for t in level_moves(g) if apply_tuple(g, t, W) == W]


def brute_force_orbit(g: Graph, W, max_len: int, max_nodes: int = FRONTIER_CAP,
                      subset: str = "all") -> set:
    """BFS closure of ``W`` under Whitehead generators, dropping tuples
    longer than ``max_len``. ``subset`` is passed to ``enumerate_omega``."""
    W = canonical_tuple(g, W)
    if tuple_length(W) > max_len:
        return set()
    moves = enumerate_omega(g, subset)
    seen = {W}
    queue = deque([W])
    while queue:
        U = queue.popleft()
        for t in moves:
            V = apply_tuple(g, t, U)
            if V in seen or tuple_length(V) > max_len:
                continue
            seen.add(V)
            if len(seen) > max_nodes:
                raise CapExceeded(f"orbit search exceeded {max_nodes} tuples")
            queue.append(V)
    return seen
