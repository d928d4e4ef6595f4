"""Whitehead automorphisms, their action on words, and enumeration.

Two kinds of generator:

* ``Type1`` is a signed permutation of the letters induced by a graph
  symmetry and inversions. ``perm[c]`` is the image of letter ``c``.
* ``Type2`` is the pair ``(A, a)``: ``a`` is fixed and every other
  generator ``x`` goes to ``x``, ``x a``, ``a^-1 x`` or ``a^-1 x a``
  depending on whether ``x`` and ``x^-1`` lie in ``A``. Instances are
  always normalized, so no link pair ``{x, x^-1}`` is stored.

An ``Automorphism`` holds canonical images of the generators; equality of
maps is always decided on those images.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import CapExceeded, MalformedInput
from .graph import Graph, components_without_star, dominates, graph_automorphisms
from .words import format_word, invert_word, parse_word, reduce_cyclic, reduce_word

OMEGA_LETTER_CAP = 12
TYPE1_GROUP_CAP = 50000


@dataclass(frozen=True)
class Type1:
    perm: tuple

    def __repr__(self):
        return f"Type1{self.perm}"


@dataclass(frozen=True)
class Type2:
    A: frozenset
    a: int

    def __repr__(self):
        return f"Type2({sorted(self.A)}, {self.a})"


@dataclass(frozen=True)
class Automorphism:
    images: tuple


@dataclass(frozen=True)
class Factorization:
    """Factors as written, ``alpha_m ... alpha_1``; the last one acts first."""

    factors: tuple = ()

    def __add__(self, other):
        return Factorization(self.factors + tuple(other.factors))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def fz(*factors) -> Factorization:
    return Factorization(tuple(factors))


# construction and validation

def identity(g: Graph) -> Type1:
    return Type1(tuple(range(2 * g.n)))


def type1_from_vertex_map(g: Graph, pi, signs=None) -> Type1:
    """Signed permutation sending vertex ``i`` to letter ``2*pi[i] + signs[i]``."""
    signs = signs or [0] * g.n
    perm = [0] * (2 * g.n)
    for i in range(g.n):
        c = 2 * pi[i] + signs[i]
        perm[2 * i] = c
        perm[2 * i + 1] = c ^ 1
    return make_type1(g, perm)


def make_type1(g: Graph, perm) -> Type1:
    perm = tuple(int(c) for c in perm)
    if sorted(perm) != list(range(2 * g.n)):
        raise MalformedInput("type (1) map is not a bijection of the letters")
    for c in range(0, 2 * g.n, 2):
        if perm[c + 1] != perm[c] ^ 1:
            raise MalformedInput("type (1) map must commute with inversion")
    pi = [perm[2 * i] >> 1 for i in range(g.n)]
    for i in range(g.n):
        for j in range(g.n):
            if g.adj[i, j] != g.adj[pi[i], pi[j]]:
                raise MalformedInput("type (1) map does not preserve adjacency")
    return Type1(perm)


def normalize_set(g: Graph, A, a: int) -> frozenset:
    """Drop every pair ``{x, x^-1}`` with ``x`` in the link of ``a``."""
    A = frozenset(A)
    return frozenset(c for c in A if not (c in g.lkl(a) and (c ^ 1) in A))


def check_well_defined(g: Graph, A, a: int):
    """Decide whether ``(A, a)`` defines an automorphism.

    Returns ``(ok, diagnostic)``; the diagnostic names the first failing
    condition and a witness letter.
    """
    A = frozenset(A)
    if a not in A or (a ^ 1) in A:
        raise MalformedInput("need a in A and a^-1 not in A")
    if any(not 0 <= c < 2 * g.n for c in A):
        raise MalformedInput("letter out of range")
    v = a >> 1
    both = {x for x in range(g.n) if 2 * x in A and 2 * x + 1 in A and x not in g.lk[v]}
    for comp in components_without_star(g, v):
        if comp & both and not comp <= both:
            bad = min(comp - both)
            return False, (f"condition 1: component of {g.vertices[bad]} is split "
                           f"(both-sided letters must fill whole components)")
    for c in sorted(A):
        if c == a or (c ^ 1) in A:
            continue
        if not dominates(g, v, c >> 1):
            return False, f"condition 2: {g.letter_name(a)} does not dominate {g.letter_name(c)}"
    return True, "well-defined"


def make_type2(g: Graph, A, a: int, check: bool = True) -> Type2:
    A = frozenset(A)
    if check:
        ok, diag = check_well_defined(g, A, a)
        if not ok:
            raise MalformedInput(f"({_set_str(g, A)}, {g.letter_name(a)}) is not well-defined: {diag}")
    return Type2(normalize_set(g, A, a), a)


def _set_str(g, A):
    return "{" + ",".join(g.letter_name(c) for c in sorted(A)) + "}"


def _letter(g: Graph, x) -> int:
    return g.parse_letter(x) if isinstance(x, str) else int(x)


def transvection(g: Graph, x, y) -> Type2:
    """``y -> y x``; needs ``x >= y`` on distinct vertices."""
    x, y = _letter(g, x), _letter(g, y)
    if x >> 1 == y >> 1:
        raise MalformedInput("transvection needs distinct vertices")
    if not dominates(g, x >> 1, y >> 1):
        raise MalformedInput(f"{g.vertices[x >> 1]} does not dominate {g.vertices[y >> 1]}")
    return make_type2(g, {x, y}, x)


def partial_conjugation(g: Graph, x, Y) -> Type2:
    """Conjugate every generator in ``Y`` (a union of components of the
    graph minus the star of ``x``) by ``x``."""
    x = _letter(g, x)
    Y = {g.vertex_index(y) for y in Y}
    comps = components_without_star(g, x >> 1)
    if not all(not (c & Y) or c <= Y for c in comps) or not Y <= set().union(*comps):
        raise MalformedInput("Y is not a union of components")
    return make_type2(g, {x} | {c for y in Y for c in (2 * y, 2 * y + 1)}, x)


def inversion(g: Graph, x) -> Type1:
    i = g.vertex_index(x)
    signs = [1 if j == i else 0 for j in range(g.n)]
    return type1_from_vertex_map(g, list(range(g.n)), signs)


def graphic(g: Graph, pi) -> Type1:
    """Type (1) map from a vertex permutation given as a dict or sequence."""
    if isinstance(pi, dict):
        pi = [g.vertex_index(pi[v]) for v in g.vertices]
    return type1_from_vertex_map(g, [g.vertex_index(p) for p in pi])


def conjugation_by(g: Graph, a) -> Type2:
    """``(L - a^-1, a)``, i.e. ``x -> a^-1 x a``."""
    a = _letter(g, a)
    return make_type2(g, set(g.letters) - {a ^ 1}, a)


def sigma(g: Graph, a: int, b: int) -> Type1:
    """``a -> b^-1``, ``b -> a`` on letters of distinct vertices."""
    perm = list(range(2 * g.n))
    perm[a], perm[a ^ 1] = b ^ 1, b
    perm[b], perm[b ^ 1] = a, a ^ 1
    return make_type1(g, perm)


# action

def letter_table(g: Graph, aut) -> tuple:
    """Image word of every letter code under a single Whitehead generator."""
    cache = g.cache.setdefault("table", {})
    got = cache.get(aut)
    if got is not None:
        return got
    if isinstance(aut, Type1):
        got = tuple((c,) for c in aut.perm)
    elif isinstance(aut, Type2):
        rows = []
        a, A = aut.a, aut.A
        for c in range(0, 2 * g.n, 2):
            if c >> 1 == a >> 1:
                rows += [(c,), (c + 1,)]
                continue
            img = ((a ^ 1,) if c + 1 in A else ()) + (c,) + ((a,) if c in A else ())
            rows += [img, invert_word(img)]
        got = tuple(rows)
    elif isinstance(aut, Automorphism):
        rows = []
        for img in aut.images:
            rows += [img, invert_word(img)]
        got = tuple(rows)
    else:
        raise TypeError(f"not an automorphism: {aut!r}")
    cache[aut] = got
    return got


def _substitute(table, w):
    out = []
    for c in w:
        out.extend(table[c])
    return out


def apply_word(g: Graph, aut, w) -> tuple:
    if isinstance(aut, Factorization):
        for f in reversed(aut.factors):
            w = apply_word(g, f, w)
        return reduce_word(g, w)
    return reduce_word(g, _substitute(letter_table(g, aut), w))


def apply_cyclic(g: Graph, aut, w) -> tuple:
    if isinstance(aut, Factorization):
        w = reduce_cyclic(g, w)
        for f in reversed(aut.factors):
            w = apply_cyclic(g, f, w)
        return w
    return reduce_cyclic(g, _substitute(letter_table(g, aut), w))


def apply_tuple(g: Graph, aut, W) -> tuple:
    return tuple(apply_cyclic(g, aut, w) for w in W)


def apply(g: Graph, aut, w, cyclic: bool = False):
    """Act on a word, a cyclic word (``cyclic=True``) or a class tuple.

    A tuple whose entries are themselves tuples is read as a class tuple.
    """
    if w and isinstance(w[0], tuple):
        return apply_tuple(g, aut, w)
    return apply_cyclic(g, aut, w) if cyclic else apply_word(g, aut, w)


def images(g: Graph, aut) -> tuple:
    """Canonical generator images of a generator, factorization or map."""
    if isinstance(aut, Automorphism):
        return aut.images
    cache = g.cache.setdefault("images", {})
    got = cache.get(aut)
    if got is None:
        if isinstance(aut, Factorization):
            got = compose(g, aut).images
        else:
            got = tuple(reduce_word(g, letter_table(g, aut)[2 * i]) for i in range(g.n))
        cache[aut] = got
    return got


def compose(g: Graph, f) -> Automorphism:
    """The automorphism ``alpha_m o ... o alpha_1`` of a factorization."""
    if isinstance(f, Automorphism):
        return f
    if not isinstance(f, Factorization):
        return Automorphism(images(g, f))
    imgs = [(2 * i,) for i in range(g.n)]
    for aut in reversed(f.factors):
        table = letter_table(g, aut)
        imgs = [reduce_word(g, _substitute(table, w)) for w in imgs]
    return Automorphism(tuple(imgs))


def identity_automorphism(g: Graph) -> Automorphism:
    return Automorphism(tuple((2 * i,) for i in range(g.n)))


def is_identity(g: Graph, aut) -> bool:
    return images(g, aut) == identity_automorphism(g).images


def equal_auts(g: Graph, f1, f2) -> bool:
    return images(g, f1) == images(g, f2)


def invert(g: Graph, aut):
    if isinstance(aut, Type1):
        perm = [0] * len(aut.perm)
        for c, d in enumerate(aut.perm):
            perm[d] = c
        return Type1(tuple(perm))
    if isinstance(aut, Type2):
        return make_type2(g, (aut.A - {aut.a}) | {aut.a ^ 1}, aut.a ^ 1, check=False)
    if isinstance(aut, Factorization):
        return invert_factorization(g, aut)
    raise TypeError(f"cannot invert {aut!r}")


def invert_factorization(g: Graph, f: Factorization) -> Factorization:
    return Factorization(tuple(invert(g, a) for a in reversed(f.factors)))


def compose_type1(s: Type1, t: Type1) -> Type1:
    """``s o t`` as a permutation product (t acts first)."""
    return Type1(tuple(s.perm[c] for c in t.perm))


def image_set(aut: Type1, A) -> frozenset:
    return frozenset(aut.perm[c] for c in A)


# classification

def is_trivial(g: Graph, aut) -> bool:
    return is_identity(g, aut)


def in_long(g: Graph, aut) -> bool:
    if isinstance(aut, Type1):
        return True
    return not (aut.A & g.lkl(aut.a))


def in_short(g: Graph, aut) -> bool:
    if isinstance(aut, Type1):
        return is_identity(g, aut)
    return aut.A <= g.stl(aut.a)


def pure_type1_group(g: Graph) -> frozenset:
    """Closure of inversions and swaps ``sigma_{a,b}`` of dominance-equivalent
    vertices inside the finite type (1) group."""
    key = "pure_type1"
    if key in g.cache:
        return g.cache[key]
    gens = [inversion(g, i) for i in range(g.n)]
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if dominates(g, i, j) and dominates(g, j, i):
                gens.append(sigma(g, 2 * i, 2 * j))
    start = identity(g)
    seen = {start}
    todo = [start]
    while todo:
        s = todo.pop()
        for t in gens:
            u = compose_type1(t, s)
            if u not in seen:
                if len(seen) >= TYPE1_GROUP_CAP:
                    raise CapExceeded("type (1) subgroup closure too large")
                seen.add(u)
                todo.append(u)
    g.cache[key] = frozenset(seen)
    return g.cache[key]


def is_pure(g: Graph, aut) -> bool:
    if isinstance(aut, Type2):
        return True
    if isinstance(aut, Factorization):
        return all(is_pure(g, a) for a in aut.factors)
    return aut in pure_type1_group(g)


def classify(g: Graph, aut) -> dict:
    return {
        "type1": isinstance(aut, Type1),
        "long_range": in_long(g, aut),
        "short_range": in_short(g, aut),
        "pure": is_pure(g, aut),
    }


def split_ls(g: Graph, aut: Type2):
    """``(A, a) = s o l`` with ``s`` short-range and ``l`` long-range."""
    if not isinstance(aut, Type2):
        raise MalformedInput("split needs a type (2) generator")
    short = make_type2(g, aut.A & g.stl(aut.a), aut.a)
    long = make_type2(g, aut.A - g.lkl(aut.a), aut.a)
    return short, long


# enumeration

def type1_group(g: Graph) -> list:
    """All type (1) generators: graph symmetries times sign changes."""
    key = "type1_group"
    if key in g.cache:
        return g.cache[key]
    out = []
    for pi in graph_automorphisms(g):
        for signs in itertools.product((0, 1), repeat=g.n):
            out.append(type1_from_vertex_map(g, pi, signs))
    if len(out) > TYPE1_GROUP_CAP:
        raise CapExceeded("type (1) group too large")
    g.cache[key] = out
    return out


def type2_symbols(g: Graph, cap: int = OMEGA_LETTER_CAP) -> list:
    """Every normalized well-defined ``(A, a)``, multiplier-major order."""
    key = ("type2", cap)
    if key in g.cache:
        return g.cache[key]
    if 2 * g.n > cap:
        raise CapExceeded(f"enumeration of Whitehead automorphisms capped at |L| <= {cap}")
    out = []
    for a in g.letters:
        v = a >> 1
        choices = []
        for u in range(g.n):
            if u == v:
                continue
            opts = [(), (2 * u,), (2 * u + 1,)]
            if u not in g.lk[v]:
                opts.append((2 * u, 2 * u + 1))
            choices.append(opts)
        for pick in itertools.product(*choices):
            A = frozenset((a,) + tuple(c for p in pick for c in p))
            if check_well_defined(g, A, a)[0]:
                out.append(Type2(A, a))
    g.cache[key] = out
    return out


def enumerate_omega(g: Graph, filter: str = "all", cap: int = OMEGA_LETTER_CAP) -> list:
    """Whitehead generators, one per distinct automorphism, fixed order.

    ``filter`` is ``all``, ``long``, ``short`` or ``type1``. Type (1)
    elements come first, then type (2) by multiplier.
    """
    key = ("omega", filter, cap)
    if key in g.cache:
        return g.cache[key]
    if filter not in ("all", "long", "short", "type1"):
        raise MalformedInput(f"unknown filter {filter!r}")
    if 2 * g.n > cap:
        raise CapExceeded(f"enumeration of Whitehead automorphisms capped at |L| <= {cap}")
    cands = []
    if filter in ("all", "long", "type1"):
        cands += type1_group(g)
    if filter != "type1":
        for t in type2_symbols(g, cap):
            if filter == "long" and not in_long(g, t):
                continue
            if filter == "short" and not in_short(g, t):
                continue
            cands.append(t)
    seen = set()
    out = []
    for t in cands:
        im = images(g, t)
        if im not in seen:
            seen.add(im)
            out.append(t)
    g.cache[key] = out
    return out


# text formats

def aut_to_json(g: Graph, aut) -> dict:
    if isinstance(aut, Type1):
        return {"type": "type1",
                "map": {g.vertices[i]: g.letter_name(aut.perm[2 * i]) for i in range(g.n)}}
    if isinstance(aut, Type2):
        return {"type": "type2", "multiplier": g.letter_name(aut.a),
                "set": [g.letter_name(c) for c in sorted(aut.A)]}
    if isinstance(aut, Factorization):
        return {"factors": [aut_to_json(g, a) for a in aut.factors]}
    if isinstance(aut, Automorphism):
        return {"images": {g.vertices[i]: format_word(g, w) for i, w in enumerate(aut.images)}}
    raise TypeError(aut)


def aut_from_json(g: Graph, obj):
    if not isinstance(obj, dict):
        raise MalformedInput("automorphism must be a JSON object")
    if "factors" in obj:
        return Factorization(tuple(aut_from_json(g, o) for o in obj["factors"]))
    kind = obj.get("type")
    if kind == "type2":
        try:
            a = g.parse_letter(obj["multiplier"])
            A = {g.parse_letter(s) for s in obj["set"]}
        except KeyError as e:
            raise MalformedInput(f"type2 needs field {e}") from None
        return make_type2(g, A, a)
    if kind == "type1":
        mp = obj.get("map")
        if not isinstance(mp, dict):
            raise MalformedInput("type1 needs a map")
        perm = list(range(2 * g.n))
        for v, img in mp.items():
            i = g.vertex_index(v)
            c = g.parse_letter(img)
            perm[2 * i], perm[2 * i + 1] = c, c ^ 1
        return make_type1(g, perm)
    if "images" in obj:
        return Automorphism(tuple(reduce_word(g, parse_word(g, obj["images"][v])) for v in g.vertices))
    raise MalformedInput("unrecognised automorphism object")


def parse_aut(g: Graph, text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"bad JSON: {e}") from None
    return aut_from_json(g, obj)


def describe(g: Graph, aut) -> str:
    """Short human-readable form used in tables and logs."""
    if isinstance(aut, Type2):
        return f"({_set_str(g, aut.A)}, {g.letter_name(aut.a)})"
    if isinstance(aut, Type1):
        parts = [f"{g.vertices[i]}->{g.letter_name(aut.perm[2 * i])}"
                 for i in range(g.n) if aut.perm[2 * i] != 2 * i]
        return "perm[" + ", ".join(parts) + "]" if parts else "id"
    if isinstance(aut, Factorization):
        return " . ".join(describe(g, a) for a in aut.factors) or "id"
    if isinstance(aut, Automorphism):
        return "; ".join(f"{g.vertices[i]}->{format_word(g, w)}" for i, w in enumerate(aut.images))
    return repr(aut)
