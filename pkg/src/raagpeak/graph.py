"""The defining graph and its purely combinatorial queries.

Vertices are opaque names; internally everything is indexed by position
in the declared vertex order. Letters are integer codes (see
``_kernels``): ``2*i`` is vertex ``i`` and ``2*i + 1`` its inverse.
"""

from __future__ import annotations

import numpy as np

from .errors import CapExceeded, MalformedInput

AUTOMORPHISM_CAP = 9


def inv(c: int) -> int:
    return c ^ 1


def vtx(c: int) -> int:
    return c >> 1


class Graph:
    """A finite simple graph with a fixed vertex order.

    Treated as immutable. Equality and hashing use the vertex sequence and
    edge set, so graphs can key caches.
    """

    def __init__(self, vertices, edges=()):
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise MalformedInput("vertex names must be unique")
        for v in vertices:
            if not v or "^" in v or any(ch.isspace() for ch in v):
                raise MalformedInput(f"bad vertex name {v!r}")
        index = {v: i for i, v in enumerate(vertices)}
        edge_set = set()
        for e in edges:
            u, w = e
            if u not in index or w not in index:
                raise MalformedInput(f"edge {u}-{w} uses an undeclared vertex")
            if u == w:
                raise MalformedInput(f"loop at {u}")
            key = frozenset((u, w))
            if key in edge_set:
                raise MalformedInput(f"duplicate edge {u}-{w}")
            edge_set.add(key)
        self.vertices = vertices
        self.n = len(vertices)
        self.index = index
        self.edges = frozenset(edge_set)
        adj = np.zeros((self.n, self.n), dtype=np.bool_)
        for e in self.edges:
            u, w = (index[x] for x in e)
            adj[u, w] = adj[w, u] = True
        self.adj = adj
        self.lk = tuple(frozenset(int(j) for j in np.flatnonzero(adj[i])) for i in range(self.n))
        self.st = tuple(self.lk[i] | {i} for i in range(self.n))
        self.cache = {}

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.vertices, self.edges) == (other.vertices, other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = sorted(tuple(sorted(e, key=self.index.get)) for e in self.edges)
        return f"Graph({list(self.vertices)}, {es})"

    # letters
    @property
    def letters(self) -> range:
        return range(2 * self.n)

    def lkl(self, a: int) -> frozenset:
        """Letters of the link of the vertex of ``a``."""
        key = ("lkl", a >> 1)
        got = self.cache.get(key)
        if got is None:
            got = frozenset(c for j in self.lk[a >> 1] for c in (2 * j, 2 * j + 1))
            self.cache[key] = got
        return got

    def stl(self, a: int) -> frozenset:
        v = a >> 1
        return self.lkl(a) | {2 * v, 2 * v + 1}

    def commute(self, x: int, y: int) -> bool:
        return bool(self.adj[x >> 1, y >> 1])

    def letter_name(self, c: int) -> str:
        name = self.vertices[c >> 1]
        return name + "^-1" if c & 1 else name

    def parse_letter(self, s: str) -> int:
        neg = s.endswith("^-1")
        name = s[:-3] if neg else s
        if name not in self.index:
            raise MalformedInput(f"unknown letter {s!r}")
        return 2 * self.index[name] + (1 if neg else 0)

    def vertex_index(self, v) -> int:
        if isinstance(v, int):
            return v
        if v not in self.index:
            raise MalformedInput(f"unknown vertex {v!r}")
        return self.index[v]

    def names(self, idx) -> list:
        """Vertex names for a set of indices, sorted lexicographically."""
        return sorted(self.vertices[i] for i in idx)

    def induced(self, keep) -> "Graph":
        keep = [v for v in self.vertices if v in set(keep)]
        es = [tuple(e) for e in self.edges if e <= set(keep)]
        return Graph(keep, es)


def parse_graph(text: str) -> Graph:
    """Parse ``vertices: ...`` followed by ``edge: u v`` lines."""
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        head = head.strip()
        parts = rest.split()
        if head == "vertices":
            if vertices is not None:
                raise MalformedInput(f"line {lineno}: second vertices line")
            vertices = parts
        elif head == "edge":
            if vertices is None:
                raise MalformedInput(f"line {lineno}: edge before vertices line")
            if len(parts) != 2:
                raise MalformedInput(f"line {lineno}: an edge needs two vertices")
            edges.append((parts[0], parts[1]))
        else:
            raise MalformedInput(f"line {lineno}: unrecognised line {raw!r}")
    if vertices is None:
        raise MalformedInput("missing vertices line")
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    es = sorted(tuple(sorted(e, key=g.index.get)) for e in g.edges)
    es.sort(key=lambda e: (g.index[e[0]], g.index[e[1]]))
    lines += [f"edge: {u} {w}" for u, w in es]
    return "\n".join(lines) + "\n"


def edgeless(n: int, names=None) -> Graph:
    names = names or [f"x{i}" for i in range(n)]
    return Graph(names)


def path(names) -> Graph:
    return Graph(names, list(zip(names, names[1:])))


def complete(names) -> Graph:
    return Graph(names, [(u, w) for i, u in enumerate(names) for w in names[i + 1:]])


def link(g: Graph, v) -> frozenset:
    return frozenset(g.vertices[j] for j in g.lk[g.vertex_index(v)])


def star(g: Graph, v) -> frozenset:
    return frozenset(g.vertices[j] for j in g.st[g.vertex_index(v)])


def components_without_star(g: Graph, v) -> list:
    """Connected components of the graph with the star of ``v`` removed.

    Returned as frozensets of vertex indices, ordered by smallest member.
    """
    removed = g.st[g.vertex_index(v)]
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.lk[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def dominates(g: Graph, x, y) -> bool:
    """x >= y iff lk(y) is contained in st(x)."""
    x, y = g.vertex_index(x), g.vertex_index(y)
    return g.lk[y] <= g.st[x]


def dom_classes(g: Graph, kind: str = "full") -> list:
    """Equivalence classes of mutual domination, as sorted index tuples.

    ``kind`` restricts to adjacent or non-adjacent pairs.
    """
    if kind not in ("full", "adjacent", "nonadjacent"):
        raise MalformedInput(f"unknown domination kind {kind!r}")
    parent = list(range(g.n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not (dominates(g, i, j) and dominates(g, j, i)):
                continue
            if kind == "adjacent" and not g.adj[i, j]:
                continue
            if kind == "nonadjacent" and g.adj[i, j]:
                continue
            parent[find(i)] = find(j)
    groups = {}
    for i in range(g.n):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(c) for c in groups.values())


def graph_automorphisms(g: Graph, cap: int = AUTOMORPHISM_CAP) -> list:
    """All adjacency-preserving vertex permutations, as index tuples.

    Backtracking over partial maps; identity comes first and the list is
    in lexicographic order.
    """
    key = ("auts", cap)
    if key in g.cache:
        return g.cache[key]
    if g.n > cap:
        raise CapExceeded(f"graph automorphisms capped at {cap} vertices")
    degree = [len(g.lk[i]) for i in range(g.n)]
    out = []
    image = [-1] * g.n
    used = [False] * g.n

    def extend(i):
        if i == g.n:
            out.append(tuple(image))
            return
        for t in range(g.n):
            if used[t] or degree[t] != degree[i]:
                continue
            if any(g.adj[i, j] != g.adj[t, image[j]] for j in range(i)):
                continue
            image[i] = t
            used[t] = True
            extend(i + 1)
            used[t] = False
        image[i] = -1

    extend(0)
    g.cache[key] = out
    return out


def center_vertices(g: Graph) -> frozenset:
    """Vertices lying in every star (they generate the centre)."""
    return frozenset(g.vertices[i] for i in range(g.n) if all(i in g.st[j] for j in range(g.n)))
