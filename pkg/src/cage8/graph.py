"""Bipartite graph container and exact BFS metrics.

Vertices of the cage family are coordinate triples tagged with a side
(0 = point, 1 = line).  A coordinate is a field index in ``range(q)`` or the
sentinel :data:`INF`.  The dense id layout is side-major and coordinate-lex::

    id(a, b, c)     = ord(a) * q**2 + ord(b) * q + ord(c)     a in F or INF; b, c in F
    id(INF, INF, c) = (q + 1) * q**2 + ord(c)                  c in F or INF
    global id       = side * (q**3 + q**2 + q + 1) + id

where ``ord(INF) == q``.  A :class:`BipartiteGraph` stores its vertices in
ascending global-id order, so every graph built here (and every induced
subgraph) gets dense ids ``0..N-1`` that agree with that order.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .field import Field

__all__ = [
    "INF",
    "Infinite",
    "Vertex",
    "BipartiteGraph",
    "GraphError",
    "VertexNotFound",
    "InvalidVertex",
    "MissingContext",
    "MapNotTotal",
    "MapNotInjective",
    "side_size",
    "vertex_id",
    "vertex_from_id",
    "degree_profile",
    "ball",
    "distance",
    "girth",
    "is_perfect_dominating",
    "remove_set",
    "is_isomorphism_via",
]


class _Infinity:
    """Coordinate sentinel written ``inf`` in exports; orders after every field index."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

# Distances and girths that do not exist (disconnected pairs, forests).
Infinite = float("inf")


class GraphError(Exception):
    pass


class VertexNotFound(GraphError, KeyError):
    pass


class InvalidVertex(GraphError, ValueError):
    pass


class MissingContext(GraphError):
    pass


class MapNotTotal(GraphError):
    pass


class MapNotInjective(GraphError):
    pass


class Vertex(NamedTuple):
    side: int
    a: object
    b: object
    c: object

    def __str__(self):
        return f"{self.side}:({self.a},{self.b},{self.c})"

    def swap(self) -> "Vertex":
        return Vertex(1 - self.side, self.a, self.b, self.c)


def _ord(x, q: int) -> int:
    return q if x is INF else x


def side_size(q: int) -> int:
    return q**3 + q**2 + q + 1


def vertex_id(q: int, v: Vertex) -> int:
    """Global id of a coordinate vertex; raises InvalidVertex on illegal shapes."""
    side, a, b, c = v
    if side not in (0, 1):
        raise InvalidVertex(f"bad side in {v}")
    for x in (a, b, c):
        if x is not INF and not (isinstance(x, int) and 0 <= x < q):
            raise InvalidVertex(f"coordinate {x!r} out of range in {v}")
    if b is INF:
        if a is not INF:
            raise InvalidVertex(f"illegal shape {v}")
        local = (q + 1) * q * q + _ord(c, q)
    else:
        if c is INF:
            raise InvalidVertex(f"illegal shape {v}")
        local = _ord(a, q) * q * q + b * q + c
    return side * side_size(q) + local


def vertex_from_id(q: int, gid: int) -> Vertex:
    n = side_size(q)
    if not 0 <= gid < 2 * n:
        raise InvalidVertex(f"id {gid} out of range for q={q}")
    side, local = divmod(gid, n)
    if local >= (q + 1) * q * q:
        c = local - (q + 1) * q * q
        return Vertex(side, INF, INF, INF if c == q else c)
    a, rest = divmod(local, q * q)
    b, c = divmod(rest, q)
    return Vertex(side, INF if a == q else a, b, c)


class BipartiteGraph:
    """Immutable simple bipartite graph on dense ids ``0..N-1``.

    ``adj[i]`` is the sorted tuple of neighbours of vertex ``i`` and
    ``sides[i]`` its side.  ``labels`` optionally carries a :class:`Vertex`
    per id; ``origin`` records, for induced subgraphs, the id each vertex had
    in the graph it was cut from.  ``field`` is None for graphs read from
    files.
    """

    __slots__ = ("adj", "sides", "labels", "origin", "field", "_index", "_ids")

    def __init__(self, adj: Sequence[Iterable[int]], sides: Sequence[int], labels=None,
                 field: Field | None = None, origin=None, ids=None, check: bool = True):
        self.adj = tuple(tuple(sorted(nb)) for nb in adj)
        self.sides = tuple(sides)
        self.labels = tuple(labels) if labels is not None else None
        self.origin = tuple(origin) if origin is not None else None
        self.field = field
        self._index = None
        self._ids = tuple(ids) if ids is not None else None
        if check:
            self._validate()

    @property
    def ids(self) -> tuple[int, ...]:
        """Export ids: global coordinate ids when known, else dense ids."""
        if self._ids is None:
            if self.labels is not None and self.field is not None:
                q = self.field.q
                self._ids = tuple(vertex_id(q, v) for v in self.labels)
            else:
                self._ids = tuple(range(len(self.adj)))
        return self._ids

    def _validate(self):
        n = len(self.adj)
        if len(self.sides) != n or (self.labels is not None and len(self.labels) != n):
            raise GraphError("adjacency, sides and labels disagree in length")
        if self._ids is not None and (len(self._ids) != n or list(self._ids) != sorted(set(self._ids))):
            raise GraphError("export ids must be strictly increasing, one per vertex")
        for u, nb in enumerate(self.adj):
            for i, w in enumerate(nb):
                if not 0 <= w < n or w == u:
                    raise GraphError(f"bad neighbour {w} of {u}")
                if i and nb[i - 1] == w:
                    raise GraphError(f"parallel edge {u}-{w}")
                if self.sides[w] == self.sides[u]:
                    raise GraphError(f"edge {u}-{w} does not cross sides")
        for u, nb in enumerate(self.adj):
            for w in nb:
                if not _contains_sorted(self.adj[w], u):
                    raise GraphError(f"asymmetric edge {u}-{w}")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_neighbourhoods(cls, field: Field, nbhd: Mapping[Vertex, Iterable[Vertex]]) -> "BipartiteGraph":
        """Build from a map line/point -> neighbour vertices (one side suffices).

        The vertex set is every key plus every vertex mentioned as a
        neighbour; ids follow the global coordinate order.
        """
        q = field.q
        verts = set(nbhd)
        for nb in nbhd.values():
            verts.update(nb)
        order = sorted(verts, key=lambda v: vertex_id(q, v))
        index = {v: i for i, v in enumerate(order)}
        adj = [set() for _ in order]
        for v, nb in nbhd.items():
            i = index[v]
            for w in nb:
                j = index[w]
                if j in adj[i]:
                    raise GraphError(f"parallel edge {v}-{w}")
                adj[i].add(j)
                adj[j].add(i)
        return cls(adj, [v.side for v in order], labels=order, field=field)

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return len(self.adj)

    @property
    def order(self) -> int:
        return len(self.adj)

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, nb in enumerate(self.adj) for w in nb if u < w]

    def degree(self, v) -> int:
        return len(self.adj[self.index_of(v)])

    def neighbours(self, v) -> tuple[int, ...]:
        return self.adj[self.index_of(v)]

    def index_of(self, v) -> int:
        """Dense id for a Vertex label or an int id."""
        if isinstance(v, Vertex):
            if self.labels is None:
                raise MissingContext("graph carries no coordinate labels")
            if self._index is None:
                self._index = {lab: i for i, lab in enumerate(self.labels)}
            try:
                return self._index[v]
            except KeyError:
                raise VertexNotFound(v) from None
        if isinstance(v, int) and 0 <= v < len(self.adj):
            return v
        raise VertexNotFound(v)

    def index_of_id(self, gid: int) -> int:
        """Dense id of the vertex whose export id is ``gid``."""
        ids = self.ids
        lo, hi = 0, len(ids)
        while lo < hi:
            mid = (lo + hi) // 2
            if ids[mid] < gid:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(ids) or ids[lo] != gid:
            raise VertexNotFound(gid)
        return lo

    def __contains__(self, v):
        try:
            self.index_of(v)
        except (VertexNotFound, MissingContext):
            return False
        return True

    def label(self, i: int):
        return self.labels[i] if self.labels is not None else i

    def vertex_set(self, vs: Iterable) -> list[int]:
        """Sorted duplicate-free dense ids for a collection of Vertex labels or ids."""
        return sorted({self.index_of(v) for v in vs})

    def __eq__(self, other):
        return (isinstance(other, BipartiteGraph) and self.adj == other.adj
                and self.sides == other.sides and self.labels == other.labels
                and self.ids == other.ids)

    def __hash__(self):
        return hash((self.adj, self.sides))

    def __repr__(self):
        return f"BipartiteGraph(order={self.order}, edges={self.num_edges()})"

    # -- structure --------------------------------------------------------

    def is_bipartite(self) -> bool:
        """Proper 2-colouring exists (checked by BFS, independent of ``sides``)."""
        colour = [-1] * len(self.adj)
        for s in range(len(self.adj)):
            if colour[s] != -1:
                continue
            colour[s] = 0
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for w in self.adj[u]:
                    if colour[w] == -1:
                        colour[w] = 1 - colour[u]
                        dq.append(w)
                    elif colour[w] == colour[u]:
                        return False
        return True

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.adj)
        comps = []
        for s in range(len(self.adj)):
            if seen[s]:
                continue
            seen[s] = True
            comp, dq = [s], deque([s])
            while dq:
                u = dq.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        dq.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.adj) == 0 or len(self.components()) == 1

    def distances_from(self, v, limit: int | None = None) -> dict[int, int]:
        s = self.index_of(v)
        dist = {s: 0}
        dq = deque([s])
        adj = self.adj
        while dq:
            u = dq.popleft()
            d = dist[u]
            if limit is not None and d >= limit:
                continue
            for w in adj[u]:
                if w not in dist:
                    dist[w] = d + 1
                    dq.append(w)
        return dist

    def induced(self, keep: Iterable[int]) -> "BipartiteGraph":
        keep = sorted(set(keep))
        new = {old: i for i, old in enumerate(keep)}
        adj = [[new[w] for w in self.adj[old] if w in new] for old in keep]
        labels = [self.labels[o] for o in keep] if self.labels is not None else None
        origin = [self.origin[o] if self.origin is not None else o for o in keep]
        ids = [self.ids[o] for o in keep]
        return BipartiteGraph(adj, [self.sides[o] for o in keep], labels=labels,
                              field=self.field, origin=origin, ids=ids, check=False)


def _contains_sorted(seq: Sequence[int], x: int) -> bool:
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(seq) and seq[lo] == x


def degree_profile(g: BipartiteGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(nb) for nb in g.adj).items()))


def ball(g: BipartiteGraph, u, t: int, closed: bool = True) -> list[int]:
    """Vertices at distance exactly ``t`` (open) or at most ``t`` (closed) from u."""
    if t < 0:
        raise ValueError("radius must be non-negative")
    dist = g.distances_from(u, limit=t)
    if closed:
        return sorted(dist)
    return sorted(v for v, d in dist.items() if d == t)


def set_ball(g: BipartiteGraph, us: Iterable, t: int = 1, closed: bool = True) -> list[int]:
    """Union of balls around every vertex of ``us`` (N[S] for t=1, closed)."""
    out = set()
    for u in us:
        out.update(ball(g, u, t, closed))
    return sorted(out)


def distance(g: BipartiteGraph, u, v):
    target = g.index_of(v)
    return g.distances_from(u).get(target, Infinite)


def girth(g: BipartiteGraph):
    """Exact girth: BFS from every root, minimum cycle closed by a non-tree edge.

    A non-tree edge (u, w) met from root r closes a walk of length
    d(u) + d(w) + 1 containing a cycle; over all roots the minimum is the
    girth.  Each BFS stops once it cannot beat the current best.
    """
    adj = g.adj
    n = len(adj)
    best = Infinite
    dist = [-1] * n
    parent = [-1] * n
    for r in range(n):
        touched = [r]
        dist[r] = 0
        parent[r] = -1
        dq = deque([r])
        while dq:
            u = dq.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    touched.append(w)
                    dq.append(w)
                elif w != parent[u]:
                    cyc = du + dist[w] + 1
                    if cyc < best:
                        best = cyc
        for v in touched:
            dist[v] = -1
        if best == 3:
            break
    return best if best == Infinite else int(best)


def is_perfect_dominating(g: BipartiteGraph, u: Iterable) -> bool:
    """Every vertex outside ``u`` has exactly one neighbour inside it."""
    inside = [False] * g.order
    for v in u:
        inside[g.index_of(v)] = True
    for x, nb in enumerate(g.adj):
        if not inside[x] and sum(inside[w] for w in nb) != 1:
            return False
    return True


def remove_set(g: BipartiteGraph, u: Iterable) -> BipartiteGraph:
    """Induced subgraph on V(g) minus ``u``; survivors keep relative id order."""
    drop = {g.index_of(v) for v in u}
    return g.induced(i for i in range(g.order) if i not in drop)


def is_isomorphism_via(g1: BipartiteGraph, g2: BipartiteGraph, f) -> bool:
    """Check that the explicit map ``f`` is an isomorphism g1 -> g2.

    ``f`` is a mapping or callable from g1 vertices to g2 vertices; keys and
    values may be dense ids or Vertex labels.  Callables are applied to the
    label of each g1 vertex when g1 has labels, else to its id.
    """
    image = []
    for i in range(g1.order):
        src = g1.label(i)
        try:
            if callable(f) and not isinstance(f, Mapping):
                tgt = f(src)
            elif src in f:
                tgt = f[src]
            else:
                tgt = f[i]
        except (KeyError, IndexError):
            raise MapNotTotal(f"map undefined at {src}") from None
        try:
            image.append(g2.index_of(tgt))
        except (VertexNotFound, MissingContext):
            raise MapNotTotal(f"image {tgt!r} of {src} is not a vertex of the target") from None
    if len(set(image)) != len(image):
        raise MapNotInjective("two vertices share an image")
    if g1.order != g2.order or g1.num_edges() != g2.num_edges():
        return False
    for u, nb in enumerate(g1.adj):
        fu = image[u]
        target = g2.adj[fu]
        if len(target) != len(nb):
            return False
        for w in nb:
            if not _contains_sorted(target, image[w]):
                return False
    return True
