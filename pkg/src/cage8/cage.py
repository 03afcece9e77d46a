"""Explicit (q+1, 8)-cages and the auxiliary q-regular girth-8 graphs.

All constructions generate adjacency from the line side.  The point-side
formula lives in :func:`gamma_point_neighborhood` and is only used to check
the line-side generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field, field_new
from .graph import INF, BipartiteGraph, InvalidVertex, Vertex, girth, vertex_id

__all__ = [
    "as_field",
    "moore_bound",
    "build_h",
    "build_b",
    "sigma_map",
    "side_swap",
    "duality_map",
    "build_gamma",
    "gamma_line_neighborhood",
    "gamma_point_neighborhood",
    "build_gamma_staged",
    "staged_graphs",
    "Stage",
]

POINT, LINE = 0, 1


def as_field(q) -> Field:
    return q if isinstance(q, Field) else field_new(q)


def moore_bound(k: int, g: int) -> int:
    """Distance-partition lower bound on the order of a k-regular graph of girth g."""
    if k < 2 or g < 3:
        raise ValueError("need k >= 2 and g >= 3")
    if g % 2:
        return 1 + sum(k * (k - 1) ** i for i in range((g - 3) // 2 + 1))
    return 2 * sum((k - 1) ** i for i in range(g // 2))


def _h_line(f: Field, a, b, c):
    # (x, ax + b, a^2 x + c)
    a2 = f.mul(a, a)
    return [Vertex(POINT, x, f.add(f.mul(a, x), b), f.add(f.mul(a2, x), c)) for x in range(f.q)]


def _b_line(f: Field, a, b, c):
    # (j, aj + b, a^2 j + 2ab + c)
    a2 = f.mul(a, a)
    shift = f.add(f.double(f.mul(a, b)), c)
    return [Vertex(POINT, j, f.add(f.mul(a, j), b), f.add(f.mul(a2, j), shift)) for j in range(f.q)]


def _affine_lines(f: Field):
    q = f.q
    return [(a, b, c) for a in range(q) for b in range(q) for c in range(q)]


def build_h(q) -> BipartiteGraph:
    f = as_field(q)
    return BipartiteGraph.from_neighbourhoods(
        f, {Vertex(LINE, a, b, c): _h_line(f, a, b, c) for a, b, c in _affine_lines(f)})


def build_b(q) -> BipartiteGraph:
    f = as_field(q)
    return BipartiteGraph.from_neighbourhoods(
        f, {Vertex(LINE, a, b, c): _b_line(f, a, b, c) for a, b, c in _affine_lines(f)})


def sigma_map(q):
    """Isomorphism B_q -> H_q: fixes points, sends line (a,b,c) to (a, b, 2ab + c)."""
    f = as_field(q)

    def sigma(v: Vertex) -> Vertex:
        if v.side == POINT:
            return v
        return Vertex(LINE, v.a, v.b, f.add(f.double(f.mul(v.a, v.b)), v.c))

    return sigma


def side_swap(v: Vertex) -> Vertex:
    """(a, b, c)_r -> (a, b, c)_{1-r}.  Not an automorphism of Gamma_q for any q."""
    return v.swap()


def duality_map(q):
    """Explicit side-swapping automorphism of Gamma_q for even q.

    Points go to lines and lines to points::

        (x, y, z)_0 -> (x, z, y^2)_1        (a, b, c)_1 -> (a^2, c, b^2)_0
        (q, a, c)_0 -> (q, c, a^2)_1        (q, b, c)_1 -> (q, c, b^2)_0
        (q, q, c)_0 -> (q, q, c)_1          (q, q, a)_1 -> (q, q, a^2)_0

    with (q, q, q) fixed on both sides.  Squaring is a bijection only in
    characteristic 2, hence the restriction.
    """
    f = as_field(q)
    if f.p != 2:
        raise ValueError(f"Gamma_q is self-dual only for even q, got q={f.q}")

    def sq(t):
        return t if t is INF else f.mul(t, t)

    def delta(v: Vertex) -> Vertex:
        side, a, b, c = v
        if side == POINT:
            if b is INF:
                return Vertex(LINE, INF, INF, c)
            return Vertex(LINE, a, c, sq(b))
        if b is INF:
            return Vertex(POINT, INF, INF, sq(c))
        return Vertex(POINT, sq(a), c, sq(b))

    return delta


def gamma_line_neighborhood(f: Field, line: Vertex) -> list[Vertex]:
    side, a, b, c = line
    if side != LINE:
        raise InvalidVertex(f"{line} is not a line")
    vertex_id(f.q, line)
    if b is INF:
        # (q, q, a)_1 -> (q, a, x)_0 for x in F, plus (q, q, q)_0; here a is stored in c
        return [Vertex(POINT, INF, c, x) for x in range(f.q)] + [Vertex(POINT, INF, INF, INF)]
    if a is INF:
        return [Vertex(POINT, c, b, x) for x in range(f.q)] + [Vertex(POINT, INF, INF, c)]
    return _b_line(f, a, b, c) + [Vertex(POINT, INF, a, c)]


def all_vertices(f: Field, side: int) -> list[Vertex]:
    q = f.q
    out = [Vertex(side, a, b, c) for a in list(range(q)) + [INF] for b in range(q) for c in range(q)]
    out += [Vertex(side, INF, INF, c) for c in list(range(q)) + [INF]]
    return out


def build_gamma(q) -> BipartiteGraph:
    """The (q+1)-regular girth-8 incidence graph on 2(q^3 + q^2 + q + 1) vertices."""
    f = as_field(q)
    return BipartiteGraph.from_neighbourhoods(
        f, {line: gamma_line_neighborhood(f, line) for line in all_vertices(f, LINE)})


def gamma_point_neighborhood(q, p: Vertex) -> list[Vertex]:
    """Neighbours of a point computed from the point-side closed form."""
    f = as_field(q)
    if not isinstance(p, Vertex) or p.side != POINT:
        raise InvalidVertex(f"{p!r} is not a point")
    vertex_id(f.q, p)
    _, x, y, z = p
    F = range(f.q)
    if y is INF:
        if z is INF:
            return [Vertex(LINE, INF, INF, t) for t in list(F) + [INF]]
        return [Vertex(LINE, INF, a, z) for a in F] + [Vertex(LINE, INF, INF, INF)]
    if x is INF:
        return [Vertex(LINE, y, a, z) for a in F] + [Vertex(LINE, INF, INF, y)]
    out = []
    for a in F:
        second = f.sub(y, f.mul(a, x))
        third = f.add(f.sub(f.mul(f.mul(a, a), x), f.double(f.mul(a, y))), z)
        out.append(Vertex(LINE, a, second, third))
    out.append(Vertex(LINE, INF, y, x))
    return out


@dataclass(frozen=True)
class Stage:
    name: str
    order: int
    added: int
    girth: float


def staged_graphs(q) -> list[tuple[str, BipartiteGraph]]:
    """B_q, then the three augmentations and the final apex point, in order."""
    f = as_field(q)
    F = range(f.q)
    edges: dict[Vertex, list[Vertex]] = {
        Vertex(LINE, a, b, c): _b_line(f, a, b, c) for a, b, c in _affine_lines(f)}
    out = [("B", BipartiteGraph.from_neighbourhoods(f, edges))]

    # q^2 new lines (q, b, c)_1 joined to (c, b, j)_0
    for b in F:
        for c in F:
            edges[Vertex(LINE, INF, b, c)] = [Vertex(POINT, c, b, j) for j in F]
    out.append(("B'", BipartiteGraph.from_neighbourhoods(f, edges)))

    # q^2 + q new points (q, a, c)_0, a in F or q, joined to (a, t, c)_1
    for a in list(F) + [INF]:
        for c in F:
            if a is INF:
                edges[Vertex(POINT, INF, INF, c)] = [Vertex(LINE, INF, t, c) for t in F]
            else:
                edges[Vertex(POINT, INF, a, c)] = [Vertex(LINE, a, t, c) for t in F]
    out.append(("B''", BipartiteGraph.from_neighbourhoods(f, edges)))

    # q + 1 new lines (q, q, a)_1 joined to (q, a, c)_0
    for a in list(F) + [INF]:
        edges[Vertex(LINE, INF, INF, a)] = [
            Vertex(POINT, INF, INF, c) if a is INF else Vertex(POINT, INF, a, c) for c in F]
    out.append(("B'''", BipartiteGraph.from_neighbourhoods(f, edges)))

    edges[Vertex(POINT, INF, INF, INF)] = [Vertex(LINE, INF, INF, i) for i in list(F) + [INF]]
    out.append(("Gamma", BipartiteGraph.from_neighbourhoods(f, edges)))
    return out


def build_gamma_staged(q, check_girth: bool = True) -> tuple[BipartiteGraph, list[Stage]]:
    """Rebuild Gamma_q stage by stage, recording order and girth of each stage."""
    stages, prev = [], 0
    graphs = staged_graphs(q)
    for name, g in graphs:
        stages.append(Stage(name, g.order, g.order - prev, girth(g) if check_girth else None))
        prev = g.order
    return graphs[-1][1], stages
