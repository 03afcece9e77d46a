"""Perfect dominating sets of Gamma_q and the graphs left after removing them.

Every removal set is assembled literally from balls, unions and
intersections computed by BFS in the relevant graph.  Where a closed-form
description of a piece is known, it is checked against the BFS result and a
mismatch raises :class:`PdsViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from functools import reduce

from .cage import as_field, build_gamma
from .field import Field
from .graph import (
    INF, BipartiteGraph, Vertex, ball, distance, is_perfect_dominating, remove_set, set_ball,
    degree_profile, girth, vertex_id,
)

__all__ = [
    "PdsError",
    "BadDistance",
    "BadXi",
    "BadQ",
    "PdsViolation",
    "DerivedSpec",
    "FAMILIES",
    "pds_a",
    "pds_b",
    "pds_c",
    "pds_c_prime",
    "build_gq",
    "build_set_s",
    "build_q_minus_1",
    "derive",
    "default_alpha_beta",
    "default_xi_gq",
]

P_, L_ = 0, 1
FAMILIES = ("A", "B", "C", "Cprime", "S")


class PdsError(ValueError):
    pass


class BadDistance(PdsError):
    pass


class BadXi(PdsError):
    pass


class BadQ(PdsError):
    pass


class PdsViolation(AssertionError):
    pass


def _closed(g, v, t):
    return set(ball(g, v, t, closed=True))


def _intersect(sets):
    return reduce(lambda a, b: a & b, sets)


def _expect(got, want, what):
    if set(got) != set(want):
        raise PdsViolation(f"{what}: BFS set disagrees with closed form")


def _xi_index(f: Field, xi) -> int:
    xi = int(xi)
    if not 0 <= xi < f.q:
        raise BadXi(f"xi={xi} is not an element of GF({f.q})")
    return xi


# -- A ----------------------------------------------------------------------

def default_alpha_beta(g: BipartiteGraph):
    alpha = g.index_of(Vertex(P_, INF, INF, INF))
    beta = ball(g, alpha, 3, closed=False)[0]
    return alpha, beta


def pds_a(q, alpha=None, beta=None, gamma: BipartiteGraph | None = None) -> list[int]:
    """Union of the radius-2 balls around two vertices at distance 3."""
    g = gamma if gamma is not None else build_gamma(q)
    d_alpha, d_beta = default_alpha_beta(g)
    alpha = d_alpha if alpha is None else g.index_of(alpha)
    if beta is None:
        beta = d_beta if alpha == d_alpha else ball(g, alpha, 3, closed=False)[0]
    beta = g.index_of(beta)
    d = distance(g, alpha, beta)
    if d != 3:
        raise BadDistance(f"alpha and beta are at distance {d}, need 3")
    return sorted(_closed(g, alpha, 2) | _closed(g, beta, 2))


# -- B ----------------------------------------------------------------------

def pds_b(q, xi=1, gamma: BipartiteGraph | None = None) -> list[int]:
    f = as_field(q)
    g = gamma if gamma is not None else build_gamma(f)
    xi = _xi_index(f, xi)
    if xi == 0:
        raise BadXi("xi must be non-zero")
    F = range(f.q)
    V = g.index_of
    lines_inf0 = [V(Vertex(L_, INF, 0, c)) for c in F]
    apex0 = V(Vertex(L_, INF, INF, 0))

    part1 = set(set_ball(g, lines_inf0 + [apex0], 1))
    big_cap = _intersect([_closed(g, v, 2) for v in lines_inf0 + [apex0]])
    ball_xi = _closed(g, V(Vertex(L_, INF, INF, xi)), 2)

    _expect(big_cap, [V(Vertex(L_, INF, INF, INF))] + [V(Vertex(L_, 0, 0, c)) for c in F],
            "intersection of radius-2 balls")
    around_xi = set(set_ball(g, [V(Vertex(P_, INF, xi, j)) for j in F] + [V(Vertex(P_, INF, INF, INF))], 1))
    _expect(ball_xi, around_xi, "radius-2 ball around (q,q,xi)_1")
    head = part1 | {V(Vertex(L_, 0, 0, c)) for c in F}
    _expect(head & ball_xi, [V(Vertex(P_, INF, INF, INF)), apex0], "overlap of F with the xi ball")

    return sorted(part1 | big_cap | ball_xi)


# -- C and C' -----------------------------------------------------------------

def _p(f: Field, x: int) -> int:
    # 1 + x + x^2
    return f.add(1, f.add(x, f.mul(x, x)))


def _r1(g: BipartiteGraph, f: Field) -> tuple[set, set]:
    """Line-side half shared by C and C'; returns (R_1, its intersection part)."""
    V = g.index_of
    F = range(f.q)
    centres = [V(Vertex(L_, x, x, _p(f, x))) for x in F] + [V(Vertex(L_, INF, 1, 1))]
    cap = _intersect([_closed(g, v, 2) for v in centres])
    return set(set_ball(g, centres, 1)) | cap, cap


def pds_c(q, gamma: BipartiteGraph | None = None) -> list[int]:
    f = as_field(q)
    if f.p != 2 or f.q < 8:
        raise BadQ(f"set C needs q even and at least 8, got q={f.q}")
    g = gamma if gamma is not None else build_gamma(f)
    V = g.index_of
    F = range(f.q)

    pts = [V(Vertex(P_, INF, x, 0)) for x in F] + [V(Vertex(P_, INF, INF, 0))]
    cap0 = _intersect([_closed(g, v, 2) for v in pts])
    _expect(cap0, [V(Vertex(P_, 0, y, 0)) for y in F] + [V(Vertex(P_, INF, INF, INF))],
            "intersection around (q,x,0)_0")
    r0 = set(set_ball(g, pts, 1)) | cap0

    r1, cap1 = _r1(g, f)
    _expect(cap1, [V(Vertex(L_, x, f.add(1, x), _p(f, x))) for x in F] + [V(Vertex(L_, INF, 0, 1))],
            "intersection around (x,x,p(x))_1")
    size = (f.q + 1) ** 2 + 2 * (f.q + 1)
    if len(r0) != size or len(r1) != size:
        raise PdsViolation(f"|R_0|={len(r0)}, |R_1|={len(r1)}, expected {size}")
    return sorted(r0 | r1)


def pds_c_prime(gamma: BipartiteGraph | None = None, xi: int = 2) -> list[int]:
    """The q = 4 analogue of C, with xi outside {0, 1}."""
    f = as_field(4)
    if xi in (0, 1):
        raise BadXi("xi must lie outside {0, 1}")
    g = gamma if gamma is not None else build_gamma(f)
    V = g.index_of
    F = range(f.q)

    # q + 1 centres, as in the other families: (q, x, xi)_0 for x in F and (q, q, 0)_0.
    # The intersection is of radius-2 balls around exactly these centres.
    centres = [V(Vertex(P_, INF, x, xi)) for x in F] + [V(Vertex(P_, INF, INF, 0))]
    cap0 = _intersect([_closed(g, v, 2) for v in centres])
    r0 = set(set_ball(g, centres, 1)) | cap0
    r1, _ = _r1(g, f)
    return sorted(r0 | r1)


# -- G_q, S and the (q-1)-regular graph ---------------------------------------

def default_xi_gq(q) -> int:
    """-1 for odd q (keeps y = -1 out of P, where 1 - y^2 vanishes); index 2 for even q."""
    f = as_field(q)
    return 2 if f.p == 2 else f.neg(1)


def _check_gq_args(f: Field, xi):
    if f.q < 4:
        raise BadQ(f"G_q needs q >= 4, got q={f.q}")
    xi = default_xi_gq(f) if xi is None else _xi_index(f, xi)
    if xi in (0, 1):
        raise BadXi("xi must lie outside {0, 1}")
    return xi


def build_gq(q, xi=None) -> BipartiteGraph:
    """Gamma_q minus the set B built with xi outside {0, 1}."""
    f = as_field(q)
    xi = _check_gq_args(f, xi)
    g = build_gamma(f)
    return remove_set(g, pds_b(f, xi, gamma=g))


@dataclass
class SetS:
    gq: BipartiteGraph
    xi: int
    P: list[int]
    R: list[int]
    S: list[int]


def build_set_s(q, xi=None, gq: BipartiteGraph | None = None) -> SetS:
    """Sets P, R and S of G_q; ids are dense ids of G_q."""
    f = as_field(q)
    xi = _check_gq_args(f, xi)
    g = gq if gq is not None else build_gq(f, xi)
    V = g.index_of
    F = range(f.q)
    P = sorted(V(Vertex(P_, INF, y, z)) for y in F if y not in (0, 1, xi) for z in F)
    root = V(Vertex(P_, INF, 1, 0))
    far = set(ball(g, root, 5, closed=False))
    R = sorted(set(set_ball(g, P, 1, closed=False)) & far)
    S = set(set_ball(g, [V(Vertex(P_, INF, 1, z)) for z in F], 1)) | set(set_ball(g, R, 1))
    return SetS(g, xi, P, R, sorted(S))


def build_q_minus_1(q, xi=None) -> BipartiteGraph:
    s = build_set_s(q, xi)
    return remove_set(s.gq, s.S)


# -- dispatcher -----------------------------------------------------------------

@dataclass
class DerivedSpec:
    family: str | None
    q: int
    xi: int | None = None
    alpha: int | None = None
    beta: int | None = None
    expected_removed: int = 0
    expected_order: int = 0
    expected_degree: int = 0

    def to_dict(self):
        return asdict(self)


def gamma_order(q: int) -> int:
    return 2 * (q**3 + q**2 + q + 1)


def derive(q, family: str, xi=None, alpha=None, beta=None, with_set=False):
    """Build the base graph, cut out one perfect dominating set, verify, return.

    Returns ``(graph, spec)``, or ``(graph, spec, removal, base)`` with ``with_set``.
    """
    f = as_field(q)
    q = f.q
    if family not in FAMILIES:
        raise PdsError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "S":
        s = build_set_s(f, xi)
        base, removal = s.gq, s.S
        spec = DerivedSpec("S", q, xi=s.xi, expected_removed=4 * q * q - 6 * q,
                           expected_order=2 * q * (q - 1) ** 2, expected_degree=q - 1)
    else:
        if family == "C" and (f.p != 2 or q < 8):
            raise BadQ(f"set C needs q even and at least 8, got q={q}")
        if family == "Cprime" and q != 4:
            raise BadQ(f"set C' exists only for q = 4, got q={q}")
        base = build_gamma(f)
        spec = DerivedSpec(family, q, expected_degree=q)
        if family == "A":
            d_alpha, _ = default_alpha_beta(base)
            a = d_alpha if alpha is None else base.index_of(alpha)
            b = beta if beta is not None else ball(base, a, 3, closed=False)[0]
            removal = pds_a(f, a, b, gamma=base)
            spec.alpha, spec.beta = a, base.index_of(b)
            spec.expected_removed = 2 * (q + 1) ** 2
        elif family == "B":
            spec.xi = 1 if xi is None else _xi_index(f, xi)
            removal = pds_b(f, spec.xi, gamma=base)
            spec.expected_removed = 2 * (q * q + 3 * q + 1)
        elif family == "C":
            removal = pds_c(f, gamma=base)
            spec.expected_removed = 2 * (q * q + 4 * q + 3)
        else:
            spec.xi = 2 if xi is None else _xi_index(f, xi)
            removal = pds_c_prime(gamma=base, xi=spec.xi)
            spec.expected_removed = 2 * (q * q + 4 * q + 3)
        spec.expected_order = gamma_order(q) - spec.expected_removed

    if not is_perfect_dominating(base, removal):
        raise PdsViolation(f"set {family} is not perfect dominating for q={q}")
    if len(removal) != spec.expected_removed:
        raise PdsViolation(f"|{family}| = {len(removal)}, expected {spec.expected_removed}")
    out = remove_set(base, removal)
    prof = degree_profile(out)
    if out.order != spec.expected_order or prof != {spec.expected_degree: out.order}:
        raise PdsViolation(f"derived graph has order {out.order} and degrees {prof}")
    if with_set:
        return out, spec, removal, base
    return out, spec
