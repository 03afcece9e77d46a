"""Explicit (q+1, 8)-cages, their perfect dominating sets and the derived girth-8 graphs."""

from .field import Field, FieldElement, FieldError, NotAPrimePower, DivisionByZero, field_new
from .graph import (
    INF, Infinite, Vertex, BipartiteGraph, GraphError, VertexNotFound, InvalidVertex,
    MapNotTotal, MapNotInjective, ball, set_ball, distance, girth, degree_profile,
    is_perfect_dominating, remove_set, is_isomorphism_via, vertex_id, vertex_from_id,
)
from .cage import (
    moore_bound, build_h, build_b, sigma_map, side_swap, duality_map, build_gamma,
    gamma_line_neighborhood, gamma_point_neighborhood, build_gamma_staged, Stage,
)
from .pds import (
    PdsError, BadDistance, BadXi, BadQ, PdsViolation, DerivedSpec, pds_a, pds_b, pds_c,
    pds_c_prime, build_gq, build_set_s, build_q_minus_1, derive,
)

__version__ = "0.1.0"
