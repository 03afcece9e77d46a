"""Shared, cached builders so the suite constructs each big graph once."""

from functools import lru_cache

from cage8.cage import build_b, build_gamma, build_h, staged_graphs
from cage8.graph import girth
from cage8.pds import build_set_s

QS = (2, 3, 4, 5, 7, 8, 9)


@lru_cache(maxsize=None)
def gamma(q):
    return build_gamma(q)


@lru_cache(maxsize=None)
def h(q):
    return build_h(q)


@lru_cache(maxsize=None)
def b(q):
    return build_b(q)


@lru_cache(maxsize=None)
def stages(q):
    return staged_graphs(q)


@lru_cache(maxsize=None)
def set_s(q, xi=None):
    return build_set_s(q, xi)


_girths = {}


def cached_girth(g):
    key = id(g)
    if key not in _girths:
        _girths[key] = (g, girth(g))
    return _girths[key][1]
