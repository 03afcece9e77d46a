"""Deterministic text serialisation: edge list, DIMACS, graph6, JSON metadata.

Edge lists use export ids (global coordinate ids for constructed graphs).
DIMACS and graph6 use dense ids in the same order, 1-based for DIMACS.
All writers emit UTF-8 text with LF line endings; identical graphs give
byte-identical output.
"""

from __future__ import annotations

import json
import re
from collections import deque
from contextlib import contextmanager
from pathlib import Path

from .cage import moore_bound
from .field import Field
from .graph import INF, BipartiteGraph, Infinite, Vertex, degree_profile, girth

__all__ = [
    "ParseError",
    "TooLarge",
    "write_edgelist",
    "read_edgelist",
    "write_dimacs",
    "read_dimacs",
    "write_graph6",
    "read_graph6",
    "graph6_string",
    "write_metadata",
    "metadata_dict",
    "write_vertex_set",
    "read_vertex_set",
    "read_graph",
    "FORMATS",
]

GRAPH6_MAX = 68719476735
FORMATS = {"edgelist": ".edges", "dimacs": ".dimacs", "graph6": ".g6"}


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class TooLarge(ValueError):
    pass


@contextmanager
def _open(target, mode):
    if isinstance(target, (str, Path)):
        with open(target, mode, encoding="utf-8", newline="\n") as fh:
            yield fh
    else:
        yield target


def _coord(x) -> str:
    return "inf" if x is INF else str(x)


def _parse_coord(tok: str):
    return INF if tok == "inf" else int(tok)


# -- edge list ------------------------------------------------------------------

_LABEL = re.compile(r"^#v\s+(\d+)\s+([01])(?::\(([^,()]+),([^,()]+),([^,()]+)\))?\s*$")


def write_edgelist(g: BipartiteGraph, sink) -> None:
    ids = g.ids
    with _open(sink, "w") as out:
        for i in range(g.order):
            lab = g.labels[i] if g.labels is not None else None
            if isinstance(lab, Vertex):
                out.write(f"#v {ids[i]} {lab.side}:({_coord(lab.a)},{_coord(lab.b)},{_coord(lab.c)})\n")
            else:
                out.write(f"#v {ids[i]} {g.sides[i]}\n")
        for u, w in g.edges():
            out.write(f"{ids[u]} {ids[w]}\n")


def _two_colour(n, adj):
    sides = [-1] * n
    for s in range(n):
        if sides[s] != -1:
            continue
        sides[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in adj[u]:
                if sides[w] == -1:
                    sides[w] = 1 - sides[u]
                    dq.append(w)
    return sides


def _assemble(n, edges, sides=None, labels=None, ids=None) -> BipartiteGraph:
    adj = [set() for _ in range(n)]
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    if sides is None:
        sides = _two_colour(n, adj)
    ok = all(sides[u] != sides[w] for u, w in edges)
    # non-bipartite foreign graphs load unchecked so that verify can report them
    return BipartiteGraph(adj, sides, labels=labels, ids=ids, check=ok)


def read_edgelist(source) -> BipartiteGraph:
    with _open(source, "r") as fh:
        text = fh.read()
    labels, sides, raw_edges = {}, {}, []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            if s.startswith("#v"):
                m = _LABEL.match(s)
                if not m:
                    raise ParseError(lineno, f"malformed label line {s!r}")
                vid, side = int(m.group(1)), int(m.group(2))
                sides[vid] = side
                if m.group(3) is not None:
                    try:
                        labels[vid] = Vertex(side, *(_parse_coord(m.group(k)) for k in (3, 4, 5)))
                    except ValueError:
                        raise ParseError(lineno, f"bad coordinate in {s!r}") from None
            continue
        parts = s.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(lineno, f"expected 'u v', got {s!r}")
        u, w = int(parts[0]), int(parts[1])
        if u == w:
            raise ParseError(lineno, "self-loop")
        raw_edges.append((u, w))
    ids = sorted(set(sides) | {x for e in raw_edges for x in e})
    dense = {v: i for i, v in enumerate(ids)}
    edges = {(min(dense[u], dense[w]), max(dense[u], dense[w])) for u, w in raw_edges}
    side_list = [sides[v] for v in ids] if len(sides) == len(ids) else None
    label_list = [labels[v] for v in ids] if labels and len(labels) == len(ids) else None
    return _assemble(len(ids), sorted(edges), side_list, label_list, ids)


# -- DIMACS -----------------------------------------------------------------------

def write_dimacs(g: BipartiteGraph, sink) -> None:
    with _open(sink, "w") as out:
        out.write(f"p edge {g.order} {g.num_edges()}\n")
        for u, w in g.edges():
            out.write(f"e {u + 1} {w + 1}\n")


def read_dimacs(source) -> BipartiteGraph:
    with _open(source, "r") as fh:
        text = fh.read()
    n, edges = None, set()
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise ParseError(lineno, "edge before problem line")
                u, w = int(parts[1]) - 1, int(parts[2]) - 1
                if not (0 <= u < n and 0 <= w < n) or u == w:
                    raise ParseError(lineno, f"bad edge {line!r}")
                edges.add((min(u, w), max(u, w)))
            else:
                raise ParseError(lineno, f"unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(lineno, f"malformed line {line!r}") from None
    if n is None:
        raise ParseError(0, "missing problem line")
    return _assemble(n, sorted(edges))


# -- graph6 -----------------------------------------------------------------------

def _size_prefix(n: int) -> str:
    if n < 0 or n > GRAPH6_MAX:
        raise TooLarge(f"graph6 supports at most {GRAPH6_MAX} vertices, got {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_string(g: BipartiteGraph) -> str:
    n = g.order
    head = _size_prefix(n)
    bits = bytearray()
    for j in range(1, n):
        nb = set(g.adj[j])
        bits.extend(1 if i in nb else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return head + body


def write_graph6(g: BipartiteGraph, sink) -> None:
    with _open(sink, "w") as out:
        out.write(graph6_string(g) + "\n")


def read_graph6(source) -> BipartiteGraph:
    with _open(source, "r") as fh:
        s = fh.read().strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise ParseError(1, "not a graph6 string")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    bits = [(d >> (5 - k)) & 1 for d in data[pos:] for k in range(6)]
    if len(bits) < n * (n - 1) // 2:
        raise ParseError(1, "graph6 body too short")
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return _assemble(n, edges)


# -- vertex sets ----------------------------------------------------------------

def write_vertex_set(g: BipartiteGraph, vs, sink) -> None:
    """One export id per line, ascending."""
    ids = g.ids
    with _open(sink, "w") as out:
        for i in sorted(vs):
            out.write(f"{ids[i]}\n")


def read_vertex_set(source) -> list[int]:
    with _open(source, "r") as fh:
        text = fh.read()
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if not s.isdigit():
            raise ParseError(lineno, f"expected a vertex id, got {s!r}")
        out.append(int(s))
    return out


def read_graph(path) -> BipartiteGraph:
    """Dispatch on file extension (.g6, .dimacs/.col, anything else: edge list)."""
    suffix = Path(path).suffix.lower()
    if suffix == ".g6":
        return read_graph6(path)
    if suffix in (".dimacs", ".col"):
        return read_dimacs(path)
    return read_edgelist(path)


# -- metadata ---------------------------------------------------------------------

META_KEYS = ("q", "p", "n", "modulus", "family", "xi", "alpha", "beta", "order", "degree",
             "girth", "removed", "moore_bound", "excess")


def metadata_dict(g: BipartiteGraph, field: Field, spec=None, g_girth=None) -> dict:
    prof = degree_profile(g)
    degree = next(iter(prof)) if len(prof) == 1 else None
    gi = girth(g) if g_girth is None else g_girth
    gi = None if gi == Infinite else int(gi)
    bound = moore_bound(degree, gi) if degree is not None and degree >= 2 and gi is not None else None
    fmeta = field.metadata()
    meta = {
        "q": fmeta["q"],
        "p": fmeta["p"],
        "n": fmeta["n"],
        "modulus": fmeta["modulus"],
        "family": getattr(spec, "family", None),
        "xi": getattr(spec, "xi", None),
        "alpha": getattr(spec, "alpha", None),
        "beta": getattr(spec, "beta", None),
        "order": g.order,
        "degree": degree,
        "girth": gi,
        "removed": getattr(spec, "expected_removed", None) if spec is not None else None,
        "moore_bound": bound,
        "excess": g.order - bound if bound is not None else None,
    }
    assert tuple(meta) == META_KEYS
    return meta


def write_metadata(spec, field: Field, sink, g: BipartiteGraph | None = None, g_girth=None) -> dict:
    """Write the JSON sidecar; ``spec`` may be None for a plain construction."""
    if g is None:
        raise ValueError("metadata needs the graph it describes")
    meta = metadata_dict(g, field, spec, g_girth)
    with _open(sink, "w") as out:
        out.write(json.dumps(meta, indent=2) + "\n")
    return meta
