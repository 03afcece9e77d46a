"""Acceptance criteria 1-10, one test each, exact integer comparisons throughout.

Every criterion records one PASS/FAIL line; the lines are printed in the
terminal summary (see conftest.py) and when this file is run directly.
Criteria that do not hold for the constructed objects are left failing.
"""

import io
import sys
import tempfile
from pathlib import Path

import pytest

from cage8.cage import duality_map, gamma_point_neighborhood, moore_bound, sigma_map, side_swap
from cage8.cli import main as cli_main
from cage8.field import field_new
from cage8.graph import INF, Vertex, ball, degree_profile, girth, is_isomorphism_via, is_perfect_dominating, remove_set
from cage8.graphio import read_edgelist, write_edgelist
from cage8.pds import pds_a, pds_b, pds_c, pds_c_prime

from helpers import QS, b, gamma, h, set_s, stages

RESULTS: dict[int, tuple[bool, str]] = {}
P_, L_ = 0, 1


def record(n, checks):
    """checks: list of (label, ok). Stores one line, returns the failures."""
    bad = [lab for lab, ok in checks if not ok]
    detail = "all checks hold" if not bad else "failed: " + "; ".join(bad)
    RESULTS[n] = (not bad, f"{len(checks)} checks, {detail}")
    return bad


def summary_lines():
    out = []
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        out.append(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    return out


def _c1():
    checks = []
    for q in QS:
        g = gamma(q)
        n = 2 * q**3 + 2 * q**2 + 2 * q + 2
        checks += [
            (f"q={q} order", g.order == n),
            (f"q={q} regular", degree_profile(g) == {q + 1: n}),
            (f"q={q} bipartite", g.is_bipartite()),
            (f"q={q} connected", g.is_connected()),
            (f"q={q} girth", girth(g) == 8),
            (f"q={q} excess", g.order - moore_bound(q + 1, 8) == 0),
        ]
    return checks


def _c2():
    checks = []
    for q in QS:
        for name, g in (("H", h(q)), ("B", b(q))):
            checks += [
                (f"{name}_{q} order", g.order == 2 * q**3),
                (f"{name}_{q} regular", degree_profile(g) == {q: 2 * q**3}),
                (f"{name}_{q} girth", girth(g) == 8),
            ]
        checks.append((f"sigma q={q}", is_isomorphism_via(b(q), h(q), sigma_map(q))))
    comps = h(2).components()
    sub = [h(2).induced(sorted(c)) for c in comps]
    checks.append(("H_2 two 8-cycles", len(comps) == 2 and all(
        s.order == 8 and degree_profile(s) == {2: 8} and s.is_connected() for s in sub)))
    return checks


def _c3():
    checks = []
    for q in QS:
        g = gamma(q)
        final = stages(q)[-1][1]
        checks.append((f"q={q} staged == direct", final == g and set(final.edges()) == set(g.edges())))
        agree = True
        for i in range(g.order):
            v = g.label(i)
            if v.side == P_:
                if set(gamma_point_neighborhood(q, v)) != {g.label(w) for w in g.neighbours(i)}:
                    agree = False
                    break
        checks.append((f"q={q} point formula", agree))
    return checks


def _c4():
    # literal criterion: the coordinate-preserving side swap
    return [(f"q={q} side-swap automorphism", is_isomorphism_via(gamma(q), gamma(q), side_swap))
            for q in (2, 4, 8)]


def _c4_supplement():
    return [(f"q={q} explicit duality", is_isomorphism_via(gamma(q), gamma(q), duality_map(q)))
            for q in (2, 4, 8)]


def _c5():
    checks = []
    for q in QS:
        g = gamma(q)
        a = pds_a(q, gamma=g)
        bb = pds_b(q, gamma=g)
        checks += [
            (f"|A| q={q}", len(a) == 2 * (q + 1) ** 2),
            (f"A pds q={q}", is_perfect_dominating(g, a)),
            (f"|B| q={q}", len(bb) == 2 * (q * q + 3 * q + 1)),
            (f"B pds q={q}", is_perfect_dominating(g, bb)),
        ]
    c = pds_c(8, gamma=gamma(8))
    checks += [("|C| q=8", len(c) == 2 * (64 + 32 + 3)), ("C pds q=8", is_perfect_dominating(gamma(8), c))]
    cp = pds_c_prime(gamma=gamma(4))
    checks += [("|C'| q=4", len(cp) == 70), ("C' pds q=4", is_perfect_dominating(gamma(4), cp))]
    return checks


REPORTED = {}


def _c6():
    checks = []
    for q in QS:
        g = gamma(q)
        for fam, s, order in (("A", pds_a(q, gamma=g), 2 * q * (q * q - 1)),
                              ("B", pds_b(q, gamma=g), 2 * q * (q * q - 2))):
            out = remove_set(g, s)
            gi = girth(out)
            checks += [
                (f"Gamma_{q}-{fam} order", out.order == order),
                (f"Gamma_{q}-{fam} regular", degree_profile(out) == {q: order}),
            ]
            if q >= 3:
                checks.append((f"Gamma_{q}-{fam} girth", gi == 8))
            else:
                REPORTED[f"girth(Gamma_2-{fam})"] = gi
                checks.append((f"Gamma_2-{fam} girth>=8", gi >= 8))
            if q == 2 and fam == "B":
                checks.append(("Gamma_2-B single 8-cycle", out.order == 8 and out.is_connected()
                               and degree_profile(out) == {2: 8}))
    out = remove_set(gamma(8), pds_c(8, gamma=gamma(8)))
    checks += [("Gamma_8-C", out.order == 972 and degree_profile(out) == {8: 972} and girth(out) == 8)]
    out = remove_set(gamma(4), pds_c_prime(gamma=gamma(4)))
    checks += [("Gamma_4-C'", out.order == 100 and degree_profile(out) == {4: 100} and girth(out) == 8)]
    return checks


def _r_neighbour(f, y, z):
    return Vertex(L_, y, f.mul(f.inv(f.sub(1, f.mul(y, y))), f.mul(y, z)), z)


def _c7():
    checks = []
    for q in (4, 5, 7, 8, 9):
        s = set_s(q)
        g, f = s.gq, field_new(q)
        R, P = set(s.R), set(s.P)
        nr = {w for r in R for w in g.neighbours(r)}
        root = g.index_of(Vertex(P_, INF, 1, 0))
        far = set(ball(g, root, 5, closed=False)) - R
        uniq = all(
            [g.label(w) for w in g.neighbours(p) if w in R] == [_r_neighbour(f, g.label(p).b, g.label(p).c)]
            for p in P)
        checks += [
            (f"q={q} |P|=|R|=q(q-3)", len(P) == len(R) == q * (q - 3)),
            (f"q={q} |N(R)|={len(nr)} vs {2 * q * (q - 2)}", len(nr) == 2 * q * (q - 2)),
            (f"q={q} unique R-neighbour", uniq),
            (f"q={q} one neighbour in N5\\R", all(sum(w in far for w in g.neighbours(v)) == 1 for v in nr - P)),
        ]
    return checks


def _c8():
    checks = []
    for q in (4, 5, 7, 8, 9):
        s = set_s(q)
        out = remove_set(s.gq, s.S)
        order = 2 * q * (q - 1) ** 2
        checks += [
            (f"q={q} |S|={len(s.S)} vs {4 * q * q - 6 * q}", len(s.S) == 4 * q * q - 6 * q),
            (f"q={q} S pds", is_perfect_dominating(s.gq, s.S)),
            (f"q={q} order {out.order} vs {order}", out.order == order),
            (f"q={q} ({q - 1})-regular", degree_profile(out) == {q - 1: out.order}),
            (f"q={q} girth 8", girth(out) == 8),
        ]
    return checks


def _c9():
    checks = []

    def apart(g, members, bound):
        idx = {g.index_of(v) for v in members}
        return all(not (idx - {u}) & set(g.distances_from(u, limit=bound - 1)) for u in idx)

    for q in (2, 3, 4, 5):
        F = range(q)
        Fi = list(F) + [INF]
        st = dict(stages(q))
        ok1 = all(apart(g, [Vertex(L_, a, y, c) for y in F for c in F], 4)
                  and apart(g, [Vertex(P_, a, y, z) for y in F for z in F], 4)
                  for g in (h(q), b(q)) for a in F)
        ok2 = all(apart(b(q), [Vertex(P_, x, y, j) for j in F], 6) for x in F for y in F)
        ok3 = all(apart(st["B'"], [Vertex(L_, a, y, c) for y in F for c in F], 4) for a in Fi)
        ok4 = all(apart(st["B'"], [Vertex(L_, a, t, c) for t in F], 6) for a in Fi for c in F)
        ok5 = all(apart(st["B''"], [Vertex(P_, INF, a, j) for j in F], 6) for a in Fi)
        checks += [(f"q={q} claim {k}", ok) for k, ok in enumerate((ok1, ok2, ok3, ok4, ok5), 1)]
    return checks


def _c10():
    checks = []
    for q in QS:
        g = gamma(q)
        buf = io.StringIO()
        write_edgelist(g, buf)
        back = read_edgelist(io.StringIO(buf.getvalue()))
        checks.append((f"q={q} edge-list round trip", back == g and back.labels == g.labels and back.ids == g.ids))
    runs = [
        ["construct", "--q", "3", "--family", "gamma"],
        ["construct", "--q", "4", "--family", "gamma", "--format", "graph6"],
        ["derive", "--q", "4", "--remove", "S"],
        ["derive", "--q", "5", "--remove", "A", "--format", "dimacs"],
    ]
    with tempfile.TemporaryDirectory() as tmp:
        for k, argv in enumerate(runs):
            blobs = []
            for rep in range(2):
                out = Path(tmp) / f"r{k}_{rep}.out"
                code = cli_main(argv + ["--out", str(out)])
                blobs.append((code, out.read_bytes(), out.with_suffix(".meta.json").read_bytes()))
            checks.append((" ".join(argv) + " byte-identical", blobs[0] == blobs[1] and blobs[0][0] == 0))
    return checks


CHECKS = {1: _c1, 2: _c2, 3: _c3, 4: _c4, 5: _c5, 6: _c6, 7: _c7, 8: _c8, 9: _c9, 10: _c10}


@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n, capsys):
    bad = record(n, CHECKS[n]())
    with capsys.disabled():
        print(f"\n{summary_lines()[sorted(RESULTS).index(n)]}")
    assert not bad, "; ".join(bad)


def test_criterion_4_explicit_duality(capsys):
    """Supplement to criterion 4: self-duality through an explicit side-swapping map."""
    checks = _c4_supplement()
    bad = [lab for lab, ok in checks if not ok]
    with capsys.disabled():
        print(f"\ncriterion 4b: {'PASS' if not bad else 'FAIL'}  explicit duality map, q in (2, 4, 8)")
    assert not bad


if __name__ == "__main__":
    for n in sorted(CHECKS):
        record(n, CHECKS[n]())
        print(summary_lines()[sorted(RESULTS).index(n)])
    for k, v in REPORTED.items():
        print(f"reported: {k} = {v}")
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
