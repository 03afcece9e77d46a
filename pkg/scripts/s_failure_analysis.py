"""Where the set S stops being perfect dominating.

For each q and every admissible xi, counts P, R, N(R) in G_q and, for each
vertex of N(R) outside P, how many neighbours it has in R, in N^3 and in
N^5 \\ R of the root (q,1,0)_0.  Prints the histogram of those triples next
to the predicted sizes.

    python scripts/s_failure_analysis.py --q 4 5 7 8 [--all-xi]
"""

import argparse
from collections import Counter

from cage8.field import field_new
from cage8.graph import INF, Vertex, ball, is_perfect_dominating
from cage8.pds import build_set_s, default_xi_gq


def analyse(q, xi):
    s = build_set_s(q, xi)
    g = s.gq
    root = g.index_of(Vertex(0, INF, 1, 0))
    n3 = set(ball(g, root, 3, closed=False))
    R, P = set(s.R), set(s.P)
    far = set(ball(g, root, 5, closed=False)) - R
    nr = {w for r in R for w in g.neighbours(r)}
    hist = Counter()
    for v in nr - P:
        nb = g.neighbours(v)
        hist[(sum(w in R for w in nb), sum(w in n3 for w in nb), sum(w in far for w in nb))] += 1
    return {
        "P": len(P), "R": len(R), "N(R)": len(nr), "N(R) claimed": 2 * q * (q - 2),
        "S": len(s.S), "S claimed": 4 * q * q - 6 * q, "pds": is_perfect_dominating(g, s.S),
        "hist": dict(sorted(hist.items())),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description="N(R) neighbour structure in G_q")
    ap.add_argument("--q", type=int, nargs="+", default=[4, 5, 7, 8])
    ap.add_argument("--all-xi", action="store_true", help="every xi outside {0, 1}, not just the default")
    args = ap.parse_args(argv)
    for q in args.q:
        xis = range(2, field_new(q).q) if args.all_xi else [default_xi_gq(q)]
        for xi in xis:
            res = analyse(q, xi)
            hist = res.pop("hist")
            print(f"q={q} xi={xi} " + " ".join(f"{k}={v}" for k, v in res.items()))
            for triple, count in hist.items():
                print(f"    (in R, in N3, in N5\\R) = {triple}: {count} vertices")


if __name__ == "__main__":
    main()
