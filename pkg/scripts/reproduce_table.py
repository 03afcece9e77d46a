"""Rebuild every graph family for a range of q and print the measured table.

    python scripts/reproduce_table.py --q 2 3 4 5 7 8 9 [--csv out.csv]
"""

import argparse
import csv
import sys
import time

from cage8.cage import build_gamma, moore_bound
from cage8.field import field_new
from cage8.graph import degree_profile, girth, is_perfect_dominating, remove_set
from cage8.pds import build_set_s, pds_a, pds_b, pds_c, pds_c_prime


def row(family, q, removed, g, pds_ok, expected, seconds):
    prof = degree_profile(g)
    deg = next(iter(prof)) if len(prof) == 1 else None
    return {
        "q": q, "family": family, "removed": removed, "order": g.order,
        "expected_order": expected, "degree": deg, "girth": girth(g),
        "pds": pds_ok, "ok": g.order == expected and deg is not None, "seconds": round(seconds, 2),
    }


def measure(q):
    f = field_new(q)
    t = time.perf_counter()
    g = build_gamma(f)
    rows = [row("Gamma", q, 0, g, None, moore_bound(q + 1, 8), time.perf_counter() - t)]
    families = [("A", lambda: pds_a(f, gamma=g), 2 * q * (q * q - 1)),
                ("B", lambda: pds_b(f, gamma=g), 2 * q * (q * q - 2))]
    if f.p == 2 and q >= 8:
        families.append(("C", lambda: pds_c(f, gamma=g), 2 * (q**3 - 3 * q - 2)))
    if q == 4:
        families.append(("Cprime", lambda: pds_c_prime(gamma=g), 100))
    for name, build, expected in families:
        t = time.perf_counter()
        s = build()
        out = remove_set(g, s)
        rows.append(row(name, q, len(s), out, is_perfect_dominating(g, s), expected, time.perf_counter() - t))
    if q >= 4:
        t = time.perf_counter()
        ss = build_set_s(f)
        out = remove_set(ss.gq, ss.S)
        rows.append(row("S", q, len(ss.S), out, is_perfect_dominating(ss.gq, ss.S),
                        2 * q * (q - 1) ** 2, time.perf_counter() - t))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5, 7, 8, 9])
    ap.add_argument("--csv")
    args = ap.parse_args(argv)
    rows = [r for q in args.q for r in measure(q)]
    cols = list(rows[0])
    print("  ".join(f"{c:>14}" for c in cols))
    for r in rows:
        print("  ".join(f"{str(r[c]):>14}" for c in cols))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=cols)
            w.writeheader()
            w.writerows(rows)
    return 0 if all(r["ok"] and r["pds"] is not False for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
