"""Command-line front end: construct, derive, verify, info.

Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 a verification failed.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import graphio
from .cage import as_field, build_b, build_gamma, build_gamma_staged, build_h, moore_bound
from .field import FieldError
from .graph import INF, GraphError, Infinite, Vertex, degree_profile, girth, is_perfect_dominating
from .pds import FAMILIES, PdsError, PdsViolation, derive, gamma_order

EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_FAIL = 0, 1, 2, 3

WRITERS = {
    "edgelist": graphio.write_edgelist,
    "dimacs": graphio.write_dimacs,
    "graph6": graphio.write_graph6,
}


class UsageError(Exception):
    pass


def _fmt_girth(gi) -> str:
    return "inf" if gi == Infinite else str(int(gi))


def _degree(g):
    prof = degree_profile(g)
    return next(iter(prof)) if len(prof) == 1 else None


def _summary(g, gi, removed=None) -> str:
    deg = _degree(g)
    parts = [] if removed is None else [f"removed={removed}"]
    parts += [f"order={g.order}", f"degree={'irregular' if deg is None else deg}", f"girth={_fmt_girth(gi)}"]
    return " ".join(parts)


def meta_path(out: Path) -> Path:
    return out.with_suffix(".meta.json")


def _export(g, field, spec, gi, out, fmt):
    if out is None:
        return
    out = Path(out)
    WRITERS[fmt](g, out)
    graphio.write_metadata(spec, field, meta_path(out), g=g, g_girth=gi)


_LABEL = re.compile(r"^([01]):\((\w+),(\w+),(\w+)\)$")


def parse_vertex(text: str):
    """An export id ("17") or a coordinate label ("0:(inf,inf,inf)")."""
    text = text.strip()
    if text.isdigit():
        return int(text)
    m = _LABEL.match(text.replace(" ", ""))
    if not m:
        raise UsageError(f"cannot parse vertex {text!r}; use an id or side:(a,b,c)")
    coords = [INF if t == "inf" else int(t) for t in m.groups()[1:]]
    return Vertex(int(m.group(1)), *coords)


def cmd_construct(args) -> int:
    f = as_field(args.q)
    if args.family == "gamma-staged":
        g, stages = build_gamma_staged(f)
        for st in stages:
            print(f"stage {st.name}: order={st.order} added={st.added} girth={_fmt_girth(st.girth)}")
        gi = stages[-1].girth
    else:
        g = {"gamma": build_gamma, "h": build_h, "b": build_b}[args.family](f)
        gi = girth(g)
    _export(g, f, None, gi, args.out, args.format)
    print(_summary(g, gi))
    return EXIT_OK


def cmd_derive(args) -> int:
    f = as_field(args.q)
    alpha = beta = None
    if args.alpha is not None or args.beta is not None:
        if args.remove != "A":
            raise UsageError("--alpha/--beta apply to --remove A only")
        base = build_gamma(f)
        # export ids of Gamma coincide with its dense ids
        alpha = None if args.alpha is None else base.index_of(parse_vertex(args.alpha))
        beta = None if args.beta is None else base.index_of(parse_vertex(args.beta))
    g, spec, removal, base = derive(f, args.remove, args.xi, alpha, beta, with_set=True)
    gi = girth(g)
    _export(g, f, spec, gi, args.out, args.format)
    if args.set_out:
        graphio.write_vertex_set(base, removal, args.set_out)
    print(_summary(g, gi, removed=len(removal)))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = graphio.read_graph(args.file)
    except graphio.ParseError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    results = []
    gi = girth(g) if args.girth is not None or not (args.regular or args.bipartite or args.pds) else None
    if args.girth is not None:
        results.append(("girth", gi == args.girth, f"girth={_fmt_girth(gi)}"))
    if args.regular is not None:
        prof = degree_profile(g)
        results.append(("regular", prof == {args.regular: g.order},
                        "degrees=" + ",".join(f"{d}x{c}" for d, c in sorted(prof.items()))))
    if args.bipartite:
        results.append(("bipartite", g.is_bipartite(), ""))
    if args.pds:
        try:
            ids = graphio.read_vertex_set(args.pds)
            members = [g.index_of_id(i) for i in ids]
        except graphio.ParseError as exc:
            raise UsageError(f"{args.pds}: {exc}") from None
        except KeyError as exc:
            raise UsageError(f"{args.pds}: vertex {exc} not in graph") from None
        results.append(("pds", is_perfect_dominating(g, members), f"size={len(set(members))}"))
    if not results:
        print(_summary(g, gi))
        return EXIT_OK
    for name, ok, detail in results:
        print(f"{name}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


def info_rows(q: int) -> list[tuple[str, str, str]]:
    """(quantity, value, note) rows; value "-" when the family does not apply."""
    f = as_field(q)
    q = f.q
    n = gamma_order(q)
    mb = moore_bound(q + 1, 8)
    a, b = 2 * (q + 1) ** 2, 2 * (q * q + 3 * q + 1)
    c = 2 * (q * q + 4 * q + 3)
    c_ok = f.p == 2 and q >= 8
    cp_ok = q == 4
    s_ok = q >= 4
    na = "not applicable"
    rows = [
        ("|V(Gamma)|", str(n), ""),
        ("moore_bound(q+1,8)", str(mb), ""),
        ("excess", str(n - mb), ""),
        ("|A|", str(a), ""),
        ("|B|", str(b), ""),
        ("|C|", str(c) if c_ok else "-", "" if c_ok else na + " (needs even q >= 8)"),
        ("|C'|", "70" if cp_ok else "-", "" if cp_ok else na + " (q = 4 only)"),
        ("|S|", str(4 * q * q - 6 * q) if s_ok else "-",
         (na + " (needs q >= 4)") if not s_ok else ("claimed; not perfect dominating when built" if q >= 7 else "")),
        ("order Gamma-A", str(2 * q * (q * q - 1)), f"{q}-regular"),
        ("order Gamma-B", str(2 * q * (q * q - 2)), f"{q}-regular"),
        ("order Gamma-C", str(2 * (q**3 - 3 * q - 2)) if c_ok or cp_ok else "-",
         ("via C'" if cp_ok else f"{q}-regular") if c_ok or cp_ok else na),
        ("order G_q-S", str(2 * q * (q - 1) ** 2) if s_ok else "-",
         f"{q - 1}-regular" if s_ok else na),
    ]
    return rows


def cmd_info(args) -> int:
    f = as_field(args.q)
    print(f"q={f.q} p={f.p} n={f.n} modulus={list(f.modulus)}")
    rows = info_rows(f.q)
    width = max(len(r[0]) for r in rows)
    for name, value, note in rows:
        print(f"{name.ljust(width)}  {value:>8}  {note}".rstrip())
    return EXIT_OK


def _q(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q must be an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cage8", description="Explicit (q+1,8)-cages and derived girth-8 graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build Gamma_q, H_q or B_q")
    c.add_argument("--q", type=_q, required=True)
    c.add_argument("--family", choices=["gamma", "h", "b", "gamma-staged"], default="gamma")
    c.add_argument("--format", choices=sorted(WRITERS), default="edgelist")
    c.add_argument("--out", help="graph file; metadata goes next to it as .meta.json")
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("derive", help="remove a perfect dominating set")
    d.add_argument("--q", type=_q, required=True)
    d.add_argument("--remove", choices=FAMILIES, required=True)
    d.add_argument("--xi", type=int)
    d.add_argument("--alpha", help="vertex id or side:(a,b,c)")
    d.add_argument("--beta", help="vertex id or side:(a,b,c)")
    d.add_argument("--format", choices=sorted(WRITERS), default="edgelist")
    d.add_argument("--out")
    d.add_argument("--set-out", help="also write the removed set (ids of the base graph)")
    d.set_defaults(func=cmd_derive)

    v = sub.add_parser("verify", help="check properties of an exported graph")
    v.add_argument("file")
    v.add_argument("--girth", type=int)
    v.add_argument("--regular", type=int)
    v.add_argument("--bipartite", action="store_true")
    v.add_argument("--pds", help="vertex-set file to test for perfect domination")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("info", help="print the order formulas for one q")
    i.add_argument("--q", type=_q, required=True)
    i.set_defaults(func=cmd_info)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PdsViolation as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (FieldError, PdsError, GraphError, UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
