"""Command-line interface.

Exit codes: 0 confirmed, 1 refuted, 2 undetermined, 64 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .enumerate import MAX_STRUCTURED_N, enumerate_bicyclic, enumerate_class
from .graph import GraphError
from .io import FormatError, encode_graph6, read_graph
from .spectra import (
    charpoly_exact,
    charpoly_recursive,
    eigenvalues,
    estrada_eig,
    estrada_moments,
    estrada_via_charpoly,
)
from .verify import ALL_STATEMENTS, STATEMENTS, combined_exit_code, run
from .verify.extremal import verify_g1_vs_g2
from .walks import DEFAULT_K, spectral_moments, walk_table, walk_table_through

EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _load(args):
    return read_graph(args.file, args.format)


def cmd_ee(args) -> int:
    G = _load(args)
    eig = estrada_eig(G)
    mom = estrada_moments(G, args.K)
    print(f"EE (eigensolver) = {fmt(eig.value)} +/- {eig.error:.3g}")
    print(f"EE ({mom.route}) = {fmt(mom.value)} +/- {mom.error:.3g}")
    if args.charpoly:
        cp = estrada_via_charpoly(charpoly_recursive(G))
        print(f"EE (charpoly) = {fmt(cp.value)} +/- {cp.error:.3g}")
    spec = eigenvalues(G)
    print("spectrum: " + " ".join(fmt(x) for x in spec.eigenvalues))
    return 0


def cmd_moments(args) -> int:
    G = _load(args)
    for k, m in enumerate(spectral_moments(G, args.k)):
        print(f"M_{k} = {m}")
    return 0


def cmd_walks(args) -> int:
    G = _load(args)
    for v in (args.u, args.v) + (() if args.through is None else (args.through,)):
        if not 0 <= v < G.n:
            raise UsageError(f"vertex {v} not in graph with {G.n} vertices")
    if args.through is None:
        table = walk_table(G, args.u, args.v, args.k)
    else:
        table = walk_table_through(G, args.u, args.v, args.through, args.k)
    for k, c in enumerate(table.counts):
        print(f"k={k} {c}")
    return 0


def cmd_charpoly(args) -> int:
    G = _load(args)
    rec = charpoly_recursive(G)
    exact = charpoly_exact(G)
    print(f"phi(G,x) = {rec}")
    print("coefficients (x^0 first): " + " ".join(str(c) for c in rec.coeffs))
    if rec != exact:
        print(f"MISMATCH: determinant route gives {exact}", file=sys.stderr)
        return 1
    print("recursion and determinant agree")
    return 0


def _parse_class(text: str):
    try:
        kind, rest = text.split(":")
        p, q = (int(t) for t in rest.split(","))
    except ValueError:
        raise UsageError(f"--class expects kind:p,q (e.g. theta:4,3), got {text!r}")
    if kind not in ("infinity", "theta"):
        raise UsageError("class kind must be infinity or theta")
    return kind, p, q


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_STRUCTURED_N:
        raise UsageError(f"--n must lie in 1..{MAX_STRUCTURED_N}")
    classes = enumerate_bicyclic(args.n)
    if args.cls:
        classes = enumerate_class(args.n, *_parse_class(args.cls), classes=classes)
    lines = [encode_graph6(gc.graph).decode("ascii") for gc in classes]
    body = "".join(line + "\n" for line in lines)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(body)
        print(f"{len(lines)} graphs written to {args.out}")
    else:
        sys.stdout.write(body)
    return 0


def _emit(reports, args) -> int:
    for rep in reports:
        print(rep.summary())
        if args.verbose:
            for inst in rep.instances:
                margin = "" if inst.margin is None else f" margin={fmt(inst.margin)}"
                print(f"  [{inst.outcome}] {inst.description}{margin}")
    if args.json:
        data = [r.to_dict(timing=not args.no_timing) for r in reports]
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(data[0] if len(data) == 1 else data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return combined_exit_code(reports)


def cmd_verify(args) -> int:
    names = ALL_STATEMENTS if args.statement == "all" else (args.statement,)
    if args.statement != "all" and args.statement not in STATEMENTS:
        raise UsageError(f"unknown statement {args.statement!r}; choose from all, {', '.join(STATEMENTS)}")
    if not 4 <= args.n <= 9:
        raise UsageError("--n must lie in 4..9 for verification campaigns")
    return _emit([run(name, args.n, args.K) for name in names], args)


def cmd_compare(args) -> int:
    if not 5 <= args.n_lo <= args.n_hi:
        raise UsageError("need 5 <= --n-lo <= --n-hi")
    return _emit([verify_g1_vs_g2(args.n_lo, args.n_hi)], args)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bicyclic-estrada", description="Estrada index tools for bicyclic graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="edge-list file (.g6/.graph6 read as graph6)")
        p.add_argument("--format", choices=["edgelist", "graph6"], default=None)
        return p

    p = graph_cmd("ee", "Estrada index by two routes, plus the spectrum")
    p.add_argument("--K", type=int, default=None, help="moment cutoff (default: automatic)")
    p.add_argument("--charpoly", action="store_true", help="also use characteristic polynomial roots")
    p.set_defaults(func=cmd_ee)

    p = graph_cmd("moments", "exact spectral moments M_0..M_K")
    p.add_argument("--k", type=int, default=10)
    p.set_defaults(func=cmd_moments)

    p = graph_cmd("walks", "walk counts between two vertices")
    p.add_argument("-u", type=int, required=True)
    p.add_argument("-v", type=int, required=True)
    p.add_argument("--through", type=int, default=None, help="count only walks visiting this vertex")
    p.add_argument("--k", type=int, default=10)
    p.set_defaults(func=cmd_walks)

    p = graph_cmd("charpoly", "characteristic polynomial by recursion and determinant")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("enumerate", help="bicyclic graphs of order n as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", default=None, help="restrict to infinity:p,q or theta:p,q")
    p.add_argument("--out", default=None, help="write graph6 lines here instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    def report_flags(p):
        p.add_argument("--json", default=None, help="write the report(s) as JSON")
        p.add_argument("--no-timing", action="store_true", help="write runtime_ms as 0 for reproducible JSON")
        p.add_argument("--verbose", "-v", action="store_true", help="print every instance")

    p = sub.add_parser("verify", help="run verification campaigns")
    p.add_argument("statement", help="statement id or 'all'")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--K", type=int, default=DEFAULT_K, help="walk-count cutoff for dominance checks")
    report_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare-g1-g2", help="EE(G1(n)) against EE(G2(n)) over a range of n")
    p.add_argument("--n-lo", type=int, default=5)
    p.add_argument("--n-hi", type=int, default=30)
    report_flags(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, GraphError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
