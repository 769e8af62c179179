"""Command-line entry point.

Exit codes: 0 success (or every check passed), 1 negative answer (or a
failed check), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence, TextIO

from . import closed_form as cf
from .enumeration import FILTERS, EnumerationRequest, enumerate_graphs, matches_filter
from .errors import NotALinearForest
from .fullhom import full_hom_witness
from .graph_core import (
    Graph,
    canonical_form,
    canonical_graph,
    graph6_decode,
    graph6_encode,
    make_standard,
    read_graph6_lines,
)
from .obstructions import ObstructionSet, construct_witness_host, obs_oracle, obs_star_oracle
from .pd_core import full_core, linear_forest_spec, mu
from .validation import SUITES, run_suite

_SHORTHAND = re.compile(r"^([PCK])(\d+)$")


class InputError(Exception):
    pass


def parse_graph(text: str, force_g6: bool = False) -> Graph:
    """graph6, or P<n>/C<n>/K<n> shorthand unless ``force_g6``."""
    m = None if force_g6 else _SHORTHAND.match(text)
    if m:
        kind = {"P": "path", "C": "cycle", "K": "complete"}[m.group(1)]
        return make_standard(kind, int(m.group(2)))
    return graph6_decode(text)


def _read_catalog(path: str) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6_lines(fh))


def _emit(graphs, out: TextIO):
    for g in graphs:
        out.write(graph6_encode(canonical_graph(g)) + "\n")


def _cmd_fullhom(args, out):
    g = parse_graph(args.g, args.g6)
    h = parse_graph(args.h, args.g6)
    w = full_hom_witness(g, h)
    if w is None:
        out.write("NO\n")
        return 1
    out.write("YES\n" + " ".join(map(str, w.assignment)) + "\n")
    return 0


def _cmd_core(args, out):
    core, cmap = full_core(parse_graph(args.graph, args.g6))
    out.write(graph6_encode(core) + "\n")
    out.write(" ".join(map(str, cmap.assignment)) + "\n")
    return 0


def _cmd_mu(args, out):
    g = parse_graph(args.graph, args.g6)
    try:
        spec = linear_forest_spec(g)
    except NotALinearForest as exc:
        raise InputError(f"not a linear forest: {exc}") from None
    out.write(f"{mu(spec)}\n")
    return 0


def _cmd_enumerate(args, out):
    if args.graph6_in:
        req = EnumerationRequest(args.max_n, args.filter, args.best_effort)
        by_key = {}
        for g in _read_catalog(args.graph6_in):
            if g.n <= req.max_order:
                by_key.setdefault(canonical_form(g), g)
        graphs = [g for _, g in sorted(by_key.items()) if matches_filter(g, req.filter)]
    else:
        graphs = enumerate_graphs(args.max_n, args.filter, workers=args.workers,
                                  best_effort=args.best_effort)
    if args.graph6_out:
        with open(args.graph6_out, "w") as fh:
            _emit(graphs, fh)
    else:
        _emit(graphs, out)
    return 0


def _oracle_kw(args):
    kw = {"strategy": args.strategy, "workers": args.workers}
    if args.graph6_in:
        kw["catalog"] = _read_catalog(args.graph6_in)
    return kw


def _closed_form(host_text: str) -> ObstructionSet | None:
    m = _SHORTHAND.match(host_text)
    if not m or m.group(1) == "K":
        raise InputError("closed form is available for P<n> and C<n> hosts only")
    kind, n = m.group(1), int(m.group(2))
    if kind == "P":
        return cf.obs_paths_closed(n) if n >= 2 else None
    return cf.obs_cycles_closed(n) if n >= 5 else None


def _cmd_obs(args, out):
    host = parse_graph(args.host, args.g6)
    result = None
    if args.method == "closed-form":
        if args.g6:
            raise InputError("closed form needs P<n> or C<n> shorthand")
        result = _closed_form(args.host)
        if result is None:
            sys.stderr.write("note: no closed form for this host; using the oracle\n")
    if result is None:
        result = obs_oracle(host, **_oracle_kw(args))
    _emit(result.graphs(), out)
    return 0


def _cmd_obs_star(args, out):
    host = parse_graph(args.host, args.g6)
    _emit(obs_star_oracle(host, **_oracle_kw(args)).graphs(), out)
    return 0


def _cmd_witness_host(args, out):
    g = parse_graph(args.graph, args.g6)
    host = construct_witness_host(g)
    out.write(graph6_encode(host) + "\n")
    out.write("verified: minimal obstruction of the constructed host\n")
    return 0


def _cmd_count(args, out):
    m = _SHORTHAND.match(args.host)
    if not m or m.group(1) == "K":
        raise InputError("count needs a P<n> or C<n> host")
    n = int(m.group(2))
    out.write(f"{cf.count_obs_paths(n) if m.group(1) == 'P' else cf.count_obs_cycles(n)}\n")
    return 0


def _cmd_validate(args, out):
    names = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in names:
        rep = run_suite(name, max_n=args.max_n, rows=args.rows, extended=args.extended,
                        strategy=args.strategy, workers=args.workers)
        out.write((rep.to_tsv() if args.tsv else rep.to_text()) + "\n")
        ok = ok and rep.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fullcolour", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--g6", action="store_true",
                        help="read graph arguments as graph6 even if they look like P<n>/C<n>/K<n>")
        sp.add_argument("--workers", type=int, default=1)

    def oracle_opts(sp):
        sp.add_argument("--graph6-in", metavar="FILE",
                        help="filter this graph6 catalog instead of generating candidates")
        sp.add_argument("--strategy", choices=("pruned", "exhaustive"), default="pruned")

    sp = sub.add_parser("fullhom", help="decide full H-colourability of G")
    sp.add_argument("g")
    sp.add_argument("h")
    common(sp)
    sp.set_defaults(func=_cmd_fullhom)

    sp = sub.add_parser("core", help="full-core and collapse map")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=_cmd_core)

    sp = sub.add_parser("mu", help="least path order hosting a linear forest")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=_cmd_mu)

    sp = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--filter", choices=FILTERS, default="all")
    sp.add_argument("--graph6-out", metavar="FILE")
    sp.add_argument("--graph6-in", metavar="FILE",
                    help="dedupe, filter and sort this catalog instead of generating")
    sp.add_argument("--best-effort", action="store_true", help="allow order 11")
    common(sp)
    sp.set_defaults(func=_cmd_enumerate)

    for name, func in (("obs", _cmd_obs), ("obs-star", _cmd_obs_star)):
        sp = sub.add_parser(name, help="minimal obstructions of a host")
        sp.add_argument("--host", required=True)
        if name == "obs":
            sp.add_argument("--method", choices=("oracle", "closed-form"), default="oracle")
        oracle_opts(sp)
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("witness-host", help="host with G as a minimal obstruction")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=_cmd_witness_host)

    sp = sub.add_parser("count", help="number of minimal obstructions of P<n>/C<n>")
    sp.add_argument("--host", required=True)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("validate", help="re-derive results by brute force")
    sp.add_argument("suite", choices=SUITES + ("all",))
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--rows", help="table rows, e.g. 5-8")
    sp.add_argument("--extended", action="store_true", help="include the order-10 runs")
    sp.add_argument("--tsv", action="store_true")
    sp.add_argument("--strategy", choices=("pruned", "exhaustive"), default="pruned")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=_cmd_validate)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (InputError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
