"""Command-line entry point: ``minus-two <command> ...``.

Exit status is 0 on success, 1 when a verification finds a counterexample and
2 for usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import families
from .chargraph import PSL2Params, delta_psl2, regular_chargraph_admissibility
from .enumeration import EnumerationSpec, default_jobs, enumerate_graphs
from .errors import DomainError
from .formats import graph_to_json, parse_graph6, to_dot, write_graph6
from .graph import Graph
from .recognition import classify_regular_connected
from .spectral import MinEigClass, is_strongly_regular, spectral_summary
from .suites import ALL_SUITES, DEFAULT_MAX_N, SuiteReport, run_suite, suite_prop_b


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()] if text else []


_FAMILIES: dict[str, tuple[str, Callable[..., Graph]]] = {
    "complete": ("N", lambda n: families.complete(int(n))),
    "cycle": ("N", lambda n: families.cycle(int(n))),
    "path": ("N", lambda n: families.path(int(n))),
    "complete-bipartite": ("M N", lambda m, n: families.complete_bipartite(int(m), int(n))),
    "cocktail-party": ("M", lambda m: families.cocktail_party(int(m))),
    "forbidden-f": ("N", lambda n: families.forbidden_f(int(n))),
    "petersen": ("", families.petersen),
    "schlafli": ("", families.schlafli),
    "clebsch": ("", families.clebsch),
    "line": ("GRAPH6", lambda s: families.line_graph(parse_graph6(s))),
    "generalized-line": ("GRAPH6 A1,A2,...",
                         lambda s, a: families.generalized_line_graph(parse_graph6(s), _ints(a))),
    "switch": ("GRAPH6 V1,V2,...", lambda s, u: families.switch(parse_graph6(s), _ints(u))),
}


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "graph6":
        print(write_graph6(g))
    elif fmt == "dot":
        print(to_dot(g), end="")
    else:
        print(json.dumps(graph_to_json(g)))


def _cmd_construct(args) -> int:
    if args.family not in _FAMILIES:
        raise DomainError(f"unknown family {args.family!r}; choose from {', '.join(_FAMILIES)}")
    usage, build = _FAMILIES[args.family]
    want = len(usage.split()) if usage else 0
    if len(args.params) != want:
        raise DomainError(f"{args.family} takes {want} parameter(s): {usage or 'none'}")
    try:
        g = build(*args.params)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"bad parameter for {args.family}: {exc}") from None
    _emit_graph(g, args.format)
    return 0


def _cmd_classify(args) -> int:
    g = parse_graph6(args.graph6)
    print(json.dumps(classify_regular_connected(g).to_json()))
    return 0


def _cmd_spectrum(args) -> int:
    g = parse_graph6(args.graph6)
    s = spectral_summary(g)
    srg = is_strongly_regular(g)
    out = {
        "char_poly": s["char_poly"].to_json(),
        "min_eig_class": s["min_eig_class"].value,
        "distinct_eigenvalues": s["distinct_eigenvalues"],
        "regular": s["regular"],
        "connected": s["connected"],
        "srg": list(srg.as_tuple()) if srg else None,
    }
    if args.format == "json":
        print(json.dumps(out))
    else:
        for key, value in out.items():
            print(f"{key}: {value}")
    return 0


def _cmd_delta_psl2(args) -> int:
    lcg = delta_psl2(PSL2Params(args.u, args.f))
    if args.format == "json":
        print(json.dumps(lcg.to_json()))
    else:
        print(to_dot(lcg.graph, labels=list(lcg.labels)), end="")
    return 0


def _print_report(report: SuiteReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json()))
        return
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} {report.suite}: examined {report.examined}, "
          f"{len(report.counterexamples)} counterexample(s), {report.ms} ms")
    for c in report.counterexamples:
        print(f"  {c.witness}: expected {c.expected}; got {c.got}")


def _cmd_prop_b(args) -> int:
    report = suite_prop_b(args.u_max, args.f_max)
    _print_report(report, args.format)
    return 0 if report.passed else 1


def _cmd_admissible(args) -> int:
    g = parse_graph6(args.graph6)
    print(json.dumps(regular_chargraph_admissibility(g).to_json()))
    return 0


def _cmd_enumerate(args) -> int:
    classes = None
    if args.min_eig:
        try:
            classes = frozenset(MinEigClass(t) for t in args.min_eig.split(","))
        except ValueError:
            raise DomainError("--min-eig takes a comma list of gt, eq, lt") from None
    spec = EnumerationSpec(args.n, connected=True if args.connected else None,
                           regular_degree=args.regular, min_eig_classes=classes,
                           complement_bipartite=True if args.complement_bipartite else None)
    count = 0
    for g in enumerate_graphs(spec, args.jobs):
        count += 1
        if not args.count:
            print(write_graph6(g))
    if args.count:
        print(count)
    return 0


def _cmd_verify(args) -> int:
    names = ALL_SUITES if args.suite == "all" else (args.suite,)
    if args.suite != "all" and args.suite not in ALL_SUITES:
        raise DomainError(f"unknown suite {args.suite!r}; choose from {', '.join(ALL_SUITES)} or all")
    reports = [run_suite(name, args.max_n, args.allow_slow, args.jobs) for name in names]
    if args.format == "json" and len(reports) > 1:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            _print_report(r, args.format)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minus-two", description="Graphs with least eigenvalue -2 and character-graph checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a named graph")
    c.add_argument("family", help=", ".join(_FAMILIES))
    c.add_argument("params", nargs="*")
    c.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")
    c.set_defaults(run=_cmd_construct)

    c = sub.add_parser("classify", help="classify a connected regular graph")
    c.add_argument("graph6")
    c.set_defaults(run=_cmd_classify)

    c = sub.add_parser("spectrum", help="exact spectral summary")
    c.add_argument("graph6")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(run=_cmd_spectrum)

    c = sub.add_parser("delta-psl2", help="character-graph of PSL_2(u**f)")
    c.add_argument("u", type=int)
    c.add_argument("f", type=int)
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c.set_defaults(run=_cmd_delta_psl2)

    c = sub.add_parser("prop-b", help="sweep |pi(u^f - 1)| >= |pi(f)| over primes u")
    c.add_argument("--u-max", type=int, default=50)
    c.add_argument("--f-max", type=int, default=20)
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.set_defaults(run=_cmd_prop_b)

    c = sub.add_parser("admissible", help="regular character-graph admissibility filter")
    c.add_argument("graph6")
    c.set_defaults(run=_cmd_admissible)

    c = sub.add_parser("enumerate", help="graphs up to isomorphism, as graph6")
    c.add_argument("n", type=int)
    c.add_argument("--connected", action="store_true")
    c.add_argument("--regular", type=int, metavar="K")
    c.add_argument("--min-eig", metavar="CLASSES", help="comma list of gt, eq, lt")
    c.add_argument("--complement-bipartite", action="store_true")
    c.add_argument("--count", action="store_true", help="print only the number of graphs")
    c.add_argument("--jobs", type=int, default=None)
    c.set_defaults(run=_cmd_enumerate)

    c = sub.add_parser("verify", help="run verification suites")
    c.add_argument("suite", help=", ".join(ALL_SUITES) + " or all")
    c.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    c.add_argument("--allow-slow", action="store_true", help="permit n = 10")
    c.add_argument("--jobs", type=int, default=None)
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.set_defaults(run=_cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "jobs") and args.jobs is None:
            args.jobs = default_jobs()
        return args.run(args)
    except DomainError as exc:
        print(f"minus-two: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
