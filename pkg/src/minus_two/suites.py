"""Exhaustive verification suites with self-validating reports.

Each suite pairs a stream of cases with a pure ``check`` that returns None when
the case is consistent and ``(expected, got)`` otherwise. Counterexamples keep
the witness so :func:`replay` can run ``check`` on it again.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .canon import is_isomorphic
from .chargraph import Admissibility, PSL2Params, delta_psl2, regular_chargraph_admissibility
from .enumeration import NOT_BELOW, EnumerationSpec, enumerate_graphs
from .errors import DomainError
from .families import (clebsch, complete, complete_bipartite, cocktail_party, forbidden_f, line_graph,
                       petersen, schlafli)
from .formats import parse_graph6, write_graph6
from .graph import (Graph, clique_number, complement, has_c5_subgraph, is_bipartite, is_connected,
                    matching_number, regularity)
from .numtheory import factor, is_power_of_two, is_prime, prime_set, primitive_prime_divisor, prop_b_lie_check
from .recognition import exceptional_layers, is_cocktail_party, is_line_graph, root_kind
from .spectral import MinEigClass, distinct_eigenvalue_count, is_strongly_regular, min_eig_class

DEFAULT_MAX_N = 9
SLOW_N = 10
ROOT_MAX_N = 7

PSL2_QS = (4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 256)


@dataclass(frozen=True)
class Counterexample:
    witness: str
    expected: str
    got: str


@dataclass
class SuiteReport:
    suite: str
    examined: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    ms: int = 0
    examined_by_n: dict[int, int] = field(default_factory=dict)
    found: list[dict] = field(default_factory=list)
    """Graphs worth reporting that are not failures, e.g. exceptional graphs met."""
    witness_key: str = "graph6"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "examined": self.examined,
            "counterexamples": [{self.witness_key: c.witness, "expected": c.expected, "got": c.got}
                                for c in self.counterexamples],
            "ms": self.ms,
            "passed": self.passed,
        }
        if self.examined_by_n:
            out["examined_by_n"] = {str(n): c for n, c in sorted(self.examined_by_n.items())}
        if self.found:
            out["found"] = self.found
        return out


Check = Callable[[Graph], Optional[tuple[str, str]]]


def _graphs(spec_for: Callable[[int], Iterable[EnumerationSpec]], ns: Iterable[int],
            jobs: Optional[int]) -> Iterator[tuple[int, Graph]]:
    for n in ns:
        for spec in spec_for(n):
            for g in enumerate_graphs(spec, jobs):
                yield n, g


def _run_graphs(name: str, cases: Iterator[tuple[int, Graph]], check: Check,
                note: Optional[Callable[[Graph], Optional[dict]]] = None) -> SuiteReport:
    start = time.perf_counter()
    report = SuiteReport(name)
    for n, g in cases:
        report.examined += 1
        report.examined_by_n[n] = report.examined_by_n.get(n, 0) + 1
        bad = check(g)
        if bad is not None:
            report.counterexamples.append(Counterexample(write_graph6(g), *bad))
        if note is not None:
            extra = note(g)
            if extra is not None:
                report.found.append(extra)
    report.ms = round((time.perf_counter() - start) * 1000)
    return report


def _cap(max_n: int, limit: int, allow_slow: bool, name: str) -> None:
    if max_n > limit:
        raise DomainError(f"{name} supports max_n <= {limit}, got {max_n}")
    if max_n >= SLOW_N and not allow_slow:
        raise DomainError(f"{name} at n = {max_n} needs allow_slow")


# regular graphs with bipartite complement and least eigenvalue >= -2


def _theorem_a_allowed(g: Graph, k: int) -> Optional[str]:
    half = g.n // 2
    if is_isomorphic(g, complete(k + 1)):
        return f"K_{k + 1}"
    if g.n % 2 == 0 and is_isomorphic(g, cocktail_party(half)):
        return f"CP({half})"
    if g.n % 2 == 0 and half >= 3 and is_isomorphic(g, forbidden_f(half)):
        return f"F({half})"
    return None


def theorem_a_filters(g: Graph) -> bool:
    k = regularity(g)
    return (k is not None and k >= 2 and is_connected(g)
            and is_bipartite(complement(g)) is not None
            and min_eig_class(g) is not MinEigClass.LESS_THAN_MINUS_2)


def check_theorem_a(g: Graph) -> Optional[tuple[str, str]]:
    if not theorem_a_filters(g):
        return None
    if _theorem_a_allowed(g, regularity(g)) is None:
        return "K_{k+1}, CP(n/2) or F(n/2)", f"n={g.n}, k={regularity(g)}, unidentified"
    return None


def suite_theorem_a(max_n: int = DEFAULT_MAX_N, allow_slow: bool = False, jobs: Optional[int] = None) -> SuiteReport:
    """Every surviving connected k-regular graph (k >= 2) is K_{k+1}, CP(n/2) or F(n/2)."""
    _cap(max_n, SLOW_N, allow_slow, "theorem-a")

    def specs(n: int):
        for k in range(2, n):
            if n * k % 2 == 0:
                yield EnumerationSpec(n, connected=True, regular_degree=k,
                                      min_eig_classes=NOT_BELOW, complement_bipartite=True)

    def note(g: Graph) -> dict:
        return {"graph6": write_graph6(g), "identified": _theorem_a_allowed(g, regularity(g))}

    return _run_graphs("theorem-a", _graphs(specs, range(3, max_n + 1), jobs), check_theorem_a, note)


# line-graph facts


def check_line_bipartite(root: Graph) -> Optional[tuple[str, str]]:
    lg = line_graph(root)
    if is_bipartite(complement(lg)) is None:
        return None
    nu, c5 = matching_number(root), has_c5_subgraph(root)
    if nu <= 2 and not c5:
        return None
    return "matching number <= 2 and no C5", f"matching number {nu}, C5 subgraph {c5}"


def suite_line_bipartite(max_root_n: int = ROOT_MAX_N, jobs: Optional[int] = None) -> SuiteReport:
    """Bipartite complement of L(root) forces matching number <= 2 and no C5 in the root."""
    if max_root_n > ROOT_MAX_N:
        raise DomainError(f"line-bipartite supports roots on <= {ROOT_MAX_N} vertices")
    cases = _graphs(lambda n: [EnumerationSpec(n)], range(1, max_root_n + 1), jobs)
    return _run_graphs("line-bipartite", cases, check_line_bipartite)


def check_regular_line(root: Graph) -> Optional[tuple[str, str]]:
    lg = line_graph(root)
    if not is_connected(root) or not is_connected(lg) or regularity(lg) is None:
        return None
    if root_kind(root) is None:
        return "regular or semi-regular bipartite root", f"degrees {sorted(root.degrees())}"
    return None


def suite_regular_line(max_root_n: int = ROOT_MAX_N, jobs: Optional[int] = None) -> SuiteReport:
    """A connected root with regular connected line graph is regular or semi-regular bipartite."""
    if max_root_n > ROOT_MAX_N:
        raise DomainError(f"regular-line supports roots on <= {ROOT_MAX_N} vertices")
    cases = _graphs(lambda n: [EnumerationSpec(n, connected=True)], range(1, max_root_n + 1), jobs)
    return _run_graphs("regular-line", cases, check_regular_line)


# Exceptional graphs


def is_regular_exceptional(g: Graph) -> bool:
    return (regularity(g) is not None and is_connected(g)
            and min_eig_class(g) is MinEigClass.EQUALS_MINUS_2
            and is_cocktail_party(g) is None and not is_line_graph(g))


def check_exceptional(g: Graph) -> Optional[tuple[str, str]]:
    if not is_regular_exceptional(g):
        return None
    layers = exceptional_layers(g.n, regularity(g))
    nonbip = is_bipartite(complement(g)) is None
    if len(layers) == 1 and nonbip:
        return None
    return "exactly one layer and non-bipartite complement", f"layers {layers}, complement non-bipartite {nonbip}"


def _exceptional_note(g: Graph) -> Optional[dict]:
    if not is_regular_exceptional(g):
        return None
    layers = exceptional_layers(g.n, regularity(g))
    return {"graph6": write_graph6(g), "layer": layers[0] if len(layers) == 1 else None,
            "petersen": is_isomorphic(g, petersen())}


def suite_exceptional(max_n: int = DEFAULT_MAX_N, allow_slow: bool = False, jobs: Optional[int] = None) -> SuiteReport:
    """Regular exceptional graphs fit one layer and have non-bipartite complements.

    The Clebsch graph, too large to enumerate, is checked as a fixture.
    """
    _cap(max_n, SLOW_N, allow_slow, "exceptional")

    def specs(n: int):
        for k in range(0, n):
            if n * k % 2 == 0:
                yield EnumerationSpec(n, connected=True, regular_degree=k,
                                      min_eig_classes=frozenset({MinEigClass.EQUALS_MINUS_2}))

    cases = itertools.chain(_graphs(specs, range(1, max_n + 1), jobs), [(16, clebsch())])
    return _run_graphs("exceptional", cases, check_exceptional, _exceptional_note)


# Doob and strongly regular graphs


def check_doob_srg(g: Graph) -> Optional[tuple[str, str]]:
    k = regularity(g)
    if k is None or not is_connected(g):
        return None
    complete_graph = k == g.n - 1
    if min_eig_class(g) is MinEigClass.GREATER_THAN_MINUS_2:
        if not (complete_graph or (k == 2 and g.n % 2 == 1)):
            return "complete or odd cycle", f"n={g.n}, k={k}"
    if not complete_graph and g.num_edges:
        srg = is_strongly_regular(g) is not None
        three = distinct_eigenvalue_count(g) == 3
        if srg != three:
            return "strongly regular iff 3 distinct eigenvalues", f"srg {srg}, 3 distinct {three}"
    return None


def suite_doob_srg(max_n: int = DEFAULT_MAX_N, jobs: Optional[int] = None) -> SuiteReport:
    """Least eigenvalue above -2 forces complete or odd cycle; SRG iff 3 distinct eigenvalues."""
    if max_n > DEFAULT_MAX_N:
        raise DomainError(f"doob-srg supports max_n <= {DEFAULT_MAX_N}")

    def specs(n: int):
        for k in range(0, n):
            if n * k % 2 == 0:
                yield EnumerationSpec(n, connected=True, regular_degree=k)

    return _run_graphs("doob-srg", _graphs(specs, range(1, max_n + 1), jobs), check_doob_srg)


# Named graphs and the F(n) family


def check_named(name: str) -> Optional[tuple[str, str]]:
    g, want = _NAMED[name]()
    got = {
        "n": g.n,
        "k": regularity(g),
        "min_eig": min_eig_class(g).value,
        "complement_bipartite": is_bipartite(complement(g)) is not None,
        "layers": exceptional_layers(g.n, regularity(g)),
    }
    if "omega" in want:
        got["omega"] = clique_number(g)
    if "srg" in want:
        srg = is_strongly_regular(g)
        got["srg"] = srg.as_tuple() if srg else None
    return None if got == want else (repr(want), repr(got))


_NAMED: dict[str, Callable[[], tuple[Graph, dict]]] = {
    "schlafli": lambda: (schlafli(), {"n": 27, "k": 16, "min_eig": "eq", "complement_bipartite": False,
                                     "layers": ["B"], "omega": 6, "srg": (27, 16, 10, 8)}),
    "clebsch": lambda: (clebsch(), {"n": 16, "k": 10, "min_eig": "eq", "complement_bipartite": False,
                                   "layers": ["C"], "srg": (16, 10, 6, 6)}),
    "petersen": lambda: (petersen(), {"n": 10, "k": 3, "min_eig": "eq", "complement_bipartite": False,
                                     "layers": ["A"], "srg": (10, 3, 0, 1)}),
}


def suite_named_graphs() -> SuiteReport:
    start = time.perf_counter()
    report = SuiteReport("named-graphs", witness_key="case")
    for name in _NAMED:
        report.examined += 1
        bad = check_named(name)
        if bad is not None:
            report.counterexamples.append(Counterexample(name, *bad))
    report.ms = round((time.perf_counter() - start) * 1000)
    return report


def check_forbidden_f(g: Graph) -> Optional[tuple[str, str]]:
    m = g.n // 2
    problems = []
    if g.n % 2 or regularity(g) != m:
        problems.append(f"not {m}-regular on {2 * m} vertices")
    if not is_isomorphic(g, line_graph(complete_bipartite(2, m))):
        problems.append(f"not L(K_2,{m})")
    if min_eig_class(g) is not MinEigClass.EQUALS_MINUS_2:
        problems.append("least eigenvalue is not -2")
    if is_bipartite(complement(g)) is None:
        problems.append("complement not bipartite")
    verdict = regular_chargraph_admissibility(g)
    if verdict.kind is not Admissibility.EXCLUDED_FORBIDDEN_F or verdict.param != m:
        problems.append(f"admissibility {verdict.to_json()}")
    return None if not problems else ("F(n) invariants", "; ".join(problems))


def suite_forbidden_f(n_max: int = 8) -> SuiteReport:
    cases = ((2 * n, forbidden_f(n)) for n in range(3, n_max + 1))
    return _run_graphs("forbidden-f", cases, check_forbidden_f)


# Number theory and PSL_2(q)


def _run_cases(name: str, cases: Iterable, check: Callable, label: Callable) -> SuiteReport:
    start = time.perf_counter()
    report = SuiteReport(name, witness_key="case")
    for case in cases:
        report.examined += 1
        bad = check(*case)
        if bad is not None:
            report.counterexamples.append(Counterexample(label(*case), *bad))
    report.ms = round((time.perf_counter() - start) * 1000)
    return report


def _in_range(u: int, f: int) -> bool:
    return u**f < 1 << 63


def check_prop_b(u: int, f: int) -> Optional[tuple[str, str]]:
    c = prop_b_lie_check(u, f)
    if c.holds:
        return None
    return f"|pi(u^f-1)| >= |pi(f)| = {c.pi_f_size}", str(c.pi_uf_minus_1_size)


def suite_prop_b(u_max: int = 50, f_max: int = 20) -> SuiteReport:
    cases = [(u, f) for u in range(2, u_max + 1) if is_prime(u)
             for f in range(1, f_max + 1) if _in_range(u, f)]
    return _run_cases("prop-b", cases, check_prop_b, lambda u, f: f"u={u} f={f}")


def classical_zsigmondy_exception(u: int, f: int) -> bool:
    return (u, f) in ((2, 1), (2, 6)) or (f == 2 and is_power_of_two(u + 1))


def check_zsigmondy(u: int, f: int) -> Optional[tuple[str, str]]:
    found = primitive_prime_divisor(u, f) is not None
    expected = not classical_zsigmondy_exception(u, f)
    if found == expected:
        return None
    return f"primitive prime {'present' if expected else 'absent'}", f"{'present' if found else 'absent'}"


def zsigmondy_exceptions(u_max: int = 100, f_max: int = 30, f_min: int = 1) -> list[tuple[int, int]]:
    """Brute-force list of ``(u, f)`` without a primitive prime divisor."""
    return [(u, f) for u in range(2, u_max + 1) for f in range(f_min, f_max + 1)
            if _in_range(u, f) and primitive_prime_divisor(u, f) is None]


def suite_zsigmondy(u_max: int = 100, f_max: int = 30) -> SuiteReport:
    cases = [(u, f) for u in range(2, u_max + 1) for f in range(1, f_max + 1) if _in_range(u, f)]
    return _run_cases("zsigmondy", cases, check_zsigmondy, lambda u, f: f"u={u} f={f}")


def prime_power(q: int) -> tuple[int, int]:
    fac = factor(q).factors
    if len(fac) != 1:
        raise DomainError(f"{q} is not a prime power")
    return fac[0]


def check_delta_psl2(q: int) -> Optional[tuple[str, str]]:
    """Structural conformance of the constructed graph, checked from its edges alone."""
    u, f = prime_power(q)
    lcg = delta_psl2(PSL2Params(u, f))
    if q == 5:
        q, u = 4, 2
    lower, upper = prime_set(q - 1), prime_set(q + 1)
    problems = []
    if set(lcg.labels) != {u} | lower | upper:
        problems.append(f"labels {lcg.labels}")
    comps = sorted(lcg.prime_components(), key=min)

    def is_clique(ps) -> bool:
        return all(lcg.adjacent(a, b) for a in ps for b in ps if a < b)

    if q % 2 == 0:
        want = sorted([frozenset({2}), lower, upper], key=min)
        if comps != want or not all(is_clique(c) for c in comps):
            problems.append(f"components {[sorted(c) for c in comps]}")
    else:
        if any(lcg.adjacent(u, p) for p in lcg.labels if p != u):
            problems.append(f"{u} not isolated")
        rest = (lower | upper)
        if is_power_of_two(q - 1) or is_power_of_two(q + 1):
            if not is_clique(rest):
                problems.append("pi(q^2-1) not complete")
        else:
            m, p = lower - {2}, upper - {2}
            if not (is_clique(m) and is_clique(p)):
                problems.append("M or P not complete")
            if not all(lcg.adjacent(2, r) for r in rest - {2}):
                problems.append("2 not adjacent to all")
            if any(lcg.adjacent(a, b) for a in m for b in p):
                problems.append("M-P edge present")
    return None if not problems else ("structure per the PSL_2(q) lemma", "; ".join(problems))


def suite_delta_psl2(qs: Iterable[int] = PSL2_QS) -> SuiteReport:
    return _run_cases("delta-psl2", [(q,) for q in qs], check_delta_psl2, lambda q: f"q={q}")


# Registry and replay

GRAPH_SUITES = ("theorem-a", "line-bipartite", "regular-line", "exceptional", "doob-srg")
ALL_SUITES = GRAPH_SUITES + ("named-graphs", "forbidden-f", "prop-b", "zsigmondy", "delta-psl2")

_CHECKS: dict[str, Callable] = {
    "theorem-a": check_theorem_a,
    "line-bipartite": check_line_bipartite,
    "regular-line": check_regular_line,
    "exceptional": check_exceptional,
    "doob-srg": check_doob_srg,
    "forbidden-f": check_forbidden_f,
}


def _parse_case(text: str) -> tuple[int, ...]:
    return tuple(int(part.split("=")[1]) for part in text.split())


def replay(report: SuiteReport) -> bool:
    """True iff every recorded counterexample still fails its check with the same output."""
    for c in report.counterexamples:
        if report.suite in _CHECKS:
            again = _CHECKS[report.suite](parse_graph6(c.witness))
        elif report.suite == "named-graphs":
            again = check_named(c.witness)
        else:
            check = {"prop-b": check_prop_b, "zsigmondy": check_zsigmondy,
                     "delta-psl2": check_delta_psl2}[report.suite]
            again = check(*_parse_case(c.witness))
        if again != (c.expected, c.got):
            return False
    return True


def run_suite(name: str, max_n: int = DEFAULT_MAX_N, allow_slow: bool = False,
              jobs: Optional[int] = None) -> SuiteReport:
    """Run one suite by name; root suites clamp ``max_n`` to 7, doob-srg to 9."""
    if name == "theorem-a":
        return suite_theorem_a(max_n, allow_slow, jobs)
    if name == "exceptional":
        return suite_exceptional(max_n, allow_slow, jobs)
    if name == "line-bipartite":
        return suite_line_bipartite(min(max_n, ROOT_MAX_N), jobs)
    if name == "regular-line":
        return suite_regular_line(min(max_n, ROOT_MAX_N), jobs)
    if name == "doob-srg":
        return suite_doob_srg(min(max_n, DEFAULT_MAX_N), jobs)
    if name == "named-graphs":
        return suite_named_graphs()
    if name == "forbidden-f":
        return suite_forbidden_f()
    if name == "prop-b":
        return suite_prop_b()
    if name == "zsigmondy":
        return suite_zsigmondy()
    if name == "delta-psl2":
        return suite_delta_psl2()
    raise DomainError(f"unknown suite {name!r}; choose from {', '.join(ALL_SUITES)} or all")
