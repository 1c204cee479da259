"""Character-graphs of PSL_2(q) and the regular character-graph admissibility filter.

Vertices of a :class:`LabeledCharGraph` are primes. The PSL_2(q) graphs are
built from their known component structure rather than from character
tables, which are out of scope here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DomainError, InternalConsistencyError
from .graph import Graph, complement, components, is_bipartite, is_connected, regularity
from .numtheory import LIMIT, is_power_of_two, is_prime, prime_set
from .recognition import Verdict, classify_regular_connected
from .spectral import MinEigClass, min_eig_class


@dataclass(frozen=True)
class PSL2Params:
    u: int
    f: int

    def __post_init__(self):
        if not is_prime(self.u):
            raise DomainError(f"u must be prime, got {self.u}")
        if self.f < 1:
            raise DomainError(f"f must be positive, got {self.f}")
        if self.q < 4:
            raise DomainError(f"PSL_2(q) needs q >= 4, got q = {self.q}")
        if self.q >= LIMIT:
            raise DomainError(f"q = {self.u}**{self.f} does not fit below 2**63")

    @property
    def q(self) -> int:
        return self.u**self.f


@dataclass(frozen=True)
class LabeledCharGraph:
    graph: Graph
    labels: tuple[int, ...]
    """``labels[v]`` is the prime at vertex ``v``; increasing."""

    def __post_init__(self):
        if len(self.labels) != self.graph.n or len(set(self.labels)) != len(self.labels):
            raise InternalConsistencyError("labels must be distinct, one per vertex")

    def vertex(self, p: int) -> int:
        return self.labels.index(p)

    def adjacent(self, p: int, r: int) -> bool:
        return self.graph.adjacent(self.vertex(p), self.vertex(r))

    def prime_components(self) -> list[frozenset[int]]:
        return [frozenset(self.labels[v] for v in comp) for comp in components(self.graph)]

    def labelled_edges(self) -> list[tuple[int, int]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.graph.edges()]

    def to_json(self) -> dict:
        return {"vertices": list(self.labels), "edges": [list(e) for e in self.labelled_edges()]}


def _from_cliques(primes: set[int], cliques: list[set[int]]) -> LabeledCharGraph:
    labels = tuple(sorted(primes))
    pos = {p: i for i, p in enumerate(labels)}
    edges = set()
    for c in cliques:
        for a, b in combinations(sorted(c), 2):
            edges.add((pos[a], pos[b]))
    return LabeledCharGraph(Graph(len(labels), sorted(edges)), labels)


def delta_psl2(params: PSL2Params) -> LabeledCharGraph:
    """Character-graph of PSL_2(q), q = u**f >= 4.

    * q even: complete components {2}, pi(q-1), pi(q+1).
    * q odd, q > 5: {u} isolated; pi(q**2 - 1) is complete when q-1 or q+1 is a
      power of 2, otherwise 2 is adjacent to everything, M = pi(q-1) - {2} and
      P = pi(q+1) - {2} are cliques, and there are no M-P edges.
    * q = 5 uses the q = 4 structure, since PSL_2(5) and PSL_2(4) are isomorphic.
    """
    q = params.q
    if q == 5:
        return delta_psl2(PSL2Params(2, 2))
    lower, upper = prime_set(q - 1), prime_set(q + 1)
    primes = {params.u} | lower | upper
    if q % 2 == 0:
        return _from_cliques(primes, [{2}, set(lower), set(upper)])
    if is_power_of_two(q - 1) or is_power_of_two(q + 1):
        return _from_cliques(primes, [{params.u}, set(lower | upper)])
    m, p = set(lower) - {2}, set(upper) - {2}
    return _from_cliques(primes, [{params.u}, m | {2}, p | {2}])


class Admissibility(enum.Enum):
    ADMISSIBLE_COMPLETE = "AdmissibleComplete"
    ADMISSIBLE_COCKTAIL_PARTY = "AdmissibleCocktailParty"
    EXCLUDED_FORBIDDEN_F = "ExcludedForbiddenF"
    EXCLUDED_NON_BIPARTITE_COMPLEMENT = "ExcludedNonBipartiteComplement"
    EXCLUDED_DISCONNECTED = "ExcludedDisconnected"
    EXCLUDED_BELOW_MINUS_TWO = "ExcludedBelowMinusTwo"
    EXCLUDED_EXCEPTIONAL = "ExcludedExceptional"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    kind: Admissibility
    param: Optional[int] = None
    reason: Optional[str] = None

    def to_json(self) -> dict:
        out: dict = {"tag": self.kind.value}
        if self.param is not None:
            out["param"] = self.param
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def regular_chargraph_admissibility(g: Graph) -> AdmissibilityVerdict:
    """Necessary-condition filter for a regular graph to be a character-graph.

    "Admissible" means no in-scope result excludes the graph, not that some
    group realises it. A least eigenvalue below -2 is reported as
    ``EXCLUDED_BELOW_MINUS_TWO`` without a judgement either way.
    """
    k = regularity(g)
    if k is None:
        return AdmissibilityVerdict(Admissibility.OUT_OF_SCOPE, reason="not regular")
    if not is_connected(g):
        if g.n in (2, 3) and g.num_edges == 0:
            return AdmissibilityVerdict(Admissibility.OUT_OF_SCOPE, reason="degree < 2 regime")
        return AdmissibilityVerdict(Admissibility.EXCLUDED_DISCONNECTED)
    if k < 2:
        return AdmissibilityVerdict(Admissibility.OUT_OF_SCOPE, reason="degree < 2 regime")
    if g.n >= 3 and is_bipartite(complement(g)) is None:
        return AdmissibilityVerdict(Admissibility.EXCLUDED_NON_BIPARTITE_COMPLEMENT)
    cls = min_eig_class(g)
    if cls is MinEigClass.LESS_THAN_MINUS_2:
        return AdmissibilityVerdict(Admissibility.EXCLUDED_BELOW_MINUS_TWO)
    verdict = classify_regular_connected(g, cls)
    if verdict.kind is Verdict.COMPLETE:
        return AdmissibilityVerdict(Admissibility.ADMISSIBLE_COMPLETE, verdict.param)
    if verdict.kind is Verdict.COCKTAIL_PARTY:
        return AdmissibilityVerdict(Admissibility.ADMISSIBLE_COCKTAIL_PARTY, verdict.param)
    if verdict.kind is Verdict.FORBIDDEN_F:
        return AdmissibilityVerdict(Admissibility.EXCLUDED_FORBIDDEN_F, verdict.param)
    # regular exceptional graphs have non-bipartite complements, and a line
    # graph with bipartite complement is K_m, CP(m) or F(m); both branches
    # below would contradict those facts
    if verdict.kind is Verdict.EXCEPTIONAL_LAYER:
        raise InternalConsistencyError("exceptional graph survived the complement test")
    raise InternalConsistencyError(f"unexpected verdict {verdict.to_json()} with bipartite complement")
