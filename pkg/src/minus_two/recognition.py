"""Line-graph recognition, root recovery and classification of regular connected graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .canon import is_isomorphic
from .errors import DomainError, InternalConsistencyError
from .families import forbidden_f, line_graph
from .formats import parse_graph6, write_graph6
from .graph import (Graph, _bits, complement, is_bipartite, is_connected, regularity,
                    semi_regular_parameters)
from .spectral import MinEigClass, min_eig_class

# The nine minimal non-line graphs as graph6, with (vertices, edges).
BEINEKE_GRAPH6 = (
    "CF",    # (4, 3)  claw K_{1,3}
    "D]w",   # (5, 7)
    "Dn{",   # (5, 9)  K_5 minus an edge
    "E`Xg",  # (6, 7)
    "Ehf_",  # (6, 8)
    "E~@g",  # (6, 9)
    "E^eG",  # (6, 9)
    "Ehfw",  # (6, 10)
    "EyVw",  # (6, 11)
)


@lru_cache(maxsize=None)
def beineke_graphs() -> tuple[Graph, ...]:
    return tuple(parse_graph6(s) for s in BEINEKE_GRAPH6)


def find_induced(g: Graph, h: Graph) -> Optional[list[int]]:
    """An injective map ``V(h) -> V(g)`` realising ``h`` as an induced subgraph, or None."""
    k = h.n
    if k > g.n:
        return None
    if k == 0:
        return []
    # map high-degree pattern vertices first; it constrains the search soonest
    order = sorted(range(k), key=lambda v: -h.degree(v))
    hdeg = [h.degree(v) for v in order]
    hadj = [[h.adjacent(order[a], order[b]) for b in range(k)] for a in range(k)]
    gdeg = g.degrees()
    full = (1 << g.n) - 1
    image: list[int] = []

    def extend(depth: int, used: int) -> bool:
        if depth == k:
            return True
        cand = full & ~used
        for i in range(depth):
            cand &= g.rows[image[i]] if hadj[i][depth] else ~g.rows[image[i]]
        for v in _bits(cand):
            if gdeg[v] < hdeg[depth]:
                continue
            image.append(v)
            if extend(depth + 1, used | (1 << v)):
                return True
            image.pop()
        return False

    if not extend(0, 0):
        return None
    out = [0] * k
    for a, v in enumerate(image):
        out[order[a]] = v
    return out


def forbidden_witness(g: Graph) -> Optional[tuple[int, list[int]]]:
    """``(index into BEINEKE_GRAPH6, vertex map)`` for the first forbidden subgraph found."""
    for idx, h in enumerate(beineke_graphs()):
        hit = find_induced(g, h)
        if hit is not None:
            return idx, hit
    return None


def is_line_graph(g: Graph) -> bool:
    """Beineke test: no induced subgraph is one of the nine minimal non-line graphs."""
    return forbidden_witness(g) is None


@dataclass(frozen=True)
class RegularRoot:
    r: int


@dataclass(frozen=True)
class SemiRegularBipartiteRoot:
    n1: int
    n2: int
    r1: int
    r2: int

    def __post_init__(self):
        if self.n1 * self.r1 != self.n2 * self.r2:
            raise InternalConsistencyError("semi-regular bipartite parameters need n1*r1 == n2*r2")


RootKind = Union[RegularRoot, SemiRegularBipartiteRoot]


def root_kind(root: Graph) -> Optional[RootKind]:
    """Regular takes precedence when a root is both regular and semi-regular bipartite."""
    r = regularity(root)
    if r is not None:
        return RegularRoot(r)
    params = semi_regular_parameters(root)
    return SemiRegularBipartiteRoot(*params) if params else None


def krausz_partition(g: Graph) -> Optional[list[int]]:
    """Clique partition of the edges with every vertex in at most two cliques.

    Cliques are vertex bitmasks. The search always covers the lowest uncovered
    edge next, trying the cliques through it largest first.
    """
    n = g.n
    uncovered = list(g.rows)
    count = [0] * n
    cliques: list[int] = []

    def extensions(cand: int) -> list[int]:
        # all cliques (as masks, including empty) inside cand w.r.t. uncovered edges
        out = [0]
        for v in _bits(cand):
            out += [c | (1 << v) for c in out if (uncovered[v] & c) == c]
        out.sort(key=lambda c: (-c.bit_count(), c))
        return out

    def search() -> bool:
        u = next((v for v in range(n) if uncovered[v]), None)
        if u is None:
            return True
        v = (uncovered[u] & -uncovered[u]).bit_length() - 1
        if count[u] >= 2 or count[v] >= 2:
            return False
        open_ = sum(1 << w for w in range(n) if count[w] < 2)
        for ext in extensions(uncovered[u] & uncovered[v] & open_):
            clique = ext | (1 << u) | (1 << v)
            members = list(_bits(clique))
            for w in members:
                uncovered[w] &= ~clique
                count[w] += 1
            if all(count[w] < 2 or not uncovered[w] for w in members):
                cliques.append(clique)
                if search():
                    return True
                cliques.pop()
            for w in members:
                uncovered[w] |= clique & g.rows[w]
                count[w] -= 1
        return False

    return cliques if search() else None


def root_graph(g: Graph) -> Optional[tuple[Graph, Optional[RootKind]]]:
    """A graph whose line graph is ``g`` (connected input), with its root kind.

    K_3 has the two roots K_3 and K_{1,3}; the search returns K_{1,3}.
    """
    if not is_connected(g):
        raise DomainError("root_graph needs a connected graph")
    cliques = krausz_partition(g)
    if cliques is None:
        return None
    ends: list[list[int]] = [[] for _ in range(g.n)]
    for c_idx, c in enumerate(cliques):
        for v in _bits(c):
            ends[v].append(c_idx)
    nroot = len(cliques)
    edges = []
    for v in range(g.n):
        e = list(ends[v])
        while len(e) < 2:
            e.append(nroot)
            nroot += 1
        edges.append((e[0], e[1]))
    root = Graph(nroot, edges)
    if not is_isomorphic(line_graph(root), g):
        raise InternalConsistencyError("recovered root does not reproduce the input")
    return root, root_kind(root)


def is_cocktail_party(g: Graph) -> Optional[int]:
    """``m`` if ``g`` is CP(m), i.e. its complement is a perfect matching."""
    if g.n < 2 or g.n % 2 or regularity(g) != g.n - 2:
        return None
    return g.n // 2 if regularity(complement(g)) == 1 else None


def is_forbidden_f(g: Graph) -> Optional[int]:
    if g.n < 6 or g.n % 2 or regularity(g) != g.n // 2:
        return None
    return g.n // 2 if is_isomorphic(g, forbidden_f(g.n // 2)) else None


def exceptional_layers(n: int, r: int) -> list[str]:
    """Layers whose order formula fits an r-regular graph on n vertices."""
    out = []
    if n == 2 * (r + 2) and n <= 28:
        out.append("A")
    if 2 * n == 3 * (r + 2) and n <= 27:
        out.append("B")
    if 3 * n == 4 * (r + 2) and n <= 16:
        out.append("C")
    return out


class Verdict(enum.Enum):
    COMPLETE = "Complete"
    ODD_CYCLE = "OddCycle"
    COCKTAIL_PARTY = "CocktailParty"
    FORBIDDEN_F = "ForbiddenF"
    LINE_GRAPH = "LineGraph"
    EXCEPTIONAL_LAYER = "ExceptionalLayer"
    BELOW_MINUS_TWO = "BelowMinusTwo"
    NOT_REGULAR_CONNECTED = "NotRegularConnected"


@dataclass(frozen=True)
class Classification:
    kind: Verdict
    param: Optional[int] = None
    root: Optional[Graph] = field(default=None, compare=False)
    root_kind: Optional[RootKind] = None
    layer: Optional[str] = None
    n: Optional[int] = None
    r: Optional[int] = None

    def __post_init__(self):
        if self.kind is Verdict.EXCEPTIONAL_LAYER and exceptional_layers(self.n, self.r) != [self.layer]:
            raise InternalConsistencyError(f"layer {self.layer} does not fit n={self.n}, r={self.r}")
        if self.kind is Verdict.LINE_GRAPH and self.root is None:
            raise InternalConsistencyError("LineGraph verdict needs a root")

    def to_json(self) -> dict:
        out: dict = {"tag": self.kind.value}
        if self.param is not None:
            out["param"] = self.param
        if self.kind is Verdict.LINE_GRAPH:
            out["root"] = write_graph6(self.root)
            if isinstance(self.root_kind, RegularRoot):
                out["root_kind"] = {"tag": "Regular", "r": self.root_kind.r}
            elif isinstance(self.root_kind, SemiRegularBipartiteRoot):
                rk = self.root_kind
                out["root_kind"] = {"tag": "SemiRegularBipartite", "n1": rk.n1, "n2": rk.n2,
                                    "r1": rk.r1, "r2": rk.r2}
        if self.kind is Verdict.EXCEPTIONAL_LAYER:
            out.update(layer=self.layer, n=self.n, r=self.r)
        return out


def classify_regular_connected(g: Graph, eig_class: Optional[MinEigClass] = None) -> Classification:
    """Place a connected regular graph in the spectral classification.

    ``eig_class`` may be passed when it is already known, to skip recomputing it.
    """
    k = regularity(g)
    if k is None or not is_connected(g):
        return Classification(Verdict.NOT_REGULAR_CONNECTED)
    cls = eig_class if eig_class is not None else min_eig_class(g)
    if cls is MinEigClass.LESS_THAN_MINUS_2:
        return Classification(Verdict.BELOW_MINUS_TWO)
    if cls is MinEigClass.GREATER_THAN_MINUS_2:
        if k == g.n - 1:
            return Classification(Verdict.COMPLETE, g.n)
        if k == 2 and g.n % 2:
            return Classification(Verdict.ODD_CYCLE, g.n)
        raise InternalConsistencyError("regular connected graph with lambda_min > -2 is neither complete nor an odd cycle")
    m = is_cocktail_party(g)
    if m is not None:
        return Classification(Verdict.COCKTAIL_PARTY, m)
    f = is_forbidden_f(g)
    if f is not None:
        return Classification(Verdict.FORBIDDEN_F, f)
    if is_line_graph(g):
        found = root_graph(g)
        if found is None:
            raise InternalConsistencyError("Beineke test and Krausz search disagree")
        root, kind = found
        if kind is None:
            raise InternalConsistencyError("root of a regular connected line graph is neither regular nor semi-regular bipartite")
        return Classification(Verdict.LINE_GRAPH, root=root, root_kind=kind)
    layers = exceptional_layers(g.n, k)
    if len(layers) != 1:
        raise InternalConsistencyError(f"exceptional graph with n={g.n}, r={k} fits layers {layers}")
    return Classification(Verdict.EXCEPTIONAL_LAYER, layer=layers[0], n=g.n, r=k)


def exceptional_complement_check(g: Graph) -> bool:
    """True iff the complement of a regular exceptional graph is non-bipartite."""
    if classify_regular_connected(g).kind is not Verdict.EXCEPTIONAL_LAYER:
        raise DomainError("graph is not a regular exceptional graph")
    return is_bipartite(complement(g)) is None
