"""Deterministic constructors for the named graph families.

Vertex orders are part of each constructor's contract so that graph6 output
is reproducible:

* ``complete_bipartite(m, n)``: left side ``0..m-1``, right side ``m..m+n-1``.
* ``cocktail_party(m)``: vertices ``2i`` and ``2i+1`` are the non-adjacent pairs.
* ``forbidden_f(n)``: cliques ``0..n-1`` and ``n..2n-1``, matched by ``i ~ n+i``.
* ``line_graph(g)``: vertex ``k`` is the ``k``-th edge of ``g`` in lexicographic order.
* ``generalized_line_graph(g, a)``: line-graph vertices first, then one
  cocktail-party block per root vertex, in root-vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import DomainError, InternalConsistencyError
from .graph import Graph, complement, delete_vertices, regularity


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 0:
        raise DomainError(f"K_n needs n >= 0, got {n}")
    return complement(Graph(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"C_n needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"P_n needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 0 or n < 0:
        raise DomainError(f"K_(m,n) needs m, n >= 0, got ({m}, {n})")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cocktail_party(m: int) -> Graph:
    """CP(m): complement of ``m`` disjoint copies of K_2; (2m-2)-regular on 2m vertices."""
    if m < 1:
        raise DomainError(f"CP(m) needs m >= 1, got {m}")
    return Graph(2 * m, [(i, j) for i in range(2 * m) for j in range(i + 1, 2 * m) if i // 2 != j // 2])


def forbidden_f(n: int) -> Graph:
    """Two disjoint n-cliques joined by the perfect matching ``i ~ n+i``."""
    if n < 3:
        raise DomainError(f"F(n) needs n >= 3, got {n}")
    edges = [(i, j) for i, j in combinations(range(n), 2)]
    edges += [(n + i, n + j) for i, j in combinations(range(n), 2)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of a 5-set, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    return Graph(10, [(a, b) for a, b in combinations(range(10), 2) if not set(pairs[a]) & set(pairs[b])])


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    out = []
    for a, b in combinations(range(len(edges)), 2):
        if len(set(edges[a]) & set(edges[b])) == 1:
            out.append((a, b))
    return Graph(len(edges), out)


def generalized_line_graph(g: Graph, multiplicities: Sequence[int]) -> Graph:
    """L(g; a_1, ..., a_n): line graph plus a CP(a_i) petal at each root vertex i.

    Every line-graph vertex ``ij`` is joined to all of CP(a_i) and CP(a_j);
    ``a_i = 0`` contributes no petal.
    """
    if len(multiplicities) != g.n:
        raise DomainError(f"need {g.n} multiplicities, got {len(multiplicities)}")
    if any(a < 0 for a in multiplicities):
        raise DomainError("multiplicities must be non-negative")
    edges = g.edges()
    base = len(edges)
    lg_edges = line_graph(g).edges()
    blocks = []
    start = base
    for a in multiplicities:
        blocks.append(range(start, start + 2 * a))
        start += 2 * a
    out = list(lg_edges)
    for block in blocks:
        out += [(u, v) for u, v in combinations(block, 2) if (u - block.start) // 2 != (v - block.start) // 2]
    for k, (i, j) in enumerate(edges):
        for w in (i, j):
            out += [(k, u) for u in blocks[w]]
    return Graph(start, out)


def switch(g: Graph, subset: Iterable[int]) -> Graph:
    """Seidel switching: complement adjacency across the cut ``(U, V - U)``."""
    u = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range for n={g.n}")
        u |= 1 << v
    full = (1 << g.n) - 1
    rows = []
    for v, r in enumerate(g.rows):
        other = full & ~u if (u >> v) & 1 else u
        rows.append((r & ~other) | (~r & other))
    return Graph._trusted(tuple(rows))


def schlafli(vertex: int = 0) -> Graph:
    """Switch L(K_8) about the neighbourhood of ``vertex`` and delete ``vertex``.

    The default deletes the line-graph vertex of edge {0, 1}.
    """
    lk8 = line_graph(complete(8))
    switched = switch(lk8, lk8.neighbors(vertex))
    if switched.rows[vertex]:
        raise InternalConsistencyError("switched vertex is not isolated")
    out = delete_vertices(switched, [vertex])
    if out.n != 27 or regularity(out) != 16:
        raise InternalConsistencyError("Schlafli construction is not 16-regular on 27 vertices")
    return out


def clebsch(right_pair: tuple[int, int] = (0, 1)) -> Graph:
    """Switch L(K_{4,4}) about the copy of L(K_{4,2}) on two right-side vertices.

    ``right_pair`` indexes the right side ``0..3``; the default uses its first two vertices.
    """
    kb = complete_bipartite(4, 4)
    lg = line_graph(kb)
    chosen = {4 + right_pair[0], 4 + right_pair[1]}
    subset = [k for k, (i, j) in enumerate(kb.edges()) if j in chosen]
    out = switch(lg, subset)
    if out.n != 16 or regularity(out) != 10:
        raise InternalConsistencyError("Clebsch construction is not 10-regular on 16 vertices")
    return out


# Declarative family descriptions, used by the CLI and by tests that sweep families.


@dataclass(frozen=True)
class Complete:
    n: int

    def build(self) -> Graph:
        return complete(self.n)


@dataclass(frozen=True)
class Cycle:
    n: int

    def build(self) -> Graph:
        return cycle(self.n)


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int

    def build(self) -> Graph:
        return complete_bipartite(self.m, self.n)


@dataclass(frozen=True)
class CocktailParty:
    m: int

    def build(self) -> Graph:
        return cocktail_party(self.m)


@dataclass(frozen=True)
class ForbiddenF:
    n: int

    def build(self) -> Graph:
        return forbidden_f(self.n)


@dataclass(frozen=True)
class LineOf:
    root: "FamilySpec"

    def build(self) -> Graph:
        return line_graph(self.root.build())


@dataclass(frozen=True)
class GeneralizedLine:
    root: "FamilySpec"
    multiplicities: tuple[int, ...]

    def build(self) -> Graph:
        return generalized_line_graph(self.root.build(), self.multiplicities)


@dataclass(frozen=True)
class Switch:
    base: "FamilySpec"
    subset: frozenset[int]

    def build(self) -> Graph:
        return switch(self.base.build(), self.subset)


@dataclass(frozen=True)
class Schlafli:
    def build(self) -> Graph:
        return schlafli()


@dataclass(frozen=True)
class Clebsch:
    def build(self) -> Graph:
        return clebsch()


@dataclass(frozen=True)
class Petersen:
    def build(self) -> Graph:
        return petersen()


FamilySpec = Union[Complete, Cycle, CompleteBipartite, CocktailParty, ForbiddenF, LineOf,
                   GeneralizedLine, Switch, Schlafli, Clebsch, Petersen]
