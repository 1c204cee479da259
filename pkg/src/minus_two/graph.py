"""Immutable simple graphs on vertices ``0..n-1`` and their combinatorial primitives.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections and degree counts are single integer operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import DomainError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple graph with vertex set ``{0, ..., n-1}``.

    Equality and hashing are *labelled*: two graphs compare equal only when
    they have the same vertex count and the same edge set. Use
    :func:`is_isomorphic` for equality up to relabelling.
    """

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self._n = n
        self._rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks; validates symmetry and loop-freeness."""
        n = len(rows)
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full or (r >> i) & 1:
                raise DomainError(f"row {i} has bits outside the vertex range or a loop")
            for j in _bits(r):
                if not (rows[j] >> i) & 1:
                    raise DomainError(f"adjacency not symmetric at ({i}, {j})")
        return cls._trusted(tuple(rows))

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g._n = len(rows)
        g._rows = rows
        return g

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError("adjacency matrix must be square")
        n = a.shape[0]
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]])

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitmasks: bit ``j`` of ``rows[i]`` is set iff ``i ~ j``."""
        return self._rows

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self._rows[i] >> j) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self._n) for j in _bits(self._rows[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in increasing vertex order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range for n={g.n}")
    pos = {v: k for k, v in enumerate(vs)}
    rows = []
    for v in vs:
        rows.append(sum(1 << pos[u] for u in _bits(g.rows[v]) if u in pos))
    return Graph._trusted(tuple(rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced(g, [v for v in range(g.n) if v not in drop])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.rows)
        offset += h.n
    return Graph._trusted(tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between ``V(g)`` and ``V(h)``."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph._trusted(tuple(rows))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
    if sorted(order) != list(range(g.n)):
        raise DomainError("order must be a permutation of the vertex set")
    pos = [0] * g.n
    for k, v in enumerate(order):
        pos[v] = k
    rows = tuple(sum(1 << pos[u] for u in _bits(g.rows[v])) for v in order)
    return Graph._trusted(rows)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by their least vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has exactly one component (the 0-vertex graph is not connected)."""
    return len(components(g)) == 1


def cut_edges(g: Graph) -> list[tuple[int, int]]:
    base = len(components(g))
    out = []
    for i, j in g.edges():
        rows = list(g.rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        if len(components(Graph._trusted(tuple(rows)))) > base:
            out.append((i, j))
    return out


def two_coloring(g: Graph) -> tuple[Optional[list[int]], Optional[list[int]]]:
    """BFS 2-colouring.

    Returns ``(colour, None)`` on success, with the lowest vertex of every
    component coloured 0, or ``(None, walk)`` where ``walk`` is a closed walk
    of odd length (first vertex repeated at the end).
    """
    colour = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in _bits(g.rows[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    parent[u] = v
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None, _odd_walk(parent, u, v)
    return colour, None


def _odd_walk(parent: list[int], u: int, v: int) -> list[int]:
    # u and v have equal BFS depth parity; tree paths to the root plus edge uv close an odd walk.
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    pv = [v]
    while parent[pv[-1]] != -1:
        pv.append(parent[pv[-1]])
    # both tree paths end at the component root; drop its duplicate
    return pu + pv[::-1][1:] + [u]


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    colour, _ = two_coloring(g)
    if colour is None:
        return None
    left = frozenset(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


def regularity(g: Graph) -> Optional[int]:
    """Common degree if ``g`` is regular; 0 for the 0-vertex graph."""
    if g.n == 0:
        return 0
    degs = g.degrees()
    return degs[0] if all(d == degs[0] for d in degs) else None


def semi_regular_parameters(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """``(n1, n2, r1, r2)`` if ``g`` is connected, bipartite and constant-degree per side.

    The smaller side is listed first.
    """
    if not is_connected(g) or g.n < 2:
        return None
    parts = is_bipartite(g)
    if parts is None:
        return None
    sides = sorted([sorted(parts.left), sorted(parts.right)], key=len)
    params = []
    for side in sides:
        degs = {g.degree(v) for v in side}
        if len(degs) != 1:
            return None
        params.append(degs.pop())
    return len(sides[0]), len(sides[1]), params[0], params[1]


def clique_number(g: Graph) -> int:
    """Order of a largest clique (0 for the 0-vertex graph)."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        # colour-free bound: size + |cand| cannot beat best
        if size + cand.bit_count() <= best:
            return
        # pivot on the candidate with most neighbours inside cand
        pivot = max(_bits(cand), key=lambda v: (g.rows[v] & cand).bit_count())
        for v in _bits(cand & ~g.rows[pivot]):
            expand(size + 1, cand & g.rows[v])
            cand &= ~(1 << v)
            if size + cand.bit_count() <= best:
                return

    expand(0, (1 << g.n) - 1)
    return best


def find_clique(g: Graph, size: int) -> Optional[list[int]]:
    """Some clique with exactly ``size`` vertices, or None."""

    def grow(chosen: list[int], cand: int) -> Optional[list[int]]:
        if len(chosen) == size:
            return chosen
        if len(chosen) + cand.bit_count() < size:
            return None
        for v in _bits(cand):
            found = grow(chosen + [v], cand & g.rows[v] & ~((1 << (v + 1)) - 1))
            if found is not None:
                return found
        return None

    return grow([], (1 << g.n) - 1)


def has_c5_subgraph(g: Graph) -> bool:
    """True iff some 5 distinct vertices carry a (not necessarily induced) 5-cycle."""
    rows = g.rows
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        # paths s-a-b-c-d with all vertices above s, closing d~s
        for a in _bits(rows[s] & higher):
            for b in _bits(rows[a] & higher & ~(1 << a)):
                for c in _bits(rows[b] & higher & ~(1 << a) & ~(1 << b)):
                    if rows[c] & rows[s] & higher & ~((1 << a) | (1 << b) | (1 << c)):
                        return True
    return False


def matching_number(g: Graph) -> int:
    """Size of a maximum matching.

    Exhaustive search for at most 24 edges, Edmonds' blossom algorithm above.
    """
    if g.num_edges <= 24:
        return exhaustive_matching_number(g)
    return len(maximum_matching(g))


def exhaustive_matching_number(g: Graph) -> int:
    edges = g.edges()
    best = 0

    def search(k: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - k) <= best or size + (g.n - used.bit_count()) // 2 <= best:
            return
        for idx in range(k, len(edges)):
            i, j = edges[idx]
            m = (1 << i) | (1 << j)
            if not used & m:
                search(idx + 1, used | m, size + 1)

    search(0, 0, 0)
    return best


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum cardinality matching via Edmonds' blossom contraction."""
    return _augment_all(g.n, [g.neighbors(v) for v in range(g.n)])


def _augment_all(n: int, adj: list[list[int]]) -> list[tuple[int, int]]:
    match = [-1] * n

    for root in range(n):
        if match[root] != -1:
            continue
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        end = -1

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue and end == -1:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        end = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end] = pv
            match[pv] = end
            end = nxt
    return [(v, match[v]) for v in range(n) if match[v] > v]
