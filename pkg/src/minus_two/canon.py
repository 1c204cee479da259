"""Canonical labelling by partition refinement and individualisation.

The search explores the individualisation-refinement tree, keeps the leaf with
the largest relabelled adjacency code, and uses automorphisms discovered along
the way to prune: at nodes on the first path only one child per orbit of the
pointwise stabiliser is explored, and a leaf equivalent to the first leaf sends
the search straight back to the first path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, _bits


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]
    """``order[i]`` is the vertex that receives canonical label ``i``."""
    code: tuple[int, ...]
    """Adjacency rows of the canonically relabelled graph."""
    generators: tuple[tuple[int, ...], ...]
    """Automorphisms found during the search; they generate the full group."""


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Sub-cells are ordered by neighbour count, so the result is equivariant
    under relabelling.
    """
    n = len(rows)
    stable = False
    while not stable and len(cells) < n:
        stable = True
        i = 0
        while i < len(cells) and len(cells) < n:
            wmask = 0
            for v in cells[i]:
                wmask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                counts = [(rows[x] & wmask).bit_count() for x in cell]
                lo = min(counts)
                if lo == max(counts):
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for x, c in zip(cell, counts):
                    groups.setdefault(c, []).append(x)
                out.extend(groups[c] for c in sorted(groups))
                stable = False
            cells = out
            i += 1
    return cells


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                root[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.n = len(rows)
        self.first_order: Optional[list[int]] = None
        self.first_code: Optional[tuple[int, ...]] = None
        self.best_order: Optional[list[int]] = None
        self.best_code: Optional[tuple[int, ...]] = None
        self.gens: list[tuple[int, ...]] = []

    def code(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for k, v in enumerate(order):
            pos[v] = k
        rows = self.rows
        return tuple(sum(1 << pos[u] for u in _bits(rows[v])) for v in order)

    def _record(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        t = tuple(perm)
        if t not in self.gens and any(t[i] != i for i in range(self.n)):
            self.gens.append(t)

    def leaf(self, cells: list[list[int]], on_first: bool) -> bool:
        order = [c[0] for c in cells]
        code = self.code(order)
        if self.first_order is None:
            self.first_order, self.first_code = order, code
            self.best_order, self.best_code = order, code
            return False
        if code == self.first_code:
            self._record(self.first_order, order)
            return not on_first
        if code > self.best_code:
            self.best_order, self.best_code = order, code
        elif code == self.best_code:
            self._record(self.best_order, order)
        return False

    def visit(self, cells: list[list[int]], prefix: list[int], on_first: bool) -> bool:
        """Explore a node; returns True to unwind to the nearest first-path node."""
        if len(cells) == self.n:
            return self.leaf(cells, on_first)
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        head, tail = cells[:t], cells[t + 1:]
        if not on_first:
            for v in target:
                child = head + [[v], [x for x in target if x != v]] + tail
                if self.visit(_refine(self.rows, child), prefix + [v], False):
                    return True
            return False
        tried: list[int] = []
        for idx, v in enumerate(target):
            if tried:
                stab = [g for g in self.gens if all(g[p] == p for p in prefix)]
                if stab:
                    roots = _orbit_roots(self.n, stab)
                    if any(roots[v] == roots[w] for w in tried):
                        continue
            child = head + [[v], [x for x in target if x != v]] + tail
            self.visit(_refine(self.rows, child), prefix + [v], idx == 0)
            tried.append(v)
        return False


def canonical_labelling(g: Graph, partition: Optional[Sequence[Sequence[int]]] = None) -> Labelling:
    """Canonical labelling of ``g``, optionally respecting an ordered vertex colouring."""
    if g.n == 0:
        return Labelling((), (), ())
    cells = [sorted(c) for c in partition] if partition is not None else [list(range(g.n))]
    search = _Search(g.rows)
    search.visit(_refine(g.rows, cells), [], True)
    return Labelling(tuple(search.best_order), search.best_code, tuple(search.gens))


def _key(n: int, code: tuple[int, ...]) -> bytes:
    width = (n + 7) // 8
    return n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in code)


def canonical_form(g: Graph) -> bytes:
    """Byte key equal for two graphs exactly when they are isomorphic."""
    return _key(g.n, canonical_labelling(g).code)


def canonical_graph(g: Graph) -> Graph:
    return Graph._trusted(canonical_labelling(g).code)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labelling(g).code == canonical_labelling(h).code


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits of the automorphism group, each sorted, by least element."""
    roots = _orbit_roots(g.n, list(canonical_labelling(g).generators))
    orbits: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        orbits.setdefault(r, []).append(v)
    return list(orbits.values())


def automorphism_group_order(g: Graph) -> int:
    """Order of Aut(g) by the orbit-stabiliser chain over individualised vertices."""
    order = 1
    fixed: list[int] = []
    cells: list[list[int]] = [list(range(g.n))]
    while True:
        lab = canonical_labelling(g, cells)
        roots = _orbit_roots(g.n, list(lab.generators))
        movable = [v for v in range(g.n) if v not in fixed]
        pick = None
        for v in movable:
            size = sum(1 for w in movable if roots[w] == roots[v])
            if size > 1:
                pick, orbit_size = v, size
                break
        if pick is None:
            return order
        order *= orbit_size
        fixed.append(pick)
        # individualise by colour: fixed vertices first, in order, then the rest
        cells = [[v] for v in fixed] + [[v for v in range(g.n) if v not in fixed]]
