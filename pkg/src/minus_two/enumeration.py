"""Orderly enumeration of graphs up to isomorphism by canonical augmentation.

Every graph on ``m + 1`` vertices is built from one parent on ``m`` vertices
by adding a vertex joined to a subset of the parent. A child is kept only when
the added vertex lies in the automorphism orbit of a canonically chosen vertex
(the last vertex, in canonical order, among those with the largest
``(degree, sorted neighbour degrees)`` invariant). Isomorphic children of one
parent are removed by their canonical codes. Every class therefore appears
exactly once, with no global table of seen graphs.

Filters that pass to induced subgraphs (bounded degree, bipartite complement,
least eigenvalue at least -2 or above -2) prune the tree at every level.
Connectedness and exact regularity are checked on the final level only.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .canon import _key, _orbit_roots, canonical_labelling
from .errors import DomainError
from .graph import Graph, _bits, complement, is_bipartite, is_connected
from .spectral import MinEigClass, min_eig_class

MAX_N = 10

NOT_BELOW = frozenset({MinEigClass.GREATER_THAN_MINUS_2, MinEigClass.EQUALS_MINUS_2})


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    connected: Optional[bool] = None
    regular_degree: Optional[int] = None
    min_eig_classes: Optional[frozenset[MinEigClass]] = None
    """Allowed least-eigenvalue classes; None allows all three."""
    complement_bipartite: Optional[bool] = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise DomainError(f"enumeration supports 0 <= n <= {MAX_N}, got {self.n}")
        if self.regular_degree is not None and not 0 <= self.regular_degree < max(self.n, 1):
            raise DomainError(f"no {self.regular_degree}-regular graphs on {self.n} vertices")
        if self.min_eig_classes is not None and not self.min_eig_classes:
            raise DomainError("min_eig_classes must be non-empty or None")

    def hereditary_eig(self) -> Optional[frozenset[MinEigClass]]:
        """Classes every induced subgraph of an accepted graph must lie in."""
        allowed = self.min_eig_classes
        if allowed is None or MinEigClass.LESS_THAN_MINUS_2 in allowed:
            return None
        if allowed == {MinEigClass.GREATER_THAN_MINUS_2}:
            return allowed
        return NOT_BELOW


def _invariant(rows: tuple[int, ...], v: int) -> tuple:
    return (rows[v].bit_count(), sorted(rows[u].bit_count() for u in _bits(rows[v])))


def _accepts(rows: tuple[int, ...], code_out: list) -> bool:
    """Canonical-deletion test for the last vertex of ``rows``."""
    n = len(rows)
    new = n - 1
    invs = [_invariant(rows, v) for v in range(n)]
    top = max(invs)
    if invs[new] != top:
        return False
    lab = canonical_labelling(Graph._trusted(rows))
    candidates = [v for v in lab.order if invs[v] == top]
    chosen = candidates[-1]
    if chosen != new:
        roots = _orbit_roots(n, list(lab.generators))
        if roots[chosen] != roots[new]:
            return False
    code_out.append(lab.code)
    return True


class _Expander:
    def __init__(self, spec: EnumerationSpec):
        self.spec = spec
        self.k = spec.regular_degree
        self.eig = spec.hereditary_eig()

    def children(self, code: tuple[int, ...]) -> list[tuple[int, ...]]:
        m = len(code)
        n = self.spec.n
        size = m + 1
        degs = [r.bit_count() for r in code]
        if self.k is not None:
            floor = self.k - (n - size)
            # vertices at the old floor must gain an edge, saturated ones cannot
            forced = [v for v in range(m) if degs[v] < floor]
            if any(degs[v] + 1 < floor for v in forced):
                return []
            optional = [v for v in range(m) if degs[v] >= floor and degs[v] < self.k]
            lo, hi = max(floor, 0), self.k
            subsets = (forced + list(extra)
                       for r in range(max(lo - len(forced), 0), min(hi - len(forced), len(optional)) + 1)
                       for extra in combinations(optional, r))
        else:
            subsets = (list(s) for r in range(m + 1) for s in combinations(range(m), r))
        seen: set[tuple[int, ...]] = set()
        out = []
        for s in subsets:
            mask = 0
            for v in s:
                mask |= 1 << v
            bit = 1 << m
            rows = tuple(r | bit if (mask >> v) & 1 else r for v, r in enumerate(code)) + (mask,)
            if self.spec.complement_bipartite and is_bipartite(complement(Graph._trusted(rows))) is None:
                continue
            got: list = []
            if not _accepts(rows, got):
                continue
            child = got[0]
            if child in seen:
                continue
            seen.add(child)
            if self.eig is not None and min_eig_class(Graph._trusted(child)) not in self.eig:
                continue
            out.append(child)
        return out

    def final_ok(self, code: tuple[int, ...]) -> bool:
        g = Graph._trusted(code)
        spec = self.spec
        if self.k is not None and any(r.bit_count() != self.k for r in code):
            return False
        if spec.connected is not None and is_connected(g) != spec.connected:
            return False
        if spec.complement_bipartite is False and is_bipartite(complement(g)) is not None:
            return False
        if spec.min_eig_classes is not None and min_eig_class(g) not in spec.min_eig_classes:
            return False
        return True

    def expand(self, code: tuple[int, ...]) -> list[tuple[int, ...]]:
        """All final-level descendants of ``code`` that pass the filters."""
        if len(code) == self.spec.n:
            return [code] if self.final_ok(code) else []
        out = []
        for child in self.children(code):
            out.extend(self.expand(child))
        return out


def _expand_shard(args: tuple[EnumerationSpec, list[tuple[int, ...]]]) -> list[tuple[int, ...]]:
    spec, codes = args
    ex = _Expander(spec)
    out = []
    for c in codes:
        out.extend(ex.expand(c))
    return out


def default_jobs() -> int:
    raw = os.environ.get("MINUS_TWO_JOBS")
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise DomainError(f"MINUS_TWO_JOBS must be an integer, got {raw!r}") from None
    return max(jobs, 1)


def enumerate_codes(spec: EnumerationSpec, jobs: Optional[int] = None) -> list[tuple[int, ...]]:
    """Canonical adjacency codes of the accepted graphs, sorted by canonical key."""
    jobs = default_jobs() if jobs is None else jobs
    if spec.n == 0:
        return [()] if _Expander(spec).final_ok(()) else []
    ex = _Expander(spec)
    root: tuple[int, ...] = (0,)
    if jobs <= 1:
        found = ex.expand(root)
    else:
        # grow the frontier breadth-first until there is enough work to share
        frontier = [root]
        while frontier and len(frontier[0]) < spec.n and len(frontier) < 8 * jobs:
            frontier = [c for code in frontier for c in ex.children(code)]
        shards = [frontier[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [c for part in pool.map(_expand_shard, [(spec, s) for s in shards]) for c in part]
    return sorted(found, key=lambda c: _key(spec.n, c))


def enumerate_graphs(spec: EnumerationSpec, jobs: Optional[int] = None) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class passing ``spec``.

    The stream is in canonical-key order and does not depend on ``jobs``.
    """
    for code in enumerate_codes(spec, jobs):
        yield Graph._trusted(code)
