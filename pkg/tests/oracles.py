"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import numpy as np
import sympy

from minus_two import Graph, write_graph6

SEED = 20240611


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), [(idx[a], idx[b]) for a, b in h.edges()])


def atlas(max_n: int = 7) -> list[Graph]:
    """Every graph on 0..7 vertices, one per class, from the networkx atlas."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= max_n]


def brute_force_classes(n: int) -> set:
    """Isomorphism classes on n vertices by exhaustive edge subsets and WL-hash + isomorphism dedup."""
    pairs = list(combinations(range(n), 2))
    reps: dict[str, list[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for b, p in enumerate(pairs) if (mask >> b) & 1)
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
    return [r for b in reps.values() for r in b]


def min_eigenvalue(g: Graph) -> float:
    if g.n == 0:
        return float("inf")
    return float(np.linalg.eigvalsh(g.adjacency_matrix().astype(float))[0])


def float_class(g: Graph, tol: float = 1e-9) -> str:
    lam = min_eigenvalue(g) + 2
    if abs(lam) <= tol:
        return "eq"
    return "gt" if lam > 0 else "lt"


def sympy_char_poly(g: Graph) -> list[int]:
    """Coefficients of det(xI - A), constant term first, via sympy's Berkowitz routine."""
    m = sympy.Matrix(g.adjacency_matrix().tolist())
    return [int(c) for c in reversed(m.charpoly().all_coeffs())]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def random_graphs(count: int, max_n: int, seed: int = SEED) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n), rng.random()) for _ in range(count)]


def witness(g: Graph) -> str:
    return write_graph6(g)


def bareiss_det(matrix: list[list[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def char_poly_at(g: Graph, t: int) -> int:
    a = g.adjacency_matrix().tolist()
    return bareiss_det([[(t if i == j else 0) - a[i][j] for j in range(g.n)] for i in range(g.n)])


def labelled_regular_graphs(n: int, k: int):
    """Every labelled k-regular graph on n vertices, by edge backtracking."""
    pairs = list(combinations(range(n), 2))
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(pairs):
            if all(d == k for d in deg):
                yield Graph(n, chosen)
            return
        a, b = pairs[i]
        # (a, n-1) is the last pair at a, so a must be saturated after it
        if deg[a] < k and deg[b] < k:
            deg[a] += 1
            deg[b] += 1
            chosen.append((a, b))
            if not (b == n - 1 and deg[a] != k):
                yield from rec(i + 1)
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1
        if not (b == n - 1 and deg[a] != k):
            yield from rec(i + 1)

    yield from rec(0)


def dedup(graphs) -> list[nx.Graph]:
    reps: dict[str, list[nx.Graph]] = {}
    for g in graphs:
        h = to_nx(g)
        bucket = reps.setdefault(nx.weisfeiler_lehman_graph_hash(h), [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
    return [r for b in reps.values() for r in b]
