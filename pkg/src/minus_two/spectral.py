"""Exact integer spectral predicates for adjacency matrices.

Nothing here extracts eigenvalues numerically. Positive semidefiniteness of
``A + tI`` is read off the characteristic polynomial: a real-rooted monic
polynomial has only non-negative roots exactly when its coefficients weakly
alternate in sign.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb, gcd
from typing import Optional, Sequence

from .errors import DomainError, InternalConsistencyError
from .graph import Graph, _bits, is_connected, regularity


class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-a for a in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * a for i, a in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive_part(self) -> "IntPolynomial":
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPolynomial([a // c for a in self.coeffs])

    def pseudo_remainder(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """A non-zero integer multiple of the remainder of ``self`` modulo ``divisor``.

        Each elimination step scales by the divisor's leading coefficient, so
        the result is ``lc(divisor)**e * self mod divisor`` for some ``e >= 0``.
        """
        if not divisor:
            raise ZeroDivisionError("pseudo-division by the zero polynomial")
        r = list(self.coeffs)
        d = divisor.coeffs
        dl, dd = d[-1], len(d) - 1
        while r and len(r) - 1 >= dd:
            lead, s = r[-1], len(r) - 1 - dd
            r = [dl * a for a in r]
            for i, b in enumerate(d):
                r[i + s] -= lead * b
            while r and r[-1] == 0:
                r.pop()
        return IntPolynomial(r)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPolynomial":
        return cls([int(a) for a in data])


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x] (primitive remainder sequence), positive leading coefficient."""
    a, b = a.primitive_part(), b.primitive_part()
    while b:
        a, b = b, a.pseudo_remainder(b).primitive_part()
    return a


def shift(p: IntPolynomial, t: int) -> IntPolynomial:
    """Coefficients of ``x -> p(x - t)``."""
    n = len(p.coeffs)
    out = [0] * n
    for k, a in enumerate(p.coeffs):
        # (x - t)^k = sum_i C(k, i) x^i (-t)^(k-i)
        if a:
            for i in range(k + 1):
                out[i] += a * comb(k, i) * (-t) ** (k - i)
    return IntPolynomial(out)


def reflect(p: IntPolynomial) -> IntPolynomial:
    """``(-1)**deg(p) * p(-x)``: monic input gives the monic polynomial with negated roots."""
    d = p.degree
    return IntPolynomial([a * (-1) ** (i + d) for i, a in enumerate(p.coeffs)])


def char_poly(g: Graph) -> IntPolynomial:
    """``det(xI - A)`` by the Faddeev-LeVerrier recursion in exact integers."""
    n = g.n
    nbrs = [list(_bits(r)) for r in g.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        c_prev = coeffs[n - k + 1]
        am = [[sum(col) for col in zip(*(m[j] for j in nbrs[i]))] if nbrs[i] else [0] * n
              for i in range(n)]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        trace = sum(m[j][i] for i in range(n) for j in nbrs[i])
        if trace % k:
            raise InternalConsistencyError(f"inexact Faddeev-LeVerrier division at step {k}")
        coeffs[n - k] = -trace // k
    return IntPolynomial(coeffs)


def _roots_nonnegative(q: IntPolynomial) -> bool:
    n = q.degree
    return all((-1) ** (n - i) * a >= 0 for i, a in enumerate(q.coeffs))


class MinEigClass(enum.Enum):
    GREATER_THAN_MINUS_2 = "gt"
    EQUALS_MINUS_2 = "eq"
    LESS_THAN_MINUS_2 = "lt"


def min_eig_class_from_poly(p: IntPolynomial) -> MinEigClass:
    # char poly of A + 2I is p(x - 2)
    q = shift(p, 2)
    if not _roots_nonnegative(q):
        return MinEigClass.LESS_THAN_MINUS_2
    if q.coeffs and q.coeffs[0] == 0:
        return MinEigClass.EQUALS_MINUS_2
    return MinEigClass.GREATER_THAN_MINUS_2


def min_eig_class(g: Graph) -> MinEigClass:
    """Where the least adjacency eigenvalue sits relative to -2 (exact)."""
    return min_eig_class_from_poly(char_poly(g))


def distinct_eigenvalue_count(g: Graph) -> int:
    p = char_poly(g)
    if p.degree <= 0:
        return 0
    return p.degree - poly_gcd(p, p.derivative()).degree


@dataclass(frozen=True)
class SRGParameters:
    n: int
    k: int
    lam: int
    mu: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


def is_strongly_regular(g: Graph) -> Optional[SRGParameters]:
    """Parameters ``(n, k, lambda, mu)`` by direct common-neighbour counts, else None.

    Complete and edgeless graphs are excluded.
    """
    k = regularity(g)
    if k is None or g.num_edges == 0 or k == g.n - 1:
        return None
    lam = mu = None
    rows = g.rows
    for i in range(g.n):
        for j in range(i + 1, g.n):
            c = (rows[i] & rows[j]).bit_count()
            if (rows[i] >> j) & 1:
                if lam is None:
                    lam = c
                elif lam != c:
                    return None
            else:
                if mu is None:
                    mu = c
                elif mu != c:
                    return None
    return SRGParameters(g.n, k, lam, mu)


def largest_eig_equals_degree(g: Graph, k: int) -> bool:
    """True iff ``k`` is an eigenvalue and every eigenvalue is at most ``k``.

    Requires ``g`` to be ``k``-regular.
    """
    if regularity(g) != k:
        raise DomainError(f"graph is not {k}-regular")
    p = char_poly(g)
    if p(k) != 0:
        return False
    # char poly of kI - A has roots k - lambda: reflect then shift by k
    return _roots_nonnegative(shift(reflect(p), k))


def spectral_summary(g: Graph) -> dict:
    """Char poly, trichotomy class and distinct-eigenvalue count in one pass."""
    p = char_poly(g)
    return {
        "char_poly": p,
        "min_eig_class": min_eig_class_from_poly(p),
        "distinct_eigenvalues": 0 if p.degree <= 0 else p.degree - poly_gcd(p, p.derivative()).degree,
        "regular": regularity(g),
        "connected": is_connected(g),
    }
