"""Exact factorisation below 2**63, prime sets and primitive prime divisors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError

LIMIT = 1 << 63
TRIAL_BOUND = 10**6

# Deterministic Miller-Rabin witnesses for every n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_BOUND + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(TRIAL_BOUND) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, TRIAL_BOUND + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A non-trivial factor of the odd composite ``n``; seeds are tried in a fixed order."""
    for c in range(1, 100):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"Pollard rho failed on {n}")


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]
    """``(prime, exponent)`` pairs, primes strictly increasing."""

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factor(n: int) -> FactoredInteger:
    """Complete factorisation of ``1 <= n < 2**63``."""
    if n < 1:
        raise DomainError(f"factor needs n >= 1, got {n}")
    if n >= LIMIT:
        raise DomainError(f"factor needs n < 2**63, got {n}")
    found: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
        # a large prime cofactor would otherwise cost the whole trial range
        if p == 1009 and is_prime(m):
            break
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if is_prime(x):
            found[x] = found.get(x, 0) + 1
            continue
        r = isqrt(x)
        if r * r == x:
            stack += [r, r]
            continue
        d = _pollard_brent(x)
        stack += [d, x // d]
    return FactoredInteger(n, tuple(sorted(found.items())))


def prime_set(n: int) -> frozenset[int]:
    """The set of prime divisors of ``n`` (empty for 1)."""
    return frozenset(factor(n).primes)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _checked_power(u: int, f: int) -> int:
    if u < 2 or f < 1:
        raise DomainError(f"need u >= 2 and f >= 1, got ({u}, {f})")
    q = u**f
    if q >= LIMIT:
        raise DomainError(f"{u}**{f} does not fit below 2**63")
    return q


def primitive_prime_divisor(u: int, f: int):
    """A prime dividing ``u**f - 1`` but no ``u**e - 1`` with ``1 <= e < f``, or None.

    Found by factoring ``u**f - 1`` and testing each prime directly.
    """
    q = _checked_power(u, f)
    if q - 1 == 1:
        return None
    for p in factor(q - 1).primes:
        if all(pow(u, e, p) != 1 for e in range(1, f)):
            return p
    return None


@dataclass(frozen=True)
class PropBCheck:
    u: int
    f: int
    pi_f_size: int
    pi_uf_minus_1_size: int

    @property
    def holds(self) -> bool:
        return self.pi_uf_minus_1_size >= self.pi_f_size


def prop_b_lie_check(u: int, f: int) -> PropBCheck:
    """Compare the number of primes of ``u**f - 1`` against those of ``f``."""
    if not is_prime(u):
        raise DomainError(f"u must be prime, got {u}")
    q = _checked_power(u, f)
    return PropBCheck(u, f, len(prime_set(f)), len(prime_set(q - 1)))
