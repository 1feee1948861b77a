"""Deterministic 64-bit number theory.

Primality is a Miller-Rabin test with a fixed witness set that is
deterministic for every n < 2^64; factoring is trial division followed by
Brent-cycle Pollard rho with a deterministic parameter schedule, so repeated
runs always produce the same factorizations.  On top of that sit the
classification of integers into prime powers / products of two distinct
primes, the parity condition deciding when the power graph of PSL(2,q)
collapses to a single vertex under twin reduction, and Euler phi / lcm(1..m)
used by the clique bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "U64_MAX",
    "FactorClass",
    "is_prime",
    "factorize",
    "factor_classify",
    "psl2_cograph_condition",
    "enumerate_condition_values",
    "phi_and_lcm",
]

U64_MAX = 2**64 - 1

# Deterministic for all n < 3.3 * 10^24, comfortably covering 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10_000


def _small_primes(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES = _small_primes(_TRIAL_LIMIT)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n <= 2^64 - 1."""
    if n > U64_MAX:
        raise ValueError("value exceeds 64 bits")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Return a non-trivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
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
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # rare; retry with the next polynomial


def factorize(n: int) -> tuple[int, ...]:
    """Prime factorization of n >= 1 as a sorted multiset."""
    if not 1 <= n <= U64_MAX:
        raise ValueError("argument must be a positive 64-bit integer")
    factors: list[int] = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            factors.append(p)
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                factors.append(m)
                continue
            d = _brent_rho(m)
            stack.append(d)
            stack.append(m // d)
    return tuple(sorted(factors))


@dataclass(frozen=True)
class FactorClass:
    """An integer together with its factorization and coarse shape."""

    value: int
    factorization: tuple[int, ...]
    kind: str  # "UNIT" | "PRIME_POWER" | "TWO_DISTINCT_PRIMES" | "OTHER"


def factor_classify(n: int) -> FactorClass:
    """Classify n as unit, prime power, product of two distinct primes, or other."""
    factors = factorize(n)
    distinct = set(factors)
    if n == 1:
        kind = "UNIT"
    elif len(distinct) == 1:
        kind = "PRIME_POWER"
    elif len(factors) == 2 and len(distinct) == 2:
        kind = "TWO_DISTINCT_PRIMES"
    else:
        kind = "OTHER"
    return FactorClass(n, factors, kind)


def _qualifies(n: int) -> bool:
    # 1 passes vacuously; it occurs only for q in {2, 3}.
    return factor_classify(n).kind in ("UNIT", "PRIME_POWER", "TWO_DISTINCT_PRIMES")


def _condition(q: int) -> bool:
    if q % 2 == 0:
        return _qualifies(q - 1) and _qualifies(q + 1)
    return _qualifies((q - 1) // 2) and _qualifies((q + 1) // 2)


def psl2_cograph_condition(q: int) -> bool:
    """Whether the power graph of PSL(2,q) is a cograph, decided arithmetically.

    For even q the test is on q-1 and q+1; for odd q on (q-1)/2 and (q+1)/2.
    Each must be a prime power or a product of two distinct primes.
    """
    if q < 4:
        raise ValueError("q must be a prime power with q >= 4")
    if factor_classify(q).kind != "PRIME_POWER":
        raise ValueError(f"{q} is not a prime power")
    return _condition(q)


def enumerate_condition_values(kind: str, bound: int) -> list[int]:
    """All qualifying exponents d (kind="even_d") or odd prime powers q (kind="odd_q")."""
    if kind == "even_d":
        if bound > 63:
            raise ValueError("even_d bound must be at most 63 (64-bit arithmetic)")
        return [d for d in range(1, bound + 1) if _condition(2**d)]
    if kind == "odd_q":
        if bound > 10**6:
            raise ValueError("odd_q bound must be at most 10^6")
        out = []
        for q in range(3, bound + 1, 2):
            if factor_classify(q).kind == "PRIME_POWER" and _condition(q):
                out.append(q)
        return out
    raise ValueError(f"unknown list kind {kind!r}")


def phi_and_lcm(m: int) -> tuple[int, int]:
    """Euler's phi(m) together with lcm(1..m); the lcm must fit in 64 bits."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > 42:
        raise ValueError("lcm(1..m) exceeds 64 bits for m > 42")
    phi = m
    for p in set(factorize(m)):
        phi = phi // p * (p - 1)
    lcm = 1
    for k in range(2, m + 1):
        lcm = lcm * k // math.gcd(lcm, k)
    return phi, lcm
