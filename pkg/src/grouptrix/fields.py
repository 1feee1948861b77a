"""Finite fields GF(p^k) with elements as coefficient tuples over GF(p).

The defining modulus is the lexicographically smallest monic irreducible
polynomial of the requested degree, found by exhaustive search (k <= 8), so
field labellings are reproducible across runs.
"""

from __future__ import annotations

from .arith import is_prime
from .errors import SpecError


class FiniteField:
    """GF(p^k).  Elements are k-tuples of ints mod p, constant term first."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise SpecError(f"characteristic {p} is not prime")
        if not 1 <= k <= 8:
            raise SpecError("degree must be between 1 and 8")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = self._find_modulus() if k > 1 else (0, 1)
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self.elements = [self._from_int(i) for i in range(self.order)]

    # -- construction ------------------------------------------------------

    def _from_int(self, i: int) -> tuple[int, ...]:
        coeffs = []
        for _ in range(self.k):
            coeffs.append(i % self.p)
            i //= self.p
        return tuple(coeffs)

    def _find_modulus(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        for idx in range(p**k):
            coeffs = []
            i = idx
            for _ in range(k):
                coeffs.append(i % p)
                i //= p
            coeffs.append(1)  # monic
            if self._is_irreducible(coeffs):
                return tuple(coeffs)
        raise SpecError(f"no irreducible polynomial of degree {k} over GF({p})")

    def _is_irreducible(self, coeffs: list[int]) -> bool:
        p, k = self.p, self.k
        for d in range(1, k // 2 + 1):
            for idx in range(p**d):
                div = []
                i = idx
                for _ in range(d):
                    div.append(i % p)
                    i //= p
                div.append(1)
                if not any(self._rem(coeffs, div)):
                    return False
        return True

    def _rem(self, num: list[int], den: list[int]) -> list[int]:
        p = self.p
        num = list(num)
        dd = len(den) - 1
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if c:
                for j, d in enumerate(den):
                    num[i - dd + j] = (num[i - dd + j] - c * d) % p
        return num[:dd]

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = self._rem(prod, list(self.modulus)) if k > 1 else [prod[0] % p]
        return tuple(rem + [0] * (k - len(rem)))

    def pow(self, a, e: int):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def generator(self) -> tuple[int, ...]:
        """A multiplicative generator, found by exhaustive order checks."""
        n = self.order - 1
        from .arith import factorize

        prime_divs = sorted(set(factorize(n))) if n > 1 else []
        for cand in self.elements:
            if cand == self.zero:
                continue
            if all(self.pow(cand, n // q) != self.one for q in prime_divs):
                return cand
        raise SpecError("multiplicative group has no generator")  # unreachable

    def index(self, a) -> int:
        out = 0
        for c in reversed(a):
            out = out * self.p + c
        return out
