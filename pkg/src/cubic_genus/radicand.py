"""Rational factorization and the prime signature of a cube-free radicand."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Iterator

import numpy as np

MAX_INPUT = 2**64 - 1
TRIAL_BOUND = 2**20

# Deterministic Miller-Rabin witness set for n < 3.3e24, which covers 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

SPLIT_ONE = "1 mod 9"
SPLIT_OTHER = "4-or-7 mod 9"
INERT_MINUS_ONE = "8 mod 9"
INERT_OTHER = "2-or-5 mod 9"


@dataclass(frozen=True, slots=True)
class PrimePower:
    prime: int
    exponent: int

    def __post_init__(self):
        if self.prime < 2:
            raise ValueError(f"invalid prime {self.prime}")
        if self.exponent < 1:
            raise ValueError(f"invalid exponent {self.exponent}")

    @property
    def value(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True)
class RadicandSignature:
    """Factorization ``d = 3^e * prod(p_i^e_i) * prod(q_j^f_j)`` of a cube-free radicand.

    ``split_primes`` holds the primes ``p = 1 (mod 3)`` (split in Q(w)),
    ``inert_primes`` the primes ``q = 2 (mod 3)``. Each entry carries its
    residue tag mod 9. Primes ``= 1 (mod 9)`` come first within the split
    list, and ``= -1 (mod 9)`` first within the inert list, so the counts
    ``v`` and ``I`` index prefixes as in the usual notation.
    """

    d: int
    e: int
    split_primes: tuple[tuple[PrimePower, str], ...]
    inert_primes: tuple[tuple[PrimePower, str], ...]

    @property
    def v(self) -> int:
        return sum(1 for _, tag in self.split_primes if tag == SPLIT_ONE)

    @property
    def w(self) -> int:
        return len(self.split_primes)

    @property
    def I(self) -> int:  # noqa: E743
        return sum(1 for _, tag in self.inert_primes if tag == INERT_MINUS_ONE)

    @property
    def J(self) -> int:
        return len(self.inert_primes)

    @property
    def residue_mod_9(self) -> int:
        return self.d % 9

    @property
    def is_pm_one_mod_9(self) -> bool:
        return self.d % 9 in (1, 8)

    def primes(self) -> list[int]:
        """Primes other than 3 dividing ``d``, ascending."""
        return sorted(pp.prime for pp, _ in self.split_primes + self.inert_primes)

    def reconstruct(self) -> int:
        return 3**self.e * prod(pp.value for pp, _ in self.split_primes + self.inert_primes)


# -- primality and factorization ----------------------------------------------


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in primes_below(TRIAL_BOUND))


def primes_below(n: int) -> np.ndarray:
    """All primes ``< n`` by a sieve of Eratosthenes."""
    if n <= 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, isqrt(n - 1) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return np.flatnonzero(sieve)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every ``n < 2**64``."""
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


def _brent(n: int) -> int:
    """A nontrivial factor of the odd composite ``n`` (Pollard rho, Brent's cycle search)."""
    for c in range(1, n):
        y, r, q, m = 2, 1, 1, 128
        g = 1
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
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def _factor_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _factor_large(r, out)
        _factor_large(r, out)
        return
    g = _brent(n)
    _factor_large(g, out)
    _factor_large(n // g, out)


def factor(n: int) -> list[PrimePower]:
    """Prime factorization of ``2 <= n < 2**64``, ascending by prime."""
    if n < 2:
        raise ValueError(f"cannot factor {n}: need n >= 2")
    if n > MAX_INPUT:
        raise ValueError(f"{n} exceeds the 64-bit input bound")
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            found[p] = k
    else:
        _factor_large(n, found)
        n = 1
    if n > 1:
        found[n] = found.get(n, 0) + 1
    return [PrimePower(p, k) for p, k in sorted(found.items())]


def smallest_prime_factors(limit: int) -> np.ndarray:
    """Table ``spf[k]`` of smallest prime factors for ``k <= limit`` (``spf[0] = spf[1] = 0``)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.flatnonzero(spf == 0)
    spf[idx] = idx
    spf[:2] = 0
    return spf


def iter_factorizations(lo: int, hi: int, spf: np.ndarray | None = None) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Yield ``(n, [(p, k), ...])`` for ``lo <= n <= hi`` using a smallest-prime-factor table."""
    lo = max(lo, 2)
    if spf is None or len(spf) <= hi:
        spf = smallest_prime_factors(hi)
    table = spf.tolist()
    for n in range(lo, hi + 1):
        parts: list[tuple[int, int]] = []
        m = n
        while m > 1:
            p = table[m]
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            parts.append((p, k))
        yield n, parts


# -- radicand normalization ---------------------------------------------------


def is_cubefree(n: int) -> bool:
    return n >= 1 and (n == 1 or all(pp.exponent < 3 for pp in factor(n)))


def cubefree_part(n: int) -> int:
    """Reduce every exponent of ``n`` mod 3; 1 for a perfect cube."""
    if n < 1:
        raise ValueError(f"cubefree_part needs n >= 1, got {n}")
    if n == 1:
        return 1
    return prod(pp.prime ** (pp.exponent % 3) for pp in factor(n))


def _require_radicand(d: int) -> list[PrimePower]:
    if d < 2:
        raise ValueError(f"radicand must exceed 1, got {d}")
    factors = factor(d)
    if any(pp.exponent >= 3 for pp in factors):
        raise ValueError(f"{d} is not cube-free")
    return factors


def conjugate_radicand(d: int) -> int:
    """Radicand of the same pure cubic field with the exponents 1 and 2 swapped."""
    return prod(pp.prime ** (3 - pp.exponent) for pp in _require_radicand(d))


def canonical_radicand(d: int) -> int:
    return min(d, conjugate_radicand(d))


def residue_tag(p: int) -> str:
    r = p % 9
    if r == 1:
        return SPLIT_ONE
    if r in (4, 7):
        return SPLIT_OTHER
    if r == 8:
        return INERT_MINUS_ONE
    if r in (2, 5):
        return INERT_OTHER
    raise ValueError(f"{p} has no residue tag (divisible by 3)")


def signature_from_factors(d: int, factors) -> RadicandSignature:
    """Build the signature from ``(prime, exponent)`` pairs without refactoring ``d``."""
    e = 0
    split, inert = [], []
    for p, k in factors:
        if k >= 3:
            raise ValueError(f"{d} is not cube-free")
        if p == 3:
            e = k
            continue
        item = (PrimePower(p, k), residue_tag(p))
        (split if p % 3 == 1 else inert).append(item)
    split.sort(key=lambda it: (it[1] != SPLIT_ONE, it[0].prime))
    inert.sort(key=lambda it: (it[1] != INERT_MINUS_ONE, it[0].prime))
    return RadicandSignature(d=d, e=e, split_primes=tuple(split), inert_primes=tuple(inert))


def signature(d: int) -> RadicandSignature:
    """Signature of a cube-free radicand ``d > 1``."""
    factors = _require_radicand(d)
    return signature_from_factors(d, ((pp.prime, pp.exponent) for pp in factors))
