"""Conductors of N/K, their species and multiplicities, and multiplet grouping."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .radicand import factor, iter_factorizations, smallest_prime_factors


class Species(str, enum.Enum):
    ONE_A = "1a"
    ONE_B = "1b"
    TWO = "2"

    def __str__(self):
        return self.value


_KIND_NAMES = {1: "singulet", 2: "doublet", 3: "triplet", 4: "quartet", 8: "octet"}


def multiplet_kind(count: int) -> str:
    """Name of a multiplet with ``count`` members: singulet, doublet, ... or ``other(k)``."""
    if count < 1:
        raise ValueError(f"multiplet needs at least one member, got {count}")
    return _KIND_NAMES.get(count, f"other({count})")


@dataclass(frozen=True)
class ConductorProfile:
    f: int
    species: Species
    n: int
    u: int
    v: int
    m: int

    def __post_init__(self):
        if self.u + self.v != self.n:
            raise ValueError("u + v must equal n")
        if self.m < 1:
            raise ValueError(f"{self.f} is not the conductor of any pure cubic field")


@dataclass
class MultipletGroup:
    f: int
    members: list[int] = field(default_factory=list)
    complete: bool = False

    @property
    def kind(self) -> str:
        return multiplet_kind(len(self.members))


def _pm_one_mod_9(n: int) -> bool:
    return n % 9 in (1, 8)


def _conductor_from_primes(d: int, primes) -> int:
    # primes: the distinct primes dividing d, so prod(primes) = a*b for d = a*b^2
    ab = prod(primes)
    return ab if _pm_one_mod_9(d) else 3 * ab


def conductor_of(d: int) -> int:
    """Conductor ``f`` of ``Q(cbrt(d), w) / Q(w)`` for a cube-free ``d > 1``.

    With ``d = a*b**2`` (``a``, ``b`` squarefree and coprime), ``f = ab`` when
    ``d = +-1 (mod 9)`` and ``3ab`` otherwise.
    """
    factors = factor(d)
    if any(pp.exponent >= 3 for pp in factors):
        raise ValueError(f"{d} is not cube-free")
    return _conductor_from_primes(d, [pp.prime for pp in factors])


def species_of(f: int) -> Species:
    if f % 9 == 0:
        return Species.ONE_A
    if f % 3 == 0:
        return Species.ONE_B
    return Species.TWO


def x_sequence(k: int) -> Fraction:
    """``X_k = (2**k - (-1)**k) / 3`` for ``k >= -1``; ``X_{-1} = 1/2``."""
    if k < -1:
        raise ValueError(f"X_k is defined for k >= -1, got {k}")
    return (Fraction(2) ** k - Fraction(-1) ** k) / 3


def _multiplicity(species: Species, n: int, u: int, v: int) -> int:
    if species is Species.ONE_A:
        return 2**n
    if species is Species.ONE_B:
        return 2**u * int(x_sequence(v))
    if u == 0 and v == 0:
        raise ValueError("empty conductor")
    if v == 0:
        # 2^u * X_{-1}, u >= 1 here
        return 2 ** (u - 1)
    return 2**u * int(x_sequence(v - 1))


def multiplicity(profile: ConductorProfile) -> int:
    """Number of pure cubic fields sharing the conductor ``profile.f``."""
    return _multiplicity(profile.species, profile.n, profile.u, profile.v)


def conductor_profile(f: int) -> ConductorProfile:
    """Profile of a conductor; raises ``ValueError`` if no pure cubic field has conductor ``f``."""
    if f < 2:
        raise ValueError("empty conductor")
    # strip 3 first: f may reach 3 * (2**64 - 1) while the cofactor stays in range
    three, rest = 0, f
    while rest % 3 == 0:
        rest //= 3
        three += 1
    others = factor(rest) if rest > 1 else []
    if three > 2 or any(pp.exponent > 1 for pp in others):
        raise ValueError(f"{f} is not of the shape 3^e * l_1 ... l_n")
    species = species_of(f)
    u = sum(1 for pp in others if _pm_one_mod_9(pp.prime))
    n = len(others)
    m = _multiplicity(species, n, u, n - u)
    return ConductorProfile(f=f, species=species, n=n, u=u, v=n - u, m=m)


# -- enumeration --------------------------------------------------------------


def _scan_chunk(args) -> list[tuple[int, int]]:
    """(conductor, radicand) pairs for canonical cube-free radicands in [lo, hi]."""
    lo, hi, max_d = args
    spf = smallest_prime_factors(max(hi, 2))
    out = []
    for d, parts in iter_factorizations(lo, hi, spf):
        if any(k >= 3 for _, k in parts):
            continue
        conj = prod(p ** (3 - k) for p, k in parts)
        if conj < d:
            continue
        out.append((_conductor_from_primes(d, [p for p, _ in parts]), d))
    return out


def _chunks(lo: int, hi: int, jobs: int) -> list[tuple[int, int]]:
    size = max(1, -(-(hi - lo + 1) // max(jobs, 1)))
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def conductor_pairs(max_d: int, jobs: int = 1) -> list[tuple[int, int]]:
    """(f, d) for every canonical cube-free ``2 <= d <= max_d``, ascending in ``d``."""
    if max_d < 2:
        raise ValueError(f"max_d must be >= 2, got {max_d}")
    tasks = [(a, b, max_d) for a, b in _chunks(2, max_d, jobs)]
    if jobs <= 1:
        parts = [_scan_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
    return [pair for part in parts for pair in part]


def enumerate_multiplets(max_d: int, jobs: int = 1) -> list[MultipletGroup]:
    """Group canonical radicands ``<= max_d`` by conductor, sorted by ``f``.

    A group is ``complete`` when ``f**2 <= max_d``; every radicand with
    conductor ``f`` is at most ``f**2``, so such fibers are fully observed.
    """
    groups: dict[int, MultipletGroup] = {}
    for f, d in conductor_pairs(max_d, jobs):
        g = groups.get(f)
        if g is None:
            g = groups[f] = MultipletGroup(f=f, complete=f * f <= max_d)
        g.members.append(d)
    return [groups[f] for f in sorted(groups)]
