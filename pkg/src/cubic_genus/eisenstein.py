"""Exact arithmetic in the Eisenstein integers Z[w], w a primitive cube root of unity.

Elements are stored in the basis {1, w} with w**2 = -1 - w.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    """The element ``a + b*w`` of Z[w]."""

    a: int
    b: int = 0

    @classmethod
    def coerce(cls, value: EisensteinInt | int) -> EisensteinInt:
        if isinstance(value, EisensteinInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to EisensteinInt")

    def __add__(self, other):
        if isinstance(other, int):
            other = EisensteinInt(other)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, int):
            other = EisensteinInt(other)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        w = "w" if abs(self.b) == 1 else f"{abs(self.b)}w"
        if self.a == 0:
            return w if self.b > 0 else f"-{w}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {w}"

    def conj(self) -> EisensteinInt:
        return conj(self)

    def norm(self) -> int:
        return norm(self)


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
LAMBDA = EisensteinInt(1, -1)
LAMBDA_CUBED = LAMBDA * LAMBDA * LAMBDA
THREE = EisensteinInt(3, 0)
UNITS = (ONE, -ONE, OMEGA, -OMEGA, OMEGA * OMEGA, -(OMEGA * OMEGA))


def norm(x: EisensteinInt) -> int:
    """Return the norm ``a**2 - a*b + b**2``."""
    return x.a * x.a - x.a * x.b + x.b * x.b


def conj(x: EisensteinInt) -> EisensteinInt:
    """Complex conjugation (w -> w**2), i.e. the action of tau."""
    return EisensteinInt(x.a - x.b, -x.b)


def _round_half_away(num: int, den: int) -> int:
    # den > 0
    q, r = divmod(abs(num), den)
    if 2 * r >= den:
        q += 1
    return q if num >= 0 else -q


def divrem(x: EisensteinInt | int, y: EisensteinInt | int) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division: ``x = q*y + r`` with ``norm(r) < norm(y)``.

    The quotient rounds each rational coordinate of ``x/y`` to the nearest
    integer, ties away from zero.
    """
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    n = norm(y)
    if n == 0:
        raise ZeroDivisionError("zero divisor")
    num = x * conj(y)
    q = EisensteinInt(_round_half_away(num.a, n), _round_half_away(num.b, n))
    return q, x - q * y


def divides(y: EisensteinInt | int, x: EisensteinInt | int) -> bool:
    """True iff ``y | x`` in Z[w]."""
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    if not y:
        return not x
    n = norm(y)
    num = x * conj(y)
    return num.a % n == 0 and num.b % n == 0


def exact_div(x: EisensteinInt | int, y: EisensteinInt | int) -> EisensteinInt:
    q, r = divrem(x, y)
    if r:
        raise ValueError(f"{y} does not divide {x}")
    return q


def associates(x: EisensteinInt) -> tuple[EisensteinInt, ...]:
    return tuple(u * x for u in UNITS)


def canonical_associate(x: EisensteinInt) -> EisensteinInt:
    """Primary associate when coprime to lambda, else the associate with the
    largest real coordinate (ties: largest w-coordinate)."""
    if not x:
        return x
    if norm(x) % 3:
        return primary_associate(x)
    return max(associates(x), key=lambda z: (z.a, z.b))


def gcd(x: EisensteinInt | int, y: EisensteinInt | int) -> EisensteinInt:
    """Greatest common divisor, normalized by :func:`canonical_associate`."""
    x = EisensteinInt.coerce(x)
    y = EisensteinInt.coerce(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, divrem(x, y)[1]
    return canonical_associate(x)


def primary_associate(x: EisensteinInt | int) -> EisensteinInt:
    """The unique associate of ``x`` congruent to 1 modulo 3."""
    x = EisensteinInt.coerce(x)
    if norm(x) % 3 == 0:
        raise ValueError("not coprime to lambda")
    for z in associates(x):
        if divides(THREE, z - ONE):
            return z
    raise AssertionError(f"no primary associate found for {x}")  # pragma: no cover


def is_one_mod_lambda_cubed(x: EisensteinInt | int) -> bool:
    """True iff lambda**3 divides ``x - 1``."""
    return divides(LAMBDA_CUBED, EisensteinInt.coerce(x) - ONE)


def _primitive_cube_root_of_unity(p: int) -> int:
    # g^((p-1)/3) is a primitive cube root of 1 unless it equals 1; g = 2, 3, ...
    k = (p - 1) // 3
    for g in range(2, p):
        r = pow(g, k, p)
        if r != 1:
            return r
    raise AssertionError(f"no cube root of unity mod {p}")  # pragma: no cover


@lru_cache(maxsize=None)
def split_rational_prime(p: int) -> tuple[EisensteinInt, EisensteinInt]:
    """Factor a rational prime ``p = 1 (mod 3)`` into primary conjugate primes.

    The pair is ordered by w-coordinate, then real coordinate. ``p`` is
    assumed prime; only the residue class is checked.
    """
    if p % 3 != 1:
        raise ValueError("prime does not split")
    r = _primitive_cube_root_of_unity(p)
    pi = gcd(EisensteinInt(p), EisensteinInt(r) - OMEGA)
    if norm(pi) != p:
        raise ValueError(f"{p} is not prime")
    first, second = sorted((pi, primary_associate(conj(pi))), key=lambda z: (z.b, z.a))
    return first, second
