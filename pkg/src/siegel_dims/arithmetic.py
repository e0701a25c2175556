"""Exact integer and rational arithmetic helpers.

Rational values are ordinary :class:`fractions.Fraction` objects throughout
the package: they are arbitrary precision, always stored reduced, keep the
sign on the numerator, and compare structurally -- exactly the guarantees the
dimension formulas need.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EvenLevelError,
    EvenPrimeError,
    InputError,
    IntegralityError,
    NotPrimeError,
    NotSquareFreeError,
)

# Witnesses proving n prime for every n below this bound (first 13 primes,
# Sorenson--Webster).  Inputs at or above the bound are rejected rather than
# answered probabilistically.
_MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
PRIMALITY_CERTIFIED_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Correct for every ``n`` below ``PRIMALITY_CERTIFIED_BOUND`` (about
    3.3e24); larger inputs raise :class:`InputError` instead of risking a
    probabilistic answer.
    """
    if n >= PRIMALITY_CERTIFIED_BOUND:
        raise InputError(
            f"primality is only certified below {PRIMALITY_CERTIFIED_BOUND}; got {n}"
        )
    if n < 2:
        return False
    for p in _MILLER_RABIN_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_WITNESSES:
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


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p


def require_odd_prime(p: int) -> int:
    if p % 2 == 0:
        raise EvenPrimeError(f"an odd prime is required, got {p}")
    return require_prime(p)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion.

    Returns 0 when p | a, 1 when a is a nonzero square mod p, and -1
    otherwise.
    """
    require_odd_prime(p)
    e = pow(a % p, (p - 1) // 2, p)
    if e == p - 1:
        return -1
    if e not in (0, 1):  # impossible for prime p
        raise IntegralityError(f"Euler criterion returned {e} mod {p}")
    return e


@dataclass(frozen=True)
class SquareFreeLevel:
    """An odd square-free level, held as its sorted tuple of prime factors."""

    primes: tuple[int, ...]

    def __post_init__(self):
        if not self.primes:
            raise InputError("a level needs at least one prime factor")
        for p, q in zip(self.primes, self.primes[1:]):
            if p >= q:
                raise InputError(f"prime factors must be strictly increasing, got {self.primes}")
        for p in self.primes:
            if p < 3 or p % 2 == 0:
                raise EvenLevelError(f"prime factors must be odd and >= 3, got {p}")
            require_prime(p)

    @property
    def N(self) -> int:
        n = 1
        for p in self.primes:
            n *= p
        return n

    def __str__(self) -> str:
        return str(self.N)


def parse_square_free_level(N: int) -> SquareFreeLevel:
    """Factor N and validate that it is odd, square-free and at least 3.

    Raises :class:`EvenLevelError` when 2 | N and :class:`NotSquareFreeError`
    (naming the repeated prime) when N has a square factor.
    """
    if N < 3:
        raise InputError(f"level must be at least 3, got {N}")
    if N % 2 == 0:
        raise EvenLevelError(f"level must be odd, got {N}")
    primes = []
    rest = N
    d = 3
    while d * d <= rest:
        if rest % d == 0:
            rest //= d
            if rest % d == 0:
                raise NotSquareFreeError(N, d)
            primes.append(d)
        d += 2
    if rest > 1:
        primes.append(rest)
    return SquareFreeLevel(tuple(primes))


def as_integer(value: Fraction, what: str = "value") -> int:
    """Collapse an exact rational that must be a non-negative integer.

    Dimension formulas are rational expressions whose value is guaranteed to
    be a non-negative integer; any failure here means a table or formula was
    transcribed wrong, so it raises :class:`IntegralityError`.
    """
    if value.denominator != 1:
        raise IntegralityError(f"{what} did not reduce to an integer: {value}")
    n = int(value)
    if n < 0:
        raise IntegralityError(f"{what} is negative: {n}")
    return n
