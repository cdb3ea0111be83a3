"""Exact integer arithmetic: GCDs with cofactors, squarefree testing.

All values are plain Python ints (arbitrary precision).  Everything here
is pure and deterministic; the factorization routine uses trial division
up to a configurable bound with a Pollard-rho fallback, which is plenty
for the coefficient sizes this library meets in practice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class AllZeroError(ValueError):
    """Raised when an operation needs at least one nonzero input."""


class NonPositiveError(ValueError):
    """Raised when a positive integer was required."""


TRIAL_DIVISION_BOUND = 10**6


def gcd_list(values) -> int:
    """Nonnegative gcd of a sequence of ints; the empty gcd is 0."""
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def bezout(values) -> tuple[int, list[int]]:
    """Extended gcd of a sequence: returns (g, c) with sum(c[i]*values[i]) == g.

    Requires at least one nonzero value.
    """
    values = list(values)
    if not any(values):
        raise AllZeroError("bezout needs at least one nonzero value")
    g, cofactors = 0, []
    for v in values:
        if g == 0:
            # first contributing value: g = sign(v) * v
            s = 1 if v > 0 else (-1 if v < 0 else 0)
            cofactors = [0] * len(cofactors) + [s]
            g = abs(v)
            continue
        d, x, y = xgcd(g, v)
        cofactors = [c * x for c in cofactors] + [y]
        g = d
    assert sum(c * v for c, v in zip(cofactors, values)) == g
    return g, cofactors


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lcm_list(values) -> int:
    """Positive lcm of a sequence of nonzero ints; empty lcm is 1."""
    out = 1
    for v in values:
        out = out * abs(v) // math.gcd(out, v)
    return out


@dataclass(frozen=True)
class SquarefreeWitness:
    """Result of a squarefree test, with the full factorization as evidence.

    ``factorization`` multiplies back to the tested integer.  When the
    input is not squarefree, ``offending_prime`` is a prime whose square
    divides it.
    """

    is_squarefree: bool
    offending_prime: int | None
    factorization: tuple[tuple[int, int], ...]

    def __post_init__(self):
        assert self.is_squarefree == all(e == 1 for _, e in self.factorization)
        assert (self.offending_prime is not None) == any(
            e >= 2 for _, e in self.factorization
        )


def squarefree(n: int, trial_bound: int = TRIAL_DIVISION_BOUND) -> SquarefreeWitness:
    """Test whether n >= 1 is squarefree (a product of distinct primes, or 1)."""
    if n < 1:
        raise NonPositiveError(f"squarefree needs n >= 1, got {n}")
    factors = factorize(n, trial_bound=trial_bound)
    offending = next((p for p, e in factors if e >= 2), None)
    if offending is not None:
        assert n % (offending * offending) == 0
    return SquarefreeWitness(
        is_squarefree=offending is None,
        offending_prime=offending,
        factorization=factors,
    )


def factorize(n: int, trial_bound: int = TRIAL_DIVISION_BOUND) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, exponent), ...), primes ascending."""
    if n < 1:
        raise NonPositiveError(f"factorize needs n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in _small_trial_primes(n, trial_bound):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if n == 1:
            break
    if n > 1:
        for p in _factor_generic(n):
            factors[p] = factors.get(p, 0) + 1
    return tuple(sorted(factors.items()))


def _small_trial_primes(n: int, bound: int):
    yield 2
    yield 3
    p = 5
    # 6k +/- 1 wheel; stop once p*p exceeds n or the configured bound
    while p <= bound and p * p <= n:
        yield p
        yield p + 2
        p += 6


def _factor_generic(n: int) -> list[int]:
    """Fully factor n (no prime factor below the trial bound) via Pollard rho."""
    if n == 1:
        return []
    if is_probable_prime(n):
        return [n]
    d = _pollard_rho(n)
    return sorted(_factor_generic(d) + _factor_generic(n // d))


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, overwhelmingly reliable above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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
