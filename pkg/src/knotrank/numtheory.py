"""Number theory for the witness construction.

Deterministic 64-bit primality, primes congruent to 1 mod 4, square
roots of -1 modulo such primes, the witness-index case split, and
complete integer factorization.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple


class NotPrime(ValueError):
    """The argument must be prime."""


class NotOneModFour(ValueError):
    """The argument must be congruent to 1 mod 4."""


class PrimePower(NamedTuple):
    prime: int
    exponent: int


# Strong-pseudoprime witnesses covering every integer below 3.3 * 10^24,
# in particular the full 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(x: int) -> bool:
    """Deterministic Miller-Rabin primality for the 64-bit range."""
    if x < 2:
        return False
    for p in _MR_WITNESSES:
        if x % p == 0:
            return x == p
    d = x - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        v = pow(a, d, x)
        if v == 1 or v == x - 1:
            continue
        for _ in range(s - 1):
            v = v * v % x
            if v == x - 1:
                break
        else:
            return False
    return True


def prime_sieve(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def primes_one_mod_four(limit: int) -> list[int]:
    """All primes p <= limit with p = 1 (mod 4), ascending."""
    return [p for p in prime_sieve(limit) if p % 4 == 1]


def sqrt_minus_one(p: int) -> int:
    """The pinned square root of -1 modulo a prime p = 1 (mod 4).

    Deterministic construction: a^((p-1)/4) mod p for the smallest
    quadratic non-residue a.  The other root is p minus the result.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 4 != 1:
        raise NotOneModFour(f"{p} is congruent to {p % 4}, not 1, mod 4")
    a = 2
    while pow(a, (p - 1) // 2, p) != p - 1:
        a += 1
    return pow(a, (p - 1) // 4, p)


def witness_index(p: int) -> int:
    """Witness index n with 2n^2 - 2n + 1 divisible by p.

    Case split on the parity of m = sqrt_minus_one(p): n = (m+1)/2 for
    odd m, n = (m+p+1)/2 for even m.
    """
    m = sqrt_minus_one(p)
    if m % 2 == 1:
        return (m + 1) // 2
    return (m + p + 1) // 2


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(prime_sieve(10_000))


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n, Brent's cycle variant.

    Deterministic: the polynomial offset starts at 1 and is bumped until
    a factor splits.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y = 2
        r = 1
        q = 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")  # pragma: no cover


def _factor_completely(x: int, acc: list[int]) -> None:
    # x has no prime factor below the small-prime bound
    if x == 1:
        return
    if is_prime(x):
        acc.append(x)
        return
    d = _pollard_rho(x)
    _factor_completely(d, acc)
    _factor_completely(x // d, acc)


def factorize(x: int) -> list[PrimePower]:
    """Complete prime factorization, ascending; the unit 1 factors to []."""
    if x < 1:
        raise ValueError(f"factorize requires a positive integer, got {x}")
    counts: dict[int, int] = {}
    for p in _small_primes():
        if p * p > x:
            break
        while x % p == 0:
            counts[p] = counts.get(p, 0) + 1
            x //= p
    if x > 1:
        large: list[int] = []
        _factor_completely(x, large)
        for q in large:
            counts[q] = counts.get(q, 0) + 1
    return [PrimePower(p, e) for p, e in sorted(counts.items())]
