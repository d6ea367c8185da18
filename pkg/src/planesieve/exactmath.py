"""Exact integer arithmetic: factorization, prime powers, geometric sums.

Everything here is deterministic and exact.  No floats anywhere: the
comparisons done elsewhere in the package rely on these primitives never
rounding, so factorization is trial division plus Brent's cycle-finding
variant of Pollard rho with a fixed parameter schedule, and primality is
Miller-Rabin with a deterministic base set below 2**64 and a fixed base
list above it.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from math import gcd, isqrt

_TRIAL_LIMIT = 10_000

# Deterministic witness set for n < 3.3 * 10**24 (covers every value the
# trial-division stage can leave behind for inputs below ~10**28; larger
# inputs additionally get the fixed extended list below).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BASES_BIG = _MR_BASES_64 + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)


def small_primes(limit: int) -> list[int]:
    """Primes up to limit (inclusive), freshly sieved above the cached range."""
    if limit <= _TRIAL_LIMIT:
        return _SMALL_PRIMES[: bisect.bisect_right(_SMALL_PRIMES, limit)]
    return _sieve(limit)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.  Exact for n < 3.3e24; for larger n the
    extended fixed base list is used (no known composite passes it)."""
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
    bases = _MR_BASES_64 if n < 3_317_044_064_679_887_385_961_981 else _MR_BASES_BIG
    for a in bases:
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
    """One nontrivial factor of composite odd n, deterministic schedule."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m = 2, 128
        g = r = q = 1
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
            if ys == y:
                break
        if 1 < g < n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


@dataclass(frozen=True)
class Factorization:
    """An integer together with its ordered prime factorization.

    factors is a tuple of (prime, exponent) pairs sorted by prime;
    value 0 and 1 carry an empty tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def reassemble(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorize(n: int) -> Factorization:
    """Total factorization of n >= 0.  factorize(0) and factorize(1) have
    empty factor lists."""
    if n < 0:
        raise ValueError(f"factorize expects n >= 0, got {n}")
    if n <= 1:
        return Factorization(n, ())
    acc: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            acc[p] = acc.get(p, 0) + 1
            m //= p
    if m > 1:
        if m < (_TRIAL_LIMIT + 1) ** 2 or is_prime(m):
            acc[m] = acc.get(m, 0) + 1
        else:
            _factor_into(m, acc)
    return Factorization(n, tuple(sorted(acc.items())))


def merge_factorizations(*parts: Factorization) -> Factorization:
    """Factorization of the product of the parts (counts added)."""
    acc: dict[int, int] = {}
    value = 1
    for f in parts:
        value *= f.value
        for p, e in f.factors:
            acc[p] = acc.get(p, 0) + e
    return Factorization(value, tuple(sorted(acc.items())))


def is_prime_power(n: int) -> tuple[int, int] | None:
    """(p, a) with p**a == n and p prime, or None.  Requires n >= 2."""
    if n < 2:
        raise ValueError(f"is_prime_power expects n >= 2, got {n}")
    f = factorize(n)
    if len(f.factors) == 1:
        return f.factors[0]
    return None


def nth_root(n: int, k: int) -> tuple[int, bool]:
    """(floor(n**(1/k)), exact?) by integer Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("nth_root expects n >= 0, k >= 1")
    if n in (0, 1) or k == 1:
        return n, True
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == n


def geom_sum(q: int, k: int, step: int = 1) -> int:
    """1 + q**step + q**(2*step) + ... + q**(k*step), exactly (k+1 terms)."""
    if q < 2:
        raise ValueError(f"geom_sum expects q >= 2, got {q}")
    if k < 0 or step < 1:
        raise ValueError(f"geom_sum expects k >= 0 and step >= 1, got k={k}, step={step}")
    base = q**step
    num = base ** (k + 1) - 1
    assert num % (base - 1) == 0
    return num // (base - 1)


def gaussian_binomial(n: int, m: int, q: int) -> int:
    """Number of m-dimensional subspaces of an n-dimensional space over a
    field with q elements.

    Computed numerator-first: after j factors the running product is the
    (n, j) count itself, so every intermediate division is exact and the
    whole computation stays in the integers.
    """
    if q < 2:
        raise ValueError(f"gaussian_binomial expects q >= 2, got {q}")
    if not 0 <= m <= n:
        raise ValueError(f"gaussian_binomial expects 0 <= m <= n, got n={n}, m={m}")
    out = 1
    for i in range(m):
        out *= q ** (n - i) - 1
        den = q ** (i + 1) - 1
        assert out % den == 0
        out //= den
    return out
