"""Plane order arithmetic around v = x**2 + x + 1 with x = u**2.

A candidate plane order x is always a square here; v is the point count,
and v factors as (u**2 + u + 1)(u**2 - u + 1) with coprime halves.  The
functions in this module are the per-order filters: the admissibility
test on indices, the prime-power classification of u**2 + u + 1, the
cofactor inequality gate, and the two-count bookkeeping for involution
classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt

from .exactmath import Factorization, factorize, is_prime, is_prime_power, merge_factorizations


@dataclass(frozen=True)
class PlaneOrder:
    u: int
    x: int
    v: int
    v_factors: Factorization
    factor_plus: int   # u**2 + u + 1
    factor_minus: int  # u**2 - u + 1


def plane_order(u: int) -> PlaneOrder:
    """Exact plane-order data for square order x = u**2.  Requires u >= 2."""
    if u < 2:
        raise ValueError(f"plane_order expects u >= 2, got {u}")
    x = u * u
    plus = x + u + 1
    minus = x - u + 1
    v = x * x + x + 1
    assert v == plus * minus and gcd(plus, minus) == 1
    v_factors = merge_factorizations(factorize(plus), factorize(minus))
    return PlaneOrder(u=u, x=x, v=v, v_factors=v_factors,
                      factor_plus=plus, factor_minus=minus)


def admissible_index(n: int) -> bool:
    """True iff every prime divisor of n is 3 or lies in 1 mod 3, and the
    exponent of 3 is at most 1.  n = 1 passes vacuously."""
    if n < 1:
        raise ValueError(f"admissible_index expects n >= 1, got {n}")
    for p, e in factorize(n).factors:
        if p == 3:
            if e > 1:
                return False
        elif p % 3 != 1:
            return False
    return True


class LjunggrenClass(Enum):
    PRIME_VALUE = "prime"
    SEVEN_CUBED = "seven-cubed"
    OTHER_PRIME_POWER = "other-prime-power"
    COMPOSITE = "composite"


def ljunggren_classify(u: int) -> LjunggrenClass:
    """Classify u**2 + u + 1: prime, the exceptional perfect power 343
    (u = 18), some other proper prime power, or composite."""
    if u < 1:
        raise ValueError(f"ljunggren_classify expects u >= 1, got {u}")
    n = u * u + u + 1
    if is_prime(n):
        return LjunggrenClass.PRIME_VALUE
    pp = is_prime_power(n)
    if pp is None:
        return LjunggrenClass.COMPOSITE
    return LjunggrenClass.SEVEN_CUBED if n == 343 else LjunggrenClass.OTHER_PRIME_POWER


def quadratic_ratio_root(t: int) -> int | None:
    """The integer u >= 2 with u**2 - u + 1 == t, if one exists."""
    if t < 3:
        return None
    disc = 4 * t - 3
    s = isqrt(disc)
    if s * s != disc:
        return None
    u = (1 + s) // 2
    return u if u >= 2 and u * u - u + 1 == t else None


def kantor_inequality_holds(p: int, a: int, m: int, u: int) -> bool:
    """Cofactor gate for v(u) = p**a * m with a >= 2 and p coprime to m:
    either m > 8 * p**a, or p**a is 343 and coincides with u**2 + u + 1
    or u**2 - u + 1.  Malformed decompositions are rejected."""
    if a < 2:
        raise ValueError(f"kantor_inequality_holds expects a >= 2, got {a}")
    if not is_prime(p):
        raise ValueError(f"kantor_inequality_holds expects p prime, got {p}")
    if m % p == 0:
        raise ValueError(f"kantor_inequality_holds expects gcd(p, m) = 1, got p={p}, m={m}")
    v = (u * u + u + 1) * (u * u - u + 1)
    if p**a * m != v:
        raise ValueError(f"p**a * m = {p**a * m} does not match v(u) = {v}")
    if m > 8 * p**a:
        return True
    return p**a == 343 and 343 in (u * u + u + 1, u * u - u + 1)


@dataclass(frozen=True)
class InvolutionCount:
    """Counting data for one involution class acting on a plane: n_g class
    members total, r_g of them through a fixed point, forcing the ratio
    u**2 - u + 1 and the fixed-point count d_g = u**2 + u + 1."""

    n_g: int
    r_g: int
    ratio: int
    u: int
    d_g: int

    @property
    def v(self) -> int:
        return self.ratio * self.d_g


def involution_counts(n_g: int, r_g: int) -> InvolutionCount | None:
    """Build the forced counts from (n_g, r_g), or None when the pair
    cannot arise: non-divisibility, or a ratio not of the quadratic form,
    or a plane order below the minimum (u < 2 is absence, not an error)."""
    if n_g < 1 or r_g < 1:
        raise ValueError(f"involution_counts expects positive counts, got ({n_g}, {r_g})")
    if n_g % r_g != 0:
        return None
    ratio = n_g // r_g
    u = quadratic_ratio_root(ratio)
    if u is None:
        return None
    return InvolutionCount(n_g=n_g, r_g=r_g, ratio=ratio, u=u, d_g=u * u + u + 1)


def largest_prime_part_bound(c: int, p: int, a: int, m: int) -> int:
    """Bound max(p**a, m + 2*sqrt(m) + 2) on the p-part of v for a class
    count 2**c * p**a * m with m odd and coprime to p."""
    if c < 0 or a < 1:
        raise ValueError(f"largest_prime_part_bound expects c >= 0, a >= 1, got c={c}, a={a}")
    if not is_prime(p) or p == 2:
        raise ValueError(f"largest_prime_part_bound expects an odd prime p, got {p}")
    if m < 1 or m % 2 == 0:
        raise ValueError(f"largest_prime_part_bound expects odd m >= 1, got {m}")
    if m % p == 0:
        raise ValueError(f"largest_prime_part_bound expects gcd(p, m) = 1, got p={p}, m={m}")
    return max(p**a, m + 2 * isqrt(m) + 2)
