"""Arithmetic primitives against independent small-scale oracles."""

import random
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planesieve.exactmath import (Factorization, factorize, gaussian_binomial,
                                  geom_sum, is_prime, is_prime_power,
                                  merge_factorizations, nth_root, small_primes)

from _oracles import brute_subspace_count


def _reference_sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:limit + 1:p] = bytearray(len(range(p * p, limit + 1, p)))
    return [n for n in range(limit + 1) if flags[n]]


def test_small_primes_match_reference_sieve():
    assert small_primes(10_000) == _reference_sieve(10_000)


def test_small_primes_beyond_cache():
    primes = small_primes(100_000)
    assert len(primes) == 9592
    assert primes[-1] == 99991


def test_is_prime_matches_trial_division():
    for n in range(-3, 3000):
        expected = n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))
        assert is_prime(n) == expected, n


@pytest.mark.parametrize("n,expected", [
    (2**61 - 1, True),          # Mersenne prime
    (2**89 - 1, True),          # Mersenne prime
    (2**67 - 1, False),         # Mersenne composite
    (561, False),               # Carmichael
    (41041, False),             # Carmichael
    (3215031751, False),        # strong pseudoprime to bases 2, 3, 5, 7
    (10**9 + 7, True),
    (10**9 + 9, True),
])
def test_is_prime_known_values(n, expected):
    assert is_prime(n) == expected


def test_factorize_round_trip_small_range():
    for n in range(2, 2000):
        f = factorize(n)
        assert f.value == n
        assert f.reassemble() == n
        assert list(f.factors) == sorted(f.factors)
        for p, e in f.factors:
            assert is_prime(p) and e >= 1


def test_factorize_round_trip_random():
    rng = random.Random(2026)
    for _ in range(120):
        n = rng.randrange(2, 10**12)
        f = factorize(n)
        assert f.reassemble() == n
        assert all(is_prime(p) for p, _ in f.factors)


@pytest.mark.parametrize("n,factors", [
    (343, ((7, 3),)),
    (105301, ((7, 3), (307, 1))),
    (273, ((3, 1), (7, 1), (13, 1))),
    (2**10 * 3**4, ((2, 10), (3, 4))),
    (9139, ((13, 1), (19, 1), (37, 1))),
])
def test_factorize_known(n, factors):
    assert factorize(n).factors == factors


def test_factorization_exponent_of():
    f = factorize(105301)
    assert f.exponent_of(7) == 3
    assert f.exponent_of(307) == 1
    assert f.exponent_of(11) == 0


def test_merge_factorizations():
    merged = merge_factorizations(factorize(12), factorize(18))
    assert merged.value == 216
    assert merged.factors == ((2, 3), (3, 3))


def test_is_prime_power_full_small_range():
    limit = 50_000
    table = {}
    for p in small_primes(limit):
        value, e = p, 1
        while value <= limit:
            table[value] = (p, e)
            value *= p
            e += 1
    for n in range(2, limit + 1):
        assert is_prime_power(n) == table.get(n), n


def test_is_prime_power_constructed_powers():
    rng = random.Random(7)
    for _ in range(80):
        p = rng.choice(small_primes(10_000)[10:])
        a = rng.randrange(1, 12)
        assert is_prime_power(p**a) == (p, a)


def test_is_prime_power_rejects_mixed():
    for n in (6, 12, 100, 2**5 * 3, 7 * 11, 343 * 307):
        assert is_prime_power(n) is None


def test_nth_root_exact_cases():
    rng = random.Random(11)
    for _ in range(150):
        r = rng.randrange(2, 10**6)
        k = rng.randrange(2, 12)
        root, exact = nth_root(r**k, k)
        assert (root, exact) == (r, True)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10**30), st.integers(1, 40))
def test_nth_root_bracketing(x, k):
    root, exact = nth_root(x, k)
    assert root**k <= x < (root + 1) ** k
    assert exact == (root**k == x)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10**9))
def test_factorize_reassembles(n):
    f = factorize(n)
    assert f.reassemble() == n
    assert all(is_prime(p) for p, _ in f.factors)


def test_geom_sum_matches_closed_form():
    for q in (2, 3, 5, 10):
        for k in range(0, 8):
            assert geom_sum(q, k) == (q ** (k + 1) - 1) // (q - 1)
            assert geom_sum(q, k, 2) == (q ** (2 * (k + 1)) - 1) // (q**2 - 1)


def test_geom_sum_rejects_tiny_base():
    with pytest.raises(ValueError):
        geom_sum(1, 5)


def test_gaussian_binomial_matches_subspace_enumeration():
    assert gaussian_binomial(4, 2, 2) == brute_subspace_count(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == brute_subspace_count(3, 1, 3) == 13
    assert gaussian_binomial(4, 1, 2) == brute_subspace_count(4, 1, 2) == 15


def test_gaussian_binomial_symmetry_and_recurrence():
    for q in (2, 3, 4, 5):
        for n in range(1, 9):
            for m in range(0, n + 1):
                gb = gaussian_binomial(n, m, q)
                assert gb == gaussian_binomial(n, n - m, q)
                if 1 <= m <= n - 1:
                    assert gb == (gaussian_binomial(n - 1, m - 1, q)
                                  + q**m * gaussian_binomial(n - 1, m, q))


def test_gaussian_binomial_edges():
    assert gaussian_binomial(6, 0, 2) == 1
    assert gaussian_binomial(6, 6, 2) == 1
    assert gaussian_binomial(5, 1, 7) == geom_sum(7, 4)
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3, 2)


def test_factorization_is_immutable():
    f = factorize(12)
    assert isinstance(f, Factorization)
    with pytest.raises(AttributeError):
        f.value = 13
