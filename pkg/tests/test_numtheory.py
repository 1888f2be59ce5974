import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from reptend.errors import DomainError
from reptend.numtheory import (divisors, euler_phi, factorize, find_primitive_root, is_prime,
                               iter_prime_segments, mobius, mod_pow, multiplicative_order,
                               next_prime, order_divide_down, sieve_primes, squarefree_divisors)

from conftest import brute_order, trial_is_prime


def test_sieve_small():
    assert sieve_primes(10).primes.tolist() == [2, 3, 5, 7]
    assert sieve_primes(2).primes.tolist() == [2]
    with pytest.raises(DomainError):
        sieve_primes(1)


def test_sieve_count_1e6_against_trial_division(table_1e6):
    base = [p for p in range(2, 1001) if trial_is_prime(p)]
    count = 1  # the prime 2
    for n in range(3, 10**6 + 1, 2):
        for p in base:
            if p * p > n:
                count += 1
                break
            if n % p == 0:
                break
        else:
            count += 1
    assert count == 78498
    assert len(table_1e6) == count


def test_spf_table_is_least_prime_factor():
    t = sieve_primes(5000)
    for n in range(2, 5001):
        q = int(t.spf[n])
        assert n % q == 0 and trial_is_prime(q)
        assert all(n % d for d in range(2, q))


def test_spf_skipped_beyond_budget():
    t = sieve_primes(1000, budget=100)
    assert t.spf is None and len(t) == 168
    with pytest.raises(DomainError):
        sieve_primes(1000, spf=True, budget=100)


@pytest.mark.parametrize("segment", [7, 100, 4096])
def test_segmented_sieve_matches_flat(segment):
    seg = np.concatenate(list(iter_prime_segments(2, 20000, segment=segment)))
    assert seg.tolist() == sieve_primes(20000).primes.tolist()
    mid = np.concatenate(list(iter_prime_segments(9000, 9100, segment=13)))
    assert mid.tolist() == [p for p in range(9000, 9101) if trial_is_prime(p)]


def test_is_prime_matches_trial_division():
    assert [n for n in range(20000) if is_prime(n)] == [n for n in range(20000) if trial_is_prime(n)]
    # strong pseudoprimes to several small bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)
    assert next_prime(7) == 11 and next_prime(1) == 2


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(60).factors == ((2, 2), (3, 1), (5, 1))
    f = factorize(56598312)
    assert f.value() == 56598312
    assert all(trial_is_prime(p) for p in f.primes)
    assert f.factors == ((2, 3), (3, 1), (31, 1), (127, 1), (599, 1))
    with pytest.raises(DomainError):
        factorize(0)


def test_factorize_with_spf_table_agrees(table_1e6):
    rng = random.Random(3)
    for _ in range(2000):
        n = rng.randrange(1, 10**6 + 1)
        assert factorize(n, table_1e6) == factorize(n)


def test_factorize_large_semiprimes():
    p, q = 1_000_003, 999_983
    assert factorize(p * q).factors == ((q, 1), (p, 1))
    assert factorize(p**3 * 7).factors == ((7, 1), (p, 3))


@pytest.mark.slow
def test_factorize_recomposes_random_1e12():
    rng = random.Random(20240601)
    for _ in range(10**5):
        n = rng.randrange(1, 10**12 + 1)
        f = factorize(n, seed=7)
        assert f.value() == n
        assert list(f.primes) == sorted(set(f.primes))


@given(st.integers(min_value=1, max_value=10**18))
@settings(max_examples=200, deadline=None)
def test_factorize_property(n):
    f = factorize(n)
    assert f.value() == n
    assert all(is_prime(p) and e >= 1 for p, e in f.factors)


def test_arithmetic_function_examples():
    assert mobius(10) == 1 and mobius(12) == 0 and mobius(1) == 1 and mobius(30) == -1
    assert euler_phi(6) == 2 and euler_phi(1) == 1
    assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
    assert squarefree_divisors(12) == [(1, 1), (2, -1), (3, -1), (6, 1)]


def test_divisor_sum_identities():
    for n in range(1, 10**4 + 1):
        f = factorize(n)
        ds = divisors(f)
        assert sum(euler_phi(d) for d in ds) == n
        assert sum(mobius(d) for d in ds) == (1 if n == 1 else 0)


def test_euler_phi_by_counting():
    for n in range(1, 300):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_mod_pow():
    assert mod_pow(10, 6, 7) == 10**6 % 7 == 1
    assert mod_pow(12345, 0, 97) == 1
    assert mod_pow(10, 486, 487**2) == 10**486 % 237169 == 1
    m = 2**126 + 1
    assert mod_pow(3, 10**5, m) == 3**(10**5) % m
    with pytest.raises(DomainError):
        mod_pow(2, 3, 1)


def test_multiplicative_order_examples():
    r = multiplicative_order(10, 7)
    assert (r.order, r.is_primitive) == (6, True)
    assert [10**k % 7 for k in range(1, 7)].index(1) == 5
    r = multiplicative_order(10, 11)
    assert (r.order, r.is_primitive) == (2, False)
    for p in (3, 5, 101):
        assert multiplicative_order(1, p).order == 1
    with pytest.raises(DomainError, match="base divisible by modulus"):
        multiplicative_order(14, 7)


def test_order_against_power_walk(small_primes):
    for p in small_primes[:60]:
        for u in range(1, p):
            r = multiplicative_order(u, p)
            assert r.order == brute_order(u, p)
            assert pow(u, r.order, p) == 1


@pytest.mark.slow
def test_order_divides_p_minus_1_up_to_1e4():
    for p in sieve_primes(10**4).primes.tolist():
        qs = factorize(p - 1).primes
        for u in range(2, p):
            o = order_divide_down(u, p, qs)
            assert (p - 1) % o == 0 and pow(u, o, p) == 1


def test_find_primitive_root_examples():
    assert find_primitive_root(7) == 3
    assert brute_order(2, 7) == 3 and brute_order(3, 7) == 6
    assert find_primitive_root(2) == 1
    assert find_primitive_root(41) == 6


def test_find_primitive_root_brute_force(small_primes):
    for p in small_primes:
        g = next(g for g in range(1, p + 1) if brute_order(g, p) == p - 1)
        assert find_primitive_root(p) == g
