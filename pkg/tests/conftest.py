import math

import pytest

from reptend.numtheory import sieve_primes


def trial_is_prime(n):
    """Reference primality by trial division; independent of the sieve."""
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def brute_order(u, p):
    """Least k with u^k = 1 mod p by walking the powers."""
    x, k = u % p, 1
    while x != 1:
        x = x * u % p
        k += 1
    return k


@pytest.fixture(scope="session")
def table_1e6():
    return sieve_primes(10**6)


@pytest.fixture(scope="session")
def small_primes():
    return [p for p in range(2, 2001) if trial_is_prime(p)]
