"""Prime tables, factorization, arithmetic functions and multiplicative orders.

Everything else in the package sits on top of this module. Sieving is done
with numpy boolean masks; all modular arithmetic uses Python integers, so
moduli of any size (e.g. ``p**2`` for Wieferich tests) are exact.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .errors import DomainError

#: Default ceiling on the number of entries of a smallest-prime-factor table.
SPF_BUDGET = 2**31

# Largest limit sieved in a single odd-only mask; larger limits are segmented.
_FLAT_SIEVE_MAX = 2**27
_SEGMENT = 2**22

# First 13 primes: a deterministic Miller-Rabin witness set below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


# ---------------------------------------------------------------------------
# sieving
# ---------------------------------------------------------------------------

def _flat_primes(limit: int) -> np.ndarray:
    """All primes <= limit from a single odd-only mask."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    # index i stands for 2*i + 1
    mask = np.ones((limit + 1) // 2, dtype=bool)
    mask[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if mask[i]:
            p = 2 * i + 1
            mask[p * p // 2::p] = False
    odd = 2 * np.flatnonzero(mask).astype(np.int64) + 1
    return np.concatenate((np.array([2], dtype=np.int64), odd))


def iter_prime_segments(lo: int, hi: int, segment: int = _SEGMENT) -> Iterator[np.ndarray]:
    """Yield ascending arrays of the primes in ``[lo, hi]``, one segment at a time."""
    lo = max(lo, 2)
    if hi < lo:
        return
    base = _flat_primes(math.isqrt(hi))
    start = lo
    while start <= hi:
        stop = min(start + segment, hi + 1)  # exclusive
        mask = np.ones(stop - start, dtype=bool)
        for p in base.tolist():
            if p * p >= stop:
                break
            first = max(p * p, -(-start // p) * p)
            mask[first - start::p] = False
        if start <= 1 < stop:
            mask[1 - start] = False
        yield np.flatnonzero(mask).astype(np.int64) + start
        start = stop


def _spf_table(limit: int, primes: np.ndarray) -> np.ndarray:
    dtype = np.int32 if limit < 2**31 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    for p in primes.tolist():
        if p * p > limit:
            break
        view = spf[p * p::p]
        view[view == 0] = p
    spf[primes] = primes
    return spf


@dataclass(frozen=True)
class PrimeTable:
    """Primes up to ``limit``, optionally with a smallest-prime-factor table.

    ``spf[n]`` is the least prime dividing ``n`` for ``2 <= n <= limit``;
    entries 0 and 1 are zero. The table is ``None`` when it was not requested
    or would exceed the memory budget.
    """

    limit: int
    primes: np.ndarray
    spf: Optional[np.ndarray] = field(default=None, repr=False)

    def __len__(self):
        return int(self.primes.size)

    def __contains__(self, n):
        if n < 2 or n > self.limit:
            return False
        if self.spf is not None:
            return int(self.spf[n]) == n
        i = int(np.searchsorted(self.primes, n))
        return i < self.primes.size and int(self.primes[i]) == n

    def primes_in(self, lo: int, hi: int) -> np.ndarray:
        """Primes in the closed interval ``[lo, hi]``."""
        a = np.searchsorted(self.primes, lo, side="left")
        b = np.searchsorted(self.primes, hi, side="right")
        return self.primes[a:b]


def sieve_primes(limit: int, spf: Optional[bool] = None, budget: int = SPF_BUDGET) -> PrimeTable:
    """Sieve of Eratosthenes up to ``limit`` (inclusive).

    Args:
        limit: upper end of the range, at least 2.
        spf: build the smallest-prime-factor table. ``None`` builds it whenever
            ``limit + 1 <= budget``; ``True`` raises if the budget is exceeded.
        budget: maximum number of spf entries.
    """
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    fits = limit + 1 <= budget
    if spf and not fits:
        raise DomainError(f"spf table for limit {limit} exceeds budget of {budget} entries")
    want_spf = fits if spf is None else bool(spf)

    if limit <= _FLAT_SIEVE_MAX:
        primes = _flat_primes(limit)
    else:
        primes = np.concatenate(list(iter_prime_segments(2, limit)))
    table = _spf_table(limit, primes) if want_spf else None
    return PrimeTable(limit=limit, primes=primes, spf=table)


# ---------------------------------------------------------------------------
# primality and factorization
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for ``n`` below 3.3e24 (probabilistic-free)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    if n >= _MR_LIMIT:
        raise DomainError(f"{n} is beyond the deterministic Miller-Rabin range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def _brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the odd composite ``n`` (Pollard rho, Brent's cycle)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
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
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition ``n = prod(p**e for p, e in factors)``."""

    n: int
    factors: tuple

    @property
    def primes(self) -> tuple:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __iter__(self):
        return iter(self.factors)


def _factor_into(n: int, counts: dict, rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _brent(m, rng)
        stack.append(d)
        stack.append(m // d)


def factorize(n: int, table: Optional[PrimeTable] = None, seed: int = 0) -> Factorization:
    """Factor ``n >= 1`` completely.

    Uses the spf table of ``table`` when ``n`` is covered by it, otherwise
    trial division by small primes followed by a seeded Pollard-Brent rho.
    The result does not depend on the seed, only the running time does.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    counts: dict = {}
    if table is not None and table.spf is not None and n <= table.limit:
        spf = table.spf
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
        return Factorization(n, tuple(sorted(counts.items())))

    m = n
    for p in _SMALL_PRIMES:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    if m > 1:
        _factor_into(m, counts, random.Random(seed))
    return Factorization(n, tuple(sorted(counts.items())))


def _as_factorization(n: Union[int, Factorization]) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


def mobius(n: Union[int, Factorization]) -> int:
    f = _as_factorization(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: Union[int, Factorization]) -> int:
    f = _as_factorization(n)
    out = 1
    for p, e in f.factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def divisors(f: Union[int, Factorization]) -> list:
    """All positive divisors, ascending."""
    f = _as_factorization(f)
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_divisors(f: Union[int, Factorization]) -> list:
    """Pairs ``(d, mobius(d))`` for the squarefree divisors ``d``, ascending in ``d``."""
    f = _as_factorization(f)
    out = [(1, 1)]
    for p, _ in f.factors:
        out += [(d * p, -mu) for d, mu in out]
    return sorted(out)


# ---------------------------------------------------------------------------
# modular arithmetic and orders
# ---------------------------------------------------------------------------

def mod_pow(b: int, e: int, m: int) -> int:
    """``b**e mod m`` in ``[0, m)`` with exact big-integer arithmetic."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if e < 0:
        raise DomainError("exponent must be nonnegative")
    return pow(b, e, m)


@dataclass(frozen=True)
class OrderRecord:
    p: int
    u: int
    order: int
    is_primitive: bool


def order_divide_down(u: int, p: int, prime_factors: Sequence[int]) -> int:
    """Order of ``u`` mod ``p`` given the distinct primes dividing ``p - 1``.

    Starts from ``p - 1`` and strips each prime ``q`` while ``u**(order/q)``
    is still 1. No validation; callers guarantee ``p`` prime and ``p`` not
    dividing ``u``.
    """
    order = p - 1
    u %= p
    for q in prime_factors:
        while order % q == 0 and pow(u, order // q, p) == 1:
            order //= q
    return order


def is_primitive_mod(u: int, p: int, prime_factors: Sequence[int]) -> bool:
    """True iff ``u`` generates the multiplicative group mod the prime ``p``."""
    u %= p
    if u == 0:
        return False
    return all(pow(u, (p - 1) // q, p) != 1 for q in prime_factors)


def multiplicative_order(u: int, p: int, table: Optional[PrimeTable] = None) -> OrderRecord:
    """Least ``k >= 1`` with ``u**k == 1 (mod p)`` for a prime ``p``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if u % p == 0:
        raise DomainError("base divisible by modulus")
    fac = factorize(p - 1, table)
    order = order_divide_down(u, p, fac.primes)
    return OrderRecord(p=p, u=u, order=order, is_primitive=order == p - 1)


def find_primitive_root(p: int, table: Optional[PrimeTable] = None) -> int:
    """Smallest positive primitive root modulo the prime ``p`` (1 for ``p = 2``)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = factorize(p - 1, table).primes
    g = 2
    while not is_primitive_mod(g, p, qs):
        g += 1
    return g


def coprime_indices(m: int) -> np.ndarray:
    """The integers ``n`` in ``[1, m]`` with ``gcd(n, m) == 1``."""
    n = np.arange(1, m + 1, dtype=np.int64)
    return n[np.gcd(n, m) == 1]


def power_table(tau: int, p: int, count: int) -> np.ndarray:
    """``[tau**0, tau**1, ..., tau**(count-1)] mod p`` computed incrementally."""
    out = np.empty(count, dtype=np.int64)
    x = 1
    tau %= p
    for j in range(count):
        out[j] = x
        x = x * tau % p
    return out
