"""Counting primes with a given primitive root, totient sums and Wieferich primes.

Every routine here reports what it observes next to the prediction from
:mod:`reptend.density`; none of them can establish an asymptotic statement.
"""
from __future__ import annotations

import math
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .density import DEFAULT_TRUNCATION, artin_constant, delta, log_integral
from .errors import DomainError
from .numtheory import PrimeTable, factorize, iter_prime_segments, order_divide_down, sieve_primes

#: Largest ``x`` accepted by :func:`census` and :func:`totient_sums`.
CENSUS_CAP = 10**8
#: Largest limit accepted by :func:`wieferich_scan`.
WIEFERICH_CAP = 10**9

SCOPE_NOTE = ("finite-range consistency check only; the asymptotic statements "
              "cannot be confirmed at desk scale")

_SHARED: dict = {}


@dataclass
class CensusReport:
    u: int
    x: int
    pi_x: int
    pi_u_x: int
    li_x: float
    delta_u: float
    predicted: float
    ratio: float
    skipped: list
    P: int
    tail_bound: float
    short_interval: bool = False
    scope: str = SCOPE_NOTE


def _count_primitive(u: int, primes, table: PrimeTable) -> int:
    hits = 0
    for p in primes:
        if u % p == 0:
            continue
        if order_divide_down(u, p, factorize(p - 1, table).primes) == p - 1:
            hits += 1
    return hits


def _worker(args):
    u, lo, hi = args
    table = _SHARED["table"]
    return _count_primitive(u, table.primes_in(lo, hi).tolist(), table)


def _parallel_count(u, lo, hi, table, threads):
    if threads <= 1:
        return _count_primitive(u, table.primes_in(lo, hi).tolist(), table)
    edges = np.linspace(lo, hi + 1, threads * 4 + 1).astype(np.int64).tolist()
    jobs = [(u, a, b - 1) for a, b in zip(edges[:-1], edges[1:]) if b > a]
    _SHARED["table"] = table
    try:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
            return sum(pool.map(_worker, jobs))
    finally:
        _SHARED.clear()


def census(u: int, x: int, P: int = DEFAULT_TRUNCATION, short_interval: bool = False,
           table: Optional[PrimeTable] = None, threads: int = 1,
           variant: str = "printed") -> CensusReport:
    """Count primes ``p <= x`` for which ``u`` is a primitive root.

    Primes dividing ``u`` are left out and listed in ``skipped``. With
    ``short_interval`` the window is ``[x, 2x]`` and ``li_x`` becomes
    ``li(2x) - li(x)``.
    """
    if x < 2:
        raise DomainError("x must be >= 2")
    if x > CENSUS_CAP:
        raise DomainError(f"census is capped at x = {CENSUS_CAP}")
    dens = delta(u, P, variant)
    lo, hi = (x, 2 * x) if short_interval else (2, x)
    if table is None or table.limit < hi or table.spf is None:
        table = sieve_primes(hi, spf=True)
    primes = table.primes_in(lo, hi)
    skipped = [p for p in primes.tolist() if u % p == 0]
    hits = _parallel_count(u, lo, hi, table, threads)
    li_x = log_integral(hi) - (log_integral(lo) if short_interval else 0.0)
    return CensusReport(u=u, x=x, pi_x=int(primes.size), pi_u_x=hits, li_x=li_x,
                        delta_u=dens.delta, predicted=dens.delta * li_x, ratio=hits / li_x,
                        skipped=skipped, P=P, tail_bound=dens.tail_bound,
                        short_interval=short_interval)


@dataclass
class TotientSumReport:
    x: int
    sum_ratio_pm1: float  # sum phi(p-1)/(p-1)
    sum_ratio_p: float  # sum phi(p-1)/p
    difference: float  # sum phi(p-1)/(p(p-1)), summed on its own
    li_x: float
    artin: float
    predicted: float
    residual_pm1: float
    residual_p: float
    P: int
    scope: str = SCOPE_NOTE

    @property
    def relative_residual_pm1(self) -> float:
        return abs(self.residual_pm1) / self.predicted

    @property
    def relative_residual_p(self) -> float:
        return abs(self.residual_p) / self.predicted


def totients_below(n: int) -> np.ndarray:
    """``phi(m)`` for ``0 <= m <= n`` (``phi(0)`` stored as 0)."""
    dtype = np.int32 if n < 2**31 else np.int64
    phi = np.arange(n + 1, dtype=dtype)
    for p in sieve_primes(max(n, 2), spf=False).primes.tolist():
        if p > n:
            break
        phi[p::p] -= phi[p::p] // p
    return phi


def totient_sums(x: int, P: int = DEFAULT_TRUNCATION) -> TotientSumReport:
    """Average-density sums over primes ``p <= x`` against ``A * li(x)``."""
    if x < 2:
        raise DomainError("x must be >= 2")
    if x > CENSUS_CAP:
        raise DomainError(f"totient sums are capped at x = {CENSUS_CAP}")
    primes = sieve_primes(x, spf=False).primes
    phi = totients_below(x - 1)[primes - 1].astype(np.float64)
    pf = primes.astype(np.float64)
    s_pm1 = math.fsum((phi / (pf - 1.0)).tolist())
    s_p = math.fsum((phi / pf).tolist())
    diff = math.fsum((phi / (pf * (pf - 1.0))).tolist())
    A = artin_constant(P).value
    li_x = log_integral(x)
    pred = A * li_x
    return TotientSumReport(x=x, sum_ratio_pm1=s_pm1, sum_ratio_p=s_p, difference=diff,
                            li_x=li_x, artin=A, predicted=pred, residual_pm1=s_pm1 - pred,
                            residual_p=s_p - pred, P=P)


@dataclass(frozen=True)
class WieferichHit:
    u: int
    p: int


def _ladder_pow(b: int, e: int, m: int) -> int:
    # right-to-left binary exponentiation; kept independent of built-in pow
    result, b = 1, b % m
    while e:
        if e & 1:
            result = result * b % m
        b = b * b % m
        e >>= 1
    return result


@dataclass
class WieferichReport:
    u: int
    limit: int
    hits: list = field(default_factory=list)
    revalidated: bool = True


def wieferich_scan(u: int, limit: int) -> list:
    """Primes ``p <= limit`` not dividing ``u`` with ``u**(p-1) == 1 (mod p**2)``, ascending.

    Each hit is recomputed with an independent square-and-multiply before
    it is returned.
    """
    if u < 2:
        raise DomainError("base must be >= 2")
    if limit > WIEFERICH_CAP:
        raise DomainError(f"Wieferich scan is capped at {WIEFERICH_CAP}")
    hits = []
    for seg in iter_prime_segments(2, limit):
        for p in seg.tolist():
            if u % p and pow(u, p - 1, p * p) == 1:
                if _ladder_pow(u, p - 1, p * p) != 1:
                    raise AssertionError(f"Wieferich revalidation failed at p={p}")
                hits.append(WieferichHit(u=u, p=p))
    return hits
