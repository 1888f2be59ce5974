"""Repeating expansions of 1/p in an arbitrary base."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, VerificationError
from .numtheory import PrimeTable, is_prime, is_primitive_mod, factorize, sieve_primes

#: Periods longer than this are reported without their digit block.
MAX_DIGITS = 10**6

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class PeriodRecord:
    """Period ``d`` of ``1/p`` in base ``base`` and its repeating block.

    ``digits`` holds the block most-significant first (``x_{d-1} ... x_0``),
    one byte per digit, or ``None`` when extraction was skipped.
    """

    p: int
    base: int
    d: int
    digits: Optional[bytes]
    maximal: bool

    @property
    def text(self) -> Optional[str]:
        if self.digits is None or self.base > len(_ALPHABET):
            return None
        return "".join(_ALPHABET[x] for x in self.digits)

    def block_value(self) -> int:
        """The repeating block read as an integer ``m``; satisfies ``m * p == base**d - 1``."""
        if self.digits is None:
            raise DomainError("digit block was not extracted")
        m = 0
        for x in self.digits:
            m = m * self.base + x
        return m


def period_digits(p: int, base: int = 10, force: bool = False) -> PeriodRecord:
    """Long division of 1 by ``p`` in ``base`` until the remainder returns to 1.

    The digit block is dropped for periods above ``MAX_DIGITS`` unless
    ``force`` is set; the period itself is always exact.
    """
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if base % p == 0:
        raise DomainError("terminating expansion, no period")

    out = bytearray()
    r = 1
    d = 0
    keep = True
    while True:
        r *= base
        if keep:
            out.append(r // p)
        r %= p
        d += 1
        if keep and d > MAX_DIGITS and not force:
            keep = False
            out = bytearray()
        if r == 1:
            break
    return PeriodRecord(p=p, base=base, d=d, digits=bytes(out) if keep else None,
                        maximal=d == p - 1)


def full_reptend_scan(x: int, base: int = 10, spot_checks: int = 8, seed: int = 0,
                      table: Optional[PrimeTable] = None) -> list:
    """Primes ``p <= x`` not dividing ``base`` for which ``base`` is a primitive root.

    Primitivity comes from the order test on the factored ``p - 1``; up to
    ``spot_checks`` hits (chosen with a seeded RNG) are re-derived by long
    division and any disagreement raises :class:`VerificationError`.
    """
    if x < 2 or base < 2:
        raise DomainError("need x >= 2 and base >= 2")
    if table is None or table.limit < x:
        table = sieve_primes(x)
    hits = []
    for p in table.primes_in(2, x).tolist():
        if base % p == 0:
            continue
        if is_primitive_mod(base, p, factorize(p - 1, table).primes):
            hits.append(p)

    rng = random.Random(seed)
    sample = [p for p in hits if p - 1 <= MAX_DIGITS]
    for p in rng.sample(sample, min(spot_checks, len(sample))):
        rec = period_digits(p, base)
        if not rec.maximal:
            raise VerificationError(f"order test says {p} is full reptend, long division gives d={rec.d}",
                                    counterexample=p)
    return hits
