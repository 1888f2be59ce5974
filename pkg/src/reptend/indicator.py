"""Characteristic function of primitive roots via additive characters.

For a prime ``p`` with primitive root ``tau`` the indicator of primitive
elements ``u`` can be written as

    Psi(u) = sum_{gcd(n, p-1) = 1} (1/p) sum_{k=0}^{p-1} exp(2 pi i (tau**n - u) k / p).

The inner sum is ``p`` when ``tau**n == u`` and 0 otherwise, so the exact
evaluator reduces to membership of ``u`` in ``{tau**n : gcd(n, p-1) = 1}``.
The numeric evaluator sums the complex exponentials literally.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CostCapError, DomainError, VerificationError
from .numtheory import (euler_phi, factorize, find_primitive_root, is_prime,
                        is_primitive_mod, order_divide_down)

#: Largest prime accepted by :func:`psi_numeric`.
NUMERIC_CAP = 10**4
#: Largest ``pmax`` accepted by :func:`psi_census_check`.
CENSUS_CAP = 2000


@dataclass(frozen=True)
class PsiEvaluation:
    p: int
    tau: int
    u: int
    psi_exact: int
    psi_numeric: float
    indicator_oracle: int
    imag: float = 0.0


def _check_args(p, tau, u):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not 1 <= u <= p - 1:
        raise DomainError(f"u must lie in [1, {p - 1}], got {u}")
    if tau % p == 0 or not is_primitive_mod(tau, p, factorize(p - 1).primes):
        raise DomainError(f"{tau} is not a primitive root mod {p}")


def primitive_set(p: int, tau: int) -> np.ndarray:
    """Sorted ``{tau**n mod p : 1 <= n <= p-1, gcd(n, p-1) = 1}``."""
    out = []
    x = 1
    for n in range(1, p):
        x = x * tau % p
        if math.gcd(n, p - 1) == 1:
            out.append(x)
    return np.array(sorted(out), dtype=np.int64)


def psi_exact(p: int, tau: int, u: int) -> int:
    """1 if ``u`` is a primitive root mod ``p``, else 0, by discrete-log membership."""
    _check_args(p, tau, u)
    hits = 0
    x = 1
    for n in range(1, p):
        x = x * tau % p
        # inner character sum is p when tau^n == u, else 0; the 1/p cancels it
        if x == u % p and math.gcd(n, p - 1) == 1:
            hits += 1
    return hits


def psi_numeric(p: int, tau: int, u: int) -> complex:
    """Literal floating-point value of the double exponential sum.

    Returns the complex total; its real part approximates ``psi_exact`` and
    its imaginary part is rounding noise kept for diagnostics. The cost is
    ``p * phi(p - 1)`` exponentials, so ``p`` is capped at ``NUMERIC_CAP``.
    """
    if p > NUMERIC_CAP:
        raise CostCapError(f"psi_numeric refuses p = {p} > {NUMERIC_CAP}")
    _check_args(p, tau, u)
    k = np.arange(p, dtype=np.int64)
    re, im = [], []
    x = 1
    for n in range(1, p):
        x = x * tau % p
        if math.gcd(n, p - 1) != 1:
            continue
        z = (x - u) % p
        phase = 2.0 * np.pi * ((z * k) % p) / p
        re.append(np.cos(phase))
        im.append(np.sin(phase))
    if not re:
        return 0j
    real = math.fsum(np.concatenate(re).tolist()) / p
    imag = math.fsum(np.concatenate(im).tolist()) / p
    return complex(real, imag)


def evaluate(p: int, tau: int, u: int, numeric: bool = True) -> PsiEvaluation:
    """Both evaluators plus the direct order test for one element."""
    exact = psi_exact(p, tau, u)
    val = psi_numeric(p, tau, u) if numeric else complex(exact)
    oracle = int(order_divide_down(u, p, factorize(p - 1).primes) == p - 1)
    return PsiEvaluation(p=p, tau=tau, u=u, psi_exact=exact, psi_numeric=val.real,
                         indicator_oracle=oracle, imag=val.imag)


@dataclass
class Lemma1Report:
    pmax: int
    primes_checked: int = 0
    elements_checked: int = 0
    mismatches: list = field(default_factory=list)
    root_counts: dict = field(default_factory=dict)
    phi_values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.root_counts == self.phi_values


def psi_census_check(pmax: int, strict: bool = True) -> Lemma1Report:
    """Exhaustive comparison of the characteristic function with the order test.

    Every prime ``p <= pmax`` and every ``u`` in ``[1, p-1]`` is checked, and
    the number of primitive roots per prime is compared with ``phi(p - 1)``.
    With ``strict`` any disagreement raises :class:`VerificationError`.
    """
    if pmax > CENSUS_CAP:
        raise CostCapError(f"psi_census_check is capped at pmax = {CENSUS_CAP}")
    if pmax < 2:
        raise DomainError("pmax must be >= 2")
    rep = Lemma1Report(pmax=pmax)
    for p in range(2, pmax + 1):
        if not is_prime(p):
            continue
        tau = find_primitive_root(p)
        qs = factorize(p - 1).primes
        members = set(primitive_set(p, tau).tolist())
        count = 0
        for u in range(1, p):
            psi = int(u in members)
            oracle = int(order_divide_down(u, p, qs) == p - 1)
            count += psi
            if psi != oracle:
                rep.mismatches.append((p, u, psi, oracle))
        rep.primes_checked += 1
        rep.elements_checked += p - 1
        rep.root_counts[p] = count
        rep.phi_values[p] = euler_phi(p - 1)
    if strict and not rep.ok:
        bad = rep.mismatches[:1] or [(p, rep.root_counts[p], rep.phi_values[p])
                                     for p in rep.root_counts
                                     if rep.root_counts[p] != rep.phi_values[p]][:1]
        raise VerificationError(f"characteristic function disagrees with order test: {bad[0]}",
                                counterexample=bad[0])
    return rep
