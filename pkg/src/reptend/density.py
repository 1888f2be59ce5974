"""Densities of primes with a prescribed primitive root, Artin's constant and li(x)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np
from scipy import integrate

from .errors import DomainError
from .numtheory import factorize, mobius, sieve_primes

#: Default truncation point of the Euler products.
DEFAULT_TRUNCATION = 10**7

#: Reference value used by the acceptance check. Its leading digits 0.37739
#: are a transposition of the true 0.37395 (Wrench 1961); see the README.
ARTIN_REFERENCE = 0.37739558136192022880547280


@dataclass(frozen=True)
class KernelDecomposition:
    """``u = root**k`` with ``k`` maximal and ``root = s * t**2``, ``s`` squarefree."""

    u: int
    k: int
    root: int
    s: int
    t: int
    mu_s: int
    s_mod4: int


def decompose_kernel(u: int, allow_square: bool = False, table=None) -> KernelDecomposition:
    """Split ``u >= 2`` into its maximal power and squarefree kernel.

    Perfect squares are rejected unless ``allow_square`` is set.
    """
    if u < 2:
        raise DomainError(f"base must be an integer >= 2, got {u}")
    fac = factorize(u, table)
    k = reduce(math.gcd, (e for _, e in fac.factors))
    if k % 2 == 0 and not allow_square:
        raise DomainError("excluded base u = v^2")
    root = s = t = 1
    for p, e in fac.factors:
        f = e // k
        root *= p**f
        if f % 2:
            s *= p
        t *= p ** (f // 2)
    return KernelDecomposition(u=u, k=k, root=root, s=s, t=t, mu_s=mobius(s), s_mod4=s % 4)


@lru_cache(maxsize=8)
def _euler_log_terms(P: int) -> tuple:
    """Primes ``p <= P`` and ``log(1 - 1/(p(p-1)))`` for each."""
    primes = sieve_primes(P, spf=False).primes
    pf = primes.astype(np.float64)
    return primes, np.log1p(-1.0 / (pf * (pf - 1.0)))


def _tail_bound(P: int) -> float:
    # |log tail| <= sum_{n>P} 2/n^2 <= 2/P; converted to a relative bound on the product
    return math.expm1(2.0 / P)


@dataclass(frozen=True)
class ArtinConstant:
    value: float
    tail_bound: float
    P: int


def artin_constant(P: int = DEFAULT_TRUNCATION) -> ArtinConstant:
    """``prod_{p <= P} (1 - 1/(p(p-1)))`` summed in log space.

    The truncated product overestimates the full one; ``tail_bound`` is a
    certified bound on the relative gap, so the limit lies in
    ``[value * (1 - tail_bound), value]``.
    """
    if P < 100:
        raise DomainError("truncation point must be >= 100")
    _, logs = _euler_log_terms(P)
    return ArtinConstant(value=math.exp(math.fsum(logs.tolist())), tail_bound=_tail_bound(P), P=P)


def a_k_value(dec: KernelDecomposition, P: int = DEFAULT_TRUNCATION, variant: str = "printed") -> float:
    """``a_k(u)``: a finite product over ``p | k`` times the truncated Euler product over ``p`` not dividing ``k``.

    ``variant="printed"`` uses the factor ``1/(p-1)`` for ``p | k``;
    ``variant="classical"`` uses Hooley's ``1 - 1/(p-1)``.
    """
    if variant not in ("printed", "classical"):
        raise DomainError(f"unknown variant {variant!r}")
    primes, logs = _euler_log_terms(max(P, 100))
    k_primes = factorize(dec.k).primes
    keep = ~np.isin(primes, k_primes)
    head = 1.0
    for p in k_primes:
        head *= 1.0 / (p - 1) if variant == "printed" else 1.0 - 1.0 / (p - 1)
    return head * math.exp(math.fsum(logs[keep].tolist()))


def _correction(dec: KernelDecomposition) -> float:
    k_primes = set(factorize(dec.k).primes)
    c = 1.0
    for p in factorize(dec.s).primes:
        if p in k_primes:
            if p == 2:
                raise DomainError("factor 1/(p-2) undefined for p = 2")
            c /= p - 2
        else:
            c /= p * p - p - 1
    return c


@dataclass(frozen=True)
class DensityResult:
    u: int
    decomposition: KernelDecomposition
    a_k: float
    delta: float
    P: int
    tail_bound: float
    case_branch: int
    variant: str = "printed"


def delta(u: int, P: int = DEFAULT_TRUNCATION, variant: str = "printed") -> DensityResult:
    """Density of primes having ``u`` as a primitive root.

    Case 1 (``s`` not 1 mod 4) returns ``a_k(u)``; case 2 multiplies by
    ``1 - mu(s) * prod_{p|s, p|k} 1/(p-2) * prod_{p|s, p!|k} 1/(p^2-p-1)``.
    """
    dec = decompose_kernel(u)
    ak = a_k_value(dec, P, variant)
    if dec.s_mod4 == 1:
        branch = 2
        value = (1.0 - dec.mu_s * _correction(dec)) * ak
    else:
        branch = 1
        value = ak
    return DensityResult(u=u, decomposition=dec, a_k=ak, delta=value, P=P,
                         tail_bound=_tail_bound(max(P, 100)), case_branch=branch, variant=variant)


def log_integral(x: float) -> float:
    """``li(x) = integral_2^x dt / log t`` by adaptive quadrature.

    Integrated in the variable ``y = log t`` (integrand ``e**y / y``), split
    at integer ``y`` so every panel is smooth and short.
    """
    if x < 2:
        raise DomainError(f"li(x) needs x >= 2, got {x}")
    lo, hi = math.log(2.0), math.log(x)
    if hi == lo:
        return 0.0
    cuts = [lo] + [float(c) for c in range(math.floor(lo) + 1, math.ceil(hi))] + [hi]
    f = lambda y: math.exp(y) / y  # noqa: E731
    pieces = [integrate.quad(f, a, b, epsabs=0.0, epsrel=1e-13, limit=200)[0]
              for a, b in zip(cuts[:-1], cuts[1:]) if b > a]
    return math.fsum(pieces)
