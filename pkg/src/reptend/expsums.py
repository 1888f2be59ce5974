"""Exponential sums over primitive roots, Mobius-weighted root-of-unity sums
and Lagrange resolvents.

Notation used throughout::

    V_p(s) = sum_{1 <= n <= p-1, gcd(n, p-1) = 1} exp(2 pi i s tau**n / p)
    W(t)   = sum_{1 <= n <= p-1, gcd(n, p-1) = 1} omega**(t n),  omega = exp(2 pi i / q)

Exponents are reduced modulo the order of the root of unity before the
complex exponential is taken, so phases never lose precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import CostCapError, DomainError, VerificationError
from .numtheory import (coprime_indices, euler_phi, factorize, find_primitive_root,
                        is_prime, is_primitive_mod, next_prime, power_table,
                        sieve_primes, squarefree_divisors)

#: Largest prime for which ``V_p(s)`` is evaluated term by term.
DIRECT_CAP = 10**6
#: Largest prime for full scans over ``s``.
SCAN_CAP = 10**4

TWO_PI = 2.0 * math.pi


def csum(values: Iterable[complex]) -> complex:
    """Compensated sum of complex values (``math.fsum`` per component)."""
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                     dtype=complex)
    return complex(math.fsum(arr.real.tolist()), math.fsum(arr.imag.tolist()))


def unit(num, den):
    """``exp(2 pi i num / den)`` with ``num`` reduced mod ``den`` first."""
    return np.exp(1j * TWO_PI * (np.asarray(num) % den) / den)


def _require_primitive(p, tau):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if tau % p == 0 or not is_primitive_mod(tau, p, factorize(p - 1).primes):
        raise DomainError(f"{tau} is not a primitive root mod {p}")


def primitive_exponents(p: int, tau: int) -> np.ndarray:
    """``tau**n mod p`` for the ``n`` in ``[1, p-1]`` coprime to ``p - 1``, in order of ``n``."""
    pw = power_table(tau, p, p)
    return pw[coprime_indices(p - 1)]


# ---------------------------------------------------------------------------
# V_p(s)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpSumSample:
    p: int
    tau: int
    s: int
    value: complex
    modulus: float
    ratio_78: float
    ratio_sqrt: float


def bound_ratios(p: int, modulus: float) -> tuple:
    """``(|V| / p**(15/16), |V| / (sqrt(p) log p))``."""
    return modulus / p ** (15 / 16), modulus / (math.sqrt(p) * math.log(p))


def exp_sum_coprime(p: int, tau: int, s: int, reverse: bool = False) -> ExpSumSample:
    """Direct evaluation of ``V_p(s)``; ``reverse`` sums the terms in reverse order."""
    if p > DIRECT_CAP:
        raise CostCapError(f"direct evaluation capped at p = {DIRECT_CAP}")
    _require_primitive(p, tau)
    if not 1 <= s <= p - 1:
        raise DomainError(f"s must lie in [1, {p - 1}]")
    terms = unit(s * primitive_exponents(p, tau), p)
    if reverse:
        terms = terms[::-1]
    value = csum(terms)
    mod = abs(value)
    r78, rsq = bound_ratios(p, mod)
    return ExpSumSample(p=p, tau=tau, s=s, value=value, modulus=mod, ratio_78=r78, ratio_sqrt=rsq)


def all_exp_sums(p: int, tau: int) -> np.ndarray:
    """``V_p(s)`` for every ``s`` in ``[0, p-1]`` at once.

    ``V_p`` is the discrete Fourier transform of the indicator of the
    primitive roots, so one FFT of length ``p`` gives the whole row.
    """
    _require_primitive(p, tau)
    ind = np.zeros(p)
    ind[primitive_exponents(p, tau)] = 1.0
    return np.fft.ifft(ind) * p


def max_over_s(p: int, tau: Optional[int] = None, tol: float = 1e-9) -> tuple:
    """``(s*, max |V_p(s)|)`` over ``s`` in ``[1, p-1]`` with ``gcd(s, p-1) = 1``.

    Ties (within ``tol``) go to the smallest ``s``.
    """
    if p > SCAN_CAP:
        raise CostCapError(f"full s-scan capped at p = {SCAN_CAP}")
    if tau is None:
        tau = find_primitive_root(p)
    mods = np.abs(all_exp_sums(p, tau))
    s = coprime_indices(p - 1)
    s = s[s <= p - 1]
    vals = mods[s]
    best = vals.max()
    i = int(np.flatnonzero(vals >= best - tol)[0])
    return int(s[i]), float(vals[i])


@dataclass
class BoundScanReport:
    """Max-over-s table for a range of primes with bound ratios."""

    pmin: int
    pmax: int
    rows: list = field(default_factory=list)  # (p, tau, s*, max |V|, ratio_78, ratio_sqrt)
    violations: list = field(default_factory=list)

    @property
    def worst_ratio_78(self) -> float:
        return max((r[4] for r in self.rows), default=0.0)


def bound_scan(pmin: int = 10, pmax: int = SCAN_CAP) -> BoundScanReport:
    """Run :func:`max_over_s` for every prime in ``[pmin, pmax]``.

    A prime whose maximum exceeds ``p**(15/16)`` (constant 1) is recorded in
    ``violations``; nothing is raised.
    """
    rep = BoundScanReport(pmin=pmin, pmax=pmax)
    for p in sieve_primes(max(pmax, 2)).primes_in(pmin, pmax).tolist():
        tau = find_primitive_root(p)
        s, mod = max_over_s(p, tau)
        r78, rsq = bound_ratios(p, mod)
        rep.rows.append((p, tau, s, mod, r78, rsq))
        if mod > p ** (15 / 16):
            rep.violations.append((p, s, mod))
    return rep


# ---------------------------------------------------------------------------
# Mobius-weighted geometric sums
# ---------------------------------------------------------------------------

def _check_qp(q, p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not is_prime(q) or q <= p:
        raise DomainError(f"q must be a prime greater than p, got q={q}, p={p}")


@dataclass(frozen=True)
class MobiusSumSample:
    """``W(t)`` three ways.

    ``closed_form`` uses ``(z - z**(M+1)) / (1 - z)`` with ``z = omega**(d t)``
    and ``M = (p-1)/d``; ``printed_form`` uses ``(z - omega**(d t p)) / (1 - z)``.
    ``printed_gap`` is the largest per-divisor difference between the two
    geometric terms over divisors ``d > 1`` (attained at ``printed_gap_d``).
    """

    q: int
    p: int
    t: int
    direct: complex
    closed_form: complex
    printed_form: complex
    printed_gap: float
    printed_gap_d: int


def _geometric_terms(q, p, t, divs):
    """Corrected and printed geometric terms for each squarefree divisor ``d``."""
    corrected, printed = [], []
    for d, _ in divs:
        m = (p - 1) // d
        if (d * t) % q == 0:
            corrected.append(complex(m))
            printed.append(complex(p - 1))
            continue
        z = complex(unit(d * t, q))
        den = 1 - z
        corrected.append((z - complex(unit(d * t * (m + 1), q))) / den)
        printed.append((z - complex(unit(d * t * p, q))) / den)
    return corrected, printed


def mobius_character_sum(q: int, p: int, t: int) -> MobiusSumSample:
    """Direct ``W(t)`` against the Mobius inclusion-exclusion over ``d | p - 1``."""
    _check_qp(q, p)
    if not 1 <= t <= q - 1:
        raise DomainError(f"t must lie in [1, {q - 1}]")
    n = coprime_indices(p - 1)
    direct = csum(unit(t * n, q))
    divs = squarefree_divisors(factorize(p - 1))
    corrected, printed = _geometric_terms(q, p, t, divs)
    closed = csum(mu * c for (_, mu), c in zip(divs, corrected))
    printed_total = csum(mu * c for (_, mu), c in zip(divs, printed))
    gap, gap_d = 0.0, 1
    for (d, _), c, w in zip(divs, corrected, printed):
        if d > 1 and abs(c - w) > gap:
            gap, gap_d = abs(c - w), d
    return MobiusSumSample(q=q, p=p, t=t, direct=direct, closed_form=closed,
                           printed_form=printed_total, printed_gap=gap, printed_gap_d=gap_d)


def mobius_character_sums(q: int, p: int) -> dict:
    """Vectorized :func:`mobius_character_sum` for all ``t`` in ``[1, q-1]``.

    Returns arrays keyed ``t``, ``direct``, ``closed_form``, ``printed_form``
    and ``printed_gap`` (largest per-divisor gap over ``d > 1``).
    """
    _check_qp(q, p)
    t = np.arange(1, q, dtype=np.int64)
    n = coprime_indices(p - 1)
    direct = unit(np.outer(t, n), q).sum(axis=1)
    closed = np.zeros(t.size, dtype=complex)
    printed = np.zeros(t.size, dtype=complex)
    gap = np.zeros(t.size)
    for d, mu in squarefree_divisors(factorize(p - 1)):
        m = (p - 1) // d
        z = unit(d * t, q)
        # d <= p-1 < q and t < q, so z != 1 for prime q
        corr = (z - unit(d * t * (m + 1), q)) / (1 - z)
        prnt = (z - unit(d * t * p, q)) / (1 - z)
        closed += mu * corr
        printed += mu * prnt
        if d > 1:
            gap = np.maximum(gap, np.abs(corr - prnt))
    return {"t": t, "direct": direct, "closed_form": closed,
            "printed_form": printed, "printed_gap": gap}


@dataclass
class MobiusBoundReport:
    q: int
    p: int
    rows: list = field(default_factory=list)  # (t, |W(t)|, bound, ratio)
    violations: list = field(default_factory=list)

    @property
    def max_ratio(self) -> float:
        return max((r[3] for r in self.rows), default=0.0)


def mobius_sum_bound_check(q: int, p: int) -> MobiusBoundReport:
    """Test ``|W(t)| <= 2 q log p / (pi t)`` for every ``t`` in ``[1, q-1]``.

    Failures are collected in ``violations`` rather than raised.
    """
    sums = mobius_character_sums(q, p)
    rep = MobiusBoundReport(q=q, p=p)
    for t, w in zip(sums["t"].tolist(), np.abs(sums["direct"]).tolist()):
        bound = 2 * q * math.log(p) / (math.pi * t)
        rep.rows.append((t, w, bound, w / bound))
        if w > bound:
            rep.violations.append((p, q, t, w, bound))
    return rep


# ---------------------------------------------------------------------------
# Lagrange resolvents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResolventSample:
    q: int
    p: int
    tau: int
    t: int
    s: int
    value: complex


def resolvent(p: int, tau: int, s: int, t: int, q: Optional[int] = None) -> ResolventSample:
    """``sum_{j=0}^{q-2} omega**(-j t) zeta**(s tau**j)`` with ``zeta = exp(2 pi i / p)``.

    ``q`` defaults to the smallest prime above ``p``.
    """
    if q is None:
        q = next_prime(p)
    _check_qp(q, p)
    if s % p == 0:
        raise DomainError("s must be coprime to p")
    if not 0 <= t <= q - 1:
        raise DomainError(f"t must lie in [0, {q - 1}]")
    j = np.arange(q - 1, dtype=np.int64)
    pw = power_table(tau, p, q - 1)
    terms = unit(-j * t, q) * unit(s * pw, p)
    return ResolventSample(q=q, p=p, tau=tau, t=t, s=s, value=csum(terms))


# ---------------------------------------------------------------------------
# V_p(s) - V_p(1)
# ---------------------------------------------------------------------------

@dataclass
class ShiftReport:
    p: int
    tau: int
    max_difference: float
    argmax_s: int
    ratio: float  # max_difference / (sqrt(p) log^3 p)
    set_equal: np.ndarray  # index s-1: whether s * G == G
    cardinality: int

    @property
    def equality_rate(self) -> float:
        return float(self.set_equal.mean())

    @property
    def equal_multipliers(self) -> list:
        return (np.flatnonzero(self.set_equal) + 1).tolist()


def shift_difference_scan(p: int, tau: Optional[int] = None) -> ShiftReport:
    """Largest ``|V_p(s) - V_p(1)|`` over ``s`` in ``[1, p-1]`` and the set-equality census.

    For each ``s`` the set ``G = {tau**n : gcd(n, p-1) = 1}`` is compared
    with ``s * G``. Both always have ``phi(p - 1)`` elements (checked, raises
    :class:`VerificationError` otherwise); equality itself is only reported.
    """
    if p > SCAN_CAP:
        raise CostCapError(f"shift scan capped at p = {SCAN_CAP}")
    if tau is None:
        tau = find_primitive_root(p)
    _require_primitive(p, tau)
    v = all_exp_sums(p, tau)
    diff = np.abs(v[1:] - v[1])
    i = int(np.argmax(diff))
    G = np.sort(primitive_exponents(p, tau))
    phi = euler_phi(p - 1)
    equal = np.zeros(p - 1, dtype=bool)
    for s in range(1, p):
        sg = np.unique((s * G) % p)
        if sg.size != phi or G.size != phi:
            raise VerificationError(f"|s*G| != phi(p-1) for p={p}, s={s}", counterexample=(p, s))
        equal[s - 1] = np.array_equal(sg, G)
    lg = math.log(p)
    return ShiftReport(p=p, tau=tau, max_difference=float(diff[i]), argmax_s=i + 1,
                       ratio=float(diff[i]) / (math.sqrt(p) * lg**3), set_equal=equal,
                       cardinality=phi)


def additive_character_mean(p: int, u: int) -> complex:
    """``(1/p) sum_{k=1}^{p-1} exp(-2 pi i u k / p)``; equals ``-1/p`` for ``p`` not dividing ``u``."""
    k = np.arange(1, p, dtype=np.int64)
    return csum(unit(-u * k, p)) / p
