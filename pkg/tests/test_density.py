import math
from fractions import Fraction

import mpmath
import pytest

from reptend.density import (ARTIN_REFERENCE, a_k_value, artin_constant, decompose_kernel,
                             delta, log_integral)
from reptend.errors import DomainError
from reptend.numtheory import sieve_primes


@pytest.fixture(scope="module")
def artin_oracle():
    """Artin's constant from the prime zeta function.

    log A = -sum_{n>=2} (L_n - 1) P(n) / n with Lucas numbers L_n, because
    1 - 1/(p(p-1)) = (1 - x - x^2)/(1 - x) at x = 1/p.
    """
    with mpmath.workdps(30):
        lucas = [2, 1]
        while len(lucas) < 200:
            lucas.append(lucas[-1] + lucas[-2])
        s = mpmath.fsum((lucas[n] - 1) * mpmath.primezeta(n) / n for n in range(2, 200))
        return float(mpmath.exp(-s))


def test_oracle_agrees_with_literature(artin_oracle):
    assert artin_oracle == pytest.approx(0.3739558136192022880547, rel=1e-14)


@pytest.mark.parametrize("u, k, root, s, t, mu, mod4", [
    (10, 1, 10, 10, 1, 1, 2),
    (8, 3, 2, 2, 1, -1, 2),
    (12, 1, 12, 3, 2, -1, 3),
    (5, 1, 5, 5, 1, -1, 1),
    (72, 1, 72, 2, 6, -1, 2),
    (200, 1, 200, 2, 10, -1, 2),
    (1000, 3, 10, 10, 1, 1, 2),
])
def test_decompose_kernel(u, k, root, s, t, mu, mod4):
    d = decompose_kernel(u)
    assert (d.k, d.root, d.s, d.t, d.mu_s, d.s_mod4) == (k, root, s, t, mu, mod4)


def test_decompose_rejects_squares_and_small():
    for u in (4, 9, 36, 64, 100):
        with pytest.raises(DomainError, match="excluded base"):
            decompose_kernel(u)
    assert decompose_kernel(4, allow_square=True).k == 2
    for u in (1, 0, -3):
        with pytest.raises(DomainError):
            decompose_kernel(u)


@pytest.mark.slow
def test_decompose_recomposes_up_to_1e6():
    table = sieve_primes(10**6)
    for u in range(2, 10**6 + 1):
        d = decompose_kernel(u, allow_square=True, table=table)
        assert d.root**d.k == u
        assert d.s * d.t**2 == d.root


def test_decompose_k_is_maximal():
    for u in range(2, 5000):
        d = decompose_kernel(u, allow_square=True)
        for j in range(2, 13):
            r = round(d.root ** (1 / j))
            assert all(c**j != d.root for c in (r - 1, r, r + 1) if c > 1)
        assert all(d.s % (p * p) for p in range(2, 71))


def test_artin_constant_matches_oracle(artin_oracle):
    a = artin_constant(10**7)
    assert a.value >= artin_oracle
    assert a.value - artin_oracle <= a.tail_bound * a.value
    assert a.value == pytest.approx(artin_oracle, rel=1e-8)
    assert a.tail_bound == pytest.approx(2e-7, rel=1e-6)


def test_artin_constant_p100_loose(artin_oracle):
    a = artin_constant(100)
    assert a.tail_bound == pytest.approx(2e-2, rel=0.02)
    assert abs(a.value - ARTIN_REFERENCE) <= a.tail_bound * ARTIN_REFERENCE
    assert abs(a.value - artin_oracle) <= a.tail_bound * a.value


def test_artin_constant_monotone_and_bracketing(artin_oracle):
    vals = [artin_constant(P) for P in (100, 1000, 10**4, 10**5, 10**6)]
    for a, b in zip(vals, vals[1:]):
        assert b.value <= a.value
        assert b.tail_bound < a.tail_bound
    for a in vals:
        assert a.value * (1 - a.tail_bound) <= artin_oracle <= a.value


def test_artin_constant_small_P_rejected():
    with pytest.raises(DomainError):
        artin_constant(99)


def test_a_k_examples():
    P = 10**4
    A = artin_constant(P).value
    assert a_k_value(decompose_kernel(10), P) == pytest.approx(A, rel=1e-14)

    with mpmath.workdps(30):
        ref = mpmath.mpf(1) / 2
        for p in sieve_primes(P).primes.tolist():
            if p != 3:
                ref *= 1 - mpmath.mpf(1) / (p * (p - 1))
    assert a_k_value(decompose_kernel(8), P) == pytest.approx(float(ref), rel=1e-13)

    # k = 2: the factor 1/(2-1) is 1 and p = 2 leaves the Euler product
    a2 = a_k_value(decompose_kernel(4, allow_square=True), P)
    assert a2 == pytest.approx(2 * A, rel=1e-13)


def test_a_k_variants():
    P = 10**5
    d8, d32 = decompose_kernel(8), decompose_kernel(32)
    # for p = 3 both conventions give 1/2
    assert a_k_value(d8, P, "printed") == pytest.approx(a_k_value(d8, P, "classical"))
    # for p = 5 they differ by a factor of 3
    assert a_k_value(d32, P, "classical") == pytest.approx(3 * a_k_value(d32, P, "printed"))
    with pytest.raises(DomainError):
        a_k_value(d8, P, "other")


def test_delta_examples():
    P = 10**6
    A = artin_constant(P).value
    r = delta(10, P)
    assert r.case_branch == 1 and r.delta == pytest.approx(A)
    r = delta(5, P)
    assert r.case_branch == 2
    assert Fraction(1) + Fraction(1, 5**2 - 5 - 1) == Fraction(20, 19)
    assert r.delta == pytest.approx(20 / 19 * A)
    r = delta(2, P)
    assert r.case_branch == 1 and r.delta == pytest.approx(A)
    # s = 21 = 3*7 is 1 mod 4 with mu = 1: factor 1 - 1/(5*41)
    r = delta(21, P)
    assert r.case_branch == 2
    assert r.delta == pytest.approx((1 - 1 / (5 * 41)) * A)


def test_delta_truncation_consistency():
    for u in (2, 3, 5, 6, 7, 8, 10, 12, 13, 27, 32, 45):
        a, b = delta(u, 10**5), delta(u, 10**6)
        assert abs(a.delta - b.delta) <= a.tail_bound * a.delta


def test_delta_in_unit_interval():
    for u in range(2, 101):
        if math.isqrt(u) ** 2 == u:
            continue
        r = delta(u, 10**4)
        assert 0 < r.delta < 1


def test_log_integral_examples():
    assert log_integral(2) == 0.0
    with mpmath.workdps(30):
        ref = float(mpmath.li(10**6) - mpmath.li(2))
    assert abs(log_integral(1e6) - 78626.5) < 0.5
    assert log_integral(1e6) == pytest.approx(ref, rel=1e-10)
    with pytest.raises(DomainError):
        log_integral(1.5)


@pytest.mark.parametrize("x", [2.5, 3, 10, 77.7, 1e3, 12345, 1e5, 1e7, 1e8, 1e9])
def test_log_integral_against_mpmath(x):
    with mpmath.workdps(30):
        ref = float(mpmath.li(x) - mpmath.li(2))
    assert log_integral(x) == pytest.approx(ref, rel=1e-9)


def test_log_integral_exceeds_first_order_term():
    for x in [10 * 1.5**k for k in range(40)]:
        assert log_integral(x) > x / math.log(x)
