import pytest

from reptend.errors import DomainError
from reptend.numtheory import multiplicative_order, sieve_primes
from reptend.periods import full_reptend_scan, period_digits

from conftest import trial_is_prime


def long_division_period(p, base):
    """Period by recording remainders until one repeats (oracle)."""
    seen, r, k = {}, 1, 0
    while r not in seen:
        seen[r] = k
        r = r * base % p
        k += 1
    return k - seen[r]


@pytest.mark.parametrize("p, d, text, maximal", [
    (7, 6, "142857", True),
    (3, 1, "3", False),
    (11, 2, "09", False),
    (13, 6, "076923", False),
])
def test_period_examples(p, d, text, maximal):
    r = period_digits(p, 10)
    assert (r.d, r.text, r.maximal) == (d, text, maximal)


def test_period_digits_match_block_formula():
    # the repeating block of 1/p is (10^d - 1)/p written with d digits
    for p in [p for p in range(3, 500) if trial_is_prime(p) and p != 5]:
        r = period_digits(p, 10)
        assert r.text == str((10**r.d - 1) // p).zfill(r.d)


def test_other_bases():
    r = period_digits(5, 2)
    assert (r.d, r.text, r.maximal) == (4, "0011", True)
    r = period_digits(7, 16)
    assert r.block_value() * 7 == 16**r.d - 1
    assert period_digits(2, 3).d == 1


def test_period_rejects_terminating():
    with pytest.raises(DomainError, match="terminating expansion"):
        period_digits(5, 10)
    with pytest.raises(DomainError):
        period_digits(9, 10)


def test_digit_extraction_skipped_for_huge_periods(monkeypatch):
    import reptend.periods as periods
    monkeypatch.setattr(periods, "MAX_DIGITS", 10)
    r = periods.period_digits(29, 10)
    assert r.d == 28 and r.digits is None and r.maximal
    r = periods.period_digits(29, 10, force=True)
    assert len(r.digits) == 28


def test_period_equals_order_up_to_1e4():
    for p in sieve_primes(10**4).primes.tolist():
        if p in (2, 5):
            continue
        r = period_digits(p, 10)
        assert r.d == multiplicative_order(10, p).order
        assert (p - 1) % r.d == 0


def test_block_times_p_up_to_2000():
    for p in sieve_primes(2000).primes.tolist():
        if p in (2, 5):
            continue
        r = period_digits(p, 10)
        assert r.block_value() * p == 10**r.d - 1


def test_cyclic_shift_is_multiplication_by_base():
    # rotating the block left by one digit is the expansion of 10/p mod 1
    p = 17
    r = period_digits(p, 10)
    for shift in range(r.d):
        rem = pow(10, shift, p)
        rotated = r.digits[shift:] + r.digits[:shift]
        m = int("".join(map(str, rotated)))
        assert m * p == rem * (10**r.d - 1)


@pytest.mark.parametrize("x, base, expected", [
    (100, 10, [7, 17, 19, 23, 29, 47, 59, 61, 97]),
    (6, 10, []),
    (10, 2, [3, 5]),
])
def test_full_reptend_scan(x, base, expected):
    oracle = [p for p in range(2, x + 1) if trial_is_prime(p) and base % p
              and long_division_period(p, base) == p - 1]
    assert oracle == expected
    assert full_reptend_scan(x, base) == expected


def test_full_reptend_scan_matches_oracle_to_3000():
    oracle = [p for p in range(2, 3001) if trial_is_prime(p) and 10 % p
              and long_division_period(p, 10) == p - 1]
    assert full_reptend_scan(3000, 10, spot_checks=50, seed=1) == oracle
