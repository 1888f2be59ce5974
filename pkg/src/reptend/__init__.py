"""Primes with a fixed primitive root: periods, characteristic functions,
exponential sums, Artin-type densities and prime censuses."""

__version__ = "0.1.0"

from .errors import CostCapError, DomainError, VerificationError
from .numtheory import (Factorization, OrderRecord, PrimeTable, divisors, euler_phi,
                        factorize, find_primitive_root, is_prime, mobius, mod_pow,
                        multiplicative_order, next_prime, sieve_primes)
from .periods import PeriodRecord, full_reptend_scan, period_digits
from .indicator import evaluate, primitive_set, psi_census_check, psi_exact, psi_numeric
from .expsums import (all_exp_sums, bound_scan, exp_sum_coprime, max_over_s,
                      mobius_character_sum, mobius_character_sums, mobius_sum_bound_check,
                      resolvent, shift_difference_scan)
from .density import (ARTIN_REFERENCE, a_k_value, artin_constant, decompose_kernel,
                      delta, log_integral)
from .census import census, totient_sums, wieferich_scan
