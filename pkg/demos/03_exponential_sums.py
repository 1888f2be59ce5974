# %% [markdown]
# Exponential sums over primitive roots
#
# V_p(s) = sum over primitive roots g of e(s g / p). Square-root
# cancellation would give |V_p(s)| around sqrt(p). We look at the worst s
# and compare with p**(15/16) and sqrt(p).

# %%
import numpy as np

from reptend import (all_exp_sums, bound_scan, exp_sum_coprime, find_primitive_root,
                     mobius_character_sums, mobius_sum_bound_check, next_prime)

p = 101
tau = find_primitive_root(p)
V = all_exp_sums(p, tau)  # index s, every s in one FFT
print("FFT vs direct at s=7:", V[7], exp_sum_coprime(p, tau, 7).value)

# %%
rep = bound_scan(10, 2000)
rows = np.array([r[3:] for r in rep.rows])
print(f"{len(rep.rows)} primes, worst max|V|/p^(15/16) = {rows[:, 1].max():.3f}, "
      f"worst max|V|/sqrt(p) = {rows[:, 2].max():.3f}")

# %% [markdown]
# Inclusion-exclusion over squarefree d | p-1 turns the sum over exponents
# coprime to p - 1 into geometric series. The closed form of each series
# is (z - z**(M+1)) / (1 - z) with z = omega**(d t) and M = (p-1)/d. The
# tempting shortcut with numerator z - omega**(d t p) is only right for d = 1.

# %%
q = next_prime(p)
sums = mobius_character_sums(q, p)
print("identity error:", np.abs(sums["direct"] - sums["closed_form"]).max())
print("shortcut error:", sums["printed_gap"].max())

# %% [markdown]
# The bound 2 q log p / (pi t) decays like 1/t. |W(t)| does not decay,
# since W(q - t) is the conjugate of W(t), so once t is large the bound
# drops below ordinary values of the sum.

# %%
chk = mobius_sum_bound_check(q, p)
print(len(chk.violations), "violations out of", q - 1, "values of t; worst ratio",
      round(chk.max_ratio, 2))
t, w, bound, _ = max(chk.rows, key=lambda r: r[3])
print(f"worst at t={t}: |W|={w:.2f}, bound={bound:.2f}")
