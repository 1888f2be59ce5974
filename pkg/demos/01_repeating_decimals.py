# %% [markdown]
# Repeating decimals of 1/p
#
# 1/7 = 0.142857 142857 ... repeats with period 6 = 7 - 1. Primes whose
# period is as long as it can be are the full-reptend primes, and they are
# exactly the primes for which 10 is a primitive root.

# %%
from reptend import full_reptend_scan, multiplicative_order, period_digits

for p in (3, 7, 11, 13, 17):
    rec = period_digits(p)
    print(f"1/{p:<3} period {rec.d:>2}  block {rec.text}  full reptend: {rec.maximal}")

# %% [markdown]
# The block read as an integer times p is 10**d - 1. For 1/17 that is
# 0588235294117647 * 17 = 9999999999999999.

# %%
rec = period_digits(17)
print(rec.block_value() * 17 == 10**rec.d - 1)

# %% [markdown]
# Long division is O(p). The same period comes from the multiplicative
# order of 10 mod p, which only needs the factorization of p - 1.

# %%
p = 999_983
print(multiplicative_order(10, p).order, period_digits(p).d)

# %%
hits = full_reptend_scan(100)
print("full-reptend primes below 100:", hits)

# %% [markdown]
# Other bases work too. In base 2, 1/11 has period 10.

# %%
print(period_digits(11, base=2).text)
