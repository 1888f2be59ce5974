# %% [markdown]
# Wieferich primes
#
# A prime p is Wieferich to base u when u**(p-1) = 1 mod p**2. For base 2
# the known ones are 1093 and 3511. For base 10 they are 3, 487 and
# 56598313.

# %%
from reptend import wieferich_scan

print([h.p for h in wieferich_scan(2, 10**5)])
print([h.p for h in wieferich_scan(10, 10**6)])

# %% [markdown]
# Each hit is recomputed with an independent square-and-multiply loop
# before it is reported. Python integers make a final check trivial too.

# %%
for p in (3, 487):
    print(p, (10 ** (p - 1) - 1) % (p * p) == 0)
