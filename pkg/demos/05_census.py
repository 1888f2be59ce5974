# %% [markdown]
# Counting primes with a given primitive root
#
# pi_u(x) counts primes p <= x with u as a primitive root. The
# conjectured asymptotic is delta(u) li(x). Nothing finite proves it, so
# this is a consistency check on a finite range.

# %%
from reptend import census, sieve_primes, totient_sums

table = sieve_primes(10**6)
for u in (2, 3, 5, 6, 7, 10):
    r = census(u, 10**6, P=10**6, table=table)
    print(f"u={u:>2}  pi_u={r.pi_u_x:>6}  observed/li={r.ratio:.5f}  delta={r.delta_u:.5f}")

# %% [markdown]
# u = 32 = 2^5. The printed convention predicts about 0.098, the classical
# one about 0.295.

# %%
for variant in ("printed", "classical"):
    r = census(32, 10**6, P=10**6, table=table, variant=variant)
    print(f"{variant:>9}: predicted {r.delta_u:.4f}, observed {r.ratio:.4f}")

# %% [markdown]
# The average over all bases: sum of phi(p-1)/(p-1) over p <= x against
# A li(x).

# %%
for x in (10**4, 10**5, 10**6):
    t = totient_sums(x, P=10**7)
    print(f"x=1e{len(str(x)) - 1}  relative residual {t.relative_residual_pm1:.3%}  "
          f"difference term {t.difference:.4f}")
