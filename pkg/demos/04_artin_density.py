# %% [markdown]
# Artin's constant and the density delta(u)
#
# A = prod over primes (1 - 1/(p(p-1))). The partial product decreases
# towards A and the tail is bounded by a relative factor exp(2/P) - 1.

# %%
import mpmath

from reptend import artin_constant, decompose_kernel, delta

for P in (10**2, 10**4, 10**6, 10**8):
    a = artin_constant(P)
    print(f"P=1e{len(str(P)) - 1}  A(P)={a.value:.15f}  tail<={a.tail_bound:.1e}")

# %% [markdown]
# An independent value: log A = -sum_{n>=2} (L_n - 1) P(n) / n with Lucas
# numbers L_n and the prime zeta function P(n).

# %%
mpmath.mp.dps = 30
lucas = [2, 1]
while len(lucas) < 200:
    lucas.append(lucas[-1] + lucas[-2])
logA = -mpmath.fsum((lucas[n] - 1) * mpmath.primezeta(n) / n for n in range(2, 200))
print("A =", mpmath.exp(logA))

# %% [markdown]
# The often-quoted 0.3773955... transposes two digits; the value is
# 0.3739558136...
#
# For a general base u the density depends on u = (s t^2)^k with k maximal
# and s squarefree.

# %%
for u in (2, 3, 5, 6, 8, 10, 12, 32):
    d = decompose_kernel(u)
    r = delta(u, 10**6)
    print(f"u={u:>2}  k={d.k} s={d.s:>2} t={d.t}  case {r.case_branch}  delta={r.delta:.6f}")

# %% [markdown]
# When k has a prime factor p, two conventions for the local factor exist:
# 1/(p-1) and 1 - 1/(p-1). They agree at p = 3 and differ by a factor of
# three at p = 5, so u = 32 separates them. The census demo settles it.

# %%
print(delta(32, 10**6, "printed").delta, delta(32, 10**6, "classical").delta)
