# %% [markdown]
# # Primitive prime divisors by brute force
#
# For each u and f, factor u^f - 1 and look for a prime whose multiplicative
# order modulo it is exactly f. The failures reproduce the classical
# exception list with no theorem assumed.

# %%
from minus_two.numtheory import factor
from minus_two.suites import suite_prop_b, zsigmondy_exceptions

print(zsigmondy_exceptions(u_max=100, f_max=30))

# %%
for u, f in [(2, 6), (3, 2), (2, 12), (7, 5), (10, 18)]:
    n = u**f - 1
    print(f"{u}^{f} - 1 = {n} = " + " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factor(n).factors))

# %% [markdown]
# Counting primes: u^f - 1 always has at least as many prime divisors as f.

# %%
report = suite_prop_b(u_max=50, f_max=20)
print(report.to_json())
