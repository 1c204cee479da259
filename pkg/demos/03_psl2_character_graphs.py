# %% [markdown]
# # Character-graphs of PSL_2(q)
#
# The vertex set is pi(q) with pi(q - 1) and pi(q + 1). The edges follow from
# q's parity and from whether q - 1 or q + 1 is a power of two.

# %%
from minus_two import PSL2Params, delta_psl2
from minus_two.suites import prime_power

for q in (4, 5, 8, 9, 11, 13, 16, 17, 25, 49, 64, 81, 121, 125, 343, 1024):
    g = delta_psl2(PSL2Params(*prime_power(q)))
    comps = " | ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in sorted(g.prime_components(), key=min))
    print(f"q={q:5d} components {comps:28s} edges {g.labelled_edges()}")

# %%
from minus_two.formats import to_dot

g = delta_psl2(PSL2Params(29, 1))
print(to_dot(g.graph, labels=list(g.labels)))
