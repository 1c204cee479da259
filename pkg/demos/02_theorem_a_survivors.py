# %% [markdown]
# # Who survives both filters?
#
# Keep the connected k-regular graphs (k >= 2) whose least eigenvalue is at
# least -2 and whose complement is bipartite. Then name every survivor.

# %%
import time

from minus_two.suites import suite_theorem_a

t = time.perf_counter()
report = suite_theorem_a(max_n=10, allow_slow=True)
print(f"{report.examined} survivors, {len(report.counterexamples)} counterexamples, {time.perf_counter() - t:.2f} s")

# %%
for entry in report.found:
    print(f"{entry['graph6']:12s} {entry['identified']}")

# %% [markdown]
# Complete graphs and cocktail party graphs are the two admissible outcomes.
# F(n) also passes both filters but fails the admissibility filter.

# %%
from minus_two import parse_graph6, regular_chargraph_admissibility

for entry in report.found:
    print(entry["identified"], regular_chargraph_admissibility(parse_graph6(entry["graph6"])).to_json())
