# %% [markdown]
# # Three exceptional graphs
#
# Petersen, Clebsch and Schlafli all have least eigenvalue exactly -2, yet none
# is a line graph or a cocktail party graph. Here we build them, read their
# spectra exactly and in floating point, and place each in its layer.

# %%
import numpy as np

from minus_two import char_poly, classify_regular_connected, min_eig_class, write_graph6
from minus_two.families import clebsch, petersen, schlafli
from minus_two.graph import clique_number, complement, is_bipartite, regularity
from minus_two.spectral import is_strongly_regular

graphs = {"Petersen": petersen(), "Clebsch": clebsch(), "Schlafli": schlafli()}

# %%
for name, g in graphs.items():
    ev = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))
    vals, counts = np.unique(np.round(ev, 6), return_counts=True)
    spectrum = ", ".join(f"{v:g}^{c}" for v, c in zip(vals[::-1], counts[::-1]))
    print(f"{name:9s} n={g.n:2d} k={regularity(g):2d} omega={clique_number(g)} spectrum {spectrum}")

# %% [markdown]
# The exact test never touches those floats. It shifts the characteristic
# polynomial by 2 and checks the coefficient signs.

# %%
for name, g in graphs.items():
    p = char_poly(g)
    print(name, min_eig_class(g).value, "srg", is_strongly_regular(g).as_tuple(), "p(-2) =", p(-2))

# %%
for name, g in graphs.items():
    verdict = classify_regular_connected(g)
    nonbip = is_bipartite(complement(g)) is None
    print(f"{name:9s} {verdict.to_json()}  complement non-bipartite: {nonbip}  {write_graph6(g)[:24]}")
