# %% [markdown]
# # Groups as Cayley tables
#
# Every group in `cdlattice` is a validated Cayley table over the indices
# `0..n-1` with the identity at 0.  This script builds a few groups, loads
# one from text and looks at centralizers.

# %%
import itertools

from cdlattice.group_core import (
    build_group,
    center,
    centralizer,
    cyclic_subgroup,
    dicyclic,
    element_order,
    format_cayley_table,
    load_cayley_table,
)

# %% [markdown]
# The quaternion group Q8 is `dicyclic:2`.  Element `a^i b^j` has index
# `i + 4j`, so `a` is 1, `b` is 4 and `ab` is 5.

# %%
q8 = dicyclic(2)
print(q8.table)
print("element orders:", [element_order(q8, x) for x in range(q8.order)])
print("center:", center(q8).members)

# %%
a = cyclic_subgroup(q8, 1)
print("<a> =", a.members, " C(<a>) =", centralizer(q8, a).members)

# %% [markdown]
# Loading a table from text.  Here S3 is written out from its permutations,
# with the identity deliberately stored as element 3; the loader moves it to 0.

# %%
perms = sorted(itertools.permutations(range(3)))
perms[0], perms[3] = perms[3], perms[0]  # identity now stored as element 3
pos = {p: i for i, p in enumerate(perms)}
rows = [[pos[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
text = "# S3\n6\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n"
s3 = load_cayley_table(text)
print(format_cayley_table(s3))
print("center of S3:", center(s3).members)

# %% [markdown]
# Products use the `product:` spec grammar.

# %%
g = build_group("product:cyclic:2,cyclic:4")
print(g, "abelian:", center(g).order == g.order)
