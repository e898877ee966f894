# %% [markdown]
# # Deficiencies over all groups of order at most 15
#
# Deficiency is `|L(G)| - |CD(G)|`.  Over the catalog, deficiency 1 occurs
# exactly for Z_p and Q8, and deficiency 2 exactly for Z_{p^2}.

# %%
from collections import defaultdict

from cdlattice.verifier import build_catalog, run_verification

# %%
cat = build_catalog(15, range(3, 7))
records, sets = run_verification(cat)
print("records:", len(records), "failures:", sum(r.failed for r in records))
for k in sorted(sets):
    print(f"k={k}: {', '.join(sets[k])}")

# %% [markdown]
# Larger deficiencies are not classified; this just lists them.

# %%
by_k = defaultdict(list)
for k, names in sets.items():
    if k >= 3:
        by_k[k] += names
print(dict(sorted(by_k.items())))
