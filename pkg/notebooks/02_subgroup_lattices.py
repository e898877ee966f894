# %% [markdown]
# # Subgroup lattices
#
# Enumerate L(G), walk its Hasse diagram, and test modularity and
# self-duality.

# %%
from cdlattice.group_core import build_group, cyclic, dihedral
from cdlattice.lattice import enumerate_subgroups, is_modular, is_self_dual, join, meet, to_dot

# %%
d8 = dihedral(4)
lat = enumerate_subgroups(d8)
for i, h in enumerate(lat.subgroups):
    print(f"H{i}: size {h.order} members {h.members}")
print("covering pairs:", lat.hasse_edges)

# %% [markdown]
# L(D8) is not modular.  The witness is a pentagon.

# %%
ok, (x, y, z) = is_modular(lat.whole())
print(ok, (lat[x].members, lat[y].members, lat[z].members))
print("x v (y ^ z) =", lat[join(lat, x, meet(lat, y, z))].members)
print("(x v y) ^ z =", lat[meet(lat, join(lat, x, y), z)].members)

# %% [markdown]
# Divisor lattices are self-dual; L(A4) is not (seven atoms, five coatoms).

# %%
print("L(Z12):", is_self_dual(enumerate_subgroups(cyclic(12)).whole()))
print("L(A4):", is_self_dual(enumerate_subgroups(build_group("alternating4")).whole()))

# %% [markdown]
# DOT output for Graphviz: `dot -Tsvg`.

# %%
print(to_dot(enumerate_subgroups(build_group("dicyclic:2"))))
