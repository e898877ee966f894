# %% [markdown]
# # Chermak-Delgado lattices
#
# The measure of H is `|H| * |C_G(H)|`; CD(G) is the set of subgroups of
# largest measure.

# %%
from cdlattice.chermak_delgado import cd_report, check_theorem_b, sylow_center_profile, verify_cd_properties
from cdlattice.group_core import build_group, dicyclic

# %%
for spec in ["dicyclic:2", "cyclic:4", "dihedral:3", "dicyclic:4", "alternating4"]:
    g = build_group(spec)
    rep = cd_report(g)
    cd = [rep.lattice[i].members for i in rep.cd_members]
    print(f"{spec:14s} |L|={len(rep.lattice):3d} m*={rep.m_star:5d} |CD|={len(cd)} deficiency={rep.deficiency}")

# %% [markdown]
# In Q8 the centralizer map fixes the three cyclic subgroups of order 4 and
# swaps the center with the whole group.

# %%
rep = cd_report(dicyclic(2))
for i in rep.cd_members:
    print(rep.lattice[i].members, "->", rep.lattice[rep.centralizers[i]].members)

# %%
for rec in verify_cd_properties(rep, "Q8"):
    print(rec.to_line())

# %% [markdown]
# The number of distinct measure values is bounded below by one plus the
# sum of the exponents of the Sylow centers.

# %%
g = build_group("dihedral:6")
rep = cd_report(g)
prof = sylow_center_profile(g, rep.lattice)
print(prof.entries, check_theorem_b(rep, prof, "D12").to_line())
