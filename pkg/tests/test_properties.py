"""Property tests over randomly assembled small groups."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cdlattice.chermak_delgado import cd_report, check_theorem_b, sylow_center_profile, verify_cd_properties
from cdlattice.group_core import GroupSpec, build_group, center, centralizer, relabel
from cdlattice.lattice import enumerate_subgroups, join, meet

from oracles import brute_is_group, brute_subgroups

factor = st.one_of(
    st.builds(lambda n: GroupSpec("cyclic", (n,)), st.integers(1, 6)),
    st.builds(lambda n: GroupSpec("dihedral", (n,)), st.integers(2, 5)),
    st.builds(lambda m: GroupSpec("dicyclic", (m,)), st.integers(2, 3)),
)


def _order(parts):
    sizes = {"cyclic": 1, "dihedral": 2, "dicyclic": 4}
    out = 1
    for p in parts:
        out *= sizes[p.kind] * p.params[0]
    return out


@st.composite
def small_groups(draw, max_order=32):
    parts = draw(st.lists(factor, min_size=1, max_size=3))
    while len(parts) > 1 and _order(parts) > max_order:
        parts.pop()
    spec = parts[0] if len(parts) == 1 else GroupSpec("directProduct", factors=tuple(parts))
    g = build_group(spec)
    seed = draw(st.integers(0, 2**32 - 1))
    rest = list(range(1, g.order))
    random.Random(seed).shuffle(rest)
    return relabel(g, [0] + rest)


@settings(max_examples=30, deadline=None)
@given(small_groups(max_order=12))
def test_enumeration_matches_oracle(g):
    assert brute_is_group(g.table.tolist())
    lat = enumerate_subgroups(g)
    assert {frozenset(h) for h in lat} == set(brute_subgroups(g))


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_lattice_closure_and_absorption(g):
    lat = enumerate_subgroups(g)
    n = len(lat)
    for x in range(n):
        for y in range(n):
            m, j = meet(lat, x, y), join(lat, x, y)
            assert meet(lat, x, j) == x and join(lat, x, m) == x
            assert lat[m].mask == lat[x].mask & lat[y].mask


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_centralizer_sandwich(g):
    lat = enumerate_subgroups(g)
    z = center(g)
    for h in lat:
        c = centralizer(g, h)
        assert lat.index(c) is not None
        assert z <= c
        assert h <= centralizer(g, c)


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_cd_structure(g):
    rep = cd_report(g)
    assert rep.m_star == max(rep.measures)
    assert all((m == rep.m_star) == (i in rep.cd_members) for i, m in enumerate(rep.measures))
    assert (rep.deficiency == 0) == (g.order == 1)
    assert all(rep.lattice.leq(rep.min_member, i) and rep.lattice.leq(i, rep.max_member) for i in rep.cd_members)
    recs = verify_cd_properties(rep)
    assert not [r for r in recs if r.failed]
    assert check_theorem_b(rep, sylow_center_profile(g, rep.lattice)).passed
