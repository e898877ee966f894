import io
import itertools

import numpy as np
import pytest

from cdlattice.group_core import (
    CayleyParseError,
    GroupError,
    GroupSpec,
    GroupTable,
    NotAGroupError,
    NotASubgroupError,
    SubgroupSet,
    build_group,
    center,
    centralizer,
    cyclic,
    cyclic_subgroup,
    dicyclic,
    dihedral,
    element_order,
    format_cayley_table,
    generate,
    induced_group,
    is_abelian,
    load_cayley_table,
    parse_spec,
    relabel,
)

from oracles import brute_centralizer, brute_is_group, brute_order, brute_subgroups, find_isomorphism, perm_group_table

BUILTINS = [
    "cyclic:1",
    "cyclic:5",
    "cyclic:12",
    "dihedral:3",
    "dihedral:4",
    "dicyclic:2",
    "dicyclic:3",
    "alternating4",
    "product:cyclic:2,cyclic:2",
    "product:cyclic:2,cyclic:3,cyclic:2",
]


@pytest.mark.parametrize("spec", BUILTINS)
def test_builders_satisfy_group_axioms(spec):
    g = build_group(spec)
    assert brute_is_group(g.table.tolist())
    for x in range(g.order):
        assert g.mul(x, g.inv(x)) == 0 == g.mul(g.inv(x), x)


def test_cyclic_table():
    g = build_group("cyclic:5")
    assert g.order == 5
    for i, j in itertools.product(range(5), repeat=2):
        assert g.mul(i, j) == (i + j) % 5


def test_q8_has_one_involution(q8):
    assert q8.order == 8
    assert [x for x in range(8) if element_order(q8, x) == 2] == [2]
    assert not is_abelian(q8)


def test_klein_group():
    g = build_group("product:cyclic:2,cyclic:2")
    assert g.order == 4
    assert all(element_order(g, x) == 2 for x in range(1, 4))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_generalized_quaternion_presentation(n):
    half = 2 ** (n - 1)
    g = dicyclic(2 ** (n - 2))
    a, b = 1, half
    assert g.order == 2**n
    assert element_order(g, a) == half
    assert g.mul(b, b) == g.power(a, 2 ** (n - 2))
    assert g.mul(g.mul(g.inv(b), a), b) == g.inv(a)
    assert g.mul(a, b) == half + 1
    assert sum(element_order(g, x) == 2 for x in range(g.order)) == 1
    assert not is_abelian(g)


def test_dicyclic_rejects_small_parameter():
    with pytest.raises(GroupError, match="m"):
        dicyclic(1)
    with pytest.raises(GroupError, match="m=1"):
        GroupSpec("dicyclic", (1,))


@pytest.mark.parametrize(
    "text",
    ["cyclic:0", "dihedral:x", "nonsense", "product:cyclic:2"],
)
def test_bad_specs(text):
    with pytest.raises(GroupError):
        build_group(text)


@pytest.mark.parametrize("text", BUILTINS)
def test_spec_roundtrip(text):
    spec = parse_spec(text)
    assert parse_spec(str(spec)) == spec


def test_direct_product_index_layout():
    g = build_group("product:cyclic:2,cyclic:3")
    # (x, y) -> 3x + y
    for (x1, y1), (x2, y2) in itertools.product(itertools.product(range(2), range(3)), repeat=2):
        assert g.mul(3 * x1 + y1, 3 * x2 + y2) == 3 * ((x1 + x2) % 2) + (y1 + y2) % 3


# -- loading ---------------------------------------------------------------


def test_trivial_table():
    g = load_cayley_table("1\n0")
    assert g.order == 1


def test_s3_from_permutations_matches_dihedral():
    perms = sorted(itertools.permutations(range(3)))
    t = perm_group_table(perms)
    text = "# S3 as permutations\r\n6\r\n" + "\r\n".join(" ".join(map(str, r)) for r in t) + "\r\n"
    g = load_cayley_table(io.StringIO(text))
    assert not is_abelian(g)
    assert find_isomorphism(g, dihedral(3)) is not None


def test_identity_is_relabelled_to_zero():
    # Z3 with the identity stored as element 2
    text = "3\n1 2 0\n2 0 1\n0 1 2\n"
    g = load_cayley_table(text)
    assert brute_is_group(g.table.tolist())
    # identity swapped with 0; element 1 keeps its label
    assert g.table.tolist() == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def test_non_associative_table_reports_triple():
    t = cyclic(4).table.tolist()
    t[1][1] = 3  # keeps identity and unique inverses
    text = "4\n" + "\n".join(" ".join(map(str, r)) for r in t)
    with pytest.raises(NotAGroupError) as info:
        load_cayley_table(text)
    i, j, k = info.value.triple
    assert t[t[i][j]][k] != t[i][t[j][k]]
    assert f"({i}, {j}, {k})" in str(info.value)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", CayleyParseError),
        ("2\n0 1\n", CayleyParseError),
        ("2\n0 1\n1 x\n", CayleyParseError),
        ("2\n0 1\n1\n", CayleyParseError),
        ("2\n0 1\n1 2\n", NotAGroupError),
        ("2\n1 0\n0 0\n", NotAGroupError),
        ("3\n0 1 2\n1 0 0\n2 0 0\n", NotAGroupError),
    ],
)
def test_load_errors(text, exc):
    with pytest.raises(exc):
        load_cayley_table(text)


def test_format_roundtrip(q8):
    assert load_cayley_table(format_cayley_table(q8)) == q8


def test_table_is_immutable(q8):
    with pytest.raises(ValueError):
        q8.table[1, 1] = 0


# -- centralizers and orders ----------------------------------------------


def test_centralizer_of_trivial_is_whole(q8):
    assert centralizer(q8, q8.trivial()) == q8.whole()


def test_centralizer_q8_cyclic_a(q8):
    a = cyclic_subgroup(q8, 1)
    assert a.members == (0, 1, 2, 3)
    c = centralizer(q8, a)
    assert set(c) == brute_centralizer(q8, a.members) == {0, 1, 2, 3}


def test_centralizer_of_whole_is_center(q8):
    assert centralizer(q8, q8.whole()) == center(q8)


def test_centers():
    assert center(cyclic(7)) == cyclic(7).whole()
    assert center(dicyclic(2)).members == (0, 2)
    assert center(dihedral(3)).members == (0,)


def test_centralizer_rejects_non_subgroup(q8):
    with pytest.raises(NotASubgroupError):
        centralizer(q8, SubgroupSet.from_members([0, 1]))


@pytest.mark.parametrize("spec", BUILTINS)
def test_centralizer_matches_brute_force(spec):
    g = build_group(spec)
    z = center(g)
    for h in map(SubgroupSet.from_members, brute_subgroups(g)):
        c = centralizer(g, h)
        assert set(c) == brute_centralizer(g, h.members)
        assert z <= c
        assert h <= centralizer(g, c)


def test_element_orders(q8):
    assert element_order(q8, 0) == 1
    assert element_order(cyclic(12), 4) == 3
    assert element_order(q8, 4) == 4
    with pytest.raises(IndexError):
        element_order(q8, 8)


@pytest.mark.parametrize("spec", BUILTINS)
def test_element_order_matches_brute_force(spec):
    g = build_group(spec)
    for x in range(g.order):
        k = element_order(g, x)
        assert k == brute_order(g, x)
        assert g.order % k == 0


def test_generate(q8):
    assert generate(q8, [4, 5]) == q8.whole()
    assert generate(q8, []) == q8.trivial()
    assert generate(q8, [2]).members == (0, 2)


def test_induced_group(q8):
    sub, embed = induced_group(q8, cyclic_subgroup(q8, 4))
    assert embed == (0, 2, 4, 6)
    assert find_isomorphism(sub, cyclic(4)) is not None


def test_relabel_requires_fixed_identity(q8):
    with pytest.raises(GroupError):
        relabel(q8, [1, 0, 2, 3, 4, 5, 6, 7])
    h = relabel(q8, [0, 7, 6, 5, 4, 3, 2, 1])
    assert find_isomorphism(q8, h) is not None


def test_non_square_table():
    with pytest.raises(NotAGroupError):
        GroupTable(np.zeros((2, 3), dtype=int))
