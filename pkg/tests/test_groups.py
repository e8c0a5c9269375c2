import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjcount.builders import build, cyclic, dihedral, quaternion
from conjcount.errors import NoIdentity, NotAssociative, NotClosed
from conjcount.groups import (
    center,
    centralizer,
    class_equation,
    conjugacy_classes,
    derived_subgroup,
    is_abelian,
    is_ac_group,
    max_abelian_order,
    subgroup_as_group,
    verify_group_axioms,
    whole_group,
)
from conjcount.presets import s3_spec


def test_verify_c2():
    G = verify_group_axioms([[0, 1], [1, 0]])
    assert G.order == 2
    assert G.inv == (0, 1)


def test_verify_relocates_identity():
    # C2 written with the identity at index 1
    G = verify_group_axioms([[1, 0], [0, 1]])
    assert G.mul[0] == (0, 1)


def test_non_associative_table_rejected():
    table = [list(row) for row in cyclic(4).mul]
    table[1][1] = 3  # corrupt one entry; row/col 1 is no longer Latin
    with pytest.raises((NotAssociative, NotClosed)):
        verify_group_axioms(table)
    # a Latin square that is not associative: the cyclic table with two
    # rows swapped keeps Latin-ness but breaks (a*b)*c = a*(b*c)
    table = [list(row) for row in cyclic(5).mul]
    table[1], table[2] = table[2], table[1]
    with pytest.raises((NotAssociative, NoIdentity)):
        verify_group_axioms(table)


def test_s3_from_permutations():
    G = build(s3_spec())
    assert G.order == 6
    assert G.mul[0] == tuple(range(6))
    assert sorted(conjugacy_classes(G).class_sizes) == [1, 2, 3]


def test_centralizers():
    s3 = build(s3_spec())
    transposition = next(x for x in range(6) if s3.element_order(x) == 2)
    assert len(centralizer(s3, transposition)) == 2
    assert len(centralizer(s3, 0)) == 6
    q8 = quaternion(8)
    i = next(x for x in range(8) if q8.element_order(x) == 4)
    C = centralizer(q8, i)
    assert len(C) == 4
    H = subgroup_as_group(C)
    assert any(H.element_order(x) == 4 for x in range(4))  # cyclic of order 4


def test_centers():
    assert len(center(quaternion(8))) == 2
    assert len(center(build(s3_spec()))) == 1
    assert len(center(cyclic(6))) == 6


def test_conjugacy_classes():
    assert sorted(conjugacy_classes(quaternion(8)).class_sizes) == [1, 1, 2, 2, 2]
    c5 = cyclic(5)
    assert conjugacy_classes(c5).class_sizes == (1,) * 5


def test_class_equation():
    assert class_equation(build(s3_spec())).counts == {2: 3, 3: 2, 6: 1}
    assert class_equation(dihedral(18)).counts == {2: 9, 9: 8, 18: 1}
    assert class_equation(cyclic(4)).counts == {4: 4}


def test_subgroup_as_group_whole_and_trivial():
    G = quaternion(8)
    assert subgroup_as_group(whole_group(G)).mul == G.mul
    trivial = subgroup_as_group(centralizer(G, 0))
    assert trivial.order == 8  # centralizer of identity is everything
    from conjcount.groups import Subgroup

    assert subgroup_as_group(Subgroup(G, (0,))).order == 1


def test_is_ac_group():
    assert is_ac_group(quaternion(8))
    assert is_ac_group(build(s3_spec()))
    from conjcount.builders import direct_product

    d8d8 = direct_product(dihedral(8), dihedral(8))
    assert not is_ac_group(d8d8)
    # witness: a non-central element with non-abelian centralizer
    witness = 8  # (r, identity) under the pair indexing
    assert witness not in set(center(d8d8).elements)
    assert not is_abelian(centralizer(d8d8, witness))


def test_max_abelian_order():
    assert max_abelian_order(cyclic(12)) == 12
    assert max_abelian_order(build(s3_spec())) == 3
    assert max_abelian_order(quaternion(8)) == 4


def test_derived_subgroup():
    assert len(derived_subgroup(cyclic(9))) == 1
    assert len(derived_subgroup(build(s3_spec()))) == 3
    assert len(derived_subgroup(quaternion(8))) == 2


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["C6", "S3", "D8", "Q8", "D12", "A4"]), st.data())
def test_orbit_stabilizer_random(name, data):
    from conjcount.catalog import builtin_specs

    G = build(builtin_specs()[name])
    g = data.draw(st.integers(0, G.order - 1))
    cd = conjugacy_classes(G)
    assert len(centralizer(G, g)) * cd.class_sizes[cd.class_of[g]] == G.order
