import pytest

from conjcount.builders import (
    Cyclic,
    Dihedral,
    DirectProduct,
    PcPresentation,
    Quaternion,
    Stem,
    build,
    collect,
    cyclic,
    dihedral,
    extend_action,
    extraspecial,
    frobenius_check,
    quaternion,
    semidihedral,
    semidirect,
)
from conjcount.errors import (
    InconsistentPresentation,
    NotAHomomorphism,
    NotAutomorphism,
    ParameterOutOfRange,
)
from conjcount.groups import (
    center,
    centralizer,
    class_equation,
    derived_subgroup,
    is_abelian,
    max_abelian_order,
    whole_group,
)
from conjcount.invariants import A_of, B_of, a_equivalent, b_equivalent
from conjcount.presets import (
    g18_4_spec,
    g54_6_spec,
    g54_8_spec,
    g128_1758_spec,
    g128_2022_printed_spec,
    g128_2022_spec,
    m16_spec,
    stem_group,
)


def test_build_cyclic_and_dihedral():
    assert is_abelian(build(Cyclic(6)))
    d18 = build(Dihedral(18))
    assert d18.order == 18 and len(center(d18)) == 1


def test_extraspecial_heisenberg():
    G = extraspecial(3, 27, "odd-exponent-p")
    assert G.order == 27
    assert len(center(G)) == 3
    assert len(derived_subgroup(G)) == 3
    assert all(G.element_order(x) in (1, 3) for x in range(27))  # exponent 3


def test_extraspecial_parameter_checks():
    with pytest.raises(ParameterOutOfRange):
        extraspecial(2, 8, "odd-exponent-p")
    with pytest.raises(ParameterOutOfRange):
        extraspecial(3, 81, "odd-exponent-p")  # not p^(2n+1)
    with pytest.raises(ParameterOutOfRange):
        extraspecial(4, 64, "two-type")


def test_collect_cyclic():
    assert collect(PcPresentation(orders=(3,))).mul == cyclic(3).mul


def test_collect_inconsistent_presentation():
    # b^a = identity forces b = 1, so the 4-vector table cannot associate
    bad = PcPresentation(orders=(2, 2), conjugates=((0, 1, ()),))
    with pytest.raises(InconsistentPresentation):
        collect(bad)


def test_collect_expected_order_mismatch():
    with pytest.raises(InconsistentPresentation):
        collect(PcPresentation(orders=(2, 2), expected_order=8))


def test_collect_phi5_is_extraspecial_243():
    stem = stem_group("Phi5", 3)
    direct = extraspecial(3, 243, "odd-exponent-p")
    assert stem.order == direct.order == 243
    assert class_equation(stem) == class_equation(direct)
    assert A_of(stem) == A_of(direct)
    assert B_of(stem) == B_of(direct)


def test_semidirect_s3():
    c3, c2 = cyclic(3), cyclic(2)
    inversion = (0, 2, 1)
    G = semidirect(c3, c2, [tuple(range(3)), inversion])
    assert class_equation(G).counts == {2: 3, 3: 2, 6: 1}


def test_semidirect_rejects_bad_action():
    c3, c2 = cyclic(3), cyclic(2)
    with pytest.raises(NotAutomorphism):
        semidirect(c3, c2, [tuple(range(3)), (1, 0, 2)])  # fixes identity? no: moves 0
    with pytest.raises(NotAHomomorphism):
        # inversion assigned to the identity of C2 breaks multiplicativity
        semidirect(c3, c2, [(0, 2, 1), tuple(range(3))])


def test_extend_action_needs_generators():
    c3, c4 = cyclic(3), cyclic(4)
    with pytest.raises(ValueError):
        extend_action(c3, c4, (2,), ((0, 1, 2),))  # 2 generates only half of C4


def test_g18_4_is_generalized_dihedral():
    G = build(g18_4_spec())
    assert G.order == 18
    assert len(center(G)) == 1
    assert a_equivalent(G, dihedral(18))


def test_g54_groups():
    g6, g8 = build(g54_6_spec()), build(g54_8_spec())
    assert g6.order == g8.order == 54
    assert len(center(g6)) == 1 and len(center(g8)) == 3
    assert b_equivalent(g6, g8) and not a_equivalent(g6, g8)


def test_g128_printed_2022_is_inconsistent():
    with pytest.raises(InconsistentPresentation):
        build(g128_2022_printed_spec())


def test_g128_collectable_pair():
    g1758 = build(g128_1758_spec())
    g2022 = build(g128_2022_spec())
    assert g1758.order == g2022.order == 128
    assert a_equivalent(g1758, g2022)
    assert not b_equivalent(g1758, g2022)


def test_m16():
    G = build(m16_spec())
    assert G.order == 16
    assert len(center(G)) == 4
    assert max_abelian_order(G) == 8


def test_frobenius_check_s3():
    s3 = build(Dihedral(6))
    reflection = next(x for x in range(6) if s3.element_order(x) == 2)
    result = frobenius_check(s3, centralizer(s3, reflection))
    assert result.is_frobenius
    assert len(result.kernel) == 3


def test_frobenius_check_d18():
    d18 = dihedral(18)
    reflection = next(x for x in range(18) if x >= 9)
    result = frobenius_check(d18, centralizer(d18, reflection))
    assert result.is_frobenius
    assert len(result.kernel) == 9
    kernel_group = result.kernel
    assert is_abelian(kernel_group)


def test_frobenius_check_failure_d8():
    d8 = dihedral(8)
    reflection = next(x for x in range(8) if x >= 4)
    from conjcount.groups import subgroup_closure

    H = subgroup_closure(d8, [reflection])
    assert len(H) == 2
    result = frobenius_check(d8, H)
    assert not result.is_frobenius
    assert result.witness is not None


def test_frobenius_check_rejects_trivial():
    d8 = dihedral(8)
    with pytest.raises(ValueError):
        frobenius_check(d8, whole_group(d8))


def test_stem_group_rejects_bad_parameters():
    with pytest.raises(ParameterOutOfRange):
        stem_group("Gamma4", 3)
    with pytest.raises(ParameterOutOfRange):
        stem_group("Phi7", 2)
    with pytest.raises(ParameterOutOfRange):
        stem_group("Phi11", 3)


def test_stem_gamma3_is_d16():
    assert stem_group("Gamma3", 2).mul == dihedral(16).mul


def test_stem_phi10_is_maximal_class_243():
    G = stem_group("Phi10", 3)
    assert G.order == 243
    assert len(center(G)) == 3
    assert max_abelian_order(G) == 27  # no abelian maximal subgroup


def test_phi_stems_at_p5_small():
    # the binomial power relations vanish for p > 3
    G = stem_group("Phi2", 5)
    assert G.order == 125
    G = stem_group("Phi3", 5)
    assert G.order == 625 and len(center(G)) == 5


def test_quaternion_semidihedral_isoclinic_to_dihedral():
    d16, q16, sd16 = dihedral(16), quaternion(16), semidihedral(16)
    assert a_equivalent(d16, q16) and a_equivalent(d16, sd16)
    assert b_equivalent(d16, q16) and b_equivalent(d16, sd16)


def test_direct_product_spec():
    G = build(DirectProduct((Cyclic(2), Cyclic(3), Cyclic(5))))
    assert G.order == 30 and is_abelian(G)


def test_build_quaternion_spec_roundtrip():
    assert build(Quaternion(8)).mul == quaternion(8).mul
    assert build(Stem("Gamma2", 2)).mul == dihedral(8).mul
