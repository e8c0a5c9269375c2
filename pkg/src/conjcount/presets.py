"""Named group recipes: stem groups of the small isoclinism families and the
counterexample groups of orders 18, 54 and 128.

The odd-p families Phi2..Phi10 follow the rank-<=5 classification; stem
orders are p^3 (Phi2), p^4 (Phi3) and p^5 (Phi4..Phi10). The 2-group
families Gamma2..Gamma8 have stem orders 8, 16 and 32. Binomial-convention
power relations collapse to different power words at p = 3 and p > 3, and
both expansions are encoded explicitly.
"""

from __future__ import annotations

from .builders import (
    Cyclic,
    Dihedral,
    DirectProduct,
    Extraspecial,
    GroupSpec,
    PcPresentation,
    Permutations,
    Quaternion,
    Semidirect,
    build,
    _is_prime,
)
from .errors import ParameterOutOfRange
from .groups import FiniteGroup

PHI_FAMILIES = tuple(f"Phi{k}" for k in range(2, 11))
GAMMA_FAMILIES = tuple(f"Gamma{k}" for k in range(2, 9))
STEM_FAMILIES = PHI_FAMILIES + GAMMA_FAMILIES


def _conj(i: int, j: int, *pairs) -> tuple[int, int, tuple[tuple[int, int], ...]]:
    return (i, j, tuple(pairs))


def _power(i: int, *pairs) -> tuple[int, tuple[tuple[int, int], ...]]:
    return (i, tuple(pairs))


def stem_spec(family: str, p: int) -> GroupSpec:
    """The recipe for one stem group of the given isoclinism family."""
    if family in GAMMA_FAMILIES:
        if p != 2:
            raise ParameterOutOfRange(f"{family} is a family of 2-groups, got p={p}")
        return _GAMMA_SPECS[family]
    if family not in PHI_FAMILIES:
        raise ParameterOutOfRange(f"unknown family {family!r}")
    if p == 2 or not _is_prime(p):
        raise ParameterOutOfRange(f"{family} needs an odd prime, got p={p}")
    return _phi_spec(family, p)


def stem_group(family: str, p: int) -> FiniteGroup:
    G = build(stem_spec(family, p))
    expected = stem_order(family, p)
    assert G.order == expected, f"{family} stem at p={p} has order {G.order}, expected {expected}"
    return G


def stem_order(family: str, p: int) -> int:
    if family.startswith("Phi"):
        rank = {"Phi2": 3, "Phi3": 4}.get(family, 5)
        return p**rank
    return {"Gamma2": 8, "Gamma3": 16}.get(family, 32)


def _phi_spec(family: str, p: int) -> GroupSpec:
    if family == "Phi2":
        return Extraspecial(p, p**3, "odd-exponent-p")
    if family == "Phi3":
        # generators (a, a1, a2, a3): a1^a = a1 a2, a2^a = a2 a3; any group of
        # order p^4 with center of order p lies in the unique rank-4 family
        return PcPresentation(
            orders=(p, p, p, p),
            conjugates=(_conj(0, 1, (1, 1), (2, 1)), _conj(0, 2, (2, 1), (3, 1))),
        )
    if family == "Phi4":
        # (a, a1, a2, b1, b2): a_i^a = a_i b_i
        return PcPresentation(
            orders=(p,) * 5,
            conjugates=(_conj(0, 1, (1, 1), (3, 1)), _conj(0, 2, (2, 1), (4, 1))),
        )
    if family == "Phi5":
        # (a1, a2, a3, a4, b): [a1,a2] = [a3,a4] = b, exponent p (extraspecial)
        return PcPresentation(
            orders=(p,) * 5,
            conjugates=(
                _conj(0, 1, (1, 1), (4, p - 1)),
                _conj(2, 3, (3, 1), (4, p - 1)),
            ),
        )
    if family == "Phi6":
        # (a1, a2, b, b1, b2): [a1,a2] = b, [b,a1] = b1, [b,a2] = b2
        return PcPresentation(
            orders=(p,) * 5,
            conjugates=(
                _conj(0, 1, (1, 1), (2, p - 1)),
                _conj(0, 2, (2, 1), (3, 1)),
                _conj(1, 2, (2, 1), (4, 1)),
            ),
        )
    if family == "Phi7":
        # (a, b, a1, a2, a3): a1^a = a1 a2, a2^a = a2 a3, a1^b = a1 a3;
        # at p = 3 the binomial power relation leaves a1^3 = a3^-1
        powers = (_power(2, (4, 2)),) if p == 3 else ()
        return PcPresentation(
            orders=(p,) * 5,
            powers=powers,
            conjugates=(
                _conj(0, 2, (2, 1), (3, 1)),
                _conj(0, 3, (3, 1), (4, 1)),
                _conj(1, 2, (2, 1), (4, 1)),
            ),
        )
    if family == "Phi8":
        # (a2, a1) with a1 of order p^3: a1^a2 = a1^(1+p)
        return PcPresentation(
            orders=(p**2, p**3),
            conjugates=(_conj(0, 1, (1, 1 + p)),),
        )
    if family == "Phi9":
        # (a, a1, a2, a3, a4): a_i^a = a_i a_{i+1};
        # at p = 3 the binomial relations leave a1^3 = a3^-1 a4, a2^3 = a4^-1
        powers = (_power(1, (3, 2), (4, 1)), _power(2, (4, 2))) if p == 3 else ()
        return PcPresentation(
            orders=(p,) * 5,
            powers=powers,
            conjugates=(
                _conj(0, 1, (1, 1), (2, 1)),
                _conj(0, 2, (2, 1), (3, 1)),
                _conj(0, 3, (3, 1), (4, 1)),
            ),
        )
    if family == "Phi10":
        # Phi9 plus [a1,a2] = a4
        powers = (_power(1, (3, 2), (4, 1)), _power(2, (4, 2))) if p == 3 else ()
        return PcPresentation(
            orders=(p,) * 5,
            powers=powers,
            conjugates=(
                _conj(0, 1, (1, 1), (2, 1)),
                _conj(0, 2, (2, 1), (3, 1)),
                _conj(0, 3, (3, 1), (4, 1)),
                _conj(1, 2, (2, 1), (4, p - 1)),
            ),
        )
    raise ParameterOutOfRange(f"unknown family {family!r}")


_GAMMA_SPECS: dict[str, GroupSpec] = {
    "Gamma2": Dihedral(8),
    "Gamma3": Dihedral(16),
    # (b, a1, a2): a_i^b = a_i^-1
    "Gamma4": PcPresentation(
        orders=(2, 4, 4),
        conjugates=(_conj(0, 1, (1, 3)), _conj(0, 2, (2, 3))),
    ),
    # (a1..a4, b): [a1,a2] = [a1,a4] = [a2,a3] = b, all involutions
    "Gamma5": PcPresentation(
        orders=(2,) * 5,
        conjugates=(
            _conj(0, 1, (1, 1), (4, 1)),
            _conj(0, 3, (3, 1), (4, 1)),
            _conj(1, 2, (2, 1), (4, 1)),
        ),
    ),
    # (b1, b2, a): a^b1 = a^-1, a^b2 = a^5
    "Gamma6": PcPresentation(
        orders=(2, 2, 8),
        conjugates=(_conj(0, 2, (2, 7)), _conj(1, 2, (2, 5))),
    ),
    # (a, b3, b2, b1): b3^a = b1 b2 b3, b2^a = b1 b2; the b_i are listed in
    # reverse so conjugate words only reference later generators
    "Gamma7": PcPresentation(
        orders=(4, 2, 2, 2),
        conjugates=(
            _conj(0, 1, (1, 1), (2, 1), (3, 1)),
            _conj(0, 2, (2, 1), (3, 1)),
        ),
    ),
    "Gamma8": Dihedral(32),
}


# ---------------------------------------------------------------------------
# counterexample groups (GAP small-group ids in the names)

def g18_4_spec() -> GroupSpec:
    """Generalized dihedral group over C3 x C3: (b, a1, a2), a_i^b = a_i^-1."""
    return PcPresentation(
        orders=(2, 3, 3),
        conjugates=(_conj(0, 1, (1, 2)), _conj(0, 2, (2, 2))),
        expected_order=18,
    )


def g54_6_spec() -> GroupSpec:
    """C9 rtimes C6 as (a1, a2, a3) of orders (2, 3, 9).

    The printed four-generator presentation carries a redundant generator
    (forced to equal a power of the order-9 one); this is the collapsed
    consistent power-conjugate form: a3^a1 = a3^8, a3^a2 = a3^7.
    """
    return PcPresentation(
        orders=(2, 3, 9),
        conjugates=(_conj(0, 2, (2, 8)), _conj(1, 2, (2, 7))),
        expected_order=54,
    )


def g54_8_spec() -> GroupSpec:
    """(a1, a2, a3, b): a2^a1 = a2^-1, a3^a1 = a3^-1, a3^a2 = a3 b."""
    return PcPresentation(
        orders=(2, 3, 3, 3),
        conjugates=(
            _conj(0, 1, (1, 2)),
            _conj(0, 2, (2, 2)),
            _conj(1, 2, (2, 1), (3, 1)),
        ),
        expected_order=54,
    )


def g128_1758_spec() -> GroupSpec:
    """Order-128 group, generators (a1..a6, b), all involutions, as printed."""
    return PcPresentation(
        orders=(2,) * 7,
        conjugates=(
            _conj(0, 1, (1, 1), (4, 1)),
            _conj(0, 2, (2, 1), (5, 1)),
            _conj(0, 3, (3, 1), (6, 1)),
            _conj(1, 5, (5, 1), (6, 1)),
            _conj(2, 4, (4, 1), (6, 1)),
        ),
        expected_order=128,
    )


def g128_2022_printed_spec() -> GroupSpec:
    """Literal transliteration of the printed order-128 presentation.

    The printed relative orders (a5 and a6 of order 4 with no power words)
    predict 512 elements against the expected 128, so collection is
    expected to flag this presentation as inconsistent.
    """
    return PcPresentation(
        orders=(2, 2, 2, 2, 4, 4, 2),
        conjugates=(
            _conj(0, 1, (1, 1), (4, 1), (6, 1)),
            _conj(0, 2, (2, 1), (5, 1), (6, 1)),
            _conj(0, 4, (4, 1), (6, 1)),
            _conj(0, 5, (5, 1), (6, 1)),
            _conj(1, 2, (2, 1), (6, 1)),
            _conj(1, 3, (3, 1), (4, 1), (6, 1)),
            _conj(1, 4, (4, 1), (6, 1)),
            _conj(2, 5, (5, 1), (6, 1)),
            _conj(3, 4, (4, 1), (6, 1)),
        ),
        expected_order=128,
    )


def g128_2022_spec() -> GroupSpec:
    """The completed order-128 presentation: a5^2 = a6^2 = b is forced.

    Squaring the conjugation by a1 on a2 (and a3) forces the power words
    a5^2 = b and a6^2 = b, after which the conjugate words collapse to the
    normal forms below. Collection certifies the result.
    """
    return PcPresentation(
        orders=(2,) * 7,
        powers=(_power(4, (6, 1)), _power(5, (6, 1))),
        conjugates=(
            _conj(0, 1, (1, 1), (4, 1)),
            _conj(0, 2, (2, 1), (5, 1)),
            _conj(0, 4, (4, 1), (6, 1)),
            _conj(0, 5, (5, 1), (6, 1)),
            _conj(1, 2, (2, 1), (6, 1)),
            _conj(1, 3, (3, 1), (4, 1)),
            _conj(1, 4, (4, 1), (6, 1)),
            _conj(2, 5, (5, 1), (6, 1)),
            _conj(3, 4, (4, 1), (6, 1)),
        ),
        expected_order=128,
    )


def m16_spec() -> GroupSpec:
    """Modular group of order 16: (b, a), a^b = a^5."""
    return PcPresentation(orders=(2, 8), conjugates=(_conj(0, 1, (1, 5)),))


def g72_41_spec() -> GroupSpec:
    """(C3 x C3) rtimes Q8 with the fixed-point-free action.

    Q8 embeds in SL(2,3); the generators a (index 1) and b (index 4) of the
    quaternion builder act as the matrices [[0,-1],[1,0]] and [[1,1],[1,-1]]
    on pairs (x, y) indexed 3x + y.
    """

    def matrix_perm(a, b, c, d):
        out = []
        for x in range(3):
            for y in range(3):
                out.append(3 * ((a * x + b * y) % 3) + (c * x + d * y) % 3)
        return tuple(out)

    return Semidirect(
        kernel=DirectProduct((Cyclic(3), Cyclic(3))),
        complement=Quaternion(8),
        action_generators=(1, 4),
        action_images=(matrix_perm(0, -1, 1, 0), matrix_perm(1, 1, 1, -1)),
    )


def g1029_spec() -> GroupSpec:
    """Extraspecial 7^3 extended by the order-3 automorphism x -> x^2 z, y -> y^2, z -> z^4.

    On normal-form coordinates (x^a y^b z^c), the automorphism sends
    (a, b, c) to (2a, 2b, a + 4c) mod 7.
    """
    perm = []
    for code in range(343):
        c = code % 7
        b = (code // 7) % 7
        a = code // 49
        image_a, image_b, image_c = (2 * a) % 7, (2 * b) % 7, (a + 4 * c) % 7
        perm.append(image_a * 49 + image_b * 7 + image_c)
    return Semidirect(
        kernel=Extraspecial(7, 343, "odd-exponent-p"),
        complement=Cyclic(3),
        action_generators=(1,),
        action_images=(tuple(perm),),
    )


def s3_spec() -> GroupSpec:
    return Permutations(3, ((1, 0, 2), (1, 2, 0)))


def a4_spec() -> GroupSpec:
    return Permutations(4, ((1, 2, 0, 3), (0, 2, 3, 1)))


# Structural facts asserted for every stem group: center order, derived
# subgroup order, existence of an abelian maximal subgroup (as exponents of
# p / plain ints for the Gamma families at p = 2).
STEM_FACTS: dict[str, tuple[int, int, bool]] = {
    # family: (|Z| as p-exponent, |G'| as p-exponent, has abelian maximal)
    "Phi2": (1, 1, True),
    "Phi3": (1, 2, True),
    "Phi4": (2, 2, True),
    "Phi5": (1, 1, False),
    "Phi6": (2, 3, False),
    "Phi7": (1, 2, False),
    "Phi8": (1, 2, False),
    "Phi9": (1, 3, True),
    "Phi10": (1, 3, False),
    "Gamma2": (1, 1, True),
    "Gamma3": (1, 2, True),
    "Gamma4": (2, 2, True),
    "Gamma5": (1, 1, False),
    "Gamma6": (1, 2, False),
    "Gamma7": (1, 2, False),
    "Gamma8": (1, 3, True),
}
