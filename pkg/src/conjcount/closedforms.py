"""Closed formulas for A and B of special group classes, used as independent
cross-checks against the computed pipeline.

Each function transcribes a displayed formula as exact rational-function
arithmetic; none of them re-derives anything from group tables, which is
what makes them usable as oracles for the pipeline (and vice versa).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .builders import _is_prime
from .errors import ParameterOutOfRange
from .ratfun import Polynomial, RationalFunction, scale_variable, simple_term


def _check_prime(p: int) -> None:
    if not _is_prime(p):
        raise ParameterOutOfRange(f"{p} is not prime")


def _t() -> RationalFunction:
    return RationalFunction(Polynomial.of(0, 1), Polynomial.of(1))


def _one_minus(m) -> RationalFunction:
    return RationalFunction.make(Polynomial.of(1, -Fraction(m)), Polynomial.of(1))


def A_dihedral_odd(n: int) -> RationalFunction:
    """Dihedral group of order 2n, n odd and >= 3."""
    if n < 3 or n % 2 == 0:
        raise ParameterOutOfRange(f"need odd n >= 3, got {n}")
    c = Fraction(1, 2 * n)
    return (
        simple_term(c, 2 * n)
        + simple_term(c * n, 2)
        + simple_term(c * (n - 1), n)
    )


def B_dihedral_odd(n: int) -> RationalFunction:
    if n < 3 or n % 2 == 0:
        raise ParameterOutOfRange(f"need odd n >= 3, got {n}")
    inner = (
        RationalFunction.constant(1)
        + simple_term(Fraction(n - 1, 2), n) * _t()
        + simple_term(Fraction(1), 2) * _t()
    )
    return inner / _one_minus(1)


def A_dihedral_even(n: int) -> RationalFunction:
    """Dihedral group of order 2n, n even (n = 2 gives the Klein four-group)."""
    if n < 2 or n % 2 != 0:
        raise ParameterOutOfRange(f"need even n >= 2, got {n}")
    c = Fraction(1, 2 * n)
    return (
        simple_term(2 * c, 2 * n)
        + simple_term(c * n, 4)
        + simple_term(c * (n - 2), n)
    )


def B_dihedral_even(n: int) -> RationalFunction:
    if n < 2 or n % 2 != 0:
        raise ParameterOutOfRange(f"need even n >= 2, got {n}")
    inner = (
        RationalFunction.constant(1)
        + simple_term(Fraction(n - 2, 2), n) * _t()
        + simple_term(Fraction(2), 4) * _t()
    )
    return inner / _one_minus(2)


def A_central_quotient_p2(p: int, m: int) -> RationalFunction:
    """p-group of order p^m whose central quotient has order p^2."""
    _check_prime(p)
    if m < 3:
        raise ParameterOutOfRange(f"need m >= 3 (the group is nonabelian), got m={m}")
    c = Fraction(1, p**m)
    return simple_term(c * p ** (m - 2), p**m) + simple_term(
        c * (p**m - p ** (m - 2)), p ** (m - 1)
    )


def B_central_quotient_p2(p: int, m: int) -> RationalFunction:
    _check_prime(p)
    if m < 3:
        raise ParameterOutOfRange(f"need m >= 3, got m={m}")
    num = _one_minus(p ** (m - 3))
    return num / (_one_minus(p ** (m - 2)) * _one_minus(p ** (m - 1)))


def A_central_quotient_p3(p: int, m: int, has_abelian_maximal: bool) -> RationalFunction:
    """p-group of order p^m with central quotient of order p^3."""
    _check_prime(p)
    if m < 4:
        raise ParameterOutOfRange(f"need m >= 4, got m={m}")
    c = Fraction(1, p**m)
    if has_abelian_maximal:
        return (
            simple_term(c * p ** (m - 3), p**m)
            + simple_term(c * (p ** (m - 1) - p ** (m - 3)), p ** (m - 1))
            + simple_term(c * (p**m - p ** (m - 1)), p ** (m - 2))
        )
    return simple_term(c * p ** (m - 3), p**m) + simple_term(
        c * (p**m - p ** (m - 3)), p ** (m - 2)
    )


def B_central_quotient_p3(p: int, m: int, has_abelian_maximal: bool) -> RationalFunction:
    _check_prime(p)
    if m < 4:
        raise ParameterOutOfRange(f"need m >= 4, got m={m}")
    if has_abelian_maximal:
        inner = (
            RationalFunction.constant(1)
            + simple_term(Fraction(p ** (m - 2) - p ** (m - 4)), p ** (m - 1)) * _t()
            + simple_term(Fraction(p ** (m - 2) - p ** (m - 3)), p ** (m - 2)) * _t()
        )
        return inner / _one_minus(p ** (m - 3))
    num = _one_minus(p ** (m - 5))
    return num / (_one_minus(p ** (m - 2)) * _one_minus(p ** (m - 3)))


def A_abelian_maximal(order_g: int, order_m: int, order_z: int) -> RationalFunction:
    """Nonabelian p-group with an abelian maximal subgroup of order order_m."""
    if order_m <= 0 or order_g % order_m != 0:
        raise ParameterOutOfRange("maximal subgroup order must divide the group order")
    p = order_g // order_m
    if not _is_prime(p):
        raise ParameterOutOfRange(f"subgroup of order {order_m} has non-prime index {p}")
    if order_z <= 0 or order_m % order_z != 0 or order_m == order_g:
        raise ParameterOutOfRange("invalid center/maximal-subgroup orders")
    c = Fraction(1, order_g)
    return (
        simple_term(c * order_z, order_g)
        + simple_term(c * (order_g - order_m), p * order_z)
        + simple_term(c * (order_m - order_z), order_m)
    )


def A_extraspecial(p: int, n: int) -> RationalFunction:
    """Extraspecial p-group of order p^(2n+1)."""
    _check_prime(p)
    if n < 1:
        raise ParameterOutOfRange(f"need n >= 1, got {n}")
    order = p ** (2 * n + 1)
    c = Fraction(1, order)
    return simple_term(c * p, order) + simple_term(c * (order - p), p ** (2 * n))


def B_extraspecial(p: int, n: int) -> RationalFunction:
    """Extraspecial B by the centralizer recursion on the order.

    B_{p^3} = (1-t)/((1-pt)(1-p^2 t)); above that, a non-central centralizer
    is isoclinic to the next extraspecial group down with index-p order
    ratio, giving B_{p^(2n+1)}(t) = (1 + (p^2n - 1) t B_{p^(2n-1)}(st)) / (1 - pt)
    with substitution scale s = p for odd p and s = 2 for p = 2 (for p = 2
    the centralizer is a central product, so the order ratio is 2).
    """
    _check_prime(p)
    if n < 1:
        raise ParameterOutOfRange(f"need n >= 1, got {n}")
    if n == 1:
        return _one_minus(1) / (_one_minus(p) * _one_minus(p * p))
    scale = p if p != 2 else 2
    prev = scale_variable(B_extraspecial(p, n - 1), Fraction(scale))
    inner = RationalFunction.constant(1) + RationalFunction.constant(p ** (2 * n) - 1) * _t() * prev
    return inner / _one_minus(p)


def A_maximal_class(p: int, m: int, case: str) -> RationalFunction:
    """Maximal-class p-group of order p^m with positive degree of commutativity."""
    _check_prime(p)
    c = Fraction(1, p**m)
    if case == "abelian-maximal":
        if m < 4:
            raise ParameterOutOfRange(f"need m >= 4, got m={m}")
        return (
            simple_term(c * p, p**m)
            + simple_term(c * (p**m - p ** (m - 1)), p**2)
            + simple_term(c * (p ** (m - 1) - p), p ** (m - 1))
        )
    if case == "no-abelian-maximal":
        if m < 5:
            raise ParameterOutOfRange(f"need m >= 5, got m={m}")
        return (
            simple_term(c * p, p**m)
            + simple_term(c * (p**m - p ** (m - 1)), p**2)
            + simple_term(c * (p ** (m - 1) - p ** (m - 3)), p ** (m - 2))
            + simple_term(c * (p ** (m - 3) - p), p ** (m - 1))
        )
    raise ParameterOutOfRange(f"unknown case {case!r}")


def B_maximal_class(p: int, m: int, case: str) -> RationalFunction:
    _check_prime(p)
    if case == "abelian-maximal":
        if m < 4:
            raise ParameterOutOfRange(f"need m >= 4, got m={m}")
        inner = (
            RationalFunction.constant(1)
            + simple_term(Fraction(p ** (m - 2) - 1), p ** (m - 1)) * _t()
            + simple_term(Fraction(p * p - p), p * p) * _t()
        )
        return inner / _one_minus(p)
    if case == "no-abelian-maximal":
        if m < 5:
            raise ParameterOutOfRange(f"need m >= 5, got m={m}")
        nested = (
            RationalFunction.constant(p ** (m - 4) - 1)
            * _t()
            * _one_minus(p ** (m - 4))
            / (_one_minus(p ** (m - 2)) * _one_minus(p ** (m - 3)))
        )
        inner = (
            RationalFunction.constant(1)
            + nested
            + simple_term(Fraction(p ** (m - 3) - p ** (m - 5)), p ** (m - 2)) * _t()
            + simple_term(Fraction(p * p - p), p * p) * _t()
        )
        return inner / _one_minus(p)
    raise ParameterOutOfRange(f"unknown case {case!r}")


def A_frobenius(a_kernel: RationalFunction, order_kernel: int,
                a_complement: RationalFunction, order_complement: int) -> RationalFunction:
    """Compose A of a Frobenius group from kernel and complement data."""
    if order_complement < 2 or order_kernel < 2:
        raise ParameterOutOfRange("kernel and complement must be nontrivial")
    if (order_kernel - 1) % order_complement != 0:
        raise ParameterOutOfRange(
            f"complement order {order_complement} does not divide {order_kernel} - 1"
        )
    order_g = order_kernel * order_complement
    n_scaled = RationalFunction.constant(order_kernel)
    h_scaled = RationalFunction.constant(order_complement)
    total = (
        simple_term(1, order_g)
        + (n_scaled * a_kernel - simple_term(1, order_kernel))
        + RationalFunction.constant(order_kernel)
        * (h_scaled * a_complement - simple_term(1, order_complement))
    )
    return total / RationalFunction.constant(order_g)


def B_frobenius(b_kernel: RationalFunction, b_complement: RationalFunction,
                order_complement: int) -> RationalFunction:
    """(1-t) B = 1 + ((1-t) B_N - 1)/|H| + ((1-t) B_H - 1)."""
    if order_complement < 2:
        raise ParameterOutOfRange("complement must be nontrivial")
    one = RationalFunction.constant(1)
    shrink = _one_minus(1)
    total = (
        one
        + (shrink * b_kernel - one) / RationalFunction.constant(order_complement)
        + (shrink * b_complement - one)
    )
    return total / shrink


# ---------------------------------------------------------------------------
# normalized family invariants (rank <= 5)

@dataclass(frozen=True)
class FamilyFormula:
    family: str
    p: int
    normalized_A: RationalFunction
    normalized_B: RationalFunction

    def __post_init__(self):
        assert self.normalized_A(Fraction(0)) == 1
        assert self.normalized_B(Fraction(0)) == 1


FAMILY_TABLE_ROWS = (
    "Abelian",
    "Phi2", "Phi3", "Phi4", "Phi5", "Phi6", "Phi7", "Phi8", "Phi9", "Phi10",
    "Gamma2", "Gamma3", "Gamma4", "Gamma5", "Gamma6", "Gamma7", "Gamma8",
)

# Gamma families share the rows of their odd-p partners at p = 2.
_FAMILY_ROW_KEY = {
    "Abelian": "abelian",
    "Phi2": "row2", "Gamma2": "row2",
    "Phi3": "row34", "Phi4": "row34", "Gamma3": "row34", "Gamma4": "row34",
    "Phi5": "row5", "Gamma5": "row5",
    "Phi6": "row6",
    "Phi7": "row78", "Phi8": "row78", "Gamma6": "row78", "Gamma7": "row78",
    "Phi9": "row9", "Gamma8": "row9",
    "Phi10": "row10",
}


def family_table(family: str, p: int) -> FamilyFormula:
    """The normalized-invariant pair for one isoclinism family of rank <= 5."""
    if family not in _FAMILY_ROW_KEY:
        raise ParameterOutOfRange(f"unknown family {family!r}")
    _check_prime(p)
    if family.startswith("Gamma") and p != 2:
        raise ParameterOutOfRange(f"{family} requires p = 2")
    if family.startswith("Phi") and p == 2:
        raise ParameterOutOfRange(f"{family} requires an odd prime")
    q = Fraction(1, p)
    key = _FAMILY_ROW_KEY[family]
    if key == "abelian":
        a = simple_term(1, 1)
        b = simple_term(1, 1)
    elif key == "row2":
        a = simple_term(1 - q**2, q) + simple_term(q**2, 1)
        b = simple_term(-q, q**2) + simple_term(1 + q, q)
    elif key == "row34":
        a = simple_term(1 - q, q**2) + simple_term(q - q**3, q) + simple_term(q**3, 1)
        b = simple_term(-q, q**3) + simple_term(1, q**2) + simple_term(q, q)
    elif key == "row5":
        a = simple_term(1 - q**4, q) + simple_term(q**4, 1)
        b = simple_term(1, q**4) + simple_term(-p - 1 - q - q**2, q**3) + simple_term(
            p + 1 + q + q**2, q**2
        )
    elif key == "row6":
        a = simple_term(1 - q**3, q**2) + simple_term(q**3, 1)
        b = simple_term(-q - q**2, q**3) + simple_term(1 + q + q**2, q**2)
    elif key == "row78":
        a = simple_term(1 - q**2, q**2) + simple_term(q**2 - q**4, q) + simple_term(q**4, 1)
        b = simple_term(-q - q**2, q**3) + simple_term(1 + q + q**2, q**2)
    elif key == "row9":
        a = simple_term(1 - q, q**3) + simple_term(q - q**4, q) + simple_term(q**4, 1)
        b = simple_term(-q, q**4) + simple_term(1, q**3) + simple_term(q, q)
    elif key == "row10":
        a = (
            simple_term(1 - q, q**3)
            + simple_term(q - q**3, q**2)
            + simple_term(q**3 - q**4, q)
            + simple_term(q**4, 1)
        )
        b = simple_term(-q, q**4) + simple_term(1 - q**2, q**3) + simple_term(q + q**2, q**2)
    else:  # pragma: no cover
        raise AssertionError(key)
    return FamilyFormula(family, p, a, b)
