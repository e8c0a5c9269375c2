from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjcount.errors import NotSimpleIntegerPoles
from conjcount.ratfun import (
    PartialFraction,
    Polynomial,
    RationalFunction,
    format_partial_fractions,
    format_rational,
    from_partial_fractions,
    parse_partial_fractions,
    parse_rational,
    scale_variable,
    series_coeffs,
    simple_term,
    to_partial_fractions,
)


def geometric(m):
    return simple_term(1, m)


def test_scale_variable_collapses_pole():
    assert scale_variable(geometric(8), Fraction(1, 8)) == geometric(1)


def test_add_cancels():
    f = geometric(2)
    assert (f - f).is_zero()


def test_series_b_q8():
    f = RationalFunction.make(
        Polynomial.of(1, -1), Polynomial.of(1, -2) * Polynomial.of(1, -4)
    )
    assert series_coeffs(f, 4) == [1, 5, 22, 92]


def test_series_geometric():
    for k in (1, 3, 7):
        assert series_coeffs(geometric(k), 5) == [k**n for n in range(5)]


def test_partial_fractions_b_q8():
    f = RationalFunction.make(
        Polynomial.of(1, -1), Polynomial.of(1, -2) * Polynomial.of(1, -4)
    )
    pf = to_partial_fractions(f)
    assert pf.terms == ((Fraction(3, 2), 4), (Fraction(-1, 2), 2))


def test_partial_fractions_trivial_pole():
    assert to_partial_fractions(geometric(1)).terms == ((Fraction(1), 1),)


def test_partial_fractions_rejects_repeated_pole():
    f = RationalFunction.make(Polynomial.of(1), Polynomial.of(1, -2) * Polynomial.of(1, -2))
    with pytest.raises(NotSimpleIntegerPoles):
        to_partial_fractions(f)


def test_partial_fractions_rejects_non_integer_pole():
    f = RationalFunction.make(Polynomial.of(1), Polynomial.of(1, -1, -1))
    with pytest.raises(NotSimpleIntegerPoles):
        to_partial_fractions(f)


def test_partial_fractions_rejects_improper():
    f = RationalFunction.make(Polynomial.of(1, 0, 7), Polynomial.of(1, -2))
    with pytest.raises(NotSimpleIntegerPoles):
        to_partial_fractions(f)


def test_eq_by_cross_multiplication():
    printed = parse_rational("(-98t^2 + 23t - 1)/(324t^3 - 216t^2 + 29t - 1)")
    direct = (
        simple_term(Fraction(9, 18), 2)
        + simple_term(Fraction(8, 18), 9)
        + simple_term(Fraction(1, 18), 18)
    )
    assert printed == direct
    assert geometric(2) != geometric(3)


def test_format_parse_round_trip():
    f = RationalFunction.make(
        Polynomial.of(1, -6, 1), Polynomial.of(1, -12, 29, -18)
    )
    assert parse_rational(format_rational(f)) == f
    pf = PartialFraction.of([(Fraction(-2, 3), 3), (Fraction(1), 6), (Fraction(2, 3), 9)])
    assert parse_partial_fractions(format_partial_fractions(pf)) == pf


@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(
        st.integers(1, 40),
        st.fractions(min_value=-10, max_value=10).filter(lambda x: x != 0),
        min_size=1,
        max_size=4,
    )
)
def test_partial_fraction_round_trip_random(data):
    pf = PartialFraction.of(list((c, m) for m, c in data.items()))
    rebuilt = to_partial_fractions(from_partial_fractions(pf))
    assert rebuilt == pf


@settings(max_examples=40, deadline=None)
@given(
    st.fractions(min_value=-4, max_value=4).filter(lambda x: x != 0),
    st.integers(1, 12),
)
def test_scale_variable_series_random(c, m):
    base = geometric(m)
    scaled = scale_variable(base, c)
    want = [c**n * m**n for n in range(6)]
    assert series_coeffs(scaled, 6) == want


@settings(max_examples=40, deadline=None)
@given(
    st.dictionaries(
        st.integers(1, 30),
        st.fractions(min_value=-8, max_value=8).filter(lambda x: x != 0),
        min_size=1,
        max_size=3,
    )
)
def test_render_parse_random(data):
    pf = PartialFraction.of(list((c, m) for m, c in data.items()))
    assert parse_partial_fractions(format_partial_fractions(pf)) == pf
    f = from_partial_fractions(pf)
    assert parse_rational(format_rational(f)) == f
