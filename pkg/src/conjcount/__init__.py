"""Exact counting of simultaneous conjugacy classes and commuting tuples in finite groups."""

from .builders import (
    Cyclic,
    Dihedral,
    DirectProduct,
    Extraspecial,
    PcPresentation,
    Permutations,
    Quaternion,
    Semidihedral,
    Semidirect,
    Stem,
    Table,
    Trivial,
    build,
    collect,
    frobenius_check,
    semidirect,
)
from .groups import (
    CentralizerSpectrum,
    ConjugacyData,
    FiniteGroup,
    Subgroup,
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
)
from .invariants import (
    AsymptoticReport,
    InvariantRecord,
    A_of,
    B_of,
    a_equivalent,
    alpha_n,
    asymptotic_report,
    b_equivalent,
    build_record,
    class_eq_from_alpha,
    normalized_A,
    normalized_B,
)
from .oracle import alpha_bruteforce, beta_bruteforce, commuting_tuple_count
from .ratfun import (
    PartialFraction,
    Polynomial,
    RationalFunction,
    eq,
    from_partial_fractions,
    scale_variable,
    series_coeffs,
    to_partial_fractions,
)

__version__ = "0.1.0"

__all__ = [
    "A_of",
    "AsymptoticReport",
    "B_of",
    "CentralizerSpectrum",
    "ConjugacyData",
    "Cyclic",
    "Dihedral",
    "DirectProduct",
    "Extraspecial",
    "FiniteGroup",
    "InvariantRecord",
    "PartialFraction",
    "PcPresentation",
    "Permutations",
    "Polynomial",
    "Quaternion",
    "RationalFunction",
    "Semidihedral",
    "Semidirect",
    "Stem",
    "Subgroup",
    "Table",
    "Trivial",
    "a_equivalent",
    "alpha_bruteforce",
    "alpha_n",
    "asymptotic_report",
    "b_equivalent",
    "beta_bruteforce",
    "build",
    "build_record",
    "center",
    "centralizer",
    "class_eq_from_alpha",
    "class_equation",
    "collect",
    "commuting_tuple_count",
    "conjugacy_classes",
    "derived_subgroup",
    "eq",
    "frobenius_check",
    "from_partial_fractions",
    "is_abelian",
    "is_ac_group",
    "max_abelian_order",
    "normalized_A",
    "normalized_B",
    "scale_variable",
    "semidirect",
    "series_coeffs",
    "subgroup_as_group",
    "to_partial_fractions",
    "verify_group_axioms",
]
