"""The counting pipeline: A and B generating functions and derived invariants.

For a finite group G, `A_of` is the generating function of simultaneous
conjugacy-class counts on tuples and `B_of` the one for commuting tuples.
A comes straight from the centralizer spectrum; B is computed by recursing
into centralizers of non-central class representatives, memoized on the
centralizer's element set inside the top-level group, so no isomorphism
testing is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralSolution, RecursionDepthExceeded
from .groups import (
    CentralizerSpectrum,
    FiniteGroup,
    Subgroup,
    center,
    centralizer,
    class_equation,
    conjugacy_classes,
    is_abelian,
    max_abelian_order,
    subgroup_as_group,
    table_digest,
)
from .ratfun import (
    ONE,
    PartialFraction,
    Polynomial,
    RationalFunction,
    scale_variable,
    series_coeffs,
    simple_term,
    to_partial_fractions,
)


def alpha_n(G: FiniteGroup, n: int) -> int:
    """Orbit count on n-tuples: (1/|G|) sum over g of |Z_G(g)|^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    spec = class_equation(G)
    total = sum(z * m**n for m, z in spec.items())
    assert total % G.order == 0
    return total // G.order


def A_of(G: FiniteGroup) -> RationalFunction:
    """A(t) = (1/|G|) sum over g of 1/(1 - |Z_G(g)| t)."""
    cached = G._cache.get("A")
    if cached is None:
        cached = A_partial_fractions(G).to_rational()
        G._cache["A"] = cached
    return cached


def A_partial_fractions(G: FiniteGroup) -> PartialFraction:
    """The decomposition sum of (z_m/|G|)/(1 - m t) over the spectrum."""
    spec = class_equation(G)
    return PartialFraction.of([(Fraction(z, G.order), m) for m, z in spec.items()])


def B_of(G: FiniteGroup) -> RationalFunction:
    """B(t) for commuting tuples, by centralizer recursion.

    (1 - |Z(H)| t) B_H = 1 + sum of t * B_{Z_H(g)} over non-central class
    representatives g of H, recursed on concrete centralizer subgroups and
    memoized per element set of the top-level group.  Centers grow strictly
    along the recursion, so it terminates.
    """
    cached = G._cache.get("B")
    if cached is not None:
        return cached
    memo: dict[frozenset[int], RationalFunction] = {}
    t_poly = RationalFunction(Polynomial.of(0, 1), Polynomial.of(1))

    def rec(elements: tuple[int, ...], depth: int) -> RationalFunction:
        if depth > G.order:
            # centers grow strictly along the recursion, so this cannot
            # happen for a genuine group; treat it as an internal error
            raise RecursionDepthExceeded(f"depth {depth} exceeds group order {G.order}")
        key = frozenset(elements)
        hit = memo.get(key)
        if hit is not None:
            return hit
        sub = Subgroup(G, elements)
        if is_abelian(sub):
            result = simple_term(1, len(elements))
            memo[key] = result
            return result
        H = subgroup_as_group(sub)
        cd = conjugacy_classes(H)
        z = sum(1 for s in cd.class_sizes if s == 1)
        acc = ONE
        for rep, size in zip(cd.reps, cd.class_sizes):
            if size == 1:
                continue
            local = centralizer(H, rep)
            ambient = tuple(sorted(elements[i] for i in local.elements))
            acc = acc + t_poly * rec(ambient, depth + 1)
        denom = RationalFunction.make(Polynomial.of(1, -z), Polynomial.of(1))
        result = acc / denom
        memo[key] = result
        return result

    result = rec(tuple(range(G.order)), 0)
    G._cache["B"] = result
    return result


def beta_n(G: FiniteGroup, n: int) -> int:
    value = series_coeffs(B_of(G), n + 1)[n]
    assert value.denominator == 1
    return int(value)


def k_of(G: FiniteGroup) -> int:
    """Number of conjugacy classes."""
    return conjugacy_classes(G).num_classes


def normalized_A(G: FiniteGroup) -> RationalFunction:
    """A(t/|G|): a family invariant under isoclinism."""
    return scale_variable(A_of(G), Fraction(1, G.order))


def normalized_B(G: FiniteGroup) -> RationalFunction:
    """B(t/|G|): a family invariant under isoclinism."""
    return scale_variable(B_of(G), Fraction(1, G.order))


def a_equivalent(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Equality of A functions; coincides with equality of class equations."""
    same_function = A_of(G) == A_of(H)
    same_spectrum = class_equation(G) == class_equation(H)
    assert same_function == same_spectrum
    return same_function


def b_equivalent(G: FiniteGroup, H: FiniteGroup) -> bool:
    return B_of(G) == B_of(H)


def class_eq_from_alpha(alphas, order: int | None = None) -> CentralizerSpectrum:
    """Recover the centralizer spectrum from alpha_1..alpha_N, N = |G|.

    The linear system sum_m z_m m^n = |G| alpha_n (n = 1..N) has a
    nonsingular Vandermonde matrix, so the spectrum is determined. A valid
    spectrum is supported on divisors of N, so we first solve the small
    divisor-supported system and verify the remaining equations; only if
    that fails do we solve the dense N x N system exactly.
    """
    alphas = [Fraction(a) for a in alphas]
    n_count = len(alphas)
    if order is None:
        order = n_count
    if n_count < order:
        raise ValueError(f"need alpha_1..alpha_{order}, got only {n_count} values")
    if order < 1:
        raise ValueError("order must be positive")
    targets = [a * order for a in alphas[:order]]

    supports = [m for m in range(1, order + 1) if order % m == 0]
    solution = _solve_moments(supports, targets[: len(supports)])
    if solution is not None and _verify_moments(supports, solution, targets):
        return _spectrum_from_solution(order, supports, solution)

    solution = _solve_moments(list(range(1, order + 1)), targets)
    if solution is None:
        raise NonIntegralSolution("moment system is singular (internal error)")
    return _spectrum_from_solution(order, list(range(1, order + 1)), solution)


def _solve_moments(ms: list[int], targets: list[Fraction]):
    """Exact Gaussian elimination for sum_m z_m m^n = targets[n-1], n=1..len(ms)."""
    d = len(ms)
    rows = [[Fraction(m) ** n for m in ms] + [targets[n - 1]] for n in range(1, d + 1)]
    for col in range(d):
        pivot = next((r for r in range(col, d) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(d):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][d] for i in range(d)]


def _verify_moments(ms: list[int], zs: list[Fraction], targets: list[Fraction]) -> bool:
    powers = [Fraction(m) for m in ms]
    for n in range(1, len(targets) + 1):
        if n > 1:
            powers = [p * m for p, m in zip(powers, ms)]
        if sum(z * p for z, p in zip(zs, powers)) != targets[n - 1]:
            return False
    return True


def _spectrum_from_solution(order: int, ms: list[int], zs: list[Fraction]) -> CentralizerSpectrum:
    counts: dict[int, int] = {}
    for m, z in zip(ms, zs):
        if z == 0:
            continue
        if z.denominator != 1:
            raise NonIntegralSolution(f"z_{m} = {z} is not an integer")
        if z < 0:
            raise NonIntegralSolution(f"z_{m} = {z} is negative")
        counts[m] = int(z)
    if sum(counts.values()) != order:
        raise NonIntegralSolution(
            f"spectrum sums to {sum(counts.values())}, expected {order}"
        )
    for m in counts:
        if order % m != 0:
            raise NonIntegralSolution(f"support {m} does not divide {order}")
    return CentralizerSpectrum(order, counts)


@dataclass(frozen=True)
class AsymptoticReport:
    """Growth data read off the partial fractions, plus empirical ratios."""

    dominant_pole_A: int
    leading_residue_A: Fraction
    dominant_pole_B: int
    growth_constant_B: Fraction | None
    empirical_ratio_B: tuple[Fraction, ...]


def asymptotic_report(G: FiniteGroup, horizon: int = 8) -> AsymptoticReport:
    """Dominant poles of A and B with the B-coefficient ratio prefix."""
    if horizon < 3:
        raise ValueError("horizon must be at least 3")
    a_pf = A_partial_fractions(G)
    pole_a = a_pf.dominant_pole
    res_a = a_pf.residue_at(pole_a)
    assert pole_a == G.order
    assert res_a * G.order == len(center(G))

    b_pf = to_partial_fractions(B_of(G), pole_divisor=G.order)
    pole_b = b_pf.dominant_pole
    assert pole_b == max_abelian_order(G)
    res_b = b_pf.residue_at(pole_b)
    growth = res_b if res_b > 0 else None

    coeffs = series_coeffs(B_of(G), horizon + 1)
    ratios = tuple(
        Fraction(coeffs[i + 1], coeffs[i]) for i in range(horizon) if coeffs[i] != 0
    )
    return AsymptoticReport(pole_a, res_a, pole_b, growth, ratios)


@dataclass(frozen=True)
class InvariantRecord:
    """Everything the catalog stores about one group."""

    group_id: str
    order: int
    center_order: int
    A: RationalFunction
    B: RationalFunction
    A_pf: PartialFraction
    B_pf: PartialFraction
    spectrum: CentralizerSpectrum
    max_abelian: int
    normalized_A: RationalFunction
    normalized_B: RationalFunction


def build_record(G: FiniteGroup) -> InvariantRecord:
    a = A_of(G)
    b = B_of(G)
    a_pf = A_partial_fractions(G)
    b_pf = to_partial_fractions(b, pole_divisor=G.order)
    record = InvariantRecord(
        group_id=table_digest(G),
        order=G.order,
        center_order=len(center(G)),
        A=a,
        B=b,
        A_pf=a_pf,
        B_pf=b_pf,
        spectrum=class_equation(G),
        max_abelian=max_abelian_order(G),
        normalized_A=normalized_A(G),
        normalized_B=normalized_B(G),
    )
    assert record.A_pf.dominant_pole == record.order
    assert record.B_pf.dominant_pole == record.max_abelian
    assert series_coeffs(a, 1)[0] == 1 and series_coeffs(b, 1)[0] == 1
    return record
