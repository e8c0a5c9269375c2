"""Group builders: serializable recipes to validated Cayley-table groups.

Every builder funnels its table through :func:`verify_group_axioms`, so a
returned group always satisfies the axioms. Polycyclic presentations are
realized by collection from the left on exponent-vector normal forms;
consistency is certified a posteriori by the order count and the axiom
check rather than by a confluence analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import (
    InconsistentPresentation,
    NotAHomomorphism,
    NotAutomorphism,
    ParameterOutOfRange,
)
from .groups import FiniteGroup, Subgroup, verify_group_axioms

_COLLECT_STEP_LIMIT = 10_000


# ---------------------------------------------------------------------------
# recipes

@dataclass(frozen=True)
class Trivial:
    kind = "trivial"


@dataclass(frozen=True)
class Cyclic:
    order: int
    kind = "cyclic"


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple["GroupSpec", ...]
    kind = "direct_product"


@dataclass(frozen=True)
class Dihedral:
    order: int  # 2n
    kind = "dihedral"


@dataclass(frozen=True)
class Quaternion:
    order: int  # 2^m, m >= 3
    kind = "quaternion"


@dataclass(frozen=True)
class Semidihedral:
    order: int  # 2^m, m >= 4
    kind = "semidihedral"


@dataclass(frozen=True)
class Extraspecial:
    p: int
    order: int  # p^(2n+1)
    variant: str  # "odd-exponent-p" for odd p, "two-type" for p = 2
    kind = "extraspecial"


@dataclass(frozen=True)
class Permutations:
    degree: int
    generators: tuple[tuple[int, ...], ...]
    kind = "permutations"


@dataclass(frozen=True)
class Table:
    table: tuple[tuple[int, ...], ...]
    kind = "table"


@dataclass(frozen=True)
class PcPresentation:
    """Power-conjugate data: orders r_i, power words g_i^{r_i}, conjugates g_j^{g_i}.

    Words are sparse exponent vectors in normal form: tuples of (generator,
    exponent) with strictly increasing generator indices. Power words use
    generators > i, conjugate words generators >= j for i < j.
    """

    orders: tuple[int, ...]
    powers: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()
    conjugates: tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...] = ()
    expected_order: int | None = None
    kind = "pc"

    def __post_init__(self):
        n = len(self.orders)
        for r in self.orders:
            if r < 2:
                raise ValueError("relative orders must be at least 2")
        for i, word in self.powers:
            _check_word(word, n, minimum=i + 1)
        seen = set()
        for i, j, word in self.conjugates:
            if not 0 <= i < j < n:
                raise ValueError(f"conjugate indices ({i},{j}) out of order")
            if (i, j) in seen:
                raise ValueError(f"duplicate conjugate relation ({i},{j})")
            seen.add((i, j))
            _check_word(word, n, minimum=j)

    def predicted_order(self) -> int:
        total = 1
        for r in self.orders:
            total *= r
        return total

    def power_word(self, i: int) -> tuple[tuple[int, int], ...]:
        for k, word in self.powers:
            if k == i:
                return word
        return ()

    def conjugate_word(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        for a, b, word in self.conjugates:
            if (a, b) == (i, j):
                return word
        return ((j, 1),)


def _check_word(word, n: int, minimum: int) -> None:
    last = -1
    for g, e in word:
        if not minimum <= g < n:
            raise ValueError(f"word references generator {g}, allowed >= {minimum}")
        if g <= last:
            raise ValueError("word generators must be strictly increasing")
        if e < 1:
            raise ValueError("word exponents must be positive")
        last = g


@dataclass(frozen=True)
class Semidirect:
    kernel: "GroupSpec"
    complement: "GroupSpec"
    action_generators: tuple[int, ...]  # complement element indices
    action_images: tuple[tuple[int, ...], ...]  # permutations of the kernel
    kind = "semidirect"


@dataclass(frozen=True)
class Stem:
    family: str  # Phi2..Phi10 or Gamma2..Gamma8
    p: int
    kind = "stem"


GroupSpec = Union[
    Trivial,
    Cyclic,
    DirectProduct,
    Dihedral,
    Quaternion,
    Semidihedral,
    Extraspecial,
    Permutations,
    Table,
    PcPresentation,
    Semidirect,
    Stem,
]


# ---------------------------------------------------------------------------
# dispatcher

def build(spec: GroupSpec) -> FiniteGroup:
    """Build and validate the group a recipe describes."""
    if isinstance(spec, Trivial):
        return verify_group_axioms([[0]])
    if isinstance(spec, Cyclic):
        return cyclic(spec.order)
    if isinstance(spec, DirectProduct):
        groups = [build(f) for f in spec.factors]
        if not groups:
            return verify_group_axioms([[0]])
        acc = groups[0]
        for nxt in groups[1:]:
            acc = direct_product(acc, nxt)
        return acc
    if isinstance(spec, Dihedral):
        return dihedral(spec.order)
    if isinstance(spec, Quaternion):
        return quaternion(spec.order)
    if isinstance(spec, Semidihedral):
        return semidihedral(spec.order)
    if isinstance(spec, Extraspecial):
        return extraspecial(spec.p, spec.order, spec.variant)
    if isinstance(spec, Permutations):
        return permutation_group(spec.degree, spec.generators)
    if isinstance(spec, Table):
        return verify_group_axioms(spec.table)
    if isinstance(spec, PcPresentation):
        return collect(spec)
    if isinstance(spec, Semidirect):
        N = build(spec.kernel)
        H = build(spec.complement)
        action = extend_action(N, H, spec.action_generators, spec.action_images)
        return semidirect(N, H, action)
    if isinstance(spec, Stem):
        from .presets import stem_group

        return stem_group(spec.family, spec.p)
    raise TypeError(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------
# elementary builders

def cyclic(k: int) -> FiniteGroup:
    if k < 1:
        raise ParameterOutOfRange("cyclic order must be positive")
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    return verify_group_axioms(table)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """Product on pairs (a, b) with index a*|B| + b."""
    nb = B.order
    amul = np.array(A.mul, dtype=np.int64)
    bmul = np.array(B.mul, dtype=np.int64)
    total = A.order * nb
    idx = np.arange(total)
    a_part, b_part = idx // nb, idx % nb
    table = (
        amul[np.ix_(a_part, a_part)] * nb + bmul[np.ix_(b_part, b_part)]
    )
    return verify_group_axioms(table.tolist())


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order; index a + n*b for r^a s^b."""
    if order < 2 or order % 2 != 0:
        raise ParameterOutOfRange(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2

    def mul(x: int, y: int) -> int:
        a1, b1 = x % n, x // n
        a2, b2 = y % n, y // n
        a = (a1 + a2) % n if b1 == 0 else (a1 - a2) % n
        return a + n * ((b1 + b2) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    return verify_group_axioms(table)


def quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion group of order 2^m, m >= 3; index i + (order/2)*j for a^i b^j."""
    m = order.bit_length() - 1
    if order != 1 << m or m < 3:
        raise ParameterOutOfRange(f"quaternion order must be 2^m with m >= 3, got {order}")
    half = order // 2

    def mul(x: int, y: int) -> int:
        i1, j1 = x % half, x // half
        i2, j2 = y % half, y // half
        i = (i1 + i2) % half if j1 == 0 else (i1 - i2) % half
        if j1 and j2:
            i = (i + half // 2) % half
        return i + half * ((j1 + j2) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    return verify_group_axioms(table)


def semidihedral(order: int) -> FiniteGroup:
    """Semidihedral group of order 2^m, m >= 4; b a b = a^(2^(m-2) - 1)."""
    m = order.bit_length() - 1
    if order != 1 << m or m < 4:
        raise ParameterOutOfRange(f"semidihedral order must be 2^m with m >= 4, got {order}")
    half = order // 2
    twist = half // 2 - 1

    def mul(x: int, y: int) -> int:
        i1, j1 = x % half, x // half
        i2, j2 = y % half, y // half
        i = (i1 + i2) % half if j1 == 0 else (i1 + twist * i2) % half
        return i + half * ((j1 + j2) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    return verify_group_axioms(table)


def extraspecial(p: int, order: int, variant: str) -> FiniteGroup:
    """Extraspecial group of order p^(2n+1).

    "odd-exponent-p" (odd p): exponent-p group on coordinates (x, y, z) with
    (x,y,z)(x',y',z') = (x+x', y+y', z+z'+y.x').  "two-type" (p = 2): the
    central product of dihedral factors, coordinates as above plus a carry
    z-term x.x' because the x-generators square to the central involution.
    """
    if not _is_prime(p):
        raise ParameterOutOfRange(f"{p} is not prime")
    n = 0
    total = p
    while total < order:
        total *= p * p
        n += 1
    if total != order or n < 1:
        raise ParameterOutOfRange(f"order {order} is not p^(2n+1) for p={p}")
    if variant == "odd-exponent-p":
        if p == 2:
            raise ParameterOutOfRange("odd-exponent-p variant needs an odd prime")
    elif variant == "two-type":
        if p != 2:
            raise ParameterOutOfRange("two-type variant is the p=2 family")
    else:
        raise ParameterOutOfRange(f"unknown extraspecial variant {variant!r}")

    dims = 2 * n + 1

    def decode(code: int) -> tuple[int, ...]:
        out = []
        for _ in range(dims):
            out.append(code % p)
            code //= p
        return tuple(out)  # (z, y_n..y_1, x_n..x_1) little-endian

    def mul(xc: int, yc: int) -> int:
        u = decode(xc)
        v = decode(yc)
        z1, ys1, xs1 = u[0], u[1 : n + 1], u[n + 1 :]
        z2, ys2, xs2 = v[0], v[1 : n + 1], v[n + 1 :]
        z = z1 + z2 + sum(a * b for a, b in zip(ys1, xs2))
        if variant == "two-type":
            z += sum(a * b for a, b in zip(xs1, xs2))
        z %= p
        parts = [z] + [(a + b) % p for a, b in zip(ys1, ys2)] + [
            (a + b) % p for a, b in zip(xs1, xs2)
        ]
        code = 0
        base = 1
        for value in parts:
            code += value * base
            base *= p
        return code

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    return verify_group_axioms(table)


def permutation_group(degree: int, generators) -> FiniteGroup:
    """Close permutation generators into a group; elements in BFS order."""
    if degree < 1 or degree > 64:
        raise ParameterOutOfRange(f"permutation degree must be 1..64, got {degree}")
    gens = []
    for perm in generators:
        perm = tuple(int(x) for x in perm)
        if sorted(perm) != list(range(degree)):
            raise ParameterOutOfRange(f"{perm} is not a permutation of 0..{degree - 1}")
        gens.append(perm)
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        current = frontier.pop(0)
        for g in gens:
            composed = tuple(current[g[i]] for i in range(degree))
            if composed not in index:
                index[composed] = len(elements)
                elements.append(composed)
                frontier.append(composed)
    order = len(elements)
    table = [
        [index[tuple(a[b[i]] for i in range(degree))] for b in elements] for a in elements
    ]
    labels = tuple(str(e) for e in elements)
    return verify_group_axioms(table, labels=labels)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polycyclic collection

def _letters(word) -> list[int]:
    out: list[int] = []
    for g, e in word:
        out.extend([g] * e)
    return out


def _collect_letters(pc: PcPresentation, letters: list[int]) -> tuple[int, ...]:
    """Collection from the left: rewrite a letter word to normal form."""
    orders = pc.orders
    word = list(letters)
    for _ in range(_COLLECT_STEP_LIMIT):
        # leftmost inversion g_j g_i with j > i  ->  g_i (g_j ^ g_i)
        idx = None
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                idx = k
                break
        if idx is not None:
            j, i = word[idx], word[idx + 1]
            word[idx : idx + 2] = [i] + _letters(pc.conjugate_word(i, j))
            continue
        # leftmost exponent overflow g_i^{r_i} -> power word
        done = True
        k = 0
        while k < len(word):
            g = word[k]
            run = 1
            while k + run < len(word) and word[k + run] == g:
                run += 1
            if run >= orders[g]:
                word[k : k + orders[g]] = _letters(pc.power_word(g))
                done = False
                break
            k += run
        if done:
            vec = [0] * len(orders)
            for g in word:
                vec[g] += 1
            return tuple(vec)
    raise InconsistentPresentation("collection did not terminate")


def collect(pc: PcPresentation) -> FiniteGroup:
    """Multiply exponent-vector normal forms by collection; validate the table.

    The element set is all exponent vectors, so the order is the product of
    the relative orders; a presentation whose collected table fails the
    group axioms (or misses a declared expected order) is inconsistent.
    """
    n = len(pc.orders)
    total = pc.predicted_order()
    if pc.expected_order is not None and pc.expected_order != total:
        raise InconsistentPresentation(
            f"relative orders predict {total}, expected order {pc.expected_order}"
        )

    strides = [0] * n
    acc = 1
    for i in range(n - 1, -1, -1):
        strides[i] = acc
        acc *= pc.orders[i]

    def encode(vec) -> int:
        return sum(e * strides[i] for i, e in enumerate(vec))

    vectors = []

    def fill(prefix: list[int], i: int) -> None:
        if i == n:
            vectors.append(tuple(prefix))
            return
        for e in range(pc.orders[i]):
            fill(prefix + [e], i + 1)

    fill([], 0)
    assert encode(vectors[0]) == 0

    # right-multiplication-by-generator permutations, then compose per column
    rho = np.empty((n, total), dtype=np.int64)
    for g in range(n):
        for code, vec in enumerate(vectors):
            word = _letters([(i, e) for i, e in enumerate(vec) if e]) + [g]
            rho[g][code] = encode(_collect_letters(pc, word))

    table = np.empty((total, total), dtype=np.int64)
    column = np.arange(total)
    for code, vec in enumerate(vectors):
        col = column
        for i, e in enumerate(vec):
            for _ in range(e):
                col = rho[i][col]
        table[:, code] = col

    try:
        group = verify_group_axioms(table.tolist())
    except Exception as exc:  # noqa: BLE001 - reclassified with context
        raise InconsistentPresentation(f"collected table is not a group: {exc}") from exc
    return group


# ---------------------------------------------------------------------------
# semidirect products

def extend_action(N: FiniteGroup, H: FiniteGroup, gens, images) -> list[tuple[int, ...]]:
    """Extend generator automorphisms to all of H, or fail loudly."""
    if len(gens) != len(images):
        raise ValueError("one image per generator required")
    action: dict[int, tuple[int, ...]] = {0: tuple(range(N.order))}
    gen_map = {}
    for g, img in zip(gens, images):
        img = tuple(int(x) for x in img)
        if sorted(img) != list(range(N.order)):
            raise NotAutomorphism(f"image for generator {g} is not a bijection")
        gen_map[int(g)] = img
    frontier = [0]
    while frontier:
        h = frontier.pop(0)
        phi_h = action[h]
        for g, phi_g in gen_map.items():
            h2 = H.mul[h][g]
            composed = tuple(phi_h[phi_g[x]] for x in range(N.order))
            seen = action.get(h2)
            if seen is None:
                action[h2] = composed
                frontier.append(h2)
            elif seen != composed:
                raise NotAHomomorphism(
                    f"generator images are inconsistent at complement element {h2}"
                )
    if len(action) != H.order:
        raise ValueError("action generators do not generate the complement")
    return [action[h] for h in range(H.order)]


def semidirect(N: FiniteGroup, H: FiniteGroup, action) -> FiniteGroup:
    """Twisted product on pairs (n, h) with index n*|H| + h.

    `action[h]` must be an automorphism of N for every h, and h -> action[h]
    a homomorphism; both are checked exhaustively.
    """
    if len(action) != H.order:
        raise ValueError("need one kernel map per complement element")
    act = np.array([list(p) for p in action], dtype=np.int64)
    nmul = np.array(N.mul, dtype=np.int64)
    hmul = np.array(H.mul, dtype=np.int64)

    for h in range(H.order):
        perm = act[h]
        if sorted(perm.tolist()) != list(range(N.order)):
            raise NotAutomorphism(f"action of {h} is not a bijection of the kernel")
        if not np.array_equal(perm[nmul], nmul[np.ix_(perm, perm)]):
            x, y = np.argwhere(perm[nmul] != nmul[np.ix_(perm, perm)])[0]
            raise NotAutomorphism(
                f"action of {h} breaks multiplication at kernel pair ({int(x)},{int(y)})"
            )
    for h1 in range(H.order):
        for h2 in range(H.order):
            if not np.array_equal(act[H.mul[h1][h2]], act[h1][act[h2]]):
                raise NotAHomomorphism(f"action is not multiplicative at ({h1},{h2})")

    nh = H.order
    total = N.order * nh
    idx = np.arange(total)
    n_part, h_part = idx // nh, idx % nh
    twisted = act[h_part[:, None], n_part[None, :]]
    table = nmul[n_part[:, None], twisted] * nh + hmul[np.ix_(h_part, h_part)]
    return verify_group_axioms(table.tolist())


# ---------------------------------------------------------------------------
# Frobenius structure

@dataclass(frozen=True)
class FrobeniusResult:
    is_frobenius: bool
    kernel: Subgroup | None = None
    witness: int | None = None  # g with H meeting H^g nontrivially


def frobenius_check(G: FiniteGroup, H: Subgroup) -> FrobeniusResult:
    """Decide whether H is malnormal, and if so return the Frobenius kernel."""
    if len(H) in (1, G.order):
        raise ValueError("complement must be a proper nontrivial subgroup")
    base = set(H.elements)
    covered = set(base)
    for g in range(G.order):
        if g in base:
            continue
        conj = {G.conjugate(g, h) for h in H.elements}
        if len(conj & base) > 1:
            return FrobeniusResult(False, witness=g)
        covered |= conj
    kernel_elems = sorted((set(range(G.order)) - covered) | {0})
    assert len(kernel_elems) * len(H) == G.order
    kernel = Subgroup(G, tuple(kernel_elems))  # closure is re-verified here
    return FrobeniusResult(True, kernel=kernel)
