"""Brute-force orbit counts on tuple spaces, independent of the fast pipeline.

Everything here enumerates explicitly: tuples are materialized with a
mixed-radix encoding and orbits are merged with union-find. Each count is
cross-computed with a Burnside fixed-point sum and the two must agree.
The point is auditability, not speed; a state guard keeps runs desk-sized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .groups import FiniteGroup, Subgroup, centralizer, is_abelian, subgroup_as_group

DEFAULT_MAX_STATES = 10**7


@dataclass(frozen=True)
class OrbitCount:
    n: int
    count: int
    method: str  # "direct-union-find" or "burnside"


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.groups = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx
            self.groups -= 1


def generating_set(G: FiniteGroup) -> list[int]:
    """A small generating set, found greedily."""
    gens: list[int] = []
    reached = {0}
    for x in range(1, G.order):
        if x in reached:
            continue
        gens.append(x)
        frontier = [0]
        reached = {0}
        while frontier:
            y = frontier.pop()
            for g in gens:
                z = G.mul[y][g]
                if z not in reached:
                    reached.add(z)
                    frontier.append(z)
        if len(reached) == G.order:
            break
    return gens


def _guard(states: int, max_states: int) -> None:
    if states > max_states:
        raise TooLarge(f"{states} states exceed the guard of {max_states}")


def alpha_bruteforce(G: FiniteGroup, n: int, max_states: int = DEFAULT_MAX_STATES) -> OrbitCount:
    """Number of orbits of G acting on G^n by simultaneous conjugation."""
    order = G.order
    states = order**n
    _guard(states, max_states)
    mul = G.mul
    inv = G.inv

    uf = UnionFind(states)
    gens = generating_set(G)
    for g in gens:
        ginv = inv[g]
        conj = [mul[mul[ginv][x]][g] for x in range(order)]
        for code in range(states):
            rest = code
            image = 0
            base = 1
            for _ in range(n):
                image += conj[rest % order] * base
                rest //= order
                base *= order
            uf.union(code, image)
    direct = uf.groups

    burnside_total = sum(len(centralizer(G, g)) ** n for g in range(order))
    assert burnside_total % order == 0
    burnside = burnside_total // order
    assert direct == burnside, f"union-find {direct} != burnside {burnside}"
    return OrbitCount(n, direct, "direct-union-find")


def _commuting_tuples(G: FiniteGroup, n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    mul = G.mul

    def extend(prefix: tuple[int, ...], allowed: list[int], k: int) -> None:
        if k == 0:
            out.append(prefix)
            return
        for x in allowed:
            row = mul[x]
            narrowed = [y for y in allowed if row[y] == mul[y][x]]
            extend(prefix + (x,), narrowed, k - 1)

    extend((), list(range(G.order)), n)
    return out


def commuting_tuple_count(G: FiniteGroup, n: int, max_states: int = DEFAULT_MAX_STATES) -> int:
    """|G^(n)|: pairwise-commuting n-tuples, counted by centralizer DFS."""
    _guard(G.order**n, max_states)
    mul = G.mul
    memo: dict[tuple[frozenset[int], int], int] = {}

    def count(allowed: tuple[int, ...], k: int) -> int:
        if k == 0:
            return 1
        key = (frozenset(allowed), k)
        got = memo.get(key)
        if got is not None:
            return got
        total = 0
        for x in allowed:
            row = mul[x]
            narrowed = tuple(y for y in allowed if row[y] == mul[y][x])
            total += count(narrowed, k - 1)
        memo[key] = total
        return total

    return count(tuple(range(G.order)), n)


def beta_bruteforce(G: FiniteGroup, n: int, max_states: int = DEFAULT_MAX_STATES) -> OrbitCount:
    """Number of orbits of G on pairwise-commuting n-tuples."""
    order = G.order
    _guard(order**n, max_states)
    mul = G.mul
    inv = G.inv

    tuples = _commuting_tuples(G, n)
    index = {t: i for i, t in enumerate(tuples)}
    uf = UnionFind(len(tuples))
    for g in generating_set(G):
        ginv = inv[g]
        conj = [mul[mul[ginv][x]][g] for x in range(order)]
        for t, i in index.items():
            image = tuple(conj[x] for x in t)
            uf.union(i, index[image])
    direct = uf.groups

    # Burnside: tuples fixed by g are the commuting n-tuples of Z_G(g).
    total = 0
    seen: dict[tuple[int, ...], int] = {}
    for g in range(order):
        C = centralizer(G, g)
        got = seen.get(C.elements)
        if got is None:
            H = subgroup_as_group(C)
            got = commuting_tuple_count(H, n, max_states)
            seen[C.elements] = got
        total += got
    assert total % order == 0
    burnside = total // order
    assert direct == burnside, f"union-find {direct} != burnside {burnside}"
    return OrbitCount(n, direct, "direct-union-find")


def max_abelian_bruteforce(G: FiniteGroup) -> int:
    """Maximum order of an abelian subgroup, by BFS over commuting generator sets."""
    from .groups import subgroup_closure

    mul = G.mul
    best = 1
    seen: set[tuple[int, ...]] = set()

    def extend(sub: Subgroup) -> None:
        nonlocal best
        if sub.elements in seen:
            return
        seen.add(sub.elements)
        best = max(best, len(sub))
        members = set(sub.elements)
        # candidates commuting with everything so far keep the closure abelian
        for x in range(G.order):
            if x in members:
                continue
            if all(mul[x][y] == mul[y][x] for y in sub.elements):
                bigger = subgroup_closure(G, set(sub.elements) | {x})
                if is_abelian(bigger):
                    extend(bigger)

    extend(Subgroup(G, (0,)))
    return best
