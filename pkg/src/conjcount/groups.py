"""Finite-group kernel: Cayley-table groups, subgroups, centralizers, conjugacy data.

Elements are integers 0..order-1 and the identity is always element 0;
builders relabel to keep that convention. Groups are immutable after
construction, so every function here is a pure function of its inputs and
results may be cached on the instance.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import NoIdentity, NoInverse, NotAssociative, NotClosed

EXHAUSTIVE_ASSOC_LIMIT = 512
ASSOC_SAMPLE_COUNT = 100_000


class FiniteGroup:
    """A finite group given by its full Cayley table.

    `mul[a][b]` is the product ab, `inv[a]` the inverse of a, and element 0
    the identity. Construct through :func:`verify_group_axioms` or a builder
    from :mod:`conjcount.build`, never by hand-assembling unchecked tables.
    """

    __slots__ = ("order", "mul", "inv", "labels", "_cache")

    def __init__(self, mul, inv, labels=None):
        self.order = len(mul)
        self.mul = mul
        self.inv = inv
        self.labels = labels
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul == other.mul

    def __hash__(self):
        return hash(self.mul)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def conjugate(self, g: int, x: int) -> int:
        """g^-1 x g."""
        return self.mul[self.mul[self.inv[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y."""
        return self.mul[self.mul[self.mul[self.inv[x]][self.inv[y]]][x]][y]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[g], -k)
        acc = 0
        for _ in range(k):
            acc = self.mul[acc][g]
        return acc

    def element_order(self, g: int) -> int:
        n = 1
        x = g
        while x != 0:
            x = self.mul[x][g]
            n += 1
        return n

    def mul_array(self) -> np.ndarray:
        arr = self._cache.get("mul_array")
        if arr is None:
            arr = np.array(self.mul, dtype=np.int32)
            arr.setflags(write=False)
            self._cache["mul_array"] = arr
        return arr


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted tuple of ambient element indices."""

    ambient: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        object.__setattr__(self, "elements", elems)
        G = self.ambient
        if not elems or elems[0] != 0:
            raise ValueError("subgroup must contain the identity")
        members = set(elems)
        for x in elems:
            if G.inv[x] not in members:
                raise ValueError(f"subgroup not closed under inversion at {x}")
            row = G.mul[x]
            for y in elems:
                if row[y] not in members:
                    raise ValueError(f"subgroup not closed under product at ({x},{y})")
        # Lagrange: a closed subset of a finite group has order dividing |G|.
        assert G.order % len(elems) == 0

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes of a group: per-element class ids plus class data."""

    order: int
    class_of: tuple[int, ...]
    reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    centralizer_orders: tuple[int, ...]

    def __post_init__(self):
        assert sum(self.class_sizes) == self.order
        for size, cent in zip(self.class_sizes, self.centralizer_orders):
            assert size * cent == self.order

    @property
    def num_classes(self) -> int:
        return len(self.reps)


@dataclass(frozen=True)
class CentralizerSpectrum:
    """The map m -> number of elements whose centralizer has order m."""

    order: int
    counts: dict[int, int] = field(compare=True)

    def __post_init__(self):
        assert sum(self.counts.values()) == self.order
        for m, z in self.counts.items():
            assert z > 0
            assert self.order % m == 0, f"centralizer order {m} does not divide {self.order}"

    def items(self):
        return sorted(self.counts.items())

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)


def verify_group_axioms(table, labels=None, force_exhaustive: bool = False) -> FiniteGroup:
    """Validate a multiplication table and return the group it defines.

    The identity is located and relabeled to index 0. Associativity is
    checked exhaustively up to order `EXHAUSTIVE_ASSOC_LIMIT` and by seeded
    random sampling above that, unless `force_exhaustive` is set.
    """
    n = len(table)
    if n == 0:
        raise NoIdentity("empty table")
    rows = []
    for i, row in enumerate(table):
        row = [int(x) for x in row]
        if len(row) != n:
            raise NotClosed(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if x < 0 or x >= n:
                raise NotClosed(f"entry at ({i},{j}) is {x}, outside 0..{n - 1}")
        rows.append(row)

    arr = np.array(rows, dtype=np.int64)
    ref = np.arange(n)
    for i in range(n):
        if not (np.array_equal(np.sort(arr[i]), ref) and np.array_equal(np.sort(arr[:, i]), ref)):
            raise NotClosed(f"table is not a Latin square at row/column {i}")

    identity = None
    for e in range(n):
        if all(rows[e][x] == x for x in range(n)) and all(rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    if identity != 0:
        perm = list(range(n))
        perm[0], perm[identity] = identity, 0
        # perm is an involution, so it is its own inverse relabeling
        rows = [[perm[rows[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]
        arr = np.array(rows, dtype=np.int64)
        if labels is not None:
            labels = [labels[perm[i]] for i in range(n)]

    inv = [-1] * n
    for x in range(n):
        for y in range(n):
            if rows[x][y] == 0 and rows[y][x] == 0:
                inv[x] = y
                break
        if inv[x] < 0:
            raise NoInverse(f"element {x} has no two-sided inverse")

    _check_associativity(arr, force_exhaustive)

    mul = tuple(tuple(row) for row in rows)
    return FiniteGroup(mul, tuple(inv), tuple(labels) if labels is not None else None)


def _check_associativity(arr: np.ndarray, force_exhaustive: bool) -> None:
    n = len(arr)
    if n <= EXHAUSTIVE_ASSOC_LIMIT or force_exhaustive:
        for a in range(n):
            left = arr[arr[a], :]
            right = arr[a][arr]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise NotAssociative(f"(a*b)*c != a*(b*c) at (a,b,c)=({a},{int(b)},{int(c)})")
    else:
        rng = np.random.default_rng(0)
        a = rng.integers(0, n, ASSOC_SAMPLE_COUNT)
        b = rng.integers(0, n, ASSOC_SAMPLE_COUNT)
        c = rng.integers(0, n, ASSOC_SAMPLE_COUNT)
        left = arr[arr[a, b], c]
        right = arr[a, arr[b, c]]
        bad = np.nonzero(left != right)[0]
        if bad.size:
            k = int(bad[0])
            raise NotAssociative(
                f"(a*b)*c != a*(b*c) at (a,b,c)=({int(a[k])},{int(b[k])},{int(c[k])})"
            )


def table_digest(G: FiniteGroup) -> str:
    """Stable hex digest of the Cayley table, used as a group id."""
    h = hashlib.sha256()
    h.update(f"cayley-v1:{G.order}:".encode())
    h.update(",".join(str(x) for row in G.mul for x in row).encode())
    return h.hexdigest()


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    """The subgroup of all elements commuting with g."""
    row = G.mul[g]
    elems = tuple(x for x in range(G.order) if G.mul[x][g] == row[x])
    return Subgroup(G, elems)


def center(G: FiniteGroup) -> Subgroup:
    cached = G._cache.get("center")
    if cached is None:
        cd = conjugacy_classes(G)
        elems = tuple(sorted(r for r, s in zip(cd.reps, cd.class_sizes) if s == 1))
        cached = Subgroup(G, elems)
        G._cache["center"] = cached
    return cached


def conjugacy_classes(G: FiniteGroup) -> ConjugacyData:
    """Orbit partition of G under conjugation, by direct orbit sweep."""
    cached = G._cache.get("conjugacy")
    if cached is not None:
        return cached
    n = G.order
    mul = G.mul
    inv = G.inv
    class_of = [-1] * n
    reps = []
    sizes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cid = len(reps)
        orbit = {mul[mul[inv[g]][x]][g] for g in range(n)}
        for y in orbit:
            class_of[y] = cid
        reps.append(x)
        sizes.append(len(orbit))
    cents = tuple(n // s for s in sizes)
    data = ConjugacyData(n, tuple(class_of), tuple(reps), tuple(sizes), cents)
    G._cache["conjugacy"] = data
    return data


def class_equation(G: FiniteGroup) -> CentralizerSpectrum:
    """The spectrum z_m = number of elements with centralizer of order m."""
    cd = conjugacy_classes(G)
    counts: dict[int, int] = {}
    for size, cent in zip(cd.class_sizes, cd.centralizer_orders):
        counts[cent] = counts.get(cent, 0) + size
    return CentralizerSpectrum(G.order, counts)


def subgroup_as_group(S: Subgroup) -> FiniteGroup:
    """Re-index a subgroup as a standalone group on 0..|S|-1.

    Element i of the result is S.elements[i]; the ambient identity sorts
    first, so no relabeling is needed.
    """
    G = S.ambient
    elems = S.elements
    index = {x: i for i, x in enumerate(elems)}
    mul = tuple(tuple(index[G.mul[x][y]] for y in elems) for x in elems)
    inv = tuple(index[G.inv[x]] for x in elems)
    labels = tuple(G.labels[x] for x in elems) if G.labels is not None else None
    return FiniteGroup(mul, inv, labels)


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def subgroup_closure(G: FiniteGroup, gens) -> Subgroup:
    """The subgroup generated by the given elements."""
    # In a finite group, inverses are positive powers, so closing under
    # products by the generators alone already yields the subgroup.
    members = {0}
    frontier = [0]
    gens = sorted(set(gens) | {0})
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (G.mul[x][g], G.mul[g][x]):
                if y not in members:
                    members.add(y)
                    frontier.append(y)
    return Subgroup(G, tuple(sorted(members)))


def is_abelian(obj) -> bool:
    """Whether a FiniteGroup or Subgroup is commutative."""
    if isinstance(obj, Subgroup):
        G = obj.ambient
        elems = obj.elements
    else:
        G = obj
        cached = G._cache.get("abelian")
        if cached is not None:
            return cached
        elems = range(G.order)
    mul = G.mul
    result = True
    for x in elems:
        row = mul[x]
        for y in elems:
            if row[y] != mul[y][x]:
                result = False
                break
        if not result:
            break
    if not isinstance(obj, Subgroup):
        G._cache["abelian"] = result
    return result


def is_ac_group(G: FiniteGroup) -> bool:
    """Whether every non-central element has an abelian centralizer."""
    central = set(center(G).elements)
    seen: set[tuple[int, ...]] = set()
    for g in range(G.order):
        if g in central:
            continue
        C = centralizer(G, g)
        if C.elements in seen:
            continue
        seen.add(C.elements)
        if not is_abelian(C):
            return False
    return True


def max_abelian_order(G: FiniteGroup) -> int:
    """Maximal cardinality of an abelian subgroup.

    Computed by closing the family of centralizers under pairwise
    intersection; every maximal abelian subgroup is an intersection of
    centralizers, so the abelian members of the closure realize the maximum.
    """
    cached = G._cache.get("max_abelian")
    if cached is not None:
        return cached
    if is_abelian(G):
        G._cache["max_abelian"] = G.order
        return G.order
    cents = {frozenset(centralizer(G, g).elements) for g in range(G.order)}
    closure = set(cents)
    frontier = set(cents)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in cents:
                c = a & b
                if c not in closure:
                    fresh.add(c)
        closure |= fresh
        frontier = fresh
    best = 1
    for elems in closure:
        if len(elems) <= best:
            continue
        if is_abelian(Subgroup(G, tuple(elems))):
            best = len(elems)
    G._cache["max_abelian"] = best
    return best


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """The subgroup generated by all commutators."""
    comms = {G.commutator(x, y) for x in range(G.order) for y in range(G.order)}
    return subgroup_closure(G, comms)
