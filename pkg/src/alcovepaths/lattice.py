"""
Root data for the simple types A-G.

Weights, roots and coroots are integer coordinate tuples in the
fundamental-weight, simple-root and simple-coroot bases respectively,
so the pairing of a coroot with a weight is a plain dot product.
The invariant form is normalized so that short roots have squared
length 2; coroots are 2*alpha/(alpha,alpha) in that normalization.

>>> d = build_datum("A", 2)
>>> d.cartan
((2, -1), (-1, 2))
>>> sorted(d.pos_roots)
[(0, 1), (1, 0), (1, 1)]
>>> d.highest_dual_root()
(1, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NewType

__all__ = [
    "Weight", "Root", "Coroot", "RootDatum", "build_datum", "add", "sub", "neg",
]

# coordinate vectors; the basis depends on the type alias
Weight = NewType("Weight", tuple)
Root = NewType("Root", tuple)
Coroot = NewType("Coroot", tuple)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b, strict=True))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b, strict=True))


def neg(a):
    return tuple(-x for x in a)


def _cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Bourbaki-numbered Cartan matrix ``cartan[i][j] = <alpha_i^vee, alpha_j>``.

    In type G2 the numbering is fixed so that alpha_1 is the long simple
    root (the highest coroot is then 3*alpha_1^vee + 2*alpha_2^vee).
    """
    n = rank
    ok = (
        (family == "A" and n >= 1)
        or (family == "B" and n >= 2)
        or (family == "C" and n >= 2)
        or (family == "D" and n >= 4)
        or (family == "E" and n in (6, 7, 8))
        or (family == "F" and n == 4)
        or (family == "G" and n == 2)
    )
    if not ok:
        raise ValueError(f"invalid simple type {family}{n}")

    c = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B":
            bond(n - 2, n - 1, -1, -2)
        if family == "C":
            bond(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
    elif family == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
        for a, b in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            bond(a, b)
        for i in range(5, n - 1):
            bond(i, i + 1)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)
    return c


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Positive integers d with d_i * cartan[i][j] symmetric, min(d) = 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if cartan[i][j] != 0 and d[j] is None:
                # d_j = d_i * c_ij / c_ji
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    lcm = 1
    for x in d:
        lcm *= x.denominator
    ints = [x * lcm for x in d]
    g = min(ints)
    assert all(x % g == 0 for x in ints)
    return tuple(int(x / g) for x in ints)


@dataclass(frozen=True)
class RootDatum:
    """Immutable root datum of a simple type."""
    family: str
    rank: int
    cartan: tuple            # rows <alpha_i^vee, alpha_j>
    d: tuple                 # symmetrizer, d_i = (alpha_i, alpha_i)/2
    pos_roots: tuple         # Root coordinates, deterministic order
    pos_coroots: tuple       # Coroot of pos_roots[k] is pos_coroots[k]
    _coroot_set: frozenset = field(repr=False)
    _root_by_coroot: dict = field(repr=False)
    _coroot_by_root: dict = field(repr=False)
    two_rho: tuple = field(repr=False)   # Weight, sum of all positive roots

    def check_rank(self, v) -> None:
        if len(v) != self.rank:
            raise ValueError(f"expected a length-{self.rank} vector, got {v!r}")

    def pair(self, c: Coroot, w: Weight) -> int:
        """<c, w> for a coroot c and a weight w."""
        self.check_rank(c)
        self.check_rank(w)
        return sum(ci * wi for ci, wi in zip(c, w))

    def two_rho_pair(self, c: Coroot) -> int:
        """<2*rho, c> where 2*rho is the sum of the positive roots."""
        return self.pair(c, self.two_rho)

    def root_to_weight(self, r: Root) -> Weight:
        """Coordinates of a root vector in the fundamental-weight basis."""
        self.check_rank(r)
        return tuple(
            sum(self.cartan[i][j] * r[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def is_coroot(self, c) -> bool:
        return tuple(c) in self._coroot_set or neg(c) in self._coroot_set

    def is_pos_coroot(self, c) -> bool:
        return tuple(c) in self._coroot_set

    def coroot_of_root(self, r: Root) -> Coroot:
        if tuple(r) in self._coroot_by_root:
            return self._coroot_by_root[tuple(r)]
        return neg(self._coroot_by_root[neg(r)])

    def root_of_coroot(self, c: Coroot) -> Root:
        if tuple(c) in self._root_by_coroot:
            return self._root_by_coroot[tuple(c)]
        return neg(self._root_by_coroot[neg(c)])

    def coroot_weight(self, c: Coroot) -> Weight:
        """The root of the coroot c, as a weight vector."""
        return self.root_to_weight(self.root_of_coroot(c))

    def simple_root(self, i: int) -> Root:
        """Simple root alpha_i, 1-based index."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index out of range: {i}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def simple_coroot(self, i: int) -> Coroot:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index out of range: {i}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise ValueError(f"fundamental index out of range: {i}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def highest_dual_root(self) -> Coroot:
        """The highest positive coroot in the dominance order of the dual system."""
        best = [
            t for t in self.pos_coroots
            if all(all(x >= 0 for x in sub(t, g)) for g in self.pos_coroots)
        ]
        assert len(best) == 1
        return best[0]

    def root_length2(self, r: Root) -> int:
        """(alpha, alpha) with short roots normalized to squared length 2."""
        n = self.rank
        v = sum(
            r[i] * r[j] * self.d[i] * self.cartan[i][j]
            for i in range(n) for j in range(n)
        )
        assert v > 0
        return v


_EXPECTED_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def build_datum(family: str, rank: int) -> RootDatum:
    """Build the root datum of a valid simple type, e.g. ``build_datum("G", 2)``."""
    cartan = _cartan_matrix(family, rank)
    n = rank
    d = _symmetrizer(cartan)

    # generate the root system as the reflection orbit of the simple roots
    def reflect(i, r):
        pairing = sum(cartan[i][j] * r[j] for j in range(n))
        out = list(r)
        out[i] -= pairing
        return tuple(out)

    simples = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simples)
    todo = list(simples)
    while todo:
        r = todo.pop()
        for i in range(n):
            r2 = reflect(i, r)
            if r2 not in seen:
                seen.add(r2)
                todo.append(r2)
    pos = sorted(r for r in seen if all(x >= 0 for x in r))
    assert len(pos) * 2 == len(seen)
    if len(pos) != _EXPECTED_COUNTS[family](rank):
        raise AssertionError(f"positive root count mismatch for {family}{rank}")

    cartan_t = tuple(tuple(row) for row in cartan)
    coroots = []
    for r in pos:
        len2 = sum(
            r[i] * r[j] * d[i] * cartan[i][j] for i in range(n) for j in range(n)
        )
        c = []
        for k in range(n):
            num = 2 * r[k] * d[k]
            assert num % len2 == 0, (family, rank, r)
            c.append(num // len2)
        coroots.append(tuple(c))

    two_rho = tuple(
        sum(sum(cartan[i][j] * r[j] for j in range(n)) for r in pos)
        for i in range(n)
    )
    return RootDatum(
        family=family,
        rank=rank,
        cartan=cartan_t,
        d=d,
        pos_roots=tuple(pos),
        pos_coroots=tuple(coroots),
        _coroot_set=frozenset(coroots),
        _root_by_coroot=dict(zip(coroots, pos)),
        _coroot_by_root=dict(zip(pos, coroots)),
        two_rho=two_rho,
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
