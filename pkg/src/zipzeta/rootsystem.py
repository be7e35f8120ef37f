"""Finite crystallographic root systems built from Cartan matrices.

Roots are stored as integer coordinate tuples in the basis of simple
roots.  The pairing convention is

    c[i][j] = <alpha_j, alpha_i_check>,

so the simple reflection s_i acts on a root with coordinates (a_1, ...)
by subtracting (sum_j a_j * c[i][j]) from the i-th coordinate.  Simple
roots are indexed 1..rank in the public interface.

A system is built by closing the simple roots under all simple
reflections.  The closure either terminates with every root having
uniform coordinate sign (finite type) or it does not; non-finite input
is detected rather than classified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCartan, NotFiniteType, RootNotInSystem

DEFAULT_ROOT_CAP = 10000


class CartanMatrix:
    """Square integer matrix with the sign pattern of a Cartan matrix.

    Accepts any generalized Cartan matrix; finiteness is checked later by
    the root-system closure.  The empty matrix is allowed and gives the
    rank-zero system.
    """

    def __init__(self, entries):
        rows = [tuple(row) for row in entries]
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise InvalidCartan("matrix is not square")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InvalidCartan(f"entry {x!r} is not an integer")
        for i in range(n):
            if rows[i][i] != 2:
                raise InvalidCartan(
                    f"diagonal entry ({i + 1},{i + 1}) is {rows[i][i]}, expected 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise InvalidCartan(
                        f"off-diagonal entry ({i + 1},{j + 1}) is positive")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise InvalidCartan(
                        f"zero pattern is asymmetric at ({i + 1},{j + 1})")
        self.entries = tuple(rows)
        self.rank = n

    def entry(self, i, j):
        """Pairing <alpha_j, alpha_i_check>, with 1-based i and j."""
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, CartanMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"CartanMatrix({[list(r) for r in self.entries]})"


def cartan_matrix(family, rank):
    """Standard Cartan matrix of a classical family.

    family "A" needs rank >= 1, "B" and "C" need rank >= 2, "D" needs
    rank >= 3.  Nodes are numbered along the chain; for "B"/"C" the last
    node is the short/long end, for "D" the last node hangs off node
    rank-2.
    """
    family = family.upper()
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if family not in minimum:
        raise InvalidCartan(f"unknown family {family!r}")
    if rank < minimum[family]:
        raise InvalidCartan(f"family {family} needs rank >= {minimum[family]}")
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i, j, cij=-1, cji=-1):
        m[i][j] = cij
        m[j][i] = cji

    if family == "D":
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 3, rank - 1)
    else:
        for i in range(rank - 1):
            join(i, i + 1)
        if family == "B":
            join(rank - 1, rank - 2, -2, -1)
        elif family == "C":
            join(rank - 1, rank - 2, -1, -2)
    return CartanMatrix(m)


def direct_sum(*matrices):
    """Block-diagonal sum of Cartan matrices."""
    mats = [m if isinstance(m, CartanMatrix) else CartanMatrix(m) for m in matrices]
    total = sum(m.rank for m in mats)
    out = [[0] * total for _ in range(total)]
    offset = 0
    for m in mats:
        for i in range(m.rank):
            for j in range(m.rank):
                out[offset + i][offset + j] = m.entries[i][j]
        offset += m.rank
    return CartanMatrix(out)


@dataclass(frozen=True)
class Root:
    """A root as an integer coordinate tuple over the simple roots."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def height(self):
        return sum(self.coords)

    def is_positive(self):
        return any(self.coords) and all(c >= 0 for c in self.coords)

    def support(self):
        """1-based indices of the nonzero coordinates."""
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c)

    def __neg__(self):
        return Root(tuple(-c for c in self.coords))

    def __repr__(self):
        return f"Root{self.coords}"


def _reflect_coords(cartan, i, root):
    pairing = sum(c * cartan.entries[i - 1][j] for j, c in enumerate(root.coords))
    coords = list(root.coords)
    coords[i - 1] -= pairing
    return Root(tuple(coords))


class RootSystem:
    """A finite root system with a fixed total order on its roots.

    Ordinals 0..m-1 are the positive roots sorted by height (ties broken
    so that simple root i gets ordinal i-1); ordinals m..2m-1 are the
    negatives in the same order, so negation is a shift by m.
    """

    def __init__(self, cartan, positive_roots):
        self.cartan = cartan
        self.rank = cartan.rank
        self.positive_roots = list(positive_roots)
        self.n_positive = len(self.positive_roots)
        self.roots = self.positive_roots + [-r for r in self.positive_roots]
        self._ordinal = {r: k for k, r in enumerate(self.roots)}
        self._reflection_perms = {}
        self._subsystem_ordinals = {}
        for i in range(1, self.rank + 1):
            assert self.roots[i - 1] == self.simple_root(i)

    def __len__(self):
        return len(self.roots)

    def simple_root(self, i):
        coords = [0] * self.rank
        coords[i - 1] = 1
        return Root(tuple(coords))

    def ordinal(self, root):
        try:
            return self._ordinal[root]
        except KeyError:
            raise RootNotInSystem(f"{root} is not a root of this system") from None

    def root(self, k):
        return self.roots[k]

    def contains(self, root):
        return root in self._ordinal

    def is_positive_ordinal(self, k):
        return k < self.n_positive

    def negate_ordinal(self, k):
        m = self.n_positive
        return k - m if k >= m else k + m

    def reflect(self, i, root):
        """Image of root under the simple reflection s_i."""
        self.ordinal(root)
        return _reflect_coords(self.cartan, i, root)

    def reflection_perm(self, i):
        """s_i as a permutation of root ordinals."""
        perm = self._reflection_perms.get(i)
        if perm is None:
            perm = tuple(self.ordinal(_reflect_coords(self.cartan, i, r))
                         for r in self.roots)
            self._reflection_perms[i] = perm
        return perm

    def subsystem_ordinals(self, subset):
        """Ordinals of the roots supported on the given simple indices."""
        key = frozenset(subset)
        got = self._subsystem_ordinals.get(key)
        if got is None:
            got = frozenset(k for k, r in enumerate(self.roots)
                            if r.support() <= key)
            self._subsystem_ordinals[key] = got
        return got

    def subsystem(self, subset):
        """Roots supported on the given set of simple indices."""
        return frozenset(self.roots[k] for k in self.subsystem_ordinals(subset))

    def positive_outside(self, subset):
        """Ordinals of positive roots not supported on the subset.

        The count is the dimension of the corresponding partial flag
        variety.
        """
        inside = self.subsystem_ordinals(subset)
        return [k for k in range(self.n_positive) if k not in inside]

    def __repr__(self):
        return f"RootSystem(rank={self.rank}, positive={self.n_positive})"


def build_root_system(cartan, cap=DEFAULT_ROOT_CAP):
    """Close the simple roots under simple reflections.

    Raises NotFiniteType if the closure produces a mixed-sign vector or
    more than cap positive roots; both happen exactly when the matrix is
    not of finite type.
    """
    if not isinstance(cartan, CartanMatrix):
        cartan = CartanMatrix(cartan)
    simples = [
        Root(tuple(1 if j == i else 0 for j in range(cartan.rank)))
        for i in range(cartan.rank)
    ]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        next_frontier = []
        for root in frontier:
            for i in range(1, cartan.rank + 1):
                image = _reflect_coords(cartan, i, root)
                if image in seen:
                    continue
                pos = all(c >= 0 for c in image.coords)
                neg = all(c <= 0 for c in image.coords)
                if not (pos or neg):
                    raise NotFiniteType(
                        "reflection closure produced a mixed-sign vector")
                seen.add(image)
                next_frontier.append(image)
                if len(seen) > 2 * cap:
                    raise NotFiniteType(
                        f"more than {cap} positive roots; raise cap only "
                        "if the matrix really is of finite type")
        frontier = next_frontier
    positives = sorted(
        (r for r in seen if r.is_positive()),
        key=lambda r: (r.height, tuple(-c for c in r.coords)),
    )
    return RootSystem(cartan, positives)
