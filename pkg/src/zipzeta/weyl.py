"""The Weyl group of a root system and its coset combinatorics.

Elements are permutations of root ordinals.  The length of an element is
its inversion count, the number of positive roots sent negative, which
equals the length of any reduced word for it.  The canonical word of an
element is its ShortLex-least reduced word, obtained by repeatedly
stripping the left descent with the least simple index.

CosetTables wraps the fully enumerated group and memoizes minimal coset
representatives and the two descent-stripping decompositions:

  * for w minimal in W_I w, the split w = x * w_J with x minimal in its
    double coset and w_J inside W_J;
  * for arbitrary w, the split w = w_I * x * w_J.

Both are unique and length-additive; the code asserts this against the
definitions on every call.
"""

from __future__ import annotations

from .errors import GroupTooLarge, MixedGroups, NotMinimalRep
from .rootsystem import RootSystem

DEFAULT_GROUP_CAP = 100000


class WeylElement:
    """Group element stored as a permutation of root ordinals."""

    __slots__ = ("rs", "perm", "_length", "_inv")

    def __init__(self, rs, perm):
        self.rs = rs
        self.perm = perm
        self._length = None
        self._inv = None

    @property
    def length(self):
        if self._length is None:
            m = self.rs.n_positive
            self._length = sum(1 for k in range(m) if self.perm[k] >= m)
        return self._length

    @property
    def inv_perm(self):
        if self._inv is None:
            inv = [0] * len(self.perm)
            for k, p in enumerate(self.perm):
                inv[p] = k
            self._inv = tuple(inv)
        return self._inv

    def is_identity(self):
        return all(p == k for k, p in enumerate(self.perm))

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.rs is not other.rs:
            raise MixedGroups("elements live over different root systems")
        sp = self.perm
        return WeylElement(self.rs, tuple(sp[k] for k in other.perm))

    def inverse(self):
        w = WeylElement(self.rs, self.inv_perm)
        w._inv = self.perm
        w._length = self._length
        return w

    def act_ordinal(self, k):
        return self.perm[k]

    def act(self, root):
        return self.rs.root(self.perm[self.rs.ordinal(root)])

    def __eq__(self, other):
        return (isinstance(other, WeylElement)
                and self.rs is other.rs and self.perm == other.perm)

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"WeylElement(length={self.length})"


def _identity_perm(rs):
    return tuple(range(2 * rs.n_positive))


def enumerate_group(rs, cap=DEFAULT_GROUP_CAP):
    """Enumerate the full group by breadth-first closure of the simple
    reflections, and return its CosetTables.

    Raises GroupTooLarge past cap elements.  Elements are ordered by
    (length, canonical word).
    """
    identity = WeylElement(rs, _identity_perm(rs))
    simples = {i: WeylElement(rs, rs.reflection_perm(i))
               for i in range(1, rs.rank + 1)}
    seen = {identity.perm: identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for w in frontier:
            wp = w.perm
            for s in simples.values():
                prod = tuple(wp[k] for k in s.perm)
                if prod not in seen:
                    u = WeylElement(rs, prod)
                    seen[prod] = u
                    next_frontier.append(u)
                    if len(seen) > cap:
                        raise GroupTooLarge(
                            f"group has more than {cap} elements")
        frontier = next_frontier
    tables = CosetTables(rs, list(seen.values()), simples)
    tables._sort_elements()
    return tables


class CosetTables:
    """The enumerated group with memoized words and coset filters."""

    def __init__(self, rs, elements, simples):
        self.rs = rs
        self.elements = elements
        self._simples = simples
        self._by_perm = {w.perm: w for w in elements}
        self._words = {_identity_perm(rs): ()}
        self._min_left = {}
        self._min_right = {}
        self._min_double = {}
        self._longest = None

    def _sort_elements(self):
        self.elements.sort(key=lambda w: (len(self.word(w)), self.word(w)))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return isinstance(w, WeylElement) and w.perm in self._by_perm

    @property
    def identity(self):
        return self._by_perm[_identity_perm(self.rs)]

    def simple_reflection(self, i):
        return self._simples[i]

    def _check(self, w):
        if w.perm not in self._by_perm:
            raise MixedGroups("element does not belong to this group")

    def word(self, w):
        """ShortLex-least reduced word, as a tuple of simple indices.

        Stripping the least left descent at every step yields exactly the
        lexicographically least reduced word; intermediate results are
        memoized, so amortized cost over the group is linear.
        """
        self._check(w)
        m = self.rs.n_positive
        rank = self.rs.rank
        chain = []
        cur = w.perm
        while cur not in self._words:
            element = self._by_perm[cur]
            inv = element.inv_perm
            for i in range(1, rank + 1):
                if inv[i - 1] >= m:
                    break
            else:
                raise AssertionError("non-identity element with no descent")
            chain.append((cur, i))
            sperm = self._simples[i].perm
            cur = tuple(sperm[p] for p in cur)
        suffix = self._words[cur]
        for perm, i in reversed(chain):
            suffix = (i,) + suffix
            self._words[perm] = suffix
        return self._words[w.perm]

    def from_word(self, word):
        w = self.identity
        for i in word:
            w = w * self._simples[i]
        return self._by_perm[w.perm]

    def canonical(self, w):
        """The table's own copy of w, so caches are shared."""
        self._check(w)
        return self._by_perm[w.perm]

    def longest_element(self):
        if self._longest is None:
            top = [w for w in self.elements if w.length == self.rs.n_positive]
            assert len(top) == 1
            self._longest = top[0]
        return self._longest

    def is_min_left(self, w, I):
        """True when w is the shortest element of W_I * w: no left
        descent inside I."""
        m = self.rs.n_positive
        inv = w.inv_perm
        return all(inv[i - 1] < m for i in I)

    def is_min_right(self, w, J):
        """True when w is the shortest element of w * W_J."""
        m = self.rs.n_positive
        return all(w.perm[j - 1] < m for j in J)

    def min_left(self, I):
        key = frozenset(I)
        got = self._min_left.get(key)
        if got is None:
            got = [w for w in self.elements if self.is_min_left(w, key)]
            self._min_left[key] = got
        return got

    def min_right(self, J):
        key = frozenset(J)
        got = self._min_right.get(key)
        if got is None:
            got = [w for w in self.elements if self.is_min_right(w, key)]
            self._min_right[key] = got
        return got

    def min_double(self, I, J):
        key = (frozenset(I), frozenset(J))
        got = self._min_double.get(key)
        if got is None:
            got = [w for w in self.elements
                   if self.is_min_left(w, key[0]) and self.is_min_right(w, key[1])]
            self._min_double[key] = got
        return got

    def in_parabolic(self, w, I):
        """Membership in the standard parabolic subgroup on I."""
        return set(self.word(w)) <= set(I)

    def induced_subset(self, x, I, J):
        """The indices j in J with x(alpha_j) a simple root alpha_i,
        i in I.  For x minimal on both sides this realizes the
        intersection of J with the x-conjugate of I."""
        out = set()
        rank = self.rs.rank
        for j in J:
            img = x.perm[j - 1]
            if img < rank and (img + 1) in I:
                out.add(j)
        return frozenset(out)

    def decompose_left(self, w, I, J):
        """Split w = x * w_J with x the minimal double-coset element.

        Requires w minimal in W_I * w (NotMinimalRep otherwise).  Strips
        right descents in J, least index first.  Asserts uniqueness
        consequences: lengths add, x is minimal on both sides, and w_J
        is minimal in its coset of the induced subset.
        """
        self._check(w)
        I = frozenset(I)
        J = frozenset(J)
        if not self.is_min_left(w, I):
            raise NotMinimalRep(
                "element has a left descent in I, so it is not the "
                "shortest element of its coset")
        m = self.rs.n_positive
        x = w
        sweep = sorted(J)
        while True:
            for j in sweep:
                if x.perm[j - 1] >= m:
                    x = self.canonical(x * self._simples[j])
                    break
            else:
                break
        w_J = self.canonical(x.inverse() * w)
        assert x.length + w_J.length == w.length
        assert self.is_min_left(x, I) and self.is_min_right(x, J)
        assert self.in_parabolic(w_J, J)
        assert self.is_min_left(w_J, self.induced_subset(x, I, J))
        return x, w_J

    def decompose_double(self, w, I, J):
        """Split w = w_I * x * w_J with x minimal in its double coset,
        w_I in W_I, w_J in W_J, and lengths adding."""
        self._check(w)
        I = frozenset(I)
        J = frozenset(J)
        m = self.rs.n_positive
        u = w
        sweep = sorted(I)
        while True:
            inv = u.inv_perm
            for i in sweep:
                if inv[i - 1] >= m:
                    u = self.canonical(self._simples[i] * u)
                    break
            else:
                break
        w_I = self.canonical(w * u.inverse())
        x, w_J = self.decompose_left(u, I, J)
        assert self.in_parabolic(w_I, I)
        assert w_I.length + x.length + w_J.length == w.length
        return w_I, x, w_J
