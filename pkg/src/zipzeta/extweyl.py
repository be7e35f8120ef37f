"""Extension of the Weyl group by a finite component group.

The component group Omega is given by an explicit multiplication table
together with, for each element, a signed permutation of the simple
roots (entry -j at position i means alpha_i maps to -alpha_j).  Signs
are allowed because some presentations act by -1 on the root lattice;
unsigned actions permute the positive roots.  Actions may be
non-faithful.  Any pairing-preserving signed permutation extends to a
permutation of the whole root system, which is precomputed per element.

The extended group is the semidirect product: elements are pairs
(w, omega) standing for the product w * omega, so

    (w, a) * (w', b)  =  (w * (a w' a^{-1}), a b).

For a subset I of simple indices, the minimal set consists of the pairs
whose Weyl part is a minimal left-coset representative.  Every element
of it factors as omega * y * w_J with y minimal in a double coset, and
the extended length counts the positive roots outside J that the map
omega * y sends to negative roots outside I, plus the length of w_J.
On elements of the plain Weyl group this restricts to the usual length.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (InvalidFrobenius, InvalidOmegaTable, MixedGroups,
                     NotInExtMinSet)


def _compose_signed(outer, inner):
    """Composition of signed permutations of 1..r, outer after inner."""
    out = []
    for s in inner:
        t = outer[abs(s) - 1]
        out.append(-t if s < 0 else t)
    return tuple(out)


def _invert_signed(action):
    out = [0] * len(action)
    for i, s in enumerate(action, start=1):
        out[abs(s) - 1] = -i if s < 0 else i
    return tuple(out)


def _identity_signed(rank):
    return tuple(range(1, rank + 1))


class OmegaGroup:
    """Finite labelled group with a signed diagram action."""

    def __init__(self, rs, labels, table, actions):
        self.rs = rs
        labels = list(labels)
        n = len(labels)
        if n == 0:
            raise InvalidOmegaTable("component group has no elements")
        if len(set(labels)) != n:
            raise InvalidOmegaTable("component labels are not distinct")
        if any(not isinstance(x, str) for x in labels):
            raise InvalidOmegaTable("component labels must be strings")
        rows = [tuple(row) for row in table]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InvalidOmegaTable("multiplication table is not n-by-n")
        for row in rows:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise InvalidOmegaTable(
                        f"table entry {x!r} is not an element index")
        for k in range(n):
            if sorted(rows[k]) != list(range(n)):
                raise InvalidOmegaTable(f"table row {k} is not a permutation")
            if sorted(r[k] for r in rows) != list(range(n)):
                raise InvalidOmegaTable(f"table column {k} is not a permutation")
        identity = None
        for e in range(n):
            if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise InvalidOmegaTable("table has no identity element")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                        raise InvalidOmegaTable(
                            f"table is not associative at ({a},{b},{c})")
        inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if rows[a][b] == identity:
                    inverse[a] = b
        assert all(v is not None for v in inverse)

        rank = rs.rank
        acts = [tuple(a) for a in actions]
        if len(acts) != n:
            raise InvalidOmegaTable("need one diagram action per element")
        for k, act in enumerate(acts):
            if len(act) != rank:
                raise InvalidOmegaTable(
                    f"action of element {labels[k]!r} has wrong arity")
            if sorted(abs(s) for s in act) != list(range(1, rank + 1)):
                raise InvalidOmegaTable(
                    f"action of element {labels[k]!r} is not a signed "
                    "permutation of the simple indices")
            c = rs.cartan
            for i in range(1, rank + 1):
                for j in range(1, rank + 1):
                    si, sj = act[i - 1], act[j - 1]
                    sign = (-1 if si < 0 else 1) * (-1 if sj < 0 else 1)
                    if sign * c.entry(abs(si), abs(sj)) != c.entry(i, j):
                        raise InvalidOmegaTable(
                            f"action of element {labels[k]!r} does not "
                            "preserve the Cartan pairing")
        for a in range(n):
            for b in range(n):
                if _compose_signed(acts[a], acts[b]) != acts[rows[a][b]]:
                    raise InvalidOmegaTable(
                        "diagram actions are not a homomorphism at "
                        f"({labels[a]!r},{labels[b]!r})")
        assert acts[identity] == _identity_signed(rank)

        self.labels = labels
        self.table = rows
        self.actions = acts
        self.identity_index = identity
        self._inverse = tuple(inverse)
        self._index = {lab: k for k, lab in enumerate(labels)}
        self._root_perms = [self._build_root_perm(a) for a in acts]

    def _build_root_perm(self, act):
        rs = self.rs
        perm = []
        for r in rs.roots:
            coords = [0] * rs.rank
            for i, c in enumerate(r.coords, start=1):
                s = act[i - 1]
                coords[abs(s) - 1] = -c if s < 0 else c
            image = type(r)(tuple(coords))
            perm.append(rs.ordinal(image))
        return tuple(perm)

    def __len__(self):
        return len(self.labels)

    def label(self, k):
        return self.labels[k]

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise InvalidOmegaTable(f"unknown component label {label!r}") from None

    def mult(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self._inverse[a]

    def action(self, k):
        return self.actions[k]

    def root_perm(self, k):
        return self._root_perms[k]

    def act_root(self, k, root):
        return self.rs.root(self._root_perms[k][self.rs.ordinal(root)])

    def conjugate_subset(self, k, I):
        """Image of a set of simple indices, signs dropped."""
        act = self.actions[k]
        return frozenset(abs(act[i - 1]) for i in I)

    def is_based(self, k):
        return all(s > 0 for s in self.actions[k])

    @classmethod
    def trivial(cls, rs):
        return cls(rs, ["1"], [[0]], [_identity_signed(rs.rank)])


class ExtWeylElement:
    """Pair (w, omega) standing for the product w * omega."""

    __slots__ = ("group", "w", "omega")

    def __init__(self, group, w, omega):
        self.group = group
        self.w = w
        self.omega = omega

    def __mul__(self, other):
        if not isinstance(other, ExtWeylElement):
            return NotImplemented
        return self.group.multiply(self, other)

    def inverse(self):
        return self.group.inverse(self)

    def is_identity(self):
        return (self.omega == self.group.omega.identity_index
                and self.w.is_identity())

    def __eq__(self, other):
        return (isinstance(other, ExtWeylElement)
                and self.group is other.group
                and self.omega == other.omega and self.w == other.w)

    def __hash__(self):
        return hash((self.w.perm, self.omega))

    def __repr__(self):
        word = self.group.tables.word(self.w)
        return f"ExtWeylElement({word}, {self.group.omega.label(self.omega)!r})"


class ExtDecomposition(NamedTuple):
    omega_index: int
    wpp: object
    y: object
    w_J: object
    is_double_min: bool


class ExtWeylGroup:
    """Semidirect product of an enumerated Weyl group and a component
    group acting on its diagram."""

    def __init__(self, tables, omega):
        if tables.rs is not omega.rs:
            raise MixedGroups("component group acts on a different root system")
        self.tables = tables
        self.omega = omega
        self.rs = tables.rs

    def element(self, w, omega):
        """Build an element from a Weyl part and a component label or
        index."""
        if isinstance(omega, str):
            omega = self.omega.index(omega)
        return ExtWeylElement(self, self.tables.canonical(w), omega)

    @property
    def identity(self):
        return self.element(self.tables.identity, self.omega.identity_index)

    def __len__(self):
        return len(self.tables) * len(self.omega)

    def __iter__(self):
        for k in range(len(self.omega)):
            for w in self.tables:
                yield ExtWeylElement(self, w, k)

    def twist_weyl(self, k, w):
        """Conjugate omega_k * w * omega_k^{-1} of a Weyl element."""
        rp = self.omega.root_perm(k)
        rpinv = self.omega.root_perm(self.omega.inverse(k))
        perm = tuple(rp[w.perm[rpinv[a]]] for a in range(len(w.perm)))
        return self.tables._by_perm[perm]

    def multiply(self, a, b):
        if a.group is not self or b.group is not self:
            raise MixedGroups("elements belong to different extended groups")
        w = a.w * self.twist_weyl(a.omega, b.w)
        return self.element(w, self.omega.mult(a.omega, b.omega))

    def inverse(self, a):
        k = self.omega.inverse(a.omega)
        return self.element(self.twist_weyl(k, a.w.inverse()), k)

    def act_ordinal(self, a, ordinal):
        return a.w.perm[self.omega.root_perm(a.omega)[ordinal]]

    def act_root(self, a, root):
        return self.rs.root(self.act_ordinal(a, self.rs.ordinal(root)))

    def contains_min(self, a, I):
        """Membership in the minimal set for the parabolic type I."""
        return self.tables.is_min_left(a.w, I)

    def min_reps(self, I):
        """The minimal set, component-major: for each component in label
        order, the minimal coset representatives in (length, word)
        order."""
        return [ExtWeylElement(self, w, k)
                for k in range(len(self.omega))
                for w in self.tables.min_left(I)]

    def canonical_decomposition(self, a, I, J):
        """Factor a = omega * w'' = omega * y * w_J.

        Here w'' is the conjugate of the Weyl part by omega^{-1}; it is
        minimal for the conjugated type, and splits through the double
        coset as y * w_J.  Raises NotInExtMinSet when a is not in the
        minimal set for I.
        """
        if a.group is not self:
            raise MixedGroups("element belongs to a different extended group")
        I = frozenset(I)
        J = frozenset(J)
        if not self.contains_min(a, I):
            raise NotInExtMinSet(
                "Weyl part has a left descent in the parabolic type")
        kinv = self.omega.inverse(a.omega)
        wpp = self.twist_weyl(kinv, a.w)
        Ipp = self.omega.conjugate_subset(kinv, I)
        if not self.tables.is_min_left(wpp, Ipp):
            raise NotInExtMinSet(
                "conjugated Weyl part is not minimal for the conjugated type")
        y, w_J = self.tables.decompose_left(wpp, Ipp, J)
        return ExtDecomposition(a.omega, wpp, y, w_J, w_J.is_identity())

    def extended_length(self, a, I, J):
        """Count positive roots outside J sent by omega * y to negative
        roots outside I, plus the length of w_J."""
        dec = self.canonical_decomposition(a, I, J)
        rs = self.rs
        m = rs.n_positive
        rp = self.omega.root_perm(dec.omega_index)
        yp = dec.y.perm
        inside_I = rs.subsystem_ordinals(I)
        count = 0
        for k in rs.positive_outside(J):
            img = rp[yp[k]]
            if img >= m and img not in inside_I:
                count += 1
        return count + dec.w_J.length

    def sort_key(self, a):
        word = self.tables.word(a.w)
        return (len(word), word, a.omega)


class DiagramAutomorphism:
    """A pairing-preserving permutation of the simple roots together
    with a compatible automorphism of the component group.

    Used for the relative Frobenius and for naturality checks.  The
    diagram part is unsigned (it must fix the base), and compatibility
    means conjugating a component's action by the diagram part gives the
    image component's action.
    """

    def __init__(self, ext, diagram_perm, omega_perm):
        rs = ext.rs
        rank = rs.rank
        dp = tuple(diagram_perm)
        if sorted(dp) != list(range(1, rank + 1)):
            raise InvalidFrobenius(
                "diagram map is not a permutation of the simple indices")
        c = rs.cartan
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if c.entry(dp[i - 1], dp[j - 1]) != c.entry(i, j):
                    raise InvalidFrobenius(
                        "diagram map does not preserve the Cartan pairing")
        omega = ext.omega
        n = len(omega)
        op = tuple(omega_perm)
        if sorted(op) != list(range(n)):
            raise InvalidFrobenius(
                "component map is not a permutation of the component group")
        for a in range(n):
            for b in range(n):
                if op[omega.mult(a, b)] != omega.mult(op[a], op[b]):
                    raise InvalidFrobenius(
                        "component map is not a group automorphism")
        for k in range(n):
            conjugated = _compose_signed(
                dp, _compose_signed(omega.action(k), _invert_signed(dp)))
            if conjugated != omega.action(op[k]):
                raise InvalidFrobenius(
                    "component map is incompatible with the diagram actions: "
                    f"element {omega.label(k)!r}")
        self.ext = ext
        self.diagram_perm = dp
        self.omega_perm = op
        self._root_perm = None
        self._root_perm_inv = None

    @classmethod
    def identity(cls, ext):
        return cls(ext, _identity_signed(ext.rs.rank),
                   tuple(range(len(ext.omega))))

    def is_identity(self):
        return (self.diagram_perm == _identity_signed(self.ext.rs.rank)
                and self.omega_perm == tuple(range(len(self.ext.omega))))

    @property
    def root_perm(self):
        if self._root_perm is None:
            rs = self.ext.rs
            dp = self.diagram_perm
            perm = []
            for r in rs.roots:
                coords = [0] * rs.rank
                for i, v in enumerate(r.coords, start=1):
                    coords[dp[i - 1] - 1] = v
                perm.append(rs.ordinal(type(r)(tuple(coords))))
            self._root_perm = tuple(perm)
        return self._root_perm

    def compose(self, other):
        """self after other."""
        assert self.ext is other.ext
        dp = _compose_signed(self.diagram_perm, other.diagram_perm)
        op = tuple(self.omega_perm[k] for k in other.omega_perm)
        return DiagramAutomorphism(self.ext, dp, op)

    def power(self, e):
        out = DiagramAutomorphism.identity(self.ext)
        for _ in range(e):
            out = self.compose(out)
        return out

    def inverse(self):
        return DiagramAutomorphism(self.ext, _invert_signed(self.diagram_perm),
                                   _invert_signed_perm0(self.omega_perm))

    def apply_subset(self, I):
        return frozenset(self.diagram_perm[i - 1] for i in I)

    def apply_weyl(self, w):
        rp = self.root_perm
        if self._root_perm_inv is None:
            inv = [0] * len(rp)
            for a, b in enumerate(rp):
                inv[b] = a
            self._root_perm_inv = tuple(inv)
        rpinv = self._root_perm_inv
        perm = tuple(rp[w.perm[rpinv[a]]] for a in range(len(w.perm)))
        return self.ext.tables._by_perm[perm]

    def apply_omega(self, k):
        return self.omega_perm[k]

    def apply_ext(self, a):
        return self.ext.element(self.apply_weyl(a.w), self.omega_perm[a.omega])


def _invert_signed_perm0(perm):
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v] = i
    return tuple(out)
