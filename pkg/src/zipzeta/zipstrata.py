"""Stratification of the twisted minimal-representative set.

A datum consists of a finite root system, a component group acting on
its diagram, a relative Frobenius (a diagram automorphism phi0 and the
field data q0 = p^m, e, so the Galois generator is tau = phi0^e), a
parabolic type I, and a subgroup Theta of the component group.

The twist is built from the longest element: J is the conjugate of the
Frobenius image of I, w1 the shortest element of the double coset of
the longest element, and psi the inner twist of the Frobenius by w1.
Strata are the orbits of the minimal set under Theta (acting by
a -> theta * a * psi(theta)^{-1}) grouped further into Galois orbits.
Each stratum carries two invariants: aut_dim, the codimension defect
(flag dimension minus extended length), which is the dimension of the
automorphism group of the corresponding isomorphism class, and degree,
the Galois orbit size, the least field degree over which the class has
a model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (BadPrimePower, FrobeniusDoesNotFixI,
                     FrobeniusDoesNotFixTheta, ThetaActionLeaks,
                     ThetaDoesNotPreserveI, ThetaNotSubgroup)
from .extweyl import DiagramAutomorphism, ExtWeylGroup, OmegaGroup
from .rootsystem import CartanMatrix, DEFAULT_ROOT_CAP, build_root_system
from .weyl import DEFAULT_GROUP_CAP, enumerate_group
from .zetafn import QLaurent


def _prime_power(q0):
    if not isinstance(q0, int) or isinstance(q0, bool) or q0 < 2:
        raise BadPrimePower(f"{q0!r} is not a prime power")
    p = None
    for cand in range(2, q0 + 1):
        if q0 % cand == 0:
            p = cand
            break
    m = 0
    x = q0
    while x % p == 0:
        x //= p
        m += 1
    if x != 1:
        raise BadPrimePower(f"{q0} is not a prime power")
    return p, m


class ZipDatum:
    """Validated input datum.  Construction performs every consistency
    check; a constructed datum is safe to classify."""

    def __init__(self, cartan, parabolic_type, *, omega=None, phi0=None,
                 q0=2, e=1, theta=None, root_cap=DEFAULT_ROOT_CAP,
                 group_cap=DEFAULT_GROUP_CAP):
        self.p, self.m = _prime_power(q0)
        self.q0 = q0
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise ValueError("e must be a positive integer")
        self.e = e
        self.q = q0 ** e

        if not isinstance(cartan, CartanMatrix):
            cartan = CartanMatrix(cartan)
        self.rs = build_root_system(cartan, cap=root_cap)
        self.tables = enumerate_group(self.rs, cap=group_cap)

        if omega is None:
            self.omega = OmegaGroup.trivial(self.rs)
        elif isinstance(omega, OmegaGroup):
            if omega.rs is not self.rs:
                omega = OmegaGroup(self.rs, omega.labels,
                                   omega.table, omega.actions)
            self.omega = omega
        else:
            labels = list(omega["elements"])
            table = omega["table"]
            action_map = omega["diagram_action"]
            actions = [action_map[lab] for lab in labels]
            self.omega = OmegaGroup(self.rs, labels, table, actions)
        self.ext = ExtWeylGroup(self.tables, self.omega)

        I = frozenset(parabolic_type)
        for i in I:
            if not isinstance(i, int) or not 1 <= i <= self.rs.rank:
                raise ValueError(f"parabolic index {i!r} out of range")
        self.parabolic_type = I
        self.flag_dim = len(self.rs.positive_outside(I))

        if phi0 is None:
            self.sigma = DiagramAutomorphism.identity(self.ext)
        elif isinstance(phi0, DiagramAutomorphism):
            assert phi0.ext is self.ext
            self.sigma = phi0
        else:
            dp = tuple(phi0["diagram_perm"])
            op = phi0.get("omega_perm")
            if op is None:
                op = tuple(range(len(self.omega)))
            else:
                op = tuple(self.omega.index(lab) for lab in op)
            self.sigma = DiagramAutomorphism(self.ext, dp, op)
        self.tau = self.sigma.power(e)

        if theta is None:
            theta_idx = {self.omega.identity_index}
        else:
            theta_idx = {self.omega.index(lab) for lab in theta}
        if self.omega.identity_index not in theta_idx:
            raise ThetaNotSubgroup("subgroup must contain the identity")
        for a in theta_idx:
            for b in theta_idx:
                if self.omega.mult(a, b) not in theta_idx:
                    raise ThetaNotSubgroup(
                        f"labels are not closed under the product: "
                        f"{self.omega.label(a)!r} * {self.omega.label(b)!r}")
        for a in theta_idx:
            if self.omega.inverse(a) not in theta_idx:
                raise ThetaNotSubgroup(
                    f"inverse of {self.omega.label(a)!r} is missing")
        self.theta_indices = tuple(sorted(theta_idx))

        for k in self.theta_indices:
            if self.omega.conjugate_subset(k, I) != I:
                raise ThetaDoesNotPreserveI(
                    f"conjugation by {self.omega.label(k)!r} moves the "
                    "parabolic type")
        if self.tau.apply_subset(I) != I:
            raise FrobeniusDoesNotFixI(
                "the Galois generator moves the parabolic type")
        if {self.tau.apply_omega(k) for k in self.theta_indices} != set(
                self.theta_indices):
            raise FrobeniusDoesNotFixTheta(
                "the Galois generator moves the component subgroup")

    @property
    def theta_labels(self):
        return tuple(self.omega.label(k) for k in self.theta_indices)


@dataclass
class Twist:
    """Twisting data derived from a datum."""

    datum: ZipDatum
    J: frozenset
    w1: object
    w2: object

    def psi(self, a):
        """The twisted Frobenius on the extended group: conjugate of the
        plain Frobenius by w1."""
        ext = self.datum.ext
        w1e = ext.element(self.w1, ext.omega.identity_index)
        return w1e * self.datum.sigma.apply_ext(a) * w1e.inverse()


def compute_twist(datum):
    """Compute (J, w1, w2) for the datum.

    J is the set of simple indices j with alpha_j = -w0(alpha_i) for i
    in the Frobenius image of the parabolic type; w1 is the shortest
    element of the double coset of w0 for (J, sigma(I)); w2 is its
    preimage under the Frobenius.  Both conjugation identities are
    asserted.
    """
    rs = datum.rs
    tables = datum.tables
    rank = rs.rank
    m = rs.n_positive
    sI = datum.sigma.apply_subset(datum.parabolic_type)
    w0 = tables.longest_element()
    J = set()
    for i in sI:
        k = w0.perm[i - 1]
        neg = rs.negate_ordinal(k)
        assert neg < rank
        J.add(neg + 1)
    J = frozenset(J)
    _, w1, _ = tables.decompose_double(w0, J, sI)
    for i in sI:
        img = w1.perm[i - 1]
        assert img < rank and (img + 1) in J
    w2 = datum.sigma.inverse().apply_weyl(w1)
    assert datum.sigma.apply_weyl(w2) == w1
    assert datum.tau.apply_weyl(w1) == w1
    return Twist(datum, J, w1, w2)


@dataclass(frozen=True)
class Stratum:
    """One Galois orbit of subgroup orbits in the minimal set."""

    rep: object
    elements: tuple
    length: int
    aut_dim: int
    degree: int

    @property
    def size(self):
        return len(self.elements)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _theta_orbits(ext, reps, theta_elements, psi_of_theta, membership):
    """Orbits of a -> theta * a * psi(theta)^{-1} on the listed reps.

    membership maps an element key to its index in reps, or None.  Any
    escape raises ThetaActionLeaks.
    """
    uf = _UnionFind(len(reps))
    psi_inv = [b.inverse() for b in psi_of_theta]
    for idx, a in enumerate(reps):
        for t, pinv in zip(theta_elements, psi_inv):
            b = t * a * pinv
            j = membership((b.w.perm, b.omega))
            if j is None:
                raise ThetaActionLeaks(
                    "subgroup action left the minimal set")
            uf.union(idx, j)
    orbits = {}
    for idx in range(len(reps)):
        orbits.setdefault(uf.find(idx), []).append(idx)
    return [sorted(v) for _, v in sorted(orbits.items())]


def classify(datum):
    """Full stratification: the list of strata, deterministically
    ordered by (aut_dim, degree, canonical word of the representative).
    """
    twist = compute_twist(datum)
    ext = datum.ext
    I = datum.parabolic_type
    J = twist.J
    reps = ext.min_reps(I)
    position = {(a.w.perm, a.omega): idx for idx, a in enumerate(reps)}

    theta_elements = [ext.element(datum.tables.identity, k)
                      for k in datum.theta_indices]
    psi_of_theta = [twist.psi(t) for t in theta_elements]
    orbits = _theta_orbits(ext, reps, theta_elements, psi_of_theta,
                           position.get)

    lengths = [ext.extended_length(a, I, J) for a in reps]
    for orbit in orbits:
        if len({lengths[idx] for idx in orbit}) != 1:
            raise ThetaActionLeaks(
                "extended length is not constant on a subgroup orbit")

    orbit_of = {}
    for oid, orbit in enumerate(orbits):
        for idx in orbit:
            orbit_of[idx] = oid
    tau_on_orbit = []
    for orbit in orbits:
        images = set()
        image_ids = set()
        for idx in orbit:
            b = datum.tau.apply_ext(reps[idx])
            j = position.get((b.w.perm, b.omega))
            if j is None:
                raise ThetaActionLeaks("Galois action left the minimal set")
            images.add(j)
            image_ids.add(orbit_of[j])
        if len(image_ids) != 1 or images != set(orbits[image_ids.pop()]):
            raise ThetaActionLeaks(
                "Galois action does not permute the subgroup orbits")
        tau_on_orbit.append(orbit_of[next(iter(images))])

    seen = set()
    strata = []
    for start in range(len(orbits)):
        if start in seen:
            continue
        cycle = []
        oid = start
        while oid not in seen:
            seen.add(oid)
            cycle.append(oid)
            oid = tau_on_orbit[oid]
        member_idx = sorted(idx for oid in cycle for idx in orbits[oid])
        ell = {lengths[idx] for idx in member_idx}
        if len(ell) != 1:
            raise ThetaActionLeaks(
                "extended length is not constant on a Galois orbit")
        length = ell.pop()
        aut_dim = datum.flag_dim - length
        assert aut_dim >= 0
        elements = sorted((reps[idx] for idx in member_idx),
                          key=ext.sort_key)
        strata.append(Stratum(
            rep=elements[0],
            elements=tuple(elements),
            length=length,
            aut_dim=aut_dim,
            degree=len(cycle),
        ))
    strata.sort(key=lambda s: (s.aut_dim, s.degree, ext.sort_key(s.rep)))
    return strata


def point_count(strata, v, q=None):
    """Groupoid cardinality over the degree-v field: each stratum whose
    degree divides v contributes degree * q^(-aut_dim * v).

    Symbolic in q when q is None (a Laurent polynomial); an exact
    rational when q is an integer.
    """
    if q is None:
        total = QLaurent.zero()
        for s in strata:
            if v % s.degree == 0:
                total = total + QLaurent.term(-s.aut_dim * v, s.degree)
        return total
    total = Fraction(0)
    for s in strata:
        if v % s.degree == 0:
            total += Fraction(s.degree, 1) / Fraction(q) ** (s.aut_dim * v)
    return total
