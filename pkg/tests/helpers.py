"""Shared builders for the test suite, cached so repeated tests do not
re-enumerate the same groups."""

from functools import lru_cache

from zipzeta import (OmegaGroup, ExtWeylGroup, build_root_system,
                     cartan_matrix, direct_sum, enumerate_group)

G2_CARTAN = [[2, -3], [-1, 2]]


@lru_cache(maxsize=None)
def system(family, rank):
    if family == "A1xA1":
        return build_root_system(direct_sum([[2]], [[2]]))
    if family == "G":
        return build_root_system(G2_CARTAN)
    return build_root_system(cartan_matrix(family, rank))


@lru_cache(maxsize=None)
def tables(family, rank):
    return enumerate_group(system(family, rank))


@lru_cache(maxsize=None)
def swap_ext():
    """Two orthogonal rank-1 factors with the swap as component group."""
    t = tables("A1xA1", 2)
    omega = OmegaGroup(t.rs, ["1", "sigma"], [[0, 1], [1, 0]],
                       [(1, 2), (2, 1)])
    return ExtWeylGroup(t, omega)


@lru_cache(maxsize=None)
def minus_one_ext():
    """Rank 1 with a component acting as -1 on the root lattice."""
    t = tables("A", 1)
    omega = OmegaGroup(t.rs, ["1", "w"], [[0, 1], [1, 0]], [(1,), (-1,)])
    return ExtWeylGroup(t, omega)


@lru_cache(maxsize=None)
def flip_ext():
    """Type A2 with the diagram flip as component group."""
    t = tables("A", 2)
    omega = OmegaGroup(t.rs, ["1", "f"], [[0, 1], [1, 0]],
                       [(1, 2), (2, 1)])
    return ExtWeylGroup(t, omega)


@lru_cache(maxsize=None)
def trivial_ext(family, rank):
    t = tables(family, rank)
    return ExtWeylGroup(t, OmegaGroup.trivial(t.rs))


def subsets(indices):
    out = [frozenset()]
    for i in indices:
        out += [s | {i} for s in out]
    return out
