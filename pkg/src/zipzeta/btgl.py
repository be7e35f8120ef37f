"""Truncated Barsotti-Tate stacks through the general linear group.

For height h and dimension d, the classifying datum lives on the type
A root system of rank h-1 with parabolic type everything except node d
(everything, when d is 0 or h), base field of p elements and trivial
twisting.  Classes at level one are indexed by the minimal coset
representatives, so there are C(h, d) strata; each has degree one and
aut_dim equal to d*(h-d) minus the length of its representative.

The truncation level n does not enter the computation: raising the
level changes every class by the same unipotent factor, which cancels
from the stack's groupoid count.  bt_zeta is therefore a function of
(h, d, p) only, and the level is carried just for reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotPrime
from .zetafn import zeta_from_strata
from .zipstrata import ZipDatum, classify


def _check_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise NotPrime(f"{p!r} is not a prime")
    for cand in range(2, int(math.isqrt(p)) + 1):
        if p % cand == 0:
            raise NotPrime(f"{p} = {cand} * {p // cand} is not a prime")


@dataclass(frozen=True)
class BTParams:
    """Height, dimension, characteristic and truncation level."""

    h: int
    d: int
    p: int
    n: int = 1

    def __post_init__(self):
        if not isinstance(self.h, int) or self.h < 1:
            raise ValueError("height must be a positive integer")
        if not isinstance(self.d, int) or not 0 <= self.d <= self.h:
            raise ValueError("dimension must lie between 0 and the height")
        _check_prime(self.p)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("truncation level must be a positive integer")


_datum_cache = {}
_strata_cache = {}


def bt_datum(params):
    """The zip datum of the level-one stack: type A of rank h-1 with
    the node d removed from the parabolic type."""
    key = (params.h, params.d, params.p)
    got = _datum_cache.get(key)
    if got is None:
        h, d = params.h, params.d
        rank = h - 1
        cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
                   for j in range(rank)] for i in range(rank)]
        parabolic = set(range(1, rank + 1))
        if 0 < d < h:
            parabolic.discard(d)
        got = ZipDatum(cartan, parabolic, q0=params.p, e=1)
        _datum_cache[key] = got
    return got


def bt_strata(params):
    """Strata of the level-one stack; level independent."""
    key = (params.h, params.d, params.p)
    got = _strata_cache.get(key)
    if got is None:
        got = classify(bt_datum(params))
        assert len(got) == math.comb(params.h, params.d)
        assert all(s.degree == 1 for s in got)
        assert max((s.length for s in got), default=0) == \
            params.d * (params.h - params.d)
        _strata_cache[key] = got
    return got


def bt_zeta(params):
    """Zeta function of the stack: by construction a function of
    (h, d, p) alone, one factor 1/(1 - p^-a t) per stratum."""
    return zeta_from_strata(bt_strata(params))


def kraft_count(h, d):
    """Number of level-one classes: the enumerated minimal set must
    have exactly C(h, d) elements."""
    params = BTParams(h, d, 2)
    count = len(bt_strata(params))
    assert count == math.comb(h, d)
    return count
