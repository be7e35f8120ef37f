from fractions import Fraction

from hypothesis import given, settings, strategies as st

from zipzeta import QLaurent, ZetaProduct, ZipDatum, classify
from zipzeta.fforacle import (FqField, _candidates, _verify_admissible,
                              enumerate_gl, mat_mul, twisted_action)
from helpers import flip_ext, minus_one_ext, swap_ext, tables, trivial_ext

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3),
           ("D", 4), ("A1xA1", 2), ("G", 2)]


@st.composite
def system_with_subsets(draw):
    fam, rank = draw(st.sampled_from(SYSTEMS))
    t = tables(fam, rank)
    I = frozenset(draw(st.sets(st.integers(1, rank))))
    J = frozenset(draw(st.sets(st.integers(1, rank))))
    return t, I, J


@st.composite
def laurent(draw):
    coeffs = draw(st.dictionaries(
        st.integers(-6, 6),
        st.fractions(min_value=-9, max_value=9, max_denominator=12),
        max_size=5))
    return QLaurent(coeffs)


@settings(deadline=None)
@given(system_with_subsets())
def test_coset_factorization(data):
    t, I, J = data
    for w in t.min_left(I):
        x, w_J = t.decompose_left(w, I, J)
        assert x * w_J == w
        assert x.length + w_J.length == w.length
        assert t.is_min_left(x, I) and t.is_min_right(x, J)
        assert t.in_parabolic(w_J, J)


@settings(deadline=None)
@given(system_with_subsets())
def test_coset_orders_multiply(data):
    t, I, _ = data
    inside = sum(1 for w in t if t.in_parabolic(w, I))
    assert len(t.min_left(I)) * inside == len(t)


@settings(deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_reflections_are_involutions(spec, data):
    t = tables(*spec)
    rs = t.rs
    i = data.draw(st.integers(1, rs.rank))
    k = data.draw(st.integers(0, 2 * rs.n_positive - 1))
    perm = rs.reflection_perm(i)
    assert perm[perm[k]] == k
    assert perm[rs.negate_ordinal(k)] == rs.negate_ordinal(perm[k])


@settings(deadline=None)
@given(laurent(), laurent(), laurent())
def test_qlaurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QLaurent.zero() == a
    assert a * QLaurent.one() == a
    assert a - a == QLaurent.zero()
    for q in (2, Fraction(1, 3)):
        assert (a * b).evaluate(q) == a.evaluate(q) * b.evaluate(q)
        assert (a + b).evaluate(q) == a.evaluate(q) + b.evaluate(q)


@settings(deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(1, 4)),
                       st.integers(1, 3), min_size=1, max_size=4),
       st.sampled_from([None, 2, 3]))
def test_series_routes_always_agree(factors, q):
    z = ZetaProduct(factors)
    assert z.series_product(6, q) == z.series_exp(6, q)


EXT_POOL = [
    (swap_ext, 2), (minus_one_ext, 1), (flip_ext, 2),
    (lambda: trivial_ext("B", 2), 2),
]


@settings(deadline=None)
@given(st.sampled_from(EXT_POOL), st.data())
def test_extended_length_additive_and_nonnegative(pool_entry, data):
    make, rank = pool_entry
    ext = make()
    I = frozenset(data.draw(st.sets(st.integers(1, rank))))
    J = frozenset(data.draw(st.sets(st.integers(1, rank))))
    reps = ext.min_reps(I)
    a = data.draw(st.sampled_from(reps))
    dec = ext.canonical_decomposition(a, I, J)
    x = ext.element(ext.twist_weyl(dec.omega_index, dec.y), dec.omega_index)
    total = ext.extended_length(a, I, J)
    assert total >= 0
    assert total == ext.extended_length(x, I, J) + dec.w_J.length
    back = x * ext.element(dec.w_J, ext.omega.identity_index)
    assert back == a


FIELDS = [(2, 1), (3, 1), (2, 2)]


@settings(deadline=None, max_examples=25)
@given(st.sampled_from(FIELDS), st.integers(0, 2), st.data())
def test_census_action_properties(spec, d, data):
    F = FqField(*spec)
    h = 2
    pairs = _candidates(F, h, d)
    gl = enumerate_gl(F, h)
    X = data.draw(st.sampled_from(pairs))
    g = data.draw(st.sampled_from(gl))
    gp = data.draw(st.sampled_from(gl))
    image = twisted_action(F, g, X)
    _verify_admissible(F, h, d, *image)
    assert twisted_action(F, g, twisted_action(F, gp, X)) == \
        twisted_action(F, mat_mul(F, g, gp), X)


@settings(deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11]), st.data())
def test_prime_field_matches_modular_arithmetic(p, data):
    F = FqField(p)
    a = data.draw(st.integers(0, p - 1))
    b = data.draw(st.integers(0, p - 1))
    assert F.add(a, b) == (a + b) % p
    assert F.mul(a, b) == (a * b) % p
    assert F.neg(a) == (-a) % p
    assert F.frob(a) == pow(a, p, p) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1


DATA_POOL = [
    lambda: ZipDatum([[2, 0], [0, 2]], [1],
                     omega={"elements": ["1", "sigma"],
                            "table": [[0, 1], [1, 0]],
                            "diagram_action": {"1": [1, 2],
                                               "sigma": [2, 1]}},
                     theta=["1"]),
    lambda: ZipDatum([[2, 0], [0, 2]], [],
                     omega={"elements": ["1", "sigma"],
                            "table": [[0, 1], [1, 0]],
                            "diagram_action": {"1": [1, 2],
                                               "sigma": [2, 1]}},
                     theta=["1", "sigma"]),
    lambda: ZipDatum([[2, -1], [-1, 2]], [],
                     phi0={"diagram_perm": [2, 1]}),
    lambda: ZipDatum([[2, -1], [-1, 2]], [2]),
    lambda: ZipDatum([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 3],
                     q0=3),
]


@settings(deadline=None, max_examples=20)
@given(st.sampled_from(DATA_POOL))
def test_classification_invariants(make):
    datum = make()
    strata = classify(datum)
    reps = datum.ext.min_reps(datum.parabolic_type)
    assert sum(s.size for s in strata) == len(reps)
    for s in strata:
        assert s.aut_dim >= 0
        assert s.aut_dim + s.length == datum.flag_dim
        assert s.degree >= 1 and s.size % s.degree == 0
        assert s.rep in s.elements
