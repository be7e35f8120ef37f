from collections import namedtuple
from fractions import Fraction

import pytest

from zipzeta import (PoleEvaluation, QLaurent, ZetaProduct, ZipDatum,
                     classify, expand_series, zeta_from_strata)

FakeStratum = namedtuple("FakeStratum", "aut_dim degree")

O4_FACTORS = {(0, 1): 2, (1, 1): 2}


def o4_zeta():
    return ZetaProduct(dict(O4_FACTORS))


def test_qlaurent_constants():
    assert QLaurent.zero().is_zero()
    assert not QLaurent.zero()
    assert QLaurent.one() == 1
    assert QLaurent.term(0, 5) == 5
    assert QLaurent.term(-2, Fraction(3, 4)).coeffs == {-2: Fraction(3, 4)}


def test_qlaurent_arithmetic():
    a = QLaurent({0: Fraction(1), -1: Fraction(1)})
    b = QLaurent({0: Fraction(1), -1: Fraction(-1)})
    assert a * b == QLaurent({0: Fraction(1), -2: Fraction(-1)})
    assert a + b == QLaurent.term(0, 2)
    assert a - a == QLaurent.zero()
    assert (a - a).coeffs == {}
    assert -b == QLaurent({0: Fraction(-1), -1: Fraction(1)})
    assert 1 + QLaurent.term(-1) == a
    assert 3 * QLaurent.term(-1) == QLaurent.term(-1, 3)
    assert a * QLaurent.zero() == QLaurent.zero()


def test_qlaurent_evaluate():
    v = QLaurent({0: Fraction(2), -1: Fraction(3)})
    assert v.evaluate(2) == Fraction(7, 2)
    assert v.evaluate(Fraction(1, 2)) == 8


def test_qlaurent_rendering():
    v = QLaurent({0: Fraction(2), -1: Fraction(3)})
    assert v.to_json() == {"-1": "3", "0": "2"}
    assert v.to_str() == "2 + 3 q^-1"
    assert QLaurent.term(1).to_str() == "q"
    assert QLaurent.term(2, 5).to_str(symbol="u") == "5 u^2"
    assert QLaurent.zero().to_str() == "0"


def test_zeta_rejects_bad_factors():
    for bad in ({(0, 0): 1}, {(1, -1): 1}, {(-1, 1): 1}, {(0, 1): -2}):
        with pytest.raises(ValueError):
            ZetaProduct(bad)


def test_zeta_drops_zero_multiplicity():
    z = ZetaProduct({(0, 1): 0, (1, 1): 1})
    assert z.factors == {(1, 1): 1}
    assert ZetaProduct({}).to_str() == "1"


def test_from_strata_merges_repeated_invariants():
    strata = [FakeStratum(0, 1), FakeStratum(0, 1), FakeStratum(1, 2)]
    z = zeta_from_strata(strata)
    assert z == ZetaProduct({(0, 1): 2, (1, 2): 1})
    assert z.factor_items() == [((0, 1), 2), ((1, 2), 1)]


def test_rendering_frozen():
    assert o4_zeta().to_str() == "1/((1 - t)^2 (1 - q^-1 t)^2)"
    assert o4_zeta().to_str(q=2) == "1/((1 - t)^2 (1 - t/2)^2)"
    assert ZetaProduct({(0, 1): 1}).to_str() == "1/(1 - t)"
    assert ZetaProduct({(2, 2): 1}).to_str() == "1/(1 - (q^-2 t)^2)"
    assert ZetaProduct({(2, 2): 1}).to_str(q=3) == "1/(1 - (t/9)^2)"


def test_geometric_series():
    exp = expand_series(ZetaProduct({(0, 1): 1}), 3, q=2)
    assert exp.coefficients == (1, 1, 1, 1)
    assert exp.order == 3 and exp.q == 2


def test_rank_one_series():
    strata = classify(ZipDatum([[2]], []))
    z = zeta_from_strata(strata)
    exp = expand_series(z, 2, q=2)
    assert exp.coefficients == (1, Fraction(3, 2), Fraction(7, 4))


def test_symbolic_series_frozen():
    exp = expand_series(o4_zeta(), 2)
    assert exp.coefficients[0] == QLaurent.one()
    assert exp.coefficients[1] == QLaurent(
        {0: Fraction(2), -1: Fraction(2)})
    assert exp.coefficients[2] == QLaurent(
        {0: Fraction(3), -1: Fraction(4), -2: Fraction(3)})


def test_series_routes_agree_on_mixed_product():
    z = ZetaProduct({(0, 1): 2, (1, 2): 3, (2, 3): 1})
    assert z.series_product(8, q=5) == z.series_exp(8, q=5)
    assert z.series_product(6) == z.series_exp(6)
    expand_series(z, 8, q=5)


def test_series_multiplicity_expansion():
    z = ZetaProduct({(0, 1): 3})
    assert z.series_product(4, q=2) == [1, 3, 6, 10, 15]


def test_point_counts():
    z = ZetaProduct({(1, 2): 1})
    assert z.n_value(1, q=2) == 0
    assert z.n_value(2, q=2) == Fraction(1, 2)
    assert z.n_value(3) == QLaurent.zero()
    assert z.n_value(2) == QLaurent.term(-2, 2)
    assert o4_zeta().n_value(1) == QLaurent({0: Fraction(2),
                                             -1: Fraction(2)})


def test_evaluate_and_poles():
    plain = ZetaProduct({(0, 1): 1})
    assert plain.evaluate(2, Fraction(1, 2)) == 2
    with pytest.raises(PoleEvaluation):
        plain.evaluate(2, 1)
    assert o4_zeta().evaluate(3, 2) == 9
    with pytest.raises(PoleEvaluation):
        o4_zeta().evaluate(3, 3)
    with pytest.raises(PoleEvaluation):
        o4_zeta().evaluate(3, 1)


def test_log_derivative_recurrence():
    z = ZetaProduct({(0, 1): 1, (1, 1): 2, (2, 2): 1})
    order = 7
    series = z.series_product(order, q=3)
    nv = [z.n_value(v, q=3) for v in range(order + 1)]
    for k in range(1, order + 1):
        lhs = k * series[k]
        rhs = sum(nv[j] * series[k - j] for j in range(1, k + 1))
        assert lhs == rhs
