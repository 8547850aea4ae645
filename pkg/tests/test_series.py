import random
from fractions import Fraction

import pytest

from stringzeta.rings import ZetaPoly, zeta
from stringzeta.series import (
    TruncSeries,
    series_exp,
    series_log,
    series_mul_div,
)


def X(order, nvars=1):
    return TruncSeries.variable(0, nvars, order)


def test_exp_of_x():
    s = series_exp(X(3))
    assert s.coefficient((0,)) == 1
    assert s.coefficient((1,)) == 1
    assert s.coefficient((2,)) == Fraction(1, 2)
    assert s.coefficient((3,)) == Fraction(1, 6)


def test_exp_of_zero_is_one():
    assert series_exp(TruncSeries(1, 5)) == TruncSeries.constant(1, 1, 5)


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(TruncSeries.constant(1, 1, 3))


def test_exp_with_zeta_coefficients():
    f = TruncSeries(1, 2, {(1,): zeta(3)})
    s = series_exp(f)
    assert s.coefficient((1,)) == zeta(3)
    assert s.coefficient((2,)) == zeta(3) * zeta(3) * Fraction(1, 2)


def test_mul_and_geometric_inverse():
    one_plus = TruncSeries(1, 2, {(0,): Fraction(1), (1,): Fraction(1)})
    one_minus = TruncSeries(1, 2, {(0,): Fraction(1), (1,): Fraction(-1)})
    prod = series_mul_div(one_plus, one_minus, "multiply")
    assert prod == TruncSeries(1, 2, {(0,): Fraction(1), (2,): Fraction(-1)})

    geom = series_mul_div(TruncSeries.constant(1, 1, 3), 1 - X(3), "divide")
    for j in range(4):
        assert geom.coefficient((j,)) == 1


def test_rational_function_expansion():
    # (1 - 9t) / ((1 + 3t)(1 - t)) = 1 - 11t + 25t^2 + O(t^3)
    t = X(2)
    num = 1 - t.scale(9)
    den = (1 + t.scale(3)) * (1 - t)
    q = series_mul_div(num, den, "divide")
    assert q.coefficient((0,)) == 1
    assert q.coefficient((1,)) == -11
    assert q.coefficient((2,)) == 25


def test_divide_requires_unit():
    with pytest.raises(ZeroDivisionError):
        X(3).inverse()


def _random_series(rng, nvars, order):
    coeffs = {}
    for d in range(1, order + 1):
        for e in ([(d,)] if nvars == 1 else [(i, d - i) for i in range(d + 1)]):
            if rng.random() < 0.6:
                coeffs[e] = Fraction(rng.randrange(-5, 6), rng.randrange(1, 5))
    return TruncSeries(nvars, order, coeffs)


@pytest.mark.parametrize("nvars", [1, 2])
def test_exp_log_roundtrip(nvars):
    rng = random.Random(99)
    for order in range(1, 13, 3):
        f = _random_series(rng, nvars, order)
        g = series_exp(f)
        assert series_log(g) == f
        one_plus_f = f + 1
        assert series_exp(series_log(one_plus_f)) == one_plus_f


def test_truncation_order_rules():
    a = _random_series(random.Random(1), 2, 6)
    b = _random_series(random.Random(2), 2, 4)
    assert (a * b).order == 4
    assert (a + b).order == 4
    assert (a * b) == (a.truncate(4) * b)


def test_variable_substitutions():
    s = TruncSeries(2, 3, {(1, 0): Fraction(1), (1, 1): Fraction(2), (0, 2): Fraction(3)})
    m = s.negate_variable(0)
    assert m.coefficient((1, 0)) == -1
    assert m.coefficient((1, 1)) == -2
    assert m.coefficient((0, 2)) == 3
    d = s.substitute_diagonal()
    assert d.coefficient((1,)) == 1
    assert d.coefficient((2,)) == 5


def test_heterogeneous_coefficients():
    s = TruncSeries(1, 2, {(0,): Fraction(1), (1,): zeta(3)})
    sq = s * s
    assert sq.coefficient((1,)) == 2 * zeta(3)
    assert sq.coefficient((2,)) == zeta(3) * zeta(3)
    inv = s.inverse()
    assert inv.coefficient((1,)) == -zeta(3)
    assert (s * inv) == TruncSeries.constant(1, 1, 2)
