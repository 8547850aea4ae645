from fractions import Fraction

import pytest

from stringzeta.mzv import (
    HIndex,
    ZIndex,
    compositions_12,
    h_exact,
    h_tornheim,
    tornheim_tail_bound,
    veneziano_series,
    z_bruteforce,
    z_partial_product,
)
from stringzeta.rings import zeta


def test_zindex_validation():
    with pytest.raises(ValueError):
        ZIndex(1, 0)
    with pytest.raises(ValueError):
        ZIndex(2, -1)
    assert ZIndex(3, 2).weight == 5


def test_compositions():
    assert compositions_12(0) == [()]
    assert sorted(compositions_12(3)) == [(1, 1, 1), (1, 2), (2, 1)]
    # counts follow the Fibonacci numbers
    assert len(compositions_12(6)) == 13


def test_partial_product_small_cases():
    assert z_partial_product(ZIndex(2, 0), 3) == Fraction(49, 36)
    # c_1(2) = 2, so the (k=2, r=1) partial at N=2 is 2/4
    assert z_partial_product(ZIndex(2, 1), 2) == Fraction(1, 2)


def test_bruteforce_reduces_to_zeta_partial():
    for k in (2, 5):
        for N in (1, 7, 20):
            assert z_bruteforce(ZIndex(k, 0), N) == sum(
                Fraction(1, n ** k) for n in range(1, N + 1))


def test_bruteforce_r1_doubled_double_sum():
    N = 12
    k = 3
    expected = 2 * sum(
        Fraction(1, m) * Fraction(1, n ** k)
        for n in range(1, N + 1) for m in range(1, n))
    assert z_bruteforce(ZIndex(k, 1), N) == expected


@pytest.mark.parametrize("k,r", [(2, 1), (3, 2), (2, 3), (4, 2), (3, 4)])
def test_truncations_agree_exactly(k, r):
    for N in (1, 2, 5, 17, 50):
        assert z_partial_product(ZIndex(k, r), N) == z_bruteforce(ZIndex(k, r), N)


def test_veneziano_low_order_coefficients():
    v = veneziano_series(4)
    assert v.coefficient((0, 0)) == 1
    # V = 1 on the s = 0 slice
    for r in range(1, 5):
        assert v.coefficient((0, r)) == 0
    assert v.coefficient((1, 1)) == -zeta(2)


def test_h_exact_values():
    assert h_exact(HIndex(1, 1)) == zeta(2)
    assert h_exact(HIndex(2, 1)) == zeta(3)
    assert h_exact(HIndex(1, 2)) == zeta(3)
    # zeta(1,1,2) = zeta(4)/4 via H(1,3)? weight check only here
    for k in range(1, 4):
        for r in range(1, 4):
            val = h_exact(HIndex(k, r))
            assert val.weight() == k + r


def test_h_exact_known_weight4():
    # H(3,1) = zeta(4), H(2,2) = zeta(1,3) = zeta(4)/4
    assert h_exact(HIndex(3, 1)) == zeta(4)
    assert h_exact(HIndex(2, 2)) == zeta(4) * Fraction(1, 4)


def test_tornheim_trivial():
    assert h_tornheim(HIndex(1, 1), 2) == Fraction(5, 4)
    # r = 1 collapses to a partial zeta(k+1)
    assert h_tornheim(HIndex(2, 1), 3) == 1 + Fraction(1, 8) + Fraction(1, 27)


def test_tornheim_cost_guard():
    with pytest.raises(ValueError):
        h_tornheim(HIndex(2, 5), 3)


def test_tornheim_monotone_and_bounded():
    vals = [h_tornheim(HIndex(2, 2), N) for N in (2, 4, 8, 16, 32)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    bound = tornheim_tail_bound(HIndex(2, 2), 32)
    assert bound > 0
    assert vals[-1] + bound > vals[-1]
