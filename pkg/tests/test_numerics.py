from fractions import Fraction

import pytest
from mpmath import mp

from stringzeta.mzv import ZIndex, z_bruteforce
from stringzeta.numerics import (
    BigFloat,
    PrecisionError,
    eval_zeta_poly,
    precompute_z,
    z_numeric,
    zeta_numeric,
)
from stringzeta.rings import zeta


def test_zeta_2_matches_pi_squared_over_six():
    z2 = zeta_numeric(2, 30)
    with mp.workdps(45):
        ref = mp.pi ** 2 / 6
        assert abs(z2.value - ref) < mp.mpf(10) ** -30
    assert z2.error < mp.mpf(10) ** -30


def test_zeta_3():
    z3 = zeta_numeric(3, 30)
    with mp.workdps(40):
        ref = mp.mpf("1.2020569031595942853997381615114")
        assert abs(z3.value - ref) < mp.mpf(10) ** -28


def test_zeta_large_argument_tail():
    z40 = zeta_numeric(40, 25)
    assert abs(z40.value - 1) < 1e-12


def test_zeta_em_two_depths_agree():
    a = zeta_numeric(5, 25)
    b = zeta_numeric(5, 40)
    assert abs(a.value - b.value) <= a.error + b.error


def test_z_r0_reduces_to_zeta():
    for k in (2, 3, 7):
        z = z_numeric(ZIndex(k, 0), 25, N=500, depth=8)
        ref = zeta_numeric(k, 30)
        assert z.agrees_with(ref, mp.mpf(10) ** -24)


def test_z31_closed_form():
    # Z(3,1) = 2 zeta(1,3) = zeta(4)/2 = pi^4/180
    z = z_numeric(ZIndex(3, 1), 28, N=2000, depth=8)
    with mp.workdps(50):
        ref = mp.pi ** 4 / 180
        assert abs(z.value - ref) < mp.mpf(10) ** -28


def test_z21_is_twice_zeta3():
    z = z_numeric(ZIndex(2, 1), 25, N=4000, depth=8)
    ref = zeta_numeric(3, 30)
    with mp.workdps(40):
        assert abs(z.value - 2 * ref.value) < mp.mpf(10) ** -24
    assert abs(float(z.value) - 2.4041138063) < 1e-9


@pytest.mark.parametrize("k,r", [(3, 2), (5, 3), (12, 8)])
def test_z_doubling_stability(k, r):
    a = z_numeric(ZIndex(k, r), 25, N=600, depth=8)
    b = z_numeric(ZIndex(k, r), 25, N=1200, depth=8)
    assert abs(a.value - b.value) <= a.error + b.error


@pytest.mark.parametrize("k,r", [(3, 1), (4, 2), (3, 3)])
def test_z_against_bruteforce(k, r):
    exact = z_bruteforce(ZIndex(k, r), 300)
    z = z_numeric(ZIndex(k, r), 25, N=3000, depth=8)
    # the exact truncation is below the full value by its own tail
    with mp.workdps(40):
        diff = z.value - mp.mpf(exact.numerator) / mp.mpf(exact.denominator)
        assert diff > 0
        # crude tail estimate (2 log N + 2)^r / (r! (k-1) N^(k-1))
        est = (2 * mp.log(300) + 2) ** r / (mp.factorial(r) * (k - 1) * 300 ** (k - 1))
        assert diff < 3 * est


def test_precision_failure_is_loud():
    with pytest.raises(PrecisionError):
        z_numeric(ZIndex(2, 4), 30, N=50, depth=2)


def test_eval_zeta_poly():
    v = eval_zeta_poly(2 * zeta(3), 25)
    assert abs(float(v.value) - 2.4041138063) < 1e-9
    v2 = eval_zeta_poly(zeta(2), 25)
    assert abs(float(v2.value) - 1.6449340668) < 1e-9
    z = eval_zeta_poly(zeta(3) - zeta(3), 25)
    assert z.value == 0 and z.error == 0


def test_eval_even_normalization_consistent():
    # zeta(4) evaluated through the z2^2 normal form
    v = eval_zeta_poly(zeta(4), 30)
    with mp.workdps(45):
        assert abs(v.value - mp.pi ** 4 / 90) < mp.mpf(10) ** -28


def test_bigfloat_propagation():
    with mp.workdps(40):
        a = BigFloat(mp.mpf(2), mp.mpf("1e-30"))
        b = BigFloat(mp.mpf(3), mp.mpf("1e-30"))
        c = a * b + a
        assert abs(c.value - 8) < 1e-20
        assert c.error < 1e-28
        assert c.error > 0


def test_precompute_shares_cache():
    precompute_z([(5, 1), (6, 2)], 25, N=400, depth=8)
    z = z_numeric(ZIndex(5, 1), 25, N=400, depth=8)
    assert z.error < mp.mpf(10) ** -25
