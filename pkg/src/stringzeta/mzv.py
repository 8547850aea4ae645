"""Special multiple zeta value families Z(k, r) and H(k, r).

Convention for nested sums (increasing): zeta(k_1, ..., k_r) =
sum over 0 < n_1 < ... < n_r of n_1^(-k_1) ... n_r^(-k_r).

Z(k, r) is the combination sum_{(r_1..r_j) composition of r, parts in {1,2}}
2^(#parts equal to 1) * zeta(r_1, ..., r_j, k), equivalently the coefficient
of t^r in sum_n binom(n+t-1, n-1)^2 / n^k.  H(k, r) = zeta(1, ..., 1, k+1)
with r-1 leading ones, which reduces to a weight k+r polynomial in single
zeta values; the exact reduction is read off the Taylor expansion of the
gamma-ratio generating function implemented in veneziano_series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rings import ZetaPoly, zeta
from .series import TruncSeries, linear_power, series_exp


@dataclass(frozen=True)
class ZIndex:
    k: int
    r: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("Z(k, r) needs k >= 2 for convergence")
        if self.r < 0:
            raise ValueError("Z(k, r) needs r >= 0")

    @property
    def weight(self) -> int:
        return self.k + self.r


@dataclass(frozen=True)
class HIndex:
    k: int
    r: int

    def __post_init__(self):
        if self.k < 1 or self.r < 1:
            raise ValueError("H(k, r) needs k, r >= 1")

    @property
    def weight(self) -> int:
        return self.k + self.r


def _as_z(idx) -> ZIndex:
    return idx if isinstance(idx, ZIndex) else ZIndex(*idx)


def _as_h(idx) -> HIndex:
    return idx if isinstance(idx, HIndex) else HIndex(*idx)


# ---------------------------------------------------------------------------
# Z(k, r): exact truncations
# ---------------------------------------------------------------------------

def z_partial_product(idx, N: int) -> Fraction:
    """Exact partial sum sum_{n<=N} c_r(n) / n^k with
    c_r(n) = [t^r] prod_{0<m<n} (1 + 2t/m + t^2/m^2).

    The product is (prod (1 + t/m))^2, so its log is
    2 sum_j (-1)^(j-1) H_j t^j / j with H_j the generalized harmonic numbers
    of order j at n-1; these are updated incrementally in n.
    """
    idx = _as_z(idx)
    if N < 1:
        raise ValueError("N >= 1 required")
    k, r = idx.k, idx.r
    harm = [Fraction(0)] * (r + 1)  # harm[j] = H^(j)_{n-1}, index 0 unused
    total = Fraction(0)
    for n in range(1, N + 1):
        c = _coeff_from_harmonics(harm, r)
        total += c / Fraction(n) ** k
        for j in range(1, r + 1):
            harm[j] += Fraction(1, n ** j)
    return total


def _coeff_from_harmonics(harm, r: int):
    """[t^r] exp(2 sum_j (-1)^(j-1) harm[j] t^j / j), exact in Fractions."""
    if r == 0:
        return Fraction(1)
    log_coeffs = [Fraction(0)] + [
        2 * (1 if j % 2 == 1 else -1) * harm[j] / j for j in range(1, r + 1)
    ]
    # exp by the derivative recurrence c_m = (1/m) sum_j j L_j c_{m-j}
    c = [Fraction(1)] + [Fraction(0)] * r
    for m in range(1, r + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += j * log_coeffs[j] * c[m - j]
        c[m] = acc / m
    return c[r]


def compositions_12(r: int):
    """All compositions of r with parts in {1, 2}, in a fixed order."""
    if r == 0:
        return [()]
    out = []
    if r >= 1:
        out.extend((1,) + c for c in compositions_12(r - 1))
    if r >= 2:
        out.extend((2,) + c for c in compositions_12(r - 2))
    return out


def z_bruteforce(idx, N: int) -> Fraction:
    """Exact truncation of the defining nested sums of Z(k, r).

    Enumerates compositions of r with parts in {1, 2}, weights each by
    2^(#parts equal to 1), and truncates every nested sum at outer index N.
    """
    idx = _as_z(idx)
    if N < 1:
        raise ValueError("N >= 1 required")
    k, r = idx.k, idx.r
    total = Fraction(0)
    for parts in compositions_12(r):
        weight = 2 ** sum(1 for p in parts if p == 1)
        total += weight * _nested_sum(parts, k, N)
    return total


def _nested_sum(parts, k: int, N: int) -> Fraction:
    # w[m] = sum over 0 < n_1 < ... < n_j = m of prod n_i^(-r_i)
    w = [Fraction(1)] * (N + 1)
    for r_i in parts:
        prefix = Fraction(0)
        new = [Fraction(0)] * (N + 1)
        for m in range(1, N + 1):
            new[m] = prefix
            prefix += w[m] * Fraction(1, m ** r_i)
        w = new
    return sum((w[n] * Fraction(1, n ** k) for n in range(1, N + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# H(k, r): exact reduction to single zetas via the gamma-ratio series
# ---------------------------------------------------------------------------

def veneziano_series(order: int) -> TruncSeries:
    """Taylor series in (s, t) of Gamma(1+s)Gamma(1+t)/Gamma(1+s+t),
    truncated at total degree `order`, over the zeta-symbol ring.

    Via Euler's log-Gamma expansion this is
    exp(sum_{n>=2} (-1)^n zeta(n)/n * (s^n + t^n - (s+t)^n)),
    and the coefficient of s^k t^r equals (-1)^(k+r-1) H(k, r).
    """
    if order < 1:
        raise ValueError("order >= 1 required")
    expo = TruncSeries(2, order)
    for n in range(2, order + 1):
        poly = {}
        poly[(n, 0)] = Fraction(1)
        poly[(0, n)] = poly.get((0, n), Fraction(0)) + 1
        for e, c in linear_power(1, 1, n).items():
            poly[e] = poly.get(e, Fraction(0)) - c
        sign = Fraction(1, n) if n % 2 == 0 else Fraction(-1, n)
        zp = zeta(n) * sign
        expo = expo + TruncSeries(2, order, {e: zp * c for e, c in poly.items() if c})
    return series_exp(expo)


_H_TIERS = (8, 12, 16, 20, 24)


@lru_cache(maxsize=None)
def _veneziano_cached(order: int) -> TruncSeries:
    return veneziano_series(order)


def h_exact(idx) -> ZetaPoly:
    """H(k, r) as an exact homogeneous weight k+r polynomial in zeta symbols."""
    idx = _as_h(idx)
    w = idx.weight
    order = next((t for t in _H_TIERS if t >= w), w)
    series = _veneziano_cached(order)
    c = series.coefficient((idx.k, idx.r))
    sign = 1 if (idx.k + idx.r - 1) % 2 == 0 else -1
    if isinstance(c, int):  # absent coefficient
        return ZetaPoly.zero()
    return c * sign


# ---------------------------------------------------------------------------
# Mordell-Tornheim oracle for H(k, r)
# ---------------------------------------------------------------------------

def h_tornheim(idx, N: int) -> Fraction:
    """Exact truncated Mordell-Tornheim sum
    (1/r!) sum_{n_1..n_r <= N} 1 / (n_1 ... n_r (n_1 + ... + n_r)^k).

    Cost is N^r rational operations; r <= 4 is enforced since this is an
    oracle, not a production path.
    """
    idx = _as_h(idx)
    if idx.r > 4:
        raise ValueError("h_tornheim cost guard: r <= 4")
    if N < 1:
        raise ValueError("N >= 1 required")
    k, r = idx.k, idx.r
    # fold one index at a time: counts[s] = sum over tuples with n_1+..+n_j = s
    # of prod 1/n_i
    counts = {0: Fraction(1)}
    for _ in range(r):
        new = {}
        for s, c in counts.items():
            for n in range(1, N + 1):
                key = s + n
                add = c * Fraction(1, n)
                cur = new.get(key)
                new[key] = add if cur is None else cur + add
        counts = new
    total = sum((c / Fraction(s) ** k for s, c in counts.items()), Fraction(0))
    fact = 1
    for i in range(2, r + 1):
        fact *= i
    return total / fact


def tornheim_tail_bound(idx, N: int) -> Fraction:
    """Crude rigorous bound on the Mordell-Tornheim truncation error.

    By AM-GM, (n_1+...+n_r)^k >= r^k prod n_i^(k/r), so the region where some
    n_i exceeds N contributes at most
    r * zeta(1+k/r)^(r-1) * tail_{n>N} n^(-1-k/r) / r^k, with
    tail_{n>N} n^(-1-a) <= N^(-a)/a + N^(-1-a) and zeta(1+a) <= 2 + 1/a.
    """
    import math

    idx = _as_h(idx)
    k, r = idx.k, idx.r
    a = Fraction(k, r)
    zeta_bound = 2 + Fraction(r, k)
    # N^(-a) rounded up in binary, so the bound stays rigorous
    na = Fraction(math.ceil(N ** (-float(a)) * 2 ** 48), 2 ** 48)
    tail = na / a + na / N
    return r * zeta_bound ** (r - 1) * tail / Fraction(r) ** k
