"""Arbitrary-precision floating evaluation with tracked error bounds.

Provides zeta(k) by direct summation plus Euler-Maclaurin correction, the
accelerated evaluation of the special MZV combinations Z(k, r), and numeric
evaluation of zeta-symbol polynomials.  Every public routine returns a
BigFloat carrying a conservative bound that dominates truncation and
rounding error; if the certified bound misses the requested precision the
routine fails loudly instead of returning an uncertified value.

The Z(k, r) tail works on the single-sum form sum_n c_r(n)/n^k with
c_r(n) = [t^r] binom(n+t-1, n-1)^2.  Writing the generalized harmonic
numbers entering log c_r(n) as (log n + gamma) resp. zeta(j) minus explicit
Euler-Maclaurin 1/n-expansions reduces the tail to sums of log^a(n)/n^b,
each of which is again summed by Euler-Maclaurin with exact integrals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath
from mpmath import mp

from .mzv import ZIndex, _as_z
from .rings import ZetaPoly, bernoulli

DEFAULT_PRECISION = 30
DEFAULT_Z_LIMIT = 10 ** 4
DEFAULT_EM_DEPTH = 8


class PrecisionError(ArithmeticError):
    """Raised when a certified error bound misses the requested precision."""


def _eps():
    return mp.mpf(10) ** (2 - mp.dps)


@dataclass(frozen=True)
class BigFloat:
    """Floating value plus a bound dominating all accumulated error."""

    value: mpmath.mpf
    error: mpmath.mpf

    def __post_init__(self):
        if self.error < 0:
            raise ValueError("error bound must be nonnegative")

    @classmethod
    def exact(cls, x) -> "BigFloat":
        if isinstance(x, Fraction):
            v = mp.mpf(x.numerator) / mp.mpf(x.denominator)
            return cls(v, abs(v) * _eps())
        return cls(mp.mpf(x), mp.mpf(0) if isinstance(x, int) else abs(mp.mpf(x)) * _eps())

    def __add__(self, other: "BigFloat") -> "BigFloat":
        other = _as_bigfloat(other)
        v = self.value + other.value
        return BigFloat(v, self.error + other.error + abs(v) * _eps())

    __radd__ = __add__

    def __neg__(self) -> "BigFloat":
        return BigFloat(-self.value, self.error)

    def __sub__(self, other: "BigFloat") -> "BigFloat":
        return self + (-_as_bigfloat(other))

    def __rsub__(self, other) -> "BigFloat":
        return _as_bigfloat(other) + (-self)

    def __mul__(self, other: "BigFloat") -> "BigFloat":
        other = _as_bigfloat(other)
        v = self.value * other.value
        err = (abs(self.value) * other.error + abs(other.value) * self.error
               + self.error * other.error + abs(v) * _eps())
        return BigFloat(v, err)

    __rmul__ = __mul__

    def __truediv__(self, other: "BigFloat") -> "BigFloat":
        other = _as_bigfloat(other)
        denom = abs(other.value) - other.error
        if denom <= 0:
            raise ZeroDivisionError("divisor interval contains zero")
        v = self.value / other.value
        err = (self.error + abs(v) * other.error) / denom + abs(v) * _eps()
        return BigFloat(v, err)

    def __pow__(self, n: int) -> "BigFloat":
        out = BigFloat(mp.mpf(1), mp.mpf(0))
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self) -> "BigFloat":
        return BigFloat(abs(self.value), self.error)

    def agrees_with(self, other: "BigFloat", tol) -> bool:
        other = _as_bigfloat(other)
        return abs(self.value - other.value) <= mp.mpf(tol) + self.error + other.error

    def __repr__(self) -> str:
        return f"BigFloat({mp.nstr(self.value, 20)} +/- {mp.nstr(self.error, 3)})"


def _as_bigfloat(x) -> BigFloat:
    if isinstance(x, BigFloat):
        return x
    return BigFloat.exact(x)


def _rising(k: int, m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out *= k + i
    return out


def _frac_mpf(x: Fraction):
    return mp.mpf(x.numerator) / mp.mpf(x.denominator)


# ---------------------------------------------------------------------------
# zeta(k) by Euler-Maclaurin
# ---------------------------------------------------------------------------

_zeta_cache: dict = {}


def zeta_numeric(k: int, precision: int = DEFAULT_PRECISION) -> BigFloat:
    """zeta(k) with a certified error bound below 10^(-precision).

    Direct sum to a small N plus Euler-Maclaurin corrections; the remainder
    of the correction series for x^(-k) is dominated by its first omitted
    term, bounded here with an extra factor 4.
    """
    if k < 2:
        raise ValueError("zeta_numeric needs k >= 2")
    key = (k, precision)
    if key in _zeta_cache:
        return _zeta_cache[key]
    with mp.workdps(precision + 15):
        N = 32
        target = mp.mpf(10) ** (-(precision + 3))
        total = mp.fsum(mp.mpf(n) ** (-k) for n in range(1, N + 1))
        total += mp.mpf(N) ** (1 - k) / (k - 1) - mp.mpf(N) ** (-k) / 2
        bound = None
        for i in range(1, 80):
            term = (_frac_mpf(bernoulli(2 * i) * _rising(k, 2 * i - 1)
                              / _factorial(2 * i))
                    * mp.mpf(N) ** (-k - 2 * i + 1))
            nxt = (_frac_mpf(abs(bernoulli(2 * i + 2)) * _rising(k, 2 * i + 1)
                             / _factorial(2 * i + 2))
                   * mp.mpf(N) ** (-k - 2 * i - 1))
            total += term
            bound = 4 * nxt
            if bound < target:
                break
            if nxt > abs(term):  # corrections started diverging
                total -= term
                bound = 4 * abs(term)
                break
        err = bound + (N + 90) * abs(total) * _eps()
        if err > mp.mpf(10) ** (-precision):
            raise PrecisionError(f"zeta({k}): achieved bound {mp.nstr(err, 5)}")
        out = BigFloat(+total, +err)
    _zeta_cache[key] = out
    return out


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


_euler_cache: dict = {}


def euler_gamma(dps: int):
    """Euler's constant at the given working precision (cached)."""
    if dps not in _euler_cache:
        with mp.workdps(dps + 10):
            _euler_cache[dps] = +mp.euler
    return _euler_cache[dps]


# ---------------------------------------------------------------------------
# Euler-Maclaurin for sums of log^a(n) / n^b
# ---------------------------------------------------------------------------

def _log_power_integral(a: int, b: int, N, logN):
    # int_N^infty log^a x / x^b dx; exact recursion in a
    out = mp.mpf(N) ** (1 - b) / (b - 1)
    for j in range(1, a + 1):
        out = mp.mpf(N) ** (1 - b) * logN ** j / (b - 1) + j * out / (b - 1)
    return out


def _derivative_table(a: int, b: int, max_order: int):
    # f = log^a x * x^(-b); f^(m) = x^(-b-m) * sum_j c_j log^j x, exact c_j
    tables = [{a: Fraction(1)}]
    beta = b
    for _ in range(max_order):
        cur = tables[-1]
        nxt: dict = {}
        for j, c in cur.items():
            if j > 0:
                nxt[j - 1] = nxt.get(j - 1, Fraction(0)) + j * c
            nxt[j] = nxt.get(j, Fraction(0)) - beta * c
        tables.append(nxt)
        beta += 1
    return tables


def _log_power_tail(a: int, b: int, N, depth: int):
    """(value, bound) for sum_{n > N} log^a(n) / n^b via Euler-Maclaurin."""
    logN = mp.log(N)
    powers = [logN ** j for j in range(a + 1)]

    def f_deriv(tables, m):
        val = mp.mpf(0)
        for j, c in tables[m].items():
            val += _frac_mpf(c) * powers[j]
        return val * mp.mpf(N) ** (-b - m)

    tables = _derivative_table(a, b, 2 * depth + 2)
    total = _log_power_integral(a, b, N, logN) - f_deriv(tables, 0) / 2
    for i in range(1, depth + 1):
        total -= _frac_mpf(bernoulli(2 * i) / _factorial(2 * i)) * f_deriv(tables, 2 * i - 1)
    omitted = (_frac_mpf(abs(bernoulli(2 * depth + 2)) / _factorial(2 * depth + 2))
               * abs(f_deriv(tables, 2 * depth + 1)))
    return total, 4 * omitted


# ---------------------------------------------------------------------------
# Z(k, r) evaluation
# ---------------------------------------------------------------------------

def _series_trunc_mul(x: dict, y: dict, mm: int) -> dict:
    out: dict = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            m = m1 + m2
            if m > mm:
                continue
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def _asymptotic_e3(r: int, depth: int, mm: int):
    """Coefficients of t^j, j <= r, of the 1/n-correction factor E3.

    E3 = exp(-2 t psi_c(n) - 2 sum_{j>=2} (-1)^(j-1) tail_j(n) t^j / j) where
    psi_c and tail_j are the Euler-Maclaurin 1/n-expansions of
    (log n + gamma) - H^(1)_{n-1} and zeta(j) - H^(j)_{n-1}; all coefficients
    are exact rationals.
    """
    expo = [dict() for _ in range(r + 1)]
    if r >= 1:
        psi = {1: Fraction(1, 2)}
        for i in range(1, depth + 1):
            if 2 * i <= mm:
                psi[2 * i] = bernoulli(2 * i) / (2 * i)
        expo[1] = {m: -2 * c for m, c in psi.items()}
    for j in range(2, r + 1):
        tail = {j - 1: Fraction(1, j - 1), j: Fraction(1, 2)}
        for i in range(1, depth + 1):
            m = j + 2 * i - 1
            if m <= mm:
                tail[m] = tail.get(m, Fraction(0)) + \
                    bernoulli(2 * i) * _rising(j, 2 * i - 1) / _factorial(2 * i)
        sign = Fraction(2 * (-1) ** j, j)
        expo[j] = {m: sign * c for m, c in tail.items() if m <= mm}
    # exp via c_m = (1/m) sum_j j * L_j * c_{m-j} on the t-grading
    e3 = [dict() for _ in range(r + 1)]
    e3[0] = {0: Fraction(1)}
    for m in range(1, r + 1):
        acc: dict = {}
        for j in range(1, m + 1):
            if not expo[j]:
                continue
            prod = _series_trunc_mul(expo[j], e3[m - j], mm)
            for mm_, c in prod.items():
                acc[mm_] = acc.get(mm_, Fraction(0)) + j * c
        e3[m] = {mm_: c / m for mm_, c in acc.items() if c != 0}
    return e3


def _even_zeta_exp_coeffs(r: int, dps: int):
    """[t^j] exp(2 sum_{j>=2} (-1)^(j-1) zeta(j) t^j / j) for j <= r, in mpf."""
    L = [mp.mpf(0)] * (r + 1)
    for j in range(2, r + 1):
        z = zeta_numeric(j, dps).value
        L[j] = 2 * (-1) ** (j - 1) * z / j
    c = [mp.mpf(0)] * (r + 1)
    c[0] = mp.mpf(1)
    for m in range(1, r + 1):
        acc = mp.mpf(0)
        for j in range(2, m + 1):
            acc += j * L[j] * c[m - j]
        c[m] = acc / m
    return c


def _z_tail(k: int, r: int, N: int, depth: int):
    """(value, em_bound) for sum_{n > N} c_r(n) / n^k at the current dps."""
    mm = 2 * depth + 6
    e3 = _asymptotic_e3(r, depth, mm)
    e2 = _even_zeta_exp_coeffs(r, mp.dps - 10)
    gamma = euler_gamma(mp.dps)
    tcache: dict = {}

    def log_tail(a: int, b: int):
        if (a, b) not in tcache:
            tcache[(a, b)] = _log_power_tail(a, b, N, depth)
        return tcache[(a, b)]

    total = mp.mpf(0)
    embound = mp.mpf(0)
    for i2 in range(r + 1):
        if e2[i2] == 0 and i2 > 0:
            continue
        for i3 in range(r + 1 - i2):
            i1 = r - i2 - i3
            base = e2[i2] * mp.mpf(2) ** i1 / _factorial(i1)
            for a in range(i1 + 1):
                const = base * comb(i1, a) * gamma ** (i1 - a)
                for m, cm in e3[i3].items():
                    tv, tb = log_tail(a, k + m)
                    w = const * _frac_mpf(cm)
                    total += w * tv
                    embound += abs(w) * tb
    return total, embound


_z_cache: dict = {}


def z_numeric(idx, precision: int = DEFAULT_PRECISION,
              N: int = DEFAULT_Z_LIMIT, depth: int = DEFAULT_EM_DEPTH) -> BigFloat:
    """Z(k, r) with a certified bound, by direct summation to N plus the
    harmonic-asymptotics accelerated tail."""
    idx = _as_z(idx)
    key = (idx.k, idx.r, precision, N, depth)
    if key in _z_cache:
        return _z_cache[key]
    out = _z_batch([(idx.k, idx.r)], precision, N, depth)[(idx.k, idx.r)]
    return out


def precompute_z(pairs, precision: int = DEFAULT_PRECISION,
                 N: int = DEFAULT_Z_LIMIT, depth: int = DEFAULT_EM_DEPTH) -> None:
    """Warm the Z cache for many (k, r) pairs with one shared direct-sum pass."""
    todo = [(k, r) for (k, r) in pairs
            if (k, r, precision, N, depth) not in _z_cache]
    if todo:
        _z_batch(sorted(set(todo)), precision, N, depth)


def _z_batch(pairs, precision: int, N: int, depth: int) -> dict:
    rmax = max(r for _, r in pairs)
    ks = sorted({k for k, _ in pairs})
    dps_work = precision + 20
    out = {}
    with mp.workdps(dps_work):
        sums = {kr: mp.mpf(0) for kr in pairs}
        c = [mp.mpf(1)] + [mp.mpf(0)] * rmax
        for n in range(1, N + 1):
            inv = mp.mpf(1) / n
            invpows = {}
            p = mp.mpf(1)
            last = 0
            for k in ks:
                for _ in range(k - last):
                    p *= inv
                last = k
                invpows[k] = p
            for (k, r) in pairs:
                if c[r] != 0:
                    sums[(k, r)] += c[r] * invpows[k]
            # extend prod_{0<m<n+1}: multiply by (1 + 2t/n + t^2/n^2)
            inv2 = inv * inv
            for j in range(min(rmax, 2 * n), 0, -1):
                c[j] = c[j] + 2 * inv * c[j - 1] + (inv2 * c[j - 2] if j >= 2 else 0)
        for (k, r) in pairs:
            t1, b1 = _z_tail(k, r, N, depth)
            t2, b2 = _z_tail(k, r, N, depth + 2)
            asym_bound = 2 * abs(t2 - t1) + b1 + b2
            value = sums[(k, r)] + t2
            rounding = (N + 50) * (rmax + 6) * (abs(value) + 1) * _eps()
            err = asym_bound + rounding
            if err > mp.mpf(10) ** (-precision):
                raise PrecisionError(
                    f"Z({k},{r}): achieved bound {mp.nstr(err, 5)} at N={N}, depth={depth}")
            out[(k, r)] = BigFloat(+value, +err)
            _z_cache[(k, r, precision, N, depth)] = out[(k, r)]
    return out


# ---------------------------------------------------------------------------
# zeta-symbol polynomial evaluation
# ---------------------------------------------------------------------------

def eval_zeta_poly(p: ZetaPoly, precision: int = DEFAULT_PRECISION) -> BigFloat:
    """Numeric value of an exact zeta-symbol polynomial."""
    with mp.workdps(precision + 15):
        if p.is_zero:
            return BigFloat(mp.mpf(0), mp.mpf(0))
        total = BigFloat(mp.mpf(0), mp.mpf(0))
        for mono, coeff in p.terms.items():
            term = BigFloat.exact(coeff)
            for idx, e in mono.exponents.items():
                term = term * zeta_numeric(idx, precision + 5) ** e
            total = total + term
        return total
