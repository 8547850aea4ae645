"""The open-string side: Taylor coefficients of the Veneziano gamma-ratio,
the coefficients eta_{n,k} built from the MZVs H(k, r), the two-point
Laurent polynomials b_l(T) by two independent exact routes, and the
pole-cleared generating-series identity with the sine-ratio prefactor.

pi never appears as a symbol: sin(pi x)/pi = x - z2 x^3 + ... is a series
with z2-coefficients (pi^2 = 6 zeta(2)), which keeps every identity inside
the graded zeta-symbol ring.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .closed import double_factorial_odd, gamma_coeff  # noqa: F401 (re-used by callers)
from .laurent import LaurentPoly
from .mzv import HIndex, h_exact, veneziano_series  # noqa: F401 (spec surface)
from .rings import ZetaMonomial, ZetaPoly, zeta
from .series import TruncSeries, linear_power, series_exp


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# eta coefficients
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def eta_coeff(n: int, k: int) -> ZetaPoly:
    """eta_{n,k} = sum_{r=-1}^{n-k-1} (-2)^(r+2) binom(k+n-r-3, 2k-2)
    H(k+n-r-2, r+2), an exact weight n+k element (n >= k > 0)."""
    if not (n >= k > 0):
        raise ValueError("n >= k > 0 required")
    total = ZetaPoly.zero()
    for r in range(-1, n - k):
        c = Fraction((-2) ** (r + 2) * comb(k + n - r - 3, 2 * k - 2))
        if c == 0:
            continue
        total = total + h_exact(HIndex(k + n - r - 2, r + 2)) * c
    return total


def eta_table(max_weight: int) -> dict:
    return {(n, k): eta_coeff(n, k)
            for n in range(1, max_weight) for k in range(1, n + 1)
            if n + k <= max_weight}


# ---------------------------------------------------------------------------
# Laurent polynomials b_l(T)
# ---------------------------------------------------------------------------

def b_laurent(l: int, route: str = "generating") -> LaurentPoly:
    """Two-point open Laurent polynomial b_l(T), exact over the symbol ring.

    'generating' extracts l! [s^l] of
        e^(sT/6) e^(-z2 s/T) sum_n (T^n/(2n+1)!!
            + sum_{k=1}^n (-1)^(k-1) (2k-3)!! eta_{n,k}/T^k) (-s/2)^n;
    'direct' evaluates the closed formula with H(2a+b+1, e) and z2 powers.
    Both routes agree exactly.
    """
    if l < 0:
        raise ValueError("l >= 0 required")
    if route == "generating":
        z2 = zeta(2)
        out = LaurentPoly("T")
        for a in range(l + 1):
            for b in range(l + 1 - a):
                n = l - a - b
                pref = (Fraction(_factorial(l),
                                 _factorial(a) * _factorial(b) * 6 ** a)
                        * Fraction(-1, 2) ** n * Fraction(-1) ** b)
                scalar = (z2 ** b) * pref
                bracket = LaurentPoly(
                    "T", {n: Fraction(1, double_factorial_odd(2 * n + 1))})
                for k in range(1, n + 1):
                    sign = (-1) ** (k - 1) * double_factorial_odd(2 * k - 3)
                    bracket = bracket + LaurentPoly(
                        "T", {-k: eta_coeff(n, k) * Fraction(sign)})
                out = out + bracket.shift(a - b).map_coefficients(
                    lambda c: scalar * c)
        return out
    if route == "direct":
        z2 = zeta(2)
        out = LaurentPoly("T")
        for a in range(l + 1):
            for b in range(l + 1 - a):
                for c in range(l + 1 - a - b):
                    for d in range(l + 1 - a - b - c):
                        e = l - a - b - c - d
                        base = Fraction(_factorial(l) * (-1) ** (b + d),
                                        _factorial(a) * _factorial(b)
                                        * _factorial(c) * _factorial(d))
                        if e == 0:
                            coef = (z2 ** d) * (base / (6 ** c * (2 * a + b + 1)))
                            out = out + LaurentPoly("T", {l - 2 * d: coef})
                        else:
                            coef = ((z2 ** d) * h_exact(HIndex(2 * a + b + 1, e))
                                    * (base * _factorial(2 * a + b)
                                       / (2 ** (2 * a + b) * 6 ** c)))
                            out = out + LaurentPoly("T", {c - a - d - 1: coef})
        return out
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# sine-ratio unit series (all with constant term 1)
# ---------------------------------------------------------------------------

def _sine_coeff(m: int) -> ZetaPoly:
    # [x^(2m+1)] sin(pi x)/pi = (-1)^m pi^(2m) / (2m+1)! with pi^2 = 6 z2
    c = Fraction((-1) ** m * 6 ** m, _factorial(2 * m + 1))
    return ZetaPoly({ZetaMonomial({2: m}): c})


def sine_unit_series(order: int) -> dict:
    """The unit power series extracted from the sine prefactors, with
    S(x) := sin(pi x)/pi:

      A = S(X+Y)/(X+Y),  B = S(Y-X)/(Y-X),  C = S(2X)/(2X),
      D = (S(X+Y) - S(Y-X)) / (2X),  E = (S(X+Y) + S(X-Y)) / (2X).
    """
    out = {name: TruncSeries(2, order) for name in "ABCDE"}
    smax = order // 2
    for m in range(smax + 1):
        cm = _sine_coeff(m)
        out["A"] = out["A"] + _scaled_form_power(1, 1, 2 * m, order, cm)
        out["B"] = out["B"] + _scaled_form_power(-1, 1, 2 * m, order, cm)
        out["C"] = out["C"] + _scaled_form_power(2, 0, 2 * m, order, cm)
        # (a^(2m+1) - b^(2m+1)) / (a - b) with a = X+Y, b = Y-X
        d_term = TruncSeries(2, order)
        e_term = TruncSeries(2, order)
        for i in range(2 * m + 1):
            d_term = d_term + (_form_power(1, 1, i, order)
                               * _form_power(-1, 1, 2 * m - i, order))
            # (a^(2m+1) + b^(2m+1)) / (a + b) with a = X+Y, b = X-Y
            e_term = e_term + (_form_power(1, 1, 2 * m - i, order)
                               * _form_power(1, -1, i, order)).scale(Fraction((-1) ** i))
        out["D"] = out["D"] + d_term.scale(cm)
        out["E"] = out["E"] + e_term.scale(cm)
    return out


@lru_cache(maxsize=None)
def _form_power(cx: int, cy: int, n: int, order: int) -> TruncSeries:
    return TruncSeries(2, order, linear_power(cx, cy, n))


def _scaled_form_power(cx, cy, n, order, scalar) -> TruncSeries:
    return TruncSeries(2, order,
                       {e: scalar * c for e, c in linear_power(cx, cy, n).items()})


# ---------------------------------------------------------------------------
# pole-cleared generating series and the identity check
# ---------------------------------------------------------------------------

def vop_shifted_series(order: int) -> TruncSeries:
    """Veneziano gamma-ratio at (2X, -X-Y, Y-X) as a series in (X, Y):
    exp(sum_{n>=2} (-1)^n zeta(n)/n ((2X)^n + (-X-Y)^n - (X-Y)^n))."""
    expo = TruncSeries(2, order)
    for m in range(2, order + 1):
        poly = dict(linear_power(2, 0, m))
        for e, c in linear_power(-1, -1, m).items():
            poly[e] = poly.get(e, Fraction(0)) + c
        for e, c in linear_power(1, -1, m).items():
            poly[e] = poly.get(e, Fraction(0)) - c
        sign = Fraction(1, m) if m % 2 == 0 else Fraction(-1, m)
        zp = zeta(m) * sign
        expo = expo + TruncSeries(2, order, {e: zp * c for e, c in poly.items() if c})
    return series_exp(expo)


def wop_pole_cleared(order: int) -> TruncSeries:
    """X (X+Y) (Y-X) * W_open as a genuine power series:
    1 + sum_{n>=k>0} eta_{n,k} X^(n-k) Y^(2k-2) (Y^2 - X^2)."""
    out = TruncSeries(2, order, {(0, 0): ZetaPoly.one()})
    for n in range(1, order):
        for k in range(1, n + 1):
            if n + k > order:
                continue
            g = eta_coeff(n, k)
            if g.is_zero:
                continue
            out = out + TruncSeries(2, order,
                                    {(n - k, 2 * k): g, (n - k + 2, 2 * k - 2): -g})
    return out


def wop_identity_check(order: int) -> dict:
    """Pole-cleared identity: with N := X(X+Y)(Y-X) W_open and the unit
    series B, D of sine_unit_series, N * B = D * V_open(2X, -X-Y, Y-X),
    compared as exact series over the symbol ring."""
    from .reporting import report

    units = sine_unit_series(order)
    lhs = wop_pole_cleared(order) * units["B"]
    rhs = units["D"] * vop_shifted_series(order)
    ok = lhs == rhs
    mism = []
    if not ok:
        for e in sorted(set(lhs.coeffs) | set(rhs.coeffs)):
            if lhs.coefficient(e) != rhs.coefficient(e):
                mism.append(e)
    # the non-pole expansion carries only even powers of Y
    odd_y = [e for e in wop_pole_cleared(order).coeffs if e[1] % 2 == 1]
    return report("wop-identity", {"order": order},
                  "eta-table pole-cleared series * B",
                  "D * gamma-ratio at (2X,-X-Y,Y-X)",
                  "exact" if ok else f"mismatch at {mism[:4]}",
                  ok and not odd_y,
                  detail={"odd_y_terms": len(odd_y)})
