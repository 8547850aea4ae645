"""Dense truncated power series in one or two variables.

Coefficients live in any exact commutative ring that supports +, -, * among
themselves and with int/Fraction scalars (in practice Fraction or ZetaPoly).
A series carries an explicit truncation order: every stored exponent tuple
has total degree <= order, binary operations produce order min(a, b), and
multiplication silently discards degrees beyond the truncation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .rings import ZetaPoly


def _is_zero(c) -> bool:
    if isinstance(c, ZetaPoly):
        return c.is_zero
    return c == 0


def _inv_coeff(c):
    if isinstance(c, ZetaPoly):
        return c.inverse()
    if isinstance(c, (int, Fraction)):
        return Fraction(1, 1) / Fraction(c)
    raise TypeError(f"no inverse for coefficient of type {type(c).__name__}")


class TruncSeries:
    """Truncated power series sum_e c_e x^e with total degree |e| <= order."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars: int, order: int, coeffs=None):
        if nvars not in (1, 2):
            raise ValueError("only 1 or 2 variables are supported")
        if order < 0:
            raise ValueError("order must be >= 0")
        self.nvars = nvars
        self.order = order
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent tuple {e} has wrong arity")
                if sum(e) > order or _is_zero(c):
                    continue
                clean[e] = c
        self.coeffs = clean

    # -- constructors --------------------------------------------------------
    @classmethod
    def constant(cls, c, nvars: int, order: int) -> "TruncSeries":
        zero = (0,) * nvars
        return cls(nvars, order, {zero: c})

    @classmethod
    def variable(cls, i: int, nvars: int, order: int) -> "TruncSeries":
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, order, {e: Fraction(1)})

    # -- accessors -----------------------------------------------------------
    def coefficient(self, e):
        return self.coeffs.get(tuple(e), 0)

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, 0)

    def truncate(self, order: int) -> "TruncSeries":
        if order >= self.order:
            return self
        return TruncSeries(self.nvars, order,
                           {e: c for e, c in self.coeffs.items() if sum(e) <= order})

    def map_coefficients(self, f) -> "TruncSeries":
        return TruncSeries(self.nvars, self.order,
                           {e: f(c) for e, c in self.coeffs.items()})

    def negate_variable(self, i: int) -> "TruncSeries":
        """Substitute x_i -> -x_i."""
        return TruncSeries(self.nvars, self.order,
                           {e: (c if e[i] % 2 == 0 else -c)
                            for e, c in self.coeffs.items()})

    def substitute_diagonal(self) -> "TruncSeries":
        """For 2 variables: substitute the second variable by the first."""
        if self.nvars != 2:
            raise ValueError("diagonal substitution needs 2 variables")
        out = {}
        for (i, j), c in self.coeffs.items():
            k = (i + j,)
            cur = out.get(k)
            tot = c if cur is None else cur + c
            out[k] = tot
        return TruncSeries(1, self.order, {e: c for e, c in out.items() if not _is_zero(c)})

    # -- ring operations -----------------------------------------------------
    def _binary_order(self, other: "TruncSeries") -> int:
        if self.nvars != other.nvars:
            raise ValueError("mixed number of variables")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.nvars, self.order)
        order = self._binary_order(other)
        out = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        for e, c in other.coeffs.items():
            if sum(e) > order:
                continue
            tot = out.get(e, 0) + c
            if _is_zero(tot):
                out.pop(e, None)
            else:
                out[e] = tot
        return TruncSeries(self.nvars, order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.nvars, self.order,
                           {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.nvars, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        return TruncSeries(self.nvars, self.order,
                           {e: v * c for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        order = self._binary_order(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            if d1 > order:
                continue
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = out.get(e)
                out[e] = prod if cur is None else cur + prod
        return TruncSeries(self.nvars, order,
                           {e: c for e, c in out.items() if not _is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative series power; use inverse()")
        out = TruncSeries.constant(Fraction(1), self.nvars, self.order)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.constant_term()
        inv0 = _inv_coeff(c0)
        zero = (0,) * self.nvars
        rest = {e: c for e, c in self.coeffs.items() if e != zero}
        out = {zero: inv0}
        for d in range(1, self.order + 1):
            for e in _exponents_of_degree(self.nvars, d):
                acc = None
                for f, cf in rest.items():
                    g = tuple(a - b for a, b in zip(e, f))
                    if any(x < 0 for x in g):
                        continue
                    cg = out.get(g)
                    if cg is None:
                        continue
                    term = cf * cg
                    acc = term if acc is None else acc + term
                if acc is not None and not _is_zero(acc):
                    out[e] = -(acc * inv0)
        return TruncSeries(self.nvars, self.order,
                           {e: c for e, c in out.items() if not _is_zero(c)})

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self.scale(_inv_coeff(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.nvars, self.order)
        if self.nvars != other.nvars:
            return False
        order = min(self.order, other.order)
        keys = set(self.coeffs) | set(other.coeffs)
        for e in keys:
            if sum(e) > order:
                continue
            if not _is_zero(self.coeffs.get(e, 0) - other.coeffs.get(e, 0)):
                return False
        return True

    __hash__ = None

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"O(x^{self.order + 1})"
        names = ("x",) if self.nvars == 1 else ("x", "y")
        parts = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            mono = "*".join(f"{names[i]}^{k}" for i, k in enumerate(e) if k)
            c = self.coeffs[e]
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) + f" + O(deg {self.order + 1})"


def _exponents_of_degree(nvars: int, d: int):
    if nvars == 1:
        yield (d,)
    else:
        for i in range(d + 1):
            yield (i, d - i)


def series_exp(f: TruncSeries) -> TruncSeries:
    """exp(f) for a series with zero constant term, truncated at f's order."""
    if not _is_zero(f.constant_term()):
        raise ValueError("series_exp needs zero constant term")
    out = TruncSeries.constant(Fraction(1), f.nvars, f.order)
    power = TruncSeries.constant(Fraction(1), f.nvars, f.order)
    fact = 1
    low = min((sum(e) for e in f.coeffs), default=f.order + 1)
    n = 1
    while n * low <= f.order:
        power = power * f
        fact *= n
        out = out + power.scale(Fraction(1, fact))
        n += 1
    return out


def series_log(f: TruncSeries) -> TruncSeries:
    """log(f) for a series with constant term 1 (inverse convolution route)."""
    one = TruncSeries.constant(Fraction(1), f.nvars, f.order)
    g = f - one
    if not _is_zero(f.constant_term() - Fraction(1)):
        raise ValueError("series_log needs constant term 1")
    out = TruncSeries(f.nvars, f.order)
    power = one
    low = min((sum(e) for e in g.coeffs), default=f.order + 1)
    n = 1
    while n * low <= f.order:
        power = power * g
        sign = Fraction(1, n) if n % 2 == 1 else Fraction(-1, n)
        out = out + power.scale(sign)
        n += 1
    return out


def series_mul_div(a: TruncSeries, b: TruncSeries, mode: str) -> TruncSeries:
    """Exact truncated product or quotient at order min(order a, order b)."""
    if mode == "multiply":
        return a * b
    if mode == "divide":
        return a / b
    raise ValueError(f"unknown mode {mode!r}")


def linear_power(a, b, n: int) -> dict:
    """Exponent map of (a*X + b*Y)**n as {(i, n-i): coefficient}."""
    out = {}
    for i in range(n + 1):
        c = comb(n, i) * Fraction(a) ** i * Fraction(b) ** (n - i)
        if c != 0:
            out[(i, n - i)] = c
    return out


def bivariate_poly(terms: dict, order: int, scalar=None) -> TruncSeries:
    """Build a 2-variable TruncSeries from {(i, j): Fraction}, optionally
    multiplying every coefficient by a fixed ring element."""
    if scalar is None:
        return TruncSeries(2, order, dict(terms))
    return TruncSeries(2, order, {e: scalar * c for e, c in terms.items()})
