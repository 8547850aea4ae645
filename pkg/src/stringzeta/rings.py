"""Exact coefficient rings: Bernoulli numbers and polynomials in zeta symbols.

Scalars are `fractions.Fraction` throughout; nothing in this module rounds.
The symbol ring is Q[z2, z3, z5, z7, ...], with one generator for zeta(2) and
one for each odd zeta value.  Even zetas are not independent generators:
zeta(2k) is rewritten as a rational multiple of z2**k (Euler's evaluation),
so every ring element has a canonical normal form.  The ring is graded by
weight (z_k has weight k) and products respect the grading.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


_bernoulli_cache = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number, convention B_1 = -1/2.

    Computed by the defining recursion sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        acc = sum((comb(m + 1, k) * _bernoulli_cache[k] for k in range(m)), Fraction(0))
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def even_zeta_ratio(k: int) -> Fraction:
    """The rational number zeta(2k) / zeta(2)**k.

    From zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!) and zeta(2) = pi^2/6.
    """
    if k < 1:
        raise ValueError("even_zeta_ratio needs k >= 1")
    sign = 1 if k % 2 == 1 else -1
    num = sign * bernoulli(2 * k) * Fraction(24) ** k
    den = 2 * _factorial(2 * k)
    return num / den


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


class ZetaMonomial:
    """Monomial z2^e2 * z3^e3 * z5^e5 * ... with nonnegative exponents.

    Allowed generator indices are 2 and the odd integers >= 3; exponent-zero
    entries are never stored, so equal monomials compare and hash equal.
    """

    __slots__ = ("_key",)

    def __init__(self, exponents=()):
        if isinstance(exponents, dict):
            items = exponents.items()
        else:
            items = exponents
        clean = []
        for idx, e in items:
            if e == 0:
                continue
            if e < 0:
                raise ValueError("negative exponent in zeta monomial")
            if idx != 2 and (idx < 3 or idx % 2 == 0):
                raise ValueError(f"index {idx} is not 2 or an odd integer >= 3")
            clean.append((int(idx), int(e)))
        clean.sort()
        self._key = tuple(clean)

    @property
    def exponents(self) -> dict:
        return dict(self._key)

    @property
    def weight(self) -> int:
        return sum(idx * e for idx, e in self._key)

    @property
    def degree(self) -> int:
        """Number of zeta factors counted with multiplicity."""
        return sum(e for _, e in self._key)

    def exponent_of(self, idx: int) -> int:
        for i, e in self._key:
            if i == idx:
                return e
        return 0

    def is_constant(self) -> bool:
        return not self._key

    def __mul__(self, other: "ZetaMonomial") -> "ZetaMonomial":
        merged = dict(self._key)
        for idx, e in other._key:
            merged[idx] = merged.get(idx, 0) + e
        return ZetaMonomial(merged)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZetaMonomial) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if not self._key:
            return "1"
        return "*".join(f"z{i}" if e == 1 else f"z{i}^{e}" for i, e in self._key)


_ONE_MONO = ZetaMonomial()


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


class ZetaPoly:
    """Polynomial in zeta symbols with Fraction coefficients.

    Terms map ZetaMonomial -> Fraction; zero coefficients are dropped so that
    equality is structural.  Supports +, -, * with other polynomials and exact
    scalars (int, Fraction).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _as_fraction(c)
                if c == 0:
                    continue
                cur = clean.get(mono)
                tot = c if cur is None else cur + c
                if tot == 0:
                    clean.pop(mono, None)
                else:
                    clean[mono] = tot
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "ZetaPoly":
        return cls()

    @classmethod
    def one(cls) -> "ZetaPoly":
        return cls({_ONE_MONO: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "ZetaPoly":
        return cls({_ONE_MONO: _as_fraction(c)})

    # -- structure ----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get(_ONE_MONO, Fraction(0))

    def is_constant(self) -> bool:
        return all(m.is_constant() for m in self.terms)

    def is_homogeneous(self) -> bool:
        weights = {m.weight for m in self.terms}
        return len(weights) <= 1

    def weight(self):
        """Weight of a homogeneous element (None for 0, error if mixed)."""
        weights = {m.weight for m in self.terms}
        if not weights:
            return None
        if len(weights) > 1:
            raise ValueError(f"not homogeneous, weights {sorted(weights)}")
        return weights.pop()

    def max_weight(self) -> int:
        return max((m.weight for m in self.terms), default=0)

    def uses_zeta2(self) -> bool:
        return any(m.exponent_of(2) > 0 for m in self.terms)

    def inverse(self) -> Fraction:
        """Multiplicative inverse; only nonzero constants are units here."""
        if not self.is_constant() or self.is_zero:
            raise ZeroDivisionError("only nonzero rational constants are invertible")
        return 1 / self.constant_term()

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = as_zeta_poly(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            tot = out.get(m, Fraction(0)) + c
            if tot == 0:
                out.pop(m, None)
            else:
                out[m] = tot
        res = ZetaPoly.__new__(ZetaPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = ZetaPoly.__new__(ZetaPoly)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-as_zeta_poly(other))

    def __rsub__(self, other):
        return as_zeta_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return ZetaPoly()
            res = ZetaPoly.__new__(ZetaPoly)
            res.terms = {m: v * c for m, v in self.terms.items()}
            return res
        other = as_zeta_poly(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                tot = out.get(m, Fraction(0)) + c1 * c2
                if tot == 0:
                    out.pop(m, None)
                else:
                    out[m] = tot
        res = ZetaPoly.__new__(ZetaPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the symbol ring")
        out = ZetaPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ZetaPoly.constant(other)
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (m.weight, repr(m))):
            c = self.terms[m]
            if m.is_constant():
                parts.append(str(c))
            elif c == 1:
                parts.append(repr(m))
            else:
                parts.append(f"{c}*{m!r}")
        return " + ".join(parts).replace("+ -", "- ")


def as_zeta_poly(x) -> ZetaPoly:
    if isinstance(x, ZetaPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ZetaPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into the zeta ring")


def zeta(n: int) -> ZetaPoly:
    """The symbol zeta(n) in canonical form.

    Odd n >= 3 and n == 2 give a single generator; even n >= 4 is rewritten
    as a rational multiple of z2^(n/2) so that even zetas never appear as
    independent symbols.
    """
    if n < 2:
        raise ValueError("zeta symbols need n >= 2")
    if n == 2 or n % 2 == 1:
        return ZetaPoly({ZetaMonomial({n: 1}): Fraction(1)})
    return even_zeta_normal_form(n // 2)


def even_zeta_normal_form(k: int) -> ZetaPoly:
    """zeta(2k) written as even_zeta_ratio(k) * z2^k."""
    return ZetaPoly({ZetaMonomial({2: k}): even_zeta_ratio(k)})
