"""Finite Laurent polynomials in one variable.

Coefficients are duck-typed (ZetaPoly for exact results, BigFloat for the
numeric routes); only finite support is stored and zero terms are dropped.
"""

from __future__ import annotations


def _is_zero(c) -> bool:
    z = getattr(c, "is_zero", None)
    if z is not None:
        return z if isinstance(z, bool) else z()
    return c == 0


class LaurentPoly:
    """sum_k c_k * var**k over a finite set of integer exponents k."""

    __slots__ = ("var", "terms")

    def __init__(self, var: str = "Y", terms=None):
        self.var = var
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not _is_zero(c):
                    self.terms[int(k)] = c

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, k: int):
        return self.terms.get(k, 0)

    def exponents(self):
        return sorted(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            tot = out.get(k, 0) + c
            if _is_zero(tot):
                out.pop(k, None)
            else:
                out[k] = tot
        return LaurentPoly(self.var, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.var, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def scale(self, c) -> "LaurentPoly":
        return LaurentPoly(self.var, {k: v * c for k, v in self.terms.items()})

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by var**d."""
        return LaurentPoly(self.var, {k + d: c for k, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                prod = c1 * c2
                out[k] = out.get(k, 0) + prod
        return LaurentPoly(self.var, out)

    def map_coefficients(self, f) -> "LaurentPoly":
        return LaurentPoly(self.var, {k: f(c) for k, c in self.terms.items()})

    def evaluate(self, x, coeff_value=lambda c: c):
        """Evaluate at x, mapping each coefficient through coeff_value first."""
        total = 0
        for k, c in self.terms.items():
            total = total + coeff_value(c) * x ** k
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(_is_zero(self.terms.get(k, 0) - other.terms.get(k, 0)) for k in keys)

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*{self.var}")
            else:
                parts.append(f"({c})*{self.var}^{k}")
        return " + ".join(parts)
