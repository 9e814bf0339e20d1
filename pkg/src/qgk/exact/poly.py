"""Univariate Laurent polynomials with exact coefficients.

Coefficients may be ``int``, ``Fraction`` or :class:`Cyclotomic`; mixing is
fine as long as the coefficient types interoperate.  Exponents are integers
scaled by a fixed ``denom`` so that q^(1/g) can be modelled without a second
variable: the stored exponent k means var^(k/denom).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import Cyclotomic


def _is_zero(c) -> bool:
    return not c


def _is_fraction_field(x) -> bool:
    """True for rational functions, which take over mixed arithmetic."""
    return getattr(x, "_fraction_field", False)


def _inv(c):
    if isinstance(c, Cyclotomic):
        return c.inverse()
    return Fraction(1) / c


class LaurentPoly:
    """sum_k coeffs[k] * var^((low + k)/denom), immutable."""

    __slots__ = ("var", "low", "coeffs", "denom")

    def __init__(self, var: str = "q", coeffs=(), low: int = 0, denom: int = 1):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and _is_zero(coeffs[start]):
            start += 1
        end = len(coeffs)
        while end > start and _is_zero(coeffs[end - 1]):
            end -= 1
        self.var = var
        self.coeffs = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0
        self.denom = denom

    # -- constructors --------------------------------------------------
    @classmethod
    def constant(cls, c, var: str = "q", denom: int = 1) -> "LaurentPoly":
        return cls(var, [c], 0, denom)

    @classmethod
    def monomial(cls, exponent, c=1, var: str = "q", denom: int = 1) -> "LaurentPoly":
        """c * var^exponent; a rational exponent must have denominator dividing denom."""
        e = Fraction(exponent) * denom
        if e.denominator != 1:
            raise ValueError(f"exponent {exponent} not representable with denominator {denom}")
        return cls(var, [c], int(e), denom)

    @classmethod
    def from_dict(cls, terms: dict, var: str = "q", denom: int = 1) -> "LaurentPoly":
        """Build from {scaled integer exponent: coefficient}."""
        terms = {k: c for k, c in terms.items() if not _is_zero(c)}
        if not terms:
            return cls(var, (), 0, denom)
        lo, hi = min(terms), max(terms)
        vec = [0] * (hi - lo + 1)
        for k, c in terms.items():
            vec[k - lo] = c
        return cls(var, vec, lo, denom)

    # -- structure -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def span(self) -> int:
        """Width of the exponent support; the pivoting degree."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    def terms(self):
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                yield self.low + k, c

    def lead(self):
        return self.coeffs[-1]

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1 and (not self.coeffs or self.low == 0)

    def constant_value(self):
        if not self.coeffs:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.coeffs[0]

    def with_denom(self, denom: int) -> "LaurentPoly":
        """Same element with exponents rescaled to a multiple denominator."""
        if denom == self.denom:
            return self
        if denom % self.denom:
            raise ValueError("incompatible exponent denominators")
        step = denom // self.denom
        return LaurentPoly.from_dict({k * step: c for k, c in self.terms()}, self.var, denom)

    def _align(self, other):
        if not isinstance(other, LaurentPoly):
            return self, LaurentPoly.constant(other, self.var, self.denom)
        if other.var != self.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        if other.denom == self.denom:
            return self, other
        d = lcm(self.denom, other.denom)
        return self.with_denom(d), other.with_denom(d)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if _is_fraction_field(other):
            return NotImplemented
        a, b = self._align(other)
        if not a.coeffs:
            return b
        if not b.coeffs:
            return a
        lo = min(a.low, b.low)
        hi = max(a.high, b.high)
        vec = [0] * (hi - lo + 1)
        for k, c in enumerate(a.coeffs):
            vec[a.low - lo + k] = c
        for k, c in enumerate(b.coeffs):
            vec[b.low - lo + k] = vec[b.low - lo + k] + c
        return LaurentPoly(a.var, vec, lo, a.denom)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, [-c for c in self.coeffs], self.low, self.denom)

    def __sub__(self, other):
        if _is_fraction_field(other):
            return NotImplemented
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_fraction_field(other):
            return NotImplemented
        if not isinstance(other, LaurentPoly):
            if _is_zero(other):
                return LaurentPoly(self.var, (), 0, self.denom)
            return LaurentPoly(self.var, [c * other for c in self.coeffs], self.low, self.denom)
        a, b = self._align(other)
        if not a.coeffs or not b.coeffs:
            return LaurentPoly(a.var, (), 0, a.denom)
        vec = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if _is_zero(x):
                continue
            for j, y in enumerate(b.coeffs):
                if not _is_zero(y):
                    vec[i + j] = vec[i + j] + x * y
        return LaurentPoly(a.var, vec, a.low + b.low, a.denom)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials can be inverted")
            return LaurentPoly(self.var, [_inv(self.coeffs[0]) ** (-e)], self.low * e, self.denom)
        out = LaurentPoly.constant(1, self.var, self.denom)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod_poly(self, other: "LaurentPoly"):
        """Long division after shifting both to ordinary polynomials.

        Returns (quotient, remainder) with self = quotient*other + remainder,
        where the remainder has smaller span than ``other``.
        """
        a, b = self._align(other)
        if not b.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not a.coeffs:
            return a, a
        num = list(a.coeffs)
        den = b.coeffs
        inv_lead = _inv(den[-1])
        nd = len(den) - 1
        quo = [0] * max(len(num) - nd, 1)
        for k in range(len(num) - 1, nd - 1, -1):
            c = num[k]
            if _is_zero(c):
                continue
            f = c * inv_lead
            quo[k - nd] = f
            for j, y in enumerate(den):
                if not _is_zero(y):
                    num[k - nd + j] = num[k - nd + j] - f * y
        rem = LaurentPoly(a.var, num[:nd], a.low, a.denom)
        q = LaurentPoly(a.var, quo, a.low - b.low, a.denom)
        return q, rem

    def exact_div(self, other):
        """Quotient when ``other`` divides ``self`` exactly; ValueError otherwise."""
        if not isinstance(other, LaurentPoly):
            return self * _inv(other)
        q, r = self.divmod_poly(other)
        if r.coeffs:
            raise ValueError("inexact polynomial division")
        return q

    def __truediv__(self, other):
        if _is_fraction_field(other):
            return NotImplemented
        if isinstance(other, LaurentPoly):
            from .ratfunc import RatFunc
            return RatFunc(self, other)
        return self * _inv(other)

    # -- evaluation ----------------------------------------------------
    def subs(self, value, root=None):
        """Evaluate at var = value.

        With denom > 1 pass ``root``, a chosen value of var^(1/denom).
        """
        if self.denom != 1:
            if root is None:
                raise ValueError("fractional exponents need an explicit root")
            base = root
        else:
            base = value
        acc = 0
        for k, c in self.terms():
            acc = acc + c * _power(base, k)
        return acc

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly(self.var, [fn(c) for c in self.coeffs], self.low, self.denom)

    def bar(self) -> "LaurentPoly":
        """The involution var -> var^-1."""
        return LaurentPoly(self.var, list(reversed(self.coeffs)), -self.high, self.denom)

    def degree(self):
        """Highest exponent (as a Fraction when denom > 1)."""
        if not self.coeffs:
            return None
        h = self.high
        return h if self.denom == 1 else Fraction(h, self.denom)

    def coeff(self, k: int):
        """Coefficient of the scaled exponent k."""
        idx = k - self.low
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return 0

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if _is_fraction_field(other):
            return NotImplemented
        if not isinstance(other, LaurentPoly):
            if _is_zero(other):
                return not self.coeffs
            return self.is_constant() and bool(self.coeffs) and self.coeffs[0] == other
        if other.var != self.var:
            return False
        a, b = self._align(other)
        return a.low == b.low and len(a.coeffs) == len(b.coeffs) and all(
            x == y for x, y in zip(a.coeffs, b.coeffs))

    def __hash__(self):
        return hash((self.var, self.low, len(self.coeffs), self.denom))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.terms():
            e = k if self.denom == 1 else Fraction(k, self.denom)
            cs = str(c)
            if isinstance(c, Cyclotomic) and not c.is_rational():
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
                continue
            mono = self.var if e == 1 else f"{self.var}^{e}" if e > 0 else f"{self.var}^({e})"
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _power(base, k: int):
    if k >= 0:
        return base ** k
    return _inv(base) ** (-k) if not isinstance(base, LaurentPoly) else base ** k


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (monomial factors dropped)."""
    a = LaurentPoly(a.var, a.coeffs, 0, a.denom)
    b = LaurentPoly(b.var, b.coeffs, 0, b.denom)
    while b.coeffs:
        _, r = a.divmod_poly(b)
        a, b = b, LaurentPoly(r.var, r.coeffs, 0, r.denom)
    if not a.coeffs:
        return a
    return a * _inv(a.lead())


def q_int(n: int, var: str = "q", step: int = 1, denom: int = 1) -> LaurentPoly:
    """The balanced quantum integer [n] in var^step: (x^n - x^-n)/(x - x^-1)."""
    if n == 0:
        return LaurentPoly(var, (), 0, denom)
    sign = 1 if n > 0 else -1
    n = abs(n)
    terms = {}
    for j in range(n):
        e = (n - 1 - 2 * j) * step * denom
        terms[e] = terms.get(e, 0) + sign
    return LaurentPoly.from_dict(terms, var, denom)
