"""Univariate rational functions as reduced pairs of Laurent polynomials."""

from __future__ import annotations

from .poly import LaurentPoly, poly_gcd, _inv


class RatFunc:
    """num/den with den != 0; gcd-reduced and den normalized monic, low exponent 0."""

    __slots__ = ("num", "den")
    _fraction_field = True

    def __init__(self, num, den=None, reduce: bool = True):
        if den is None:
            den = LaurentPoly.constant(1, num.var, num.denom)
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num, den.var, den.denom)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den, num.var, num.denom)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = num._align(den)
        if reduce and num.coeffs:
            g = poly_gcd(num, den)
            if g.span() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if not num.coeffs:
            den = LaurentPoly.constant(1, den.var, den.denom)
        else:
            # move the monomial part of den to num, make den monic
            shift = LaurentPoly(den.var, [1], -den.low, den.denom)
            lc = _inv(den.lead())
            num = num * shift * lc
            den = den * shift * lc
        self.num = num
        self.den = den

    @property
    def var(self):
        return self.num.var

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc(other)
        return RatFunc(LaurentPoly.constant(other, self.num.var, self.num.denom))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.span() == 0

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError("not a Laurent polynomial")
        return self.num.exact_div(self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def exact_div(self, other):
        return self / other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def subs(self, value, root=None):
        d = self.den.subs(value, root)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.subs(value, root) * _inv(d)

    def span(self) -> int:
        return self.num.span() + self.den.span()

    def __eq__(self, other):
        o = other if isinstance(other, RatFunc) else self._coerce(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash(self.num.var)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.as_poly())
        return f"({self.num})/({self.den})"
