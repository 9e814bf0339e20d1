"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as an integer coefficient vector over a
common positive denominator, in the power basis 1, z, ..., z^(phi(N)-1) of
z = exp(2*pi*i/N), i.e. as a polynomial reduced modulo the N-th cyclotomic
polynomial.  Operands of different conductor are lifted to the lcm first.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d of n
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_int_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_int_div(num: list[int], den: list[int]) -> list[int]:
    # both monic integer polynomials, constant term first
    num = num[:]
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for j, b in enumerate(den):
                num[k - dd + j] -= c * b
    assert not any(num), "cyclotomic division not exact"
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of z^k for 0 <= k < max(n, 2*phi(n)-1)."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    vec = [0] * phi
    vec[0] = 1
    for _ in range(max(n, 2 * phi - 1)):
        rows.append(tuple(vec))
        # multiply by z: shift, then fold z^phi back
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(phi):
                vec[j] -= top * poly[j]
    return tuple(rows)


def _reduce(conv: list[int], n: int) -> list[int]:
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    for k in range(len(conv) - 1, phi - 1, -1):
        c = conv[k]
        if c:
            base = k - phi
            for j in range(phi):
                if poly[j]:
                    conv[base + j] -= c * poly[j]
    return conv[:phi]


class Cyclotomic:
    """An element of Q(zeta_N); immutable."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: int = 1):
        num = list(num)
        phi = euler_phi(n)
        if len(num) != phi:
            raise ValueError(f"expected {phi} coefficients for conductor {n}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-a for a in num]
            den = -den
        g = den
        for a in num:
            if a:
                g = gcd(g, a)
                if g == 1:
                    break
        if g > 1:
            num = [a // g for a in num]
            den //= g
        if n > 1 and not any(num[1:]):
            n, num = 1, num[:1]
        self.n = n
        self.num = tuple(num)
        self.den = den

    # -- constructors --------------------------------------------------
    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        value = Fraction(value)
        return cls(1, (value.numerator,), value.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity exp(2*pi*i*k/n)."""
        return cls(n, _power_table(n)[k % n])

    @classmethod
    def root_of_unity(cls, frac) -> "Cyclotomic":
        """exp(2*pi*i*frac) for a rational ``frac``."""
        frac = Fraction(frac) % 1
        return cls.zeta(frac.denominator, frac.numerator)

    @classmethod
    def from_coefficients(cls, n: int, coeffs) -> "Cyclotomic":
        """Build sum_k coeffs[k] z_n^k from rational coefficients of any length."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        table = _power_table(n)
        acc = [0] * euler_phi(n)
        for k, c in enumerate(coeffs):
            if c:
                a = c.numerator * (den // c.denominator)
                for j, b in enumerate(table[k % n]):
                    if b:
                        acc[j] += a * b
        return cls(n, acc, den)

    # -- structure -----------------------------------------------------
    def lift(self, m: int) -> "Cyclotomic":
        """Re-express in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        step = m // self.n
        table = _power_table(m)
        acc = [0] * euler_phi(m)
        for k, a in enumerate(self.num):
            if a:
                for j, b in enumerate(table[(k * step) % m]):
                    if b:
                        acc[j] += a * b
        out = object.__new__(Cyclotomic)
        out.n, out.num, out.den = m, tuple(acc), self.den
        return out

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        if self.n == other.n:
            return self, other, self.n
        m = lcm(self.n, other.n)
        return self.lift(m), other.lift(m), m

    def is_rational(self) -> bool:
        return self.n == 1

    def to_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return any(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        try:
            a, b, n = self._common(other)
        except TypeError:
            return NotImplemented
        if a.den == b.den:
            return Cyclotomic(n, [x + y for x, y in zip(a.num, b.num)], a.den)
        return Cyclotomic(n, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Cyclotomic)
        out.n, out.num, out.den = self.n, tuple(-a for a in self.num), self.den
        return out

    def __sub__(self, other):
        try:
            a, b, n = self._common(other)
        except TypeError:
            return NotImplemented
        if a.den == b.den:
            return Cyclotomic(n, [x - y for x, y in zip(a.num, b.num)], a.den)
        return Cyclotomic(n, [x * b.den - y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.n, [a * other for a in self.num], self.den)
        try:
            a, b, n = self._common(other)
        except TypeError:
            return NotImplemented
        if n == 1:
            return Cyclotomic(1, (a.num[0] * b.num[0],), a.den * b.den)
        phi = len(a.num)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic(n, _reduce(conv, n), a.den * b.den)

    __rmul__ = __mul__

    def conjugate_by(self, k: int) -> "Cyclotomic":
        """Galois conjugate z -> z^k (gcd(k, n) = 1)."""
        out = Cyclotomic.from_coefficients(self.n, _spread(self.num, k, self.n))
        return out / self.den if self.den != 1 else out

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = self
        for k in range(2, self.n):
            if gcd(k, self.n) == 1:
                prod = prod * self.conjugate_by(k)
        return prod.to_fraction() if self.n > 1 else Fraction(self.num[0], self.den)

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.n == 1:
            return Cyclotomic(1, (self.den,), self.num[0])
        # product of the nontrivial conjugates divided by the norm
        rest = Cyclotomic.rational(1)
        for k in range(2, self.n):
            if gcd(k, self.n) == 1:
                rest = rest * self.conjugate_by(k)
        nrm = (self * rest).to_fraction()
        return rest * Cyclotomic.rational(1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.n, [a * other.denominator for a in self.num],
                              self.den * other.numerator)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.n == 1 and Fraction(self.num[0], self.den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.n == other.n:
            return self.num == other.num and self.den == other.den
        a, b, _ = self._common(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.n == 1:
            return hash(Fraction(self.num[0], self.den))
        return hash((self.n, self.num, self.den))

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(a * z ** k for k, a in enumerate(self.num)) / self.den

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        if self.n == 1:
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, a in enumerate(self.num):
            if not a:
                continue
            c = Fraction(a, self.den)
            mono = "" if k == 0 else (f"z{self.n}" if k == 1 else f"z{self.n}^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _spread(num, k, n):
    # coefficient list of sum_j num[j] z^(j*k), as exponents mod n
    out = [0] * n
    for j, a in enumerate(num):
        if a:
            out[(j * k) % n] += a
    return out
