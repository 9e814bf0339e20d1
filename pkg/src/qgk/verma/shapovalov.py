"""The Shapovalov determinant as a product formula, its cross-check against
Gram determinants, and the Jantzen sum formula."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..exact import LaurentPoly, RatFunc, determinant, q_int, vanishing_order
from ..rootsys import RootSystem
from ..weights import ToralWeight, t_set
from .gram import Deformed, GenericQ, GramEngine, SymbolicZ, _root_of_unity
from .rewrite import HeightTooLarge, build_rewrite_system


@dataclass(frozen=True)
class ShapovalovFactor:
    m: int
    alpha: tuple
    exponent: int        # Kostant partition p(nu - m alpha)

    def shift(self, rs: RootSystem) -> int:
        """(rho, alpha) - m (alpha, alpha)/2."""
        return int(rs.inner(rs.rho, self.alpha) - Fraction(self.m * rs.inner(self.alpha, self.alpha), 2))


@dataclass
class DetFormula:
    rs: RootSystem
    nu: tuple
    factors: list
    value: object = None

    def __str__(self):
        parts = []
        for f in self.factors:
            a = "+".join(f"a{i + 1}" if c == 1 else f"{c}a{i + 1}" for i, c in enumerate(f.alpha) if c)
            parts.append(f"([{f.m}]*[K_({a}); {f.shift(self.rs)}])^{f.exponent}")
        return " * ".join(parts) or "1"


def shapovalov_factors(rs: RootSystem, nu) -> list[ShapovalovFactor]:
    """Nontrivial factors (m, alpha) with p(nu - m alpha) > 0."""
    nu = tuple(int(x) for x in nu)
    out = []
    for alpha in rs.positive:
        m = 1
        while all(a * m <= b for a, b in zip(alpha, nu)):
            p = rs.kostant_partition(tuple(b - m * a for a, b in zip(alpha, nu)))
            if p:
                out.append(ShapovalovFactor(m, alpha, p))
            m += 1
    return out


def _k_value(spec, alpha):
    """Lambda(K_alpha) as a monomial in the specializer's ring."""
    if isinstance(spec, SymbolicZ):
        val = Fraction(1)
        for z, n in zip(spec.z, alpha):
            val *= z ** n
        return LaurentPoly.constant(val, "q")
    lam = spec.lam
    t, c = lam.evaluate(alpha)
    return LaurentPoly.monomial(c, _root_of_unity(t), "q", spec.g)


def _factor_value(rs, spec, f: ShapovalovFactor):
    g = getattr(spec, "g", 1)
    d = rs.inner(f.alpha, f.alpha) // 2
    x = _k_value(spec, f.alpha) * LaurentPoly.monomial(f.shift(rs), 1, "q", g)
    qa = LaurentPoly.monomial(d, 1, "q", g) - LaurentPoly.monomial(-d, 1, "q", g)
    num = q_int(f.m, "q", d).with_denom(g) * (x - x ** -1)
    return num, qa


def shapovalov_det_formula(rs: RootSystem, nu, weight=None) -> DetFormula:
    """Product of ([m]_(q_alpha) [K_alpha; (rho,alpha) - m(alpha,alpha)/2])^p(nu - m alpha).

    ``weight`` may be a ToralWeight (q symbolic), a tuple of rational values
    z_i = Lambda(K_i), or None for the factored form only.
    """
    factors = shapovalov_factors(rs, nu)
    if weight is None:
        return DetFormula(rs, tuple(nu), factors)
    spec = GenericQ(weight) if isinstance(weight, ToralWeight) else SymbolicZ(rs, weight)
    g = getattr(spec, "g", 1)
    num = LaurentPoly.constant(1, "q", g)
    den = LaurentPoly.constant(1, "q", g)
    for f in factors:
        a, b = _factor_value(rs, spec, f)
        num = num * a ** f.exponent
        den = den * b ** f.exponent
    return DetFormula(rs, tuple(nu), factors, RatFunc(num, den, reduce=False))


@dataclass
class CrossCheck:
    nu: tuple
    ratio: object
    constant: bool
    samples: int

    def to_dict(self) -> dict:
        return {"nu": list(self.nu), "ratio": str(self.ratio), "constant": self.constant,
                "samples": self.samples}


def _random_z(rng, rank):
    """Multiplicatively independent values, so no Lambda(K_alpha) equals +-1."""
    primes = rng.sample([2, 3, 5, 7, 11, 13], rank)
    return [Fraction(rng.choice((1, -1))) * Fraction(p) ** rng.choice((-2, -1, 1, 2))
            for p in primes]


def det_formula_cross_check(rs, nu, trials: int = 10, seed: int = 0) -> CrossCheck:
    """det(Gram) / product formula at random z_i = Lambda(K_i); constant iff the
    ratio is a weight-independent unit."""
    if isinstance(rs, str):
        rs = RootSystem.build(rs)
    nu = tuple(int(x) for x in nu)
    if sum(nu) > 6:
        raise HeightTooLarge("the cross-check is limited to height 6")
    system = build_rewrite_system(rs, max(sum(nu), 1))
    rng = random.Random(seed)
    pairs = []
    for _ in range(trials):
        z = _random_z(rng, rs.rank)
        eng = GramEngine(system, SymbolicZ(rs, z))
        basis, scaled = eng.gram(nu)
        formula = shapovalov_det_formula(rs, nu, z).value
        # det S = det(scaled) / scale^n; the ratio is det S / formula
        num = determinant(scaled) * formula.den
        den = eng.scale(nu) ** len(basis) * formula.num
        pairs.append((num, den))
    n0, d0 = pairs[0]
    constant = bool(n0) and all(n * d0 == n0 * d for n, d in pairs[1:])
    ratio = RatFunc(n0, d0) if n0 != d0 else RatFunc(LaurentPoly.constant(1, n0.var, n0.denom))
    return CrossCheck(nu, ratio, constant, trials)


@dataclass
class JantzenCheck:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.equal))

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}


def jantzen_sum_check(lam: ToralWeight, nu, s=2) -> JantzenCheck:
    """Order at t = 1 of det G(Lambda t^rho) against sum over T_Lambda of p(nu - m alpha).

    q^(1/g) is set to the rational ``s``; a factor Lambda t^rho([K_alpha; r]) vanishes
    at t = 1 exactly as it does for symbolic q because s is not a root of unity.
    """
    rs = lam.rs
    nu = tuple(int(x) for x in nu)
    system = build_rewrite_system(rs, max(sum(nu), 1))
    eng = GramEngine(system, Deformed(lam, s))
    _, scaled = eng.gram(nu)
    lhs = vanishing_order(determinant(scaled), 1)
    rhs = 0
    for m, alpha in t_set(lam):
        rhs += rs.kostant_partition(tuple(b - m * a for a, b in zip(alpha, nu)))
    return JantzenCheck(lhs, rhs)
