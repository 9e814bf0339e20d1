"""Toral weights and the extended Weyl group acting on them.

A toral weight is Lambda(K_mu) = exp(2 pi i t(mu)) q^(c(mu)) with t, c additive
on the root lattice, stored through their values t_i (mod 1) and c_i on the
simple roots.  The linear weight q^lambda has t = 0 and c(mu) = (lambda, mu).
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exact import Cyclotomic
from .rootsys import GroupTooLarge, LatticeVector, RootSystem, WeylElement
from .subsys import RootSubsystem

DEFAULT_CAP = 1200


class NotIntegralRoot(ValueError):
    pass


class NonIntegralExponent(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class ToralWeight:
    """Immutable (t, c) data of a toral weight."""

    __slots__ = ("rs", "t", "c")

    def __init__(self, rs: RootSystem, t, c):
        if len(t) != rs.rank or len(c) != rs.rank:
            raise ValueError("weight data must have one entry per simple root")
        self.rs = rs
        self.t = tuple(Fraction(x) % 1 for x in t)
        self.c = tuple(Fraction(x) for x in c)

    @classmethod
    def linear(cls, rs: RootSystem, lam) -> "ToralWeight":
        """q^lambda, lambda given in fundamental-weight coordinates or as a LatticeVector."""
        f = lam.to_fundamental(rs) if isinstance(lam, LatticeVector) else tuple(Fraction(x) for x in lam)
        return cls(rs, [0] * rs.rank, [rs.d[i] * f[i] for i in range(rs.rank)])

    @classmethod
    def trivial(cls, rs: RootSystem) -> "ToralWeight":
        return cls(rs, [0] * rs.rank, [0] * rs.rank)

    # -- evaluation -------------------------------------------------------
    def torsion(self, mu) -> Fraction:
        return sum((Fraction(m) * t for m, t in zip(mu, self.t)), Fraction(0)) % 1

    def exponent(self, mu) -> Fraction:
        return sum((Fraction(m) * c for m, c in zip(mu, self.c)), Fraction(0))

    def evaluate(self, mu) -> tuple[Fraction, Fraction]:
        """(t(mu) mod 1, c(mu))."""
        if isinstance(mu, LatticeVector):
            mu = mu.to_root(self.rs)
        return self.torsion(mu), self.exponent(mu)

    def conductor(self) -> int:
        """Least N with every torsion value in (1/N)Z."""
        return lcm(*[x.denominator for x in self.t]) if self.t else 1

    def exponent_denominator(self) -> int:
        return lcm(*[x.denominator for x in self.c]) if self.c else 1

    def times_q(self, mu) -> "ToralWeight":
        """Lambda * q^mu for mu in root coordinates: c(nu) += (mu, nu)."""
        rs = self.rs
        return ToralWeight(rs, self.t, [self.c[i] + rs.inner(mu, _unit(rs.rank, i))
                                        for i in range(rs.rank)])

    def times_sign(self, sigma) -> "ToralWeight":
        return ToralWeight(self.rs, [a + b for a, b in zip(self.t, sigma)], self.c)

    def fundamental_exponents(self) -> tuple:
        """lambda_i = c_i / d_i (the linear part in fundamental-weight coordinates)."""
        return tuple(self.c[i] / self.rs.d[i] for i in range(self.rs.rank))

    # -- identity / serialization --------------------------------------------
    def __eq__(self, other):
        return isinstance(other, ToralWeight) and self.t == other.t and self.c == other.c

    def __hash__(self):
        return hash((self.t, self.c))

    def to_literal(self) -> str:
        return ";".join(f"t={_frac_str(t)},c={_frac_str(c)}" for t, c in zip(self.t, self.c))

    def to_dict(self) -> dict:
        return {"type": self.rs.label, "t": [_frac_str(x) for x in self.t],
                "c": [_frac_str(x) for x in self.c]}

    @classmethod
    def from_dict(cls, data: dict, rs: RootSystem | None = None) -> "ToralWeight":
        rs = rs or RootSystem.build(data["type"])
        return cls(rs, [Fraction(x) for x in data["t"]], [Fraction(x) for x in data["c"]])

    def __repr__(self):
        return f"ToralWeight({self.rs.label}: {self.to_literal()})"


def _unit(n, i):
    return tuple(int(i == j) for j in range(n))


# -- integral subsystem and Shapovalov data ------------------------------------------

def is_integral_root(lam: ToralWeight, k: int) -> bool:
    rs = lam.rs
    v = rs.roots[k]
    if (2 * lam.torsion(v)) % 1:
        return False
    return (2 * lam.exponent(v) / rs.norm2(k)).denominator == 1


def phi_lambda(lam: ToralWeight) -> RootSubsystem:
    """{alpha : t(2 alpha) = 0 and c(2 alpha) in (alpha, alpha) Z}."""
    rs = lam.rs
    return RootSubsystem(rs, [k for k in range(len(rs.roots)) if is_integral_root(lam, k)])


def _root_index(rs, alpha):
    if isinstance(alpha, int):
        return alpha
    if isinstance(alpha, LatticeVector):
        alpha = alpha.to_root(rs)
    return rs.index[tuple(int(x) for x in alpha)]


def n_alpha(lam: ToralWeight, alpha) -> int:
    """<rho, alpha^vee> + c(2 alpha)/(alpha, alpha) for an integral root alpha."""
    rs = lam.rs
    k = _root_index(rs, alpha)
    if not is_integral_root(lam, k):
        raise NotIntegralRoot(f"{rs.roots[k]} is not in the integral subsystem")
    v = rs.roots[k]
    val = rs.pairing(rs.rho, v) + 2 * lam.exponent(v) / rs.norm2(k)
    assert val.denominator == 1
    return int(val)


def t_set(lam: ToralWeight) -> list[tuple[int, tuple]]:
    """Pairs (m, alpha), alpha positive integral with m = n_alpha > 0."""
    rs = lam.rs
    out = []
    for k in range(rs.num_positive):
        if is_integral_root(lam, k):
            m = n_alpha(lam, k)
            if m > 0:
                out.append((m, rs.roots[k]))
    return out


def verma_irreducible(lam: ToralWeight) -> bool:
    return not t_set(lam)


def is_dominant(lam: ToralWeight) -> bool:
    rs = lam.rs
    return all(n_alpha(lam, k) >= 0 for k in range(rs.num_positive) if is_integral_root(lam, k))


def is_antidominant(lam: ToralWeight) -> bool:
    rs = lam.rs
    return all(n_alpha(lam, k) <= 0 for k in range(rs.num_positive) if is_integral_root(lam, k))


def in_integral_set(lam: ToralWeight) -> bool:
    """Lambda in the set of integral weights: every root is integral."""
    return len(phi_lambda(lam)) == len(lam.rs.roots)


def in_dominant_integral_set(lam: ToralWeight) -> bool:
    """Integral with lambda_i = c_i/d_i nonnegative integers."""
    return in_integral_set(lam) and all(x >= 0 and x.denominator == 1
                                        for x in lam.fundamental_exponents())


# -- extended Weyl group ------------------------------------------------------------

class ExtendedWeylElement:
    """(sigma, w): sigma additive Q -> {0, 1/2} mod 1 given on simple roots."""

    __slots__ = ("sigma", "w")

    def __init__(self, sigma, w: WeylElement):
        self.sigma = tuple(Fraction(x) % 1 for x in sigma)
        self.w = w

    @property
    def rs(self):
        return self.w.rs

    def sign(self, mu) -> Fraction:
        return sum((Fraction(m) * s for m, s in zip(mu, self.sigma)), Fraction(0)) % 1

    def __mul__(self, other: "ExtendedWeylElement") -> "ExtendedWeylElement":
        rs = self.rs
        winv = self.w.inverse()
        # (sigma + w.sigma', w w') with (w.sigma')(mu) = sigma'(w^-1 mu)
        new = [self.sigma[i] + other.sign(rs.act(winv, _unit(rs.rank, i))) for i in range(rs.rank)]
        return ExtendedWeylElement(new, self.w * other.w)

    def inverse(self) -> "ExtendedWeylElement":
        rs = self.rs
        w = self.w
        # (-w^-1 sigma, w^-1) with (w^-1 sigma)(mu) = sigma(w mu); signs are 2-torsion
        new = [-self.sign(rs.act(w, _unit(rs.rank, i))) for i in range(rs.rank)]
        return ExtendedWeylElement(new, w.inverse())

    def act(self, lam: ToralWeight) -> ToralWeight:
        """Plain action: t'(mu) = t(w^-1 mu) + sigma(mu), c'(mu) = c(w^-1 mu)."""
        rs = lam.rs
        winv = self.w.inverse()
        imgs = [rs.act(winv, _unit(rs.rank, i)) for i in range(rs.rank)]
        return ToralWeight(rs, [lam.torsion(v) + s for v, s in zip(imgs, self.sigma)],
                           [lam.exponent(v) for v in imgs])

    def __eq__(self, other):
        return isinstance(other, ExtendedWeylElement) and (self.sigma, self.w) == (other.sigma, other.w)

    def __hash__(self):
        return hash((self.sigma, self.w.perm))

    def __repr__(self):
        return f"ExtendedWeylElement(sigma={[str(s) for s in self.sigma]}, w={list(self.w.reduced_word())})"


def plain(w: WeylElement) -> ExtendedWeylElement:
    return ExtendedWeylElement([0] * w.rs.rank, w)


def modified_reflection(lam: ToralWeight, alpha) -> ExtendedWeylElement:
    """s_alpha with the sign (-1)^<mu, alpha^vee> when Lambda(K_alpha) lies in -q^Z."""
    rs = lam.rs
    k = _root_index(rs, alpha)
    if not is_integral_root(lam, k):
        raise NotIntegralRoot(f"{rs.roots[k]} is not in the integral subsystem")
    v = rs.roots[k]
    if lam.torsion(v) == Fraction(1, 2):
        sigma = [rs.pairing(_unit(rs.rank, j), v) / 2 for j in range(rs.rank)]
    else:
        sigma = [0] * rs.rank
    return ExtendedWeylElement(sigma, rs.reflection(k))


def dot_action(w: ExtendedWeylElement, lam: ToralWeight) -> ToralWeight:
    """w . Lambda = q^-rho w(Lambda q^rho)."""
    rs = lam.rs
    shifted = w.act(lam.times_q(rs.rho))
    return shifted.times_q(tuple(-x for x in rs.rho))


# -- the group W_Lambda with its lifts ------------------------------------------------

@dataclass
class LiftedElement:
    word: tuple          # word in the simple reflections of Phi_Lambda
    lift: ExtendedWeylElement

    @property
    def length(self) -> int:
        return len(self.word)


def integral_weyl_group(lam: ToralWeight, cap: int = DEFAULT_CAP) -> tuple[list, list[LiftedElement]]:
    """Simple roots of Phi_Lambda and W_Lambda with lifts, breadth-first by length."""
    psi = phi_lambda(lam)
    simple = list(psi.simple)
    gens = [modified_reflection(lam, k) for k in simple]
    rs = lam.rs
    start = LiftedElement((), plain(rs.identity()))
    seen = {start.lift.w.perm: start}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for el in frontier:
            for j, g in enumerate(gens):
                new = el.lift * g
                key = new.w.perm
                if key not in seen:
                    item = LiftedElement(el.word + (j,), new)
                    seen[key] = item
                    out.append(item)
                    nxt.append(item)
                    if len(out) > cap:
                        raise GroupTooLarge(f"W_Lambda exceeds cap {cap}")
        frontier = nxt
    return simple, out


def orbit(lam: ToralWeight, cap: int = DEFAULT_CAP) -> list[ToralWeight]:
    _, group = integral_weyl_group(lam, cap)
    seen = {}
    for el in group:
        mu = dot_action(el.lift, lam)
        seen.setdefault(mu, None)
    return list(seen)


def stabilizer(lam: ToralWeight, cap: int = DEFAULT_CAP) -> list[tuple]:
    """Words (in the simple reflections of Phi_Lambda) of the stabilizer under the dot action."""
    _, group = integral_weyl_group(lam, cap)
    return [el.word for el in group if dot_action(el.lift, lam) == lam]


def is_regular(lam: ToralWeight, cap: int = DEFAULT_CAP) -> bool:
    return len(stabilizer(lam, cap)) == 1


def minimal_antidominant_witness(lam: ToralWeight, cap: int = DEFAULT_CAP):
    """(element of W_Lambda of minimal length with lift^-1 . Lambda antidominant, that weight)."""
    _, group = integral_weyl_group(lam, cap)
    for el in group:
        mu = dot_action(el.lift.inverse(), lam)
        if is_antidominant(mu):
            return el, mu
    raise AssertionError("no antidominant weight in the orbit")


# -- roots of unity --------------------------------------------------------------------

@dataclass(frozen=True)
class SpecializedWeight:
    ell: int
    values: tuple   # Lambda_zeta(K_{alpha_i}) as Cyclotomic numbers

    @property
    def conductor(self) -> int:
        return lcm(*[v.n for v in self.values]) if self.values else 1


def specialize(lam: ToralWeight, ell: int) -> SpecializedWeight:
    """Lambda_zeta(K_i) = exp(2 pi i t_i) zeta^(c_i), zeta = exp(2 pi i/ell)."""
    if any(c.denominator != 1 for c in lam.c):
        raise NonIntegralExponent("specialization needs integral q-exponents")
    vals = tuple(Cyclotomic.root_of_unity(t + Fraction(int(c), ell)) for t, c in zip(lam.t, lam.c))
    return SpecializedWeight(ell, vals)


def is_admissible(ell: int, lam: ToralWeight | None = None, rs: RootSystem | None = None) -> bool:
    rs = rs or (lam.rs if lam is not None else None)
    if ell <= 1 or ell % 2 == 0:
        return False
    if rs is not None and "G2" in rs.label.split("x") and ell % 3 == 0:
        return False
    if lam is not None and gcd(ell, lam.conductor()) != 1:
        return False
    return True


# -- parsing and sampling ------------------------------------------------------------------

_NUM = r"[+-]?\d+(?:/\d+)?"


def parse_weight(text: str, rs: RootSystem) -> ToralWeight:
    """Parse 'q^0', 'q^{a1,...,an}' (fundamental coordinates) or 't=p/r,c=x;...'."""
    s = text.strip()
    if s.startswith("q^"):
        body = s[2:]
        if body.startswith("{"):
            if not body.endswith("}"):
                raise ParseError("missing closing brace", len(text))
            parts = body[1:-1].split(",")
            offset = text.index("{") + 1
        else:
            parts = [body]
            offset = 2
        vals = []
        for p in parts:
            if not re.fullmatch(_NUM, p.strip()):
                raise ParseError(f"bad number {p.strip()!r}", offset)
            vals.append(Fraction(p.strip()))
            offset += len(p) + 1
        if len(vals) == 1 and vals[0] == 0:
            vals = vals * rs.rank
        if len(vals) != rs.rank:
            raise ParseError(f"expected {rs.rank} coordinates, got {len(vals)}", 0)
        return ToralWeight.linear(rs, vals)
    entries = s.split(";")
    if len(entries) != rs.rank:
        raise ParseError(f"expected {rs.rank} ';'-separated entries, got {len(entries)}", 0)
    t, c = [], []
    pos = 0
    for entry in entries:
        vals = {"t": Fraction(0), "c": Fraction(0)}
        sub = pos
        for item in entry.split(","):
            m = re.fullmatch(rf"\s*([tc])\s*=\s*({_NUM})\s*", item)
            if not m:
                raise ParseError(f"cannot parse {item.strip()!r}", sub)
            vals[m.group(1)] = Fraction(m.group(2))
            sub += len(item) + 1
        t.append(vals["t"])
        c.append(vals["c"])
        pos += len(entry) + 1
    return ToralWeight(rs, t, c)


def random_weight(rs: RootSystem, rng: random.Random, torsion_den=(1, 2, 3, 4, 6),
                  exponent_den=(1, 2), span: int = 3) -> ToralWeight:
    t = []
    c = []
    for i in range(rs.rank):
        dt = rng.choice(torsion_den)
        t.append(Fraction(rng.randrange(dt), dt))
        dc = rng.choice(exponent_den)
        c.append(Fraction(rng.randint(-span * dc, span * dc), dc))
    return ToralWeight(rs, t, c)
