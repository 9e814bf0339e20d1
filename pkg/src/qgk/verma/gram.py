"""Contravariant (Shapovalov) Gram matrices on normal-form bases of Verma modules.

For a normal word u = F_i u' the form satisfies S(u, w) = S(u', E_i w), and
E_i F_w v = sum over positions p with w_p = i of [K_i; tail] F_(w without p) v,
where [K_i; tail] = (x - x^-1)/(q_i - q_i^-1) and x = Lambda(K_i) q^-(alpha_i, tail
weight).  The engine drops the weight-independent denominators, so it computes
G_nu = prod_i (q_i - q_i^-1)^(nu_i) * S_nu.  A specializer decides where the
numbers live: generic q, a root of unity, a deformation in t, or numeric q.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ..exact import Cyclotomic, LaurentPoly, RatFunc, determinant, rank
from ..rootsys import RootSystem
from ..weights import ToralWeight, specialize
from .rewrite import HeightTooLarge, RewriteSystem, build_rewrite_system

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _root_of_unity(frac) -> Cyclotomic | Fraction:
    z = Cyclotomic.root_of_unity(Fraction(frac) % 1)
    return z.to_fraction() if z.is_rational() else z


def _coef_at(c, value, root=None):
    """Evaluate a rewrite coefficient (LaurentPoly or RatFunc in q)."""
    return c.subs(value, root)


# -- specializers ----------------------------------------------------------------

class GenericQ:
    """q symbolic; entries are Laurent polynomials in q^(1/g) over Q(zeta_N)."""

    def __init__(self, lam: ToralWeight):
        self.lam = lam
        self.g = lam.exponent_denominator()
        self.zero = LaurentPoly("q", (), 0, self.g)
        self.one = LaurentPoly.constant(1, "q", self.g)
        self._x = [LaurentPoly.monomial(lam.c[i], _root_of_unity(lam.t[i]), "q", self.g)
                   for i in range(lam.rs.rank)]

    def coef(self, c):
        if isinstance(c, RatFunc):
            raise ValueError("symbolic Gram needs Laurent-polynomial rewrite coefficients")
        return c.with_denom(self.g) if self.g > 1 else c

    def bracket(self, i: int, shift: int):
        x = self._x[i] * LaurentPoly.monomial(-shift, 1, "q", self.g)
        return x - x ** -1

    def qdiff(self, i: int):
        d = self.lam.rs.d[i]
        return LaurentPoly.monomial(d, 1, "q", self.g) - LaurentPoly.monomial(-d, 1, "q", self.g)


class NumericQ:
    """q^(1/g) replaced by a rational number s; entries in Q(zeta_N)."""

    def __init__(self, lam: ToralWeight, s=3):
        self.lam = lam
        self.g = lam.exponent_denominator()
        self.s = Fraction(s)
        self.q = self.s ** self.g
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self._x = [_root_of_unity(lam.t[i]) * self.s ** int(lam.c[i] * self.g)
                   for i in range(lam.rs.rank)]

    def coef(self, c):
        return _coef_at(c, self.q)

    def bracket(self, i: int, shift: int):
        x = self._x[i] * self.q ** (-shift)
        return x - 1 / x

    def qdiff(self, i: int):
        d = self.lam.rs.d[i]
        return self.q ** d - self.q ** (-d)


class AtRoot:
    """q = zeta = exp(2 pi i/ell); entries in a cyclotomic field."""

    def __init__(self, lam: ToralWeight, ell: int):
        self.lam = lam
        self.ell = ell
        spec = specialize(lam, ell)
        self.values = spec.values
        self.zeta = Cyclotomic.zeta(ell)
        self.zero = Cyclotomic.rational(0)
        self.one = Cyclotomic.rational(1)

    def coef(self, c):
        return _coef_at(c, self.zeta)

    def bracket(self, i: int, shift: int):
        x = self.values[i] * self.zeta ** (-shift)
        return x - x.inverse()

    def qdiff(self, i: int):
        d = self.lam.rs.d[i]
        return self.zeta ** d - self.zeta ** (-d)


class Deformed:
    """Lambda * t^rho with q^(1/g) set to a rational s; entries are Laurent polynomials in t."""

    def __init__(self, lam: ToralWeight, s=2):
        self.lam = lam
        self.g = lam.exponent_denominator()
        self.s = Fraction(s)
        self.q = self.s ** self.g
        rs = lam.rs
        self.zero = LaurentPoly("t")
        self.one = LaurentPoly.constant(1, "t")
        # (rho, alpha_i) = d_i
        self._x = [LaurentPoly.monomial(rs.d[i], _root_of_unity(lam.t[i]) * self.s ** int(lam.c[i] * self.g), "t")
                   for i in range(rs.rank)]

    def coef(self, c):
        return _coef_at(c, self.q)

    def bracket(self, i: int, shift: int):
        x = self._x[i] * self.q ** (-shift)
        return x - x ** -1

    def qdiff(self, i: int):
        d = self.lam.rs.d[i]
        return self.q ** d - self.q ** (-d)


class SymbolicZ:
    """Generic weight: Lambda(K_i) = z_i for given rational z_i, q symbolic."""

    def __init__(self, rs: RootSystem, z):
        self.rs = rs
        self.z = [Fraction(x) for x in z]
        self.zero = LaurentPoly("q")
        self.one = LaurentPoly.constant(1, "q")

    def coef(self, c):
        if isinstance(c, RatFunc):
            raise ValueError("symbolic Gram needs Laurent-polynomial rewrite coefficients")
        return c

    def bracket(self, i: int, shift: int):
        x = LaurentPoly.monomial(-shift, self.z[i], "q")
        return x - x ** -1

    def qdiff(self, i: int):
        d = self.rs.d[i]
        return LaurentPoly.monomial(d, 1, "q") - LaurentPoly.monomial(-d, 1, "q")


# -- the engine ---------------------------------------------------------------------

class GramEngine:
    """Memoized normal forms, E-lowerings and Gram matrices for one specializer."""

    def __init__(self, system: RewriteSystem, spec):
        self.system = system
        self.rs = system.rs
        self.spec = spec
        self.rules = {lhs: [(w, spec.coef(c)) for w, c in rhs.items()]
                      for lhs, rhs in system.rules}
        self._nf = {}
        self._lower = {}
        self._gram = {}

    def nf(self, word) -> dict:
        """Normal form of a word as {normal word: coefficient}."""
        word = tuple(word)
        hit = self._nf.get(word)
        if hit is not None:
            return hit
        if len(word) <= 1:
            out = {word: self.spec.one}
        else:
            head, tail = word[0], self.nf(word[1:])
            out = {}
            for v, c in tail.items():
                w = (head,) + v
                lhs = self._leading_prefix(w)
                if lhs is None:
                    out[w] = out[w] + c if w in out else c
                    continue
                rest = w[len(lhs):]
                for u, d in self.rules[lhs]:
                    for x, e in self.nf(u + rest).items():
                        val = c * d * e
                        out[x] = out[x] + val if x in out else val
            out = {w: c for w, c in out.items() if c}
        self._nf[word] = out
        return out

    def _leading_prefix(self, w):
        for lhs in self.rules:
            if w[:len(lhs)] == lhs:
                return lhs
        return None

    def lower(self, i: int, w) -> dict:
        """E_i applied to the normal word w (denominator dropped), in normal form."""
        key = (i, w)
        hit = self._lower.get(key)
        if hit is not None:
            return hit
        rs = self.rs
        out = {}
        tail = [0] * rs.rank
        for p in range(len(w) - 1, -1, -1):
            if w[p] == i:
                shift = sum(rs.form[i][k] * tail[k] for k in range(rs.rank))
                b = self.spec.bracket(i, shift)
                for x, e in self.nf(w[:p] + w[p + 1:]).items():
                    val = b * e
                    out[x] = out[x] + val if x in out else val
            tail[w[p]] += 1
        out = {x: c for x, c in out.items() if c}
        self._lower[key] = out
        return out

    def gram(self, nu):
        """(basis words, matrix G_nu) for the weight space of depth nu."""
        nu = tuple(nu)
        if nu in self._gram:
            return self._gram[nu]
        basis = self.system.normal_words(nu)
        if not any(nu):
            result = (basis, [[self.spec.one]])
            self._gram[nu] = result
            return result
        rows = []
        for u in basis:
            i = u[0]
            sub = tuple(c - (k == i) for k, c in enumerate(nu))
            sub_basis, sub_mat = self.gram(sub)
            row_u = sub_mat[sub_basis.index(u[1:])]
            pos = {x: k for k, x in enumerate(sub_basis)}
            row = []
            for w in basis:
                acc = self.spec.zero
                for x, c in self.lower(i, w).items():
                    g = row_u[pos[x]]
                    if g:
                        acc = acc + g * c
                row.append(acc)
            rows.append(row)
        result = (basis, rows)
        self._gram[nu] = result
        return result

    def scale(self, nu):
        """prod_i (q_i - q_i^-1)^(nu_i), the factor dropped from every entry."""
        out = self.spec.one
        for i, n in enumerate(nu):
            for _ in range(n):
                out = out * self.spec.qdiff(i)
        return out


_ENGINES: dict = {}


def engine_for(lam_or_rs, spec, height: int) -> GramEngine:
    rs = lam_or_rs.rs if isinstance(lam_or_rs, ToralWeight) else lam_or_rs
    system = build_rewrite_system(rs, max(height, 1))
    return GramEngine(system, spec)


# -- reports -------------------------------------------------------------------------

@dataclass
class GramReport:
    weight: object
    nu: tuple
    basis: list
    matrix: list                   # S_nu in the normal-form basis
    scale: str                     # factor relating S_nu to the fraction-free matrix
    rank: int
    determinant: object = None
    vanishing_orders: dict = field(default_factory=dict)
    scaled: list = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.basis)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.matrix[a][b] == self.matrix[b][a] for a in range(n) for b in range(a))

    def to_dict(self) -> dict:
        return {
            "weight": self.weight,
            "nu": list(self.nu),
            "basis": ["".join(f"F{i + 1}" for i in w) or "1" for w in self.basis],
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "scale": self.scale,
            "rank": self.rank,
            "determinant": None if self.determinant is None else str(self.determinant),
            "vanishing_orders": dict(self.vanishing_orders),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GramReport":
        basis = [tuple(int(x) - 1 for x in w.split("F")[1:]) if w != "1" else () for w in data["basis"]]
        return cls(data["weight"], tuple(data["nu"]), basis, data["matrix"], data["scale"],
                   data["rank"], data["determinant"], dict(data.get("vanishing_orders", {})))


def _scale_text(rs, nu) -> str:
    parts = []
    for i, n in enumerate(nu):
        if n:
            qi = "q" if rs.d[i] == 1 else f"q^{rs.d[i]}"
            parts.append(f"({qi} - {qi}^-1)^{n}")
    return " * ".join(parts) or "1"


def contravariant_gram(lam, nu, system: RewriteSystem | None = None, spec=None,
                       with_det: bool = True) -> GramReport:
    """Gram matrix of the contravariant form on M(Lambda) at depth nu.

    ``lam`` is a ToralWeight (generic q unless ``spec`` says otherwise) or a
    RootSystem together with a SymbolicZ specializer.
    """
    nu = tuple(int(x) for x in nu)
    rs = lam.rs if isinstance(lam, ToralWeight) else lam
    if spec is None:
        spec = GenericQ(lam)
    if system is None:
        system = build_rewrite_system(rs, max(sum(nu), 1))
    if sum(nu) > system.height:
        raise HeightTooLarge(f"height {sum(nu)} exceeds the rewrite bound {system.height}")
    eng = GramEngine(system, spec)
    basis, scaled = eng.gram(nu)
    factor = eng.scale(nu)
    r = rank(scaled)
    det = None
    if with_det:
        det = _divide(determinant(scaled), factor ** len(basis))
    mat = [[_divide(x, factor) for x in row] for row in scaled]
    weight = lam.to_dict() if isinstance(lam, ToralWeight) else "symbolic"
    return GramReport(weight, nu, basis, mat, _scale_text(rs, nu), r, det, scaled=scaled)


def _divide(x, y):
    if isinstance(x, LaurentPoly) and isinstance(y, LaurentPoly):
        try:
            return x.exact_div(y)
        except ValueError:
            return RatFunc(x, y)
    if isinstance(y, LaurentPoly):
        return RatFunc(LaurentPoly.constant(x, y.var, y.denom), y)
    return x / y


def simple_graded_dims(lam: ToralWeight, height: int, numeric: bool = False) -> list[int]:
    """dim L_q(Lambda)_j for j = 0..height as sums of Gram ranks.

    With numeric=True q^(1/g) is set to two rational values and the larger rank
    is kept (the generic rank is the maximum over specializations).
    """
    rs = lam.rs
    system = build_rewrite_system(rs, max(height, 1))
    if numeric:
        engines = [GramEngine(system, NumericQ(lam, s)) for s in (3, 7)]
    else:
        engines = [GramEngine(system, GenericQ(lam))]
    dims = []
    for j in range(height + 1):
        total = 0
        for nu in _depths(rs.rank, j):
            total += max(rank(e.gram(nu)[1]) for e in engines)
        dims.append(total)
    return dims


def _depths(rank_: int, height: int):
    if rank_ == 1:
        yield (height,)
        return
    for a in range(height, -1, -1):
        for rest in _depths(rank_ - 1, height - a):
            yield (a,) + rest
