"""GK dimensions of simple highest-weight modules, the constants kappa_0..2,
minimal GK dimensions, the cuspidal criterion and growth-exponent estimation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .hecke import DEFAULT_A_CAP, CoxeterSystem, a_function
from .rootsys import GroupTooLarge, RootSystem, parse_type
from .subsys import (FieldSpec, Infeasible, TooLarge, enumerate_subsystems, kappa0,
                     realize_subsystem)
from .weights import DEFAULT_CAP, ToralWeight, minimal_antidominant_witness, phi_lambda


class InsufficientData(ValueError):
    pass


_A_CACHE: dict = {}


def _a_values(gram, cap, allow_large):
    key = tuple(tuple(r) for r in gram)
    if key not in _A_CACHE:
        W = CoxeterSystem.from_gram(gram)
        _A_CACHE[key] = (W, a_function(W, cap=cap, allow_large=allow_large))
    return _A_CACHE[key]


@dataclass
class GkReport:
    weight: dict
    phi_type: str
    integral_roots: int
    witness_word: list
    witness_length: int
    a_value: int
    d: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: dict) -> "GkReport":
        return cls(**data)


def gk_dimension(lam: ToralWeight, cap: int = DEFAULT_CAP, a_cap: int = DEFAULT_A_CAP,
                 allow_large: bool = False) -> GkReport:
    """d(L_q(Lambda)) = |Phi+| - a_Lambda(w), w minimal with w^-1 . Lambda antidominant."""
    rs = lam.rs
    psi = phi_lambda(lam)
    el, _ = minimal_antidominant_witness(lam, cap)
    simple = list(psi.simple)
    if simple:
        gram = [[rs.inner(rs.roots[a], rs.roots[b]) for b in simple] for a in simple]
        W, a = _a_values(gram, a_cap, allow_large)
        a_val = a[W.element(el.word)]
    else:
        a_val = 0
    return GkReport(lam.to_dict(), psi.label, len(psi), list(el.word), len(el.word),
                    a_val, rs.num_positive - a_val)


# -- kappa constants -------------------------------------------------------------------

def _table2() -> dict:
    with resources.files("qgk.data").joinpath("table2.json").open() as fh:
        return json.load(fh)


def _kappa0_formula(letter: str, n: int) -> int:
    a, b = _table2()["families"][letter]["kappa0"]
    return a * n + b


def kappas(label) -> tuple[int, int, int]:
    """(kappa0, kappa1, kappa2) = (|Phi+ \\ Psi_max+|, <rho, theta^vee>, <rho, theta_s^vee>)."""
    rs = label if isinstance(label, RootSystem) else RootSystem.build(label)
    try:
        k0 = kappa0(rs)
    except (GroupTooLarge, TooLarge):
        (letter, n), = parse_type(rs.label)
        k0 = _kappa0_formula(letter, n)
    k1 = rs.pairing(rs.rho, rs.highest_root)
    k2 = rs.pairing(rs.rho, rs.highest_short_root)
    return k0, int(k1), int(k2)


def min_gk(label, spec: FieldSpec | None = None) -> int:
    """Minimal GK dimension over weights outside the dominant integral set.

    With spec None (or unrestricted torsion) this is min(kappa0, kappa1).  For a
    restricted torsion group the kappa0 value only counts if some subsystem of
    maximal cardinality is realized by a weight respecting spec.
    """
    rs = label if isinstance(label, RootSystem) else RootSystem.build(label)
    k0, k1, _ = kappas(rs)
    if spec is None or spec.D is None or k1 <= k0:
        return min(k0, k1)
    best = rs.num_positive - k0
    for psi in enumerate_subsystems(rs):
        if len(psi.positive) == best and len(psi) < len(rs.roots):
            if not isinstance(realize_subsystem(psi, spec), Infeasible):
                return k0
    return k1


def cuspidal_possible(types) -> bool:
    """Every simple component has min(kappa0, kappa1) equal to its rank."""
    if isinstance(types, str):
        types = [types]
    comps = [c for t in types for c in parse_type(t)]
    for letter, n in comps:
        rs = RootSystem.build(f"{letter}{n}")
        k0, k1, _ = kappas(rs)
        if min(k0, k1) != n:
            return False
    return True


# -- growth exponents --------------------------------------------------------------------

@dataclass
class GrowthSample:
    ell: int
    total: int
    per_degree: list = field(default_factory=list)

    def __post_init__(self):
        if self.per_degree and sum(self.per_degree) != self.total:
            raise ValueError("per-degree dimensions do not sum to the total")

    def to_dict(self) -> dict:
        return {"ell": self.ell, "total": self.total, "per_degree": list(self.per_degree)}

    @classmethod
    def from_dict(cls, data: dict) -> "GrowthSample":
        return cls(data["ell"], data["total"], list(data.get("per_degree", [])))


@dataclass
class GrowthEstimate:
    exponent: object        # int when exact, float otherwise
    exact: bool
    method: str
    slope: float            # two-point log slope between the two largest samples

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _divided_difference_degree(xs, ys):
    """Degree of the interpolating polynomial (via vanishing divided differences)."""
    table = [Fraction(y) for y in ys]
    degree = 0
    for order in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + order] - xs[i]) for i in range(len(table) - 1)]
        if any(table):
            degree = order
    return degree


def growth_exponent(samples, max_degree: int | None = None) -> GrowthEstimate:
    """Polynomial degree of ell -> dim when the samples determine it exactly.

    Exact when the minimal interpolating polynomial has degree below
    (number of samples - 1), or when the samples fit C * ell^d for an integer d.
    Otherwise the log slope between the two largest samples.
    """
    pts = sorted((s.ell, s.total) if isinstance(s, GrowthSample) else tuple(s) for s in samples)
    if len(pts) < 2:
        raise InsufficientData("need at least two samples")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    (x1, y1), (x2, y2) = pts[-2], pts[-1]
    slope = math.log(y2 / y1) / math.log(x2 / x1) if y1 > 0 and y2 > 0 else float("nan")
    deg = _divided_difference_degree(xs, ys)
    if deg < len(pts) - 1 and (max_degree is None or deg <= max_degree):
        return GrowthEstimate(deg, True, "interpolation", slope)
    top = max_degree if max_degree is not None else 12
    for d in range(top + 1):
        ratios = {Fraction(y, x ** d) for x, y in pts}
        if len(ratios) == 1:
            return GrowthEstimate(d, True, "monomial", slope)
    return GrowthEstimate(slope, False, "slope", slope)
