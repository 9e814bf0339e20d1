"""Simple quotients of baby Verma modules at roots of unity and the
dimension-growth experiment."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exact import rank
from ..gk import GrowthSample, growth_exponent, gk_dimension
from ..weights import ToralWeight, is_admissible, specialize
from .gram import AtRoot, GenericQ, GramEngine, NumericQ, _depths
from .rewrite import MAX_HEIGHT, build_rewrite_system


class InadmissibleOrder(ValueError):
    pass


def _two_rho(rs) -> tuple:
    out = [0] * rs.rank
    for a in rs.positive:
        for i, c in enumerate(a):
            out[i] += c
    return tuple(out)


def full_height(rs, ell: int) -> int:
    """Top degree of the baby Verma module: (ell - 1) * height(2 rho)."""
    return (ell - 1) * sum(_two_rho(rs))


@dataclass
class BabyVermaReport:
    ell: int
    weight: dict
    specialized: list          # Lambda_zeta(K_i) as strings
    per_degree: list
    height: int
    full_height: int

    @property
    def total(self) -> int:
        return sum(self.per_degree)

    @property
    def truncated(self) -> bool:
        return self.height < self.full_height

    def to_dict(self) -> dict:
        return {"ell": self.ell, "weight": self.weight, "specialized": self.specialized,
                "per_degree": list(self.per_degree), "height": self.height,
                "full_height": self.full_height, "total": self.total,
                "truncated": self.truncated}

    @classmethod
    def from_dict(cls, data: dict) -> "BabyVermaReport":
        return cls(data["ell"], data["weight"], list(data["specialized"]),
                   list(data["per_degree"]), data["height"], data["full_height"])


def baby_verma_head(lam: ToralWeight, ell: int, height: int | None = None) -> BabyVermaReport:
    """Graded dimensions of L_zeta(Lambda) from Gram ranks at q = zeta.

    Weight spaces outside the baby Verma support (nu_i > (ell - 1) (2 rho)_i)
    are skipped; they lie in the radical.
    """
    rs = lam.rs
    if not is_admissible(ell, lam):
        raise InadmissibleOrder(f"ell = {ell} is not admissible for {lam}")
    top = full_height(rs, ell)
    h = min(top, MAX_HEIGHT) if height is None else min(height, top)
    system = build_rewrite_system(rs, max(h, 1))
    spec = AtRoot(lam, ell)
    eng = GramEngine(system, spec)
    bound = [(ell - 1) * c for c in _two_rho(rs)]
    dims = []
    for j in range(h + 1):
        total = 0
        for nu in _depths(rs.rank, j):
            if all(a <= b for a, b in zip(nu, bound)):
                total += rank(eng.gram(nu)[1])
        dims.append(total)
    return BabyVermaReport(ell, lam.to_dict(), [str(v) for v in spec.values], dims, h, top)


@dataclass
class GrowthReport:
    weight: dict
    samples: list
    estimate: object
    gk: int
    agreement: list            # J(ell) per sample
    m: int
    generic_dims: list = field(default_factory=list)

    @property
    def exponent_matches(self) -> bool:
        return self.estimate.exact and self.estimate.exponent == self.gk

    @property
    def agreement_ok(self) -> bool:
        return all(j * self.m >= s.ell for j, s in zip(self.agreement, self.samples))

    def csv_rows(self) -> list[list]:
        est = self.estimate.exponent if self.estimate.exact else f"{self.estimate.exponent:.4f}"
        return [[s.ell, s.total, est, j] for s, j in zip(self.samples, self.agreement)]

    def to_dict(self) -> dict:
        return {"weight": self.weight, "samples": [s.to_dict() for s in self.samples],
                "estimate": self.estimate.to_dict(), "gk": self.gk,
                "agreement": list(self.agreement), "m": self.m,
                "agreement_ok": self.agreement_ok}


def generic_graded_dims(lam: ToralWeight, height: int, numeric: bool = True) -> list[int]:
    """dim L_q(Lambda)_j for j <= height (see gram.simple_graded_dims)."""
    rs = lam.rs
    system = build_rewrite_system(rs, max(height, 1))
    if numeric:
        engines = [GramEngine(system, NumericQ(lam, s)) for s in (3, 7)]
    else:
        engines = [GramEngine(system, GenericQ(lam))]
    dims = []
    for j in range(height + 1):
        dims.append(sum(max(rank(e.gram(nu)[1]) for e in engines) for nu in _depths(rs.rank, j)))
    return dims


def growth_experiment(lam: ToralWeight, ells, m: int = 8, height: int | None = None) -> GrowthReport:
    """Baby Verma heads over several ell, their growth exponent, and J(ell).

    J(ell) is the largest J such that dim L_zeta(Lambda)_j = dim L_q(Lambda)_j
    for all j <= J (capped at the computed height).
    """
    reports = [baby_verma_head(lam, ell, height) for ell in ells]
    top = max(r.height for r in reports)
    generic = generic_graded_dims(lam, top)
    samples = []
    agreement = []
    for r in reports:
        samples.append(GrowthSample(r.ell, r.total, list(r.per_degree)))
        j = -1
        while j + 1 <= r.height and r.per_degree[j + 1] == generic[j + 1]:
            j += 1
        agreement.append(j)
    estimate = growth_exponent(samples)
    gk = gk_dimension(lam).d
    return GrowthReport(lam.to_dict(), samples, estimate, gk, agreement, m, generic)
