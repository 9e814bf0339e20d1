"""Root subsystems: closures, duality, conjugacy classes, maximal subsystems,
the gamma invariant and the search for toral weights with a prescribed
integral subsystem."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from importlib import resources
from math import gcd, lcm

import numpy as np

from .exact import smith_normal_form
from .rootsys import GroupTooLarge, Reducible, RootSystem, classify, parse_type


class TooLarge(RuntimeError):
    pass


class NotApplicable(ValueError):
    pass


class RootSubsystem:
    """A subset of roots closed under negation and its own reflections."""

    def __init__(self, rs: RootSystem, members, origin=None):
        self.rs = rs
        self.members = frozenset(members)
        self.origin = origin
        self._simple = None
        self._label = None

    @property
    def positive(self) -> frozenset:
        p = self.rs.num_positive
        return frozenset(k for k in self.members if k < p)

    @property
    def simple(self) -> tuple:
        """Indecomposable positive members, sorted by index."""
        if self._simple is None:
            rs = self.rs
            pos = sorted(self.positive)
            vecs = {k: rs.roots[k] for k in pos}
            sums = set()
            for a in pos:
                for b in pos:
                    if a < b:
                        sums.add(tuple(x + y for x, y in zip(vecs[a], vecs[b])))
            self._simple = tuple(k for k in pos if vecs[k] not in sums)
        return self._simple

    @property
    def label(self) -> str:
        if self._label is None:
            self._label = classify(self.rs, self.simple, annotate=True)
        return self._label

    @property
    def rank(self) -> int:
        return len(self.simple)

    def __len__(self):
        return len(self.members)

    def __contains__(self, k):
        return k in self.members

    def __eq__(self, other):
        return isinstance(other, RootSubsystem) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def roots(self) -> list:
        return [self.rs.roots[k] for k in sorted(self.members)]

    def mask(self) -> int:
        return sum(1 << k for k in self.members)

    def is_valid(self) -> bool:
        rs = self.rs
        for k in self.members:
            if rs.negate_index(k) not in self.members:
                return False
            perm = rs.reflection_perm(k)
            if any(perm[j] not in self.members for j in self.members):
                return False
        return True

    def __repr__(self):
        return f"RootSubsystem({self.label}, |Psi+|={len(self.positive)})"


def reflection_closure(rs: RootSystem, seed) -> RootSubsystem:
    """Smallest subsystem containing the seed (indices or root vectors)."""
    idx = set()
    for s in seed:
        idx.add(s if isinstance(s, int) else rs.index[tuple(s)])
    members = set(idx) | {rs.negate_index(k) for k in idx}
    frontier = list(members)
    while frontier:
        new = []
        for b in list(members):
            perm = rs.reflection_perm(b)
            for k in list(members):
                img = perm[k]
                if img not in members:
                    members.add(img)
                    new.append(img)
        frontier = new
    return RootSubsystem(rs, members)


def full_system(rs: RootSystem) -> RootSubsystem:
    return RootSubsystem(rs, range(len(rs.roots)))


def is_closed(psi: RootSubsystem) -> bool:
    """alpha, beta in Psi and alpha + beta a root imply alpha + beta in Psi."""
    rs = psi.rs
    mem = sorted(psi.members)
    for i, a in enumerate(mem):
        va = rs.roots[a]
        for b in mem[i:]:
            s = tuple(x + y for x, y in zip(va, rs.roots[b]))
            k = rs.index.get(s)
            if k is not None and k not in psi.members:
                return False
    return True


def dual_system(rs: RootSystem) -> tuple[RootSystem, list]:
    """The coroot system and the index map root -> coroot."""
    n = rs.rank
    norms = [rs.form[i][i] for i in range(n)]
    raw = [[4 * rs.form[i][j] / (norms[i] * norms[j]) for j in range(n)] for i in range(n)]
    short = min(raw[i][i] for i in range(n))
    form = [[int(round(x * 2 / short)) for x in row] for row in raw]
    dual = RootSystem(form)
    mapping = []
    for v in rs.roots:
        nv = rs.inner(v, v)
        coords = tuple(int(round(c * norms[i] / nv)) for i, c in enumerate(v))
        mapping.append(dual.index[coords])
    return dual, mapping


def dual(psi: RootSubsystem) -> RootSubsystem:
    d, mapping = dual_system(psi.rs)
    return RootSubsystem(d, [mapping[k] for k in psi.members])


def is_dual_closed(psi: RootSubsystem) -> bool:
    return is_closed(dual(psi))


def parabolic(rs: RootSystem, simple_subset) -> RootSubsystem:
    return reflection_closure(rs, [rs.simple_indices[i] for i in simple_subset])


# -- conjugacy ------------------------------------------------------------------

class _Conjugator:
    """Canonical forms of root subsets under the Weyl group (as bitmasks)."""

    def __init__(self, rs: RootSystem, cap: int = 1200):
        if len(rs.roots) > 62:
            raise TooLarge("bitmask canonical forms need at most 62 roots")
        group = rs.weyl_group(cap=cap)
        self.perms = np.array([w.perm for w in group], dtype=np.int64)
        self.pow2 = np.left_shift(np.int64(1), np.arange(len(rs.roots), dtype=np.int64))

    def canonical(self, members) -> int:
        cols = np.fromiter(members, dtype=np.int64)
        if cols.size == 0:
            return 0
        images = self.pow2[self.perms[:, cols]].sum(axis=1)
        return int(images.min())


def _from_mask(rs, mask):
    return [k for k in range(len(rs.roots)) if mask >> k & 1]


def enumerate_subsystems(rs: RootSystem, cap: int = 1200) -> list[RootSubsystem]:
    """All subsystems up to W-conjugacy, by breadth-first closure search."""
    if len(rs.roots) > 48:
        raise TooLarge(f"{rs.label} has more than 48 roots")
    conj = _Conjugator(rs, cap)
    empty = RootSubsystem(rs, ())
    seen = {0: empty}
    frontier = [empty]
    while frontier:
        nxt = []
        for psi in frontier:
            for k in range(rs.num_positive):
                if k in psi.members:
                    continue
                child = reflection_closure(rs, list(psi.positive) + [k])
                key = conj.canonical(child.members)
                if key not in seen:
                    rep = RootSubsystem(rs, _from_mask(rs, key))
                    seen[key] = rep
                    nxt.append(rep)
        frontier = nxt
    return sorted(seen.values(), key=lambda s: (len(s), s.label))


def conjugacy_key(psi: RootSubsystem, cap: int = 1200) -> int:
    return _Conjugator(psi.rs, cap).canonical(psi.members)


def maximal_by_enumeration(rs: RootSystem, cap: int = 1200) -> list[RootSubsystem]:
    """Inclusion-maximal proper subsystems, one per conjugacy class."""
    out = []
    total = len(rs.roots)
    for psi in enumerate_subsystems(rs, cap):
        if len(psi) == total:
            continue
        if all(len(reflection_closure(rs, list(psi.positive) + [k])) == total
               for k in range(rs.num_positive) if k not in psi.members):
            out.append(psi)
    return out


# -- catalog ---------------------------------------------------------------------

def load_catalog() -> dict:
    with resources.files("qgk.data").joinpath("table1.json").open() as fh:
        return json.load(fh)


def positive_count(label: str) -> int:
    """|Psi+| of a (possibly reducible) type label such as 'A1xE7' or 'A2^LxA2^S'."""
    total = 0
    for part in label.replace("^L", "").replace("^S", "").split("x"):
        (letter, n), = parse_type(part)
        total += {
            "A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, 0), "F": 24, "G": 6,
        }[letter]
    return total


def maximal_subsystems(rs: RootSystem, cap: int = 1200) -> list[dict]:
    """Maximal subsystem classes as {label, positive_count}.

    Enumerated when there are at most 48 roots, read from the catalog otherwise.
    """
    if len(rs.components) != 1:
        raise Reducible(f"{rs.label} is not irreducible")
    if len(rs.roots) <= 48:
        return [{"label": p.label, "positive_count": len(p.positive)}
                for p in maximal_by_enumeration(rs, cap)]
    entry = load_catalog()["types"].get(rs.label)
    if entry is None:
        raise TooLarge(f"no catalog entry for {rs.label}")
    return [{"label": c["canonical"], "positive_count": positive_count(c["canonical"])}
            for c in entry["classes"]]


def kappa0(rs: RootSystem, cap: int = 1200) -> int:
    """|Phi+| minus the largest |Psi+| over proper subsystems."""
    best = max(c["positive_count"] for c in maximal_subsystems(rs, cap))
    return rs.num_positive - best


def gamma_invariant(rs: RootSystem) -> int:
    """lcm of the prime marks of the highest root (1 if there are none)."""
    primes = [h for h in rs.marks() if _is_prime(h)]
    return reduce(lcm, primes, 1)


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def borel_de_siebenthal(rs: RootSystem, cap: int = 1200) -> list[RootSubsystem]:
    """Maximal closed subsystems up to conjugacy from (extended) Dynkin diagram deletions."""
    if len(rs.components) != 1:
        raise Reducible(f"{rs.label} is not irreducible")
    theta = rs.highest_root
    neg_theta = rs.index[tuple(-c for c in theta)]
    cands = []
    for i, h in enumerate(theta):
        rest = [rs.simple_indices[j] for j in range(rs.rank) if j != i]
        if h == 1:
            psi = reflection_closure(rs, rest)
            psi.origin = ("parabolic", i, h)
            cands.append(psi)
        elif _is_prime(h):
            psi = reflection_closure(rs, rest + [neg_theta])
            psi.origin = ("extended", i, h)
            cands.append(psi)
    out, keys = [], set()
    try:
        conj = _Conjugator(rs, cap)
        keyfn = lambda p: conj.canonical(p.members)
    except (GroupTooLarge, TooLarge):
        keyfn = lambda p: (p.label, len(p))
    for psi in cands:
        k = keyfn(psi)
        if k not in keys:
            keys.add(k)
            out.append(psi)
    return out


# -- realizability -----------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Torsion values in (1/D)Z/Z (D=None: unrestricted search bound) and
    q-exponents in (1/g)Z."""

    D: int | None = 2
    g: int = 1

    def __post_init__(self):
        if (self.D is not None and self.D < 1) or self.g < 1:
            raise ValueError("FieldSpec denominators must be positive")


@dataclass(frozen=True)
class Infeasible:
    """Certificate that an exhaustive search found no weight."""

    target: str
    spec: FieldSpec
    searched: int

    def __bool__(self):
        return False


def _congruence_solutions(rows, moduli, n, period, limit):
    """Residues x in (Z/period)^n with sum(rows[r][i] x_i) = 0 mod moduli[r] for all r."""
    if not rows:
        basis = [[int(i == j) for j in range(n)] for i in range(n)]
        steps = [1] * n
    else:
        big = reduce(lcm, moduli, 1)
        mat = [[(big // m) * a for a in row] for row, m in zip(rows, moduli)]
        u, d, v = smith_normal_form(mat)
        steps = []
        for i in range(n):
            di = d[i][i] if i < len(d) else 0
            steps.append(big // gcd(di, big) if di else 1)
        basis = [[v[r][i] for r in range(n)] for i in range(n)]  # columns of V
    counts = [period // gcd(period, s) for s in steps]
    total = 1
    for c in counts:
        total *= c
    if total > limit:
        raise TooLarge(f"congruence search space {total} exceeds {limit}")
    sols = set()
    idx = [0] * n
    while True:
        x = [0] * n
        for i in range(n):
            if idx[i]:
                y = idx[i] * steps[i]
                for r in range(n):
                    x[r] += basis[i][r] * y
        sols.add(tuple(c % period for c in x))
        k = 0
        while k < n:
            idx[k] += 1
            if idx[k] < counts[k]:
                break
            idx[k] = 0
            k += 1
        if k == n:
            break
    return sorted(sols)


def realize_subsystem(psi: RootSubsystem, spec: FieldSpec, limit: int = 500000):
    """A toral weight with integral subsystem psi, or an Infeasible certificate."""
    from fractions import Fraction
    from .weights import ToralWeight, phi_lambda

    rs = psi.rs
    n = rs.rank
    D = spec.D if spec.D is not None else 2 * max(max(rs.marks()) if len(rs.components) == 1 else 1, 2)
    g = spec.g
    period_c = max(rs.d) * g
    simple = [rs.roots[k] for k in psi.simple]
    # torsion: 2 t(alpha) = 0 in Q/Z for alpha in Psi, with t_i = k_i / D
    t_rows = [[2 * c for c in v] for v in simple]
    torsions = _congruence_solutions(t_rows, [D] * len(t_rows), n, D, limit)
    # exponents: c(2 alpha)/(alpha, alpha) integral, with c_i = x_i / g
    c_rows = [[2 * c for c in v] for v in simple]
    c_mods = [g * rs.inner(v, v) for v in simple]
    exps = _congruence_solutions(c_rows, c_mods, n, period_c, limit)
    if len(torsions) * len(exps) > limit:
        raise TooLarge("realizability search space too large")
    searched = 0
    for k in torsions:
        for x in exps:
            searched += 1
            lam = ToralWeight(rs, [Fraction(a, D) for a in k], [Fraction(b, g) for b in x])
            if phi_lambda(lam).members == psi.members:
                return lam
    return Infeasible(psi.label, spec, searched)


def cartan_closed_witness(psi: RootSubsystem):
    """Lambda(K_i) = eps q^(d_i) with eps a primitive 2h_i-th root of unity,
    Lambda(K_j) = 1 otherwise, for a subsystem from an extended-diagram deletion
    at a node with prime mark h_i."""
    from fractions import Fraction
    from .weights import ToralWeight, phi_lambda

    if not psi.origin or psi.origin[0] != "extended":
        raise NotApplicable("witness exists only for deletions at a prime mark")
    _, i, h = psi.origin
    rs = psi.rs
    t = [Fraction(0)] * rs.rank
    c = [Fraction(0)] * rs.rank
    t[i] = Fraction(1, 2 * h)
    c[i] = Fraction(rs.d[i])
    lam = ToralWeight(rs, t, c)
    if phi_lambda(lam).members != psi.members:
        raise AssertionError("constructed weight does not realize the subsystem")
    return lam
