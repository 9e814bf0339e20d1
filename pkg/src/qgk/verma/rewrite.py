"""Degree-bounded rewriting systems for the negative part U_q^- in rank <= 2.

Words are tuples of simple-root indices (F_{w0} F_{w1} ...).  Words are
compared degree-lexicographically with letter order 0 < 1 < ...; the leading
word of a relation is its largest word.  The system is seeded with the quantum
Serre relations and completed by resolving overlaps up to a height bound.
"""

from __future__ import annotations

from itertools import product

from ..exact import LaurentPoly, RatFunc, q_int
from ..rootsys import RootSystem


class UnsupportedType(ValueError):
    pass


class NonConfluent(RuntimeError):
    pass


class HeightTooLarge(ValueError):
    pass


MAX_HEIGHT = 24
_SUPPORTED = {"A1", "A1xA1", "A2", "B2", "C2", "G2"}


def word_key(w):
    return (len(w), w)


class NegWord(tuple):
    """A word F_{i1} F_{i2} ... in the negative generators."""

    def weight(self, rank: int) -> tuple:
        out = [0] * rank
        for i in self:
            out[i] += 1
        return tuple(out)

    @property
    def height(self) -> int:
        return len(self)

    def __str__(self):
        return "".join(f"F{i + 1}" for i in self) or "1"


def _qbinom(n: int, k: int, step: int) -> LaurentPoly:
    num = LaurentPoly.constant(1)
    den = LaurentPoly.constant(1)
    for j in range(1, k + 1):
        num = num * q_int(n - j + 1, step=step)
        den = den * q_int(j, step=step)
    return num.exact_div(den)


def serre_relations(rs: RootSystem) -> list[dict]:
    """sum_k (-1)^k [n choose k]_(q_i) F_i^(n-k) F_j F_i^k with n = 1 - a_ij."""
    rels = []
    for i in range(rs.rank):
        for j in range(rs.rank):
            if i == j:
                continue
            n = 1 - rs.cartan[i][j]
            rel = {}
            for k in range(n + 1):
                coef = _qbinom(n, k, rs.d[i]) * (-1) ** k
                rel[(i,) * (n - k) + (j,) + (i,) * k] = RatFunc(coef)
            rels.append(rel)
    return rels


def _add(poly, word, c):
    if word in poly:
        s = poly[word] + c
        if s:
            poly[word] = s
        else:
            del poly[word]
    elif c:
        poly[word] = c


class RewriteSystem:
    """Rules lhs -> sum c_w w with every w below lhs; confluent up to ``height``."""

    def __init__(self, rs: RootSystem, rules, height: int):
        self.rs = rs
        self.rank = rs.rank
        self.height = height
        self.rules = list(rules)        # [(lhs, {word: coef})]
        self.lhs = {lhs: k for k, (lhs, _) in enumerate(self.rules)}
        self.max_lhs = max((len(l) for l, _ in self.rules), default=0)
        self._normal = {}

    # -- reduction ---------------------------------------------------------
    def find(self, word, start: int = 0):
        """Leftmost (position, rule index) of a left-hand side inside word."""
        for p in range(start, len(word)):
            for length in range(2, min(self.max_lhs, len(word) - p) + 1):
                k = self.lhs.get(word[p:p + length])
                if k is not None:
                    return p, k
        return None

    def is_normal(self, word) -> bool:
        return self.find(word) is None

    def reduce(self, poly: dict) -> dict:
        """Full reduction of {word: coef}, largest words first."""
        work = dict(poly)
        out = {}
        while work:
            w = max(work, key=word_key)
            c = work.pop(w)
            hit = self.find(w)
            if hit is None:
                _add(out, w, c)
                continue
            p, k = hit
            lhs, rhs = self.rules[k]
            for v, d in rhs.items():
                _add(work, w[:p] + v + w[p + len(lhs):], c * d)
        return out

    def normal_words(self, nu) -> list[tuple]:
        """Normal words of weight nu, sorted degree-lexicographically."""
        nu = tuple(nu)
        if sum(nu) > self.height:
            raise HeightTooLarge(f"height {sum(nu)} exceeds the rewrite bound {self.height}")
        if nu in self._normal:
            return self._normal[nu]
        if any(c < 0 for c in nu):
            return []
        if not any(nu):
            words = [()]
        else:
            words = []
            for i in range(self.rank):
                if nu[i] == 0:
                    continue
                rest = tuple(c - (k == i) for k, c in enumerate(nu))
                for u in self.normal_words(rest):
                    w = (i,) + u
                    if not any(w[:len(l)] == l for l in self.lhs):
                        words.append(w)
            words.sort(key=word_key)
        self._normal[nu] = words
        return words

    # -- certification ---------------------------------------------------------
    def check_counts(self, height: int | None = None) -> bool:
        """Normal-word count equals the Kostant partition function for every weight."""
        height = self.height if height is None else height
        for nu in _weights_up_to(self.rank, height):
            if len(self.normal_words(nu)) != self.rs.kostant_partition(nu):
                return False
        return True

    def check_confluence(self, height: int = 8) -> bool:
        """Every single rewriting step followed by full reduction gives the same result."""
        for n in range(2, min(height, self.height) + 1):
            for w in product(range(self.rank), repeat=n):
                canonical = self.reduce({w: RatFunc(LaurentPoly.constant(1))})
                for p in range(n):
                    for length in range(2, min(self.max_lhs, n - p) + 1):
                        k = self.lhs.get(w[p:p + length])
                        if k is None:
                            continue
                        lhs, rhs = self.rules[k]
                        step = {}
                        for v, d in rhs.items():
                            _add(step, w[:p] + v + w[p + length:], d)
                        diff = dict(canonical)
                        for v, d in self.reduce(step).items():
                            _add(diff, v, -d)
                        if diff:
                            return False
        return True

    def unit_leading_terms(self) -> bool:
        """Every rule coefficient is a Laurent polynomial (leading coefficients are 1)."""
        return all(isinstance(c, LaurentPoly) or c.is_polynomial()
                   for _, rhs in self.rules for c in rhs.values())

    def to_dict(self) -> dict:
        return {"type": self.rs.label, "height": self.height,
                "rules": [{"lhs": list(l), "rhs": [[list(w), str(c)] for w, c in rhs.items()]}
                          for l, rhs in self.rules]}

    def __repr__(self):
        return f"RewriteSystem({self.rs.label}, {len(self.rules)} rules, height {self.height})"


def _weights_up_to(rank: int, height: int):
    for h in range(height + 1):
        for nu in product(range(h + 1), repeat=rank):
            if sum(nu) == h:
                yield nu


def _make_rule(poly):
    lead = max(poly, key=word_key)
    inv = poly[lead].inverse()
    return lead, {w: -c * inv for w, c in poly.items() if w != lead}


def _overlaps(r1, r2, height):
    """Ambiguities between two rules as pairs of one-step reductions."""
    (l1, s1), (l2, s2) = r1, r2
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k] and len(l1) + len(l2) - k <= height:
            tail, head = l2[k:], l1[:-k]
            poly = {}
            for w, c in s1.items():
                _add(poly, w + tail, c)
            for w, c in s2.items():
                _add(poly, head + w, -c)
            out.append(poly)
    if l1 != l2 and len(l2) < len(l1):
        for p in range(len(l1) - len(l2) + 1):
            if l1[p:p + len(l2)] == l2:
                poly = dict(s1)
                for w, c in s2.items():
                    _add(poly, l1[:p] + w + l1[p + len(l2):], -c)
                out.append(poly)
    return out


_CACHE: dict = {}


def build_rewrite_system(rs, height: int = 12, verify: bool = True) -> RewriteSystem:
    """Complete the Serre relations up to ``height`` and certify the result."""
    if isinstance(rs, str):
        rs = RootSystem.build(rs)
    if rs.label not in _SUPPORTED:
        raise UnsupportedType(f"rewriting is implemented for rank <= 2, not {rs.label}")
    if height > MAX_HEIGHT:
        raise HeightTooLarge(f"height {height} exceeds {MAX_HEIGHT}")
    key = (rs.label, height)
    if key in _CACHE:
        return _CACHE[key]
    system = RewriteSystem(rs, [], height)
    for rel in serre_relations(rs):
        red = system.reduce(rel)
        if red:
            system = RewriteSystem(rs, system.rules + [_make_rule(red)], height)
    done = set()
    changed = True
    while changed:
        changed = False
        for a in range(len(system.rules)):
            for b in range(len(system.rules)):
                if (a, b) in done:
                    continue
                done.add((a, b))
                for poly in _overlaps(system.rules[a], system.rules[b], height):
                    red = system.reduce(poly)
                    if red:
                        system = RewriteSystem(rs, system.rules + [_make_rule(red)], height)
                        changed = True
    # convert coefficients to Laurent polynomials where possible
    rules = []
    for lhs, rhs in system.rules:
        rules.append((lhs, {w: c.as_poly() if c.is_polynomial() else c for w, c in rhs.items()}))
    final = RewriteSystem(rs, rules, height)
    if verify:
        if not system.check_counts():
            raise NonConfluent("normal-word counts differ from the Kostant partition function")
        if not system.check_confluence(min(height, 8)):
            raise NonConfluent("rewriting system is not confluent")
    _CACHE[key] = final
    return final
