"""Hecke algebras of finite Weyl groups, Kazhdan-Lusztig bases and Lusztig's
a-function.

Normalization: (T_s + v^-1)(T_s - v) = 0, C_s = T_s + v^-1, and
C_w = sum_y p_(y,w) T_y with p_(w,w) = 1 and p_(y,w) in v^-1 Z[v^-1] for y < w.
Elements of W are integers indexing a breadth-first enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact import LaurentPoly
from .rootsys import GroupTooLarge, RootSystem

V_ONE = LaurentPoly.constant(1, "v")
V = LaurentPoly.monomial(1, 1, "v")
V_INV = LaurentPoly.monomial(-1, 1, "v")
V_SUM = V + V_INV          # v + v^-1
V_DIFF = V - V_INV         # v - v^-1

DEFAULT_A_CAP = 400


class CoxeterSystem:
    """A finite Weyl group with multiplication tables by simple reflections."""

    def __init__(self, rs: RootSystem, cap: int = 1200):
        self.rs = rs
        self.rank = rs.rank
        group = rs.weyl_group(cap=cap)
        self.size = len(group)
        self.perms = [w.perm for w in group]
        self.index = {p: k for k, p in enumerate(self.perms)}
        self.length = [w.length for w in group]
        n_roots = len(rs.roots)
        self.left = []
        self.right = []
        for i in range(rs.rank):
            s = rs.simple_perm(i)
            self.left.append([self.index[tuple(s[p[k]] for k in range(n_roots))] for p in self.perms])
            self.right.append([self.index[tuple(p[s[k]] for k in range(n_roots))] for p in self.perms])
        self.identity = 0
        self.longest = max(range(self.size), key=lambda k: self.length[k])
        self._words = None
        self._inverse = None

    @classmethod
    def from_gram(cls, gram, cap: int = 1200) -> "CoxeterSystem":
        """From the Gram matrix of a set of simple roots (any positive scaling per component)."""
        n = len(gram)
        comps = []
        seen = set()
        for s in range(n):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and gram[i][j]:
                        seen.add(j)
                        stack.append(j)
            comps.append(comp)
        form = [[Fraction(x) for x in row] for row in gram]
        for comp in comps:
            short = min(form[i][i] for i in comp)
            for i in comp:
                for j in range(n):
                    form[i][j] = form[i][j] * 2 / short
        return cls(RootSystem([[int(x) for x in row] for row in form]), cap)

    @property
    def words(self) -> list[tuple]:
        """A reduced word for every element (built by left multiplication)."""
        if self._words is None:
            words = [None] * self.size
            words[0] = ()
            order = sorted(range(self.size), key=lambda k: self.length[k])
            for w in order:
                if w == 0:
                    continue
                for i in range(self.rank):
                    u = self.left[i][w]
                    if self.length[u] < self.length[w]:
                        words[w] = (i,) + words[u]
                        break
            self._words = words
        return self._words

    def element(self, word) -> int:
        w = 0
        for i in reversed(tuple(word)):
            w = self.left[i][w]
        return w

    def inverse(self, w: int) -> int:
        if self._inverse is None:
            self._inverse = [self.element(tuple(reversed(self.words[k]))) for k in range(self.size)]
        return self._inverse[w]

    def mul(self, x: int, y: int) -> int:
        for i in reversed(self.words[x]):
            y = self.left[i][y]
        return y

    def left_descent(self, w: int) -> list[int]:
        return [i for i in range(self.rank) if self.length[self.left[i][w]] < self.length[w]]

    def reduced_word_count(self) -> list[int]:
        counts = [0] * self.size
        counts[0] = 1
        for w in sorted(range(1, self.size), key=lambda k: self.length[k]):
            counts[w] = sum(counts[self.left[i][w]] for i in self.left_descent(w))
        return counts

    def order(self) -> int:
        return self.size


# -- Hecke algebra in the standard basis --------------------------------------------

class HeckeElement:
    """Finite Z[v, v^-1]-combination of standard basis elements T_w."""

    __slots__ = ("W", "terms")

    def __init__(self, W: CoxeterSystem, terms=None):
        self.W = W
        self.terms = {w: p for w, p in (terms or {}).items() if p}

    @classmethod
    def T(cls, W, w: int) -> "HeckeElement":
        return cls(W, {w: V_ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out[w] + p if w in out else p
        return HeckeElement(self.W, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.constant(-1, "v"))

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.W, {w: p * c for w, p in self.terms.items()})

    def left_Ts(self, i: int) -> "HeckeElement":
        """T_s * self."""
        W = self.W
        out = {}
        for y, p in self.terms.items():
            sy = W.left[i][y]
            out[sy] = out[sy] + p if sy in out else p
            if W.length[sy] < W.length[y]:
                out[y] = out[y] + p * V_DIFF if y in out else p * V_DIFF
        return HeckeElement(W, out)

    def left_Ts_inverse(self, i: int) -> "HeckeElement":
        """T_s^-1 * self, using T_s^-1 = T_s - (v - v^-1)."""
        return self.left_Ts(i) - self.scale(V_DIFF)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        W = self.W
        out = HeckeElement(W)
        for x, p in self.terms.items():
            acc = other
            for i in reversed(W.words[x]):
                acc = acc.left_Ts(i)
            out = out + acc.scale(p)
        return out

    def bar(self) -> "HeckeElement":
        """The involution v -> v^-1, T_w -> T_(w^-1)^-1."""
        W = self.W
        out = HeckeElement(W)
        for y, p in self.terms.items():
            # T_(y^-1)^-1 = T_(s1)^-1 ... T_(sk)^-1 for y = s1 ... sk
            acc = HeckeElement.T(W, 0)
            for i in reversed(W.words[y]):
                acc = acc.left_Ts_inverse(i)
            out = out + acc.scale(p.bar())
        return out

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = LaurentPoly.constant(0, "v")
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    def __repr__(self):
        words = self.W.words
        parts = [f"({p})*T{list(words[w])}" for w, p in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return a * b


def C_s(W: CoxeterSystem, i: int) -> HeckeElement:
    s = W.left[i][0]
    return HeckeElement(W, {s: V_ONE, 0: V_INV})


# -- Kazhdan-Lusztig basis -------------------------------------------------------------

class KLData:
    """KL basis elements and mu-coefficients of a Coxeter system."""

    def __init__(self, W: CoxeterSystem):
        self.W = W
        order = sorted(range(W.size), key=lambda k: W.length[k])
        basis = {0: HeckeElement.T(W, 0)}
        mu = {0: {}}
        for w in order[1:]:
            i = W.left_descent(w)[0]
            u = W.left[i][w]
            cu = basis[u]
            # C_s C_u in the standard basis
            prod = cu.left_Ts(i) + cu.scale(V_INV)
            for z, m in mu[u].items():
                if W.length[W.left[i][z]] < W.length[z]:
                    prod = prod - basis[z].scale(LaurentPoly.constant(m, "v"))
            basis[w] = prod
            mu[w] = {}
            for z, p in prod.terms.items():
                if z != w:
                    c = p.coeff(-1)
                    if c:
                        mu[w][z] = int(c)
        self.basis = basis
        self.mu = mu

    def C(self, w: int) -> HeckeElement:
        return self.basis[w]

    def kl_polynomial(self, y: int, w: int) -> LaurentPoly:
        return self.basis[w].terms.get(y, LaurentPoly.constant(0, "v"))

    def left_C_s(self, i: int, vec: dict) -> dict:
        """C_s * (sum vec[z] C_z), expressed in the KL basis."""
        W = self.W
        out = {}

        def add(z, p):
            if z in out:
                out[z] = out[z] + p
            else:
                out[z] = p

        for z, h in vec.items():
            sz = W.left[i][z]
            if W.length[sz] < W.length[z]:
                add(z, h * V_SUM)
            else:
                add(sz, h)
                for z2, m in self.mu[z].items():
                    if W.length[W.left[i][z2]] < W.length[z2]:
                        add(z2, h * m)
        return {z: p for z, p in out.items() if p}

    def products_with(self, y: int) -> list[dict]:
        """[C_x C_y for every x], each as {z: h_(x,y,z)}."""
        W = self.W
        col = [None] * W.size
        col[0] = {y: V_ONE}
        for x in sorted(range(1, W.size), key=lambda k: W.length[k]):
            i = W.left_descent(x)[0]
            u = W.left[i][x]
            vec = self.left_C_s(i, col[u])
            for z, m in self.mu[u].items():
                if W.length[W.left[i][z]] < W.length[z]:
                    for t, h in col[z].items():
                        vec[t] = vec[t] - h * m if t in vec else h * (-m)
            col[x] = {t: p for t, p in vec.items() if p}
        return col


def kl_basis(W: CoxeterSystem, w: int, data: KLData | None = None) -> HeckeElement:
    return (data or KLData(W)).C(w)


def structure_constants(W: CoxeterSystem, x: int, y: int, data: KLData | None = None) -> dict:
    """{z: h_(x,y,z)} with C_x C_y = sum h_(x,y,z) C_z."""
    data = data or KLData(W)
    return dict(data.products_with(y)[x])


def a_function(W: CoxeterSystem, cap: int = DEFAULT_A_CAP, allow_large: bool = False,
               data: KLData | None = None) -> list[int]:
    """a(z) = max over x, y of the v-degree of h_(x,y,z)."""
    if W.size > cap and not allow_large:
        raise GroupTooLarge(f"a-function over {W.size} elements exceeds cap {cap}")
    data = data or KLData(W)
    a = [0] * W.size
    for y in range(W.size):
        for vec in data.products_with(y):
            for z, h in vec.items():
                deg = h.high
                if deg > a[z]:
                    a[z] = deg
    return a


def unique_reduced_expression_cell(W: CoxeterSystem) -> list[int]:
    counts = W.reduced_word_count()
    return [w for w in range(1, W.size) if counts[w] == 1]


# -- type A oracle ------------------------------------------------------------------------

def one_line(word, n: int) -> list[int]:
    """Permutation of {0..n} for a word in the simple transpositions s_i = (i, i+1)."""
    perm = list(range(n + 1))
    for i in word:
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def rs_shape(perm) -> list[int]:
    """Row lengths of the Robinson-Schensted insertion tableau."""
    rows: list[list[int]] = []
    for x in perm:
        for row in rows:
            pos = next((k for k, y in enumerate(row) if y > x), None)
            if pos is None:
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return [len(r) for r in rows]


def type_a_a_value(word, n: int) -> int:
    """a(w) = sum (i-1) lambda_i for the RS shape lambda of w in S_(n+1)."""
    shape = rs_shape(one_line(word, n))
    return sum(i * part for i, part in enumerate(shape))


def gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
