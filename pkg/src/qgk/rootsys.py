"""Finite crystallographic root systems.

Everything is expressed in the basis of simple roots.  The symmetric form is
(alpha_i, alpha_j) = d_i a_ij with coprime symmetrizers d_i, so that short
roots have squared length 2.  Cartan integers follow a_ij = <alpha_j, alpha_i^vee>.
B2 has alpha_1 long; G2 has alpha_1 short (highest root 3 alpha_1 + 2 alpha_2).
Weyl group elements are permutations of the root list.
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd


class InvalidType(ValueError):
    pass


class Reducible(ValueError):
    pass


class NonDominant(ValueError):
    pass


# -- Dynkin data ------------------------------------------------------------

def _gram_from_vectors(vectors):
    g = [[sum(Fraction(a) * b for a, b in zip(u, v)) for v in vectors] for u in vectors]
    # rescale so that the shortest roots have squared length 2
    short = min(g[i][i] for i in range(len(g)))
    return [[int(x * 2 / short) for x in row] for row in g]


def _eps(n, entries):
    v = [Fraction(0)] * n
    for k, c in entries:
        v[k] = Fraction(c)
    return v


def _simply_laced(n, edges):
    b = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        b[i][j] = b[j][i] = -1
    return b


def type_form(letter: str, n: int):
    """Symmetrized Cartan matrix (alpha_i, alpha_j) of an irreducible type."""
    if letter == "A" and n >= 1:
        return _simply_laced(n, [(i, i + 1) for i in range(n - 1)])
    if letter == "B" and n >= 2:
        vecs = [_eps(n, [(i, 1), (i + 1, -1)]) for i in range(n - 1)] + [_eps(n, [(n - 1, 1)])]
        return _gram_from_vectors(vecs)
    if letter == "C" and n >= 2:
        vecs = [_eps(n, [(i, 1), (i + 1, -1)]) for i in range(n - 1)] + [_eps(n, [(n - 1, 2)])]
        return _gram_from_vectors(vecs)
    if letter == "D" and n >= 3:
        return _simply_laced(n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)])
    if letter == "E" and n in (6, 7, 8):
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        return _simply_laced(n, edges)
    if letter == "F" and n == 4:
        h = Fraction(1, 2)
        vecs = [_eps(4, [(1, 1), (2, -1)]), _eps(4, [(2, 1), (3, -1)]),
                _eps(4, [(3, 1)]), _eps(4, [(0, h), (1, -h), (2, -h), (3, -h)])]
        return _gram_from_vectors(vecs)
    if letter == "G" and n == 2:
        return [[2, -3], [-3, 6]]
    raise InvalidType(f"unknown type {letter}{n}")


_LABEL = re.compile(r"^([A-G])(\d+)$")


def parse_type(label: str):
    """'A1xB2' -> [('A', 1), ('B', 2)]."""
    comps = []
    for part in re.split(r"[x×*]", label.strip()):
        m = _LABEL.match(part.strip())
        if not m:
            raise InvalidType(f"cannot parse type label {label!r}")
        comps.append((m.group(1), int(m.group(2))))
    return comps


# -- lattice vectors ----------------------------------------------------------

class LatticeVector:
    """Coordinates tagged with a basis ('root' or 'fundamental')."""

    __slots__ = ("coords", "basis")

    def __init__(self, coords, basis: str = "root"):
        if basis not in ("root", "fundamental"):
            raise ValueError(f"unknown basis {basis}")
        self.coords = tuple(Fraction(c) for c in coords)
        self.basis = basis

    def to_root(self, rs: "RootSystem") -> tuple:
        if self.basis == "root":
            return self.coords
        return rs.fundamental_to_root(self.coords)

    def to_fundamental(self, rs: "RootSystem") -> tuple:
        if self.basis == "fundamental":
            return self.coords
        return rs.root_to_fundamental(self.coords)

    def __eq__(self, other):
        return isinstance(other, LatticeVector) and (self.coords, self.basis) == (other.coords, other.basis)

    def __hash__(self):
        return hash((self.coords, self.basis))

    def __repr__(self):
        return f"LatticeVector({[str(c) for c in self.coords]}, {self.basis!r})"


def _coords(v, rs):
    if isinstance(v, LatticeVector):
        return v.to_root(rs)
    return tuple(v)


# -- root systems ---------------------------------------------------------------

class RootSystem:
    """A root system given by its symmetrized Cartan matrix."""

    def __init__(self, form, label: str | None = None):
        self.form = [[int(x) for x in row] for row in form]
        n = self.rank = len(form)
        for i in range(n):
            for j in range(n):
                if self.form[i][j] != self.form[j][i]:
                    raise InvalidType("bilinear form is not symmetric")
        d = [self.form[i][i] // 2 for i in range(n)]
        self.components = _components(self.form)
        # make symmetrizers coprime on each component
        for comp in self.components:
            g = reduce(gcd, [d[i] for i in comp])
            if g > 1:
                raise InvalidType("form is not normalized (symmetrizers share a factor)")
        self.d = tuple(d)
        self.cartan = tuple(tuple(self.form[i][j] // d[i] for j in range(n)) for i in range(n))
        self._build_roots()
        self.label = label or classify(self, self.simple_indices, annotate=False)

    @classmethod
    def build(cls, label: str) -> "RootSystem":
        comps = parse_type(label)
        blocks = [type_form(letter, k) for letter, k in comps]
        n = sum(len(b) for b in blocks)
        form = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    form[off + i][off + j] = x
            off += len(b)
        return cls(form, "x".join(f"{l}{k}" for l, k in comps))

    # -- roots ------------------------------------------------------------
    def _build_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = {v: None for v in simple}
        queue = deque(simple)
        while queue:
            v = queue.popleft()
            for i in range(n):
                w = self.simple_reflect(v, i)
                if w not in seen:
                    seen[w] = None
                    queue.append(w)
        pos = sorted((v for v in seen if all(c >= 0 for c in v)),
                     key=lambda v: (sum(v), tuple(-c for c in v)))
        self.positive = tuple(pos)
        self.roots = self.positive + tuple(tuple(-c for c in v) for v in pos)
        self.index = {v: k for k, v in enumerate(self.roots)}
        self.num_positive = len(pos)
        self.simple_indices = tuple(self.index[v] for v in simple)
        self._norms = tuple(self.inner(v, v) for v in self.roots)
        self._reflections = {}

    def simple_reflect(self, v, i):
        c = Fraction(sum(self.form[i][k] * v[k] for k in range(self.rank)), self.d[i])
        if c.denominator == 1:
            c = int(c)
        out = list(v)
        out[i] = out[i] - c
        return tuple(out)

    def inner(self, x, y):
        """(x, y) for vectors in root coordinates."""
        f = self.form
        acc = 0
        for i, a in enumerate(x):
            if a:
                row = f[i]
                for j, b in enumerate(y):
                    if b and row[j]:
                        acc += a * row[j] * b
        return acc

    def norm2(self, k: int) -> int:
        return self._norms[k]

    def is_positive_index(self, k: int) -> bool:
        return k < self.num_positive

    def negate_index(self, k: int) -> int:
        p = self.num_positive
        return k + p if k < p else k - p

    def pairing(self, lam, alpha) -> Fraction:
        """<lam, alpha> = 2 (lam, alpha)/(alpha, alpha)."""
        lam = _coords(lam, self)
        alpha = _coords(alpha, self)
        return Fraction(2 * self.inner(lam, alpha), self.inner(alpha, alpha))

    def coroot(self, alpha):
        a = _coords(alpha, self)
        nn = self.inner(a, a)
        return tuple(Fraction(2 * x, nn) for x in a)

    def height(self, v) -> Fraction:
        return sum(_coords(v, self))

    # -- weights ----------------------------------------------------------
    def fundamental_to_root(self, f) -> tuple:
        """Root coordinates x with <x, alpha_j> = f_j, i.e. solve A x = f."""
        n = self.rank
        a = [[Fraction(self.cartan[j][k]) for k in range(n)] + [Fraction(f[j])] for j in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col])
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    m = a[r][col]
                    a[r] = [x - m * y for x, y in zip(a[r], a[col])]
        return tuple(a[r][n] for r in range(n))

    def root_to_fundamental(self, x) -> tuple:
        return tuple(sum(Fraction(self.cartan[j][k]) * x[k] for k in range(self.rank))
                     for j in range(self.rank))

    def fundamental_weight(self, i: int) -> tuple:
        return self.fundamental_to_root([int(i == j) for j in range(self.rank)])

    @property
    def rho(self) -> tuple:
        n = self.rank
        return tuple(Fraction(sum(v[k] for v in self.positive), 2) for k in range(n))

    def _irreducible(self):
        if len(self.components) != 1:
            raise Reducible(f"{self.label} is not irreducible")

    @property
    def highest_root(self) -> tuple:
        self._irreducible()
        return max(self.positive, key=sum)

    @property
    def highest_short_root(self) -> tuple:
        self._irreducible()
        short = min(self._norms)
        return max((v for v in self.positive if self.inner(v, v) == short), key=sum)

    theta = highest_root
    theta_s = highest_short_root

    def marks(self) -> tuple:
        return self.highest_root

    def is_simply_laced(self) -> bool:
        return len(set(self._norms)) == 1

    def long_norm(self) -> int:
        return max(self._norms)

    # -- Weyl group -------------------------------------------------------
    def reflection_perm(self, k: int) -> tuple:
        """Permutation of root indices induced by the reflection in root k."""
        perm = self._reflections.get(k)
        if perm is None:
            beta = self.roots[k]
            nb = self._norms[k]
            out = []
            for v in self.roots:
                c = Fraction(2 * self.inner(v, beta), nb)
                w = tuple(int(x - c * y) for x, y in zip(v, beta))
                out.append(self.index[w])
            perm = tuple(out)
            self._reflections[k] = perm
        return perm

    def simple_perm(self, i: int) -> tuple:
        return self.reflection_perm(self.simple_indices[i])

    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(len(self.roots))))

    def simple_reflection(self, i: int) -> "WeylElement":
        return WeylElement(self, self.simple_perm(i))

    def reflection(self, alpha) -> "WeylElement":
        k = alpha if isinstance(alpha, int) else self.index[tuple(alpha)]
        return WeylElement(self, self.reflection_perm(k))

    def from_word(self, word) -> "WeylElement":
        w = self.identity()
        for i in word:
            w = w * self.simple_reflection(i)
        return w

    def longest_element(self) -> "WeylElement":
        w = self.identity()
        while True:
            for i in range(self.rank):
                if w.perm[self.simple_indices[i]] < self.num_positive:
                    w = w * self.simple_reflection(i)
                    break
            else:
                return w

    def weyl_group(self, cap: int | None = None) -> list["WeylElement"]:
        """All elements, breadth-first by length."""
        start = self.identity()
        seen = {start.perm: start}
        frontier = [start]
        out = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    p = w.perm
                    s = self.simple_perm(i)
                    perm = tuple(p[s[k]] for k in range(len(p)))
                    if perm not in seen:
                        u = WeylElement(self, perm)
                        seen[perm] = u
                        nxt.append(u)
                        out.append(u)
                        if cap is not None and len(out) > cap:
                            raise GroupTooLarge(f"Weyl group of {self.label} exceeds cap {cap}")
            frontier = nxt
        return out

    def weyl_group_order(self) -> int:
        return len(self.weyl_group())

    def act(self, w: "WeylElement", v) -> tuple:
        """w(v) for v in root coordinates."""
        v = _coords(v, self)
        out = [0] * self.rank
        for i, c in enumerate(v):
            if c:
                img = self.roots[w.perm[self.simple_indices[i]]]
                for k in range(self.rank):
                    out[k] += c * img[k]
        return tuple(out)

    def weyl_orbit(self, v) -> list:
        v = tuple(_coords(v, self))
        seen = {v: None}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for i in range(self.rank):
                y = self.simple_reflect(x, i)
                if y not in seen:
                    seen[y] = None
                    queue.append(y)
        return list(seen)

    def dominant_conjugate(self, v) -> tuple:
        """The dominant element of the W-orbit of v (root coordinates)."""
        v = tuple(_coords(v, self))
        while True:
            for i in range(self.rank):
                if self.inner(v, self._simple(i)) < 0:
                    v = self.simple_reflect(v, i)
                    break
            else:
                return v

    def _simple(self, i):
        return self.roots[self.simple_indices[i]]

    # -- combinatorics ------------------------------------------------------
    def kostant_partition(self, nu) -> int:
        """Number of ways to write nu as a sum of positive roots."""
        nu = tuple(_coords(nu, self))
        if any(Fraction(c).denominator != 1 for c in nu):
            return 0
        return _kostant(self.positive, tuple(int(c) for c in nu), 0)

    def coxeter_numbers(self) -> tuple[int, int]:
        """(h, h_vee) = (<rho, theta_s^vee> + 1, <rho, theta^vee> + 1)."""
        self._irreducible()
        h = self.pairing(self.rho, self.highest_short_root) + 1
        hv = self.pairing(self.rho, self.highest_root) + 1
        return int(h), int(hv)

    def exponents(self) -> list[int]:
        """Exponents: the partition dual to the numbers of positive roots per height."""
        counts = {}
        for v in self.positive:
            counts[sum(v)] = counts.get(sum(v), 0) + 1
        exps = []
        for k in sorted(counts):
            exps += [k] * (counts[k] - counts.get(k + 1, 0))
        return sorted(exps)

    def weyl_dimension(self, lam) -> int:
        """dim L(lam); ``lam`` is a LatticeVector or fundamental-weight coordinates."""
        if isinstance(lam, LatticeVector):
            lam = lam.to_root(self)
        else:
            lam = self.fundamental_to_root(lam)
        rho = self.rho
        lr = tuple(a + b for a, b in zip(lam, rho))
        num = Fraction(1)
        for v in self.positive:
            num *= Fraction(self.inner(lr, v), self.inner(rho, v))
        assert num.denominator == 1
        return int(num)

    def freudenthal_multiplicities(self, lam, depth: int | None = None) -> dict:
        """Weight multiplicities of the simple module L(lam).

        ``lam`` is given as a LatticeVector or in fundamental-weight coordinates.
        Keys of the result are fundamental-weight coordinate tuples.
        """
        if isinstance(lam, LatticeVector):
            f = lam.to_fundamental(self)
        else:
            f = tuple(Fraction(c) for c in lam)
        if any(c < 0 or c.denominator != 1 for c in f):
            raise NonDominant(f"{[str(c) for c in f]} is not dominant integral")
        top = self.fundamental_to_root(f)
        bottom = self.act(self.longest_element(), top)
        max_depth = int(sum(a - b for a, b in zip(top, bottom)))
        if depth is not None:
            max_depth = min(max_depth, depth)
        rho = self.rho
        lr = tuple(a + b for a, b in zip(top, rho))
        norm_top = self.inner(lr, lr)
        mult = {top: 1}
        layer = [top]
        for _ in range(max_depth):
            nxt = {}
            for mu in layer:
                for i in range(self.rank):
                    nu = tuple(mu[k] - (1 if k == i else 0) for k in range(self.rank))
                    nxt[nu] = None
            layer = []
            for mu in nxt:
                dom = self.dominant_conjugate(mu)
                diff = [a - b for a, b in zip(top, dom)]
                if any(c < 0 or Fraction(c).denominator != 1 for c in diff):
                    continue
                if dom != mu:
                    m = mult.get(dom, 0)
                else:
                    m = self._freudenthal_one(mu, mult, norm_top, rho)
                if m:
                    mult[mu] = m
                    layer.append(mu)
        return {self.root_to_fundamental(mu): m for mu, m in mult.items()}

    def _freudenthal_one(self, mu, mult, norm_top, rho):
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = norm_top - self.inner(mr, mr)
        if den <= 0:
            return 0
        acc = 0
        for a in self.positive:
            # alpha-strings of weights are unbroken
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(nu)
                if m is None:
                    break
                acc += m * self.inner(nu, a)
                k += 1
        val = Fraction(2 * acc) / den
        assert val.denominator == 1
        return int(val)

    def __repr__(self):
        return f"RootSystem({self.label})"


class GroupTooLarge(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _kostant(positive, nu, start):
    if not any(nu):
        return 1
    if any(c < 0 for c in nu):
        return 0
    total = 0
    for k in range(start, len(positive)):
        beta = positive[k]
        rest = tuple(a - b for a, b in zip(nu, beta))
        if all(c >= 0 for c in rest):
            total += _kostant(positive, rest, k)
    return total


def _components(form):
    n = len(form)
    seen = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and form[i][j]:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


# -- type classification --------------------------------------------------------

def classify_form(form, lengths=None, long_norm=None, annotate=False) -> str:
    """Dynkin label of a simple system given its Gram matrix.

    With ``annotate`` simply-laced components get ^L or ^S according to the
    squared length of their roots compared with ``long_norm``.
    """
    comps = _components(form)
    labels = []
    for comp in comps:
        sub = [[form[i][j] for j in comp] for i in comp]
        lab = _classify_component(sub)
        if annotate and lab[0] in "ADE":
            nrm = sub[0][0]
            lab += "^L" if nrm == long_norm else "^S"
        labels.append(lab)
    labels.sort(key=lambda s: (s[0], -int(re.match(r"[A-G](\d+)", s).group(1)), s))
    return "x".join(labels)


def _classify_component(form) -> str:
    n = len(form)
    if n == 1:
        return "A1"
    mult = {}
    deg = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if form[i][j]:
                m = form[i][j] * form[j][i] // (form[i][i] * form[j][j] // 4)
                mult[(i, j)] = m
                deg[i] += 1
                deg[j] += 1
    ms = sorted(mult.values())
    if 3 in ms:
        return "G2"
    if 2 in ms:
        if n == 2:
            return "B2"
        (i, j), = [e for e, m in mult.items() if m == 2]
        ends = [k for k in range(n) if deg[k] == 1]
        if n == 4 and i not in ends and j not in ends:
            return "F4"
        end = i if i in ends else j
        other = j if end == i else i
        return f"B{n}" if form[end][end] < form[other][other] else f"C{n}"
    branch = [k for k in range(n) if deg[k] == 3]
    if not branch:
        return f"A{n}"
    b = branch[0]
    arms = []
    for nb in (j for j in range(n) if (min(b, j), max(b, j)) in mult):
        length, prev, cur = 1, b, nb
        while True:
            nxt = [j for j in range(n) if j != prev and (min(cur, j), max(cur, j)) in mult]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    return f"E{n}"


def classify(rs: RootSystem, root_indices, annotate=True) -> str:
    """Type label of the subsystem with the given simple roots (indices into rs.roots)."""
    if not root_indices:
        return "0"
    vecs = [rs.roots[k] for k in root_indices]
    form = [[rs.inner(u, v) for v in vecs] for u in vecs]
    return classify_form(form, long_norm=rs.long_norm(),
                         annotate=annotate and not rs.is_simply_laced())


class WeylElement:
    """A Weyl group element as a permutation of root indices."""

    __slots__ = ("rs", "perm", "_length", "_word")

    def __init__(self, rs: RootSystem, perm):
        self.rs = rs
        self.perm = tuple(perm)
        self._length = None
        self._word = None

    @property
    def length(self) -> int:
        if self._length is None:
            p = self.rs.num_positive
            self._length = sum(1 for k in range(p) if self.perm[k] >= p)
        return self._length

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            inv[v] = k
        return WeylElement(self.rs, inv)

    def reduced_word(self) -> tuple:
        if self._word is None:
            rs = self.rs
            word = []
            w = self
            while w.length:
                for i in range(rs.rank):
                    if w.perm[rs.simple_indices[i]] >= rs.num_positive:
                        word.append(i)
                        w = w * rs.simple_reflection(i)
                        break
            self._word = tuple(reversed(word))
        return self._word

    def act(self, v):
        return self.rs.act(self, v)

    def root_image(self, k: int) -> int:
        return self.perm[k]

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"WeylElement({list(self.reduced_word())})"
