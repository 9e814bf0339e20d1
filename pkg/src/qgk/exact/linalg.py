"""Exact linear algebra over the kernel's coefficient domains.

Matrices are plain lists of rows.  Entries may be ints, Fractions,
Cyclotomic numbers, LaurentPoly (treated as elements of the polynomial ring,
eliminated fraction-free) or RatFunc.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic
from .poly import LaurentPoly, _inv
from .ratfunc import RatFunc


class NonSquare(ValueError):
    pass


class ZeroInput(ValueError):
    pass


def _size(x) -> int:
    if isinstance(x, (LaurentPoly, RatFunc)):
        return x.span()
    if isinstance(x, Cyclotomic):
        return sum(1 for a in x.num if a)
    return 0


def _is_ring_poly(m) -> bool:
    for row in m:
        for x in row:
            if x:
                return isinstance(x, LaurentPoly)
    return False


def _eliminate(m, want_det: bool):
    """Full-pivot elimination; returns (rank, determinant or None)."""
    rows = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    bareiss = _is_ring_poly(rows)
    sign = 1
    prev = 1
    r = 0
    while r < min(n_rows, n_cols):
        best = None
        for i in range(r, n_rows):
            for j in range(r, n_cols):
                x = rows[i][j]
                if x:
                    s = _size(x)
                    if best is None or s < best[0]:
                        best = (s, i, j)
                        if s == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i, j = best
        if i != r:
            rows[i], rows[r] = rows[r], rows[i]
            sign = -sign
        if j != r:
            for row in rows:
                row[j], row[r] = row[r], row[j]
            sign = -sign
        piv = rows[r][r]
        if bareiss:
            for i in range(r + 1, n_rows):
                a = rows[i][r]
                row_i = rows[i]
                row_r = rows[r]
                for j in range(r + 1, n_cols):
                    val = piv * row_i[j] - a * row_r[j] if a else piv * row_i[j]
                    row_i[j] = val.exact_div(prev) if prev != 1 else val
                row_i[r] = 0
            prev = piv
        else:
            inv = piv.inverse() if isinstance(piv, (Cyclotomic, RatFunc)) else _inv(piv)
            row_r = rows[r]
            for i in range(r + 1, n_rows):
                a = rows[i][r]
                if not a:
                    continue
                f = a * inv
                row_i = rows[i]
                for j in range(r + 1, n_cols):
                    if row_r[j]:
                        row_i[j] = row_i[j] - f * row_r[j]
                row_i[r] = 0
        r += 1
    if not want_det:
        return r, None
    if r < n_rows:
        return r, 0
    if bareiss:
        det = rows[-1][-1] if n_rows else 1
    else:
        det = 1
        for k in range(n_rows):
            det = rows[k][k] * det
    return r, det * sign if sign == 1 else -det


def rank(m) -> int:
    """Exact rank."""
    if not m or not m[0]:
        return 0
    return _eliminate(m, False)[0]


def determinant(m):
    """Exact determinant of a square matrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is not square ({n} rows)")
    if n == 0:
        return 1
    return _eliminate(m, True)[1]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


# -- Smith normal form ----------------------------------------------------

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m):
    """Return (U, D, V) with U*m*V = D, D diagonal with d_i | d_(i+1), U, V unimodular."""
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(rows, cols):
        # smallest nonzero entry in the remaining block becomes the pivot
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # enforce divisibility of the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


# -- valuations -------------------------------------------------------------

def _order_poly(p: LaurentPoly, value) -> int:
    lin = LaurentPoly(p.var, [-value, 1], 0, p.denom)
    k = 0
    while True:
        quo, rem = p.divmod_poly(lin)
        if rem:
            return k
        p = quo
        k += 1


def vanishing_order(f, value) -> int:
    """Order of vanishing of f at var = value (negative for a pole)."""
    if isinstance(f, RatFunc):
        if f.is_zero():
            raise ZeroInput("vanishing order of the zero function")
        if f.num.denom != 1:
            raise ValueError("vanishing order needs integer exponents")
        return _order_poly(f.num, value) - _order_poly(f.den, value)
    if isinstance(f, LaurentPoly):
        if f.is_zero():
            raise ZeroInput("vanishing order of the zero function")
        if f.denom != 1:
            raise ValueError("vanishing order needs integer exponents")
        return _order_poly(f, value)
    if not f:
        raise ZeroInput("vanishing order of the zero function")
    return 0


def to_fraction_matrix(m):
    return [[Fraction(x) for x in row] for row in m]
