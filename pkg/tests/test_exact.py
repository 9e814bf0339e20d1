import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qgk.exact import (Cyclotomic, LaurentPoly, NonSquare, RatFunc, ZeroInput, cyclotomic_polynomial,
                       determinant, euler_phi, matmul, poly_gcd, q_int, rank, smith_normal_form,
                       transpose, vanishing_order)

small = st.integers(-5, 5)


def cyclo(n):
    return st.lists(small, min_size=1, max_size=n).map(lambda c: Cyclotomic.from_coefficients(n, c))


def laurent():
    return st.tuples(st.lists(small, max_size=5), st.integers(-3, 3)).map(
        lambda a: LaurentPoly("q", a[0], a[1]))


# -- cyclotomic numbers ----------------------------------------------------------------

def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert [euler_phi(n) for n in (1, 5, 12, 20)] == [1, 4, 4, 8]


def test_roots_of_unity():
    z = Cyclotomic.zeta(12)
    assert z ** 12 == 1
    assert z ** 6 == -1
    assert z ** 4 != 1
    assert Cyclotomic.root_of_unity(Fraction(1, 2)) == -1
    assert Cyclotomic.zeta(4) == Cyclotomic.zeta(12) ** 3
    assert abs(complex(Cyclotomic.zeta(5)) - cmath.exp(2j * cmath.pi / 5)) < 1e-12


def test_sum_of_roots_vanishes():
    total = sum((Cyclotomic.zeta(7, k) for k in range(7)), Cyclotomic.rational(0))
    assert total == 0


@given(cyclo(5), cyclo(5), cyclo(5))
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(cyclo(9))
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert (a / a) == 1


@given(cyclo(8))
def test_norm_is_rational_and_multiplicative(a):
    # norm() is taken in the smallest field containing the element
    def norm8(x):
        return x.norm() ** (euler_phi(8) // euler_phi(x.n))
    b = Cyclotomic.zeta(8) + 2
    assert norm8(a * b) == norm8(a) * norm8(b)


def test_conductor_normalization():
    assert Cyclotomic.zeta(6) + Cyclotomic.zeta(6, 5) == 1
    assert (Cyclotomic.zeta(3) + Cyclotomic.zeta(3, 2)).is_rational()


# -- Laurent polynomials --------------------------------------------------------------

@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@given(laurent(), laurent())
def test_division_with_remainder(a, b):
    if b:
        quo, rem = a.divmod_poly(b)
        assert quo * b + rem == a
        assert rem.span() < b.span() or not rem


def test_quantum_integers():
    q = LaurentPoly.monomial(1)
    assert q_int(2) == q + q ** -1
    assert q_int(3) * (q - q ** -1) == q ** 3 - q ** -3
    assert q_int(-2) == -q_int(2)
    assert q_int(2).subs(1) == 2
    assert q_int(3, step=2) == q ** 4 + 1 + q ** -4


def test_fractional_exponents():
    half = LaurentPoly.monomial(Fraction(1, 2), 1, "q", 2)
    assert half * half == LaurentPoly.monomial(1)
    assert half.subs(None, root=3) == 3
    with pytest.raises(ValueError):
        LaurentPoly.monomial(Fraction(1, 3), 1, "q", 2)


def test_gcd_and_rational_functions():
    q = LaurentPoly.monomial(1)
    a = (q - 1) * (q + 2)
    b = (q - 1) * (q - 3)
    assert poly_gcd(a, b) == q - 1
    r = RatFunc(a, b)
    assert r == RatFunc(q + 2, q - 3)
    assert r * RatFunc(q - 3, q + 2) == 1
    assert r.subs(Fraction(4)) == 6
    assert RatFunc(q ** 2 - 1, q - 1).is_polynomial()


def test_cyclotomic_coefficients():
    i = Cyclotomic.zeta(4)
    p = LaurentPoly("q", [1, 0, i])
    assert (p * p).coeff(4) == -1
    assert p.subs(i) == 1 - i


# -- linear algebra ----------------------------------------------------------------------

def test_rank_and_determinant():
    m = [[Fraction(1), 2, 3], [4, 5, 6], [7, 8, 9]]
    assert rank(m) == 2
    assert determinant(m) == 0
    assert determinant([[2, 1], [1, 3]]) == 5
    with pytest.raises(NonSquare):
        determinant([[1, 2]])


def test_polynomial_determinant_matches_expansion():
    q = LaurentPoly.monomial(1)
    m = [[q, 1, q ** 2], [1 + q, q, 0], [q ** -1, 2, q]]
    expected = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    assert determinant(m) == expected


def test_cyclotomic_rank():
    z = Cyclotomic.zeta(3)
    m = [[z, z ** 2], [Cyclotomic.rational(1), z]]
    assert rank(m) == 1


def test_transpose_and_matmul():
    a = [[1, 2], [3, 4]]
    assert transpose(a) == [[1, 3], [2, 4]]
    assert matmul(a, [[1, 0], [0, 1]]) == a


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_smith_normal_form(m):
    u, d, v = smith_normal_form(m)
    assert matmul(matmul(u, m), v) == d
    diag = [d[k][k] for k in range(3)]
    assert all(d[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) or (a != 0 and b % a == 0)
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1


def test_vanishing_order():
    t = LaurentPoly.monomial(1, 1, "t")
    f = (t - 1) ** 3 * (t + 2)
    assert vanishing_order(f, 1) == 3
    assert vanishing_order(RatFunc(f, (t - 1) ** 5), 1) == -2
    with pytest.raises(ZeroInput):
        vanishing_order(LaurentPoly("t"), 1)
