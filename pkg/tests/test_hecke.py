from collections import Counter

import pytest

from qgk.exact import LaurentPoly
from qgk.hecke import (V, V_DIFF, V_INV, V_ONE, V_SUM, CoxeterSystem, HeckeElement, KLData,
                       a_function, C_s, kl_basis, structure_constants, type_a_a_value,
                       unique_reduced_expression_cell)
from qgk.rootsys import GroupTooLarge, RootSystem


@pytest.fixture(scope="module")
def groups():
    return {t: CoxeterSystem(RootSystem.build(t)) for t in ("A1", "A2", "B2", "A3", "G2")}


def test_group_structure(groups):
    assert [groups[t].size for t in ("A1", "A2", "B2", "A3", "G2")] == [2, 6, 8, 24, 12]
    W = groups["A3"]
    assert W.length[W.longest] == 6
    for w in range(W.size):
        assert W.element(W.words[w]) == w
        assert W.mul(w, W.inverse(w)) == W.identity
        assert len(W.words[w]) == W.length[w]


def test_quadratic_relation(groups):
    W = groups["A2"]
    s, t = W.left[0][0], W.left[1][0]
    Ts, Tt = HeckeElement.T(W, s), HeckeElement.T(W, t)
    assert Ts * Ts == Ts.scale(V_DIFF) + HeckeElement.T(W, 0)
    assert Ts * Tt == HeckeElement.T(W, W.mul(s, t))
    cs = C_s(W, 0)
    assert cs * cs == cs.scale(V_SUM)


def test_associativity(groups):
    W = groups["B2"]
    els = [HeckeElement(W, {w: V ** (w % 3) + V_INV}) for w in (1, 3, 5)]
    a, b, c = els
    assert (a * b) * c == a * (b * c)


def test_kl_basis_is_bar_invariant(groups):
    for label in ("A2", "B2", "G2"):
        W = groups[label]
        data = KLData(W)
        for w in range(W.size):
            cw = data.C(w)
            assert cw.bar() == cw
            assert cw.terms[w] == V_ONE
            for y, p in cw.terms.items():
                if y != w:
                    assert p.high < 0 and p.low >= -W.length[w]


def test_kl_small_cases(groups):
    W = groups["A1"]
    assert kl_basis(W, 0) == HeckeElement.T(W, 0)
    s = W.left[0][0]
    assert kl_basis(W, s) == HeckeElement(W, {s: V_ONE, 0: V_INV})


def test_structure_constants_match_direct_product(groups):
    W = groups["A2"]
    data = KLData(W)
    for x in range(W.size):
        for y in range(W.size):
            h = structure_constants(W, x, y, data)
            lhs = data.C(x) * data.C(y)
            rhs = HeckeElement(W)
            for z, p in h.items():
                rhs = rhs + data.C(z).scale(p)
            assert lhs == rhs
    s = W.left[0][0]
    assert structure_constants(W, s, s, data) == {s: V + V_INV}
    assert structure_constants(W, 0, 4, data) == {4: V_ONE}


@pytest.mark.parametrize("label,multiset", [("A1", {0: 1, 1: 1}), ("A2", {0: 1, 1: 4, 3: 1}),
                                            ("B2", {0: 1, 1: 6, 4: 1}),
                                            ("G2", {0: 1, 1: 10, 6: 1})])
def test_a_function_values(groups, label, multiset):
    assert Counter(a_function(groups[label])) == multiset


def test_a_function_type_a_oracle(groups):
    W = groups["A3"]
    a = a_function(W)
    assert all(a[w] == type_a_a_value(W.words[w], 3) for w in range(W.size))


def test_unique_reduced_expressions(groups):
    assert len(unique_reduced_expression_cell(groups["A2"])) == 4
    assert len(unique_reduced_expression_cell(groups["B2"])) == 6
    assert unique_reduced_expression_cell(groups["A1"]) == [1]


def test_caps():
    with pytest.raises(GroupTooLarge):
        a_function(CoxeterSystem(RootSystem.build("B3")), cap=10)


def test_from_gram_rescales():
    W = CoxeterSystem.from_gram([[4, 0], [0, 4]])
    assert W.size == 4
    assert isinstance(V_ONE, LaurentPoly)
