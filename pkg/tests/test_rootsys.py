import pytest
from hypothesis import given, strategies as st

from qgk.rootsys import GroupTooLarge, InvalidType, RootSystem, classify, parse_type


def test_positive_roots_and_highest(systems):
    a2, b2, g2 = systems["A2"], systems["B2"], systems["G2"]
    assert a2.num_positive == 3
    assert a2.highest_root == a2.highest_short_root == (1, 1)
    assert set(b2.positive) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert b2.highest_root == (1, 2) and b2.highest_short_root == (1, 1)
    assert g2.num_positive == 6
    assert g2.norm2(g2.index[g2.highest_root]) == max(g2.form[i][i] for i in range(2))


@pytest.mark.parametrize("label,count", [("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("F4", 24),
                                         ("E6", 36), ("G2", 6)])
def test_root_counts(label, count):
    assert RootSystem.build(label).num_positive == count


def test_form_conventions(systems):
    b2 = systems["B2"]
    # alpha_1 is long in B2
    assert b2.form[0][0] == 4 and b2.form[1][1] == 2
    assert b2.cartan == [[2, -1], [-2, 2]] or b2.cartan == ((2, -1), (-2, 2))
    for rs in systems.values():
        for i in range(rs.rank):
            for j in range(rs.rank):
                assert rs.form[i][j] == rs.d[i] * rs.cartan[i][j]


def test_pairings(systems):
    b3 = RootSystem.build("B3")
    assert b3.pairing(b3.rho, b3.highest_root) == 4
    assert systems["A2"].pairing(systems["A2"].rho, systems["A2"].highest_short_root) == 2
    for rs in systems.values():
        for i in range(rs.rank):
            for j in range(rs.rank):
                w = rs.fundamental_weight(i)
                alpha = tuple(int(k == j) for k in range(rs.rank))
                assert rs.pairing(w, alpha) == (i == j)


@pytest.mark.parametrize("label,h", [("A1", (2, 2)), ("A3", (4, 4)), ("B3", (6, 5)),
                                     ("G2", (6, 4)), ("C3", (6, 4)), ("F4", (12, 9))])
def test_coxeter_numbers(label, h):
    assert RootSystem.build(label).coxeter_numbers() == h


def test_kostant_partition(systems):
    a2, b2 = systems["A2"], systems["B2"]
    assert a2.kostant_partition((0, 0)) == 1
    assert a2.kostant_partition((1, 1)) == 2
    assert b2.kostant_partition((1, 2)) == 3
    assert a2.kostant_partition((-1, 0)) == 0


@given(st.integers(0, 6), st.integers(0, 6))
def test_kostant_a2_closed_form(a, b):
    # A2: p(a, b) = min(a, b) + 1
    assert RootSystem.build("A2").kostant_partition((a, b)) == min(a, b) + 1


def test_weyl_group(systems):
    a2, a3, b2 = systems["A2"], systems["A3"], systems["B2"]
    assert a3.longest_element().length == 6
    assert len(b2.weyl_group()) == 8
    w0 = a2.longest_element()
    assert a2.act(w0, (1, 0)) == (0, -1)
    long_orbit = set(b2.weyl_orbit(b2.highest_root))
    assert long_orbit == {r for k, r in enumerate(b2.roots) if b2.norm2(k) == 4}
    with pytest.raises(GroupTooLarge):
        RootSystem.build("E8").weyl_group(cap=1000)


def test_weyl_group_preserves_form(systems):
    rs = systems["G2"]
    for w in rs.weyl_group():
        for x in rs.positive:
            for y in rs.positive:
                assert rs.inner(rs.act(w, x), rs.act(w, y)) == rs.inner(x, y)


def test_freudenthal(systems):
    a2, b2 = systems["A2"], systems["B2"]
    assert sorted(a2.freudenthal_multiplicities((1, 0)).values()) == [1, 1, 1]
    adj = a2.freudenthal_multiplicities((1, 1))
    assert sum(adj.values()) == 8 and adj[(0, 0)] == 2
    assert a2.freudenthal_multiplicities((0, 0)) == {(0, 0): 1}
    for rs in (a2, b2, systems["G2"]):
        for lam in ((1, 0), (0, 1), (1, 1), (2, 1)):
            assert sum(rs.freudenthal_multiplicities(lam).values()) == rs.weyl_dimension(lam)


def test_weyl_dimension(systems):
    assert {systems["G2"].weyl_dimension((1, 0)), systems["G2"].weyl_dimension((0, 1))} == {7, 14}
    assert systems["B2"].weyl_dimension((1, 1)) == 16


def test_parse_and_classify(systems):
    assert parse_type("A2xB3") == [("A", 2), ("B", 3)]
    with pytest.raises(InvalidType):
        RootSystem.build("Q3")
    with pytest.raises(InvalidType):
        RootSystem.build("E9")
    b2 = systems["B2"]
    simple = [b2.index[(1, 0)], b2.index[(1, 2)]]
    assert classify(b2, simple) == "A1^LxA1^L"
    assert classify(systems["G2"], [systems["G2"].index[(1, 0)]]) in ("A1^L", "A1^S")
