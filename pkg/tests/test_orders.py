import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CASES
from fnq import orders
from fnq.orders import InvalidSpec, LieSpec, lie, n_of_K, natural_dimension, order_of
from fnq.report import FAIL, FLAGGED, PASS

# simple-group orders as listed in the ATLAS, independent of the formulas
ATLAS = [
    (("A", 1, 7), 168),
    (("A", 1, 8), 504),
    (("A", 1, 11), 660),
    (("A", 2, 3), 5616),
    (("A", 2, 4), 20160),
    (("A", 3, 3), 6065280),
    (("2A", 2, 3), 6048),
    (("2A", 2, 4), 62400),
    (("2A", 2, 5), 126000),
    (("2A", 3, 2), 25920),
    (("B", 3, 3), 4585351680),
    (("C", 2, 4), 979200),
    (("C", 3, 2), 1451520),
    (("D", 4, 2), 174182400),
    (("2D", 4, 2), 197406720),
    (("G2", None, 3), 4245696),
    (("G2", None, 4), 251596800),
    (("2B2", None, 8), 29120),
    (("2B2", None, 32), 32537600),
    (("2G2", None, 27), 10073444472),
    (("3D4", None, 2), 211341312),
    (("F4", None, 2), 3311126603366400),
    (("E6", None, 2), 214841575522005575270400),
    (("2E6", None, 2), 76532479683774853939200),
]


def test_examples():
    assert order_of("A", 2, 2) == 168
    assert order_of("A", 4, 2) == 9999360
    assert orders.alternating_order(7).value == 2520
    assert orders.sporadic_order("M11").value == 7920
    assert orders.ln2(6).value == 20158709760
    assert orders.tits_order().value == 17971200


@pytest.mark.parametrize("token,value", ATLAS, ids=[str(lie(*t)) for t, _ in ATLAS])
def test_atlas_orders(token, value):
    assert order_of(*token) == value


def test_universal_versions():
    assert order_of("A", 1, 5, "universal") == 120
    assert order_of("C", 2, 3, "universal") == 51840
    assert order_of("E7", None, 3, "universal") == 2 * order_of("E7", None, 3)


def test_natural_dimension():
    assert natural_dimension(LieSpec("A", 4, 2)) == 5
    assert natural_dimension(LieSpec("B", 3, 3)) == 7
    assert natural_dimension(LieSpec("2D", 5, 2)) == 10
    with pytest.raises(InvalidSpec):
        natural_dimension(lie("G2", None, 3))


def test_n_of_K():
    assert n_of_K(orders.sporadic_order("Fi22")) == 7
    assert n_of_K(orders.ln2(5)) == 5
    assert n_of_K(orders.ln2(5).value + 1) == 6
    assert n_of_K(orders.tits_order()) == 6
    assert n_of_K(168) == 3
    with pytest.raises(ValueError):
        n_of_K(167)


@pytest.mark.parametrize("args", [("A", 0, 2), ("D", 3, 2), ("A", 2, 6), ("2B2", None, 4), ("2G2", None, 9),
                                  ("2F4", None, 3), ("G2", 3, 3), ("X", 2, 2), ("A", 2, 2, "simply")])
def test_invalid_specs(args):
    with pytest.raises(InvalidSpec):
        lie(*args)


def test_sporadic_lookup():
    assert orders.sporadic_order("fi24").label == "Fi24'"
    assert orders.sporadic_order("O'N").value == 460815505920
    assert orders.sporadic_dprime_rank("Fi22") == 7
    with pytest.raises(KeyError):
        orders.sporadic_order("M13")
    with pytest.raises(ValueError):
        orders.alternating_order(2)
    with pytest.raises(ValueError):
        orders.GroupOrder(0, "none")


def test_appendix_suite_passes():
    reports = orders.appendix_suite(40)
    assert reports and all(r.status == PASS for r in reports)
    lemmas = {r.evidence["lemma"] for r in reports}
    assert lemmas == set("abcdefgh")
    a8 = next(r for r in reports if r.evidence["lemma"] == "a" and r.evidence["n"] == 8)
    assert (a8.evidence["lhs"], a8.evidence["rhs"]) == (32, 28)
    d8 = next(r for r in reports if r.evidence["lemma"] == "d" and r.evidence["n"] == 8)
    assert d8.evidence["exceptions"] == ["A_6(2)", "A_7(2)"]
    m11 = next(r for r in reports if r.evidence.get("group") == "M11")
    assert m11.evidence["n"] == 4 and m11.status == PASS
    assert max(r.evidence["n"] for r in reports if r.evidence["lemma"] == "c") == 12
    with pytest.raises(ValueError):
        orders.appendix_suite(11)


def test_table_checks():
    reports = orders.table_checks()
    flagged = [r for r in reports if r.status == FLAGGED]
    assert {r.evidence["group"] for r in flagged} == {"L4(2)"}
    assert all(r.evidence["computed"] == 20160 for r in flagged)
    assert not [r for r in reports if r.status == FAIL]


def test_identity_and_exceptional_checks():
    assert all(r.status == PASS for r in orders.identity_checks(40))
    assert all(r.status == PASS for r in orders.exceptional_checks())


def test_psp4_closure_matches_formula(psp43):
    assert psp43.order == order_of("C", 2, 3) == 25920


@settings(max_examples=CASES)
@given(st.integers(1, 12), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 16, 25]))
def test_order_relations(n, q):
    # B_n and C_n have equal orders; the centre of A_n(q) has order gcd(n+1, q-1)
    if n >= 2:
        assert order_of("B", n, q) == order_of("C", n, q)
    u, a = order_of("A", n, q, "universal"), order_of("A", n, q)
    assert u % a == 0 and u // a == math.gcd(n + 1, q - 1)
    if q == 2:
        assert u == a
    if n >= 2:
        ua, aa = order_of("2A", n, q, "universal"), order_of("2A", n, q)
        assert ua // aa == math.gcd(n + 1, q + 1)
