import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CASES
from fnq import bounds
from fnq.bounds import admissible, exp_lower_sweep, k, phd_dawid_precheck, phd_identity_report
from fnq.report import FAIL, FLAGGED, PASS


def brute_k(n, rs):
    """Oracle: scan every admissible r directly."""
    best = None
    for r in rs:
        v = min(2 ** (n - r - (1 - n % 2)), math.comb(n, r))
        if best is None or v > best[0]:
            best = (v, r)
    return best


def test_parity():
    assert (bounds.p(7), bounds.p(8), bounds.p(2)) == (0, 1, 1)


@pytest.mark.parametrize("n,value", [(3, 7), (4, 8), (5, 12), (6, 14)])
def test_table_values(n, value):
    for mode in bounds.MODES:
        res = k(n, mode)
        assert res.k_value == value and res.r_star == "table"


def test_proof_mode_small_n():
    assert (k(7, "proof").k_value, k(7, "proof").r_star) == (21, 2)
    assert (k(8, "proof").k_value, k(8, "proof").r_star) == (28, 2)
    assert k(9, "proof").k_value == 36


def test_literal_mode_small_n():
    res = k(7, "literal")
    assert res.empty_range and res.k_value == 1
    assert admissible(7) == []
    assert (k(8).k_value, k(8).r_star) == (8, 1)
    assert (k(9).k_value, k(9).r_star) == (9, 1)


def test_k12():
    res = k(12, "literal")
    assert (res.k_value, res.r_star) == (220, 3)
    assert res.terms == {1: 12, 2: 66, 3: 220}


def test_sharpness_at_three():
    from fnq.groups.subgroups import minimal_faithful_degree
    from fnq.linearize import natural_image_group

    assert minimal_faithful_degree(natural_image_group(3, 2)) == k(3).k_value


def test_exp_sweep():
    rep = exp_lower_sweep(7, 64)
    assert rep.status == PASS and rep.evidence["holds_from"] == 7
    lit = exp_lower_sweep(7, 20, "literal")
    assert lit.status == FAIL and lit.evidence["failures"] == [7, 8, 9]
    assert lit.evidence["holds_from"] == 10
    with pytest.raises(ValueError):
        exp_lower_sweep(6, 10)


def test_phd_precheck():
    for n in range(12, 41, 2):
        assert phd_dawid_precheck(n).status == PASS
    twelve = phd_dawid_precheck(12).evidence
    assert (twelve["r"], twelve["lhs"], twelve["binom"], twelve["power"]) == (3, 156, 220, 256)
    assert twelve["r4_power"] == 128 and not twelve["r4_power_exceeds_lhs"]
    fourteen = phd_dawid_precheck(14).evidence
    assert (fourteen["lhs"], fourteen["binom"], fourteen["power"]) == (210, 1001, 512)
    for bad in (13, 10):
        with pytest.raises(ValueError):
            phd_dawid_precheck(bad)


def test_phd_identity_flagged():
    rep = phd_identity_report(14)
    assert rep.status == FLAGGED
    assert rep.evidence["sum"] == rep.evidence["closed_form"] == 421
    assert rep.evidence["inequality_holds"]


def test_errors():
    with pytest.raises(ValueError):
        k(2)
    with pytest.raises(ValueError):
        k(10, "proof-consistent")


def test_bounds_reports():
    reports = bounds.bounds_reports()
    assert not [r for r in reports if r.status == FAIL]
    assert sum(r.status == FLAGGED for r in reports) == 4


@settings(max_examples=CASES)
@given(st.integers(7, 200), st.sampled_from(bounds.MODES))
def test_k_is_exact_max_min(n, mode):
    res = k(n, mode)
    rs = admissible(n, mode)
    assert res.k_value >= 1
    if not rs:
        assert res.empty_range
        return
    assert res.r_star in rs
    assert (res.k_value, res.r_star) == brute_k(n, rs)
    assert all(bounds.term(n, r) <= res.k_value for r in rs)


@settings(max_examples=CASES)
@given(st.integers(3, 300))
def test_literal_never_exceeds_proof(n):
    lit, prf = k(n, "literal").k_value, k(n, "proof").k_value
    assert lit <= prf
    if n >= 10:
        assert lit == prf
