import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CASES
from fnq import _pykernel, kernel

compiled = pytest.importorskip("fnq._kernel")


def perm_lists(max_degree=6, max_gens=3):
    return st.integers(1, max_degree).flatmap(
        lambda d: st.tuples(st.just(d), st.lists(st.permutations(range(d)).map(tuple), min_size=1,
                                                  max_size=max_gens)))


@settings(max_examples=CASES)
@given(perm_lists())
def test_backends_agree(case):
    degree, gens = case
    a = compiled.perm_closure(gens, degree, 10**5)
    b = _pykernel.perm_closure(gens, degree, 10**5)
    assert [tuple(p) for p in a[0]] == [tuple(p) for p in b[0]]
    assert list(a[1]) == list(b[1]) and list(a[2]) == list(b[2]) and a[3] == b[3]
    perms = b[0]
    assert list(compiled.class_labels(perms, gens)) == list(_pykernel.class_labels(perms, gens))
    assert list(compiled.perm_orders(perms)) == list(_pykernel.perm_orders(perms))
    members = list(range(0, len(perms), 2))
    x = len(perms) - 1
    assert compiled.count_commuting(perms, members, x) == _pykernel.count_commuting(perms, members, x)
    if len(perms) <= 120:
        ta, tb = compiled.multiplication_table(perms), _pykernel.multiplication_table(perms)
        assert list(ta) == list(tb)
        n = len(perms)
        sub = [n - 1] if n > 1 else [0]
        assert bytes(compiled.table_join(ta, n, sub)) == bytes(_pykernel.table_join(tb, n, sub))


def test_partial_closure_matches():
    gens = [(1, 0, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6, 0)]
    a = compiled.perm_closure(gens, 7, 500)
    b = _pykernel.perm_closure(gens, 7, 500)
    assert not a[3] and not b[3]
    assert len(a[0]) == len(b[0]) == 500


def test_empty_members():
    perms = [(0, 1), (1, 0)]
    assert compiled.count_commuting(perms, [], 1) == _pykernel.count_commuting(perms, [], 1) == 0


def test_selector_prefers_compiled():
    assert kernel.BACKEND == ("python" if os.environ.get("FNQ_PURE") else "cython")


def test_pure_override():
    code = "from fnq import kernel; print(kernel.BACKEND, kernel.perm_closure.__module__)"
    out = subprocess.run([sys.executable, "-c", code], env=dict(os.environ, FNQ_PURE="1"),
                         capture_output=True, text=True, check=True).stdout.split()
    assert out == ["python", "fnq._pykernel"]


def test_pure_backend_runs_group_code():
    code = ("from fnq.groups import alt; from fnq.groups.subgroups import minimal_faithful_degree;"
            "print(alt(5).order, minimal_faithful_degree(alt(5)))")
    out = subprocess.run([sys.executable, "-c", code], env=dict(os.environ, FNQ_PURE="1"),
                         capture_output=True, text=True, check=True).stdout.split()
    assert out == ["60", "5"]
