"""One test per acceptance criterion, each within its time limit.

Every test emits a ``PASS``/``FAIL`` line that is repeated in the terminal
summary.  Criterion 6 asks for a degree of at least 12 for ``D'_4/<delta>``;
the computed value is 8, so that half is reported as FAIL and marked xfail.
"""

import json
import os
import shutil
import subprocess
import sys
import time
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CASES
from fnq import autf, bounds, orders
from fnq.freegroup import reduce
from fnq.groups import (
    alt,
    class_commuting_count,
    class_of,
    conjugacy_classes,
    dprime,
    dprime_mod_delta,
    is_real,
    max_commuting_subset_in_class,
    psp4,
)
from fnq.groups.elements import Perm
from fnq.groups.subgroups import minimal_faithful_degree
from fnq.linearize import abelianize, matmul, natural_image_group
from fnq.report import FAIL, FLAGGED, PASS
from fnq.repcheck import canonical_subset, change_basis, decompose
from fnq.verify import VerifyConfig, suite_gamma, suite_natural_maps, suite_relations
from test_autf import RANK, build, words
from test_freegroup import letters, slow_reduce
from test_repcheck import sign_module, unipotent_basis

TABLE_4 = Counter([(2, 13), (2, 22), (3, 6), (3, 12), (4, 8), (4, 4), (5, 4), (6, 2), (6, 2)])


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def conclude(emit, number, title, ok, elapsed, limit, detail=""):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    emit(f"{status} criterion {number}: {title} [{elapsed:.2f}s < {limit}s]{' ' + detail if detail else ''}")
    assert ok, f"criterion {number} check failed: {detail}"
    assert within, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def test_criterion_1_relations(acceptance_line):
    with Timer() as t:
        reports = suite_relations(VerifyConfig(relation_ranks=(3, 8)))
    ranks = {r.evidence.get("rank") for r in reports}
    ok = reports and all(r.status == PASS for r in reports) and set(range(3, 9)) <= ranks
    instances = sum(r.evidence.get("instances", 0) for r in reports)
    conclude(acceptance_line, 1, "relation identities exact at ranks 3-8", ok, t.elapsed, 5,
             f"{len(reports)} families, {instances} instances")


def test_criterion_2_gamma(acceptance_line):
    with Timer() as t:
        reports = suite_gamma(VerifyConfig(gamma_ranks=(4, 8)))
        direct = all(autf.order(autf.gamma(n), 10) == 3 for n in range(4, 9))
    ok = direct and all(r.status == PASS for r in reports)
    conclude(acceptance_line, 2, "gamma has order 3 and centralises rho/lambda below n-1", ok, t.elapsed, 1,
             f"{len(reports)} reports")


def test_criterion_3_natural_maps(acceptance_line):
    with Timer() as t:
        o3 = natural_image_group(3, 2).order
        o4 = natural_image_group(4, 2).order
        reports = suite_natural_maps(VerifyConfig())
    flagged = [r for r in reports if r.status == FLAGGED]
    ok = (o3 == 168 and o4 == 20160 and not [r for r in reports if r.status == FAIL]
          and any(r.evidence.get("printed") == 21060 for r in flagged))
    conclude(acceptance_line, 3, "mod-2 images of orders 168 and 20160 (21060 flagged)", ok, t.elapsed, 30,
             f"orders {o3}, {o4}")


def test_criterion_4_c23_table(acceptance_line):
    with Timer() as t:
        G = psp4(3)
        real = []
        for c in conjugacy_classes(G):
            x = G.element(c.rep)
            if c.order > 1 and is_real(G, x):
                real.append((c.order, class_commuting_count(G, x)))
    ok = G.order == 25920 and Counter(real) == TABLE_4
    conclude(acceptance_line, 4, "PSp4(3) real classes reproduce the commuting-count table", ok, t.elapsed, 300,
             f"order {G.order}, {len(real)} real classes")


def test_criterion_5_a6(acceptance_line):
    with Timer() as t:
        A6 = alt(6)
        tau = Perm.from_cycles(6, (1, 2), (3, 4))
        count = class_commuting_count(A6, tau)
        clique = max_commuting_subset_in_class(A6, tau)
        heavy = []
        for c in conjugacy_classes(A6):
            x = A6.element(c.rep)
            if c.order > 1 and is_real(A6, x) and class_commuting_count(A6, x) >= 5:
                heavy.append(c.rep)
        unique = len(heavy) == 1 and heavy[0] in class_of(A6, tau).members
        sizes = [len(autf.commuting_transvections(n, autf.rho(n, 1, 2))) for n in (3, 4)]
    ok = count == 5 and clique == 3 and unique and sizes == [10, 24]
    conclude(acceptance_line, 5, "A6 double transpositions and commuting transvections", ok, t.elapsed, 10,
             f"count {count}, clique {clique}, transvections {sizes}")


def test_criterion_6_degrees(acceptance_line):
    with Timer() as t:
        d4 = minimal_faithful_degree(dprime(4))
        l32 = minimal_faithful_degree(natural_image_group(3, 2))
    conclude(acceptance_line, "6a", "minimal degrees D'4 = 8 and L3(2) = 7", d4 == 8 and l32 == 7, t.elapsed, 120,
             f"D'4 {d4}, L3(2) {l32}")


@pytest.mark.xfail(strict=True, reason="D'4/<delta> has a faithful action on 8 points")
def test_criterion_6_dprime_mod_delta(acceptance_line):
    with Timer() as t:
        d = minimal_faithful_degree(dprime_mod_delta(4))
    conclude(acceptance_line, "6b", "minimal degree of D'4/<delta> is at least 12", d >= 12, t.elapsed, 120,
             f"computed {d}")


def test_criterion_7_appendix(acceptance_line):
    with Timer() as t:
        reports = orders.appendix_suite(40)
    lemmas = {r.evidence["lemma"] for r in reports}
    ok = lemmas == set("abcdefgh") and all(r.status == PASS for r in reports)
    conclude(acceptance_line, 7, "appendix inequalities (a)-(h) up to n = 40", ok, t.elapsed, 60,
             f"{len(reports)} rows")


def test_criterion_8_bounds(acceptance_line):
    with Timer() as t:
        table = [bounds.k(n).k_value for n in (3, 4, 5, 6)]
        k7, k8 = bounds.k(7, "proof"), bounds.k(8, "proof")
        sweep = bounds.exp_lower_sweep(7, 64, "proof")
        phd = [bounds.phd_dawid_precheck(n) for n in range(12, 41, 2)]
    ok = (table == [7, 8, 12, 14] and (k7.k_value, k7.r_star, k8.k_value, k8.r_star) == (21, 2, 28, 2)
          and sweep.status == PASS and all(r.status == PASS for r in phd))
    conclude(acceptance_line, 8, "k(n) table, proof-mode k(7)/k(8), k(n)^2 >= 2^n, prechecks", ok, t.elapsed, 1,
             f"table {table}")


# -- criterion 9: property suites -----------------------------------------------------

GROUPS = {}


def _group(name):
    if name not in GROUPS:
        GROUPS[name] = {"A5": lambda: alt(5), "A6": lambda: alt(6), "D'4": lambda: dprime(4),
                        "D'4/delta": lambda: dprime_mod_delta(4)}[name]()
    return GROUPS[name]


def _confluence(seq):
    assert reduce(seq, RANK).seq == slow_reduce(seq)


def _associativity(spec):
    f, g, h = (build(s) for s in spec)
    assert autf.compose(autf.compose(f, g), h) == autf.compose(f, autf.compose(g, h))


def _round_trip(spec):
    f = build(spec)
    assert autf.compose(f, autf.inverse(f)) == autf.Automorphism.identity(RANK)


def _abelianization(spec):
    f, g = build(spec[0]), build(spec[1])
    assert abelianize(autf.compose(f, g)) == matmul(abelianize(g), abelianize(f))


def _class_function(args):
    name, i, j = args
    G = _group(name)
    x, g = G.element(i % G.order), G.element(j % G.order)
    assert class_commuting_count(G, x) == class_commuting_count(G, g.inverse() * x * g)


def _basis_invariance(args):
    parts, p, upper, lower = args
    mod = sign_module(4, p, parts)
    dec = decompose(mod, p, 4)
    assert dec.nonzero() == dict(Counter(canonical_subset(s, 4) for s in parts))
    assert decompose(change_basis(mod, unipotent_basis(len(parts), p, upper, lower), p), p, 4).dims == dec.dims


PROPERTIES = [
    ("free-reduction confluence", letters, _confluence),
    ("composition associativity", st.tuples(words, words, words), _associativity),
    ("automorphism round trip", words, _round_trip),
    ("abelianization multiplicativity", st.tuples(words, words), _abelianization),
    ("commuting counts are class functions",
     st.tuples(st.sampled_from(["A5", "A6", "D'4", "D'4/delta"]), st.integers(0, 10**6), st.integers(0, 10**6)),
     _class_function),
    ("E_I dimensions are basis invariant",
     st.tuples(st.lists(st.frozensets(st.integers(1, 4)), min_size=1, max_size=6), st.sampled_from([3, 5, 7]),
               st.lists(st.integers(0, 6), min_size=1, max_size=8),
               st.lists(st.integers(0, 6), min_size=1, max_size=8)),
     _basis_invariance),
]


def test_criterion_9_properties(acceptance_line):
    counts = {}
    with Timer() as t:
        for title, strategy, body in PROPERTIES:
            seen = [0]

            @settings(max_examples=CASES, database=None)
            @given(strategy)
            def prop(value):
                seen[0] += 1
                body(value)

            prop()
            counts[title] = seen[0]
    ok = all(c >= CASES for c in counts.values())
    conclude(acceptance_line, 9, "property suites", ok, t.elapsed, 600,
             ", ".join(f"{k}: {v}" for k, v in counts.items()))


def _verify_command():
    exe = shutil.which("fnq")
    return [exe] if exe else [sys.executable, "-m", "fnq.cli"]


def test_criterion_10_determinism(acceptance_line):
    with Timer() as t:
        runs = []
        for _ in range(2):
            proc = subprocess.run(_verify_command() + ["verify", "--json"], capture_output=True, text=True,
                                  env=dict(os.environ))
            doc = json.loads(proc.stdout)
            doc.pop("generated")
            runs.append((proc.returncode, proc.stderr, json.dumps(doc, indent=2, sort_keys=True)))
    ok = runs[0] == runs[1] and runs[0][0] == 0 and runs[0][1] == ""
    conclude(acceptance_line, 10, "fnq verify --json is deterministic", ok, t.elapsed, 120,
             f"{len(json.loads(runs[0][2])['reports'])} reports per run")
