import json
import re

import jsonschema
import pytest

from fnq import verify
from fnq.report import FAIL, FLAGGED, PASS, REPORT_SCHEMA, STATUSES, CheckReport
from fnq.verify import VerifyConfig, run_all

# suite -> locator keys it must cover
MANIFEST = {
    "relations": {"remark:steinberg", "lemma:conjugate-transvections", "sec:prelims", "lemma:closure-of-An-in-Dn"},
    "gamma": {"sec:char-3", "lemma:killing-t"},
    "natural_maps": {"sec:natural-maps", "table:alternating"},
    "a6": {"lemma:A5-not-quotient-of-F3"},
    "c23": {"table:cc"},
    "degrees": {"lemma:actions-n=4", "lemma:way-too-big"},
    "repcheck": {"lemma:reps-of-D'n"},
    "appendix": {"lemma:computation-actions", "lemma:computation-actions-2", "lemma:computation-alternaing",
                 "lemma:computation-orders", "lemma:computation-orders-char-2",
                 "lemma:computation-orders-type-A", "lemma:computation-small-cases", "table:spo"},
    "tables": {"table:alternating", "table:spo", "lemma:fischer"},
    "lie": {"isomorphisms", "lemma:computation-orders-char-2"},
    "exceptional": {"exceptional-groups"},
    "bounds": {"thm:main-thm-actions", "prop:actions-on-sets", "remark:exponential", "thm:phd-dawid"},
}
LOCATOR = re.compile(r"^[a-z-]+(:[^ ]+)? ")

@pytest.fixture(scope="module")
def reports():
    return run_all()


def locator(claim):
    return claim.split(" ", 1)[0]


def test_registry_matches_manifest(reports):
    assert list(verify.SUITES) == list(MANIFEST)
    found = {}
    for r in reports:
        found.setdefault(r.suite, set()).add(locator(r.claim))
    assert found == MANIFEST


def test_claims_carry_locators(reports):
    assert all(LOCATOR.match(r.claim) for r in reports)
    assert all(r.status in STATUSES for r in reports)


def test_default_run(reports):
    assert not [r.claim for r in reports if r.status == FAIL]
    flagged = [r for r in reports if r.status == FLAGGED]
    assert len(flagged) >= 2
    assert any("L4(2)" in r.claim or r.evidence.get("group") == "L4(2)" for r in flagged)
    assert any(r.suite == "bounds" and "r <= n/2 - 3" in r.claim for r in flagged)
    assert {r.suite for r in flagged} <= {"natural_maps", "tables", "c23", "degrees", "bounds"}
    assert verify.exit_status(reports) == 0


def test_schema(reports):
    doc = json.loads(verify.to_json(reports))
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert isinstance(doc["generated"], str)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"generated": None, "reports": [{"suite": "x", "claim": "no locator", "status": "ok",
                                                             "evidence": {}}]}, REPORT_SCHEMA)


def test_deterministic():
    a = verify.to_json(run_all(), timestamp=False)
    b = verify.to_json(run_all(), timestamp=False)
    assert a == b
    assert json.loads(a)["generated"] is None


def test_selection():
    assert run_all(suites=[]) == []
    gamma = run_all(suites=["gamma"])
    assert gamma and {r.suite for r in gamma} == {"gamma"}
    with pytest.raises(KeyError):
        run_all(suites=["gamma", "nope"])


def test_exit_status():
    assert verify.exit_status([]) == 0
    assert verify.exit_status([CheckReport("s", "x:y z", FLAGGED)]) == 0
    assert verify.exit_status([CheckReport("s", "x:y z", PASS), CheckReport("s", "x:y z", FAIL)]) == 1
    with pytest.raises(ValueError):
        CheckReport("s", "x:y z", "maybe")


@pytest.mark.parametrize("kwargs", [{"nmax": 11}, {"cap": 999}, {"relation_ranks": (2, 5)},
                                    {"relation_ranks": (5, 4)}, {"gamma_ranks": (3, 8)}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        VerifyConfig(**kwargs)


def test_smaller_config():
    reports = run_all(VerifyConfig(nmax=12, relation_ranks=(3, 4), gamma_ranks=(4, 5)),
                      suites=["relations", "gamma", "appendix"])
    assert all(r.status == PASS for r in reports)
    assert max(r.evidence.get("n", 0) for r in reports if r.suite == "appendix" and r.evidence["lemma"] != "h") == 12
