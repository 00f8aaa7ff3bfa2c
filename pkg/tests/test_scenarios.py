import json

import pytest

from gggrlab import scenarios
from gggrlab.scenarios import Report, ScenarioError, list_scenarios, run, validate_report

NAMES = ["regular-class", "single-node", "e8-char5", "e7-mizuno", "multiplicity"]


def test_registry():
    reg = list_scenarios()
    assert [r["name"] for r in reg] == NAMES
    assert all(r["anchor"] and r["description"] for r in reg)
    assert list_scenarios() == reg


@pytest.mark.parametrize("name", NAMES)
def test_default_runs_pass(name):
    rep = run(name)
    assert rep.passed, rep.summary()
    doc = json.loads(rep.to_json())
    validate_report(doc)
    assert doc["pass"] is True


@pytest.mark.parametrize("name", NAMES)
def test_reports_deterministic(name):
    assert run(name).to_json() == run(name).to_json()


def test_regular_class_e7():
    rep = run("regular-class", "E7")
    sol = next(c for c in rep.checks if c.id == "E7.solution")
    assert sol.computed == ["unique", [1] * 7]


@pytest.mark.parametrize("p,e", [(13, 1), (5, 1), (13, 2), (17, 1)])
def test_e8_char5_params(p, e):
    rep = run("e8-char5", p=p, e=e)
    assert rep.passed
    by_id = {c.id: c for c in rep.checks}
    assert by_id["solution.subsystem_domain"].computed == ["unique", [1, 1, 1, 0, 1, -5, 1, 1]]
    assert by_id["kernel.type"].computed == ["D5", "A3"]
    assert by_id["s.order"].computed == 4


@pytest.mark.parametrize("p,e,order", [(5, 2, 8), (13, 2, 24)])
def test_e7_mizuno_params(p, e, order):
    rep = run("e7-mizuno", p=p, e=e)
    assert rep.passed
    by_id = {c.id: c for c in rep.checks}
    assert by_id["t.order"].computed == order
    assert by_id["mizuno.degrees"].computed == [2] * 5
    assert by_id["solution"].computed == ["unique", [1, 0, 0, 1, 0, 1, 0]]


def test_e7_rejects_odd_power():
    with pytest.raises(ScenarioError, match="even power"):
        run("e7-mizuno", p=5, e=1)


def test_e8_rejects_p_3_mod_4():
    with pytest.raises(ScenarioError, match="1 mod 4"):
        run("e8-char5", p=7, e=1)


def test_bad_inputs():
    with pytest.raises(ScenarioError):
        run("nope")
    with pytest.raises(ScenarioError):
        run("single-node", "E7")
    with pytest.raises(ScenarioError):
        run("multiplicity", p=5)
    with pytest.raises(ScenarioError):
        run("e8-char5", p=9)


def test_untagged_expectation_rejected():
    rep = Report("x")
    with pytest.raises(ScenarioError):
        rep.check("a", "b", 1, 1, "GUESS")
    with pytest.raises(ScenarioError):
        validate_report({"scenario": "x", "checks": [{"id": "a", "anchor": "b", "computed": 1,
                                                      "expected": 1, "provenance": "", "pass": True}],
                         "pass": True})
    with pytest.raises(ScenarioError):
        validate_report({"scenario": "x", "checks": [{"id": "a", "anchor": "b", "computed": 1,
                                                      "expected": 2, "provenance": "DERIVED", "pass": False}],
                         "pass": True})


def test_failed_check_fails_report():
    rep = Report("x")
    rep.check("ok", "a", 1, 1, "TRIVIAL")
    rep.check("bad", "b", 1, 2, "DERIVED")
    assert not rep.passed
    assert "FAIL" in rep.summary()


def test_presets():
    pre = scenarios.diagram_presets()
    assert set(pre) == {"G2-support", "F4-support", "E8-support", "E7-d0", "D5xA3-d1"}
    assert pre["E7-d0"]["weights"] == [1, 0, 0, 1, 0, 1, 0]
    assert pre["D5xA3-d1"]["simples"][-1] == [-2, -3, -4, -6, -5, -4, -3, -2]
