import json

import pytest

from ksymplectic import propsuite
from ksymplectic.cli import main
from ksymplectic.propsuite import CHECKS, Trial, run_suite


def test_all_checks_pass_on_the_reference_run():
    report = run_suite(seed=0, trials=50, n_max=2, k_max=3)
    assert report.ok, report.failures
    assert set(report.counts) == set(CHECKS)
    assert all(c == {"pass": 50, "fail": 0} for c in report.counts.values())


def test_zero_trials_is_empty():
    report = run_suite(seed=3, trials=0, n_max=3, k_max=3)
    assert report.ok and report.to_json() == {
        "seed": 3, "trials": 0, "ok": True, "counts": {}, "failures": [],
    }


def test_report_is_deterministic():
    a = run_suite(seed=9, trials=2, n_max=2, k_max=2).to_json()
    b = run_suite(seed=9, trials=2, n_max=2, k_max=2).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_trials_stay_within_bounds():
    for i in range(30):
        t = Trial(1, i, 2, 3)
        assert 1 <= t.n <= 2 and 1 <= t.k <= 3
        assert t.s.dim == t.n * (t.k + 1)


def test_label_subset_and_unknown_label():
    report = run_suite(seed=0, trials=2, n_max=2, k_max=2, labels=["orth-i", "graph-iff"])
    assert set(report.counts) == {"orth-i", "graph-iff"}
    with pytest.raises(KeyError):
        run_suite(seed=0, trials=1, n_max=2, k_max=2, labels=["no-such-check"])


def test_failures_carry_a_reproducer(monkeypatch):
    def broken(t):
        return False, t.base()

    monkeypatch.setitem(CHECKS, "orth-i", broken)
    report = run_suite(seed=5, trials=2, n_max=2, k_max=2, labels=["orth-i"])
    assert not report.ok
    assert report.counts["orth-i"] == {"pass": 0, "fail": 2}
    fail = report.failures[0]
    assert fail["label"] == "orth-i"
    assert fail["reproducer"]["seed"] == 5 and "space" in fail["reproducer"]


def test_cli_failure_exits_nonzero(monkeypatch, capsys):
    monkeypatch.setattr(propsuite, "CHECKS", {"always-fails": lambda t: (False, t.base())})
    status = main(["prop-suite", "--seed", "1", "--trials", "1", "--n-max", "1", "--k-max", "1"])
    doc = json.loads(capsys.readouterr().out)
    assert status == 1 and not doc["ok"] and doc["failures"][0]["label"] == "always-fails"
