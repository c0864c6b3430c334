"""The harness reports failures it is shown, with a reproducible payload."""

import json

from tropindex import cli, indices, oracles, preservers
from tropindex.verify import CLAIM_NAMES, RunConfig, run_verify


def test_all_claims_pass_quickly():
    report = run_verify(RunConfig(seed=7, trials=10))
    assert report.passed
    assert [c.claim for c in report.claims] == list(CLAIM_NAMES)


def test_broken_central_decider_is_caught(monkeypatch):
    real = indices.is_central_index

    def broken(f, m, **kw):
        return real(f, m, **kw) or m == 1

    monkeypatch.setattr(indices, "is_central_index", broken)
    report = run_verify(RunConfig(seed=42, trials=20), ("oracle_agreement", "thm2_conv"))
    assert not report.passed
    for claim in report.claims:
        assert claim.failures > 0
        payload = claim.first_failure
        assert payload["seed"] == 42 and "f" in payload and "m" in payload


def test_broken_log_concavity_is_caught(monkeypatch):
    monkeypatch.setattr(preservers, "least_violation", lambda gamma: None)
    report = run_verify(RunConfig(seed=5, trials=20), ("lemma1",))
    assert report.claims[0].failures > 0
    assert "gamma" in report.claims[0].first_failure


def test_broken_hull_oracle_is_caught(monkeypatch):
    monkeypatch.setattr(oracles, "tropical_by_hull", lambda f, m: True)
    report = run_verify(RunConfig(seed=5, trials=30), ("oracle_agreement",))
    assert report.claims[0].failures > 0


def test_cli_exits_nonzero_with_payload(monkeypatch, capsys):
    monkeypatch.setattr(indices, "is_tropical_index", lambda f, m, **kw: True)
    code = cli.main(["verify", "--seed", "1", "--trials", "10", "--claim", "thm1_conv"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert not out["passed"]
    first = out["claims"][0]["first_failure"]
    assert first["gamma"] and first["f"] and first["seed"] == 1


def test_failure_payload_reproduces():
    # a payload's (gamma, f, m) is enough to rebuild the instance
    from tropindex.poly import GammaSequence, Polynomial

    gamma, f = GammaSequence(["1", "1", "2"]), Polynomial(["1", "2", "1"])
    assert preservers.check_counterexample(gamma, f, 1, "central") == (True, False)


def test_timings_are_opt_in():
    report = run_verify(RunConfig(seed=7, trials=5), ("prop1",))
    assert "elapsed_s" not in json.dumps(report.to_json())
    assert "elapsed_s" in json.dumps(report.to_json(timings=True))
