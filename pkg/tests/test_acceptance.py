"""Acceptance run: every claim at full scale with seed 42.

Each criterion prints one PASS/FAIL line straight to the terminal, so the
lines show up in ``pytest -v`` output without ``-s``.
"""

import io
from contextlib import redirect_stdout

import pytest

from tropindex import cli
from tropindex.verify import CLAIM_NAMES, RunConfig, run_verify

SEED = 42
TRIALS = 1000

# criterion -> (label, expected trials per claim, time budget in seconds)
CRITERIA = {
    1: ("SIRR iff every index is central", {"prop1": 360 + 500}, 60),
    2: ("log-concave maps keep tropical indices", {"thm1_fwd": 1000}, 30),
    3: ("log-concave maps keep central indices", {"thm2_fwd": 1000}, 60),
    4: ("non-log-concave maps lose an index", {"thm1_conv": 200, "thm2_conv": 200}, 30),
    5: ("log-concave iff symbol tropically real-rooted", {"lemma1": 363 + 1000}, 30),
    6: ("structural invariants", {"central_subset_tropical": 1000}, 30),
    7: ("oracle agreement", {"oracle_agreement": 1000}, 60),
    8: ("SIRR preserved iff log-concave", {"corollary": 100 + 200}, 60),
}


@pytest.fixture(scope="module")
def report():
    return run_verify(RunConfig(seed=SEED, trials=TRIALS))


def _announce(capsys, n: int, name: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[acceptance {n}] {'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, report, capsys):
    name, expected, budget = CRITERIA[n]
    results = {c.claim: c for c in report.claims if c.claim in expected}
    trials = {k: r.trials for k, r in results.items()}
    failures = sum(r.failures for r in results.values())
    elapsed = sum(r.elapsed for r in results.values())
    ok = trials == expected and failures == 0 and elapsed < budget
    detail = f"trials {trials}, failures {failures}, {elapsed:.1f}s (budget {budget}s)"
    _announce(capsys, n, name, ok, detail)
    for r in results.values():
        assert r.failures == 0, r.first_failure
    assert trials == expected
    assert elapsed < budget


def _verify_output() -> tuple[int, bytes]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(["verify", "--seed", str(SEED)])
    return code, buf.getvalue().encode("utf-8")


def test_criterion_9_determinism(capsys):
    code1, first = _verify_output()
    code2, second = _verify_output()
    ok = first == second and code1 == code2 == 0
    _announce(capsys, 9, "determinism", ok, f"two seed-{SEED} verify runs, {len(first)} bytes each, identical={first == second}")
    assert code1 == code2 == 0
    assert first == second


def test_every_claim_is_covered():
    covered = {c for _, claims, _ in CRITERIA.values() for c in claims}
    assert covered == set(CLAIM_NAMES)
