"""Seeded property harness that re-checks every claim at desk scale.

Each claim runs a number of trials; trial ``i`` of claim ``k`` draws all its
randomness from ``trial_rng(seed, k, i)``.  Reports are therefore identical
whether trials run serially or in worker processes.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import indices, oracles, preservers, sampling
from .poly import GammaSequence, Polynomial, apply_diagonal, trinomial

DEFAULT_SEED = 42
DEFAULT_TRIALS = 1000
DEFAULT_MAX_DEGREE = 12


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    max_degree: int = DEFAULT_MAX_DEGREE
    output_format: str = "json"
    require_positive_witness: bool = False
    jobs: int = 1

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.trials < 1 or self.max_degree < 1:
            raise ValueError("trials and max_degree must be positive")


@dataclass
class ClaimResult:
    claim: str
    trials: int
    failures: int = 0
    first_failure: dict | None = None
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "trials": self.trials,
            "failures": self.failures,
            "first_failure": self.first_failure,
        }
        if timings:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


@dataclass
class VerifyReport:
    config: RunConfig
    claims: list[ClaimResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.failures == 0 for c in self.claims)

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "seed": self.config.seed,
            "trials": self.config.trials,
            "max_degree": self.config.max_degree,
            "passed": self.passed,
            "claims": [c.to_json(timings) for c in self.claims],
        }
        if timings:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


def _q(values) -> list[str]:
    return [str(Fraction(v)) for v in values]


def _payload(gamma: GammaSequence | None = None, f: Polynomial | None = None, m=None, **detail) -> dict:
    out: dict = {}
    if gamma is not None:
        out["gamma"] = _q(gamma.values)
    if f is not None:
        out["f"] = _q(f.coeffs)
    if m is not None:
        out["m"] = m
    out.update(detail)
    return out


# Every trial function returns None on success or a failure payload.

def _sirr_exhaustive(case: int, cfg: RunConfig):
    mods = _SIRR_GRID[case]
    f = Polynomial(mods)
    fast, brute = indices.is_sign_independently_real_rooted(f), indices.sirr_bruteforce(f)
    if fast != brute:
        return _payload(f=f, fast=fast, bruteforce=brute)
    return None


_SIRR_GRID = [mods for d in range(1, 5) for mods in itertools.product((1, 2, 3), repeat=d + 1)]


def _sirr_random(rng, cfg: RunConfig):
    d_max = min(8, cfg.max_degree)
    f = sampling.signed_poly(rng, d_max, min_degree=1)
    if rng.random() < 0.3:
        f = sampling.sirr_poly(rng, d_max)
    fast, brute = indices.is_sign_independently_real_rooted(f), indices.sirr_bruteforce(f, d_max)
    if fast != brute:
        return _payload(f=f, fast=fast, bruteforce=brute)
    return None


def _forward(mode: str):
    def trial(rng, cfg: RunConfig):
        f = sampling.positive_poly(rng, cfg.max_degree)
        gamma = sampling.log_concave(rng, f.degree + 1 + int(rng.integers(0, 3)))
        verdict = preservers.preserves_on(gamma, f, mode)
        if not verdict.holds:
            return _payload(gamma, f, verdict.violating_index, reason="index lost")
        image = apply_diagonal(gamma, f)
        for m in verdict.input_indices:
            try:
                w = preservers.preservation_witness(gamma, f, m, mode)
            except AssertionError as exc:
                return _payload(gamma, f, m, reason=str(exc))
            if not indices.verify_witness(image, m, w, mode):
                return _payload(gamma, f, m, reason="witness failed re-verification")
        return None

    return trial


def _converse(mode: str):
    build = preservers.counterexample_tropical if mode == "tropical" else preservers.counterexample_central

    def trial(rng, cfg: RunConfig):
        gamma = sampling.non_log_concave(rng, int(rng.integers(3, cfg.max_degree + 2)))
        f, m = build(gamma)
        before, after = preservers.check_counterexample(gamma, f, m, mode)
        if not before or after:
            return _payload(gamma, f, m, index_in_source=before, index_in_image=after)
        if mode == "tropical" and not indices.is_tropically_real_rooted(f):
            return _payload(gamma, f, m, reason="source not tropically real-rooted")
        return None

    return trial


_LEMMA_GRID = [g for n in range(1, 6) for g in itertools.product((1, 2, 3), repeat=n)]


def _lemma1_check(gamma: GammaSequence):
    lc = preservers.is_log_concave(gamma)
    sym = preservers.lemma1_symbol_test(gamma, len(gamma) - 1)
    if lc != sym:
        return _payload(gamma, log_concave=lc, symbol_tropically_real_rooted=sym)
    if lc:
        for m in range(1, len(gamma) - 1):
            if not preservers.verify_lemma1_witness(gamma, m):
                return _payload(gamma, m=m, reason="lemma witness failed")
    return None


def _lemma1_exhaustive(case: int, cfg: RunConfig):
    return _lemma1_check(GammaSequence(_LEMMA_GRID[case]))


def _lemma1_random(rng, cfg: RunConfig):
    length = int(rng.integers(1, 14))
    if rng.random() < 0.5:
        gamma = sampling.log_concave(rng, length)
    else:
        gamma = sampling.arbitrary_positive_sequence(rng, length)
    return _lemma1_check(gamma)


def _structural(rng, cfg: RunConfig):
    f = sampling.signed_poly(rng, cfg.max_degree, zero_rate=0.15)
    pos = cfg.require_positive_witness
    trop = indices.tropical_indices(f, positive=pos)
    cent = indices.central_indices(f, positive=pos)
    if not cent <= trop:
        return _payload(f=f, reason="central not subset of tropical", tropical=sorted(trop), central=sorted(cent))
    if not pos and not {0, f.degree} <= cent:
        return _payload(f=f, reason="endpoint not central", central=sorted(cent))
    c = sampling.rational(rng) * (1 if rng.random() < 0.5 else -1)
    scaled = f * c
    if indices.tropical_indices(scaled, positive=pos) != trop or indices.central_indices(scaled, positive=pos) != cent:
        return _payload(f=f, reason="scale invariance", scale=str(c))
    c = sampling.rational(rng)
    dilated = f.dilate(c)
    if indices.tropical_indices(dilated, positive=pos) != trop or indices.central_indices(dilated, positive=pos) != cent:
        return _payload(f=f, reason="dilation invariance", dilation=str(c))
    return None


def _oracles(rng, cfg: RunConfig):
    f = sampling.signed_poly(rng, min(10, cfg.max_degree), zero_rate=0.1)
    for m in range(f.degree + 1):
        cross = indices.is_tropical_index(f, m)
        hull = oracles.tropical_by_hull(f, m)
        sampled = oracles.tropical_by_sampling(f, m)
        central = indices.is_central_index(f, m)
        maximum = oracles.central_by_maximum(f, m)
        if not cross == hull == sampled or central != maximum:
            return _payload(
                f=f, m=m, cross_power=cross, hull=hull, sampler=sampled, root_count=central, maximizer=maximum
            )
    return None


def _sirr_lost(rng, cfg: RunConfig):
    gamma = sampling.non_log_concave(rng, int(rng.integers(3, cfg.max_degree + 2)))
    _, m = preservers.counterexample_central(gamma)
    # z^(m-1) (1 + 2z + z^2) without its zero low coefficients; the shifted
    # sequence acts on the reduced trinomial exactly as gamma acts on the full one
    reduced = trinomial(1)
    shifted = GammaSequence(gamma.values[m - 1 :])
    image = apply_diagonal(shifted, reduced)
    if not indices.sirr_bruteforce(reduced):
        return _payload(gamma, reduced, m, reason="trinomial not SIRR")
    if indices.sirr_bruteforce(image) or preservers.preserves_sirr_on(shifted, reduced):
        return _payload(gamma, reduced, m, reason="image still SIRR")
    return None


def _sirr_kept(rng, cfg: RunConfig):
    f = sampling.sirr_poly(rng, min(6, cfg.max_degree))
    gamma = sampling.log_concave(rng, f.degree + 1)
    image = apply_diagonal(gamma, f)
    if not preservers.preserves_sirr_on(gamma, f) or not indices.sirr_bruteforce(image):
        return _payload(gamma, f, reason="SIRR not preserved")
    return None


@dataclass(frozen=True)
class Claim:
    name: str
    # each part: (trial function, trial count, exhaustive?)
    parts: tuple[tuple[Callable, Callable[[RunConfig], int], bool], ...]


def _scaled(num: int, den: int = 1):
    return lambda cfg: max(1, cfg.trials * num // den)


CLAIMS: tuple[Claim, ...] = (
    Claim("prop1", ((_sirr_exhaustive, lambda cfg: len(_SIRR_GRID), True), (_sirr_random, _scaled(1, 2), False))),
    Claim("thm1_fwd", ((_forward("tropical"), _scaled(1), False),)),
    Claim("thm1_conv", ((_converse("tropical"), _scaled(1, 5), False),)),
    Claim("thm2_fwd", ((_forward("central"), _scaled(1), False),)),
    Claim("thm2_conv", ((_converse("central"), _scaled(1, 5), False),)),
    Claim("lemma1", ((_lemma1_exhaustive, lambda cfg: len(_LEMMA_GRID), True), (_lemma1_random, _scaled(1), False))),
    Claim("corollary", ((_sirr_lost, _scaled(1, 10), False), (_sirr_kept, _scaled(1, 5), False))),
    Claim("central_subset_tropical", ((_structural, _scaled(1), False),)),
    Claim("oracle_agreement", ((_oracles, _scaled(1), False),)),
)

CLAIM_NAMES = tuple(c.name for c in CLAIMS)


def _run_one(args):
    claim_no, part_no, trial, cfg = args
    fn, _, exhaustive = CLAIMS[claim_no].parts[part_no]
    if exhaustive:
        return fn(trial, cfg)
    # part index folded into the stream id keeps streams of different parts apart
    rng = sampling.trial_rng(cfg.seed, claim_no * 16 + part_no, trial)
    return fn(rng, cfg)


def run_claim(claim_no: int, cfg: RunConfig, pool=None) -> ClaimResult:
    claim = CLAIMS[claim_no]
    start = time.perf_counter()
    jobs = [
        (claim_no, part_no, trial, cfg)
        for part_no, (_, count, _) in enumerate(claim.parts)
        for trial in range(count(cfg))
    ]
    outcomes = pool.map(_run_one, jobs, chunksize=16) if pool else map(_run_one, jobs)
    result = ClaimResult(claim.name, trials=len(jobs))
    for (_, part_no, trial, _), payload in zip(jobs, outcomes):
        if payload is not None:
            result.failures += 1
            if result.first_failure is None:
                result.first_failure = {"part": part_no, "trial": trial, "seed": cfg.seed, **payload}
    result.elapsed = time.perf_counter() - start
    return result


def run_verify(cfg: RunConfig, claims: tuple[str, ...] | None = None) -> VerifyReport:
    wanted = claims or CLAIM_NAMES
    unknown = set(wanted) - set(CLAIM_NAMES)
    if unknown:
        raise ValueError(f"unknown claims: {sorted(unknown)}")
    report = VerifyReport(cfg)
    start = time.perf_counter()
    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    try:
        for k, claim in enumerate(CLAIMS):
            if claim.name in wanted:
                report.claims.append(run_claim(k, cfg, pool))
    finally:
        if pool:
            pool.shutdown()
    report.elapsed = time.perf_counter() - start
    return report
