"""Seeded random instances for the property harness.

Every generator takes a :class:`numpy.random.Generator`; the harness derives
one per trial from ``(seed, claim, trial)`` so runs are reproducible and
independent of evaluation order.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import preservers
from .indices import sirr_bruteforce
from .poly import GammaSequence, Polynomial


def trial_rng(seed: int, claim: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, claim, trial])))


def rational(rng, max_num: int = 9, max_den: int = 6) -> Fraction:
    """Positive rational ``p/q`` with ``1 <= p <= max_num``, ``1 <= q <= max_den``."""
    return Fraction(int(rng.integers(1, max_num + 1)), int(rng.integers(1, max_den + 1)))


def _choice(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def _decreasing_ratios(rng, count: int) -> list[Fraction]:
    # a small pool makes ties (equality in log-concavity) common
    pool = [rational(rng, 8, 4) for _ in range(max(2, count // 2 + 1))]
    return sorted((_choice(rng, pool) for _ in range(count)), reverse=True)


def positive_coefficients(rng, d: int) -> list[Fraction]:
    style = int(rng.integers(3))
    if style == 0:
        return [rational(rng, 20, 6) for _ in range(d + 1)]
    if style == 1:
        # log-concave backbone with multiplicative noise: many indices survive
        coeffs = [rational(rng)]
        for r in _decreasing_ratios(rng, d):
            coeffs.append(coeffs[-1] * r)
        return [c * _choice(rng, [Fraction(1, 2), Fraction(2, 3), 1, 1, Fraction(3, 2), 2]) for c in coeffs]
    return [rational(rng) * Fraction(2) ** int(rng.integers(-8, 9)) for _ in range(d + 1)]


def positive_poly(rng, max_degree: int, min_degree: int = 1) -> Polynomial:
    d = int(rng.integers(min_degree, max_degree + 1))
    return Polynomial(positive_coefficients(rng, d))


def signed_poly(rng, max_degree: int, zero_rate: float = 0.0, min_degree: int = 0) -> Polynomial:
    """Random signs on positive coefficients; interior zeros at ``zero_rate``."""
    d = int(rng.integers(min_degree, max_degree + 1))
    coeffs = positive_coefficients(rng, d)
    out = []
    for n, c in enumerate(coeffs):
        if n < d and rng.random() < zero_rate:
            out.append(Fraction(0))
        else:
            out.append(c if rng.random() < 0.5 else -c)
    return Polynomial(out)


def log_concave(rng, length: int) -> GammaSequence:
    """``gamma_{n+1} = gamma_n r_{n+1}`` with ``r_1 >= r_2 >= ...``."""
    values = [rational(rng)]
    for r in _decreasing_ratios(rng, length - 1):
        values.append(values[-1] * r)
    return GammaSequence(values)


def non_log_concave(rng, length: int) -> GammaSequence:
    """A log-concave sequence with one interior entry pushed off the curve."""
    if length < 3:
        raise ValueError("need at least three terms to break log-concavity")
    values = list(log_concave(rng, length).values)
    m = int(rng.integers(1, length - 1))
    slack = values[m - 1] * values[m + 1] / values[m] ** 2  # <= 1
    u = Fraction(int(rng.integers(1, 10)), 10)
    if rng.random() < 0.5:
        values[m] *= slack * u
    else:
        values[m + 1] *= (1 + u) / slack
    gamma = GammaSequence(values)
    if preservers.is_log_concave(gamma):
        raise AssertionError(f"generator produced a log-concave sequence {gamma}")
    return gamma


def arbitrary_positive_sequence(rng, length: int) -> GammaSequence:
    return GammaSequence(rational(rng, 12, 4) for _ in range(length))


def sirr_poly(rng, max_degree: int) -> Polynomial:
    """Random polynomial with nonzero coefficients that passes the brute-force SIRR test."""
    while True:
        d = int(rng.integers(1, max_degree + 1))
        coeffs = [rational(rng)]
        ratio = rational(rng, 12, 3)
        for _ in range(d):
            coeffs.append(coeffs[-1] * ratio)
            ratio /= _choice(rng, [Fraction(3), Fraction(4), Fraction(9, 2), Fraction(6), Fraction(10)])
        f = Polynomial(c if rng.random() < 0.5 else -c for c in coeffs)
        if sirr_bruteforce(f):
            return f
