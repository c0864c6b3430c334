"""Diagonal operators that preserve tropical and central indices.

A positive sequence preserves both kinds of indices exactly when it is
log-concave.  This module decides log-concavity, builds the explicit square
root witnesses that make the forward direction constructive, and builds the
polynomials that break preservation when log-concavity fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import indices, realroot
from .algebraic import radical_bracket, rational_root
from .errors import IndexOutOfRange, IsLogConcave, NotLogConcave
from .indices import Witness
from .poly import (
    GammaSequence,
    Polynomial,
    apply_diagonal,
    as_rational,
    gamma_symbol,
    geometric_poly,
    trinomial,
)
from .realroot import Interval

TROPICAL = "tropical"
CENTRAL = "central"
MODES = (TROPICAL, CENTRAL)


@dataclass(frozen=True)
class SqrtScalar:
    """The nonnegative real ``sqrt(radicand)``, compared exactly by squaring."""

    radicand: Fraction

    def __post_init__(self):
        r = as_rational(self.radicand)
        if r < 0:
            raise ValueError("negative radicand")
        object.__setattr__(self, "radicand", r)

    @classmethod
    def of_rational(cls, q) -> SqrtScalar:
        q = as_rational(q)
        if q < 0:
            raise ValueError("SqrtScalar holds nonnegative values only")
        return cls(q * q)

    def rational(self) -> Fraction | None:
        return rational_root(self.radicand, 2)

    def scaled(self, q) -> SqrtScalar:
        """``q * sqrt(r)`` for rational ``q >= 0``."""
        q = as_rational(q)
        if q < 0:
            raise ValueError("negative scale")
        return SqrtScalar(q * q * self.radicand)

    def _square_of(self, other) -> Fraction:
        if isinstance(other, SqrtScalar):
            return other.radicand
        q = as_rational(other)
        return q * q if q >= 0 else Fraction(-1)

    def __lt__(self, other) -> bool:
        return self.radicand < self._square_of(other)

    def __le__(self, other) -> bool:
        return self.radicand <= self._square_of(other)

    def __gt__(self, other) -> bool:
        return self.radicand > self._square_of(other)

    def __ge__(self, other) -> bool:
        return self.radicand >= self._square_of(other)

    def bracket(self, bits: int = 20) -> tuple[Fraction, Fraction]:
        return radical_bracket(self.radicand, 2, bits)

    def __str__(self) -> str:
        r = self.rational()
        return str(r) if r is not None else f"sqrt({self.radicand})"


def _compare_terms(a: Fraction, i: int, b: Fraction, j: int, radicand: Fraction) -> int:
    """Sign of ``a*s**i - b*s**j`` where ``s = sqrt(radicand)`` and ``a, b > 0``."""
    if i == j:
        lhs, rhs = a, b
    elif i < j:
        lhs, rhs = (a / b) ** 2, radicand ** (j - i)
    else:
        lhs, rhs = radicand ** (i - j), (b / a) ** 2
    return (lhs > rhs) - (lhs < rhs)


@dataclass(frozen=True)
class PreservationVerdict:
    holds: bool
    violating_index: int | None
    input_indices: tuple[int, ...]
    output_indices: tuple[int, ...]


@dataclass(frozen=True)
class SequenceClass:
    log_concave: bool
    violating_index: int | None = None

    @property
    def label(self) -> str:
        return "log_concave_tropical_multiplier" if self.log_concave else "not_log_concave"


def _gamma(gamma) -> GammaSequence:
    return gamma if isinstance(gamma, GammaSequence) else GammaSequence(gamma)


def least_violation(gamma) -> int | None:
    """Smallest ``n`` with ``gamma_n^2 < gamma_{n-1} gamma_{n+1}``."""
    g = _gamma(gamma).values
    for n in range(1, len(g) - 1):
        if g[n] * g[n] < g[n - 1] * g[n + 1]:
            return n
    return None


def is_log_concave(gamma) -> bool:
    return least_violation(gamma) is None


def classify_sequence(gamma) -> SequenceClass:
    m = least_violation(gamma)
    return SequenceClass(log_concave=m is None, violating_index=m)


def lemma1_symbol_test(gamma, d: int) -> bool:
    """Whether the truncated symbol ``gamma_0 + ... + gamma_d z^d`` is tropically real-rooted."""
    return indices.is_tropically_real_rooted(gamma_symbol(_gamma(gamma), d))


def lemma1_witness(gamma, m: int) -> SqrtScalar:
    """``sqrt(gamma_{m-1} / gamma_{m+1})``, where index ``m`` of the symbol dominates."""
    g = _gamma(gamma)
    if not 1 <= m <= len(g) - 2:
        raise IndexOutOfRange(f"interior index needed, got {m} for {len(g)} terms")
    if not is_log_concave(g):
        raise NotLogConcave(f"{g} is not log-concave")
    return SqrtScalar(g[m - 1] / g[m + 1])


def verify_lemma1_witness(gamma, m: int, d: int | None = None) -> bool:
    """Exactly check that index ``m`` of the degree-``d`` symbol dominates at its witness.

    Also checks that the witnesses ``z_1, z_2, ...`` never decrease.
    """
    g = _gamma(gamma)
    z = lemma1_witness(g, m)
    top = len(g) - 1 if d is None else min(d, len(g) - 1)
    for n in range(top + 1):
        if n != m and _compare_terms(g[m], m, g[n], n, z.radicand) < 0:
            return False
    chain = [lemma1_witness(g, k) for k in range(1, len(g) - 1)]
    return all(a <= b for a, b in zip(chain, chain[1:]))


def _index_set(f: Polynomial, mode: str) -> set[int]:
    if mode == TROPICAL:
        return indices.tropical_indices(f)
    if mode == CENTRAL:
        return indices.central_indices(f)
    raise ValueError(f"unknown mode {mode!r}")


def _verdict(before: set[int], after: set[int]) -> PreservationVerdict:
    missing = sorted(before - after)
    return PreservationVerdict(
        holds=not missing,
        violating_index=missing[0] if missing else None,
        input_indices=tuple(sorted(before)),
        output_indices=tuple(sorted(after)),
    )


def preserves_on(gamma, f: Polynomial, mode: str) -> PreservationVerdict:
    image = apply_diagonal(_gamma(gamma), f)
    return _verdict(_index_set(f, mode), _index_set(image, mode))


def preserves_tropical_on(gamma, f: Polynomial) -> PreservationVerdict:
    return preserves_on(gamma, f, TROPICAL)


def preserves_central_on(gamma, f: Polynomial) -> PreservationVerdict:
    return preserves_on(gamma, f, CENTRAL)


def _zeta(values: tuple[Fraction, ...], m: int) -> SqrtScalar:
    # witness for index m of the symbol truncated at degree d = len(values) - 1;
    # at m = d the sequence is continued geometrically, which keeps it log-concave
    d = len(values) - 1
    if m == 0:
        return SqrtScalar(0)
    if m == d:
        return SqrtScalar.of_rational(values[d - 1] / values[d])
    return SqrtScalar(values[m - 1] / values[m + 1])


def _scaled_root_poly(p: Polynomial, radicand: Fraction) -> Polynomial:
    """Rational polynomial vanishing at ``alpha * sqrt(radicand)`` for each root ``alpha`` of ``p``."""
    even, odd = [], []
    for k, c in enumerate(p.coeffs):
        if k % 2 == 0:
            even.append(Polynomial.monomial(k, c / radicand ** (k // 2)))
        else:
            odd.append(Polynomial.monomial(k, c / radicand ** (k // 2)))
    e = sum(even, Polynomial())
    o = sum(odd, Polynomial())
    return e * e - o * o * (1 / radicand)


def _product_witness(w: Witness, zeta: SqrtScalar) -> Witness:
    if w.is_point:
        if w.point == 0 or zeta.radicand == 0:
            return Witness.at_zero()
        prod = zeta.scaled(w.point)
        r = prod.rational()
        if r is not None:
            return Witness.exact(r)
        cert = Polynomial([-prod.radicand, 0, 1])
        bits = 16
        lo, hi = prod.bracket(bits)
        while lo == 0:
            bits *= 2
            lo, hi = prod.bracket(bits)
        return Witness.algebraic(Interval(lo, hi), cert)
    s = zeta.rational()
    if s is not None:
        q = w.certificate.dilate(1 / s)
    else:
        q = _scaled_root_poly(w.certificate, zeta.radicand)
    sc = realroot.sturm_chain(w.certificate)
    iv, bits = w.interval, 8
    while True:
        lo_s, hi_s = (s, s) if s is not None else zeta.bracket(bits)
        enclosure = Interval(iv.lo * lo_s, iv.hi * hi_s)
        if realroot.count_distinct_roots(q, enclosure) == 1:
            return Witness.algebraic(enclosure, q)
        iv = realroot._bisect(sc, iv)
        bits += 4
        if iv.lo == iv.hi:
            return _product_witness(Witness.exact(iv.lo), zeta)


def preservation_witness(gamma, f: Polynomial, m: int, mode: str = TROPICAL) -> Witness:
    """Witness for index ``m`` of ``T_gamma[f]``: the product of the witness
    for ``f`` with the symbol witness of ``gamma``.

    The result is re-verified exactly against ``T_gamma[f]`` before returning.
    """
    g = _gamma(gamma)
    image = apply_diagonal(g, f)
    values = g.values[: f.degree + 1]
    if not is_log_concave(values):
        raise NotLogConcave(f"{GammaSequence(values)} is not log-concave")
    if mode == TROPICAL:
        w = indices.tropical_witness(f, m)
    elif mode == CENTRAL:
        w = indices.central_witness(f, m)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = _product_witness(w, _zeta(values, m))
    if not indices.verify_witness(image, m, out, mode):
        raise AssertionError(f"product witness {out} fails for index {m} of {image}")
    return out


def counterexample_central(gamma) -> tuple[Polynomial, int]:
    """Trinomial whose index ``m`` is central but stops being so after ``T_gamma``."""
    m = least_violation(gamma)
    if m is None:
        raise IsLogConcave(f"{_gamma(gamma)} is log-concave; no counterexample exists")
    return trinomial(m), m


def counterexample_tropical(gamma) -> tuple[Polynomial, int]:
    """Geometric polynomial whose image is the truncated symbol, with ``m`` not tropical there."""
    m = least_violation(gamma)
    if m is None:
        raise IsLogConcave(f"{_gamma(gamma)} is log-concave; no counterexample exists")
    return geometric_poly(m + 1), m


def check_counterexample(gamma, f: Polynomial, m: int, mode: str) -> tuple[bool, bool]:
    """(``m`` is an index of ``f``, ``m`` is an index of ``T_gamma[f]``)."""
    image = apply_diagonal(_gamma(gamma), f)
    decide = indices.is_tropical_index if mode == TROPICAL else indices.is_central_index
    return decide(f, m), decide(image, m)


def preserves_sirr_on(gamma, f: Polynomial) -> bool:
    if not indices.is_sign_independently_real_rooted(f):
        return True
    return indices.is_sign_independently_real_rooted(apply_diagonal(_gamma(gamma), f))

