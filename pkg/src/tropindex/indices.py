"""Tropical and central indices of a polynomial.

Index ``m`` of ``f = sum a_n z^n`` is *tropical* when some admissible ``z``
makes ``|a_m| z^m`` at least every other term ``|a_n| z^n``, and *central*
when it makes ``|a_m| z^m`` at least the sum of all the other terms.  Only
the moduli ``b_n = |a_n|`` matter.

Admissible means ``z >= 0`` for index 0 (with ``0**0 == 1``, so index 0 is
always both) and ``z > 0`` for every other index.  For ``b_0 > 0`` the two
readings coincide; when ``b_0 == 0`` the strict one stops ``z = 0`` from
trivially certifying every index.  Dividing by the lowest power ``z^k`` with
``b_k > 0`` then reduces everything to the case ``b_0 > 0``: indices below
``k`` are neither tropical nor central, index ``k`` is both.

Passing ``positive=True`` demands ``z > 0`` for index 0 as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import realroot
from .algebraic import radical_bracket, radical_cmp, rational_root, simplest_between
from .errors import DegreeTooLarge, IndexOutOfRange, NotAnIndex, ZeroCoefficient, ZeroPolynomial
from .poly import Polynomial, apply_signs, evaluate
from .realroot import Interval

EXACT_POINT = "exact_point"
ISOLATING_INTERVAL = "isolating_interval"
POINT_AT_ZERO = "point_at_zero"

DEFAULT_BRUTEFORCE_DEGREE = 12
WITNESS_WIDTH = Fraction(1, 1024)


@dataclass(frozen=True)
class Witness:
    """A certified ``z >= 0`` at which an index inequality holds.

    For ``isolating_interval`` the witness is the unique root of
    ``certificate`` inside ``interval``.
    """

    kind: str
    point: Fraction | None = None
    interval: Interval | None = None
    certificate: Polynomial | None = None

    @classmethod
    def at_zero(cls) -> Witness:
        return cls(POINT_AT_ZERO, point=Fraction(0))

    @classmethod
    def exact(cls, z) -> Witness:
        z = Fraction(z)
        return cls(POINT_AT_ZERO if z == 0 else EXACT_POINT, point=z)

    @classmethod
    def algebraic(cls, iv: Interval, certificate: Polynomial) -> Witness:
        if iv.lo == iv.hi:
            return cls.exact(iv.lo)
        return cls(ISOLATING_INTERVAL, interval=iv, certificate=certificate)

    @property
    def is_point(self) -> bool:
        return self.kind != ISOLATING_INTERVAL

    def __str__(self) -> str:
        if self.is_point:
            return str(self.point)
        return f"root of {self.certificate} in {self.interval}"


@dataclass(frozen=True)
class IndexEntry:
    m: int
    tropical: bool
    central: bool
    tropical_witness: Witness | None = None
    central_witness: Witness | None = None


@dataclass(frozen=True)
class IndexReport:
    degree: int
    per_index: tuple[IndexEntry, ...]
    warnings: tuple[str, ...] = ()

    @property
    def tropical(self) -> set[int]:
        return {e.m for e in self.per_index if e.tropical}

    @property
    def central(self) -> set[int]:
        return {e.m for e in self.per_index if e.central}


def moduli(f: Polynomial) -> list[Fraction]:
    return [abs(c) for c in f.coeffs]


def _checked_moduli(f: Polynomial, m: int) -> list[Fraction]:
    if f.is_zero():
        raise ZeroPolynomial("indices of the zero polynomial are undefined")
    if not 0 <= m <= f.degree:
        raise IndexOutOfRange(f"index {m} outside 0..{f.degree}")
    return moduli(f)


def _lowest_support(b: list[Fraction]) -> int:
    return next(n for n, c in enumerate(b) if c)


def _reduce(b: list[Fraction], m: int, positive: bool):
    """Strip the common power of ``z``; returns a verdict or ``(b', m')`` with ``b'_0 > 0``."""
    if m == 0 and not positive:
        return True
    k = _lowest_support(b)
    if m < k:
        return False
    return b[k:], m - k


def balance_polynomial(b: list[Fraction], m: int) -> Polynomial:
    """``b_m z^m - sum_{n != m} b_n z^n``; nonnegative exactly at central witnesses."""
    return Polynomial(c if n == m else -c for n, c in enumerate(b))


# -- tropical ---------------------------------------------------------------


def _tropical(b: list[Fraction], m: int) -> bool:
    # b_0 > 0 from here on
    if m == 0:
        return True
    bm = b[m]
    if bm == 0:
        return False
    lower = [(n, c) for n, c in enumerate(b[:m]) if c]
    upper = [(k, c) for k, c in enumerate(b) if k > m and c]
    # max lower bound <= min upper bound, compared as integer powers
    for (n, bn), (k, bk) in itertools.product(lower, upper):
        if bn ** (k - m) * bk ** (m - n) > bm ** (k - n):
            return False
    return True


def _constraints(b: list[Fraction], m: int):
    """Lower bounds ``z^p >= c`` and upper bounds ``z^p <= c`` as ``(c, p)``."""
    lower = [(c / b[m], m - n) for n, c in enumerate(b[:m]) if c]
    upper = [(b[m] / c, k - m) for k, c in enumerate(b) if k > m and c]
    return lower, upper


def _pick_radical(pairs, sign: int):
    best = pairs[0]
    for c, p in pairs[1:]:
        if radical_cmp(c, p, *best) * sign > 0:
            best = (c, p)
    return best


def _radical_witness(c: Fraction, p: int) -> Witness:
    r = rational_root(c, p)
    if r is not None:
        return Witness.exact(r)
    cert = Polynomial.monomial(p) - Polynomial([c])
    bits = 10
    lo, hi = radical_bracket(c, p, bits)
    while lo == 0:
        bits *= 2
        lo, hi = radical_bracket(c, p, bits)
    return Witness.algebraic(Interval(lo, hi), cert)


def _tropical_witness(b: list[Fraction], m: int) -> Witness:
    lower, upper = _constraints(b, m)
    if m == 0:
        # only upper bounds: halve from 1 until they all hold
        z = Fraction(1)
        while not all(z**p <= c for c, p in upper):
            z /= 2
        return Witness.exact(z)
    lo_c, lo_p = _pick_radical(lower, 1)
    if upper:
        up_c, up_p = _pick_radical(upper, -1)
        if radical_cmp(lo_c, lo_p, up_c, up_p) == 0:
            return _radical_witness(lo_c, lo_p)

    def above_lower(z):
        return all(z**p >= c for c, p in lower)

    def below_upper(z):
        return all(z**p <= c for c, p in upper)

    lo, hi = Fraction(0), max(Fraction(1), max(c for c, _ in lower))
    while not below_upper(hi):
        mid = (lo + hi) / 2
        if above_lower(mid):
            hi = mid
        else:
            lo = mid
    return Witness.exact(hi)


def is_tropical_index(f: Polynomial, m: int, *, positive: bool = False) -> bool:
    r = _reduce(_checked_moduli(f, m), m, positive)
    return r if isinstance(r, bool) else _tropical(*r)


def tropical_witness(f: Polynomial, m: int, *, positive: bool = False) -> Witness:
    r = _reduce(_checked_moduli(f, m), m, positive)
    if r is True:
        return Witness.at_zero()
    if r is False or not _tropical(*r):
        raise NotAnIndex(f"{m} is not a tropical index of {f}")
    return _tropical_witness(*r)


# -- central ----------------------------------------------------------------


def _central(b: list[Fraction], m: int) -> bool:
    # b_0 > 0 from here on
    if m == 0 or m == len(b) - 1:
        return True
    if b[m] == 0:
        return False
    return realroot.count_nonneg_roots(balance_polynomial(b, m)) >= 1


def _central_witness(b: list[Fraction], m: int) -> Witness:
    g = balance_polynomial(b, m)
    if m == 0:
        z = Fraction(1)
        while evaluate(g, z) < 0:
            z /= 2
        return Witness.exact(z)
    bound = realroot.cauchy_bound(g)
    if m == len(b) - 1:
        z = bound
        while evaluate(g, z) <= 0:
            z *= 2
        return Witness.exact(z)
    ivs = realroot.isolate_roots(g, 0, bound)
    if not ivs:
        raise NotAnIndex(f"{m} is not a central index")
    sc = realroot.sturm_chain(g)
    if len(ivs) == 1:
        # the two roots of g coincide: g touches zero from below
        return Witness.algebraic(realroot.refine(g, ivs[0], WITNESS_WIDTH), g)
    if len(ivs) != 2:  # g has the sign pattern - ... - + - ... -
        raise AssertionError(f"{len(ivs)} positive roots contradict Descartes' bound")
    left, right = ivs
    while max(left.width, right.width) * 16 > right.midpoint - left.midpoint:
        left, right = realroot._bisect(sc, left), realroot._bisect(sc, right)
    while True:
        # simplest rational close to the mean of the two roots
        mean = (left.midpoint + right.midpoint) / 2
        slack = max(left.width, right.width)
        z = simplest_between(mean - slack, mean + slack)
        if z > 0 and evaluate(g, z) >= 0:
            return Witness.exact(z)
        left, right = realroot._bisect(sc, left), realroot._bisect(sc, right)


def is_central_index(f: Polynomial, m: int, *, positive: bool = False) -> bool:
    r = _reduce(_checked_moduli(f, m), m, positive)
    return r if isinstance(r, bool) else _central(*r)


def central_witness(f: Polynomial, m: int, *, positive: bool = False) -> Witness:
    r = _reduce(_checked_moduli(f, m), m, positive)
    if r is True:
        return Witness.at_zero()
    if r is False or not _central(*r):
        raise NotAnIndex(f"{m} is not a central index of {f}")
    return _central_witness(*r)


# -- verification -----------------------------------------------------------


def _holds_at_point(b: list[Fraction], m: int, z: Fraction, mode: str) -> bool:
    terms = [c * z**n for n, c in enumerate(b)]
    lhs = terms.pop(m)
    if mode == "central":
        return lhs >= sum(terms)
    return all(lhs >= t for t in terms)


def verify_witness(
    f: Polynomial, m: int, w: Witness, mode: str, *, positive: bool = False
) -> bool:
    """Exactly re-check the index inequality at the witness."""
    b = _checked_moduli(f, m)
    strict = positive or m > 0
    if w.is_point:
        if w.point < 0 or (strict and w.point == 0):
            return False
        return _holds_at_point(b, m, w.point, mode)
    p, iv = w.certificate, w.interval
    if iv.lo < 0 or realroot.count_distinct_roots(p, iv) != 1:
        return False
    if iv.lo == 0 and evaluate(p, 0) == 0:
        return not strict and _holds_at_point(b, m, Fraction(0), mode)
    if mode == "central":
        return realroot.sign_at_root(balance_polynomial(b, m), p, iv) >= 0
    mono = Polynomial.monomial(m, b[m])
    return all(
        realroot.sign_at_root(mono - Polynomial.monomial(n, c), p, iv) >= 0
        for n, c in enumerate(b)
        if n != m and c
    )


# -- index sets -------------------------------------------------------------


def _nonzero(f: Polynomial) -> None:
    if f.is_zero():
        raise ZeroPolynomial("indices of the zero polynomial are undefined")


def tropical_indices(f: Polynomial, *, positive: bool = False) -> set[int]:
    _nonzero(f)
    return {m for m in range(f.degree + 1) if is_tropical_index(f, m, positive=positive)}


def central_indices(f: Polynomial, *, positive: bool = False) -> set[int]:
    _nonzero(f)
    return {m for m in range(f.degree + 1) if is_central_index(f, m, positive=positive)}


def is_tropically_real_rooted(f: Polynomial) -> bool:
    return tropical_indices(f) == set(range(f.degree + 1))


def _require_full_support(f: Polynomial) -> None:
    _nonzero(f)
    zeros = [n for n, c in enumerate(f.coeffs) if c == 0]
    if zeros:
        raise ZeroCoefficient(f"coefficients {zeros} vanish")


def is_sign_independently_real_rooted(f: Polynomial) -> bool:
    """Every index central; equivalent to real-rootedness under all sign flips."""
    _require_full_support(f)
    return all(is_central_index(f, m) for m in range(f.degree + 1))


def sirr_bruteforce(f: Polynomial, max_degree: int = DEFAULT_BRUTEFORCE_DEGREE) -> bool:
    """Check real-rootedness of every sign flip of ``f`` directly.

    The constant term keeps its sign; negating a whole polynomial does not
    move its roots.
    """
    _require_full_support(f)
    if f.degree > max_degree:
        raise DegreeTooLarge(f"degree {f.degree} exceeds brute-force cap {max_degree}")
    for tail in itertools.product((1, -1), repeat=f.degree):
        if not realroot.is_real_rooted(apply_signs(f, (1,) + tail)):
            return False
    return True


def index_report(f: Polynomial, *, require_positive_witness: bool = False) -> IndexReport:
    _nonzero(f)
    pos = require_positive_witness
    entries = []
    for m in range(f.degree + 1):
        trop = is_tropical_index(f, m, positive=pos)
        cent = is_central_index(f, m, positive=pos)
        entries.append(
            IndexEntry(
                m=m,
                tropical=trop,
                central=cent,
                tropical_witness=tropical_witness(f, m, positive=pos) if trop else None,
                central_witness=central_witness(f, m, positive=pos) if cent else None,
            )
        )
    warnings = []
    zeros = [n for n, c in enumerate(f.coeffs) if c == 0]
    if zeros:
        warnings.append(
            f"zero coefficients at {zeros}: vanishing terms drop out and only "
            "index 0 may use the witness z = 0"
        )
    return IndexReport(degree=f.degree, per_index=tuple(entries), warnings=tuple(warnings))
