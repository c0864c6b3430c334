"""Exact real-root machinery: Sturm chains, root counting and isolation.

Counting is always on distinct roots. Internally every Sturm chain is kept
as primitive integer polynomials, each a positive multiple of the textbook
element, which keeps sign evaluations cheap and exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _intpoly as ip
from .errors import ZeroPolynomial
from .poly import Polynomial, as_rational, evaluate


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _require_nonzero(f: Polynomial) -> None:
    if f.is_zero():
        raise ZeroPolynomial("operation undefined for the zero polynomial")


def cauchy_bound(f: Polynomial) -> Fraction:
    """``1 + max |a_n| / |a_d|``; every root satisfies ``|z| < bound``."""
    _require_nonzero(f)
    lead = abs(f.leading)
    return 1 + max((abs(c) / lead for c in f.coeffs[:-1]), default=Fraction(0))


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor by Euclidean remainders."""
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f.monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    _require_nonzero(f)
    if f.degree <= 0:
        return f
    return f.divmod(gcd(f, f.derivative()))[0]


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain of the square-free part of a polynomial."""

    sqf: Polynomial
    _ints: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def chain(self) -> list[Polynomial]:
        """Chain elements; each is a positive multiple of the textbook element."""
        return [Polynomial(p) for p in self._ints]

    def sign(self, x: Fraction) -> int:
        return ip.sign_at(list(self._ints[0]), x.numerator, x.denominator)

    def variations(self, x: Fraction) -> int:
        prev = 0
        changes = 0
        for p in self._ints:
            s = ip.sign_at(list(p), x.numerator, x.denominator)
            if s:
                if prev and s != prev:
                    changes += 1
                prev = s
        return changes

    def variations_at_infinity(self, direction: int) -> int:
        prev = 0
        changes = 0
        for p in self._ints:
            s = ip.sign_at_infinity(list(p), direction)
            if prev and s != prev:
                changes += 1
            prev = s
        return changes

    def count(self, lo, hi, include_lo: bool = True, include_hi: bool = True) -> int:
        """Distinct roots between ``lo`` and ``hi`` with the given endpoint rules."""
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi:
            return 0
        if lo == hi:
            return int(include_lo and include_hi and self.sign(lo) == 0)
        # V(lo) - V(hi) counts roots in (lo, hi] for a square-free chain
        n = self.variations(lo) - self.variations(hi)
        if include_lo and self.sign(lo) == 0:
            n += 1
        if not include_hi and self.sign(hi) == 0:
            n -= 1
        return n

    def count_all(self) -> int:
        return self.variations_at_infinity(-1) - self.variations_at_infinity(1)


def _int_chain(p: list[int]) -> list[list[int]]:
    chain = [p]
    d = ip.primitive(ip.derivative(p))
    if not d:
        return chain
    chain.append(d)
    while True:
        r = ip.prem(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append(ip.primitive([-c for c in r]))


def sturm_chain(f: Polynomial) -> SturmChain:
    _require_nonzero(f)
    p = ip.from_poly(f)
    chain = _int_chain(p)
    if len(chain[-1]) > 1:
        # gcd(f, f') is nonconstant: restart from the square-free part
        q = f.divmod(Polynomial(chain[-1]))[0]
        p = ip.from_poly(q)
        chain = _int_chain(p)
    sqf = Polynomial(p)
    if sqf.leading * f.leading < 0:
        sqf = -sqf
    return SturmChain(sqf=sqf, _ints=tuple(tuple(c) for c in chain))


def count_distinct_roots(
    f: Polynomial, iv: Interval, include_lo: bool = True, include_hi: bool = True
) -> int:
    return sturm_chain(f).count(iv.lo, iv.hi, include_lo, include_hi)


def count_real_roots(f: Polynomial) -> int:
    """Distinct real roots on the whole line."""
    return sturm_chain(f).count_all()


def count_nonneg_roots(f: Polynomial) -> int:
    """Distinct roots in ``[0, oo)``."""
    return sturm_chain(f).count(0, cauchy_bound(f))


def _bisect(sc: SturmChain, iv: Interval) -> Interval:
    """Half of ``iv`` holding its unique root (degenerate once the root is hit)."""
    for e in (iv.lo, iv.hi):
        if sc.sign(e) == 0:
            return Interval(e, e)
    mid = iv.midpoint
    if sc.sign(mid) == 0:
        return Interval(mid, mid)
    if sc.count(iv.lo, mid, False, False) == 1:
        return Interval(iv.lo, mid)
    return Interval(mid, iv.hi)


def _exclude(sc: SturmChain, iv: Interval, point: Fraction) -> Interval:
    while iv.lo < iv.hi and point in iv:
        iv = _bisect(sc, iv)
    return iv


def _interior(sc: SturmChain, a: Fraction, b: Fraction) -> Interval:
    """Closed interval for the single root strictly inside ``(a, b)``,
    moved off ``a`` and ``b`` if those are roots too."""
    while sc.sign(a) == 0 or sc.sign(b) == 0:
        mid = (a + b) / 2
        if sc.sign(mid) == 0:
            return Interval(mid, mid)
        if sc.count(a, mid, False, False) == 1:
            b = mid
        else:
            a = mid
    return Interval(a, b)


def _isolate(sc: SturmChain, lo: Fraction, hi: Fraction) -> list[Interval]:
    out: list[Interval] = []
    for x in sorted({lo, hi}):
        if sc.sign(x) == 0:
            out.append(Interval(x, x))
    stack = [(lo, hi)] if lo < hi else []
    while stack:
        a, b = stack.pop()
        k = sc.count(a, b, False, False)
        if k == 0:
            continue
        if k == 1:
            out.append(_interior(sc, a, b))
            continue
        mid = (a + b) / 2
        if sc.sign(mid) == 0:
            out.append(Interval(mid, mid))
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort(key=lambda iv: iv.lo)
    # neighbours may share an endpoint that is not a root; pull them apart
    for i in range(len(out) - 1):
        if out[i].hi >= out[i + 1].lo:
            out[i] = _exclude(sc, out[i], out[i + 1].lo)
    return out


def isolate_roots(f: Polynomial, lo=None, hi=None) -> list[Interval]:
    """Disjoint closed intervals, each holding exactly one distinct real root.

    With no bounds every real root is isolated, starting from the Cauchy
    bound; otherwise only the roots in the closed range ``[lo, hi]``.
    """
    sc = sturm_chain(f)
    if sc.sqf.degree == 0:
        return []
    b = cauchy_bound(sc.sqf)
    lo = -b if lo is None else as_rational(lo)
    hi = b if hi is None else as_rational(hi)
    return _isolate(sc, lo, hi)


def refine(f: Polynomial, iv: Interval, width) -> Interval:
    """Narrow an isolating interval of ``f`` to at most ``width``."""
    sc = sturm_chain(f)
    width = as_rational(width)
    while iv.width > width:
        iv = _bisect(sc, iv)
    return iv


def sign_at_root(h: Polynomial, p: Polynomial, iv: Interval) -> int:
    """Sign of ``h`` at the unique root of ``p`` inside ``iv``.

    Exact: a common root is detected through ``gcd(p, h)``; otherwise the
    interval is refined until ``h`` has no root in it, after which the sign
    of ``h`` at any rational point of the interval is the answer.
    """
    if h.is_zero():
        return 0
    if iv.lo == iv.hi:
        v = evaluate(h, iv.lo)
        return (v > 0) - (v < 0)
    g = gcd(p, h)
    if g.degree > 0 and count_distinct_roots(g, iv) > 0:
        return 0
    sp, sh = sturm_chain(p), sturm_chain(h)
    while sh.count(iv.lo, iv.hi) > 0:
        iv = _bisect(sp, iv)
        if iv.lo == iv.hi:
            break
    v = evaluate(h, iv.midpoint)
    return (v > 0) - (v < 0)


def descartes_sign_changes(coeffs: Sequence) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def is_real_rooted(f: Polynomial) -> bool:
    """All roots real, counted with multiplicity.

    A polynomial and its square-free part have the same root set, so it is
    enough that the square-free part has as many distinct real roots as its
    degree.
    """
    _require_nonzero(f)
    if f.degree <= 1:
        return True
    sc = sturm_chain(f)
    return sc.count_all() == sc.sqf.degree
