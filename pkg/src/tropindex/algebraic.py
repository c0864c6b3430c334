"""Integer roots and exact comparisons of radicals ``c ** (1/p)``."""

from __future__ import annotations

from fractions import Fraction


def iroot(n: int, k: int) -> int:
    """Largest integer ``r`` with ``r**k <= n``."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    if n < 2 or k == 1:
        return n
    r = 1 << -(-n.bit_length() // k)  # r >= true root
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def rational_root(c: Fraction, k: int) -> Fraction | None:
    """Exact nonnegative ``k``-th root of ``c >= 0`` if it is rational."""
    c = Fraction(c)
    p, q = iroot(c.numerator, k), iroot(c.denominator, k)
    if p**k == c.numerator and q**k == c.denominator:
        return Fraction(p, q)
    return None


def radical_cmp(c1: Fraction, p1: int, c2: Fraction, p2: int) -> int:
    """Sign of ``c1**(1/p1) - c2**(1/p2)`` for ``c1, c2 >= 0``."""
    a, b = Fraction(c1) ** p2, Fraction(c2) ** p1
    return (a > b) - (a < b)


def radical_bracket(c: Fraction, p: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= c**(1/p) <= hi`` with ``hi - lo == 2**-bits``."""
    c = Fraction(c)
    scale = 1 << bits
    x = c * scale**p
    lo = iroot(x.numerator // x.denominator, p)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in the closed range ``[lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty range")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if fl == lo or fl + 1 <= hi:
        return Fraction(fl if fl == lo else fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))
