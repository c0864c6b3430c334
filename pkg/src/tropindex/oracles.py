"""Independent deciders used to cross-check :mod:`tropindex.indices`.

None of these share a decision path with the main deciders:

* ``tropical_by_hull`` builds the upper convex hull of ``(n, log b_n)`` with
  an exact orientation predicate and asks whether index ``m`` lies on it.
* ``tropical_by_sampling`` evaluates the max-inequality directly at every
  point where two terms balance, and at rationals between those points.
* ``central_by_maximum`` maximises the balance polynomial over
  ``[0, cauchy bound]`` through the roots of its derivative.

They share the admissibility convention of the main deciders: ``z = 0`` only
for index 0, ``z > 0`` otherwise.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import realroot
from .algebraic import radical_bracket, radical_cmp
from .indices import balance_polynomial, moduli
from .poly import Polynomial, evaluate


def _orientation(p, q, r) -> int:
    """Turn direction of ``(n, log b_n)`` points; ``> 0`` means counter-clockwise.

    The cross product ``(q-p) x (r-p)`` in log space is
    ``log(b_r^(q-p) * b_p^(r-q) / b_q^(r-p))``, so only an integer-power
    comparison is needed.
    """
    (i, bi), (j, bj), (k, bk) = p, q, r
    lhs = bk ** (j - i) * bi ** (k - j)
    rhs = bj ** (k - i)
    return (lhs > rhs) - (lhs < rhs)


def upper_hull(points: list[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Vertices of the upper hull of ``(n, log b)``, left to right, collinear points dropped."""
    hull: list[tuple[int, Fraction]] = []
    for pt in points:
        while len(hull) >= 2 and _orientation(hull[-2], hull[-1], pt) >= 0:
            hull.pop()
        hull.append(pt)
    return hull


def tropical_by_hull(f: Polynomial, m: int) -> bool:
    b = moduli(f)
    if m == 0:
        return True
    if b[m] == 0:
        return False
    # the lowest nonzero term dominates for small z > 0
    if all(c == 0 for c in b[:m]):
        return True
    hull = upper_hull([(n, c) for n, c in enumerate(b) if c])
    target = (m, b[m])
    for left, right in zip(hull, hull[1:]):
        if left[0] <= m <= right[0]:
            return target in (left, right) or _orientation(left, target, right) == 0
    return target == hull[-1]


def _holds_at_radical(b, m, c: Fraction, p: int) -> bool:
    """Max-inequality at ``z = c**(1/p)``, every comparison an integer power test."""
    bm = b[m]
    for n, bn in enumerate(b):
        if n == m or bn == 0:
            continue
        # bm z^m >= bn z^n  <=>  z^(m-n) >= bn/bm  (m > n)  or  z^(n-m) <= bm/bn
        if n < m:
            if radical_cmp(c, p, bn / bm, m - n) < 0:
                return False
        elif radical_cmp(c, p, bm / bn, n - m) > 0:
            return False
    return True


def _holds_at_rational(b, m, z: Fraction) -> bool:
    lhs = b[m] * z**m
    return all(lhs >= c * z**n for n, c in enumerate(b) if n != m)


def _rational_between(lo, hi) -> Fraction:
    """A rational strictly between two radicals ``lo < hi`` given as ``(c, p)``."""
    bits = 0
    while True:
        _, above = radical_bracket(*lo, bits)  # strictly above lo
        if radical_cmp(above, 1, *hi) < 0:
            return above
        bits += 1


def tropical_by_sampling(f: Polynomial, m: int) -> bool:
    b = moduli(f)
    if m == 0 and _holds_at_rational(b, m, Fraction(0)):
        return True
    if b[m] == 0:
        return False
    support = [n for n, c in enumerate(b) if c]
    # z = (b_n / b_k)^(1/(k - n)) balances terms n < k
    balance = [(b[n] / b[k], k - n) for i, n in enumerate(support) for k in support[i + 1:]]
    for c, p in balance:
        if _holds_at_radical(b, m, c, p):
            return True
    order = sorted(set(balance), key=functools.cmp_to_key(lambda x, y: radical_cmp(*x, *y)))
    distinct = [order[0]] if order else []
    for pt in order[1:]:
        if radical_cmp(*pt, *distinct[-1]) != 0:
            distinct.append(pt)
    samples = [Fraction(1)]
    if distinct:
        samples.append(_rational_between((Fraction(0), 1), distinct[0]))
        samples.append(radical_bracket(*distinct[-1], 0)[1] + 1)
        samples += [_rational_between(x, y) for x, y in zip(distinct, distinct[1:])]
    return any(_holds_at_rational(b, m, z) for z in samples if z > 0)


def central_by_maximum(f: Polynomial, m: int) -> bool:
    """``sup_{z >= 0} g(z) >= 0`` for the balance polynomial ``g``."""
    b = moduli(f)
    if m == 0:
        return True
    if b[m] == 0:
        return False
    # z > 0 is required, so divide out the common power of z
    k = next(n for n, c in enumerate(b) if c)
    b, m = b[k:], m - k
    g = balance_polynomial(b, m)
    bound = realroot.cauchy_bound(g)
    if evaluate(g, 0) >= 0 or evaluate(g, bound) >= 0:
        return True
    dg = g.derivative()
    if dg.is_zero():
        return False
    return any(
        realroot.sign_at_root(g, dg, iv) >= 0 for iv in realroot.isolate_roots(dg, 0, bound)
    )
