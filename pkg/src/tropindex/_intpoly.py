# Integer-coefficient helpers for the Sturm machinery.
# Polynomials are lists of ints, index 0 first, no trailing zeros.
from __future__ import annotations

from math import gcd, lcm

from .poly import Polynomial


def strip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def from_poly(f: Polynomial) -> list[int]:
    """Positive integer multiple of ``f``, made primitive."""
    if f.is_zero():
        return []
    den = lcm(*(c.denominator for c in f.coeffs))
    return primitive([int(c * den) for c in f.coeffs])


def to_poly(p: list[int]) -> Polynomial:
    return Polynomial(p)


def primitive(p: list[int]) -> list[int]:
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            return p
    return [c // g for c in p] if g > 1 else p


def derivative(p: list[int]) -> list[int]:
    return [n * c for n, c in enumerate(p)][1:]


def prem(a: list[int], b: list[int]) -> list[int]:
    """Positive multiple of the remainder of ``a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    mul, sgn = abs(lb), (1 if lb > 0 else -1)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        lr = r[-1] * sgn
        r = [c * mul for c in r]
        for j, c in enumerate(b):
            r[k + j] -= lr * c
        strip(r)
    return r


def sign_at(p: list[int], num: int, den: int) -> int:
    """Sign of ``p(num/den)`` for ``den > 0``, via homogeneous Horner."""
    if not p:
        return 0
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def sign_at_infinity(p: list[int], direction: int) -> int:
    if not p:
        return 0
    lead = 1 if p[-1] > 0 else -1
    if direction < 0 and (len(p) - 1) % 2:
        lead = -lead
    return lead
