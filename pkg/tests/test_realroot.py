"""Root counting and isolation, with sympy as an independent oracle."""

from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tropindex import realroot
from tropindex.errors import ZeroPolynomial
from tropindex.poly import Polynomial, evaluate
from tropindex.realroot import Interval

X = sympy.Symbol("x")


def to_sympy(f: Polynomial):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in f.coeffs])), X)


def sympy_roots(f: Polynomial) -> list:
    return sorted(set(sympy.real_roots(to_sympy(f))), key=lambda r: float(r))


small = st.fractions(min_value=-6, max_value=6, max_denominator=4)
polys = st.lists(small, min_size=2, max_size=7).map(Polynomial).filter(lambda f: f.degree >= 1)


def test_examples():
    assert realroot.count_real_roots(Polynomial([-2, 0, 1])) == 2
    assert realroot.count_real_roots(Polynomial([1, 0, 1])) == 0
    # (z - 1)^2 (z + 2): two distinct roots
    f = Polynomial([-1, 1]) ** 2 * Polynomial([2, 1])
    assert realroot.count_real_roots(f) == 2
    assert realroot.is_real_rooted(f)
    assert not realroot.is_real_rooted(Polynomial([1, 1, 1]))


def test_cauchy_bound():
    assert realroot.cauchy_bound(Polynomial([-6, 1, 1])) == 7
    with pytest.raises(ZeroPolynomial):
        realroot.cauchy_bound(Polynomial())


def test_gcd_and_squarefree():
    a, b = Polynomial([-1, 1]), Polynomial([2, 1])
    assert realroot.gcd(a * a * b, a * Polynomial([5, 1])) == a
    assert realroot.squarefree_part(a**3 * b) == a * b


def test_sturm_chain_is_textbook_up_to_positive_scaling():
    f = Polynomial([-1, -3, 0, 1])  # z^3 - 3z - 1, square-free
    chain = realroot.sturm_chain(f).chain
    assert chain[0].monic() == f.monic() and chain[0].leading > 0
    assert chain[1].monic() == f.derivative().monic()
    # p2 = -rem(p0, p1) = 2z + 1 up to a positive factor
    q, r = chain[0].divmod(chain[1])
    assert (-r).monic() == chain[2].monic()


def test_half_open_count():
    sc = realroot.sturm_chain(Polynomial([0, -1, 1]))  # roots 0 and 1
    assert sc.count(0, 1) == 2
    assert sc.count(0, 1, include_lo=False) == 1
    assert sc.count(0, 1, include_lo=False, include_hi=False) == 0
    assert sc.count(F(-1, 2), F(1, 2)) == 1


@settings(max_examples=150, deadline=None)
@given(polys)
def test_count_matches_sympy(f):
    assert realroot.count_real_roots(f) == len(sympy_roots(f))


@settings(max_examples=150, deadline=None)
@given(polys)
def test_isolation_matches_sympy(f):
    ivs = realroot.isolate_roots(f)
    roots = sympy_roots(f)
    assert len(ivs) == len(roots)
    for iv, r in zip(ivs, roots):
        assert sympy.Rational(iv.lo.numerator, iv.lo.denominator) <= r <= sympy.Rational(iv.hi.numerator, iv.hi.denominator)
        assert realroot.count_distinct_roots(f, iv) == 1
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi < b.lo


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(4, 40))
def test_refine(f, bits):
    for iv in realroot.isolate_roots(f):
        small_iv = realroot.refine(f, iv, F(1, 2**bits))
        assert small_iv.width <= F(1, 2**bits)
        assert realroot.count_distinct_roots(f, small_iv) == 1
        assert iv.lo <= small_iv.lo <= small_iv.hi <= iv.hi


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_sign_at_root_matches_sympy(p, h):
    common = sympy.gcd(to_sympy(p), to_sympy(h))
    zeros = set(sympy.real_roots(common)) if common.degree() > 0 else set()
    for iv, r in zip(realroot.isolate_roots(p), sympy_roots(p)):
        if r in zeros:
            expected = 0
        else:
            expected = 1 if to_sympy(h).as_expr().subs(X, r).evalf(60) > 0 else -1
        assert realroot.sign_at_root(h, p, iv) == expected


def test_sign_at_root_common_root():
    p = Polynomial([-2, 0, 1])  # +-sqrt 2
    h = Polynomial([-2, 0, 1]) * Polynomial([1, 1])
    for iv in realroot.isolate_roots(p):
        assert realroot.sign_at_root(h, p, iv) == 0
    iv = realroot.isolate_roots(p, 0)[0]
    assert realroot.sign_at_root(Polynomial([-1, 1]), p, iv) == 1  # sqrt 2 > 1


def test_isolation_window():
    f = Polynomial([0, -1, 0, 1])  # -1, 0, 1
    assert len(realroot.isolate_roots(f, 0)) == 2
    assert len(realroot.isolate_roots(f, F(1, 2), 2)) == 1
    ivs = realroot.isolate_roots(f)
    assert Interval(F(0), F(0)) in ivs or any(0 in iv for iv in ivs)


def test_descartes():
    assert realroot.descartes_sign_changes([1, -2, 0, 1]) == 2
    assert realroot.count_nonneg_roots(Polynomial([-1, 0, 1])) == 1
    assert realroot.count_nonneg_roots(Polynomial([0, 1])) == 1


@settings(max_examples=100, deadline=None)
@given(polys)
def test_descartes_bounds_positive_roots(f):
    # positive roots counted with multiplicity
    positive = sum(1 for r in sympy.real_roots(to_sympy(f)) if r > 0)
    changes = realroot.descartes_sign_changes(f.coeffs)
    assert positive <= changes and (changes - positive) % 2 == 0
