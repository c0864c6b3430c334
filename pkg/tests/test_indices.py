from fractions import Fraction as F

import pytest

from tropindex import indices
from tropindex.errors import DegreeTooLarge, IndexOutOfRange, NotAnIndex, ZeroCoefficient, ZeroPolynomial
from tropindex.indices import ISOLATING_INTERVAL, Witness, verify_witness
from tropindex.poly import Polynomial, evaluate, geometric_poly, trinomial
from tropindex.realroot import count_distinct_roots


def P(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


@pytest.mark.parametrize(
    "coeffs, m, expected",
    [
        ((1, 1, 1), 1, True),
        ((1, 1, 3), 1, False),
        ((1, 2, 2), 1, True),
        ((1, -1, 1), 1, True),  # signs are irrelevant
        ((5,), 0, True),
    ],
)
def test_tropical_examples(coeffs, m, expected):
    assert indices.is_tropical_index(P(*coeffs), m) is expected


@pytest.mark.parametrize("d", range(0, 8))
def test_geometric_is_tropically_real_rooted(d):
    assert indices.tropical_indices(geometric_poly(d)) == set(range(d + 1))
    assert indices.is_tropically_real_rooted(geometric_poly(d))


@pytest.mark.parametrize(
    "coeffs, m, expected",
    [
        ((1, 2, 1), 1, True),
        ((1, 1, 1), 1, False),
        ((1, 3, 1), 1, True),
        ((1, 1), 1, True),
    ],
)
def test_central_examples(coeffs, m, expected):
    assert indices.is_central_index(P(*coeffs), m) is expected


def test_index_sets():
    assert indices.tropical_indices(P(1, 1, 1)) == {0, 1, 2}
    assert indices.central_indices(P(1, 1, 1)) == {0, 2}
    assert indices.central_indices(P(1, 2, 1)) == {0, 1, 2}


def test_tropical_witness_examples():
    assert indices.tropical_witness(P(1, 1, 1), 1) == Witness.exact(1)
    assert indices.tropical_witness(P(1, 3, 1), 1) == Witness.exact(1)
    assert indices.tropical_witness(P(7, 1, 3), 0).kind == indices.POINT_AT_ZERO


def test_tropical_witness_on_a_tie_is_algebraic():
    # lower bound sqrt(1/2) meets upper bound 1/sqrt(2): the only witness is irrational
    f = P(1, 0, 2, 0, 4)
    w = indices.tropical_witness(f, 2)
    assert w.kind == ISOLATING_INTERVAL
    assert verify_witness(f, 2, w, "tropical")


def test_central_witness_examples():
    w = indices.central_witness(P(1, 2, 1), 1)
    assert w.kind == ISOLATING_INTERVAL and 1 in w.interval
    assert count_distinct_roots(w.certificate, w.interval) == 1
    assert indices.central_witness(P(1, 3, 1), 1) == Witness.exact(F(3, 2))
    assert indices.central_witness(P(1, 1), 1) == Witness.exact(2)
    g = indices.balance_polynomial([1, 3, 1], 1)
    assert evaluate(g, F(3, 2)) == F(5, 4)


def test_not_an_index():
    with pytest.raises(NotAnIndex):
        indices.central_witness(P(1, 1, 1), 1)
    with pytest.raises(NotAnIndex):
        indices.tropical_witness(P(1, 1, 3), 1)


def test_bad_index_and_zero_polynomial():
    with pytest.raises(IndexOutOfRange):
        indices.is_tropical_index(P(1, 1), 2)
    with pytest.raises(IndexOutOfRange):
        indices.is_central_index(P(1, 1), -1)
    with pytest.raises(ZeroPolynomial):
        indices.tropical_indices(Polynomial())
    with pytest.raises(ZeroPolynomial):
        indices.index_report(P(0, 0))


def test_verify_witness_rejects_bad_points():
    f = P(1, 1, 1)
    assert verify_witness(f, 1, Witness.exact(1), "tropical")
    assert not verify_witness(f, 1, Witness.exact(2), "tropical")
    assert not verify_witness(f, 1, Witness.exact(1), "central")
    assert not verify_witness(f, 2, Witness.exact(-3), "central")
    assert verify_witness(f, 0, Witness.at_zero(), "central")
    assert not verify_witness(f, 0, Witness.at_zero(), "central", positive=True)


def test_report():
    r = indices.index_report(P(1, 1, 1))
    assert [(e.tropical, e.central) for e in r.per_index] == [(True, True), (True, False), (True, True)]
    assert r.per_index[1].central_witness is None
    assert all(e.tropical and e.central for e in indices.index_report(P(1, 2, 1)).per_index)
    r = indices.index_report(P(5))
    assert r.degree == 0 and r.per_index[0].tropical_witness.kind == indices.POINT_AT_ZERO
    assert not r.warnings


def test_report_witnesses_verify():
    for coeffs in [(1, 2, 1), (3, -1, F(1, 9), 2), (1, 10, 1, 0, 7), (2, 1, 0, 0, 1)]:
        f = P(*coeffs)
        for e in indices.index_report(f).per_index:
            if e.tropical:
                assert verify_witness(f, e.m, e.tropical_witness, "tropical")
            if e.central:
                assert verify_witness(f, e.m, e.central_witness, "central")


# zero coefficients: z = 0 may only certify index 0


def test_zero_low_coefficients():
    f = trinomial(3)  # z^2 + 2z^3 + z^4
    assert indices.tropical_indices(f) == {0, 2, 3, 4}
    assert indices.central_indices(f) == {0, 2, 3, 4}
    w = indices.central_witness(f, 3)
    assert w.point != 0 or w.kind == ISOLATING_INTERVAL
    assert verify_witness(f, 3, w, "central")
    assert not verify_witness(f, 3, Witness.at_zero(), "central")
    assert indices.index_report(f).warnings


def test_zero_low_coefficients_image_loses_index():
    # the image of the trinomial under (1, 1, 1, 9) no longer has index 2 central
    f = P(0, 1, 2, 9)
    assert not indices.is_central_index(f, 2)


def test_vanishing_index_is_neither():
    f = P(1, 0, 1)
    assert not indices.is_tropical_index(f, 1)
    assert not indices.is_central_index(f, 1)
    f = P(0, 0, 1)
    assert indices.tropical_indices(f) == {0, 2}


def test_positive_flag():
    f = P(0, 1, 1)
    assert indices.is_central_index(f, 0)
    assert not indices.is_central_index(f, 0, positive=True)
    f = P(3, 1, 1)
    w = indices.tropical_witness(f, 0, positive=True)
    assert w.point > 0 and verify_witness(f, 0, w, "tropical", positive=True)
    w = indices.central_witness(f, 0, positive=True)
    assert w.point > 0 and verify_witness(f, 0, w, "central", positive=True)


def test_invariance_examples():
    f = P(2, 7, 1, 5)
    for c in (F(-3), F(1, 7)):
        assert indices.tropical_indices(f * c) == indices.tropical_indices(f)
        assert indices.central_indices(f * c) == indices.central_indices(f)
    assert indices.central_indices(f.dilate(F(5, 2))) == indices.central_indices(f)


@pytest.mark.parametrize(
    "coeffs, expected",
    [((1, 2, 1), True), ((1, 1, 1), False), ((1, -2, 1), True), ((1, 10, 1), True), ((3, -7), True)],
)
def test_sirr(coeffs, expected):
    f = P(*coeffs)
    assert indices.is_sign_independently_real_rooted(f) is expected
    assert indices.sirr_bruteforce(f) is expected


def test_sirr_needs_full_support():
    with pytest.raises(ZeroCoefficient):
        indices.is_sign_independently_real_rooted(P(1, 0, 1))
    with pytest.raises(ZeroCoefficient):
        indices.sirr_bruteforce(P(1, 0, 1))


def test_bruteforce_degree_cap():
    with pytest.raises(DegreeTooLarge):
        indices.sirr_bruteforce(geometric_poly(5), max_degree=4)
