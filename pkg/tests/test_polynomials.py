import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclic_strata.polynomials import (
    FamilyMismatchError,
    InexactDivisionError,
    MissingAssignmentError,
    MultiIndex,
    SparsePolynomial as Poly,
    _divide_generic,
    _divide_packed,
    _mul_dict,
    _mul_vectorized,
    det,
    exact_divide,
)

T1 = Poly.variable("t", 1)
T2 = Poly.variable("t", 2)
T3 = Poly.variable("t", 3)


def poly_strategy(family="t", nvars=3, max_exp=4, max_terms=6, coeff=st.integers(-9, 9)):
    mono = st.lists(
        st.tuples(st.integers(1, nvars), st.integers(0, max_exp)),
        max_size=nvars,
    ).map(MultiIndex)
    term = st.tuples(mono, coeff)
    return st.lists(term, max_size=max_terms).map(lambda ts: Poly(family, ts))


# -- construction and basics -------------------------------------------------


def test_multiindex_normalizes():
    m = MultiIndex([(2, 3), (1, 0), (3, 1)])
    assert m == ((2, 3), (3, 1))
    assert m.degree == 4
    with pytest.raises(ValueError):
        MultiIndex([(0, 1)])
    with pytest.raises(ValueError):
        MultiIndex([(1, -1)])


def test_zero_coefficients_dropped():
    p = Poly("t", {MultiIndex([(1, 1)]): 0})
    assert p.is_zero()
    assert (T1 - T1).is_zero()


def test_mul_examples():
    assert (T1 + T2) * (T1 - T2) == T1 * T1 - T2 * T2
    assert (T1 * Poly.zero("t")).is_zero()
    assert T1.scale(Fraction(1, 2)) + T1.scale(Fraction(1, 2)) == T1


def test_family_mismatch_is_hard_error():
    u = Poly.variable("u", 1)
    with pytest.raises(FamilyMismatchError):
        _ = T1 + u
    with pytest.raises(FamilyMismatchError):
        _ = T1 * u


def test_partial_derivative_examples():
    u1, u2 = Poly.variable("u", 1), Poly.variable("u", 2)
    p = (u2 ** 3).scale(Fraction(1, 3)) - u1
    assert p.partial_derivative(2) == u2 * u2
    assert Poly.constant("t", 5).partial_derivative(1).is_zero()
    assert (T1 * T2).partial_derivative(1) == T2


def test_evaluate_examples():
    assert (T1 ** 2 + T2).evaluate({1: 2, 2: 3}) == 7
    h2 = T1 ** 2 + T1 * T2 + T2 ** 2
    assert h2.evaluate({1: 1, 2: 1}) == 3
    with pytest.raises(MissingAssignmentError):
        T1.evaluate({2: 1})


def test_substitute_identity_and_composition():
    p = T1 ** 2 + T2
    ident = {1: Poly.variable("T", 1), 2: Poly.variable("T", 2)}
    q = p.substitute(ident)
    assert q.family == "T"
    assert q.terms == p.terms


def test_canonical_str():
    u1, u2 = Poly.variable("u", 1), Poly.variable("u", 2)
    p = (u2 ** 3).scale(Fraction(1, 3)) - u1
    assert p.canonical_str() == "1/3*u2^3 - u1"
    assert Poly.zero("t").canonical_str() == "0"
    assert (T1 ** 2 * T2 + T1 * T2 ** 2).canonical_str() == "t1^2*t2 + t1*t2^2"
    assert (-T1 + Poly.constant("t", 2)).canonical_str() == "-t1 + 2"


def test_immutability():
    with pytest.raises(AttributeError):
        T1.family = "u"


# -- determinants --------------------------------------------------------------


def test_det_examples():
    one, zero = Poly.one("t"), Poly.zero("t")
    assert det([[one, zero], [zero, one]]) == one
    a, b, c, d = T1, T2, T3, T1 * T2
    assert det([[a, b], [c, d]]) == a * d - b * c
    assert det([[a, b], [a, b]]).is_zero()


def test_det_multilinear_in_rows():
    rows = [[T1, T2], [T2, T3]]
    scaled = [[T1.scale(3), T2.scale(3)], rows[1]]
    assert det(scaled) == det(rows).scale(3)


def test_bareiss_matches_cofactor():
    rng = random.Random(11)

    def entry():
        terms = {}
        for _ in range(rng.randint(0, 2)):
            mono = MultiIndex([(rng.randint(1, 2), rng.randint(0, 2))])
            terms[mono] = terms.get(mono, 0) + rng.randint(-3, 3)
        return Poly("t", terms)

    for _ in range(5):
        m7 = [[entry() for _ in range(7)] for _ in range(7)]
        # Laplace against the 6x6 cofactor path along the first row.
        expansion = Poly.zero("t")
        for j in range(7):
            minor = [row[:j] + row[j + 1:] for row in m7[1:]]
            piece = m7[0][j] * det(minor)
            expansion = expansion + piece if j % 2 == 0 else expansion - piece
        assert det(m7) == expansion


# -- property tests -------------------------------------------------------------


@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(poly_strategy(), poly_strategy())
def test_product_rule(p, q):
    lhs = (p * q).partial_derivative(1)
    rhs = p.partial_derivative(1) * q + p * q.partial_derivative(1)
    assert lhs == rhs


@settings(max_examples=40)
@given(poly_strategy(max_exp=3), poly_strategy(max_exp=3))
def test_exact_division_roundtrip(p, q):
    if q.is_zero():
        return
    prod = p * q
    assert exact_divide(prod, q) == p


@settings(max_examples=30)
@given(poly_strategy(nvars=2, max_exp=3))
def test_evaluate_commutes_with_substitute(p):
    images = {
        1: Poly.variable("T", 1) + Poly.one("T"),
        2: Poly.variable("T", 1) * Poly.variable("T", 2),
    }
    point = {1: Fraction(2, 3), 2: Fraction(-5, 7)}
    direct = p.substitute(images).evaluate(point) if not p.is_zero() else Fraction(0)
    composed = p.evaluate({v: images[v].evaluate(point) for v in (1, 2)})
    assert direct == composed


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        exact_divide(T1 + Poly.one("t"), T2)


def test_division_paths_agree():
    rng = random.Random(5)

    def rnd(n):
        terms = {}
        for _ in range(n):
            mono = MultiIndex(
                (v, rng.randint(0, 5)) for v in range(1, 5)
            )
            terms[mono] = rng.randint(-9, 9)
        return Poly("t", terms)

    for _ in range(20):
        a, b = rnd(rng.randint(1, 30)), rnd(rng.randint(1, 30))
        if b.is_zero():
            continue
        prod = a * b
        if prod.is_zero():
            continue
        assert _divide_packed(prod, b) == a
        assert _divide_generic(prod, b) == a


def test_vectorized_multiply_agrees_with_dict():
    rng = random.Random(17)

    def rnd(n):
        terms = {}
        for _ in range(n):
            mono = MultiIndex((v, rng.randint(0, 7)) for v in range(1, 7))
            terms[mono] = rng.randint(-50, 50)
        return Poly("t", terms)

    for _ in range(5):
        a, b = rnd(400), rnd(300)
        assert _mul_vectorized(a.terms, b.terms) == _mul_dict(a.terms, b.terms)
