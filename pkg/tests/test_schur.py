from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest

from cyclic_strata.polynomials import MultiIndex, SparsePolynomial as Poly
from cyclic_strata.schur import (
    ExpansionLimitError,
    SymmetricWindow,
    bialternant_value,
    h_complete,
    h_from_T,
    h_recursion_check,
    jacobi_trudi_value,
    power_sum_polynomial,
    schur_bialternant,
    schur_in_T,
    schur_jacobi_trudi,
    schur_split_trudi,
    schur_tail_trudi,
    split_trudi_value,
    tail_trudi_value,
    transition_matrix,
)
from cyclic_strata.semigroup import CurveSignature, YoungDiagram, young_diagram, u_weights
from cyclic_strata.strata import truncate_upper


def brute_h(n, lo, hi):
    """Oracle: expand prod 1/(1 - z t_i) by enumerating degree-n multisets."""
    if n < 0:
        return Poly.zero("t")
    terms = {}
    for combo in combinations_with_replacement(range(lo, hi + 1), n):
        exps = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        terms[MultiIndex(exps.items())] = 1
    return Poly("t", terms)


def brute_newton_h(n):
    """Oracle: h_n in scaled power sums via n h_n = sum_m (m T_m) h_{n-m}."""
    hs = [Poly.one("T")]
    for d in range(1, n + 1):
        acc = Poly.zero("T")
        for m in range(1, d + 1):
            acc = acc + Poly.variable("T", m).scale(m) * hs[d - m]
        hs.append(acc.scale(Fraction(1, d)))
    return hs[n]


# -- complete homogeneous functions -------------------------------------------


def test_h_complete_examples():
    w12 = SymmetricWindow(1, 2)
    t1, t2 = Poly.variable("t", 1), Poly.variable("t", 2)
    assert h_complete(2, w12, 2) == t1 * t1 + t1 * t2 + t2 * t2
    assert h_complete(0, w12, 2) == Poly.one("t")
    assert h_complete(-3, w12, 2).is_zero()
    g = 5
    assert h_complete(1, SymmetricWindow(1, g), g) == sum(
        (Poly.variable("t", v) for v in range(2, g + 1)), Poly.variable("t", 1)
    )


def test_h_complete_against_generating_function():
    for lo, hi in [(1, 3), (2, 4), (1, 4)]:
        for n in range(0, 6):
            assert h_complete(n, SymmetricWindow(lo, hi), 4) == brute_h(n, lo, hi)


def test_window_validation():
    with pytest.raises(ValueError):
        SymmetricWindow(3, 2)
    with pytest.raises(ValueError):
        h_complete(2, SymmetricWindow(1, 5), 4)


def test_h_from_T_small():
    T1, T2, T3 = (Poly.variable("T", i) for i in (1, 2, 3))
    assert h_from_T(1) == T1
    assert h_from_T(2) == (T1 ** 2).scale(Fraction(1, 2)) + T2
    assert h_from_T(3) == (T1 ** 3).scale(Fraction(1, 6)) + T1 * T2 + T3
    assert h_from_T(0) == Poly.one("T")
    assert h_from_T(-1).is_zero()


def test_h_from_T_matches_newton_recurrence():
    for n in range(11):
        assert h_from_T(n) == brute_newton_h(n)


def test_h_from_T_bridges_to_h_complete():
    # Substituting the actual power sums must recover the t-expansion.
    for g in (2, 3, 4):
        for n in range(1, 7):
            hT = h_from_T(n)
            expanded = hT.substitute(
                {m: power_sum_polynomial(m, 1, g) for m in hT.variables()}
            )
            assert expanded == h_complete(n, SymmetricWindow(1, g), g)


# -- the four routes -----------------------------------------------------------


def test_bialternant_examples():
    assert schur_bialternant(YoungDiagram((1,)), 1) == Poly.variable("t", 1)
    t1, t2 = Poly.variable("t", 1), Poly.variable("t", 2)
    assert schur_bialternant(YoungDiagram((2, 1)), 2) == t1 * t1 * t2 + t1 * t2 * t2
    assert schur_bialternant(YoungDiagram(()), 2) == Poly.one("t")


def test_jacobi_trudi_examples():
    t1, t2 = Poly.variable("t", 1), Poly.variable("t", 2)
    assert schur_jacobi_trudi(YoungDiagram((2, 1)), 2) == t1 * t1 * t2 + t1 * t2 * t2
    # single-row diagram reduces to h_n
    assert schur_jacobi_trudi(YoungDiagram((4,)), 3) == h_complete(
        4, SymmetricWindow(1, 3), 3
    )
    assert schur_tail_trudi(YoungDiagram((3,)), 1) == Poly.variable("t", 1, 3)


def test_route_equality_small_signatures():
    for r, s in [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5)]:
        sig = CurveSignature(r, s)
        g = sig.genus
        lam = young_diagram(sig)
        reference = schur_bialternant(lam, g)
        assert schur_jacobi_trudi(lam, g) == reference
        assert schur_tail_trudi(lam, g) == reference
        for k in range(g + 1):
            assert schur_split_trudi(lam, g, k) == reference


def test_route_equality_non_curve_diagram():
    # the identities are general; try a non-curve partition too
    d = YoungDiagram((3, 1, 1))
    ref = schur_bialternant(d, 3)
    assert schur_jacobi_trudi(d, 3) == ref
    assert schur_tail_trudi(d, 3) == ref
    for k in range(4):
        assert schur_split_trudi(d, 3, k) == ref


def test_schur_symmetry_by_evaluation():
    lam = young_diagram(CurveSignature(3, 4))
    poly = schur_jacobi_trudi(lam, 3)
    base = {1: Fraction(2), 2: Fraction(3, 2), 3: Fraction(-5, 3)}
    reference = poly.evaluate(base)
    for perm in permutations((1, 2, 3)):
        shuffled = {v: base[perm[v - 1]] for v in (1, 2, 3)}
        assert poly.evaluate(shuffled) == reference


def test_h_recursion_check():
    assert h_recursion_check(2, 1, 1, 3) == (True, True, True)
    assert h_recursion_check(0, 1, 1, 3) == (True, True, True)
    assert h_recursion_check(2, None, 1, 2)[2] is True
    assert h_recursion_check(5, 2, 1, 4) == (True, True, True)
    assert h_recursion_check(4, 3, 2, 6) == (True, True, True)
    with pytest.raises(ValueError):
        h_recursion_check(2, 3, 1, 3)  # m >= l2 - l1
    with pytest.raises(ValueError):
        h_recursion_check(2, 1, 2, 2)  # window too small


# -- power-sum coordinates ------------------------------------------------------


def test_schur_in_T_examples():
    sig = CurveSignature(2, 5)
    form = schur_in_T(young_diagram(sig), sig)
    assert form.as_u.canonical_str() == "1/3*u2^3 - u1"
    assert sorted(form.as_T.variables()) == [1, 3]

    sig23 = CurveSignature(2, 3)
    assert schur_in_T(young_diagram(sig23), sig23).as_u.canonical_str() == "u1"

    sig27 = CurveSignature(2, 7)
    form27 = schur_in_T(young_diagram(sig27), sig27)
    assert sorted(form27.as_T.variables()) == [1, 3, 5]


def test_schur_in_T_support_and_homogeneity():
    for r, s in [(2, 5), (2, 7), (2, 9), (2, 11), (3, 4), (3, 5), (3, 7), (4, 5)]:
        sig = CurveSignature(r, s)
        lam = young_diagram(sig)
        form = schur_in_T(lam, sig)
        hooks = set(u_weights(sig))
        assert form.as_T.variables() == hooks
        weight = lam.weight()
        for mono in form.as_T.terms:
            assert sum(v * e for v, e in mono) == weight
        # u-weighted homogeneity: deg(u_i) = hook_i
        weights = u_weights(sig)
        for mono in form.as_u.terms:
            assert sum(weights[v - 1] * e for v, e in mono) == weight


def test_schur_in_T_consistent_with_t_expansion():
    for r, s in [(2, 5), (2, 7), (3, 4)]:
        sig = CurveSignature(r, s)
        g = sig.genus
        form = schur_in_T(young_diagram(sig), sig)
        image = {m: power_sum_polynomial(m, 1, g) for m in form.as_T.variables()}
        assert form.as_T.substitute(image) == form.as_t


def test_schur_in_T_truncations():
    sig = CurveSignature(2, 5)
    head = schur_in_T(truncate_upper(young_diagram(sig), 1), sig)
    assert head.as_u.canonical_str() == "u2^2"
    assert head.as_t == Poly.variable("t", 1, 2)
    empty = schur_in_T(truncate_upper(young_diagram(sig), 0), sig)
    assert empty.as_u == Poly.one("u")
    # head truncations restrict to the k-variable Schur polynomial exactly
    for r, s in [(2, 7), (2, 9), (3, 4), (3, 5)]:
        sig = CurveSignature(r, s)
        hooks = u_weights(sig)
        for k in range(1, sig.genus):
            form = schur_in_T(truncate_upper(young_diagram(sig), k), sig)
            image = {
                m: power_sum_polynomial(m, 1, k) for m in form.as_T.variables()
            }
            assert form.as_T.substitute(image) == form.as_t


def test_schur_in_T_rejects_foreign_diagrams():
    sig = CurveSignature(2, 5)
    with pytest.raises(ValueError):
        schur_in_T(YoungDiagram((3, 1)), sig)


def test_expansion_gate():
    sig = CurveSignature(5, 7)
    with pytest.raises(ExpansionLimitError):
        schur_in_T(young_diagram(sig), sig, max_expand_genus=6)


def test_transition_matrix():
    sig = CurveSignature(3, 7)
    full = transition_matrix(sig, 6)
    exponents = []
    for row in full:
        mono = next(iter(row[0].terms)) if row[0].terms else ()
        exponents.append(mono[0][1] if mono else 0)
    assert exponents == [10, 7, 4, 3, 1, 0]
    assert all(len(row) == 6 for row in full)

    tiny = transition_matrix(CurveSignature(2, 3), 1)
    lam1 = young_diagram(CurveSignature(2, 3)).part(1)
    assert tiny == [[Poly.variable("t", 1, lam1 - 1)]]

    sig57 = CurveSignature(5, 7)
    block = transition_matrix(sig57, 4)
    assert len(block) == 8 and len(block[0]) == 8
    first = next(iter(block[0][0].terms))
    assert first == ((5, 22),)  # t_5^(hook_1 - 1) with hook_1 = 23


def test_value_routes_agree_with_polynomials():
    sig = CurveSignature(3, 4)
    g = sig.genus
    lam = young_diagram(sig)
    poly = schur_bialternant(lam, g)
    values = [Fraction(5), Fraction(7, 2), Fraction(-3)]
    point = {i + 1: values[i] for i in range(g)}
    expected = poly.evaluate(point)
    assert bialternant_value(lam, g, values) == expected
    assert jacobi_trudi_value(lam, g, values) == expected
    assert tail_trudi_value(lam, g, values) == expected
    for k in range(g + 1):
        assert split_trudi_value(lam, g, k, values) == expected
