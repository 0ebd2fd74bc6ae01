"""Acceptance suite: one test per release criterion, each printing a verdict.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Each test is self-contained and asserts both the mathematical
statement and, where one is stated, the runtime budget.
"""

import cmath
import math
import random
import time

from conftest import coprime_signatures
from cyclic_strata.certifier import (
    build_hierarchy,
    certify_g_power,
    certify_natural,
    sub_vanishing_sweep,
)
from cyclic_strata.numerics import SpecialDivisorError, CurveInstance, fs_det, lift_points, mu_coeffs
from cyclic_strata.schur import (
    bialternant_value,
    jacobi_trudi_value,
    schur_bialternant,
    schur_in_T,
    schur_jacobi_trudi,
    schur_split_trudi,
    schur_tail_trudi,
    split_trudi_value,
    tail_trudi_value,
)
from cyclic_strata.semigroup import (
    CurveSignature,
    monomial_basis,
    nongap_sequence,
    u_weights,
    young_diagram,
)
from cyclic_strata.strata import (
    hyperelliptic_natural,
    n_k,
    N_k_sum,
    N_k_tail,
    natural_k,
    stratum_profile,
)

from test_semigroup import (
    DIAGRAM_57, DIAGRAM_79, HOOKS_57, HOOKS_79,
    MONOMIALS_57, MONOMIALS_79, NONGAPS_57, NONGAPS_79,
)
from test_strata import N_57, N_79, NK_57, NK_79, NATURAL_GRID, TABLE_57, TABLE_79

GENUS_6_SIGNATURES = [
    (2, 3), (2, 5), (2, 7), (2, 9), (2, 11), (2, 13), (3, 4), (3, 5), (3, 7), (4, 5)
]
CERTIFIED_SIGNATURES = [(2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (3, 7)]


def _report(number: int, detail: str, elapsed: float, budget: float | None = None):
    budget_note = "" if budget is None else f", budget {budget:.0f}s"
    print(f"ACCEPTANCE {number}: PASS - {detail} ({elapsed:.2f}s{budget_note})")


def test_criterion_01_semigroup_golden_data():
    start = time.perf_counter()
    for sig, nongaps, monomials, diagram, hooks, n_table, N_table in [
        (CurveSignature(5, 7), NONGAPS_57, MONOMIALS_57, DIAGRAM_57, HOOKS_57, N_57, NK_57),
        (CurveSignature(7, 9), NONGAPS_79, MONOMIALS_79, DIAGRAM_79, HOOKS_79, N_79, NK_79),
    ]:
        count = len(nongaps)
        assert nongap_sequence(sig, count).values == nongaps
        assert [m.name() for m in monomial_basis(sig, count)] == monomials
        assert young_diagram(sig).parts == diagram
        assert u_weights(sig) == hooks
        g = sig.genus
        assert tuple(n_k(sig, k) for k in range(g)) == n_table
        assert tuple(N_k_tail(sig, k) for k in range(g)) == N_table
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(1, "pole orders, monomials, diagrams, hooks, n_k, N_k for (5,7) and (7,9)",
            elapsed, 1.0)


def test_criterion_02_stratum_tables():
    start = time.perf_counter()
    for sig, table in [(CurveSignature(5, 7), TABLE_57), (CurveSignature(7, 9), TABLE_79)]:
        for k, (a, b, hooks, natural) in table.items():
            profile = stratum_profile(sig, k)
            assert (profile.chars.a, profile.chars.b) == (a, b)
            assert profile.chars.hooks() == hooks
            assert sum(profile.chars.hooks()) == profile.N_k
            assert profile.natural == natural
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _report(2, "characteristics, hook sums and natural sets for every level", elapsed, 1.0)


def test_criterion_03_natural_grid():
    start = time.perf_counter()
    for (r, s), expected in NATURAL_GRID.items():
        sig = CurveSignature(r, s)
        assert [set(natural_k(sig, k)) for k in range(1, sig.genus)] == expected
    for g in range(2, 11):
        sig = CurveSignature(2, 2 * g + 1)
        for k in range(1, g):
            assert set(hyperelliptic_natural(g, k)) == set(natural_k(sig, k))
    elapsed = time.perf_counter() - start
    _report(3, "natural-set grids and the hyperelliptic closed form to genus 10", elapsed)


def test_criterion_04_N_k_identity():
    start = time.perf_counter()
    for r, s in coprime_signatures(13):
        sig = CurveSignature(r, s)
        for k in range(sig.genus + 1):
            assert N_k_sum(sig, k) == N_k_tail(sig, k)
    for g in range(2, 11):
        sig = CurveSignature(2, 2 * g + 1)
        for k in range(g + 1):
            assert N_k_tail(sig, k) == (g - k) * (g - k + 1) // 2
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report(4, "pole-order and tail-weight routes to N_k agree for all r < s <= 13",
            elapsed, 5.0)


def test_criterion_05_route_equality():
    start = time.perf_counter()
    for r, s in GENUS_6_SIGNATURES:
        sig = CurveSignature(r, s)
        g = sig.genus
        lam = young_diagram(sig)
        reference = schur_bialternant(lam, g)
        assert schur_jacobi_trudi(lam, g) == reference, (r, s)
        assert schur_tail_trudi(lam, g) == reference, (r, s)
        for k in range(g + 1):
            assert schur_split_trudi(lam, g, k) == reference, (r, s, k)
    # (5,7) at genus 12: exact evaluation at 5 deterministic integer points.
    # Every coordinate exceeds the total degree 48 of the polynomial, so the
    # five point-vectors cannot be shared zeros of a nonzero difference of
    # the tested forms (their coefficients are non-negative integers).
    sig = CurveSignature(5, 7)
    lam = young_diagram(sig)
    g = sig.genus
    assert lam.weight() == 48
    for j in range(5):
        point = [49 + 17 * j + i for i in range(g)]
        reference = bialternant_value(lam, g, point)
        assert jacobi_trudi_value(lam, g, point) == reference
        assert tail_trudi_value(lam, g, point) == reference
        for k in range(g + 1):
            assert split_trudi_value(lam, g, k, point) == reference
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report(5, "four Schur routes agree exactly (genus <= 6 expanded, (5,7) at 5 points)",
            elapsed, 60.0)


def test_criterion_06_power_sum_support():
    start = time.perf_counter()
    for r, s in GENUS_6_SIGNATURES:
        sig = CurveSignature(r, s)
        lam = young_diagram(sig)
        form = schur_in_T(lam, sig)
        assert form.as_T.variables() == set(u_weights(sig)), (r, s)
        weight = lam.weight()
        for mono in form.as_T.terms:
            assert sum(v * e for v, e in mono) == weight, (r, s)
    elapsed = time.perf_counter() - start
    _report(6, "power-sum support is exactly the hook set; weighted homogeneity holds",
            elapsed)


def test_criterion_07_vanishing_certification():
    start = time.perf_counter()
    for r, s in CERTIFIED_SIGNATURES:
        sig = CurveSignature(r, s)
        for k in range(1, sig.genus):
            bundle = certify_natural(sig, k, trials=3)
            assert bundle.mode == "expanded"
            main = bundle.main
            assert main.verdict == "nonzero"
            # restricted natural derivative is +/- the head Schur polynomial,
            # with the sign stable across the seeded trials (enforced inside)
            assert abs(main.constant) == 1
            for cert in bundle.certificates[:-1]:
                assert cert.verdict == "zero" and cert.mode == "expanded"
            sub_vanishing_sweep(sig, k, trials=3)
    elapsed = time.perf_counter() - start
    assert elapsed < 600.0
    _report(7, "natural-set certification and full sub-vanishing sweeps, expanded mode",
            elapsed, 600.0)


def test_criterion_08_g_power_certification():
    start = time.perf_counter()
    for r, s in CERTIFIED_SIGNATURES:
        sig = CurveSignature(r, s)
        for k in range(1, sig.genus):
            count = len(natural_k(sig, k))
            for ell in range(1, count + 2):
                cert = certify_g_power(sig, k, ell, trials=3)
                assert cert.verdict == "nonzero"
                assert cert.constant != 0
            # the ell = count + 1 call certified the pure case: N_k derivatives
            # along the last coordinate are nonzero, all lower powers zero.
            pure = certify_g_power(sig, k, count + 1, trials=3)
            assert len(pure.index_multiset) == N_k_tail(sig, k)
    elapsed = time.perf_counter() - start
    _report(8, "weight-trading derivative certificates incl. pure last-coordinate powers",
            elapsed)


def test_criterion_09_hierarchy():
    start = time.perf_counter()
    h = build_hierarchy(CurveSignature(5, 7), 4)
    assert h.matrices[0][0] == (4, 5, 6, 7, 8, 9, 10, 11)
    assert h.matrices[1] == ((2, 3, 4), (1, 2, 3), (None, 0, 1))
    assert h.matrices[2] == ((1,),)
    h = build_hierarchy(CurveSignature(7, 9), 13)
    assert h.matrices[1] == ((2, 3, 4, 5), (1, 2, 3, 4), (0, 1, 2, 3), (None, None, 0, 1))
    assert h.matrices[2] == ((1, 2), (0, 1))
    h = build_hierarchy(CurveSignature(3, 7), 2)
    assert h.matrices[0] == ((2, 3, 4, 5), (1, 2, 3, 4), (None, 0, 1, 2), (None, None, 0, 1))
    assert h.matrices[1] == ((1,),)
    checked = 0
    for r, s in coprime_signatures(9):
        if r > 7:
            continue
        sig = CurveSignature(r, s)
        for k in range(sig.genus):
            hierarchy = build_hierarchy(sig, k)
            assert hierarchy.h_zero_count() == sig.genus - k - n_k(sig, k)
            checked += 1
    elapsed = time.perf_counter() - start
    _report(9, f"three displayed hierarchies and the zero-count identity ({checked} levels)",
            elapsed)


def test_criterion_10_mu_numerics():
    start = time.perf_counter()
    rng = random.Random(20260515)
    signatures = [(2, 5), (3, 4), (3, 5), (5, 7)]
    curves_done = 0
    while curves_done < 20:
        r, s = signatures[curves_done % len(signatures)]
        sig = CurveSignature(r, s)
        curve = CurveInstance(
            sig, tuple(complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(s))
        )
        n = rng.randint(2, sig.genus)
        xs = [
            (1.0 + 0.08 * i) * cmath.exp(2j * cmath.pi * ((i * 0.618033988749895) % 1.0 + 0.05 * rng.random()))
            for i in range(n)
        ]
        points = lift_points(curve, xs, rng.randrange(r))
        try:
            result = mu_coeffs(curve, points)
        except SpecialDivisorError:
            continue
        for p in points:
            assert abs(result.value(p)) <= 1e-9 * max(result.value_scale(p), 1.0)
        base = fs_det(curve, points)
        swapped = [points[1], points[0]] + points[2:]
        assert abs(fs_det(curve, swapped) + base) <= 1e-9 * abs(base)
        order = list(range(n))
        rng.shuffle(order)
        permuted = mu_coeffs(curve, [points[i] for i in order])
        scale = max(max(abs(c) for c in result.coefficients), 1.0)
        for a, b in zip(result.coefficients, permuted.coefficients):
            assert abs(a - b) <= 1e-9 * scale
        curves_done += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _report(10, "interpolation residuals, antisymmetry, permutation invariance on "
               "20 random curves", elapsed, 30.0)
