"""Schur polynomials by several determinant routes, and power-sum coordinates.

Routes
------
For a diagram L inside g variables ``t_1..t_g`` the Schur polynomial is
computed four independent ways, all of which must agree exactly:

* ``schur_bialternant``  -- ratio of alternants: the monomial determinant
  ``|t_j^(L_i + g - i)|`` divided (exactly) by the Vandermonde determinant.
* ``schur_jacobi_trudi`` -- determinant of complete homogeneous functions
  ``|h_(L_i + j - i)|`` over the full window of variables.
* ``schur_tail_trudi``   -- same shape, but column j only uses the suffix
  window ``t_j..t_g``.
* ``schur_split_trudi``  -- columns 1..k use the full window, columns
  k+1..g use the suffix window ``t_(k+1)..t_g``; one route per split point.

The complete homogeneous functions themselves come in two coordinate
systems: :func:`h_complete` expands in the ``t`` variables while
:func:`h_from_T` expresses h_n through the scaled power sums
``T_m = (1/m) sum t_i^m`` via the classical n x n Newton determinant
(divided by n!).  Note the 1/m scaling: these are not the plain power sums.

Power-sum form of the curve Schur polynomial
--------------------------------------------
For the diagram of a curve signature, rewriting the Jacobi-Trudi determinant
through :func:`h_from_T` collapses onto the g variables ``T_(L_i + g - i)``
indexed by the first-column hook lengths -- every other power sum cancels
identically.  :func:`schur_in_T` performs the rewriting, asserts the
collapse, and renames the surviving variables to the stratum coordinates
``u_i = T_(L_i + g - i)``, e.g. for (2, 5): ``1/3*u2^3 - u1``.

For a head truncation (first k rows) the same object is produced by applying
the canonical derivative set of level k to the full form and normalizing by
the hook factorials; restricted to the level-k locus it reproduces the
k-variable Schur polynomial of the truncated diagram.

Large genus
-----------
Full symbolic expansion is gated at ``max_expand_genus`` (default 6).  Above
the gate, the ``*_value`` functions evaluate each route exactly at rational
points, which is how route agreement is checked for e.g. (5, 7) at genus 12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .polynomials import (
    InexactDivisionError,
    SparsePolynomial,
    det,
    exact_divide,
)
from .semigroup import CurveSignature, YoungDiagram, u_weights, young_diagram
from .strata import InternalConsistencyError, natural_k, truncate_upper


class ExpansionLimitError(ValueError):
    """Full symbolic expansion was requested above the configured genus gate."""


@dataclass(frozen=True)
class SymmetricWindow:
    """Inclusive variable range t_lo..t_hi used by windowed h functions."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"window must satisfy 1 <= lo <= hi, got ({self.lo}, {self.hi})")


@dataclass(frozen=True)
class SchurForm:
    """One Schur polynomial in three coordinate systems.

    ``as_t`` lives in the symmetric variables, ``as_T`` in the scaled power
    sums restricted to the hook-indexed set, and ``as_u`` is ``as_T`` with
    ``T_(hook_i)`` renamed ``u_i``.
    """

    diagram: YoungDiagram
    as_t: SparsePolynomial
    as_T: SparsePolynomial
    as_u: SparsePolynomial


# -- complete homogeneous symmetric functions --------------------------------


@lru_cache(maxsize=None)
def _h(n: int, lo: int, hi: int) -> SparsePolynomial:
    # h_n over the (possibly empty) window t_lo..t_hi.
    if n < 0:
        return SparsePolynomial.zero("t")
    if n == 0:
        return SparsePolynomial.one("t")
    if lo > hi:
        return SparsePolynomial.zero("t")
    if lo == hi:
        return SparsePolynomial.variable("t", lo, n)
    return _h(n, lo + 1, hi) + SparsePolynomial.variable("t", lo) * _h(n - 1, lo, hi)


def h_complete(n: int, window: SymmetricWindow, g: int) -> SparsePolynomial:
    """h_n over the window; h_0 = 1 and h_n = 0 for n < 0."""
    if g < window.hi:
        raise ValueError(f"window {window} exceeds the ambient variable count {g}")
    return _h(n, window.lo, window.hi)


@lru_cache(maxsize=None)
def h_from_T(n: int) -> SparsePolynomial:
    """h_n written in the scaled power sums T_1..T_n.

    The n x n Newton determinant with rows ``(m T_m, (m-1) T_(m-1), ...)``
    and superdiagonal ``-1, -2, ..., 1-n``, divided by n!.
    """
    if n < 0:
        return SparsePolynomial.zero("T")
    if n == 0:
        return SparsePolynomial.one("T")
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            if j <= i:
                m = i - j + 1
                row.append(SparsePolynomial.variable("T", m).scale(m))
            elif j == i + 1:
                row.append(SparsePolynomial.constant("T", -i - 1))
            else:
                row.append(SparsePolynomial.zero("T"))
        matrix.append(row)
    return det(matrix).scale(Fraction(1, math.factorial(n)))


def power_sum_polynomial(m: int, lo: int, hi: int) -> SparsePolynomial:
    """T_m over the window as a t-polynomial: (1/m) (t_lo^m + ... + t_hi^m)."""
    if m < 1:
        raise ValueError("power-sum index must be >= 1")
    total = SparsePolynomial.zero("t")
    for v in range(lo, hi + 1):
        total = total + SparsePolynomial.variable("t", v, m)
    return total.scale(Fraction(1, m))


# -- the four symbolic routes -------------------------------------------------


def _padded_parts(diagram: YoungDiagram, g: int) -> tuple[int, ...]:
    if len(diagram) > g:
        raise ValueError(f"diagram has {len(diagram)} rows but only {g} variables")
    return tuple(diagram.part(i) for i in range(1, g + 1))


def schur_bialternant(diagram: YoungDiagram, g: int) -> SparsePolynomial:
    """Alternant ratio; the exact division doubles as a self-check."""
    if g == 0:
        return SparsePolynomial.one("t")
    parts = _padded_parts(diagram, g)
    num = [
        [SparsePolynomial.variable("t", j, parts[i - 1] + g - i) for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    den = [
        [SparsePolynomial.variable("t", j, g - i) for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    try:
        return exact_divide(det(num), det(den))
    except InexactDivisionError as exc:  # pragma: no cover - mathematically impossible
        raise InternalConsistencyError("Vandermonde does not divide the alternant") from exc


@lru_cache(maxsize=4)
def _left_minors(parts: tuple[int, ...], g: int) -> dict:
    """Determinants over full-window columns 1..k for every sorted row subset.

    Key: tuple of 1-based row indices S with |S| = k; value: the determinant
    of rows S against columns 1..k with entries h_(parts_i + j - i) over the
    full window.  Shared by the Jacobi-Trudi route (k = g) and every split
    route (Laplace expansion along the first k columns).
    """
    zero = SparsePolynomial.zero("t")
    minors: dict[tuple[int, ...], SparsePolynomial] = {(): SparsePolynomial.one("t")}
    for k in range(1, g + 1):
        for subset in combinations(range(1, g + 1), k):
            value = zero
            for p, i in enumerate(subset):
                entry = _h(parts[i - 1] + k - i, 1, g)
                if entry.is_zero():
                    continue
                sub = minors[subset[:p] + subset[p + 1:]]
                if sub.is_zero():
                    continue
                piece = entry * sub
                value = value + piece if (p + k - 1) % 2 == 0 else value - piece
            minors[subset] = value
    return minors


def schur_jacobi_trudi(diagram: YoungDiagram, g: int) -> SparsePolynomial:
    """Determinant |h_(L_i + j - i)| over the full variable window."""
    if g == 0:
        return SparsePolynomial.one("t")
    parts = _padded_parts(diagram, g)
    return _left_minors(parts, g)[tuple(range(1, g + 1))]


def schur_tail_trudi(diagram: YoungDiagram, g: int) -> SparsePolynomial:
    """Determinant whose column j only involves the suffix window t_j..t_g."""
    if g == 0:
        return SparsePolynomial.one("t")
    parts = _padded_parts(diagram, g)
    matrix = [
        [_h(parts[i - 1] + j - i, j, g) for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    return det(matrix)


def schur_split_trudi(diagram: YoungDiagram, g: int, k: int) -> SparsePolynomial:
    """Split determinant: full window in columns <= k, suffix window beyond.

    Evaluated by Laplace expansion along the first k columns so that the
    expensive full-window minors are shared across all split points.
    """
    if not 0 <= k <= g:
        raise ValueError(f"split point must lie in [0, {g}], got {k}")
    if g == 0:
        return SparsePolynomial.one("t")
    parts = _padded_parts(diagram, g)
    if k in (0, g):
        # Both degenerate splits coincide with the plain Jacobi-Trudi matrix.
        return schur_jacobi_trudi(diagram, g)
    minors = _left_minors(parts, g)
    total = SparsePolynomial.zero("t")
    for subset in combinations(range(1, g + 1), k):
        left = minors[subset]
        if left.is_zero():
            continue
        complement = tuple(i for i in range(1, g + 1) if i not in subset)
        right_matrix = [
            [_h(parts[i - 1] + j - i, k + 1, g) for j in range(k + 1, g + 1)]
            for i in complement
        ]
        right = det(right_matrix)
        if right.is_zero():
            continue
        sign = -1 if (sum(subset) + k * (k + 1) // 2) % 2 else 1
        piece = left * right
        total = total + piece if sign == 1 else total - piece
    return total


def h_recursion_check(n: int, m: int | None, l1: int, l2: int) -> tuple[bool, bool, bool]:
    """Verify the three window-splitting identities for h_n as exact equalities.

    1. peeling one variable off either end of the window;
    2. peeling an m-variable prefix (requires 0 < m < l2 - l1; pass None to
       skip, e.g. on a two-variable window where no such m exists);
    3. the full split, i.e. identity 2 pushed to m = l2 - l1.
    """
    if l2 <= l1:
        raise ValueError("window must contain at least two variables")
    if m is not None and not 0 < m < l2 - l1:
        raise ValueError(f"require 0 < m < {l2 - l1}, got m={m}")

    lhs = _h(n, l1, l2)
    t_l1 = SparsePolynomial.variable("t", l1)
    t_l2 = SparsePolynomial.variable("t", l2)
    part1 = lhs == _h(n, l1 + 1, l2) + _h(n - 1, l1, l2) * t_l1 and lhs == _h(
        n, l1, l2 - 1
    ) + _h(n - 1, l1, l2) * t_l2

    def prefix_split(depth: int) -> SparsePolynomial:
        total = SparsePolynomial.zero("t")
        for i in range(depth + 1):
            total = total + _h(n - i, l1 + depth - i, l2) * _h(i, l1, l1 + depth - i)
        return total

    part2 = True if m is None else lhs == prefix_split(m)
    part3 = lhs == prefix_split(l2 - l1)
    return (part1, part2, part3)


# -- power-sum form of the curve Schur polynomial -----------------------------


def designated_hooks(sig: CurveSignature) -> tuple[int, ...]:
    """First-column hook lengths; the only power sums the curve form uses."""
    return u_weights(sig)


@lru_cache(maxsize=None)
def _schur_in_T_cached(parts: tuple[int, ...], sig: CurveSignature, gate: int) -> SchurForm:
    g = sig.genus
    lam = young_diagram(sig)
    diagram = YoungDiagram(parts)
    hooks = designated_hooks(sig)

    if parts == lam.parts:
        if g > gate:
            raise ExpansionLimitError(
                f"genus {g} exceeds the expansion gate {gate}; raise max_expand_genus"
            )
        if g == 0:
            one_T = SparsePolynomial.one("T")
            return SchurForm(diagram, SparsePolynomial.one("t"), one_T, SparsePolynomial.one("u"))
        matrix = [
            [h_from_T(lam.part(i) + j - i) for j in range(1, g + 1)]
            for i in range(1, g + 1)
        ]
        as_T = det(matrix)
        stray = as_T.variables() - set(hooks)
        if stray:
            raise InternalConsistencyError(
                f"power-sum form of ({sig.r},{sig.s}) uses undesignated variables {sorted(stray)}"
            )
        weight = lam.weight()
        for mono in as_T.terms:
            if sum(v * e for v, e in mono) != weight:
                raise InternalConsistencyError(
                    f"power-sum form of ({sig.r},{sig.s}) is not weighted-homogeneous"
                )
        renaming = {hooks[i - 1]: i for i in range(1, g + 1)}
        as_u = as_T.rename_variables(renaming, "u")
        return SchurForm(diagram, schur_jacobi_trudi(diagram, g), as_T, as_u)

    k = len(parts)
    if k > g or parts != truncate_upper(lam, k).parts:
        raise ValueError(
            "diagram must be the curve diagram or one of its head truncations"
        )
    if k == 0:
        return SchurForm(
            diagram,
            SparsePolynomial.one("t"),
            SparsePolynomial.one("T"),
            SparsePolynomial.one("u"),
        )

    full = _schur_in_T_cached(lam.parts, sig, gate)
    derivative = full.as_T
    for i in natural_k(sig, k):
        derivative = derivative.partial_derivative(hooks[i - 1])
    as_t = schur_jacobi_trudi(diagram, k)

    # The natural-set derivative restricts to the head Schur polynomial up to
    # a global sign; measure it on one positive point of the level-k locus,
    # where the k-variable Schur value is strictly positive.
    point = {j: Fraction(j + 1) for j in range(1, k + 1)}
    t_assign = {m: sum(point[j] ** m for j in point) / m for m in derivative.variables()}
    measured = derivative.evaluate(t_assign) if not derivative.is_zero() else Fraction(0)
    reference = as_t.evaluate(point)
    if not reference or measured * measured != reference * reference:
        raise InternalConsistencyError(
            f"derivative route for head truncation k={k} of ({sig.r},{sig.s}) "
            f"is not a unit multiple: {measured} vs +/-{reference}"
        )
    sign = 1 if measured == reference else -1
    as_T = derivative.scale(sign)
    renaming = {hooks[i - 1]: i for i in range(1, g + 1) if hooks[i - 1] in as_T.variables()}
    as_u = as_T.rename_variables(renaming, "u")
    return SchurForm(diagram, as_t, as_T, as_u)


def schur_in_T(
    diagram: YoungDiagram, sig: CurveSignature, max_expand_genus: int = 6
) -> SchurForm:
    """Power-sum (and stratum-coordinate) form of a curve diagram's Schur.

    The diagram must be the signature's diagram or a head truncation of it.
    """
    return _schur_in_T_cached(diagram.parts, sig, max_expand_genus)


def transition_matrix(sig: CurveSignature, k: int) -> list[list[SparsePolynomial]]:
    """Jacobian monomial matrix t_j^(L_i + g - i - 1) of the u coordinates.

    k = g gives the full g x g matrix over columns t_1..t_g; k < g gives the
    (g-k) x (g-k) block over the trailing columns t_(k+1)..t_g with rows
    i = 1..g-k.
    """
    g = sig.genus
    if not 0 <= k <= g:
        raise ValueError(f"k must lie in [0, {g}], got {k}")
    hooks = u_weights(sig)
    if k == g:
        rows, cols = range(1, g + 1), range(1, g + 1)
    else:
        rows, cols = range(1, g - k + 1), range(k + 1, g + 1)
    return [
        [SparsePolynomial.variable("t", j, hooks[i - 1] - 1) for j in cols]
        for i in rows
    ]


# -- exact pointwise evaluation of every route --------------------------------


def _h_value(n: int, lo: int, hi: int, values) -> Fraction:
    if n < 0:
        return Fraction(0)
    table = [Fraction(1)] + [Fraction(0)] * n
    for v in range(lo, hi + 1):
        x = Fraction(values[v - 1])
        for d in range(1, n + 1):
            table[d] += x * table[d - 1]
    return table[n]


def det_exact_numbers(matrix) -> Fraction:
    """Fraction-free style elimination over exact rationals."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot_row is None:
                return Fraction(0)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def bialternant_value(diagram: YoungDiagram, g: int, values) -> Fraction:
    parts = _padded_parts(diagram, g)
    vals = [Fraction(v) for v in values]
    num = [[vals[j] ** (parts[i] + g - i - 1) for j in range(g)] for i in range(g)]
    den = [[vals[j] ** (g - i - 1) for j in range(g)] for i in range(g)]
    d = det_exact_numbers(den)
    if not d:
        raise ZeroDivisionError("evaluation points must be pairwise distinct")
    return det_exact_numbers(num) / d


def jacobi_trudi_value(diagram: YoungDiagram, g: int, values) -> Fraction:
    parts = _padded_parts(diagram, g)
    matrix = [
        [_h_value(parts[i - 1] + j - i, 1, g, values) for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    return det_exact_numbers(matrix)


def tail_trudi_value(diagram: YoungDiagram, g: int, values) -> Fraction:
    parts = _padded_parts(diagram, g)
    matrix = [
        [_h_value(parts[i - 1] + j - i, j, g, values) for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    return det_exact_numbers(matrix)


def split_trudi_value(diagram: YoungDiagram, g: int, k: int, values) -> Fraction:
    if not 0 <= k <= g:
        raise ValueError(f"split point must lie in [0, {g}], got {k}")
    parts = _padded_parts(diagram, g)
    matrix = [
        [
            _h_value(parts[i - 1] + j - i, 1 if j <= k else k + 1, g, values)
            for j in range(1, g + 1)
        ]
        for i in range(1, g + 1)
    ]
    return det_exact_numbers(matrix)
