"""Derivative-vanishing certificates on the strata of the curve diagram.

The object under test is the power-sum form S of the full curve Schur
polynomial (``schur_in_T``), whose variables ``u_1..u_g`` carry weights equal
to the first-column hook lengths.  Level k of the stratification restricts S
to ``u_i = (1/hook_i) (t_1^hook_i + ... + t_k^hook_i)`` for k free parameters
``t_1..t_k``.  The certified statements, for 1 <= k < g:

* every derivative of order below n_k vanishes identically on the level-k
  locus, as does every proper subset of the canonical index set natural_k;
* the full natural_k derivative restricts to exactly +/- the k-variable
  Schur polynomial of the head diagram (the sign depends on the diagram and
  on k and is measured, not predicted; the coefficient of the product of
  hook-indexed power sums in any Schur polynomial is a unit, since the
  principal-hook character value is +/-1 and the cycle-type normalizer
  cancels the power-sum scaling), and the variant sets natural_k^(i) are
  likewise non-vanishing;
* trading the members of natural_k for powers of the last derivative
  (weight-preserving, one hook each) keeps the value a fixed nonzero
  rational multiple of the head Schur polynomial, down to the pure case of
  ``N_k`` derivatives along u_g, below which all pure powers vanish.

Two independent evaluation pipelines are used.  In *expanded* mode
(genus <= ``max_expand_genus``) the restricted derivative is produced as an
actual polynomial in t_1..t_k and compared with the zero polynomial or with
the head Schur polynomial -- no sampling gap.  In *sampled* mode (larger
genus, or as a cross-check) values at seeded rational points are computed
through truncated Taylor (jet) arithmetic threaded through the Newton
recurrence and a division-free determinant, which never expands S at all.
Certificates record which mode produced them.

Failures raise :class:`CertificationError` carrying the witness; a clean run
returns certificate bundles suitable for JSON output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .polynomials import SparsePolynomial
from .schur import jacobi_trudi_value, power_sum_polynomial, schur_in_T, schur_jacobi_trudi
from .semigroup import CurveSignature, u_weights, young_diagram
from .strata import (
    InternalConsistencyError,
    characteristics,
    natural_k,
    truncate_lower,
    truncate_upper,
)

_JET_DET_MAX = 16  # division-free subset expansion; 2^g minors


class CertificationError(Exception):
    """A certified statement failed; carries the witnessing data."""

    def __init__(self, message: str, *, signature=None, k=None, index_multiset=None, point=None):
        super().__init__(message)
        self.signature = signature
        self.k = k
        self.index_multiset = index_multiset
        self.point = point


@dataclass(frozen=True)
class StratumRestriction:
    """k seeded parameters and the g stratum coordinate values they induce."""

    k: int
    t_points: tuple[Fraction, ...]
    u_values: tuple[Fraction, ...]

    @classmethod
    def from_signature(cls, sig: CurveSignature, k: int, t_points) -> "StratumRestriction":
        points = tuple(Fraction(t) for t in t_points)
        if len(points) != k:
            raise ValueError(f"need exactly {k} parameter values, got {len(points)}")
        if len(set(points)) != len(points) or any(t == 0 for t in points):
            raise ValueError("parameter values must be pairwise distinct and nonzero")
        hooks = u_weights(sig)
        u_values = tuple(
            Fraction(sum(t**h for t in points), h) if points else Fraction(0) for h in hooks
        )
        return cls(k, points, u_values)


@dataclass(frozen=True)
class DerivativeCertificate:
    """Verdict for one derivative index multiset at one stratum level."""

    k: int
    index_multiset: tuple[int, ...]
    verdict: str  # "zero" | "nonzero"
    constant: Fraction | None
    mode: str  # "expanded" | "sampled"
    trials: int
    evaluation_points: tuple[tuple[Fraction, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "index_multiset": list(self.index_multiset),
            "verdict": self.verdict,
            "constant_num": None if self.constant is None else self.constant.numerator,
            "constant_den": None if self.constant is None else self.constant.denominator,
            "mode": self.mode,
            "trials": self.trials,
        }


@dataclass(frozen=True)
class CertificateBundle:
    signature: CurveSignature
    k: int
    index_set: tuple[int, ...]
    mode: str
    trials: int
    certificates: tuple[DerivativeCertificate, ...]

    @property
    def main(self) -> DerivativeCertificate:
        return self.certificates[-1]

    def to_json_dict(self) -> dict:
        return {
            "r": self.signature.r,
            "s": self.signature.s,
            "k": self.k,
            "index_set": list(self.index_set),
            "mode": self.mode,
            "trials": self.trials,
            "certificates": [c.to_json_dict() for c in self.certificates],
        }


@dataclass(frozen=True)
class SweepReport:
    signature: CurveSignature
    k: int
    order_bound: int
    checked: int
    mode: str
    trials: int

    def to_json_dict(self) -> dict:
        return {
            "r": self.signature.r,
            "s": self.signature.s,
            "k": self.k,
            "order_bound": self.order_bound,
            "checked": self.checked,
            "mode": self.mode,
            "trials": self.trials,
        }


@dataclass(frozen=True)
class HookHierarchy:
    """Nested subscript matrices of the tail determinant, one per rank step.

    ``matrices[m-1]`` holds the integer subscripts of the m-th nested block
    (None marks entries that are identically absent); ``pairs`` is the
    (i_l, d_l) bookkeeping sequence locating the blocks inside the tail.
    """

    k: int
    pairs: tuple[tuple[int, int], ...]
    matrices: tuple[tuple[tuple[int | None, ...], ...], ...]

    def h_zero_count(self) -> int:
        return sum(row.count(0) for row in self.matrices[0]) if self.matrices else 0


def trial_points(k: int, trial: int, seed: int = 0) -> tuple[Fraction, ...]:
    """Deterministic distinct nonzero rationals t_j = j / (j + q)."""
    if trial < 0 or seed < 0:
        raise ValueError("trial and seed must be non-negative")
    q = seed + trial + 1
    return tuple(Fraction(j, j + q) for j in range(1, k + 1))


# -- jet evaluation (sampled mode) -------------------------------------------


class _Jet:
    """Polynomial in a few nilpotent slots, truncated to fixed orders."""

    __slots__ = ("orders", "terms")

    def __init__(self, orders: tuple[int, ...], terms=None):
        self.orders = orders
        self.terms = terms if terms is not None else {}

    @classmethod
    def const(cls, orders, value) -> "_Jet":
        value = Fraction(value)
        return cls(orders, {(0,) * len(orders): value} if value else {})

    @classmethod
    def slot(cls, orders, index, value) -> "_Jet":
        jet = cls.const(orders, value)
        if orders[index] >= 1:
            e = [0] * len(orders)
            e[index] = 1
            jet.terms[tuple(e)] = Fraction(1)
        return jet

    def add(self, other: "_Jet") -> "_Jet":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return _Jet(self.orders, out)

    def mul(self, other: "_Jet") -> "_Jet":
        orders = self.orders
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x > m for x, m in zip(e, orders)):
                    continue
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return _Jet(orders, out)

    def scale(self, c) -> "_Jet":
        if not c:
            return _Jet(self.orders, {})
        return _Jet(self.orders, {e: c * v for e, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms


def _jet_det(matrix: list[list[_Jet]], orders: tuple[int, ...]) -> _Jet:
    """Division-free determinant via memoized column-subset minors."""
    n = len(matrix)
    zero = _Jet(orders, {})
    memo: dict[tuple[int, ...], _Jet] = {}

    def minor(cols: tuple[int, ...]) -> _Jet:
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        if len(cols) == 1:
            value = matrix[row][cols[0]]
        else:
            value = zero
            for pos, j in enumerate(cols):
                entry = matrix[row][j]
                if entry.is_zero():
                    continue
                sub = minor(cols[:pos] + cols[pos + 1:])
                if sub.is_zero():
                    continue
                piece = entry.mul(sub)
                value = value.add(piece if pos % 2 == 0 else piece.scale(-1))
        memo[cols] = value
        return value

    return minor(tuple(range(n)))


def derivative_on_stratum(
    sig: CurveSignature,
    k: int,
    index_multiset,
    restriction: StratumRestriction,
) -> Fraction:
    """Exact value of (prod d/du_i) S at the restriction's stratum point.

    Never expands S: the Jacobi-Trudi determinant is evaluated with each
    designated power sum perturbed by a nilpotent slot, the complete
    homogeneous entries are generated by the Newton recurrence in jet
    arithmetic, and the requested Taylor coefficient is read off.
    """
    g = sig.genus
    if restriction.k != k:
        raise ValueError("restriction was built for a different level")
    index = tuple(sorted(index_multiset))
    if any(not 1 <= i <= g for i in index):
        raise ValueError(f"derivative indices must lie in [1, {g}]")
    if g > _JET_DET_MAX:
        raise NotImplementedError(f"sampled evaluation is limited to genus <= {_JET_DET_MAX}")
    lam = young_diagram(sig)
    hooks = u_weights(sig)
    distinct = sorted(set(index))
    orders = tuple(index.count(d) for d in distinct)
    slot_of_hook = {hooks[d - 1]: pos for pos, d in enumerate(distinct)}
    max_n = lam.part(1) + g - 1

    t_values = {
        m: Fraction(sum(t**m for t in restriction.t_points), m) if restriction.t_points
        else Fraction(0)
        for m in range(1, max_n + 1)
    }
    jets = {}
    for m in range(1, max_n + 1):
        pos = slot_of_hook.get(m)
        if pos is None:
            jets[m] = _Jet.const(orders, t_values[m])
        else:
            jets[m] = _Jet.slot(orders, pos, t_values[m])

    h = [_Jet.const(orders, 1)]
    for n in range(1, max_n + 1):
        acc = _Jet(orders, {})
        for m in range(1, n + 1):
            acc = acc.add(jets[m].mul(h[n - m]).scale(m))
        h.append(acc.scale(Fraction(1, n)))

    zero = _Jet(orders, {})
    matrix = [
        [h[lam.part(i) + j - i] if lam.part(i) + j - i >= 0 else zero for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    target = orders
    coeff = _jet_det(matrix, orders).terms.get(target, Fraction(0))
    factor = math.prod(math.factorial(o) for o in orders)
    return Fraction(coeff) * factor


# -- expanded-mode helpers ----------------------------------------------------


def restricted_derivative_poly(
    sig: CurveSignature, k: int, index_multiset, max_expand_genus: int = 6
) -> SparsePolynomial:
    """(prod d/du_i) S restricted to level k, as a polynomial in t_1..t_k."""
    form = schur_in_T(young_diagram(sig), sig, max_expand_genus)
    hooks = u_weights(sig)
    derivative = form.as_u
    for i in index_multiset:
        derivative = derivative.partial_derivative(i)
    if derivative.is_zero():
        return SparsePolynomial.zero("t")
    assignment = {i: power_sum_polynomial(hooks[i - 1], 1, k) for i in derivative.variables()}
    return derivative.substitute(assignment)


def _head_schur(sig: CurveSignature, k: int) -> SparsePolynomial:
    return schur_jacobi_trudi(truncate_upper(young_diagram(sig), k), k)


def _head_value(sig: CurveSignature, k: int, point) -> Fraction:
    return jacobi_trudi_value(truncate_upper(young_diagram(sig), k), k, point)


def _zero_certificate(sig, k, index, mode, points, trials) -> DerivativeCertificate:
    for point in points:
        restriction = StratumRestriction.from_signature(sig, k, point)
        value = derivative_on_stratum(sig, k, index, restriction)
        if value:
            raise CertificationError(
                f"derivative {index} does not vanish on level {k} of "
                f"({sig.r},{sig.s}): value {value} at {point}",
                signature=sig, k=k, index_multiset=index, point=point,
            )
    if mode == "expanded":
        poly = restricted_derivative_poly(sig, k, index)
        if not poly.is_zero():
            raise CertificationError(
                f"derivative {index} is not identically zero on level {k} of "
                f"({sig.r},{sig.s}): {poly.canonical_str()}",
                signature=sig, k=k, index_multiset=index,
            )
    return DerivativeCertificate(k, index, "zero", None, mode, trials, points)


def _constant_multiple_certificate(
    sig, k, index, mode, points, trials, expected_abs=None
) -> DerivativeCertificate:
    """Certify that the index derivative is a fixed nonzero multiple of the
    head Schur polynomial; return the measured constant."""
    ratios = []
    for point in points:
        restriction = StratumRestriction.from_signature(sig, k, point)
        value = derivative_on_stratum(sig, k, index, restriction)
        reference = _head_value(sig, k, point)
        if not reference:  # pragma: no cover - positive points keep it positive
            raise CertificationError(
                f"head Schur value vanished at trial point {point}",
                signature=sig, k=k, index_multiset=index, point=point,
            )
        ratios.append(value / reference)
    constant = ratios[0]
    if not constant or any(r != constant for r in ratios):
        raise CertificationError(
            f"derivative {index} on level {k} of ({sig.r},{sig.s}) is not a "
            f"fixed nonzero multiple of the head Schur polynomial: ratios {ratios}",
            signature=sig, k=k, index_multiset=index, point=points[0],
        )
    if expected_abs is not None and abs(constant) != expected_abs:
        raise CertificationError(
            f"derivative {index} on level {k} of ({sig.r},{sig.s}) has constant "
            f"{constant}, expected magnitude {expected_abs}",
            signature=sig, k=k, index_multiset=index, point=points[0],
        )
    if mode == "expanded":
        poly = restricted_derivative_poly(sig, k, index)
        if poly != _head_schur(sig, k).scale(constant):
            raise CertificationError(
                f"derivative {index} on level {k} of ({sig.r},{sig.s}) is not "
                f"identically {constant} times the head Schur polynomial",
                signature=sig, k=k, index_multiset=index,
            )
    return DerivativeCertificate(k, index, "nonzero", constant, mode, trials, points)


# -- public certification operations ------------------------------------------


def certify_natural(
    sig: CurveSignature,
    k: int,
    trials: int = 3,
    *,
    seed: int = 0,
    index_set=None,
    max_expand_genus: int = 6,
) -> CertificateBundle:
    """Certify the canonical index set (or a supplied variant) at level k.

    For the canonical set: every proper subset yields zero (identically, in
    expanded mode), and the full set yields sign * (head Schur polynomial)
    with |sign| = 1 stable across trials.  For a variant set only
    non-vanishing is certified (its ratio to the head polynomial is a
    non-constant function of the point).
    """
    g = sig.genus
    if not 1 <= k < g:
        raise ValueError(f"k must lie in [1, {g}), got {k}")
    if trials < 1:
        raise ValueError("need at least one trial")
    nat = natural_k(sig, k)
    index = nat if index_set is None else tuple(sorted(index_set, reverse=True))
    canonical = index == nat
    mode = "expanded" if g <= max_expand_genus else "sampled"
    points = tuple(trial_points(k, t, seed) for t in range(trials))
    certificates = []

    if canonical:
        for size in range(len(index)):
            for subset in combinations(index, size):
                certificates.append(
                    _zero_certificate(sig, k, tuple(sorted(subset)), mode, points, trials)
                )
        certificates.append(
            _constant_multiple_certificate(
                sig, k, tuple(sorted(index)), mode, points, trials, expected_abs=1
            )
        )
    else:
        sorted_index = tuple(sorted(index))
        if mode == "expanded":
            poly = restricted_derivative_poly(sig, k, sorted_index)
            if poly.is_zero():
                raise CertificationError(
                    f"variant derivative {sorted_index} vanishes identically on "
                    f"level {k} of ({sig.r},{sig.s})",
                    signature=sig, k=k, index_multiset=sorted_index,
                )
        values = []
        for point in points:
            restriction = StratumRestriction.from_signature(sig, k, point)
            values.append(derivative_on_stratum(sig, k, sorted_index, restriction))
        if mode == "sampled" and not any(values):
            raise CertificationError(
                f"variant derivative {sorted_index} vanished at every trial on "
                f"level {k} of ({sig.r},{sig.s})",
                signature=sig, k=k, index_multiset=sorted_index, point=points[0],
            )
        certificates.append(
            DerivativeCertificate(k, sorted_index, "nonzero", None, mode, trials, points)
        )
    return CertificateBundle(sig, k, index, mode, trials, tuple(certificates))


def certify_g_power(
    sig: CurveSignature,
    k: int,
    ell: int,
    trials: int = 3,
    *,
    seed: int = 0,
    max_expand_genus: int = 6,
) -> DerivativeCertificate:
    """Certify the weight-preserving trade of leading natural members for
    powers of d/du_g.

    The tail J_ell of the canonical set keeps its ell-th..n_k-th members
    (ordered by increasing hook); the dropped hooks are compensated by the
    same total number of u_g derivatives.  ell = n_k + 1 is the pure case:
    N_k derivatives along u_g, with every lower pure power certified zero.
    """
    g = sig.genus
    if not 1 <= k < g:
        raise ValueError(f"k must lie in [1, {g}), got {k}")
    nat = natural_k(sig, k)
    n = len(nat)
    if not 1 <= ell <= n + 1:
        raise ValueError(f"ell must lie in [1, {n + 1}], got {ell}")
    hooks = u_weights(sig)
    # nat is listed by decreasing index = increasing hook; drop the first
    # ell-1 members (the smallest hooks) and compensate along u_g.
    kept = nat[ell - 1:]
    dropped_weight = sum(hooks[i - 1] for i in nat[: ell - 1])
    index = tuple(sorted(kept + (g,) * dropped_weight))
    mode = "expanded" if g <= max_expand_genus else "sampled"
    points = tuple(trial_points(k, t, seed) for t in range(trials))

    if ell == n + 1:
        # Pure case: all lower pure powers along u_g must vanish first.
        total = sum(hooks[i - 1] for i in nat)
        for lower in range(total):
            _zero_certificate(sig, k, (g,) * lower, mode, points, trials)
    return _constant_multiple_certificate(sig, k, index, mode, points, trials)


def sub_vanishing_sweep(
    sig: CurveSignature,
    k: int,
    trials: int = 3,
    *,
    seed: int = 0,
    max_expand_genus: int = 6,
) -> SweepReport:
    """Check every derivative multiset of order below n_k vanishes at level k."""
    g = sig.genus
    if not 1 <= k < g:
        raise ValueError(f"k must lie in [1, {g}), got {k}")
    bound = len(natural_k(sig, k))
    mode = "expanded" if g <= max_expand_genus else "sampled"
    points = tuple(trial_points(k, t, seed) for t in range(trials))
    checked = 0
    for size in range(bound):
        for index in combinations_with_replacement(range(1, g + 1), size):
            _zero_certificate(sig, k, index, mode, points, trials)
            checked += 1
    return SweepReport(sig, k, bound, checked, mode, trials)


# -- hierarchy of nested tail blocks ------------------------------------------


def build_hierarchy(sig: CurveSignature, k: int) -> HookHierarchy:
    """Nested subscript blocks of the tail determinant at level k.

    Block m runs over rows m..c_m and columns 1..c_m - m + 1 of the tail's
    Jacobi-Trudi layout, where c_m is the m-th column length of the tail;
    equivalently it is the layout of the tail with its first m-1 hooks
    stripped.  The corner subscripts recover the characteristic hooks and
    the count of zero subscripts in the outer block is g - k - n_k.
    """
    g = sig.genus
    if not 0 <= k < g:
        raise ValueError(f"k must lie in [0, {g}), got {k}")
    tail = truncate_lower(young_diagram(sig), k)
    conj = tail.conjugate().parts
    rank = characteristics(tail).rank
    matrices = []
    for m in range(1, rank + 1):
        c = conj[m - 1]
        width = c - m + 1
        block = tuple(
            tuple(
                (tail.part(i) + j - i) if tail.part(i) + j - i >= 0 else None
                for j in range(1, width + 1)
            )
            for i in range(m, c + 1)
        )
        matrices.append(block)
    pairs = []
    m = 1
    while m <= rank:
        run = 1
        while m + run <= rank and conj[m + run - 1] == conj[m - 1]:
            run += 1
        pairs.append((k + conj[m - 1] - m + 1, run))
        m += run
    hierarchy = HookHierarchy(k, tuple(pairs), tuple(matrices))
    expected_zeros = g - k - rank
    if hierarchy.h_zero_count() != expected_zeros:
        raise InternalConsistencyError(
            f"outer block of ({sig.r},{sig.s}) level {k} has "
            f"{hierarchy.h_zero_count()} zero subscripts, expected {expected_zeros}"
        )
    return hierarchy
