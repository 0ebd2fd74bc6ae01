"""Exact sparse multivariate polynomial arithmetic over rationals.

This is the substrate for every symbolic computation in the package.  A
polynomial lives over a declared *variable family* -- ``"t"`` for curve-side
symmetric variables, ``"T"`` for scaled power sums, ``"u"`` for stratum
coordinates.  Mixing families in one arithmetic operation is a hard error:
the whole point of tagging is that a ``t``-space expression and a ``T``-space
expression are different mathematical objects even when they happen to look
alike.

Representation
--------------
A monomial is a :class:`MultiIndex`: a sorted tuple of ``(variable, exponent)``
pairs with no zero exponents (variables are positive integers, ``t3`` is
variable 3 of family ``t``).  A polynomial is a mapping from monomials to
nonzero coefficients.  Coefficients are exact: Python ``int`` or
``fractions.Fraction``; there is deliberately no floating-point fallback
because downstream vanishing certificates rely on exact zeros.

``Fraction`` fills the role of an exact rational scalar type (normalized
sign, reduced terms), so no bespoke rational class is defined here.

Term order is graded lexicographic (total degree first, then exponent of the
lowest-numbered variable, and so on).  It fixes the canonical text form used
in golden files, e.g. ``1/3*u2^3 - u1``, and the leading term used by exact
division.

Determinants
------------
:func:`det` computes exact determinants of square polynomial matrices.  Small
matrices (n <= 6) go through cofactor expansion with memoized minors keyed by
column subsets, expanding rows bottom-up -- this is essentially free when the
lower rows are sparse, which is the shape of every Jacobi-Trudi style matrix
in this package.  Larger matrices use fraction-free Bareiss elimination; the
interior divisions are exact by construction and any nonzero remainder is
reported as a bug, never silently dropped.

Performance notes
-----------------
Products of large integer-coefficient polynomials in at most 6 variables are
routed through a vectorized path: exponent vectors are packed into int64
keys, the outer product is formed with numpy, and terms are merged with a
sort/reduce.  The dict-based path is used everywhere else.  Both paths are
exact; the vectorized one refuses to run when an int64 overflow is possible.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

import numpy as np

Coeff = Union[int, Fraction]

#: Exact rational scalar type used for coefficients and evaluation results.
Rational = Fraction


class FamilyMismatchError(ValueError):
    """Raised when two polynomials from different variable families meet."""


class MissingAssignmentError(KeyError):
    """Raised by evaluate/substitute when a variable has no assigned value."""


class InexactDivisionError(ArithmeticError):
    """Raised when an allegedly exact polynomial division leaves a remainder."""


class MultiIndex(tuple):
    """Sparse exponent vector: sorted ``(variable, exponent)`` pairs.

    Subclasses ``tuple`` so instances hash and compare exactly like the plain
    tuples used on internal fast paths.
    """

    __slots__ = ()

    def __new__(cls, pairs: Iterable[tuple[int, int]] = ()):
        exps: dict[int, int] = {}
        for var, exp in pairs:
            if var < 1:
                raise ValueError(f"variable index must be >= 1, got {var}")
            if exp < 0:
                raise ValueError(f"exponent must be >= 0, got {exp}")
            if exp:
                exps[int(var)] = exps.get(int(var), 0) + int(exp)
        return super().__new__(cls, sorted(exps.items()))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    def weighted_degree(self, weight: Callable[[int], int]) -> int:
        return sum(weight(v) * e for v, e in self)

    def as_dict(self) -> dict[int, int]:
        return dict(self)


_EMPTY = MultiIndex()


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m) -> int:
    return sum(e for _, e in m)


def _grlex_key(m):
    # Descending sort on this key lists terms in graded-lex order: highest
    # total degree first, ties broken by the exponent of t1, then t2, ...
    if not m:
        return (0, ())
    top = m[-1][0]
    dense = [0] * top
    for v, e in m:
        dense[v - 1] = e
    return (_mono_degree(m), tuple(dense))


def _mono_str(m, family: str) -> str:
    if not m:
        return "1"
    parts = []
    for v, e in m:
        parts.append(f"{family}{v}" if e == 1 else f"{family}{v}^{e}")
    return "*".join(parts)


# Vectorized multiplication: exponents packed into an int64, 10 bits per
# variable, variables 1..6.  Packing is only attempted when it cannot
# overflow and all coefficients are machine ints.
_PACK_BITS = 10
_PACK_MAXVAR = 6
_PACK_MAXEXP = (1 << _PACK_BITS) - 1
_VECTOR_CUTOFF = 25_000


def _pack(m) -> int:
    key = 0
    for v, e in m:
        key += e << (_PACK_BITS * (v - 1))
    return key


def _unpack(key: int):
    pairs = []
    var = 1
    while key:
        e = key & _PACK_MAXEXP
        if e:
            pairs.append((var, e))
        key >>= _PACK_BITS
        var += 1
    return tuple(pairs)


def _vector_stats(terms):
    """(max variable, max single exponent, max |coeff|, all-int?) of a term map."""
    maxvar = 0
    maxexp = 0
    maxc = 0
    for m, c in terms.items():
        if type(c) is not int:
            return None
        if m:
            maxvar = max(maxvar, m[-1][0])
            for _, e in m:
                if e > maxexp:
                    maxexp = e
        a = -c if c < 0 else c
        if a > maxc:
            maxc = a
    return (maxvar, maxexp, maxc)


def _mul_vectorized(t1, t2):
    k1 = np.fromiter((_pack(m) for m in t1), dtype=np.int64, count=len(t1))
    c1 = np.fromiter(t1.values(), dtype=np.int64, count=len(t1))
    k2 = np.fromiter((_pack(m) for m in t2), dtype=np.int64, count=len(t2))
    c2 = np.fromiter(t2.values(), dtype=np.int64, count=len(t2))
    keys = (k1[:, None] + k2[None, :]).ravel()
    coeffs = (c1[:, None] * c2[None, :]).ravel()
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    coeffs = coeffs[order]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(keys)) + 1))
    sums = np.add.reduceat(coeffs, starts)
    keys = keys[starts]
    mask = sums != 0
    return {_unpack(int(k)): int(c) for k, c in zip(keys[mask], sums[mask])}


def _mul_dict(t1, t2):
    if len(t1) > len(t2):
        t1, t2 = t2, t1
    out: dict = {}
    get = out.get
    for m1, c1 in t1.items():
        for m2, c2 in t2.items():
            m = _mono_mul(m1, m2)
            c = get(m, 0) + c1 * c2
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


class SparsePolynomial:
    """Immutable exact multivariate polynomial over one variable family."""

    __slots__ = ("family", "terms")

    def __init__(self, family: str, terms: Mapping = ()):
        if not family:
            raise ValueError("variable family tag must be non-empty")
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if not isinstance(m, MultiIndex):
                m = MultiIndex(m)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("SparsePolynomial is immutable")

    @classmethod
    def _raw(cls, family: str, terms: dict) -> "SparsePolynomial":
        # Internal: terms already normalized (no zero coefficients).
        self = object.__new__(cls)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, family: str) -> "SparsePolynomial":
        return cls._raw(family, {})

    @classmethod
    def constant(cls, family: str, value: Coeff) -> "SparsePolynomial":
        return cls._raw(family, {_EMPTY: value} if value else {})

    @classmethod
    def one(cls, family: str) -> "SparsePolynomial":
        return cls.constant(family, 1)

    @classmethod
    def variable(cls, family: str, index: int, exponent: int = 1) -> "SparsePolynomial":
        if index < 1:
            raise ValueError("variable index must be >= 1")
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        if exponent == 0:
            return cls.one(family)
        return cls._raw(family, {((index, exponent),): 1})

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _EMPTY in self.terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_EMPTY, 0)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(_mono_degree(m) for m in self.terms)

    def coefficient(self, mono) -> Coeff:
        if not isinstance(mono, tuple):
            mono = MultiIndex(mono)
        return self.terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.family == other.family and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    __hash__ = None  # mutable dict inside; equality is structural

    def _check_family(self, other: "SparsePolynomial"):
        if self.family != other.family:
            raise FamilyMismatchError(
                f"cannot combine family {self.family!r} with {other.family!r}"
            )

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.family, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_family(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return SparsePolynomial._raw(self.family, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._raw(self.family, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.family, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_family(other)
        t1, t2 = self.terms, other.terms
        if not t1 or not t2:
            return SparsePolynomial.zero(self.family)
        if len(t1) * len(t2) >= _VECTOR_CUTOFF:
            s1 = _vector_stats(t1)
            s2 = _vector_stats(t2)
            if s1 and s2:
                maxvar = max(s1[0], s2[0])
                maxexp = s1[1] + s2[1]
                # reduceat adds at most min(len) products of bounded size
                bound = s1[2] * s2[2] * min(len(t1), len(t2))
                if maxvar <= _PACK_MAXVAR and maxexp <= _PACK_MAXEXP and bound < 2**62:
                    return SparsePolynomial._raw(self.family, _mul_vectorized(t1, t2))
        return SparsePolynomial._raw(self.family, _mul_dict(t1, t2))

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "SparsePolynomial":
        if not c:
            return SparsePolynomial.zero(self.family)
        return SparsePolynomial._raw(self.family, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "SparsePolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = SparsePolynomial.one(self.family)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- calculus and specialization --------------------------------------

    def partial_derivative(self, var: int) -> "SparsePolynomial":
        out = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(var)
            if not e:
                continue
            if e == 1:
                del exps[var]
            else:
                exps[var] = e - 1
            out[tuple(sorted(exps.items()))] = c * e
        return SparsePolynomial._raw(self.family, out)

    def evaluate(self, assignment: Mapping[int, Coeff]) -> Coeff:
        missing = self.variables() - set(assignment)
        if missing:
            raise MissingAssignmentError(f"no value for variables {sorted(missing)}")
        total: Coeff = 0
        for m, c in self.terms.items():
            value = c
            for v, e in m:
                value = value * assignment[v] ** e
            total = total + value
        return Fraction(total)

    def substitute(self, assignment: Mapping[int, "SparsePolynomial"]) -> "SparsePolynomial":
        """Map every variable to a polynomial of one common target family."""
        missing = self.variables() - set(assignment)
        if missing:
            raise MissingAssignmentError(f"no substitution for variables {sorted(missing)}")
        families = {p.family for p in assignment.values()}
        if len(families) > 1:
            raise FamilyMismatchError(f"substitution images span families {sorted(families)}")
        target = families.pop() if families else self.family
        powers: dict[tuple[int, int], SparsePolynomial] = {}

        def power(v: int, e: int) -> SparsePolynomial:
            got = powers.get((v, e))
            if got is None:
                got = assignment[v] if e == 1 else power(v, e - 1) * assignment[v]
                powers[(v, e)] = got
            return got

        result = SparsePolynomial.zero(target)
        for m, c in self.terms.items():
            factors = sorted((power(v, e) for v, e in m), key=len)
            term = SparsePolynomial.constant(target, c)
            for f in factors:
                term = term * f
            result = result + term
        return result

    def rename_variables(self, mapping: Mapping[int, int], family: str) -> "SparsePolynomial":
        """Injective relabel of variables, possibly into another family."""
        out = {}
        for m, c in self.terms.items():
            out[tuple(sorted((mapping[v], e) for v, e in m))] = c
        if len(out) != len(self.terms):
            raise ValueError("variable renaming is not injective")
        return SparsePolynomial._raw(family, out)

    # -- leading terms and canonical text ----------------------------------

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_grlex_key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(mc[0]), reverse=True)

    def canonical_str(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            neg = c < 0
            mag = -c if neg else c
            mono = _mono_str(m, self.family)
            if not m:
                body = f"{mag}"
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.canonical_str()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.family!r}, {self.canonical_str()!r})"


# -- module-level operation surface ---------------------------------------


def add(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p + q


def mul(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p * q


def scale(p: SparsePolynomial, c: Coeff) -> SparsePolynomial:
    return p.scale(c)


def partial_derivative(p: SparsePolynomial, var: int) -> SparsePolynomial:
    return p.partial_derivative(var)


def evaluate(p: SparsePolynomial, assignment: Mapping[int, Coeff]) -> Coeff:
    return p.evaluate(assignment)


def substitute(p: SparsePolynomial, assignment: Mapping[int, SparsePolynomial]) -> SparsePolynomial:
    return p.substitute(assignment)


# -- exact division ---------------------------------------------------------


def _divisible(m, lead) -> bool:
    exps = dict(m)
    return all(exps.get(v, 0) >= e for v, e in lead)


def _mono_quotient(m, lead):
    exps = dict(m)
    for v, e in lead:
        exps[v] -= e
        if not exps[v]:
            del exps[v]
    return tuple(sorted(exps.items()))


def exact_divide(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    """Return p / q, raising :class:`InexactDivisionError` unless exact."""
    p._check_family(q)
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return SparsePolynomial.zero(p.family)
    maxvar = max(self_vars) if (self_vars := p.variables() | q.variables()) else 0
    packable = (
        maxvar <= _PACK_MAXVAR
        and p.total_degree() <= _GUARD_MAXDEG
        and q.total_degree() <= _GUARD_MAXDEG
    )
    if packable and len(p.terms) * len(q.terms) > 10_000:
        return _divide_packed(p, q)
    return _divide_generic(p, q)


def _divide_generic(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    lead = q.leading_monomial()
    lead_c = q.terms[lead]
    rem = dict(p.terms)
    quo: dict = {}
    while rem:
        m = max(rem, key=_grlex_key)
        if not _divisible(m, lead):
            raise InexactDivisionError("leading term not divisible; division is not exact")
        qm = _mono_quotient(m, lead)
        qc = Fraction(rem[m], lead_c) if rem[m] % lead_c else rem[m] // lead_c
        quo[qm] = quo.get(qm, 0) + qc
        for mq, cq in q.terms.items():
            mm = _mono_mul(qm, mq)
            c = rem.get(mm, 0) - qc * cq
            if c:
                rem[mm] = c
            elif mm in rem:
                del rem[mm]
    return SparsePolynomial._raw(p.family, {m: c for m, c in quo.items() if c})


# Packed graded-lex keys for the heap-based division: exponent of variable 1
# sits in the most significant variable field (so plain integer comparison is
# lexicographic), with the total degree packed above everything.  A guard bit
# per field makes subtraction borrow-free, which turns the divisibility test
# into two integer operations; this requires every exponent and the total
# degree to stay below 512.
_GUARD_MAXDEG = (1 << (_PACK_BITS - 1)) - 1
_DEG_SHIFT = _PACK_BITS * _PACK_MAXVAR
_GUARD_MASK = sum(
    1 << (_PACK_BITS * f + _PACK_BITS - 1) for f in range(_PACK_MAXVAR + 1)
)


def _grlex_packed(m) -> int:
    key = _mono_degree(m) << _DEG_SHIFT
    for v, e in m:
        key |= e << (_PACK_BITS * (_PACK_MAXVAR - v))
    return key


def _grlex_unpack(key: int):
    pairs = []
    for v in range(1, _PACK_MAXVAR + 1):
        e = (key >> (_PACK_BITS * (_PACK_MAXVAR - v))) & _PACK_MAXEXP
        if e:
            pairs.append((v, e))
    return tuple(pairs)


def _divide_packed(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    qkeyed = sorted(((_grlex_packed(m), c) for m, c in q.terms.items()), reverse=True)
    lead, lead_c = qkeyed[0]
    qtail = qkeyed[1:]
    rem = {_grlex_packed(m): c for m, c in p.terms.items()}
    heap = [-k for k in rem]
    heapq.heapify(heap)
    guard = _GUARD_MASK
    quo: dict = {}
    while rem:
        # Lazy deletion: the heap may hold keys cancelled since they were pushed.
        while True:
            m = -heap[0]
            if m in rem:
                break
            heapq.heappop(heap)
        if ((m | guard) - lead) & guard != guard:
            raise InexactDivisionError("leading term not divisible; division is not exact")
        qm = m - lead
        qc = Fraction(rem[m], lead_c) if rem[m] % lead_c else rem[m] // lead_c
        quo[qm] = quo.get(qm, 0) + qc
        del rem[m]
        for kq, cq in qtail:
            mm = qm + kq
            c = rem.get(mm, 0) - qc * cq
            if c:
                if mm not in rem:
                    heapq.heappush(heap, -mm)
                rem[mm] = c
            elif mm in rem:
                del rem[mm]
    return SparsePolynomial._raw(
        p.family, {_grlex_unpack(k): c for k, c in quo.items() if c}
    )


# -- determinants ------------------------------------------------------------


def det(matrix) -> SparsePolynomial:
    """Exact determinant of a square matrix of SparsePolynomial entries.

    Cofactor expansion with memoized column-subset minors up to 6x6 (rows
    expanded bottom-up so sparse lower rows prune early), fraction-free
    Bareiss elimination beyond that.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("determinant of an empty matrix needs a family; handle 0x0 upstream")
    family = matrix[0][0].family
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
        for entry in row:
            if entry.family != family:
                raise FamilyMismatchError("matrix entries span multiple families")
    if n <= 6:
        return _det_cofactor(matrix, family)
    return _det_bareiss(matrix, family)


def _det_cofactor(matrix, family: str) -> SparsePolynomial:
    n = len(matrix)
    memo: dict[tuple[int, ...], SparsePolynomial] = {}

    def minor(cols: tuple[int, ...]) -> SparsePolynomial:
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        if len(cols) == 1:
            value = matrix[row][cols[0]]
        else:
            value = SparsePolynomial.zero(family)
            for pos, j in enumerate(cols):
                entry = matrix[row][j]
                if entry.is_zero():
                    continue
                sub = minor(cols[:pos] + cols[pos + 1:])
                if sub.is_zero():
                    continue
                piece = entry * sub
                value = value + piece if pos % 2 == 0 else value - piece
        memo[cols] = value
        return value

    return minor(tuple(range(n)))


def _det_bareiss(matrix, family: str) -> SparsePolynomial:
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = SparsePolynomial.one(family)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot_row is None:
                return SparsePolynomial.zero(family)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numer = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = exact_divide(numer, prev)
            m[i][k] = SparsePolynomial.zero(family)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result
