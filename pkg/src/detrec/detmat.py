"""Structured matrices and exact determinant algorithms.

The constructors build the banded recurrence matrix family (``C`` and its
unit-coefficient specializations ``G`` and ``F``) and the circulant-like
two-variable family (``S`` and its golden-ratio instance ``A``).  The banded
matrix of elementary symmetric polynomials lives in ``symfunc``.

Determinants come in two independent flavours here: first-row cofactor
expansion (the small reference oracle) and fraction-free Bareiss elimination
(the scalable exact route).  Both are written once against plain ring
operators, so integer, polynomial and quadratic-field matrices all work.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionTooSmall, ExactDivisionFailure, NotDivisible, TooLarge
from .poly import MultiPoly, QuadExt, PHI, PSI, exact_divide, scalar_str

COFACTOR_MAX_N = 8


class SquareMatrix:
    """Immutable square matrix over any exact scalar type."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        frozen = tuple(tuple(row) for row in rows)
        n = len(frozen)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in frozen:
            if len(row) != n:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "_rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, i: int):
        return self._rows[i]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def with_entry(self, i: int, j: int, value) -> "SquareMatrix":
        """Copy of the matrix with one entry replaced (handy for mutation tests)."""
        rows = [list(row) for row in self._rows]
        rows[i][j] = value
        return SquareMatrix(rows)

    def pretty(self, names=None) -> str:
        """Text dump: one row per line, tab-separated canonical scalars."""
        return "\n".join(
            "\t".join(scalar_str(entry, names) for entry in row) for row in self._rows
        )

    def __repr__(self) -> str:
        return f"SquareMatrix({self.n}x{self.n})"


def build_C(coeffs: Sequence, n: int) -> SquareMatrix:
    """Banded matrix whose determinant solves the order-r recurrence.

    With 1-based indices: the t-th band above and on the diagonal carries
    ``(-1)**(t+1) * c_t`` (so ``c1, -c2, c3, ...``), the subdiagonal is all
    ones, and everything else is zero.  Bands truncate at the matrix
    boundary, which keeps the determinant equal to the recurrence value even
    when ``n < r``.
    """
    r = len(coeffs)
    if r < 1:
        raise ValueError("need at least one coefficient")
    if n < 1:
        raise ValueError("matrix size must be positive")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            t = j - i + 1
            if 1 <= t <= r:
                c = coeffs[t - 1]
                row.append(c if t % 2 == 1 else -c)
            elif i == j + 1:
                row.append(1)
            else:
                row.append(0)
        rows.append(row)
    return SquareMatrix(rows)


def build_G(n: int, r: int) -> SquareMatrix:
    """Unit-coefficient band matrix; its determinant is the r-acci number."""
    if r < 1:
        raise ValueError("band width must be positive")
    return build_C([1] * r, n)


def build_F(n: int) -> SquareMatrix:
    """Tridiagonal matrix (diag 1, super -1, sub 1) with Fibonacci determinant."""
    return build_G(n, 2)


def build_S(a, b, n: int) -> SquareMatrix:
    """Two-variable circulant-like matrix with determinant ``2*(a^n + b^n)``.

    Diagonal ``a+b``; superdiagonal ``a`` and subdiagonal ``b`` except that
    the (1,2) and (2,1) entries carry the extra sign ``(-1)**(n+1)``;
    corners ``S[1][n] = b`` and ``S[n][1] = a``.  Defined for ``n >= 3``.
    """
    if n < 3:
        raise DimensionTooSmall(f"matrix S needs n >= 3, got {n}")
    neg = n % 2 == 0
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = a + b
    rows[0][1] = -a if neg else a
    rows[1][0] = -b if neg else b
    for i in range(1, n - 1):
        rows[i][i + 1] = a
        rows[i + 1][i] = b
    rows[0][n - 1] = b
    rows[n - 1][0] = a
    return SquareMatrix(rows)


def build_A(n: int) -> SquareMatrix:
    """Golden-ratio instance of ``build_S``: half its determinant is a Lucas number."""
    return build_S(PHI, PSI, n)


def _exact_div(num, den):
    """Exact scalar division used by the fraction-free elimination."""
    if isinstance(num, QuadExt) or isinstance(den, QuadExt):
        promoted = num if isinstance(num, QuadExt) else QuadExt(num, 0, den.d)
        return promoted / den
    if isinstance(num, MultiPoly) or isinstance(den, MultiPoly):
        pnum = num if isinstance(num, MultiPoly) else MultiPoly.const(num)
        pden = den if isinstance(den, MultiPoly) else MultiPoly.const(den)
        try:
            return exact_divide(pnum, pden)
        except NotDivisible as exc:
            raise ExactDivisionFailure(str(exc)) from exc
    if isinstance(num, Fraction) or isinstance(den, Fraction):
        return Fraction(num) / Fraction(den)
    q, rem = divmod(num, den)
    if rem:
        raise ExactDivisionFailure(f"{num} not divisible by {den}")
    return q


def det_cofactor(m: SquareMatrix):
    """Exact determinant by first-row cofactor expansion (reference oracle)."""
    if m.n > COFACTOR_MAX_N:
        raise TooLarge(f"cofactor expansion capped at n <= {COFACTOR_MAX_N}")
    return _cofactor([list(row) for row in m])


def _cofactor(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(m: SquareMatrix):
    """Exact determinant by fraction-free (Bareiss) elimination.

    Works over any integral domain with exact division; a zero pivot
    triggers a row swap with a sign flip, and if no nonzero pivot exists the
    determinant is zero.  Raises ``ExactDivisionFailure`` only on an
    implementation bug: intermediate entries are minors of the input, so
    each pivot division is exact.
    """
    n = m.n
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if k == 0 else _exact_div(num, prev)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
