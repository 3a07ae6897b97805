"""Exact sparse multivariate polynomials and real quadratic-field scalars.

A polynomial is a map from monomials to arbitrary-precision integer
coefficients.  A monomial is a tuple of ``(variable index, exponent)`` pairs,
sorted by variable index, with every exponent positive (an absent variable
has exponent 0).  The zero polynomial has no terms; no stored coefficient is
ever zero, so two polynomials are equal exactly when their term maps are.

The canonical text form lists terms in descending graded-lexicographic order
(total degree first, then lexicographically with the lowest-indexed variable
strongest), e.g. ``x0^2 + x0*x1 + x1^2``.  That string is the golden format
used by the test suite and the command line.

``QuadExt`` is an exact element ``p + q*sqrt(d)`` of a real quadratic field
with reduced rational components; all shipped call sites use ``d = 5`` for
golden-ratio arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import NotDivisible, UnassignedVariable

# (variable index, exponent) pairs, sorted by variable, exponents > 0.
Monomial = tuple[tuple[int, int], ...]

_EMPTY: Monomial = ()


def _normalize_mono(pairs: Iterable[tuple[int, int]]) -> Monomial:
    kept = [(v, e) for v, e in pairs if e != 0]
    for v, e in kept:
        if e < 0:
            raise ValueError(f"negative exponent {e} for variable {v}")
    kept.sort()
    return tuple(kept)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial, width: int):
    # Dense exponent vector makes the lexicographic tie-break a plain tuple
    # comparison; sorting descending puts the leading term first.
    exps = [0] * width
    for v, e in m:
        exps[v] = e
    return (_mono_degree(m), tuple(exps))


class MultiPoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        canonical: dict[Monomial, int] = {}
        if terms:
            for mono, coef in terms.items():
                if coef == 0:
                    continue
                canonical[_normalize_mono(mono)] = int(coef)
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({_EMPTY: 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_EMPTY: c})

    @classmethod
    def var(cls, index: int) -> "MultiPoly":
        """The polynomial consisting of the single variable ``x_index``."""
        if index < 0:
            raise ValueError("variable index must be non-negative")
        return cls({((index, 1),): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        """Copy of the term map (monomial -> coefficient)."""
        return dict(self._terms)

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(_mono_degree(m) for m in self._terms)

    def variables(self) -> set[int]:
        return {v for m in self._terms for v, _ in m}

    def _width(self) -> int:
        top = -1
        for m in self._terms:
            for v, _ in m:
                if v > top:
                    top = v
        return top + 1

    def leading_term(self) -> tuple[Monomial, int]:
        """Largest term in graded-lex order.  Undefined for zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        width = self._width()
        mono = max(self._terms, key=lambda m: _grlex_key(m, width))
        return mono, self._terms[mono]

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coef in other._terms.items():
            out[mono] = out.get(mono, 0) + coef
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                out[mono] = out.get(mono, 0) + ca * cb
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = MultiPoly.one()
        base = self
        n = k
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"MultiPoly({poly_str(self)})"


VarNames = Union[Sequence[str], Callable[[int], str], None]


def _name_of(names: VarNames, index: int) -> str:
    if names is None:
        return f"x{index}"
    if callable(names):
        return names(index)
    return names[index]


def poly_str(p: MultiPoly, names: VarNames = None) -> str:
    """Canonical text form: graded-lex descending, ``coef*x0^e0*...`` terms.

    Exponent 1 and coefficient 1 are omitted; the zero polynomial is ``0``.
    """
    if not p:
        return "0"
    width = p._width()
    ordered = sorted(p._terms.items(), key=lambda kv: _grlex_key(kv[0], width),
                     reverse=True)
    pieces: list[str] = []
    for i, (mono, coef) in enumerate(ordered):
        mag = abs(coef)
        factors = []
        if mag != 1 or not mono:
            factors.append(str(mag))
        for v, e in mono:
            name = _name_of(names, v)
            factors.append(name if e == 1 else f"{name}^{e}")
        body = "*".join(factors)
        if i == 0:
            pieces.append(body if coef > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coef > 0 else f" - {body}")
    return "".join(pieces)


def exact_divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``q * den == num``, exact over the integers.

    Division tracks a single quotient by repeatedly cancelling graded-lex
    leading terms.  Raises ``NotDivisible`` as soon as a leading monomial or
    integer coefficient fails to divide, which happens exactly when no
    integer-coefficient quotient exists.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = MultiPoly.zero()
    remainder = num
    den_mono, den_coef = den.leading_term()
    den_exps = dict(den_mono)
    while remainder:
        rem_mono, rem_coef = remainder.leading_term()
        rem_exps = dict(rem_mono)
        diff = dict(rem_exps)
        for v, e in den_exps.items():
            have = diff.get(v, 0)
            if have < e:
                raise NotDivisible(f"{rem_mono} not divisible by {den_mono}")
            diff[v] = have - e
        c, leftover = divmod(rem_coef, den_coef)
        if leftover:
            raise NotDivisible(f"coefficient {rem_coef} not divisible by {den_coef}")
        t = MultiPoly({_normalize_mono(diff.items()): c})
        quotient = quotient + t
        remainder = remainder - t * den
    return quotient


class QuadExt:
    """Exact element ``p + q*sqrt(d)`` of a real quadratic field.

    Components are reduced rationals; ``d`` is a square-free positive
    integer, 5 everywhere in this library.  Mixing different ``d`` values in
    one operation is an error.
    """

    __slots__ = ("rational", "radical", "d")

    def __init__(self, rational=0, radical=0, d: int = 5):
        object.__setattr__(self, "rational", Fraction(rational))
        object.__setattr__(self, "radical", Fraction(radical))
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mixed discriminants {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExt(self.rational + other.rational,
                       self.radical + other.radical, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.rational, -self.radical, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p1, q1, p2, q2 = self.rational, self.radical, other.rational, other.radical
        return QuadExt(p1 * p2 + q1 * q2 * self.d, p1 * q2 + p2 * q1, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.rational, -self.radical, self.d)

    def norm(self) -> Fraction:
        return self.rational * self.rational - self.d * self.radical * self.radical

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        conj = other.conjugate()
        # 1/other = conj/norm since d is square-free (norm 0 only at 0)
        return self * QuadExt(conj.rational / n, conj.radical / n, self.d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("quadratic powers must be non-negative")
        result = QuadExt(1, 0, self.d)
        base = self
        n = k
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return self.rational != 0 or self.radical != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other, 0, self.d)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self.d == other.d and self.rational == other.rational
                and self.radical == other.radical)

    def __hash__(self) -> int:
        return hash((self.rational, self.radical, self.d))

    def __str__(self) -> str:
        if self.radical == 0:
            return str(self.rational)
        tail = f"{abs(self.radical)}*sqrt({self.d})"
        if self.radical < 0:
            return f"{self.rational} - {tail}"
        return f"{self.rational} + {tail}"

    def __repr__(self) -> str:
        return f"QuadExt({self.rational}, {self.radical}, d={self.d})"


#: Golden ratio (1 + sqrt(5))/2 and its conjugate (1 - sqrt(5))/2.
PHI = QuadExt(Fraction(1, 2), Fraction(1, 2))
PSI = QuadExt(Fraction(1, 2), Fraction(-1, 2))
SQRT5 = QuadExt(0, 1)


def quad_pow(z: QuadExt, n: int) -> QuadExt:
    """Exact ``z**n`` for non-negative ``n``; ``quad_pow(z, 0) == 1``."""
    return z ** n


def substitute(p: MultiPoly, assignment: Mapping[int, "QuadExt | int | Fraction"]) -> QuadExt:
    """Evaluate ``p`` exactly at a point of the quadratic field.

    Every variable occurring in ``p`` must be assigned; plain integers and
    fractions are promoted.  Raises ``UnassignedVariable`` otherwise.
    """
    d = 5
    for value in assignment.values():
        if isinstance(value, QuadExt):
            d = value.d
            break
    values: dict[int, QuadExt] = {}
    for v, value in assignment.items():
        values[v] = value if isinstance(value, QuadExt) else QuadExt(value, 0, d)
    total = QuadExt(0, 0, d)
    for mono, coef in p._terms.items():
        term = QuadExt(coef, 0, d)
        for v, e in mono:
            if v not in values:
                raise UnassignedVariable(f"variable x{v} is not assigned")
            term = term * values[v] ** e
        total = total + term
    return total


def scalar_str(value, names: VarNames = None) -> str:
    """Canonical serialization shared by every scalar type.

    Integers and fractions print plainly, polynomials in graded-lex text
    form, quadratic elements as ``p + q*sqrt(d)`` (or plainly when the
    radical part vanishes, so rational-valued routes compare equal across
    scalar types).
    """
    if isinstance(value, MultiPoly):
        return poly_str(value, names)
    if isinstance(value, QuadExt):
        if value.radical == 0 and value.rational.denominator == 1:
            return str(value.rational.numerator)
        return str(value)
    return str(value)
