"""Iterative recurrence evaluators and exact closed forms.

These are the independent oracles the determinant routes are checked
against: plain iteration for the order-r recurrence (initial conditions
``u_0 = 1`` and ``u_j = 0`` for ``j < 0``), the Fibonacci, Lucas and r-acci
sequences, the cycle-type multinomial sum, and exact golden-ratio closed
forms evaluated in the quadratic field (no floating point anywhere).
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .caps import check_cap
from .digraph import count_cycle_type
from .poly import PHI, PSI, SQRT5, QuadExt


def eval_recurrence(coeffs: Sequence, n: int):
    """Value ``u_n`` of ``u_m = c_1 u_{m-1} + ... + c_r u_{m-r}``.

    ``u_0 = 1`` and ``u_j = 0`` for ``j < 0``; coefficients may be any exact
    scalar, including polynomials.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if not coeffs:
        raise ValueError("need at least one coefficient")
    values = [1]
    for m in range(1, n + 1):
        acc = 0
        for i, c in enumerate(coeffs, start=1):
            if m - i >= 0:
                acc = acc + c * values[m - i]
        values.append(acc)
    return values[n]


def fibonacci(n: int) -> int:
    """Fibonacci numbers with ``f_0 = f_1 = 1``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """Lucas numbers with seeds ``l_0 = 2, l_1 = 1, l_2 = 3``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    seeds = [2, 1, 3]
    if n < 3:
        return seeds[n]
    a, b = seeds[1], seeds[2]
    for _ in range(n - 2):
        a, b = b, a + b
    return b


def racci(n: int, r: int) -> int:
    """r-acci numbers: ``F_n = F_{n-1} + ... + F_{n-r}`` with ``F_0 = 1``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if r < 1:
        raise ValueError("order must be positive")
    return eval_recurrence([1] * r, n)


def racci_multinomial(n: int, r: int) -> int:
    """r-acci number as a sum of cycle-type multinomials.

    Sums, over every cycle type with ``2*i_2 + ... + r*i_r <= n``, the
    number of linear subdigraphs of the width-r banded digraph with that
    type.
    """
    if r < 1:
        raise ValueError("order must be positive")
    check_cap("racci_sum", n)
    if n == 0:
        return 1
    ranges = [range(n // t + 1) for t in range(2, r + 1)]
    total = 0
    for counts in product(*ranges):
        ct = {t: c for t, c in zip(range(2, r + 1), counts) if c}
        if sum(t * c for t, c in ct.items()) > n:
            continue
        total += count_cycle_type(n, ct, r)
    return total


def binet_fib(n: int) -> QuadExt:
    """Fibonacci closed form ``(phi**(n+1) - psi**(n+1)) / sqrt(5)``, exactly.

    The result always has zero radical part and an integer rational part.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    return (PHI ** (n + 1) - PSI ** (n + 1)) / SQRT5


def binet_lucas(n: int) -> QuadExt:
    """Lucas closed form ``phi**n + psi**n``, exactly."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return PHI ** n + PSI ** n
