"""Board tilings, pattern-avoiding words and their inclusion-exclusion sums.

These enumerations are the combinatorial side of every determinant identity
in the library: tilings of a linear board biject onto the linear
subdigraphs of the banded recurrence matrix, weakly increasing words carry
the complete homogeneous polynomial, and cyclic words avoiding a cyclic
``ab`` account for all but two linear subdigraphs of the two-variable
circulant-like matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Sequence

from .caps import check_cap
from .digraph import LinearSubdigraph
from .errors import DimensionTooSmall
from .poly import MultiPoly
from .symfunc import elementary

Tiling = tuple[int, ...]
Word = tuple[int, ...]

# the two cyclic-word letters as polynomial variables
_A = MultiPoly.var(0)
_B = MultiPoly.var(1)


def enumerate_tilings(n: int, r: int) -> list[Tiling]:
    """Compositions of ``n`` with parts in ``1..r``, lexicographic order.

    ``n = 0`` yields the single empty tiling.
    """
    if n < 0:
        raise ValueError("board length must be non-negative")
    if r < 1:
        raise ValueError("maximum tile length must be positive")
    check_cap("tilings", n)
    out: list[Tiling] = []

    def extend(prefix: list[int], remaining: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(1, min(r, remaining) + 1):
            prefix.append(part)
            extend(prefix, remaining - part)
            prefix.pop()

    extend([], n)
    return out


def tiling_weight(tiling: Sequence[int], coeffs: Sequence):
    """Product of ``coeffs[part - 1]`` over the tiles; the empty tiling has weight 1."""
    weight = 1
    for part in tiling:
        if not 1 <= part <= len(coeffs):
            raise ValueError(f"tile length {part} outside 1..{len(coeffs)}")
        weight = weight * coeffs[part - 1]
    return weight


def tiling_to_lsd(tiling: Sequence[int], coeffs: Sequence) -> LinearSubdigraph:
    """Image of a tiling under the tilings-to-subdigraphs bijection.

    A tile of length ``i`` covering cells ``k..k+i-1`` becomes the cycle
    ``k -> k+i-1 -> k+i-2 -> ... -> k`` of the digraph of the banded
    recurrence matrix built from ``coeffs``; 1-tiles become loops.  The raw
    cycle weight is the band entry ``(-1)**(i+1) * c_i``, so the signed
    weight of the resulting LSD equals the tiling weight.
    """
    n = sum(tiling)
    cycles = []
    weight = 1
    cell = 0
    for part in tiling:
        if not 1 <= part <= len(coeffs):
            raise ValueError(f"tile length {part} outside 1..{len(coeffs)}")
        cycles.append((cell,) + tuple(range(cell + part - 1, cell, -1)))
        band = coeffs[part - 1]
        weight = weight * (band if part % 2 == 1 else -band)
        cell += part
    return LinearSubdigraph(n, tuple(cycles), weight)


@dataclass(frozen=True)
class CircularTiling:
    """Tiling of a circular board with labeled cells ``0..n-1``.

    ``tiles`` lists ``(start, length)`` pairs sorted by start; a 2-tile
    starting at ``n-1`` wraps around to cell 0.  Rotated tilings are
    distinct because the cells are labeled.
    """

    n: int
    tiles: tuple[tuple[int, int], ...]


def enumerate_circular_tilings(n: int) -> list[CircularTiling]:
    """All tilings of the circular n-board by 1- and 2-tiles (n >= 3).

    The count is the n-th Lucas number.
    """
    if n < 3:
        raise DimensionTooSmall(f"circular board needs n >= 3, got {n}")
    check_cap("circular_tilings", n)
    out: list[CircularTiling] = []
    # cell 0 not covered by a wrapping tile: plain strip tiling of 0..n-1
    for comp in enumerate_tilings(n, 2):
        tiles = []
        cell = 0
        for part in comp:
            tiles.append((cell, part))
            cell += part
        out.append(CircularTiling(n, tuple(tiles)))
    # wrapping 2-tile covers cells n-1 and 0; cells 1..n-2 form a strip
    for comp in enumerate_tilings(n - 2, 2):
        tiles = []
        cell = 1
        for part in comp:
            tiles.append((cell, part))
            cell += part
        tiles.append((n - 1, 2))
        out.append(CircularTiling(n, tuple(tiles)))
    return out


def enumerate_increasing_words(m: int, n_vars: int) -> list[Word]:
    """Weakly increasing words of length ``m`` over letters ``1..n_vars``.

    These are exactly the words avoiding every descent (a larger letter
    immediately before a smaller one); their weights sum to the complete
    homogeneous polynomial ``h_m``.
    """
    if m < 0:
        raise ValueError("word length must be non-negative")
    if n_vars < 1:
        raise ValueError("need at least one letter")
    check_cap("words", m)
    return [tuple(w) for w in combinations_with_replacement(range(1, n_vars + 1), m)]


def word_weight(word: Iterable[int]) -> MultiPoly:
    """Commutative weight of a word: the product of its letters ``x_{i-1}``."""
    exps: dict[int, int] = {}
    for letter in word:
        exps[letter - 1] = exps.get(letter - 1, 0) + 1
    return MultiPoly({tuple(sorted(exps.items())): 1})


def pie_linear_sum(m: int, n_vars: int) -> MultiPoly:
    """Inclusion-exclusion sum over forced strictly descending runs.

    A placement splits the ``m`` positions into free cells and disjoint
    blocks of length >= 2.  A free cell contributes ``x0 + ... + x_{n-1}``;
    a block of length ``L`` forces a strictly descending run there, which
    summed over all letter choices is ``e_L``, and carries sign
    ``(-1)**(L-1)`` (one sign per forced descent).  The total equals the
    weight of the descent-free words, i.e. ``h_m``.
    """
    check_cap("pie_linear", m)
    if n_vars < 1:
        raise ValueError("need at least one letter")
    # blocks longer than the alphabet admit no strictly descending run
    longest = max(1, min(n_vars, m))
    e = {length: elementary(length, n_vars) for length in range(1, longest + 1)}
    total = MultiPoly.zero()
    for placement in enumerate_tilings(m, longest):
        term = MultiPoly.one()
        sign = 1
        for length in placement:
            term = term * e[length]
            if length % 2 == 0:
                sign = -sign
        total = total + sign * term
    return total


def enumerate_cyclic_words(n: int) -> list[str]:
    """All ``2**n`` cyclic words over ``{a, b}`` with fixed start and orientation.

    Equality is positional (the start is pinned), so the words are plain
    strings of length ``n``.
    """
    if n < 3:
        raise DimensionTooSmall(f"cyclic words need n >= 3, got {n}")
    check_cap("cyclic_words", n)
    return ["".join(w) for w in product("ab", repeat=n)]


def has_cyclic_occurrence(word: str, pattern: str) -> bool:
    """Whether ``pattern`` occurs in ``word`` read cyclically."""
    if not pattern:
        return True
    doubled = word + word[: len(pattern) - 1]
    return pattern in doubled


def cyclic_word_weight(word: str) -> MultiPoly:
    """Monomial ``a**(#a) * b**(#b)`` of a cyclic word."""
    return MultiPoly({_normalize_ab(word): 1})


def _normalize_ab(word: str) -> tuple[tuple[int, int], ...]:
    na = word.count("a")
    nb = len(word) - na
    pairs = []
    if na:
        pairs.append((0, na))
    if nb:
        pairs.append((1, nb))
    return tuple(pairs)


def cyclic_avoiding_weight(n: int) -> MultiPoly:
    """Weight sum of cyclic words with no ``a`` immediately followed by ``b``.

    Read cyclically, any word containing both letters has such a pair, so
    the sum is ``a**n + b**n``.  Computed here by direct filtering of all
    ``2**n`` words; the inclusion-exclusion route is ``pie_cyclic_sum``.
    """
    total = MultiPoly.zero()
    for word in enumerate_cyclic_words(n):
        if not has_cyclic_occurrence(word, "ab"):
            total = total + cyclic_word_weight(word)
    return total


def pie_cyclic_sum(n: int) -> MultiPoly:
    """Alternating sum over markings of disjoint cyclic ``ab`` positions.

    The j-th layer sums, over every set of ``j`` pairwise non-overlapping
    position pairs ``(i, i+1 mod n)``, the words with ``ab`` forced at each
    marked pair and the remaining ``n - 2j`` positions free; each layer
    carries sign ``(-1)**j``.  Overlapping pairs force contradictory letters
    and contribute nothing, so this is the full inclusion-exclusion over
    occurrences.
    """
    if n < 3:
        raise DimensionTooSmall(f"cyclic board needs n >= 3, got {n}")
    check_cap("pie_cyclic", n)
    free = _A + _B
    forced = _A * _B
    total = MultiPoly.zero()
    for j in range(n // 2 + 1):
        layer = (forced ** j) * (free ** (n - 2 * j))
        for marks in combinations(range(n), j):
            covered: set[int] = set()
            for p in marks:
                covered.add(p)
                covered.add((p + 1) % n)
            if len(covered) != 2 * j:
                continue
            total = total + (layer if j % 2 == 0 else -layer)
    return total


def lsd_excluded_pair(n: int) -> tuple[LinearSubdigraph, LinearSubdigraph]:
    """The two spanning n-cycles of the two-variable circulant-like digraph.

    These are the only linear subdigraphs left out of the cyclic-word
    correspondence; their signed weights are ``a**n`` and ``b**n`` (raw
    weights ``(-1)**(n+1) * a**n`` and ``(-1)**(n+1) * b**n``).
    """
    if n < 3:
        raise DimensionTooSmall(f"matrix S needs n >= 3, got {n}")
    raw_sign = 1 if n % 2 == 1 else -1
    ascending = tuple(range(n))
    descending = (0,) + tuple(range(n - 1, 0, -1))
    l1 = LinearSubdigraph(n, (ascending,), raw_sign * _A ** n)
    l2 = LinearSubdigraph(n, (descending,), raw_sign * _B ** n)
    return l1, l2
