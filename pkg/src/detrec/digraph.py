"""Weighted digraphs of square matrices and linear-subdigraph expansion.

The digraph of an ``n x n`` matrix has vertices ``0..n-1`` and an edge
``i -> j`` of weight ``M[i][j]`` for every nonzero entry.  A linear
subdigraph (LSD) is a spanning collection of pairwise vertex-disjoint
directed cycles; loops count as cycles of length 1.  Summing
``(-1)**(n - c(L)) * w(L)`` over all LSDs gives the determinant, which is
the expansion everything in this library is checked against.

Cycles are kept canonical: each cycle is rotated so its smallest vertex
comes first, and the cycles of an LSD are listed by increasing smallest
vertex.  Enumeration recurses over actual nonzero edges, so the sparse
structured matrices stay fast; the hard cap exists because a dense matrix
has ``n!`` linear subdigraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Mapping

from .caps import check_cap
from .detmat import SquareMatrix
from .errors import InvalidCycleType
from .poly import scalar_str


@dataclass(frozen=True)
class LinearSubdigraph:
    """Spanning vertex-disjoint cycle collection with its raw weight."""

    n: int
    cycles: tuple[tuple[int, ...], ...]
    weight: object

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles)) % 2 else 1

    @property
    def signed_weight(self):
        return self.sign * self.weight


class WeightedDigraph:
    """Digraph view of a square matrix; zero entries are absent edges."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: SquareMatrix):
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedDigraph is immutable")

    @property
    def n(self) -> int:
        return self.matrix.n

    def weight(self, i: int, j: int):
        return self.matrix[i][j]

    def edges(self):
        """Nonzero edges as ``(i, j, weight)`` in row-major order."""
        for i in range(self.n):
            for j in range(self.n):
                w = self.matrix[i][j]
                if w:
                    yield i, j, w


def from_matrix(m: SquareMatrix) -> WeightedDigraph:
    return WeightedDigraph(m)


def enumerate_lsds(g: WeightedDigraph) -> list[LinearSubdigraph]:
    """All linear subdigraphs with nonzero weight, each exactly once.

    Output is deterministic: sorted lexicographically by the canonical
    cycle representation.
    """
    n = g.n
    check_cap("lsd", n)
    found: list[LinearSubdigraph] = []

    def cover(unused: tuple[int, ...], cycles, acc_weight):
        if not unused:
            found.append(LinearSubdigraph(n, tuple(cycles), acc_weight))
            return
        start = unused[0]
        rest = unused[1:]

        # every cycle through `start` stays inside `unused`, whose minimum
        # is `start`, so the canonical rotation falls out of the search
        def walk(path, avail, path_weight):
            tip = path[-1]
            closing = g.weight(tip, start)
            if closing:
                cyc = tuple(path)
                inside = set(cyc)
                cover(tuple(v for v in unused if v not in inside),
                      cycles + [cyc], acc_weight * path_weight * closing)
            for idx, nxt in enumerate(avail):
                step = g.weight(tip, nxt)
                if step:
                    walk(path + [nxt], avail[:idx] + avail[idx + 1:],
                         path_weight * step)

        walk([start], rest, 1)

    cover(tuple(range(n)), [], 1)
    found.sort(key=lambda lsd: lsd.cycles)
    return found


def det_via_lsd(m: SquareMatrix):
    """Determinant as the signed weight sum over all linear subdigraphs."""
    total = 0
    for lsd in enumerate_lsds(from_matrix(m)):
        total = total + lsd.signed_weight
    return total


def cycle_type(lsd: LinearSubdigraph) -> dict[int, int]:
    """Counts of cycle lengths >= 2 (loops are implied by the vertex count)."""
    counts: dict[int, int] = {}
    for cyc in lsd.cycles:
        if len(cyc) >= 2:
            counts[len(cyc)] = counts.get(len(cyc), 0) + 1
    return counts


def count_cycle_type(n: int, ct: Mapping[int, int], band: int) -> int:
    """Number of LSDs of the width-``band`` banded digraph with cycle type ``ct``.

    In that digraph every cycle of length ``t`` occupies ``t`` consecutive
    vertices, so an LSD is an arrangement of blocks and loops along the
    line and the count is the multinomial

        (number of cycles)! / (prod_t i_t! * (number of loops)!).

    Pure integer combinatorics; weights play no role.
    """
    if n < 1:
        raise InvalidCycleType("vertex count must be positive")
    covered = 0
    blocks = 0
    for t, count in ct.items():
        if count < 0:
            raise InvalidCycleType(f"negative count for length {t}")
        if count == 0:
            continue
        if t < 2:
            raise InvalidCycleType(f"cycle length {t} below 2")
        if t > band:
            raise InvalidCycleType(f"cycle length {t} exceeds band {band}")
        covered += t * count
        blocks += count
    if covered > n:
        raise InvalidCycleType(f"cycle type covers {covered} > {n} vertices")
    loops = n - covered
    result = factorial(loops + blocks)
    for count in ct.values():
        result //= factorial(count)
    return result // factorial(loops)


def digraph_dot(g: WeightedDigraph, highlight: LinearSubdigraph | None = None,
                names=None) -> str:
    """DOT rendering; edges of the highlighted LSD are drawn bold."""
    bold = set()
    if highlight is not None:
        for cyc in highlight.cycles:
            for k, v in enumerate(cyc):
                bold.add((v, cyc[(k + 1) % len(cyc)]))
    lines = ["digraph {"]
    for v in range(g.n):
        lines.append(f"  v{v + 1};")
    for i, j, w in g.edges():
        attrs = f'label="{scalar_str(w, names)}"'
        if (i, j) in bold:
            attrs += ", style=bold"
        lines.append(f"  v{i + 1} -> v{j + 1} [{attrs}];")
    lines.append("}")
    return "\n".join(lines)
