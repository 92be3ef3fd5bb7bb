"""Exact walk counts and the K-truncated walk-dominance relation.

All counts are Python integers, so nothing overflows however large ``k``
gets. Tables are built by pushing an indicator vector through the adjacency
lists ``K`` times rather than by forming ``A**k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import Graph, subgraph_delete

DEFAULT_K = 40

EQUAL = "equal"
DOMINATED = "strictly-dominated"
DOMINATES = "strictly-dominates"
INCOMPARABLE = "incomparable"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class WalkTable:
    """Walk counts ``counts[k]`` for ``k = 0..K``.

    ``endpoints`` is ``None`` for the global (closed walk) table, otherwise
    ``(u, v)``; ``through`` records the forced intermediate vertex if any.
    """

    graph: Graph
    endpoints: Optional[tuple[int, int]]
    counts: tuple[int, ...]
    through: Optional[int] = None

    @property
    def K(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


def _walk_vectors(G: Graph, u: int, K: int) -> list[list[int]]:
    """``vecs[k][x]`` = number of length-k walks from u to x."""
    nbrs = [G.neighbors(x) for x in range(G.n)]
    vec = [0] * G.n
    vec[u] = 1
    out = [vec]
    for _ in range(K):
        vec = [sum(vec[y] for y in nb) for nb in nbrs]
        out.append(vec)
    return out


@lru_cache(maxsize=4096)
def _rows(G: Graph, u: int, K: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v) for v in _walk_vectors(G, u, K))


def walk_table(G: Graph, u: int, v: int, K: int = DEFAULT_K) -> WalkTable:
    _check_vertex(G, u)
    _check_vertex(G, v)
    rows = _rows(G, u, K)
    return WalkTable(G, (u, v), tuple(r[v] for r in rows))


def walk_count(G: Graph, u: int, v: int, k: int) -> int:
    if k < 0:
        raise ValueError("walk length must be non-negative")
    return walk_table(G, u, v, k).counts[k]


def walk_table_through(G: Graph, u: int, v: int, w: int, K: int = DEFAULT_K) -> WalkTable:
    """Counts of u-v walks that visit ``w`` at least once."""
    full = walk_table(G, u, v, K)
    _check_vertex(G, w)
    if w in (u, v):
        return WalkTable(G, (u, v), full.counts, through=w)
    if G.n == 1:
        return WalkTable(G, (u, v), full.counts, through=w)
    H, relabel = subgraph_delete(G, [w])
    avoid = walk_table(H, relabel[u], relabel[v], K).counts
    return WalkTable(G, (u, v), tuple(a - b for a, b in zip(full.counts, avoid)), through=w)


def walk_count_through(G: Graph, u: int, v: int, w: int, k: int) -> int:
    if k < 0:
        raise ValueError("walk length must be non-negative")
    return walk_table_through(G, u, v, w, k).counts[k]


@lru_cache(maxsize=4096)
def spectral_moments(G: Graph, K: int) -> tuple[int, ...]:
    """``(M_0, ..., M_K)``: numbers of closed walks of each length."""
    totals = [0] * (K + 1)
    for u in range(G.n):
        for k, row in enumerate(_walk_vectors(G, u, K)):
            totals[k] += row[u]
    return tuple(totals)


def spectral_moment(G: Graph, k: int) -> int:
    if k < 0:
        raise ValueError("moment index must be non-negative")
    return spectral_moments(G, k)[k]


def moment_table(G: Graph, K: int = DEFAULT_K) -> WalkTable:
    return WalkTable(G, None, spectral_moments(G, K))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph on {G.n} vertices")


# -- dominance -------------------------------------------------------------


@dataclass(frozen=True)
class DominanceVerdict:
    """Comparison of two walk sequences for ``k = 1..K``.

    ``rows`` holds ``(k, lhs, rhs, sign)`` with sign in {-1, 0, 1} meaning
    lhs <, =, > rhs. A verdict of ``equal`` only says the tables tie up to K.
    """

    K: int
    rows: tuple[tuple[int, int, int, int], ...]
    classification: str

    @property
    def first_strict(self) -> Optional[int]:
        return next((k for k, _, _, s in self.rows if s != 0), None)

    @property
    def weakly_dominated(self) -> bool:
        """lhs <= rhs for every compared k."""
        return self.classification in (EQUAL, DOMINATED)

    @property
    def weakly_dominates(self) -> bool:
        return self.classification in (EQUAL, DOMINATES)


def compare_sequences(lhs, rhs, K: int) -> DominanceVerdict:
    """Classify two count sequences indexed from k = 0 over k = 1..K."""
    if K < 1:
        return DominanceVerdict(K, (), UNDETERMINED)
    rows = []
    less = more = False
    for k in range(1, K + 1):
        a, b = lhs[k], rhs[k]
        s = (a > b) - (a < b)
        less |= s < 0
        more |= s > 0
        rows.append((k, a, b, s))
    if less and more:
        cls = INCOMPARABLE
    elif less:
        cls = DOMINATED
    elif more:
        cls = DOMINATES
    else:
        cls = EQUAL
    return DominanceVerdict(K, tuple(rows), cls)


def dominance(
    G1: Graph, u1: int, v1: int, G2: Graph, u2: int, v2: int, K: int = DEFAULT_K
) -> DominanceVerdict:
    """Compare ``(G1; u1, v1)`` against ``(G2; u2, v2)`` up to walk length K."""
    if K < 1:
        raise ValueError("cutoff K must be >= 1")
    lhs = walk_table(G1, u1, v1, K).counts
    rhs = walk_table(G2, u2, v2, K).counts
    return compare_sequences(lhs, rhs, K)
