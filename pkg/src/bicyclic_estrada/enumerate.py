"""Bicyclic graphs of a given order, up to isomorphism.

``enumerate_bicyclic`` builds every graph as a kernel (infinity or theta)
with rooted trees hung on its vertices, then deduplicates by canonical form.
``enumerate_bicyclic_bruteforce`` is the independent check: it scans edge
subsets directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice, product
from typing import Iterator, Optional

import numpy as np

from .canon import canonical_form
from .graph import Graph, GraphError, build_infty, build_theta, classify

MAX_STRUCTURED_N = 12
MAX_BRUTEFORCE_N = 8


@dataclass(frozen=True)
class GraphClass:
    """An isomorphism class: canonical form plus one representative."""

    form: bytes
    graph: Graph


def rooted_trees(size: int) -> Iterator[list[int]]:
    """Canonical level sequences of all rooted trees on ``size`` nodes.

    Beyer-Hedetniemi successor rule; the root has level 0. Starts at the
    path and ends at the star.
    """
    if size < 1:
        return
    levels = list(range(size))
    while True:
        yield list(levels)
        p = size - 1
        while p > 0 and levels[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        for i in range(p, size):
            levels[i] = levels[i - p + q]


@lru_cache(maxsize=None)
def rooted_tree_edges(size: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Parent edges (parent, child) for each rooted tree; node 0 is the root."""
    out = []
    for levels in rooted_trees(size):
        edges = []
        last_at = {}
        for i, lv in enumerate(levels):
            if i:
                edges.append((last_at[lv - 1], i))
            last_at[lv] = i
        out.append(tuple(edges))
    return tuple(out)


def kernels(n: int) -> list[tuple[str, tuple[int, int, int]]]:
    """All infinity/theta kernel parameters fitting in ``n`` vertices."""
    out = []
    for p in range(3, n + 1):
        for q in range(p, n + 1):
            for l in range(1, n + 1):
                if p + q + l - 2 <= n:
                    out.append(("infinity", (p, q, l)))
    for a in range(2, n + 1):
        for b in range(2, a + 1):
            for c in range(1, b + 1):
                if a + b + c - 1 <= n:
                    out.append(("theta", (a, b, c)))
    return out


def build_kernel(kind: str, params) -> Graph:
    return build_infty(*params) if kind == "infinity" else build_theta(*params)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _attachments(kernel: Graph, n: int) -> Iterator[Graph]:
    k = kernel.n
    for sizes in _compositions(n - k, k):
        choices = [rooted_tree_edges(s + 1) for s in sizes]
        for trees in product(*choices):
            edges = list(kernel.edges)
            nxt = k
            for root, tree in enumerate(trees):
                base = nxt - 1  # tree node i>0 gets label base + i
                for a, b in tree:
                    edges.append((root if a == 0 else base + a, base + b))
                nxt += len(tree)
            yield Graph(n, edges)


def enumerate_bicyclic(n: int, max_n: int = MAX_STRUCTURED_N) -> list[GraphClass]:
    """All connected graphs with ``n`` vertices and ``n + 1`` edges, one per class."""
    if n > max_n or n < 1:
        raise GraphError(f"structured enumeration supports 1 <= n <= {max_n}, got {n}")
    seen: dict[bytes, Graph] = {}
    for kind, params in kernels(n):
        for G in _attachments(build_kernel(kind, params), n):
            form = canonical_form(G)
            if form not in seen:
                seen[form] = G
    return [GraphClass(f, seen[f]) for f in sorted(seen)]


def _connected_mask(adj: np.ndarray, n: int) -> np.ndarray:
    """Row-wise connectivity of graphs given as (rows, n) bitmask arrays."""
    reach = np.ones(adj.shape[0], dtype=np.int64)
    for _ in range(n):
        new = reach.copy()
        for v in range(n):
            hit = (reach >> v) & 1
            new |= np.where(hit == 1, adj[:, v], 0)
        if np.array_equal(new, reach):
            break
        reach = new
    return reach == (1 << n) - 1


def enumerate_bicyclic_bruteforce(
    n: int, max_n: int = MAX_BRUTEFORCE_N, chunk: int = 200_000
) -> list[bytes]:
    """Canonical forms from scanning every (n+1)-subset of the possible edges.

    Only labelings whose degree sequence is non-increasing in the vertex
    label are canonicalised; every isomorphism class has such a labeling.
    """
    if n > max_n or n < 1:
        raise GraphError(f"brute-force enumeration supports 1 <= n <= {max_n}, got {n}")
    pairs = list(combinations(range(n), 2))
    if len(pairs) < n + 1:
        return []
    eu = np.array([a for a, _ in pairs], dtype=np.int64)
    ev = np.array([b for _, b in pairs], dtype=np.int64)
    forms: set[bytes] = set()
    combos = combinations(range(len(pairs)), n + 1)
    while True:
        block = list(islice(combos, chunk))
        if not block:
            break
        idx = np.array(block, dtype=np.int64)
        rows = np.arange(idx.shape[0])[:, None]
        deg = np.zeros((idx.shape[0], n), dtype=np.int64)
        np.add.at(deg, (np.broadcast_to(rows, idx.shape), eu[idx]), 1)
        np.add.at(deg, (np.broadcast_to(rows, idx.shape), ev[idx]), 1)
        keep = np.all(deg[:, :-1] >= deg[:, 1:], axis=1) & np.all(deg > 0, axis=1)
        idx = idx[keep]
        if not len(idx):
            continue
        adj = np.zeros((idx.shape[0], n), dtype=np.int64)
        r = np.arange(idx.shape[0])
        for c in range(idx.shape[1]):
            a, b = eu[idx[:, c]], ev[idx[:, c]]
            adj[r, a] |= np.left_shift(1, b)
            adj[r, b] |= np.left_shift(1, a)
        idx = idx[_connected_mask(adj, n)]
        for row in idx:
            forms.add(canonical_form(Graph(n, [pairs[e] for e in row])))
    return sorted(forms)


def enumerate_class(n: int, kind: str, p: int, q: int, classes: Optional[list[GraphClass]] = None) -> list[GraphClass]:
    """Members of G_inf(n; p, q) or G_theta(n; p, q).

    For ``theta`` the kernel is theta(a, b, c), a >= b >= c, with
    ``a + c == p`` and ``b + c == q`` (so p >= q after normalisation).
    """
    p, q = max(p, q), min(p, q)
    if classes is None:
        classes = enumerate_bicyclic(n)
    out = []
    for gc in classes:
        ker = classify(gc.graph).kernel
        if ker.kind != kind:
            continue
        a, b, c = ker.params
        if kind == "infinity" and (a, b) == (q, p):
            out.append(gc)
        elif kind == "theta" and (a + c, b + c) == (p, q):
            out.append(gc)
    return out


def class_labels(n: int) -> list[tuple[str, int, int]]:
    """Every (kind, p, q) class that is non-empty at order n."""
    labels = set()
    for kind, params in kernels(n):
        a, b, c = params
        labels.add((kind, b, a) if kind == "infinity" else (kind, a + c, b + c))
    return sorted(labels)


@lru_cache(maxsize=None)
def enumerate_connected(n: int) -> tuple[GraphClass, ...]:
    """All connected graphs on ``n <= 6`` vertices, one per isomorphism class."""
    if not 1 <= n <= 6:
        raise GraphError("connected-graph enumeration supports 1 <= n <= 6")
    pairs = list(combinations(range(n), 2))
    seen: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        deg = [0] * n
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if any(deg[i] < deg[i + 1] for i in range(n - 1)):
            continue
        G = Graph(n, edges)
        if not G.is_connected():
            continue
        form = canonical_form(G)
        seen.setdefault(form, G)
    return tuple(GraphClass(f, seen[f]) for f in sorted(seen))
