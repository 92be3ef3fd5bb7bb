"""Canonical labeling by colour refinement plus individualisation.

The search tree is built label-independently: refine to an equitable
partition, individualise each vertex of the first non-singleton cell in
turn, recurse. Each leaf is a discrete partition, i.e. a relabeling; the
canonical form is the lexicographically smallest upper-triangle adjacency
string among leaves, serialised as graph6 bytes.

Branches that differ only by swapping two twins (vertices with the same
neighbourhood apart from each other) are explored once: the transposition
of twins is an automorphism fixing the current node, so both subtrees carry
the same leaf certificates. The pruned transpositions are returned with the
automorphism generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, GraphError

CANON_MAX_N = 16


@dataclass(frozen=True)
class CanonicalLabeling:
    form: bytes
    #: ``order[i]`` is the original vertex placed at canonical position ``i``
    order: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]


def _refine(adj, n, colors):
    """Refine ``colors`` (list of ints, 0..c-1, canonical order) to equitable."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            mask = adj[v]
            counts = [0] * ncolors
            while mask:
                low = mask & -mask
                counts[colors[low.bit_length() - 1]] += 1
                mask ^= low
            sigs.append((colors[v], tuple(counts)))
        order = sorted(set(sigs))
        if len(order) == ncolors:
            return colors
        index = {s: i for i, s in enumerate(order)}
        colors = [index[s] for s in sigs]
        ncolors = len(order)


def _certificate(adj, order) -> int:
    n = len(order)
    bits = 0
    for j in range(1, n):
        mj = adj[order[j]]
        for i in range(j):
            bits = (bits << 1) | ((mj >> order[i]) & 1)
    return bits


def _graph6_from_bits(n: int, bits: int) -> bytes:
    nbits = n * (n - 1) // 2
    pad = (-nbits) % 6
    bits <<= pad
    total = nbits + pad
    out = bytearray([n + 63])
    for shift in range(total - 6, -1, -6):
        out.append(((bits >> shift) & 63) + 63)
    return bytes(out)


def canonical_labeling(G: Graph, max_n: int = CANON_MAX_N) -> CanonicalLabeling:
    n = G.n
    if n > max_n:
        raise GraphError(f"canonical labeling capped at {max_n} vertices, got {n}")
    adj = G.adj
    deg_order = sorted(set(G.degrees()))
    colors = _refine(adj, n, [deg_order.index(d) for d in G.degrees()])

    best = None
    best_orders: list[tuple[int, ...]] = []
    twin_swaps: set[tuple[int, int]] = set()

    def twins(a: int, b: int) -> bool:
        return (adj[a] & ~(1 << b)) == (adj[b] & ~(1 << a))

    def search(colors):
        nonlocal best, best_orders
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = tuple(sorted(range(n), key=colors.__getitem__))
            cert = _certificate(adj, order)
            if best is None or cert < best:
                best, best_orders = cert, [order]
            elif cert == best:
                best_orders.append(order)
            return
        reps: list[int] = []
        for v in target:
            rep = next((r for r in reps if twins(r, v)), None)
            if rep is None:
                reps.append(v)
            else:
                twin_swaps.add((rep, v))
        c0 = colors[target[0]]
        for v in reps:
            # individualised vertex sorts first inside its old cell
            split = [2 * c + (0 if (c == c0 and u == v) else 1) for u, c in enumerate(colors)]
            ranks = {c: i for i, c in enumerate(sorted(set(split)))}
            search(_refine(adj, n, [ranks[c] for c in split]))

    search(colors)

    gens = set()
    first = best_orders[0]
    for order in best_orders[1:]:
        perm = [0] * n
        for i in range(n):
            perm[first[i]] = order[i]
        gens.add(tuple(perm))
    for a, b in sorted(twin_swaps):
        perm = list(range(n))
        perm[a], perm[b] = b, a
        gens.add(tuple(perm))
    return CanonicalLabeling(_graph6_from_bits(n, best), first, tuple(sorted(gens)))


def canonical_form(G: Graph, max_n: int = CANON_MAX_N) -> bytes:
    """graph6 bytes of the canonically relabelled graph; equal iff isomorphic."""
    return canonical_labeling(G, max_n).form


def canonical_graph(G: Graph) -> Graph:
    lab = canonical_labeling(G)
    pos = {v: i for i, v in enumerate(lab.order)}
    return G.relabel([pos[v] for v in range(G.n)])


def automorphisms(G: Graph, max_n: int = CANON_MAX_N) -> list[tuple[int, ...]]:
    """Generating set of Aut(G); each permutation maps vertex i to perm[i]."""
    return list(canonical_labeling(G, max_n).generators)


def is_automorphism(G: Graph, perm) -> bool:
    if sorted(perm) != list(range(G.n)):
        return False
    return all(G.has_edge(perm[i], perm[j]) for i, j in G.edges)


def group_elements(generators, n: int, limit: int = 1_000_000) -> set[tuple[int, ...]]:
    """Closure of the generators under composition (small groups only)."""
    identity = tuple(range(n))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = tuple(s[g[i]] for i in range(n))
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
                    if len(elems) > limit:
                        raise RuntimeError("automorphism group larger than limit")
        frontier = nxt
    return elems


def brute_force_isomorphic(G: Graph, H: Graph) -> bool:
    """Exhaustive isomorphism test; only for tiny graphs."""
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return any(G.relabel(p) == H for p in permutations(range(G.n)))
