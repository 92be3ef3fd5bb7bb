"""Immutable simple graphs, named bicyclic constructions and the edge moves
used to push a bicyclic graph towards larger Estrada index.

Vertices are always ``0..n-1``. Adjacency is kept both as sorted neighbour
tuples and as integer bitmasks (bit ``u`` of ``adj[v]`` set iff ``uv`` is an
edge), which is what the walk and canonical-labeling code iterate over.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph data or an operation whose preconditions do not hold."""


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``. Never mutated."""

    __slots__ = ("_n", "_edges", "_adj", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        if n > MAX_VERTICES:
            raise GraphError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        n = int(n)
        seen: set[tuple[int, int]] = set()
        adj = [0] * n
        for e in edges:
            i, j = (int(x) for x in e)
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge {{{i},{j}}} has an endpoint outside 0..{n - 1}")
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            p = _pair(i, j)
            if p in seen:
                raise GraphError(f"duplicate edge {{{p[0]},{p[1]}}}")
            seen.add(p)
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._n = n
        self._edges = frozenset(seen)
        self._adj = tuple(adj)
        self._nbrs = tuple(
            tuple(u for u in range(n) if (mask >> u) & 1) for mask in adj
        )
        self._hash = hash((n, self._edges))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, one per vertex."""
        return self._adj

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    def max_degree(self) -> int:
        return max(self.degrees())

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool((self._adj[i] >> j) & 1)

    def matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=dtype)
        for i, j in self._edges:
            a[i, j] = a[j, i] = 1
        return a

    def is_connected(self) -> bool:
        full = (1 << self._n) - 1
        reach = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self._adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reach
            reach |= nxt
        return reach == full

    def relabel(self, perm) -> "Graph":
        """Graph with vertex ``i`` renamed ``perm[i]``."""
        return Graph(self._n, ((perm[i], perm[j]) for i, j in self._edges))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_list()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def build_infty(p: int, q: int, l: int) -> Graph:
    """Cycles ``C_p`` and ``C_q`` joined by a path with ``l`` vertices.

    ``C_p`` occupies vertices ``0..p-1`` and the connecting path starts at
    vertex 0. With ``l == 1`` the two cycles share vertex 0.
    """
    if p < 3 or q < 3 or l < 1:
        raise GraphError(f"infinity graph needs p, q >= 3 and l >= 1, got ({p},{q},{l})")
    edges = [(i, (i + 1) % p) for i in range(p)]
    nxt = p
    anchor = 0
    for _ in range(l - 1):
        edges.append((anchor, nxt))
        anchor = nxt
        nxt += 1
    ring = [anchor] + list(range(nxt, nxt + q - 1))
    edges += [(ring[i], ring[(i + 1) % q]) for i in range(q)]
    return Graph(nxt + q - 1, edges)


def build_theta(p: int, q: int, l: int) -> Graph:
    """Three internally disjoint paths of lengths p, q, l between vertices 0 and 1.

    Parameters may come in any order; paths are laid out longest first.
    """
    lengths = sorted((p, q, l), reverse=True)
    if lengths[2] < 1:
        raise GraphError(f"theta path lengths must be >= 1, got ({p},{q},{l})")
    if lengths[1] == 1:
        raise GraphError("at most one theta path may have length 1")
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def coalesce_with_map(G: Graph, u: int, H: Graph, w: int) -> tuple[Graph, dict[int, int]]:
    """Identify ``u`` of G with ``w`` of H.

    G keeps its labels; the remaining vertices of H follow in their original
    order. Returns the new graph and the label map for H.
    """
    if not (0 <= u < G.n and 0 <= w < H.n):
        raise GraphError("coalescence vertex outside its graph")
    hmap = {w: u}
    nxt = G.n
    for x in range(H.n):
        if x != w:
            hmap[x] = nxt
            nxt += 1
    edges = list(G.edges) + [(hmap[a], hmap[b]) for a, b in H.edges]
    return Graph(nxt, edges), hmap


def coalesce(G: Graph, u: int, H: Graph, w: int) -> Graph:
    return coalesce_with_map(G, u, H, w)[0]


def attach_pendants(G: Graph, v: int, m: int) -> Graph:
    """Hang ``m`` new leaves (labels ``G.n..G.n+m-1``) on vertex ``v``."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} not in graph")
    if m < 0:
        raise GraphError("pendant count must be non-negative")
    if G.n + m > MAX_VERTICES:
        raise GraphError(f"result would exceed {MAX_VERTICES} vertices")
    if m == 0:
        return G
    return Graph(G.n + m, list(G.edges) + [(v, G.n + i) for i in range(m)])


def build_g1(n: int) -> Graph:
    """K4 minus an edge with ``n-4`` leaves on the degree-3 vertex 0."""
    if n < 4:
        raise GraphError("G1 needs n >= 4")
    return attach_pendants(build_theta(2, 2, 1), 0, n - 4)


def build_g2(n: int) -> Graph:
    """K_{2,3} with ``n-5`` leaves on the degree-3 vertex 0."""
    if n < 5:
        raise GraphError("G2 needs n >= 5")
    return attach_pendants(build_theta(2, 2, 2), 0, n - 5)


#: label of the high-degree vertex in build_g1 / build_g2
HUB = 0


def subgraph_delete(
    G: Graph, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()
) -> tuple[Graph, dict[int, int]]:
    """Remove vertices (with incident edges) and edges; relabel survivors in order.

    Returns ``(graph, old_to_new)``.
    """
    dead_v = set(vertices)
    for v in dead_v:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph")
    dead_e = set()
    for i, j in edges:
        if not G.has_edge(i, j):
            raise GraphError(f"edge {{{i},{j}}} not in graph")
        dead_e.add(_pair(i, j))
    keep = [v for v in range(G.n) if v not in dead_v]
    if not keep:
        raise GraphError("cannot delete every vertex")
    relabel = {v: k for k, v in enumerate(keep)}
    new_edges = [
        (relabel[i], relabel[j])
        for i, j in G.edges
        if i in relabel and j in relabel and (i, j) not in dead_e
    ]
    return Graph(len(keep), new_edges), relabel


def induced_subgraph(G: Graph, keep: Iterable[int]) -> Optional[tuple[Graph, dict[int, int]]]:
    """Subgraph induced by ``keep``; ``None`` when ``keep`` is empty."""
    keep = sorted(set(keep))
    if not keep:
        return None
    return subgraph_delete(G, [v for v in range(G.n) if v not in set(keep)])


def add_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(G.n, list(G.edges) + list(edges))


def add_isolated(G: Graph, m: int) -> Graph:
    return Graph(G.n + m, G.edges)


def edge_rotation(G: Graph, t: int, v: int, w: int) -> Graph:
    """Replace edge ``tv`` by ``tw``."""
    if len({t, v, w}) != 3:
        raise GraphError("rotation needs three distinct vertices")
    if not G.has_edge(t, v):
        raise GraphError(f"{{{t},{v}}} is not an edge")
    if G.has_edge(t, w):
        raise GraphError(f"{{{t},{w}}} is already an edge")
    return Graph(G.n, [e for e in G.edges if e != _pair(t, v)] + [(t, w)])


def move_neighbors(G: Graph, src: int, dst: int, targets: Iterable[int]) -> Graph:
    """Re-attach the edges ``src-x`` (x in targets) to ``dst``."""
    targets = set(targets)
    edges = []
    for i, j in G.edges:
        if i == src and j in targets:
            edges.append((dst, j))
        elif j == src and i in targets:
            edges.append((i, dst))
        else:
            edges.append((i, j))
    return Graph(G.n, edges)


def cycles_through(G: Graph, v: int) -> list[tuple[int, ...]]:
    """All simple cycles (length >= 3) through ``v``.

    Each cycle is rotated to start at its smallest vertex and oriented so the
    second entry is the smaller of the two neighbours of that vertex.
    """
    found: set[tuple[int, ...]] = set()
    path = [v]
    on_path = 1 << v

    def canon(cyc: list[int]) -> tuple[int, ...]:
        k = cyc.index(min(cyc))
        rot = cyc[k:] + cyc[:k]
        rev = [rot[0]] + rot[1:][::-1]
        return tuple(min(rot, rev))

    def dfs(x: int) -> None:
        nonlocal on_path
        for y in G.neighbors(x):
            if y == v:
                if len(path) >= 3:
                    found.add(canon(path))
            elif not (on_path >> y) & 1:
                path.append(y)
                on_path |= 1 << y
                dfs(y)
                on_path &= ~(1 << y)
                path.pop()

    dfs(v)
    return sorted(found, key=lambda c: (len(c), c))


# -- structure -------------------------------------------------------------


@dataclass(frozen=True)
class KernelDescriptor:
    """Shape of the 2-core of a bicyclic graph.

    ``params`` is normalised: ``(p, q, l)`` with ``p <= q`` for ``infinity``
    (the connecting path keeps ``l`` vertices) and ``p >= q >= l`` for
    ``theta``.
    """

    kind: str
    params: tuple[int, int, int]
    vertices: frozenset

    @staticmethod
    def normalize(kind: str, params) -> tuple[int, int, int]:
        p, q, l = params
        if kind == "infinity":
            return (min(p, q), max(p, q), l)
        if kind == "theta":
            a, b, c = sorted(params, reverse=True)
            return (a, b, c)
        raise GraphError(f"unknown kernel kind {kind!r}")

    def matches(self, kind: str, params) -> bool:
        return self.kind == kind and self.params == self.normalize(kind, params)

    @property
    def cycle_lengths(self) -> tuple[int, int]:
        """The two cycle lengths (p, q) of the class containing this kernel.

        For theta(a, b, c) these are the cycles through the shortest path,
        ``(a + c, b + c)``.
        """
        a, b, c = self.params
        if self.kind == "infinity":
            return (b, a)
        return (a + c, b + c)


@dataclass(frozen=True)
class Classification:
    connected: bool
    bicyclic: bool
    kernel: Optional[KernelDescriptor]


def two_core(G: Graph) -> set[int]:
    """Vertices left after repeatedly deleting vertices of degree <= 1."""
    deg = G.degrees()
    alive = set(range(G.n))
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in G.neighbors(v):
            if u in alive:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    return alive


def _kernel(G: Graph, core: set[int]) -> KernelDescriptor:
    deg = {v: sum(1 for u in G.neighbors(v) if u in core) for v in core}
    hubs = sorted(v for v in core if deg[v] > 2)
    verts = frozenset(core)

    def branch(start: int, first: int) -> tuple[int, int]:
        # walk along degree-2 vertices; return (end hub, length)
        prev, cur, length = start, first, 1
        while deg[cur] == 2:
            nxt = next(u for u in G.neighbors(cur) if u in core and u != prev)
            prev, cur = cur, nxt
            length += 1
        return cur, length

    if len(hubs) == 1 and deg[hubs[0]] == 4:
        h = hubs[0]
        loops = []
        used = set()
        for x in G.neighbors(h):
            if x in core and x not in used:
                # the two ends of each loop are both neighbours of h
                prev, cur, length = h, x, 1
                while cur != h:
                    nxt = next(u for u in G.neighbors(cur) if u in core and u != prev)
                    prev, cur = cur, nxt
                    length += 1
                used.update({x, prev})
                loops.append(length)
        p, q = loops
        return KernelDescriptor("infinity", KernelDescriptor.normalize("infinity", (p, q, 1)), verts)
    if len(hubs) == 2 and deg[hubs[0]] == deg[hubs[1]] == 3:
        a, b = hubs
        ends = [branch(a, x) for x in G.neighbors(a) if x in core]
        loops = [ln for end, ln in ends if end == a]
        if loops:
            # infinity with l >= 2: the loop at a is traced from both of its ends
            loop_a = loops[0]
            path_len = next(ln for end, ln in ends if end == b)
            loop_b = next(
                ln for end, ln in (branch(b, x) for x in G.neighbors(b) if x in core) if end == b
            )
            return KernelDescriptor(
                "infinity",
                KernelDescriptor.normalize("infinity", (loop_a, loop_b, path_len + 1)),
                verts,
            )
        lengths = [ln for _, ln in ends]
        return KernelDescriptor("theta", KernelDescriptor.normalize("theta", lengths), verts)
    raise GraphError("2-core is neither an infinity nor a theta graph")


def classify(G: Graph) -> Classification:
    connected = G.is_connected()
    bicyclic = connected and G.m == G.n + 1
    kernel = _kernel(G, two_core(G)) if bicyclic else None
    return Classification(connected, bicyclic, kernel)


def kernel_hubs(G: Graph, kernel: KernelDescriptor) -> list[int]:
    """Kernel vertices of kernel-degree >= 3 (one for infinity(p,q,1), else two)."""
    core = kernel.vertices
    return sorted(
        v for v in core if sum(1 for u in G.neighbors(v) if u in core) > 2
    )
