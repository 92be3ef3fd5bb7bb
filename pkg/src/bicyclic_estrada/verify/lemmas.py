"""Instance batteries for the walk-comparison statements.

Every check compares exact walk tables up to a cutoff K, so a confirmed
dominance claim means "holds for k = 1..K". Vertex roles are found by
searching all tuples that meet the degree and adjacency hypotheses.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Optional

from ..canon import automorphisms, group_elements
from ..enumerate import enumerate_connected
from ..graph import (
    Graph,
    add_edges,
    add_isolated,
    attach_pendants,
    build_theta,
    coalesce,
    coalesce_with_map,
    cycle_graph,
    path_graph,
    two_core,
)
from ..io import encode_graph6
from ..spectra import EIG_TOL, compare_estrada
from ..walks import (
    DEFAULT_K,
    DOMINATED,
    DOMINATES,
    EQUAL,
    dominance,
)
from .report import (
    CONFIRMED,
    INAPPLICABLE,
    REFUTED,
    UNDETERMINED,
    Instance,
    VerificationReport,
    timed,
)


def _g6(G: Graph) -> str:
    return encode_graph6(G).decode("ascii")


def _ee_outcome(sign: int) -> str:
    return {1: CONFIRMED, -1: REFUTED, 0: UNDETERMINED}[sign]


def vertex_orbits(G: Graph) -> list[list[int]]:
    group = group_elements(automorphisms(G), G.n)
    seen: set[int] = set()
    orbits = []
    for v in range(G.n):
        if v in seen:
            continue
        orb = sorted({g[v] for g in group})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def orbit_reps(G: Graph) -> list[int]:
    return [orb[0] for orb in vertex_orbits(G)]


def swapping_automorphism(G: Graph, u: int, v: int) -> Optional[tuple[int, ...]]:
    """An automorphism exchanging u and v (an involution when one exists)."""
    group = sorted(g for g in group_elements(automorphisms(G), G.n) if g[u] == v and g[v] == u)
    if not group:
        return None
    invol = [g for g in group if all(g[g[i]] == i for i in range(G.n))]
    return (invol or group)[0]


# -- edge additions ----------------------------------------------------------


def edge_addition_instance(
    G: Graph, u: int, v: int, w_list: Iterable[int], K: int = DEFAULT_K,
    tol: float = EIG_TOL, label: str = "",
) -> Instance:
    """Check one instance of: (G;u,u) < (G;v,v) and (G;u,w) <= (G;v,w) for
    all w imply EE(G + {uw}) < EE(G + {vw})."""
    w_list = list(w_list)
    for w in w_list:
        if w in (u, v) or G.has_edge(u, w) or G.has_edge(v, w):
            raise ValueError(f"w={w} must be distinct from and non-adjacent to u={u}, v={v}")
    desc = label or f"G={_g6(G)} u={u} v={v} w={w_list}"
    diag = dominance(G, u, u, G, v, v, K)
    if diag.classification != DOMINATED:
        return Instance(f"{desc}: hypothesis (G;u,u) < (G;v,v) fails ({diag.classification})", INAPPLICABLE, None, K)
    for w in w_list:
        off = dominance(G, u, w, G, v, w, K)
        if not off.weakly_dominated:
            return Instance(f"{desc}: hypothesis (G;u,{w}) <= (G;v,{w}) fails ({off.classification})", INAPPLICABLE, None, K)
    Gu = add_edges(G, [(u, w) for w in w_list])
    Gv = add_edges(G, [(v, w) for w in w_list])
    cmp = compare_estrada(Gu, Gv, tol=tol)
    outcome = _ee_outcome(cmp.sign)
    witness = None
    if outcome == REFUTED:
        witness = {"graph": _g6(G), "u": u, "v": v, "w": w_list}
    return Instance(f"{desc}: EE(G_u) < EE(G_v)", outcome, cmp.margin, cmp.K, witness)


def verify_lemma_per2(G: Graph, u: int, v: int, w_list, K: int = DEFAULT_K, tol: float = EIG_TOL) -> VerificationReport:
    report = VerificationReport("edge-addition")
    with timed(report):
        report.instances.append(edge_addition_instance(G, u, v, w_list, K, tol))
    return report


def theta222_with_pendants(m) -> Graph:
    """theta(2,2,2) (hubs 0,1; middles 2,3,4) with m[i] leaves on vertex i."""
    G = build_theta(2, 2, 2)
    for vertex, count in enumerate(m):
        G = attach_pendants(G, vertex, count)
    return G


def _migration_instance(m, src: int, dst: int, K: int, tol: float) -> Instance:
    """Move all leaves of ``src`` onto ``dst`` in theta(2,2,2) with leaf counts m."""
    moved = m[src]
    base = list(m)
    base[src] = 0
    H = theta222_with_pendants(base)
    first = H.n
    H = add_isolated(H, moved)
    label = f"theta(2,2,2) leaves {tuple(m)}: move {moved} leaves from {src} to {dst}"
    return edge_addition_instance(H, src, dst, range(first, first + moved), K, tol, label)


def edge_addition_battery(K: int = DEFAULT_K, tol: float = EIG_TOL) -> VerificationReport:
    report = VerificationReport("edge-addition")
    with timed(report):
        add = report.instances.append
        add(edge_addition_instance(path_graph(5), 0, 2, [4], K, tol, "P5 u=end v=centre w=[other end]"))
        add(edge_addition_instance(path_graph(4), 0, 1, [3], K, tol, "P4 u=end v=neighbour w=[far end]"))
        add(edge_addition_instance(path_graph(5), 0, 4, [2], K, tol, "P5 symmetric ends u=0 v=4 w=[2]"))
        # the leaf migrations that collapse theta(2,2,2)+leaves onto one hub
        for m1, m2, m3 in product(range(0, 4), range(1, 4), range(0, 3)):
            if m1 >= 1 and m1 + m2 + m3 <= 5:
                add(_migration_instance((m1, m2, m3, 0, 0), 1, 0, K, tol))
        for m3, m4, m1 in product(range(1, 3), range(1, 3), range(0, 2)):
            add(_migration_instance((m1, 0, m3, m4, 0), 3, 2, K, tol))
        for m1, m3 in product(range(0, 3), range(1, 3)):
            add(_migration_instance((m1, 0, m3, 0, 0), 2, 0, K, tol))
    return report


# -- coalescence -------------------------------------------------------------


def verify_coalescence_lemmas(K: int = DEFAULT_K, max_order: int = 6, tol: float = EIG_TOL) -> VerificationReport:
    """Coalescing a nontrivial H at the walk-dominant vertex gives larger EE;
    moving a graph from the pendant end of a pendant edge to the other end
    increases EE."""
    report = VerificationReport("coalescence")
    attach = [(path_graph(2), 0, "K2"), (path_graph(3), 0, "P3@end"), (path_graph(3), 1, "P3@centre"),
              (cycle_graph(3), 0, "C3")]
    with timed(report):
        for order in range(2, max_order + 1):
            for gc in enumerate_connected(order):
                G = gc.graph
                reps = orbit_reps(G)
                for u, v in product(reps, reps):
                    if u == v:
                        continue
                    if dominance(G, u, u, G, v, v, K).classification != DOMINATES:
                        continue
                    for H, w, hname in attach:
                        cmp = compare_estrada(coalesce(G, v, H, w), coalesce(G, u, H, w), tol=tol)
                        outcome = _ee_outcome(cmp.sign)
                        report.add(
                            f"dominant-vertex coalescence G={_g6(G)} u={u} v={v} H={hname}",
                            outcome, cmp.margin, cmp.K,
                            {"graph": _g6(G), "u": u, "v": v, "H": hname} if outcome == REFUTED else None,
                        )
        hosts = [gc.graph for order in range(2, 5) for gc in enumerate_connected(order)]
        carriers = [gc.graph for order in range(3, 6) for gc in enumerate_connected(order)]
        for H1 in hosts:
            for w in orbit_reps(H1):
                for H2 in carriers:
                    for u, v in _pendant_edges(H2):
                        cmp = compare_estrada(coalesce(H1, w, H2, v), coalesce(H1, w, H2, u), tol=tol)
                        outcome = _ee_outcome(cmp.sign)
                        report.add(
                            f"pendant-edge coalescence H1={_g6(H1)} w={w} H2={_g6(H2)} u={u} v={v}",
                            outcome, cmp.margin, cmp.K,
                            {"H1": _g6(H1), "w": w, "H2": _g6(H2), "u": u, "v": v} if outcome == REFUTED else None,
                        )
    return report


def _pendant_edges(H: Graph) -> list[tuple[int, int]]:
    """(u, v) with v a leaf hanging on u, one per orbit of leaves."""
    out = []
    for orb in vertex_orbits(H):
        v = orb[0]
        if H.degree(v) == 1:
            out.append((H.neighbors(v)[0], v))
    return out


# -- swapping automorphisms and their consequences -----------------------------


def _twin_coalescence(H1: Graph, u: int, v: int, sigma, H2: Graph, w: int):
    """(H1(u) o H2(w))(v) o H2'(w') plus sigma extended to it and the label
    sets of the two copies of H2."""
    G1, m1 = coalesce_with_map(H1, u, H2, w)
    G, m2 = coalesce_with_map(G1, v, H2, w)
    ext = {x: sigma[x] for x in range(H1.n)}
    for x in range(H2.n):
        if x != w:
            ext[m1[x]] = m2[x]
            ext[m2[x]] = m1[x]
    near_u = {m1[x] for x in range(H2.n) if x != w}
    near_v = {m2[x] for x in range(H2.n) if x != w}
    return G, ext, near_u, near_v


def _perturbations(G: Graph, H1: Graph, u: int, v: int, near_v: set[int]):
    """Graphs obtained by enlarging H1 at v (not u) or the copy of H2 at v."""
    for x in range(H1.n):
        if x not in (u, v) and not G.has_edge(v, x):
            yield f"H1+edge({v},{x})", add_edges(G, [(v, x)])
    for y in sorted(near_v | {v}):
        yield f"H2'+leaf@{y}", attach_pendants(G, y, 1)
    copy = sorted(near_v | {v})
    for i, a in enumerate(copy):
        for b in copy[i + 1:]:
            if not G.has_edge(a, b):
                yield f"H2'+edge({a},{b})", add_edges(G, [(a, b)])


def _swap_automorphism_family(report: VerificationReport, K: int) -> None:
    hosts = [gc.graph for order in range(2, 5) for gc in enumerate_connected(order)]
    hosts += [path_graph(5), cycle_graph(5), cycle_graph(6), build_theta(2, 2, 1), build_theta(2, 2, 2),
              build_theta(3, 2, 1)]
    attach = [(path_graph(2), 0, "K2"), (path_graph(3), 0, "P3@end"), (path_graph(3), 1, "P3@centre"),
              (cycle_graph(3), 0, "C3")]
    for H1 in hosts:
        for u in range(H1.n):
            for v in range(u + 1, H1.n):
                sigma = swapping_automorphism(H1, u, v)
                if sigma is None:
                    continue
                for H2, w, hname in attach:
                    G, ext, near_u, near_v = _twin_coalescence(H1, u, v, sigma, H2, w)
                    tag = f"H1={_g6(H1)} u={u} v={v} H2={hname}"
                    tables_equal = dominance(G, u, u, G, v, v, K).classification == EQUAL and all(
                        dominance(G, u, t, G, v, ext[t], K).classification == EQUAL
                        for t in range(G.n) if t != u
                    )
                    report.add(f"automorphism equality {tag}", CONFIRMED if tables_equal else REFUTED, None, K,
                               None if tables_equal else {"H1": _g6(H1), "u": u, "v": v, "H2": hname})
                    # strict off-diagonal claims are asserted for t on the copy of H2 at u
                    scope = sorted(near_u)
                    for pname, Gb in _perturbations(G, H1, u, v, near_v):
                        diag = dominance(Gb, u, u, Gb, v, v, K)
                        offs = {t: dominance(Gb, u, t, Gb, v, ext[t], K) for t in range(G.n) if t != u}
                        ok = diag.classification == DOMINATED and all(
                            offs[t].classification == DOMINATED for t in scope
                        )
                        report.add(
                            f"automorphism strict {tag} {pname}", CONFIRMED if ok else REFUTED, None, K,
                            None if ok else {"graph": _g6(Gb), "u": u, "v": v, "perturbation": pname},
                        )
                        extra = sorted({offs[t].classification for t in offs if t not in scope})
                        report.add(
                            f"automorphism strict {tag} {pname}: t in H1 or the copy at v "
                            f"(not asserted) gave {extra}", INAPPLICABLE, None, K,
                        )


def _unicyclic_with_stars(c: int, a: int, b: int, extra: bool) -> Graph:
    """Cycle 0..c-1; u=0 carries the star centred at v=c with a more leaves;
    w=1 carries b leaves; optionally one leaf on cycle vertex 2."""
    G = cycle_graph(c)
    G = Graph(c + 1, list(G.edges) + [(0, c)])
    G = attach_pendants(G, c, a)
    G = attach_pendants(G, 1, b)
    if extra:
        G = attach_pendants(G, 2, 1)
    return G


def unicyclic_star_roles(G: Graph) -> list[tuple[int, int, int, frozenset]]:
    """All (u, w, v, cycle) with u, w adjacent on the cycle, a star centred
    at v hanging from u by one of its leaves, a star centred at w, and
    d(w) >= d(v) + 1."""
    cyc = frozenset(two_core(G))
    if not cyc or G.m != G.n:
        return []
    out = []
    for u in sorted(cyc):
        off_u = [x for x in G.neighbors(u) if x not in cyc]
        if len(off_u) != 1:
            continue
        v = off_u[0]
        if any(G.degree(x) != 1 for x in G.neighbors(v) if x != u):
            continue
        for w in G.neighbors(u):
            if w not in cyc:
                continue
            if any(G.degree(x) != 1 for x in G.neighbors(w) if x not in cyc):
                continue
            if G.degree(w) >= G.degree(v) + 1:
                out.append((u, w, v, cyc))
    return out


def _star_on_cycle_family(report: VerificationReport, K: int) -> None:
    for c, a, extra in product((3, 4, 5, 6), (0, 1, 2), (False, True)):
        for b in (a, a + 1, a + 2):
            if extra and c == 3:
                continue
            G = _unicyclic_with_stars(c, a, b, extra)
            for u, w, v, cyc in unicyclic_star_roles(G):
                tag = f"unicyclic G={_g6(G)} u={u} w={w} v={v}"
                d1 = dominance(G, w, w, G, v, v, K)
                ok = d1.classification == DOMINATES
                report.add(f"{tag}: (G;w,w) > (G;v,v)", CONFIRMED if ok else REFUTED, None, K,
                           None if ok else {"graph": _g6(G), "u": u, "w": w, "v": v})
                near = set(G.neighbors(v)) | set(G.neighbors(w))
                reading_b = [t for t in range(G.n) if t not in near | {v, w}]
                reading_a = [t for t in range(G.n) if t not in (near | {w}) - cyc]
                res = {t: dominance(G, w, t, G, v, t, K).classification for t in set(reading_a) | set(reading_b)}
                ok = all(res[t] == DOMINATES for t in reading_b)
                report.add(f"{tag}: (G;w,t) > (G;v,t) for t outside N(v)+N(w)+{{v,w}}",
                           CONFIRMED if ok else REFUTED, None, K,
                           None if ok else {"graph": _g6(G), "u": u, "w": w, "v": v})
                failing = sorted(t for t in reading_a if res[t] != DOMINATES)
                report.add(f"{tag}: literal exclusion set (cycle vertices kept) fails at t={failing}",
                           INAPPLICABLE, None, K)


def theta22_roles(G: Graph, core: frozenset):
    """Hubs (kernel degree 3) and middles of the length-2 hub-hub paths."""
    kdeg = {x: sum(1 for y in G.neighbors(x) if y in core) for x in core}
    hubs = sorted(x for x in core if kdeg[x] == 3)
    mids = sorted(
        x for x in core if kdeg[x] == 2 and all(G.has_edge(x, h) for h in hubs)
    )
    return hubs, mids


def _theta22_leaf_family(report: VerificationReport, K: int) -> None:
    for l in (1, 2, 3):
        base = build_theta(2, 2, l)
        k = base.n
        for counts in product(range(3), repeat=k):
            if sum(counts) > 3:
                continue
            G = base
            for x, cnt in enumerate(counts):
                G = attach_pendants(G, x, cnt)
            core = frozenset(range(k))
            hubs, mids = theta22_roles(G, core)
            d = G.degree
            others_two = lambda skip: all(d(x) == 2 for x in core if x not in skip)  # noqa: E731
            tag = f"theta(2,2,{l}) leaves {counts}"
            for w in mids:
                for t in mids:
                    if w != t and d(w) > 2 and d(t) == 2:
                        cls = dominance(G, w, w, G, t, t, K).classification
                        report.add(f"{tag} (i) w={w} t={t}", CONFIRMED if cls == DOMINATES else REFUTED, None, K)
            for u, v in ((hubs[0], hubs[1]), (hubs[1], hubs[0])):
                if d(u) > 3 and d(v) == 3:
                    for w in mids:
                        if others_two({u, v, w}):
                            cls = dominance(G, u, u, G, v, v, K).classification
                            report.add(f"{tag} (ii) u={u} v={v} w={w}",
                                       CONFIRMED if cls == DOMINATES else REFUTED, None, K)
                    if others_two({u, v}):
                        for w in mids:
                            cls = dominance(G, u, u, G, w, w, K).classification
                            report.add(f"{tag} (iii) u={u} v={v} w={w}",
                                       CONFIRMED if cls == DOMINATES else REFUTED, None, K)


def theta_parameters(max_sum: int):
    for p in range(2, max_sum):
        for q in range(1, p + 1):
            for l in range(1, q + 1):
                if p + q + l <= max_sum and q >= 2:
                    yield (p, q, l)


def theta_hub_instance(p: int, q: int, l: int, K: int = DEFAULT_K) -> Instance:
    G = build_theta(p, q, l)
    same = dominance(G, 0, 0, G, 1, 1, K).classification == EQUAL
    firsts = []
    ok = same
    for w in range(2, G.n):
        dv = dominance(G, w, w, G, 0, 0, K)
        firsts.append(dv.first_strict)
        ok &= dv.classification == DOMINATED and dv.first_strict == 2
    return Instance(f"theta({p},{q},{l}): hubs tie, every other vertex strictly below from k=2",
                    CONFIRMED if ok else REFUTED, None, K,
                    None if ok else {"params": [p, q, l]})


def verify_automorphism_lemma(K: int = DEFAULT_K) -> VerificationReport:
    report = VerificationReport("automorphism")
    with timed(report):
        _swap_automorphism_family(report, K)
        _star_on_cycle_family(report, K)
        _theta22_leaf_family(report, K)
        for p, q, l in theta_parameters(12):
            report.instances.append(theta_hub_instance(p, q, l, K))
        C5 = cycle_graph(5)
        ok = all(dominance(C5, 0, 0, C5, x, x, K).classification == EQUAL for x in range(5))
        report.add("C5 vertex-transitive: all closed-walk tables equal", CONFIRMED if ok else REFUTED, None, K)
    return report
