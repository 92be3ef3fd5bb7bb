"""Campaigns for the structural moves, the G1/G2 comparison and the
exhaustive maximum search."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Optional

from ..canon import canonical_form
from ..enumerate import MAX_STRUCTURED_N, class_labels, enumerate_bicyclic, enumerate_class
from ..graph import (
    HUB,
    Graph,
    build_g1,
    build_g2,
    classify,
    edge_rotation,
    induced_subgraph,
    move_neighbors,
)
from ..io import encode_graph6
from ..spectra import (
    EIG_TOL,
    compare_estrada,
    eigenvalues,
    estrada_eig,
    estrada_moments,
    estrada_via_charpoly,
    g12_quartics,
)
from .report import CONFIRMED, INAPPLICABLE, REFUTED, UNDETERMINED, VerificationReport, timed

MIN_RUNNER_UP_GAP = 1e-6
DIRECT_REGIME_MAX = 22


def _g6(G: Graph) -> str:
    return encode_graph6(G).decode("ascii")


def _kernel_str(kernel) -> str:
    return f"{kernel.kind}{kernel.params}"


# -- candidate moves ---------------------------------------------------------


def _side(G: Graph, a: int, b: int) -> Optional[set[int]]:
    """Vertices reachable from b without using edge ab, or None if ab is not a bridge."""
    seen = {b}
    stack = [b]
    while stack:
        x = stack.pop()
        for y in G.neighbors(x):
            if x == b and y == a:
                continue
            if y == a:
                return None
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def bridge_shifts(G: Graph, core: frozenset, tree_side: bool) -> Iterator[tuple[str, Graph]]:
    """Detach everything hanging at b beyond the bridge ab and re-hang it at a.

    With ``tree_side`` the moved part must avoid the kernel (a tree deeper
    than a pendant edge); otherwise a and b are both kernel vertices.
    """
    for a, b in sorted(G.edges):
        for x, y in ((a, b), (b, a)):
            side = _side(G, x, y)
            if side is None:
                continue
            moved = [z for z in G.neighbors(y) if z != x]
            if not moved:
                continue
            if tree_side and (side & core or len(side) < 2):
                continue
            if not tree_side and not (x in core and y in core):
                continue
            yield f"shift branch at {y} onto {x}", move_neighbors(G, y, x, moved)


def rotations(G: Graph) -> Iterator[tuple[str, Graph]]:
    for t in range(G.n):
        for v in G.neighbors(t):
            for w in range(G.n):
                if w in (t, v) or G.has_edge(t, w):
                    continue
                yield f"rotate {t}{v} to {t}{w}", edge_rotation(G, t, v, w)


def leaf_migrations(G: Graph, core: frozenset) -> Iterator[tuple[str, Graph]]:
    for x in sorted(core):
        leaves = [z for z in G.neighbors(x) if G.degree(z) == 1]
        if not leaves:
            continue
        for y in sorted(core):
            if y != x:
                yield f"move {len(leaves)} leaves from {x} to {y}", move_neighbors(G, x, y, leaves)


def _is_pendant_only(G: Graph, core: frozenset) -> bool:
    return all(x in core or any(y in core for y in G.neighbors(x)) for x in range(G.n))


def prescribed_moves(G: Graph):
    """The move family G's shape calls for, as ``(case, candidates, tiers)``.

    ``candidates()`` yields ``(name, graph)``; ``tiers`` is a list of
    ``(label, accept(kernel, form))`` filters tried in order. Returns None
    for G1.
    """
    kernel = classify(G).kernel
    core = kernel.vertices
    kind, (p, q, l) = kernel.kind, kernel.params
    if not _is_pendant_only(G, core):
        return "deep tree", lambda: bridge_shifts(G, core, True), [("any", lambda k, f: True)]
    if kind == "infinity" and l >= 2:
        return "infinity l>=2", lambda: bridge_shifts(G, core, False), [
            ("shorter connecting path", lambda k, f: k.matches("infinity", (p, q, l - 1)))]
    if kind == "infinity":
        return "infinity l=1", lambda: rotations(G), [
            ("theta(p-1,q-1,1)", lambda k, f: k.matches("theta", (p - 1, q - 1, 1)))]
    smaller = ("smaller theta kernel", lambda k, f: k.kind == "theta" and len(k.vertices) < len(core))
    if l >= 2 and p >= 3:
        return "theta l>=2", lambda: rotations(G), [
            ("theta(p'-1,q'-1,l')", lambda k, f: k.matches("theta", (p - 1, q - 1, l))), smaller]
    if l == 1 and p >= 3:
        return "theta l=1", lambda: rotations(G), [
            ("theta(p-1,q-1,2)", lambda k, f: k.matches("theta", (p - 1, q - 1, 2))), smaller]
    form = canonical_form(G)
    g1 = canonical_form(build_g1(G.n))
    if form == g1:
        return None
    if G.n >= 5 and form == canonical_form(build_g2(G.n)):
        return "G2", lambda: rotations(G), [("G1", lambda k, f: f == g1)]
    return "leaves on theta(2,2,*)", lambda: leaf_migrations(G, core), [
        ("same kernel", lambda k, f: k.kind == kind and k.params == (p, q, l))]


def _find_improvement(G: Graph, tol: float, K: Optional[int]):
    """``(case, tier, name, H, cmp)`` for the first decided improvement;
    ``name`` is None when none was found (``cmp`` then holds an undecided
    comparison, if any)."""
    plan = prescribed_moves(G)
    if plan is None:
        return None
    case, candidates, tiers = plan
    undecided = None
    for label, accept in tiers:
        seen = set()
        for name, H in candidates():
            cls = classify(H)
            if not cls.bicyclic:
                continue
            form = canonical_form(H)
            if form in seen or not accept(cls.kernel, form):
                continue
            seen.add(form)
            cmp = compare_estrada(G, H, K=K, tol=tol)
            if cmp.sign > 0:
                return case, label, name, H, cmp
            if cmp.sign == 0 and undecided is None:
                undecided = cmp
    return case, None, None, None, undecided


def verify_transformations(n: int, K: Optional[int] = None, tol: float = EIG_TOL,
                           classes=None) -> VerificationReport:
    """Every bicyclic G of order n other than G1 admits the move its shape
    calls for that strictly increases EE."""
    if not 4 <= n <= 9:
        raise ValueError("transformation campaign supports 4 <= n <= 9")
    report = VerificationReport("transformations")
    with timed(report):
        classes = classes if classes is not None else enumerate_bicyclic(n)
        for gc in classes:
            G = gc.graph
            found = _find_improvement(G, tol, K)
            if found is None:
                continue
            case, tier, name, H, cmp = found
            kernel = classify(G).kernel
            desc = f"G={_g6(G)} kernel={_kernel_str(kernel)} [{case}]"
            if name is not None:
                report.add(f"{desc}: {name} -> {_g6(H)} kernel={_kernel_str(classify(H).kernel)} ({tier})",
                           CONFIRMED, cmp.margin, cmp.K)
            elif cmp is not None:
                report.add(f"{desc}: no decided improvement", UNDETERMINED, cmp.margin, cmp.K)
            else:
                report.add(f"{desc}: no improving move", REFUTED, None, K, {"graph": _g6(G), "case": case})
    return report


# -- G1 versus G2 -------------------------------------------------------------


def _sqrt_lt(x: Fraction, square: Fraction) -> bool:
    """x < sqrt(square), exactly."""
    return x < 0 or x * x < square


def _sqrt_gt(x: Fraction, square: Fraction) -> bool:
    return x > 0 and x * x > square


def g1_g2_direct(n: int, tol: float = EIG_TOL, K: Optional[int] = None):
    cmp = compare_estrada(build_g2(n), build_g1(n), K=K, tol=tol)
    f, g = g12_quartics(n)
    c1 = estrada_via_charpoly(f.shift(n - 4))
    c2 = estrada_via_charpoly(g.shift(n - 4))
    return cmp, c1, c2


def g1_g2_chain(n: int) -> dict[str, tuple[bool, float]]:
    """The five inequalities used for large n, each with its slack."""
    f, g = g12_quartics(n)
    lam1_lo, lam1_hi, _ = f.real_roots()[-1]
    lam2_lo, lam2_hi, _ = g.real_roots()[-1]
    s1 = math.sqrt(n - 1)
    s2 = math.sqrt(n - 1.5)
    ee1 = estrada_via_charpoly(f.shift(n - 4))
    ee2 = estrada_via_charpoly(g.shift(n - 4))
    bound1 = math.exp(s1) + (n - 3) + math.exp(-math.sqrt(2))
    bound2 = math.exp(s2) + math.exp(math.sqrt(3)) + (n - 3) + math.exp(-math.sqrt(3))
    rel = 1e-12  # float rounding allowance on the closed-form bounds
    return {
        "lambda1(G1) > sqrt(n-1)": (_sqrt_gt(lam1_lo, Fraction(n - 1)), float(lam1_lo) - s1),
        "lambda1(G2) < sqrt(n-3/2)": (_sqrt_lt(lam2_hi, Fraction(2 * n - 3, 2)), s2 - float(lam2_hi)),
        "EE(G1) > e^sqrt(n-1) + (n-3) + e^-sqrt2": (ee1.lo > bound1 * (1 + rel), ee1.lo - bound1),
        "EE(G2) < e^sqrt(n-3/2) + e^sqrt3 + (n-3) + e^-sqrt3": (ee2.hi < bound2 * (1 - rel), bound2 - ee2.hi),
        "e^sqrt(n-1) > e^sqrt(n-3/2) + e^sqrt3": (
            math.exp(s1) > (math.exp(s2) + math.exp(math.sqrt(3))) * (1 + rel),
            math.exp(s1) - math.exp(s2) - math.exp(math.sqrt(3)),
        ),
    }


def verify_g1_vs_g2(n_lo: int, n_hi: int, tol: float = EIG_TOL, K: Optional[int] = None) -> VerificationReport:
    """EE(G1(n)) > EE(G2(n)): direct three-route comparison up to n = 22,
    the five-inequality bound chain from n = 23 on."""
    if not 5 <= n_lo <= n_hi:
        raise ValueError("need 5 <= n_lo <= n_hi")
    report = VerificationReport("g1-vs-g2")
    with timed(report):
        for n in range(n_lo, n_hi + 1):
            if n <= DIRECT_REGIME_MAX:
                cmp, c1, c2 = g1_g2_direct(n, tol, K)
                poly_ok = c1.lo > c2.hi
                outcome = {1: CONFIRMED, -1: REFUTED, 0: UNDETERMINED}[cmp.sign]
                if outcome == CONFIRMED and not poly_ok:
                    outcome = UNDETERMINED
                report.add(
                    f"n={n}: EE(G1)-EE(G2) eig={cmp.eig_gap:.12g} moments={cmp.mom_gap:.12g} "
                    f"charpoly={c1.value - c2.value:.12g}",
                    outcome, cmp.margin, cmp.K,
                    {"n": n} if outcome == REFUTED else None,
                )
            if n > DIRECT_REGIME_MAX:
                for name, (ok, slack) in g1_g2_chain(n).items():
                    report.add(f"n={n}: {name}", CONFIRMED if ok else REFUTED, slack, None,
                               None if ok else {"n": n, "inequality": name})
    return report


def hub_deleted_spectrum(n: int, which: int = 1, tol: float = EIG_TOL) -> tuple[float, ...]:
    G = build_g1(n) if which == 1 else build_g2(n)
    sub, _ = induced_subgraph(G, [x for x in range(G.n) if x != HUB])
    return eigenvalues(sub, tol).eigenvalues


# -- the maximum --------------------------------------------------------------


def _route_values(classes, route: str, K: Optional[int], tol: float):
    if route == "eigensolver":
        return [estrada_eig(gc.graph, tol) for gc in classes]
    return [estrada_moments(gc.graph, K) for gc in classes]


def verify_theorem_max(n: int, K: Optional[int] = None, tol: float = EIG_TOL,
                       classes=None, class_checks: bool = True) -> VerificationReport:
    """G1(n) is the unique EE maximiser among bicyclic graphs of order n."""
    if not 4 <= n <= MAX_STRUCTURED_N:
        raise ValueError(f"maximum search supports 4 <= n <= {MAX_STRUCTURED_N}")
    report = VerificationReport("max-bicyclic")
    with timed(report):
        classes = classes if classes is not None else enumerate_bicyclic(n)
        g1 = canonical_form(build_g1(n))
        for route in ("eigensolver", "moments"):
            est = _route_values(classes, route, K, tol)
            order = sorted(range(len(classes)), key=lambda i: -est[i].value)
            top = order[0]
            is_g1 = classes[top].form == g1
            if len(order) == 1:
                report.add(f"n={n} {route}: single class, G1", CONFIRMED if is_g1 else REFUTED, None, K)
                continue
            rest_hi = max(est[i].hi for i in order[1:])
            gap = est[top].value - est[order[1]].value
            decided = est[top].lo > rest_hi and gap > MIN_RUNNER_UP_GAP
            if not is_g1:
                outcome = REFUTED if decided else UNDETERMINED
            else:
                outcome = CONFIRMED if decided else UNDETERMINED
            report.add(
                f"n={n} {route}: argmax {'is' if is_g1 else 'is not'} G1, runner-up "
                f"{_g6(classes[order[1]].graph)} gap {gap:.12g}",
                outcome, gap, K if route == "moments" else None,
                {"argmax": _g6(classes[top].graph)} if outcome == REFUTED else None,
            )
        runner = max((gc for gc in classes if gc.form != g1), key=lambda gc: estrada_eig(gc.graph, tol).value,
                     default=None)
        if runner is not None:
            cmp = compare_estrada(runner.graph, build_g1(n), K=K, tol=tol)
            outcome = {1: CONFIRMED, -1: REFUTED, 0: UNDETERMINED}[cmp.sign]
            report.add(f"n={n}: dual-route G1 over runner-up {_g6(runner.graph)}", outcome, cmp.margin, cmp.K)
        if class_checks:
            _class_maxima(report, n, classes, K, tol, "infinity")
    return report


def verify_theta_class_maxima(n: int, K: Optional[int] = None, tol: float = EIG_TOL,
                              classes=None) -> VerificationReport:
    """Within each theta class the maximiser has kernel theta(p-1,q-1,1) or
    theta(2,2,2). This within-class form is refuted from n = 7 on; classes
    where no member has a claimed kernel are reported inapplicable."""
    report = VerificationReport("theta-class-maxima")
    with timed(report):
        classes = classes if classes is not None else enumerate_bicyclic(n)
        _class_maxima(report, n, classes, K, tol, "theta")
    return report


def _claimed_kernel(kernel) -> bool:
    if kernel.kind == "infinity":
        return kernel.params[2] == 1
    return kernel.params[2] == 1 or kernel.params == (2, 2, 2)


def _class_maxima(report: VerificationReport, n: int, classes, K, tol, which: str) -> None:
    """Maximisers inside each class have the kernel shapes claimed for them
    and carry only pendant edges."""
    for kind, p, q in class_labels(n):
        if kind != which:
            continue
        members = enumerate_class(n, kind, p, q, classes)
        if not members:
            continue
        if kind == "infinity":
            claim = f"infinity({min(p, q)},{max(p, q)},1)"
        else:
            claim = f"theta({p - 1},{q - 1},1) or theta(2,2,2)"
        label = f"n={n} class {kind}({p},{q})"
        # a claimed kernel too large for order n makes the class vacuous
        if not any(_claimed_kernel(classify(gc.graph).kernel) for gc in members):
            report.add(f"{label}: no member has kernel {claim}", INAPPLICABLE, None, K)
            continue
        ranked = sorted(members, key=lambda gc: -estrada_eig(gc.graph, tol).value)
        best = ranked[0].graph
        kernel = classify(best).kernel
        shape_ok = _claimed_kernel(kernel) and _is_pendant_only(best, kernel.vertices)
        if len(ranked) > 1:
            cmp = compare_estrada(ranked[1].graph, best, K=K, tol=tol)
            decided, margin, kk = cmp.sign > 0, cmp.margin, cmp.K
        else:
            decided, margin, kk = True, None, K
        if not decided:
            outcome = UNDETERMINED
        else:
            outcome = CONFIRMED if shape_ok else REFUTED
        report.add(
            f"{label}: maximiser kernel {_kernel_str(kernel)}, expected {claim} plus leaves",
            outcome, margin, kk, {"graph": _g6(best), "class": [kind, p, q]} if outcome == REFUTED else None,
        )


def stability_check(n: int, classes=None) -> VerificationReport:
    """The argmax does not move with the moment cutoff or eigensolver tolerance."""
    report = VerificationReport("max-bicyclic-stability")
    with timed(report):
        classes = classes if classes is not None else enumerate_bicyclic(n)
        for K in (40, 60):
            for tol in (1e-10, 1e-12):
                sub = verify_theorem_max(n, K=K, tol=tol, classes=classes, class_checks=False)
                report.add(f"n={n} K={K} tol={tol:g}: {sub.outcome}", sub.outcome, None, K)
    return report
