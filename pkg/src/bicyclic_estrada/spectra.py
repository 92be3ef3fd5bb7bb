"""Adjacency spectra, Estrada index and characteristic polynomials.

The Estrada index is available by three independent routes:

* ``estrada_eig``      -- cyclic Jacobi eigenvalues, error propagated from
  the final off-diagonal norm;
* ``estrada_via_moments`` -- exact closed-walk counts summed as a Taylor
  series, with a rigorous tail bound;
* ``estrada_via_charpoly`` -- Sturm-isolated roots of the exact integer
  characteristic polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Optional

import numpy as np

from .canon import CANON_MAX_N, canonical_form
from .graph import Graph, cycles_through, induced_subgraph
from .polynomial import IntPolynomial
from .walks import spectral_moments

EIG_TOL = 1e-12
MAX_SWEEPS = 100
_EPS = np.finfo(float).eps


class EigenError(RuntimeError):
    pass


class InterlacingError(AssertionError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending
    tolerance: float

    @property
    def spectral_radius(self) -> float:
        return self.eigenvalues[0]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __getitem__(self, i: int) -> float:
        return self.eigenvalues[i]


def jacobi_eigenvalues(a: np.ndarray, tol: float = EIG_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(values, off_norm, sweeps)`` with ``off_norm`` the final
    off-diagonal Frobenius norm (< ``tol``).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy(), 0.0, 0

    offdiag = ~np.eye(n, dtype=bool)

    def off(m):
        return float(np.sqrt(np.sum(m[offdiag] ** 2)))

    sweeps = 0
    norm = off(a)
    while norm >= tol:
        if sweeps >= max_sweeps:
            raise EigenError(f"Jacobi did not converge after {max_sweeps} sweeps (off={norm:.3e})")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
        norm = off(a)
    return a.diagonal().copy(), norm, sweeps


def eigenvalues(G: Graph, tol: float = EIG_TOL) -> Spectrum:
    a = G.matrix(dtype=float)
    vals, off_norm, sweeps = jacobi_eigenvalues(a, tol)
    # Weyl: each value is within off_norm of the rotated matrix's spectrum;
    # the rotations themselves add O(n eps ||A||) per sweep.
    fro = math.sqrt(2 * G.m)
    rounding = 4 * G.n * _EPS * fro * max(sweeps, 1)
    return Spectrum(tuple(sorted(vals.tolist(), reverse=True)), float(off_norm + rounding))


@dataclass(frozen=True)
class Estimate:
    """A value with an absolute error bound."""

    value: float
    error: float
    route: str

    @property
    def lo(self) -> float:
        return self.value - self.error

    @property
    def hi(self) -> float:
        return self.value + self.error


@lru_cache(maxsize=8192)
def estrada_eig(G: Graph, tol: float = EIG_TOL) -> Estimate:
    spec = eigenvalues(G, tol)
    exps = [math.exp(x) for x in spec.eigenvalues]
    value = math.fsum(exps)
    err = value * math.expm1(spec.tolerance) + 2 * G.n * _EPS * value
    return Estimate(value, float(err), "eigensolver")


def estrada_index(G: Graph, tol: float = EIG_TOL) -> float:
    return estrada_eig(G, tol).value


def moment_tail_bound(n: int, B: int, K: int) -> float:
    """Bound on sum_{k>K} n B^k / k!, valid when K + 2 > B."""
    if K + 2 <= B:
        raise ValueError(f"tail bound needs K + 2 > B (K={K}, B={B}); raise K")
    head = Fraction(n * B ** (K + 1), math.factorial(K + 1))
    return float(head / (1 - Fraction(B, K + 2)))


def estrada_via_moments(G: Graph, K: int) -> tuple[float, float]:
    """``(sum_{k<=K} M_k/k!, tail_bound)`` with exact integer moments."""
    if K < 0:
        raise ValueError("K must be non-negative")
    B = G.max_degree()
    tail = moment_tail_bound(G.n, B, K)
    moments = spectral_moments(G, K)
    total = Fraction(0)
    fact = 1
    for k, mk in enumerate(moments):
        if k:
            fact *= k
        total += Fraction(mk, fact)
    return float(total), tail


def auto_moment_cutoff(G: Graph, K: int = 60, target: float = 1e-10) -> int:
    """Smallest cutoff >= K (in steps of 10) whose tail bound is below target."""
    B = G.max_degree()
    K = max(K, B)
    while moment_tail_bound(G.n, B, K) > target:
        K += 10
    return K


@lru_cache(maxsize=8192)
def estrada_moments(G: Graph, K: Optional[int] = None) -> Estimate:
    if K is None:
        K = auto_moment_cutoff(G)
    value, tail = estrada_via_moments(G, K)
    return Estimate(value, float(tail + _EPS * value), f"moments(K={K})")


def estrada_via_charpoly(poly: IntPolynomial) -> Estimate:
    """EE from isolating intervals of the characteristic polynomial's roots."""
    lo = hi = 0.0
    count = 0
    for a, b, mult in poly.real_roots():
        lo += mult * math.exp(float(a))
        hi += mult * math.exp(float(b))
        count += mult
    if count != poly.degree:
        raise EigenError("characteristic polynomial has non-real roots")
    mid = (lo + hi) / 2
    return Estimate(mid, float((hi - lo) / 2 + 4 * count * _EPS * hi), "charpoly")


def spectrum_from_charpoly(poly: IntPolynomial) -> list[tuple[float, int]]:
    return [(float((a + b) / 2), m) for a, b, m in reversed(poly.real_roots())]


# -- EE comparison -------------------------------------------------------


@dataclass(frozen=True)
class EEComparison:
    """``EE(H) - EE(G)`` by two routes, with the acceptance rule applied."""

    eig_gap: float
    eig_error: float
    mom_gap: float
    mom_error: float
    K: int

    @property
    def sign(self) -> int:
        """+1 if EE(H) > EE(G) decided, -1 if EE(H) < EE(G) decided, 0 otherwise."""
        eig_ok = abs(self.eig_gap) > 10 * self.eig_error
        mom_ok = abs(self.mom_gap) > 2 * self.mom_error
        if not (eig_ok and mom_ok):
            return 0
        if (self.eig_gap > 0) != (self.mom_gap > 0):
            return 0
        return 1 if self.eig_gap > 0 else -1

    @property
    def margin(self) -> float:
        """Smaller of the two route gaps, signed as the eigensolver gap."""
        return math.copysign(min(abs(self.eig_gap), abs(self.mom_gap)), self.eig_gap)


def compare_estrada(G: Graph, H: Graph, K: Optional[int] = None, tol: float = EIG_TOL) -> EEComparison:
    eg, eh = estrada_eig(G, tol), estrada_eig(H, tol)
    kk = K if K is not None else max(auto_moment_cutoff(G), auto_moment_cutoff(H))
    mg, mh = estrada_moments(G, kk), estrada_moments(H, kk)
    return EEComparison(
        eh.value - eg.value, eh.error + eg.error, mh.value - mg.value, mh.error + mg.error, kk
    )


# -- characteristic polynomials ---------------------------------------------

_X = IntPolynomial([0, 1])
_ONE = IntPolynomial([1])
_charpoly_memo: dict = {}


def _memo_key(G: Graph):
    if G.n <= CANON_MAX_N:
        return canonical_form(G)
    return ("labeled", G.n, G.edges)


def _pick_vertex(G: Graph) -> int:
    degs = G.degrees()
    low = min(range(G.n), key=lambda v: (degs[v], v))
    if degs[low] <= 1:
        return low
    return max(range(G.n), key=lambda v: (degs[v], -v))


def _schwenk(G: Optional[Graph], v: Optional[int] = None) -> IntPolynomial:
    if G is None:
        return _ONE
    key = _memo_key(G) if v is None else None
    if key is not None and key in _charpoly_memo:
        return _charpoly_memo[key]
    if v is None:
        v = _pick_vertex(G)
    rest = [x for x in range(G.n) if x != v]
    sub = induced_subgraph(G, rest)
    result = _X * _schwenk(sub[0] if sub else None)
    for w in G.neighbors(v):
        s = induced_subgraph(G, [x for x in rest if x != w])
        result = result - _schwenk(s[0] if s else None)
    for cyc in cycles_through(G, v):
        s = induced_subgraph(G, [x for x in range(G.n) if x not in set(cyc)])
        result = result - 2 * _schwenk(s[0] if s else None)
    if key is not None:
        _charpoly_memo[key] = result
    return result


def charpoly_recursive(G: Graph, v: int = 0) -> IntPolynomial:
    """phi(G, x) by vertex expansion at ``v`` (neighbours and cycles through v)."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph")
    return _schwenk(G, v)


def charpoly_exact(G: Graph) -> IntPolynomial:
    """phi(G, x) = det(xI - A) by Faddeev-LeVerrier over the integers."""
    n = G.n
    a = G.matrix(dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.zeros((n, n), dtype=object)
    ident = np.identity(n, dtype=object)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * ident
        am = a.dot(m)
        tr = int(sum(am[i, i] for i in range(n)))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -tr // k
    return IntPolynomial(coeffs)


def g12_quartics(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    """The quartic factors ``f`` and ``g`` with phi(G1) = x^(n-4) f, phi(G2) = x^(n-4) g."""
    if n < 5:
        raise ValueError("quartics are defined for n >= 5")
    f = IntPolynomial([2 * (n - 4), -4, -(n + 1), 0, 1])
    g = IntPolynomial([3 * (n - 5), 0, -(n + 1), 0, 1])
    return f, g


# -- interlacing -----------------------------------------------------------


@dataclass(frozen=True)
class InterlacingReport:
    upper_margins: tuple[float, ...]  # lambda_i(G) - lambda_i(G-v)
    lower_margins: tuple[float, ...]  # lambda_i(G-v) - lambda_{i+1}(G)
    tolerance: float

    @property
    def min_margin(self) -> float:
        return min(self.upper_margins + self.lower_margins)


def interlacing_check(G: Graph, v: int, tol: float = EIG_TOL) -> InterlacingReport:
    """Check lambda_{i+1}(G) <= lambda_i(G-v) <= lambda_i(G), i = 1..n-1."""
    if G.n < 2:
        raise ValueError("interlacing needs n >= 2")
    big = eigenvalues(G, tol)
    sub, _ = induced_subgraph(G, [x for x in range(G.n) if x != v])
    small = eigenvalues(sub, tol)
    slack = 10 * max(big.tolerance, small.tolerance)
    upper = tuple(big[i] - small[i] for i in range(G.n - 1))
    lower = tuple(small[i] - big[i + 1] for i in range(G.n - 1))
    rep = InterlacingReport(upper, lower, slack)
    if rep.min_margin < -slack:
        raise InterlacingError(f"interlacing violated by {-rep.min_margin:.3e}")
    return rep
