"""Exact integer polynomials, with Sturm-sequence real root isolation."""
from __future__ import annotations

import math
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: list) -> tuple:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (0,)


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        self.coeffs = _trim(cs)

    @classmethod
    def x_power(cls, k: int) -> "IntPolynomial":
        return cls([0] * k + [1])

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if self.coeffs == (0,):
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def zero_multiplicity(self) -> int:
        k = 0
        while k < len(self.coeffs) - 1 and self.coeffs[k] == 0:
            k += 1
        return k

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at_sqrt(self, a: Number) -> tuple[Fraction, Fraction]:
        """Exact value at ``sqrt(a)`` as ``(r, s)`` meaning ``r + s*sqrt(a)``."""
        a = Fraction(a)
        r = Fraction(0)
        s = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if k % 2 == 0:
                r += c * a ** (k // 2)
            else:
                s += c * a ** (k // 2)
        return r, s

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        k = self.zero_multiplicity()
        if self.degree <= 0 or k == 0:
            return _format(self.coeffs)
        inner = _format(self.coeffs[k:])
        head = "x" if k == 1 else f"x^{k}"
        return head if inner == "1" else f"{head}*({inner})"

    # -- real roots -------------------------------------------------------

    def real_roots(self, width: Fraction = Fraction(1, 10**14)) -> list[tuple[Fraction, Fraction, int]]:
        """Isolating intervals ``(lo, hi, multiplicity)`` for all real roots.

        Intervals are narrowed to ``width`` by exact bisection; each holds
        exactly one distinct root. Zero roots are reported as ``(0, 0, m)``.
        """
        if self.degree < 1:
            return []
        z = self.zero_multiplicity()
        out = list(_nonzero_roots(tuple(self.coeffs[z:]), Fraction(width)))
        if z:
            out.append((Fraction(0), Fraction(0), z))
        out.sort(key=lambda t: t[0])
        return out


@lru_cache(maxsize=1024)
def _nonzero_roots(coeffs: tuple[int, ...], width: Fraction) -> tuple[tuple[Fraction, Fraction, int], ...]:
    out = []
    for mult, factor in _squarefree_decomposition([Fraction(c) for c in coeffs]):
        if len(factor) > 1:
            for lo, hi in _isolate(factor, width):
                out.append((lo, hi, mult))
    return tuple(out)


def _format(coeffs: Sequence[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            body = xs if mag == 1 else f"{mag}*{xs}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


# Fraction-coefficient helpers (ascending lists)


def _ptrim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a, b):
    a = _ptrim(a)
    b = _ptrim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                r[i + j] -= c * bj
    return _ptrim(q), _ptrim(r[: len(b) - 1] or [Fraction(0)])


def _pgcd(a, b):
    a, b = _ptrim(a), _ptrim(b)
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _pdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _pderiv(p):
    return _ptrim([k * c for k, c in enumerate(p)][1:] or [Fraction(0)])


def _squarefree_decomposition(p):
    """Yun's algorithm: yields (multiplicity, squarefree factor)."""
    p = [c / p[-1] for c in _ptrim(p)]
    if len(p) == 1:
        return []
    out = []
    dp = _pderiv(p)
    a = _pgcd(p, dp)
    b = _pdivmod(p, a)[0]
    c = _pdivmod(dp, a)[0]
    d = [x - y for x, y in _zip_pad(c, _pderiv(b))]
    i = 1
    while len(b) > 1:
        a = _pgcd(b, d)
        if len(a) > 1:
            out.append((i, a))
        b = _pdivmod(b, a)[0]
        c = _pdivmod(d, a)[0]
        d = [x - y for x, y in _zip_pad(c, _pderiv(b))]
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return list(zip(a, b))


def _peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sturm_chain(p):
    chain = [_ptrim(p), _pderiv(p)]
    while not (len(chain[-1]) == 1 and chain[-1][0] == 0):
        r = _pdivmod(chain[-2], chain[-1])[1]
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _sign_changes(chain, x):
    signs = [s for s in (_peval(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _refine(p, lo, hi, width):
    """Shrink (lo, hi], known to hold exactly one simple root, by bisection."""
    if _peval(p, hi) == 0:
        return hi, hi
    s_hi = _peval(p, hi) > 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = _peval(p, mid)
        if v == 0:
            return mid, mid
        if (v > 0) == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _isolate(p, width):
    """Isolate the distinct real roots of squarefree ``p``."""
    chain = _sturm_chain(p)
    # Cauchy bound
    bound = 1 + max(abs(c / p[-1]) for c in p[:-1])
    bound = Fraction(math.ceil(bound))
    stack = [(-bound, bound)]
    found = []
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if count == 0:
            continue
        if count == 1:
            found.append(_refine(p, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        if _peval(p, mid) == 0:
            # shift the split point off the root
            mid = lo + (hi - lo) * Fraction(1, 3)
            if _peval(p, mid) == 0:
                mid = lo + (hi - lo) * Fraction(2, 3)
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(found)
