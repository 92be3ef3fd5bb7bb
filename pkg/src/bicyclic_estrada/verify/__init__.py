"""Verification campaigns producing per-instance reports.

Statement ids, in the order ``run_all`` executes them:

``edge-addition``, ``coalescence``, ``automorphism``, ``transformations``,
``g1-vs-g2``, ``max-bicyclic``, ``max-bicyclic-stability``.

``theta-class-maxima`` can be run by name but is not part of ``all``: its
within-class claim is refuted (see the README).
"""
from __future__ import annotations

from typing import Callable, Optional

from ..walks import DEFAULT_K
from .extremal import (
    stability_check,
    verify_g1_vs_g2,
    verify_theorem_max,
    verify_theta_class_maxima,
    verify_transformations,
)
from .lemmas import (
    edge_addition_battery,
    verify_automorphism_lemma,
    verify_coalescence_lemmas,
    verify_lemma_per2,
)
from .report import (
    CONFIRMED,
    EXIT_CODES,
    INAPPLICABLE,
    REFUTED,
    REPORT_SCHEMA,
    UNDETERMINED,
    Instance,
    VerificationReport,
)

DEFAULT_N = 6
G12_MAX_N = 200
COALESCENCE_MAX_ORDER = 5


def _campaigns(n: int, K: int) -> dict[str, Callable[[], VerificationReport]]:
    return {
        "edge-addition": lambda: edge_addition_battery(K),
        "coalescence": lambda: verify_coalescence_lemmas(K, max_order=COALESCENCE_MAX_ORDER),
        "automorphism": lambda: verify_automorphism_lemma(K),
        "transformations": lambda: verify_transformations(n),
        "g1-vs-g2": lambda: verify_g1_vs_g2(5, max(n, G12_MAX_N)),
        "max-bicyclic": lambda: verify_theorem_max(n),
        "max-bicyclic-stability": lambda: stability_check(n),
        "theta-class-maxima": lambda: verify_theta_class_maxima(n),
    }


STATEMENTS = tuple(_campaigns(DEFAULT_N, DEFAULT_K))
ALL_STATEMENTS = tuple(s for s in STATEMENTS if s != "theta-class-maxima")


def run(statement: str, n: int = DEFAULT_N, K: int = DEFAULT_K) -> VerificationReport:
    campaigns = _campaigns(n, K)
    if statement not in campaigns:
        raise KeyError(f"unknown statement {statement!r}; choose from {', '.join(STATEMENTS)}")
    return campaigns[statement]()


def run_all(n: int = DEFAULT_N, K: int = DEFAULT_K, statements: Optional[tuple[str, ...]] = None):
    return [run(s, n, K) for s in (statements or ALL_STATEMENTS)]


def combined_exit_code(reports) -> int:
    codes = [r.exit_code for r in reports]
    if 1 in codes:
        return 1
    return max(codes, default=0)


__all__ = [
    "CONFIRMED", "REFUTED", "UNDETERMINED", "INAPPLICABLE", "EXIT_CODES", "REPORT_SCHEMA",
    "Instance", "VerificationReport", "STATEMENTS", "ALL_STATEMENTS", "run", "run_all",
    "combined_exit_code", "verify_lemma_per2", "verify_coalescence_lemmas", "verify_automorphism_lemma",
    "verify_transformations", "verify_g1_vs_g2", "verify_theorem_max", "verify_theta_class_maxima",
]
