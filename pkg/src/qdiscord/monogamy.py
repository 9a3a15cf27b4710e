"""Telescoping decomposition of induced discord and monogamy checks.

The induced multiparty discord splits exactly into nested bipartite induced
discords (an algebraic identity, checked here to 1e-9). Minimizing each
piece independently gives the bounded-sum inequality, and when the nested
optimal values dominate the pairwise ones the classic monogamy inequality
whole >= sum of pairwise follows. A known rank-2 three-qubit mixture shows
the domination condition is not automatic; its audit lives here too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .discord import (
    Bipartition,
    OptimizerConfig,
    induced_discord,
    induced_discord_bipartite,
    q_gqd,
)
from .entropy import _check_q
from .linalg import DensityMatrix, partial_trace
from .measurement import ProductMeasurement
from .states import bros_counterexample

__all__ = [
    "INEQUALITY_TOL",
    "DecompositionLedger",
    "MonogamyReport",
    "CounterexampleAudit",
    "decompose_induced_gqd",
    "bounded_sum_check",
    "monogamy_report",
    "bros_counterexample_audit",
]

# 10x the optimizer objective tolerance; slack for comparing two optimized values.
INEQUALITY_TOL = 1e-6

# Thresholds for the counterexample audit.
VANISH_TOL = 1e-6
NONZERO_MIN = 1e-3
WHOLE_MATCH_TOL = 1e-5


@dataclass(frozen=True)
class DecompositionLedger:
    """Exact split of an induced discord into nested bipartite pieces.

    total is the multiparty induced discord of the full state, terms[k-1]
    the bipartite induced discord of the first k+1 qubits across the cut
    (first k)|(k+1 th), and residual = total - sum(terms). The identity is
    algebraic, so residual is eigensolver noise only.
    """

    total: float
    terms: tuple
    residual: float


@dataclass(frozen=True)
class MonogamyReport:
    """Whole-state discord against pairwise and nested bipartite discords.

    Qubit 0 is the distinguished party: pairwise[k-1] is the discord of the
    (0, k) marginal and nested[k-1] the discord of the first k+1 qubits
    across the cut (first k)|(k+1 th). inequality_holds tracks
    whole >= sum(pairwise) - tol, condition_holds tracks
    nested[k] >= pairwise[k] - tol for every k; the raw margins are kept
    alongside the booleans.
    """

    whole: float
    pairwise: tuple
    nested: tuple
    inequality_holds: bool
    condition_holds: bool
    inequality_margin: float
    condition_margins: tuple


@dataclass(frozen=True)
class CounterexampleAudit:
    """Audit of the rank-2 mixture (|000><000| + |1+1><1+1|)/2.

    The state separates the nested-domination condition from the monogamy
    inequality itself: its discord across the cut {0}|{1,2} vanishes while
    the (0,1) pairwise discord does not, so the condition fails, yet the
    inequality whole >= pair_01 + pair_02 still holds (with equality).
    """

    q: float
    whole: float
    first_vs_rest: float
    pair_01: float
    pair_02: float
    first_vs_rest_vanishes: bool
    pair_01_nonzero: bool
    pair_02_vanishes: bool
    whole_matches_pair_01: bool
    condition_holds: bool
    inequality_holds: bool
    passed: bool


def decompose_induced_gqd(
    rho: DensityMatrix, phi: ProductMeasurement, q: float
) -> DecompositionLedger:
    """Split the induced discord of rho under phi into nested bipartite terms."""
    q = _check_q(q)
    n = rho.num_qubits
    if len(phi) != n:
        raise ValueError(
            f"measurement arity {len(phi)} does not match qubit count {n}"
        )
    total = induced_discord(rho, phi, q)
    terms = []
    for k in range(1, n):
        reduced = partial_trace(rho, range(k + 1))
        sub = ProductMeasurement(phi.per_qubit[: k + 1])
        cut = Bipartition(tuple(range(k)), (k,))
        terms.append(induced_discord_bipartite(reduced, cut, sub, q))
    residual = total - sum(terms)
    return DecompositionLedger(float(total), tuple(terms), float(residual))


def _nested_values(rho, q, opt):
    values = []
    for k in range(1, rho.num_qubits):
        reduced = partial_trace(rho, range(k + 1))
        cut = Bipartition(tuple(range(k)), (k,))
        values.append(q_gqd(reduced, q, opt, cut=cut).value)
    return tuple(values)


def bounded_sum_check(
    rho: DensityMatrix, q: float, opt: OptimizerConfig | None = None
) -> bool:
    """Whether whole-state discord dominates the sum of nested bipartite ones.

    Both sides come from independent optimizations; the inequality is a
    theorem (minimize the exact decomposition term by term), so a False
    return signals optimizer failure rather than physics.
    """
    whole = q_gqd(rho, q, opt).value
    nested = _nested_values(rho, q, opt)
    return whole >= sum(nested) - INEQUALITY_TOL


def monogamy_report(
    rho: DensityMatrix, q: float, opt: OptimizerConfig | None = None
) -> MonogamyReport:
    """Evaluate the monogamy inequality and its sufficient condition.

    Every value is a fresh independent optimization (the full-state argmin
    is never reused for marginals, which would bias nested values upward).
    condition_holds implies inequality_holds mathematically; that
    implication is enforced as a hard check.
    """
    n = rho.num_qubits
    whole = q_gqd(rho, q, opt).value
    pairwise = tuple(
        q_gqd(partial_trace(rho, (0, k)), q, opt).value for k in range(1, n)
    )
    nested = _nested_values(rho, q, opt)
    inequality_margin = whole - sum(pairwise)
    condition_margins = tuple(ns - pw for ns, pw in zip(nested, pairwise))
    inequality_holds = inequality_margin >= -INEQUALITY_TOL
    condition_holds = all(m >= -INEQUALITY_TOL for m in condition_margins)
    if condition_holds and not inequality_holds:
        raise RuntimeError(
            "nested domination holds but the monogamy inequality failed; "
            "this indicates an optimizer or implementation fault"
        )
    return MonogamyReport(
        whole=float(whole),
        pairwise=pairwise,
        nested=nested,
        inequality_holds=inequality_holds,
        condition_holds=condition_holds,
        inequality_margin=float(inequality_margin),
        condition_margins=condition_margins,
    )


def bros_counterexample_audit(
    q: float, opt: OptimizerConfig | None = None
) -> CounterexampleAudit:
    """Audit the counterexample state's discord pattern at one q.

    Checks the four facts that make it a counterexample to the domination
    condition without violating monogamy: vanishing discord across {0}|{1,2}
    and on the (0,2) marginal, nonvanishing (0,1) pairwise discord, and
    whole-state discord equal to that pairwise value.
    """
    q = _check_q(q)
    rho = bros_counterexample()
    whole = q_gqd(rho, q, opt).value
    first_vs_rest = q_gqd(rho, q, opt, cut=Bipartition((0,), (1, 2))).value
    pair_01 = q_gqd(partial_trace(rho, (0, 1)), q, opt).value
    pair_02 = q_gqd(partial_trace(rho, (0, 2)), q, opt).value
    first_vs_rest_vanishes = first_vs_rest <= VANISH_TOL
    pair_01_nonzero = pair_01 >= NONZERO_MIN
    pair_02_vanishes = pair_02 <= VANISH_TOL
    whole_matches_pair_01 = abs(whole - pair_01) <= WHOLE_MATCH_TOL
    return CounterexampleAudit(
        q=q,
        whole=float(whole),
        first_vs_rest=float(first_vs_rest),
        pair_01=float(pair_01),
        pair_02=float(pair_02),
        first_vs_rest_vanishes=first_vs_rest_vanishes,
        pair_01_nonzero=pair_01_nonzero,
        pair_02_vanishes=pair_02_vanishes,
        whole_matches_pair_01=whole_matches_pair_01,
        condition_holds=first_vs_rest >= pair_01 - INEQUALITY_TOL,
        inequality_holds=whole >= pair_01 + pair_02 - INEQUALITY_TOL,
        passed=(
            first_vs_rest_vanishes
            and pair_01_nonzero
            and pair_02_vanishes
            and whole_matches_pair_01
        ),
    )
