"""Command-line surface: compute, verify, sweep.

compute evaluates one quantity for a state file and prints a JSON object;
verify runs a named property suite with human-readable lines plus a JSON
summary; sweep writes a CSV of discord values over a q grid. Exit codes:
0 ok, 1 verify suite failed, 2 bad input (files, unknown names), 3 state
invariant violated, 4 bad numeric parameter.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analytic import (
    pauli_diagonal_gqd,
    werner_ghz_gqd,
    werner_ghz_measured_spectrum,
    werner_ghz_optimal_measured_spectrum,
)
from .discord import (
    OptimizerConfig,
    mutual_information_q,
    q_gqd,
    q_qd_one_sided,
)
from .entropy import (
    majorizes,
    schur_concavity_witness,
    tsallis_entropy,
    tsallis_entropy_probs,
)
from .linalg import DensityMatrix, partial_trace, state_spectrum
from .measurement import ProductMeasurement, apply_full
from .monogamy import (
    bounded_sum_check,
    bros_counterexample_audit,
    decompose_induced_gqd,
    monogamy_report,
)
from .states import (
    StateFormatError,
    alpha_state,
    load_state,
    pauli_diagonal_state,
    random_density_matrix,
    random_pauli_diagonal_coefficients,
    werner_ghz,
)

__all__ = ["SweepSpec", "main", "cmd_compute", "cmd_verify", "cmd_sweep"]

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_INPUT = 2
EXIT_STATE = 3
EXIT_PARAMETER = 4

DEFAULT_TARGETS = ("alpha:0.58", "alpha:0.3")


class ParameterError(ValueError):
    """A numeric flag violates its domain (exit code 4)."""


@dataclass(frozen=True)
class SweepSpec:
    """A q grid plus the named states to evaluate on it."""

    q_min: float
    q_max: float
    steps: int
    targets: tuple

    def __post_init__(self):
        if not (math.isfinite(self.q_min) and self.q_min > 0.0):
            raise ParameterError("--q-min must be a positive real number")
        if not math.isfinite(self.q_max) or self.q_max <= self.q_min:
            raise ParameterError("--q-max must be finite and exceed --q-min")
        if self.steps < 2:
            raise ParameterError("--steps must be at least 2")
        if not self.targets:
            raise ParameterError("at least one sweep target is required")


def _positive_q(q: float) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise ParameterError("--q must be a positive real number")
    return q


def _optimizer_from(args) -> OptimizerConfig:
    try:
        return OptimizerConfig(
            starts=args.starts,
            max_evals=args.max_evals,
            tol=args.tol,
            seed=args.seed,
        )
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc


def _thread_cap() -> int:
    available = os.cpu_count() or 1
    raw = os.environ.get("QDISCORD_THREADS")
    if raw is None:
        return available
    try:
        requested = int(raw)
    except ValueError:
        print(
            f"warning: ignoring non-integer QDISCORD_THREADS={raw!r}",
            file=sys.stderr,
        )
        return available
    return max(1, min(requested, available))


def _report_diagnostics(report) -> dict:
    return {
        "measured_qubits": [int(k) for k in report.measured_qubits],
        "optimal_axes": [
            [float(c) for c in m.axis] for m in report.optimal_measurement
        ],
        "starts_used": int(report.starts_used),
        "converged": bool(report.converged),
        "objective_evals": int(report.objective_evals),
        "raw_value": float(report.raw_value),
        "nonnegativity_guaranteed": bool(report.nonnegativity_guaranteed),
    }


def cmd_compute(args) -> int:
    q = _positive_q(args.q)
    opt = _optimizer_from(args)
    rho = load_state(args.state)
    if args.quantity == "entropy":
        value = tsallis_entropy(rho, q)
        diagnostics = {
            "num_qubits": rho.num_qubits,
            "spectrum": [float(p) for p in state_spectrum(rho).probs],
        }
    elif args.quantity == "mutual_info":
        value = mutual_information_q(rho, q)
        diagnostics = {
            "num_qubits": rho.num_qubits,
            "state_entropy": float(tsallis_entropy(rho, q)),
            "marginal_entropies": [
                float(tsallis_entropy(partial_trace(rho, (k,)), q))
                for k in range(rho.num_qubits)
            ],
        }
    elif args.quantity == "qqd":
        report = q_qd_one_sided(rho, (rho.num_qubits - 1,), q, opt)
        value = report.value
        diagnostics = _report_diagnostics(report)
    else:
        report = q_gqd(rho, q, opt)
        value = report.value
        diagnostics = _report_diagnostics(report)
    print(
        json.dumps(
            {
                "quantity": args.quantity,
                "q": q,
                "value": float(value),
                "diagnostics": diagnostics,
            }
        )
    )
    return EXIT_OK


def _random_axis_pairs(rng, n):
    return [
        (math.acos(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, 2.0 * math.pi))
        for _ in range(n)
    ]


def _suite_nonnegativity(seed, trials, opt):
    rng = np.random.default_rng(seed)
    q_grid = (0.25, 0.5, 0.75, 1.0)
    min_gqd = math.inf
    min_one_sided = math.inf
    failures = 0
    for i in range(trials):
        n = 3 if i % 3 == 2 else 2
        rho = random_density_matrix(n, rng)
        for q in q_grid:
            g = q_gqd(rho, q, opt).raw_value
            s = q_qd_one_sided(rho, (n - 1,), q, opt).raw_value
            min_gqd = min(min_gqd, g)
            min_one_sided = min(min_one_sided, s)
            failures += int(g < -1e-8) + int(s < -1e-8)
    passed = failures == 0
    lines = [
        _mark(min_gqd >= -1e-8)
        + f" q_gqd raw minimum {min_gqd:.3e} over {trials} states x {len(q_grid)} q values (floor -1e-08)",
        _mark(min_one_sided >= -1e-8)
        + f" one-sided q-QD raw minimum {min_one_sided:.3e} (floor -1e-08)",
    ]
    details = {
        "min_qgqd": float(min_gqd),
        "min_one_sided": float(min_one_sided),
        "failures": failures,
    }
    return passed, lines, details


def _suite_telescoping(seed, trials, opt):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        rho = random_density_matrix(3, rng)
        phi = ProductMeasurement.from_angles(_random_axis_pairs(rng, 3))
        for q in (0.5, 1.0):
            ledger = decompose_induced_gqd(rho, phi, q)
            worst = max(worst, abs(ledger.residual))
    passed = worst <= 1e-9
    lines = [
        _mark(passed)
        + f" decomposition residual max {worst:.3e} over {trials} (state, measurement) pairs (limit 1e-09)"
    ]
    return passed, lines, {"max_residual": float(worst)}


def _suite_monogamy(seed, trials, opt):
    audit = bros_counterexample_audit(0.9, opt)
    audit_ok = audit.passed and not audit.condition_holds and audit.inequality_holds
    lines = [
        _mark(audit.passed)
        + f" counterexample audit at q=0.9: first_vs_rest={audit.first_vs_rest:.2e}"
        + f" pair_01={audit.pair_01:.6f} pair_02={audit.pair_02:.2e}"
        + f" whole={audit.whole:.6f}",
        _mark(not audit.condition_holds and audit.inequality_holds)
        + f" condition_holds={str(audit.condition_holds).lower()}"
        + f" inequality_holds={str(audit.inequality_holds).lower()}",
    ]
    rng = np.random.default_rng(seed)
    implication_violations = 0
    bounded_failures = 0
    for _ in range(trials):
        rho = random_density_matrix(3, rng)
        try:
            report = monogamy_report(rho, 0.5, opt)
        except RuntimeError:
            implication_violations += 1
            continue
        if report.condition_holds and not report.inequality_holds:
            implication_violations += 1
        if not bounded_sum_check(rho, 0.5, opt):
            bounded_failures += 1
    lines.append(
        _mark(implication_violations == 0)
        + f" condition-implies-inequality violations: {implication_violations} over {trials} random states"
    )
    lines.append(
        _mark(bounded_failures == 0)
        + f" bounded-sum failures: {bounded_failures} over {trials} random states"
    )
    passed = audit_ok and implication_violations == 0 and bounded_failures == 0
    details = {
        "audit": {
            "q": audit.q,
            "whole": audit.whole,
            "first_vs_rest": audit.first_vs_rest,
            "pair_01": audit.pair_01,
            "pair_02": audit.pair_02,
            "condition_holds": audit.condition_holds,
            "inequality_holds": audit.inequality_holds,
            "passed": audit.passed,
        },
        "implication_violations": implication_violations,
        "bounded_sum_failures": bounded_failures,
    }
    return passed, lines, details


def _suite_oracle_agreement(seed, trials, opt):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for i in range(trials):
        q = (0.3, 0.5, 0.8, 0.99)[i % 4]
        n = 2 + (i // 2) % 2
        if i % 2 == 0:
            mu = rng.uniform()
            closed = werner_ghz_gqd(n, mu, q).value
            numeric = q_gqd(werner_ghz(n, mu), q, opt).value
        else:
            c1, c2, c3 = random_pauli_diagonal_coefficients(n, rng)
            closed = pauli_diagonal_gqd(n, c1, c2, c3, q).value
            numeric = q_gqd(pauli_diagonal_state(n, c1, c2, c3), q, opt).value
        worst = max(worst, abs(closed - numeric))
    passed = worst <= 1e-5
    lines = [
        _mark(passed)
        + f" closed form vs optimizer worst gap {worst:.3e} over {trials} states (limit 1e-05)"
    ]
    return passed, lines, {"worst_gap": float(worst)}


def _suite_majorization(seed, trials, opt):
    rng = np.random.default_rng(seed)
    optimal = werner_ghz_optimal_measured_spectrum(3, 0.5)
    base = werner_ghz(3, 0.5)
    worst_spec = 0.0
    maj_failures = 0
    order_failures = 0
    bound_failures = 0
    for _ in range(trials):
        phi = ProductMeasurement.from_angles(_random_axis_pairs(rng, 3))
        predicted = werner_ghz_measured_spectrum(0.5, phi)
        seen = state_spectrum(apply_full(phi, base)).probs
        worst_spec = max(
            worst_spec, float(np.abs(np.sort(predicted)[::-1] - seen).max())
        )
        if not majorizes(predicted, optimal):
            maj_failures += 1
        for q in (0.5, 2.0):
            if tsallis_entropy_probs(seen, q) < tsallis_entropy_probs(optimal, q) - 1e-9:
                order_failures += 1
        c1, c2, c3 = random_pauli_diagonal_coefficients(3, rng)
        prods = np.ones(3)
        for theta, phi_angle in _random_axis_pairs(rng, 3):
            st = math.sin(theta)
            prods *= np.array(
                [st * math.cos(phi_angle), st * math.sin(phi_angle), math.cos(theta)]
            )
        total = c1 * prods[0] + c2 * prods[1] + c3 * prods[2]
        if abs(total) > max(abs(c1), abs(c2), abs(c3)) + 1e-12:
            bound_failures += 1
    schur_ok = all(schur_concavity_witness(q, trials, seed) for q in (0.5, 2.0))
    lines = [
        _mark(worst_spec <= 1e-10)
        + f" measured-spectrum formula max error {worst_spec:.3e} (limit 1e-10)",
        _mark(maj_failures == 0)
        + f" all-z spectrum majorizes every measured spectrum: {trials - maj_failures}/{trials}",
        _mark(order_failures == 0)
        + f" entropy ordering failures: {order_failures} (q in 0.5, 2)",
        _mark(bound_failures == 0)
        + f" correlation product bound failures: {bound_failures}",
        _mark(schur_ok) + " doubly stochastic mixing never lowers H_q (q in 0.5, 2)",
    ]
    passed = (
        worst_spec <= 1e-10
        and maj_failures == 0
        and order_failures == 0
        and bound_failures == 0
        and schur_ok
    )
    details = {
        "worst_spectrum_error": worst_spec,
        "majorization_failures": maj_failures,
        "ordering_failures": order_failures,
        "bound_failures": bound_failures,
        "schur_ok": schur_ok,
    }
    return passed, lines, details


def _mark(ok: bool) -> str:
    return "[PASS]" if ok else "[FAIL]"


SUITES = {
    "nonnegativity": _suite_nonnegativity,
    "telescoping": _suite_telescoping,
    "monogamy": _suite_monogamy,
    "oracle_agreement": _suite_oracle_agreement,
    "majorization": _suite_majorization,
}


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ParameterError("--trials must be at least 1")
    opt = _optimizer_from(args)
    suite = SUITES[args.suite]
    print(f"suite {args.suite} (seed={args.seed}, trials={args.trials})")
    passed, lines, details = suite(args.seed, args.trials, opt)
    for line in lines:
        print(line)
    print(
        json.dumps(
            {
                "suite": args.suite,
                "seed": args.seed,
                "trials": args.trials,
                "passed": passed,
                "details": details,
            }
        )
    )
    return EXIT_OK if passed else EXIT_SUITE_FAILED


def _parse_target(text: str):
    kind, _, rest = text.partition(":")
    fields = rest.split(":") if rest else []
    try:
        if kind == "alpha" and len(fields) == 1:
            return text, alpha_state(float(fields[0]))
        if kind == "werner" and len(fields) == 2:
            return text, werner_ghz(int(fields[0]), float(fields[1]))
        if kind == "pauli" and len(fields) == 4:
            n = int(fields[0])
            c1, c2, c3 = (float(f) for f in fields[1:])
            return text, pauli_diagonal_state(n, c1, c2, c3)
        if kind == "mixed" and len(fields) == 1:
            n = int(fields[0])
            if not 1 <= n <= 4:
                raise ParameterError("mixed target qubit count must be 1..4")
            return text, DensityMatrix(np.eye(2**n) / 2**n)
        if kind == "file" and len(fields) >= 1:
            return text.replace(",", ";"), load_state(rest)
    except ParameterError:
        raise
    except StateFormatError:
        raise
    except OSError:
        raise
    except ValueError as exc:
        # numeric field failed to parse, or the state constructor rejected
        # the parameters; the former is a flag mistake, the latter a state
        # domain violation, and both carry a clear message
        if "could not convert" in str(exc) or "invalid literal" in str(exc):
            raise ParameterError(f"malformed target {text!r}: {exc}") from exc
        raise
    raise ParameterError(
        f"unknown target {text!r}; expected alpha:A, werner:N:MU, "
        "pauli:N:C1:C2:C3, mixed:N, or file:PATH"
    )


def cmd_sweep(args) -> int:
    opt = _optimizer_from(args)
    targets = tuple(_parse_target(t) for t in (args.target or DEFAULT_TARGETS))
    spec = SweepSpec(
        q_min=float(args.q_min),
        q_max=float(args.q_max),
        steps=int(args.steps),
        targets=targets,
    )
    text = _render_sweep(spec, opt, _thread_cap())
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def _render_sweep(spec: SweepSpec, opt: OptimizerConfig, threads: int) -> str:
    qs = [float(v) for v in np.linspace(spec.q_min, spec.q_max, spec.steps)]
    states = [state for _, state in spec.targets]
    cells = [(i, j) for i in range(len(qs)) for j in range(len(states))]

    def evaluate(cell):
        i, j = cell
        return cell, q_gqd(states[j], qs[i], opt).value

    values = {}
    if threads > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for cell, value in pool.map(evaluate, cells):
                values[cell] = value
    else:
        for cell in cells:
            values[cell] = evaluate(cell)[1]

    header = "q," + ",".join(name for name, _ in spec.targets) + ",difference"
    rows = [header]
    for i, q in enumerate(qs):
        row_values = [values[(i, j)] for j in range(len(states))]
        difference = row_values[0] - row_values[1] if len(row_values) >= 2 else 0.0
        rows.append(
            ",".join([_fmt(q)] + [_fmt(v) for v in row_values] + [_fmt(difference)])
        )
    return "\n".join(rows) + "\n"


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _add_optimizer_flags(sub):
    sub.add_argument("--starts", type=int, default=16, help="optimizer restarts")
    sub.add_argument(
        "--max-evals", type=int, default=2000, help="objective evaluations per start"
    )
    sub.add_argument("--tol", type=float, default=1e-8, help="objective tolerance")
    sub.add_argument("--seed", type=int, default=0, help="seed for restarts and suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdiscord",
        description="Tsallis-q discord calculator: compute, verify, sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate one quantity for a state file")
    compute.add_argument("--state", required=True, help="state file (JSON)")
    compute.add_argument(
        "--quantity",
        required=True,
        choices=("entropy", "mutual_info", "qqd", "qgqd"),
        help="what to compute (qqd measures the last qubit)",
    )
    compute.add_argument("--q", type=float, required=True, help="entropy parameter")
    _add_optimizer_flags(compute)
    compute.set_defaults(func=cmd_compute)

    verify = sub.add_parser("verify", help="run a property suite")
    verify.add_argument(
        "--suite", required=True, choices=tuple(SUITES), help="suite name"
    )
    verify.add_argument("--trials", type=int, default=20, help="ensemble size")
    _add_optimizer_flags(verify)
    verify.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="write discord values over a q grid as CSV")
    sweep.add_argument("--q-min", type=float, default=0.05)
    sweep.add_argument("--q-max", type=float, default=0.95)
    sweep.add_argument("--steps", type=int, default=19)
    sweep.add_argument(
        "--target",
        action="append",
        help="state to sweep: alpha:A, werner:N:MU, pauli:N:C1:C2:C3, "
        "mixed:N, file:PATH (repeatable; default: the two alpha states)",
    )
    sweep.add_argument("--out", help="output CSV path (stdout when omitted)")
    _add_optimizer_flags(sweep)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except StateFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STATE


if __name__ == "__main__":
    sys.exit(main())
