"""Closed-form global q-discord for the two exactly solvable families.

For both families every single-qubit marginal is I/2 and stays I/2 under
any product measurement, so the global quantity collapses to the entropy
gap min_Phi S_q(Phi(rho)) - S_q(rho); the minimum is known exactly. These
routes never touch the numerical optimizer, which makes them independent
oracles for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .entropy import Q_SWITCH_TOL, _check_q
from .measurement import ProductMeasurement
from .states import pauli_diagonal_state

__all__ = [
    "ClosedFormResult",
    "werner_ghz_gqd",
    "pauli_diagonal_gqd",
    "optimal_measured_entropy",
    "werner_ghz_measured_spectrum",
    "werner_ghz_optimal_measured_spectrum",
    "pauli_diagonal_measured_spectrum",
]


@dataclass(frozen=True)
class ClosedFormResult:
    """A closed-form value, the formula branch taken, and the echoed inputs."""

    value: float
    branch: str
    inputs: dict


def _xq_lnq(x: float, q: float) -> float:
    """x**q * ln_q(x) in the cancellation-free form (x - x**q) / (1 - q)."""
    return (x - x**q) / (1.0 - q)


def werner_ghz_gqd(n: int, mu: float, q: float) -> ClosedFormResult:
    """Global q-discord of the GHZ-dilution state, no optimizer involved.

    Three-term expression in A = (1-mu)/2^n + mu, B = (1-mu)/2^n and
    C = (1-mu)/2^n + mu/2: value = A^q ln_q A + B^q ln_q B - 2 C^q ln_q C,
    with x^q ln_q x -> x ln x as q -> 1.
    """
    q = _check_q(q)
    n = int(n)
    if n < 2:
        raise ValueError("family requires at least two qubits")
    mu = float(mu)
    if not 0.0 <= mu <= 1.0:
        raise ValueError("mixing weight mu must lie in [0, 1]")
    d = 2**n
    a = (1.0 - mu) / d + mu
    b = (1.0 - mu) / d
    c = (1.0 - mu) / d + mu / 2.0
    inputs = {"n": n, "mu": mu, "q": q}
    if abs(q - 1.0) < Q_SWITCH_TOL:
        value = float(xlogy(a, a) + xlogy(b, b) - 2.0 * xlogy(c, c))
        return ClosedFormResult(value, "q1-limit", inputs)
    value = _xq_lnq(a, q) + _xq_lnq(b, q) - 2.0 * _xq_lnq(c, q)
    return ClosedFormResult(float(value), "generic", inputs)


def _pauli_lambdas(n: int, c1: float, c2: float, c3: float) -> list[float]:
    """The four eigenvalue numerators 2^n * lambda for even n."""
    s = (-1) ** (n // 2)
    return [
        1.0 + c3 + (c1 + s * c2),
        1.0 + c3 - (c1 + s * c2),
        1.0 - c3 + (c1 - s * c2),
        1.0 - c3 - (c1 - s * c2),
    ]


def pauli_diagonal_gqd(
    n: int, c1: float, c2: float, c3: float, q: float
) -> ClosedFormResult:
    """Global q-discord of the Pauli-diagonal family, no optimizer involved.

    The optimal measured spectrum is {(1 +/- c)/2^n}, c = max |c_i|, each
    with multiplicity 2^(n-1); subtracting the state entropy gives, for odd
    n with d = |c|_2,

        -(2^(n-1)/(q-1)) [((1+c)/2^n)^q + ((1-c)/2^n)^q
                          - ((1+d)/2^n)^q - ((1-d)/2^n)^q]

    and for even n the analogous expression with the four exact eigenvalues
    lambda_j/2^n of the state, each carrying multiplicity 2^(n-2).
    """
    q = _check_q(q)
    pauli_diagonal_state(n, c1, c2, c3)  # full admissibility gate
    n = int(n)
    c1, c2, c3 = float(c1), float(c2), float(c3)
    c = max(abs(c1), abs(c2), abs(c3))
    dim = 2**n
    inputs = {"n": n, "c1": c1, "c2": c2, "c3": c3, "q": q}
    q1 = abs(q - 1.0) < Q_SWITCH_TOL
    if n % 2 == 1:
        d = math.sqrt(c1 * c1 + c2 * c2 + c3 * c3)
        hi_c, lo_c = (1.0 + c) / dim, (1.0 - c) / dim
        hi_d, lo_d = (1.0 + d) / dim, (1.0 - d) / dim
        if q1:
            value = 2 ** (n - 1) * float(
                xlogy(hi_d, hi_d) + xlogy(lo_d, lo_d) - xlogy(hi_c, hi_c) - xlogy(lo_c, lo_c)
            )
            return ClosedFormResult(value, "odd-n-q1-limit", inputs)
        value = -(2 ** (n - 1) / (q - 1.0)) * (
            hi_c**q + lo_c**q - hi_d**q - lo_d**q
        )
        return ClosedFormResult(float(value), "odd-n", inputs)
    lams = [max(lam, 0.0) / dim for lam in _pauli_lambdas(n, c1, c2, c3)]
    hi_c, lo_c = (1.0 + c) / dim, (1.0 - c) / dim
    if q1:
        value = 2 ** (n - 2) * float(
            sum(xlogy(lam, lam) for lam in lams)
            - 2.0 * xlogy(hi_c, hi_c)
            - 2.0 * xlogy(lo_c, lo_c)
        )
        return ClosedFormResult(value, "even-n-q1-limit", inputs)
    value = -(2 ** (n - 2) / (q - 1.0)) * (
        2.0 * hi_c**q + 2.0 * lo_c**q - sum(lam**q for lam in lams)
    )
    return ClosedFormResult(float(value), "even-n", inputs)


def optimal_measured_entropy(n: int, c1: float, c2: float, c3: float, q: float) -> float:
    """Minimal measured-state entropy min_Phi S_q(Phi(rho)) for the Pauli family.

    Attained with every qubit measured along the axis of the largest |c_i|;
    the measured spectrum is (1 +/- c)/2^n with multiplicity 2^(n-1) each.
    """
    q = _check_q(q)
    pauli_diagonal_state(n, c1, c2, c3)
    n = int(n)
    c = max(abs(c1), abs(c2), abs(c3))
    dim = 2**n
    hi, lo = (1.0 + c) / dim, (1.0 - c) / dim
    if abs(q - 1.0) < Q_SWITCH_TOL:
        return float(-(2 ** (n - 1)) * (xlogy(hi, hi) + xlogy(lo, lo)))
    return float((1.0 - 2 ** (n - 1) * (hi**q + lo**q)) / (q - 1.0))


def werner_ghz_measured_spectrum(mu: float, phi: ProductMeasurement) -> np.ndarray:
    """Predicted spectrum of the measured GHZ-dilution state, one value per outcome.

    For axes (a_i, b_i, g_i) and outcome bits m, the eigenvalue is
    (1-mu)/2^n + (mu/2) [prod (1+s_i g_i)/2 + prod (1-s_i g_i)/2
                         + 2 Re prod s_i (a_i - i b_i)/2],  s_i = (-1)^m_i,

    which follows from <0| (I + s a.sigma)/2 |1> = s (a - i b)/2. The values
    are exactly the outcome probabilities since the measured state is
    diagonal in the measurement basis.
    """
    mu = float(mu)
    if not 0.0 <= mu <= 1.0:
        raise ValueError("mixing weight mu must lie in [0, 1]")
    n = len(phi)
    if n < 2:
        raise ValueError("family requires at least two qubits")
    axes = [m.axis for m in phi]
    out = np.empty(2**n)
    for idx in range(2**n):
        plus = 1.0
        minus = 1.0
        cross = 1.0 + 0.0j
        for i, (a, b, g) in enumerate(axes):
            s = -1.0 if (idx >> (n - 1 - i)) & 1 else 1.0
            plus *= (1.0 + s * g) / 2.0
            minus *= (1.0 - s * g) / 2.0
            cross *= s * (a - 1j * b) / 2.0
        out[idx] = (1.0 - mu) / 2**n + (mu / 2.0) * (plus + minus + 2.0 * cross.real)
    return out


def werner_ghz_optimal_measured_spectrum(n: int, mu: float) -> np.ndarray:
    """Spectrum of the all-z measured GHZ-dilution state: the majorization ceiling.

    Two entries (1-mu)/2^n + mu/2 and 2^n - 2 entries (1-mu)/2^n; every
    other product measurement yields a spectrum majorized by this one.
    """
    n = int(n)
    if n < 2:
        raise ValueError("family requires at least two qubits")
    mu = float(mu)
    if not 0.0 <= mu <= 1.0:
        raise ValueError("mixing weight mu must lie in [0, 1]")
    d = 2**n
    out = np.full(d, (1.0 - mu) / d)
    out[:2] += mu / 2.0
    return out


def pauli_diagonal_measured_spectrum(
    n: int, c1: float, c2: float, c3: float, phi: ProductMeasurement
) -> np.ndarray:
    """Predicted measured-state spectrum (1 +/- t)/2^n for the Pauli family.

    t = c1 prod a_i + c2 prod b_i + c3 prod g_i over the measurement axes;
    each sign carries multiplicity 2^(n-1). |t| never exceeds max |c_i|.
    """
    pauli_diagonal_state(n, c1, c2, c3)
    n = int(n)
    if len(phi) != n:
        raise ValueError(
            f"measurement arity {len(phi)} does not match qubit count {n}"
        )
    pa = pb = pg = 1.0
    for m in phi:
        a, b, g = m.axis
        pa *= a
        pb *= b
        pg *= g
    t = float(c1) * pa + float(c2) * pb + float(c3) * pg
    d = 2**n
    half = 2 ** (n - 1)
    return np.concatenate(
        [np.full(half, (1.0 + t) / d), np.full(half, (1.0 - t) / d)]
    )
