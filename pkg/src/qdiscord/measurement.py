"""Local projective measurements and the channels they induce.

A single-qubit measurement is a unit Bloch axis a; its projectors are
(I +/- a.sigma)/2. Product measurements apply one such pair per qubit and
the induced channel is the non-selective sum over outcome projectors.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable

import numpy as np

from .linalg import (
    DensityMatrix,
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    kron_all,
)

__all__ = [
    "BlochMeasurement",
    "ProductMeasurement",
    "projectors",
    "apply_full",
    "apply_single_site",
    "measurement_chain",
    "outcome_probabilities",
]


class BlochMeasurement:
    """Projective single-qubit measurement along a unit Bloch axis."""

    __slots__ = ("axis",)

    UNIT_TOL = 1e-10

    def __init__(self, axis) -> None:
        a = np.array(axis, dtype=float)
        if a.shape != (3,):
            raise ValueError("measurement axis must be a real 3-vector")
        if abs(np.linalg.norm(a) - 1.0) > self.UNIT_TOL:
            raise ValueError("measurement axis must have unit length")
        a.setflags(write=False)
        self.axis = a

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "BlochMeasurement":
        """Axis (sin t cos p, sin t sin p, cos t) for polar t, azimuth p."""
        st = math.sin(theta)
        return cls((st * math.cos(phi), st * math.sin(phi), math.cos(theta)))

    def __repr__(self) -> str:
        return f"BlochMeasurement(axis=({self.axis[0]:+.6f}, {self.axis[1]:+.6f}, {self.axis[2]:+.6f}))"


class ProductMeasurement:
    """One Bloch measurement per qubit, applied jointly as a product."""

    __slots__ = ("per_qubit",)

    def __init__(self, per_qubit: Iterable[BlochMeasurement]) -> None:
        ms = tuple(per_qubit)
        if not ms:
            raise ValueError("product measurement needs at least one factor")
        for m in ms:
            if not isinstance(m, BlochMeasurement):
                raise TypeError("per-qubit entries must be BlochMeasurement")
        self.per_qubit = ms

    @classmethod
    def from_angles(cls, pairs: Iterable[tuple[float, float]]) -> "ProductMeasurement":
        return cls(BlochMeasurement.from_angles(t, p) for t, p in pairs)

    @classmethod
    def uniform_axis(cls, n: int, axis) -> "ProductMeasurement":
        """The same axis on every one of n qubits."""
        m = BlochMeasurement(axis)
        return cls((m,) * int(n))

    def __len__(self) -> int:
        return len(self.per_qubit)

    def __iter__(self):
        return iter(self.per_qubit)

    def __repr__(self) -> str:
        return f"ProductMeasurement({list(self.per_qubit)!r})"


def projectors(m: BlochMeasurement) -> tuple[np.ndarray, np.ndarray]:
    """Rank-1 projector pair (I + a.sigma)/2, (I - a.sigma)/2."""
    a1, a2, a3 = m.axis
    dotted = a1 * SIGMA_X + a2 * SIGMA_Y + a3 * SIGMA_Z
    return (IDENTITY_2 + dotted) / 2.0, (IDENTITY_2 - dotted) / 2.0


def _basis_columns(theta: float, phi: float) -> np.ndarray:
    """2x2 unitary whose columns are the +/- axis eigenvectors for (theta, phi)."""
    ct, st = math.cos(theta / 2.0), math.sin(theta / 2.0)
    ph = complex(math.cos(phi), math.sin(phi))
    return np.array([[ct, -st], [ph * st, ph * ct]], dtype=complex)


def _check_arity(phi: ProductMeasurement, rho: DensityMatrix) -> None:
    if len(phi) != rho.num_qubits:
        raise ValueError(
            f"measurement arity {len(phi)} does not match qubit count {rho.num_qubits}"
        )


def apply_full(phi: ProductMeasurement, rho: DensityMatrix) -> DensityMatrix:
    """Non-selective product measurement: sum_j P_j rho P_j over all outcomes."""
    _check_arity(phi, rho)
    n = rho.num_qubits
    pairs = [projectors(m) for m in phi.per_qubit]
    out = np.zeros_like(rho.matrix)
    for bits in itertools.product((0, 1), repeat=n):
        p = kron_all(*(pairs[i][b] for i, b in enumerate(bits)))
        out += p @ rho.matrix @ p
    return DensityMatrix(out)


def apply_single_site(k: int, m: BlochMeasurement, rho: DensityMatrix) -> DensityMatrix:
    """Measure only qubit k, leaving the other tensor factors untouched."""
    n = rho.num_qubits
    k = int(k)
    if not 0 <= k < n:
        raise ValueError("site index out of range")
    before = np.eye(2**k, dtype=complex)
    after = np.eye(2 ** (n - k - 1), dtype=complex)
    out = np.zeros_like(rho.matrix)
    for proj in projectors(m):
        p = kron_all(before, proj, after)
        out += p @ rho.matrix @ p
    return DensityMatrix(out)


def measurement_chain(phi: ProductMeasurement, rho: DensityMatrix) -> list[DensityMatrix]:
    """States sigma_0..sigma_n obtained by measuring qubits 0..k-1 in turn.

    sigma_0 is the input and sigma_n equals apply_full(phi, rho); the
    single-site channels commute, so the chosen order is immaterial.
    """
    _check_arity(phi, rho)
    chain = [rho]
    current = rho
    for k, m in enumerate(phi.per_qubit):
        current = apply_single_site(k, m, current)
        chain.append(current)
    return chain


def outcome_probabilities(phi: ProductMeasurement, rho: DensityMatrix) -> np.ndarray:
    """Probabilities of the 2^n outcomes, indexed with qubit 0 as the high bit."""
    _check_arity(phi, rho)
    n = rho.num_qubits
    pairs = [projectors(m) for m in phi.per_qubit]
    probs = np.empty(2**n)
    for idx, bits in enumerate(itertools.product((0, 1), repeat=n)):
        p = kron_all(*(pairs[i][b] for i, b in enumerate(bits)))
        probs[idx] = np.trace(p @ rho.matrix).real
    return probs
