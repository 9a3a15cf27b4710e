"""Tour of the state constructors: spectra and marginals of each family."""

import numpy as np

from qdiscord.linalg import partial_trace, state_spectrum
from qdiscord.states import (
    alpha_state,
    bros_counterexample,
    pauli_diagonal_state,
    random_density_matrix,
    werner_ghz,
)

# GHZ diluted by white noise: two raised eigenvalues, the rest flat.
rho = werner_ghz(3, 0.5)
print("werner_ghz(3, 0.5) spectrum:", np.round(state_spectrum(rho).probs, 6))
print("qubit-0 marginal:\n", np.round(partial_trace(rho, (0,)).matrix.real, 3))
print()

# Pauli-diagonal family: all single-qubit marginals are maximally mixed too.
rho = pauli_diagonal_state(3, 0.3, -0.2, 0.4)
print("pauli_diagonal_state(3, 0.3, -0.2, 0.4) spectrum:")
print(np.round(state_spectrum(rho).probs, 6))
print()

# The two-qubit alpha slice: one eigenvalue is alpha, one is exactly zero.
for alpha in (0.3, 0.58):
    probs = state_spectrum(alpha_state(alpha)).probs
    print(f"alpha_state({alpha}) spectrum:", np.round(probs, 6))
print()

# Rank-2 three-qubit mixture used in the monogamy demos.
rho = bros_counterexample()
print("counterexample spectrum:", np.round(state_spectrum(rho).probs, 6))
print()

# Random Hilbert-Schmidt states are reproducible by seed.
rho = random_density_matrix(2, seed=7)
print("random 2-qubit state purity:", np.trace(rho.matrix @ rho.matrix).real)
