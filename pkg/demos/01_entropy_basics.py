"""Tsallis entropy warm-up: deformed logs, limits, and pseudo-additivity."""

import numpy as np

from qdiscord.entropy import q_log, tsallis_entropy, tsallis_entropy_probs
from qdiscord.linalg import DensityMatrix, Spectrum

# The q-logarithm interpolates: at q=1 it is the natural log.
for q in (0.5, 0.9, 1.0, 2.0):
    print(f"ln_q(4) at q={q}: {q_log(4.0, q):.6f}  (ln 4 = {np.log(4.0):.6f})")
print()

# Entropy of a fair coin as q varies. Larger q flattens the scale.
coin = Spectrum([0.5, 0.5])
for q in (0.25, 0.5, 1.0, 2.0, 4.0):
    print(f"H_q(fair coin) at q={q}: {tsallis_entropy_probs(coin, q):.6f}")
print()

# Pseudo-additivity on a product: S(AB) = S(A) + S(B) + (1-q) S(A) S(B).
a = DensityMatrix(np.diag([0.7, 0.3]))
b = DensityMatrix(np.diag([0.6, 0.4]))
ab = DensityMatrix(np.kron(a.matrix, b.matrix))
q = 0.5
sa, sb, sab = (tsallis_entropy(x, q) for x in (a, b, ab))
print(f"S_q(A) = {sa:.6f}, S_q(B) = {sb:.6f}")
print(f"S_q(AB)            = {sab:.10f}")
print(f"S_a + S_b + (1-q) S_a S_b = {sa + sb + (1 - q) * sa * sb:.10f}")
