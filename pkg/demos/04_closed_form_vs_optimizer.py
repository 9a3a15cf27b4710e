"""Closed formulas against the brute-force search, side by side.

The two routes share no code past the entropy helpers: the formulas come
from the known optimal measurement, while the optimizer searches all
product measurements numerically. Agreement to ~1e-9 is the strongest
internal consistency check this package has.
"""

from qdiscord.analytic import pauli_diagonal_gqd, werner_ghz_gqd
from qdiscord.discord import q_gqd
from qdiscord.states import (
    pauli_diagonal_state,
    random_pauli_diagonal_coefficients,
    werner_ghz,
)

print(f"{'family':<26} {'q':>5} {'closed form':>14} {'optimizer':>14} {'gap':>10}")

for mu in (0.2, 0.8):
    for q in (0.5, 1.0):
        closed = werner_ghz_gqd(3, mu, q).value
        numeric = q_gqd(werner_ghz(3, mu), q).value
        print(
            f"{'ghz-dilution mu=' + str(mu):<26} {q:>5} {closed:>14.9f} "
            f"{numeric:>14.9f} {abs(closed - numeric):>10.2e}"
        )

for n in (2, 3):
    c1, c2, c3 = random_pauli_diagonal_coefficients(n, seed=n)
    rho = pauli_diagonal_state(n, c1, c2, c3)
    label = f"pauli n={n}"
    for q in (0.5, 1.0):
        closed = pauli_diagonal_gqd(n, c1, c2, c3, q).value
        numeric = q_gqd(rho, q).value
        print(
            f"{label:<26} {q:>5} {closed:>14.9f} "
            f"{numeric:>14.9f} {abs(closed - numeric):>10.2e}"
        )
