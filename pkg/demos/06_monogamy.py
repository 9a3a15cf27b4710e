"""Telescoping decomposition, the monogamy inequality, and its edge case."""

import numpy as np

from qdiscord.discord import OptimizerConfig
from qdiscord.linalg import permute_qubits
from qdiscord.measurement import BlochMeasurement, ProductMeasurement
from qdiscord.monogamy import (
    bros_counterexample_audit,
    decompose_induced_gqd,
    monogamy_report,
)
from qdiscord.states import bros_counterexample, random_density_matrix, werner_ghz

opt = OptimizerConfig(starts=8, max_evals=800)

# The induced discord of any fixed measurement splits exactly into nested
# bipartite pieces; the residual is pure floating-point noise.
rng = np.random.default_rng(0)
rho = random_density_matrix(3, seed=1)
v = rng.normal(size=(3, 3))
phi = ProductMeasurement(BlochMeasurement(row / np.linalg.norm(row)) for row in v)
ledger = decompose_induced_gqd(rho, phi, 0.5)
print("decomposition total:   ", ledger.total)
print("decomposition terms:   ", ledger.terms)
print("decomposition residual:", ledger.residual)
print()

# On the GHZ-dilution family the nested values dominate the pairwise ones,
# so the monogamy inequality holds with room to spare.
report = monogamy_report(werner_ghz(3, 0.5), 0.9, opt)
print("ghz-dilution whole:   ", round(report.whole, 6))
print("pairwise:             ", [round(v, 6) for v in report.pairwise])
print("nested:               ", [round(v, 6) for v in report.nested])
print("condition holds:      ", report.condition_holds)
print("inequality holds:     ", report.inequality_holds)
print()

# The rank-2 counterexample splits the two notions: the domination
# condition fails while the inequality itself survives (with equality).
audit = bros_counterexample_audit(0.9, opt)
print("counterexample at q=0.9")
print("  whole:        ", round(audit.whole, 6))
print("  cut {0}|{1,2}:", round(audit.first_vs_rest, 9))
print("  pair (0,1):   ", round(audit.pair_01, 6))
print("  pair (0,2):   ", round(audit.pair_02, 9))
print("  condition holds: ", audit.condition_holds)
print("  inequality holds:", audit.inequality_holds)
print()

# Relabeling the qubits so the correlated middle one is distinguished
# breaks the inequality too: monogamy is ordering-sensitive.
relabeled = permute_qubits(bros_counterexample(), (1, 0, 2))
report = monogamy_report(relabeled, 0.9, opt)
print("middle qubit distinguished:")
print("  whole:", round(report.whole, 6), " pairwise:", [round(v, 6) for v in report.pairwise])
print("  inequality holds:", report.inequality_holds)
