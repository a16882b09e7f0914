"""
The four bundled reference pairs
================================

Loads each pair, prints alpha / rho / d and the fitted slope.
"""

from figdist import distance, load_reference
from figdist.reference import REFERENCE_PAIRS

for a, b in REFERENCE_PAIRS:
    r = distance(load_reference(a), load_reference(b))
    print(f"{a} vs {b}: alpha={r.alpha:.4f} rho={r.rho:.4f} d={r.d:.4f} m={r.slope:.4f}")

# beta moves d between the two components
fa, fb = load_reference("gamma1"), load_reference("gamma2")
for beta in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"beta={beta:<5} d={distance(fa, fb, beta).d:.4f}")
