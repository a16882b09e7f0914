"""
Distance matrix and nearest neighbours over a small corpus
==========================================================

Builds a throwaway corpus from the hexagon pair plus a few scaled and
perturbed copies, then ranks them against gamma1.
"""

import tempfile
from pathlib import Path

import numpy as np

from figdist import Figure, load_reference, scale_figure
from figdist.corpus import distance_matrix, matrix_csv, nearest
from figdist.figure import dump_figure
from figdist.reference import reference_dir

rng = np.random.default_rng(0)
base = load_reference("gamma1")

figs = [base, load_reference("gamma2"), scale_figure(base, 3.0, name="gamma1_x3")]
for i in range(3):
    lengths = np.array(base.edge_lengths) * rng.uniform(0.8, 1.2, size=base.n)
    angles = np.clip(np.array(base.angles) + rng.normal(0, 0.1, size=base.z), 0.01, 6.0)
    figs.append(Figure(f"jitter{i}", base.vertices, base.edges, lengths.tolist(), angles.tolist()))

with tempfile.TemporaryDirectory() as tmp:
    for f in figs:
        dump_figure(f, Path(tmp) / f"{f.name}.figure.json")
    print(matrix_csv(distance_matrix(tmp)))

for name, d in nearest(base, figs[1:], k=5):
    print(f"{name:10s} {d:.4f}")

# the full reference set: four isomorphism classes, cross-class cells are incomparable
print(matrix_csv(distance_matrix(reference_dir())))
