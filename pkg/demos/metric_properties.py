"""
Checking the metric properties numerically
==========================================

Random figures on one shared graph: symmetry, the triangle inequality and
zero distance between scaled copies. The last part shows that rho alone is
not a metric once the edge lengths are allowed to be tiny.
"""

import itertools

import numpy as np

from figdist import Figure, distance, rho, scale_figure

rng = np.random.default_rng(42)

# a 5-cycle with a chord
vertices = ["a", "b", "c", "d", "e"]
edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("a", "c")]
z = 8


def figure(name):
    return Figure(name, vertices, edges,
                  rng.uniform(0.5, 50, size=len(edges)).tolist(),
                  rng.uniform(0.01, 6.28, size=z).tolist())


worst = -np.inf
for _ in range(300):
    f, g, h = (figure(n) for n in "fgh")
    dfg, dgh, dfh = distance(f, g).d, distance(g, h).d, distance(f, h).d
    worst = max(worst, dfh - (dfg + dgh))
    assert abs(dfg - distance(g, f).d) < 1e-12
print("largest d(f,h) - d(f,g) - d(g,h):", worst)

f = figure("f")
print("d(f, 7f) =", distance(f, scale_figure(f, 7.0)).d)

a, b, c = [10, 1], [0.01, 0.01], [1, 10]
print("rho(a,c) =", round(rho(a, c), 4), " rho(a,b)+rho(b,c) =", round(rho(a, b) + rho(b, c), 4))
