"""
Iterative proportional fitting, one table at a time
===================================================
"""

import numpy as np

from figdist import closed_form_fit, ipfp_fit, load_reference

a = load_reference("gamma1").edge_lengths
b = load_reference("gamma2").edge_lengths

line = ipfp_fit(a, b, trace=True)
np.set_printoptions(precision=4, suppress=True)
for label, table in line.trace:
    print(label)
    print(np.column_stack([table, table.sum(axis=1)]))
    print("column totals", table.sum(axis=0))
    print()

# two columns means one sweep already hits both margins
print("iterations:", line.iterations)
print("slope:", round(line.slope, 4), "closed form:", round(closed_form_fit(a, b).slope, 4))
