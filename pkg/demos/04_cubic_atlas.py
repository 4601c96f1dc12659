"""
The cubic atlas: coefficient rules for x^3 +- a x^2 +- b x - c, checked against
the general engine over a grid.
"""
# %%
from collections import Counter

import numpy as np

from semiring_atlas import RULES, SHAPES, IntPolynomial, cross_check
from semiring_atlas.cubicatlas import scan, scan_instances

for tag, text in RULES.items():
    print(f"{tag:>26}: {text}")

# %%
v = cross_check(IntPolynomial.parse("x^3-2x^2+5x-20"))
print(v.rule_applied, v.delegated, v.effective_sigma, v.claims)

# %% A small grid, every shape.
results = scan(scan_instances(SHAPES, range(1, 5), range(1, 5), range(1, 5)), n_max=16)
print(len(results), "irreducible instances; all agree:", all(r.agrees for r, _ in results))
print(Counter(r.rule for r, _ in results).most_common())

# %% Atom counts for x^3 - a x^2 + b x - c at a = 2, as a (b, c) table.
table = np.full((6, 8), -1)
for row, _ in scan(scan_instances(["x3-ax2+bx-c"], [2], range(1, 7), range(1, 9)), n_max=16):
    if row.generation == "finitely_generated":
        table[row.b - 1, row.c - 1] = int(row.sigma_or_bound)
print("sigma for a = 2 (rows b = 1..6, columns c = 1..8, -1 = not finitely generated or reducible)")
print(table)
