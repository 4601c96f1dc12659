"""
Certified real roots and the weak Perron test.

An algebraic number is weak Perron when no conjugate is larger in modulus. The
check below never uses floating point: it works with Sturm chains, rational
intervals, and the polynomial whose roots are the pairwise products of roots.
"""
# %%
from fractions import Fraction

import numpy as np

from semiring_atlas import IntPolynomial, is_weak_perron, refine, sturm_chain, unique_positive_root
from semiring_atlas.realroots import count_positive_roots, pair_product_polynomial

m = IntPolynomial.parse("x^3-3x^2+5x-8")
print("Sturm chain:", [str(p) for p in sturm_chain(m)])
print("positive roots (count, Descartes bound):", tuple(count_positive_roots(m)))

alpha = unique_positive_root(m)
print("isolating interval:", alpha.interval.lo, alpha.interval.hi)
narrow = refine(alpha, Fraction(1, 10**12))
print("refined:", narrow.to_dict())

# %% The numpy roots give a quick picture of the conjugates.
for r in np.roots(m.descending()):
    print(f"  root {r:.6f}   |root| = {abs(r):.6f}")

# %% The exact decision agrees, by two independent routes for this shape.
print(is_weak_perron(alpha, "general"))
print(is_weak_perron(alpha, "cubic"))

# %% A family that fails: a negative real conjugate beats alpha.
for b in (4, 6, 9, 12):
    f = IntPolynomial.from_descending([1, 1, -b, -2])
    v = is_weak_perron(unique_positive_root(f), "general")
    print(f"x^3+x^2-{b}x-2: weak Perron = {v.is_weak_perron}")

# %% The pair-product polynomial has degree d^2.
g = pair_product_polynomial(m)
print("pair products of roots satisfy", g)
