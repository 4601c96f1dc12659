"""
Finding the atoms of N0[alpha].

When alpha > 1 the atoms are 1, alpha, ..., alpha^(sigma-1), where sigma is the
first power that is a nonnegative integer combination of lower powers. That
happens exactly when the minimal polynomial divides a monic polynomial whose
other coefficients are all <= 0.
"""
# %%
from semiring_atlas import IntPolynomial, classify, tail_representation, unique_positive_root
from semiring_atlas.genengine import count_tail_witnesses, tail_witnesses
from semiring_atlas.oracle import brute_force_tail, numeric_sanity

m = IntPolynomial.parse("x^3-3x^2+5x-8")
alpha = unique_positive_root(m)
for n in range(3, 7):
    w = tail_representation(m, alpha, n)
    print(n, "no witness" if w is None else f"{w.product} = ({m})({w.cofactor})")

# %% All witnesses at n = 5, in canonical order, and the brute-force cross-check.
print([w.tail_coeffs for w in tail_witnesses(m, alpha, 5)])
print(brute_force_tail(m, alpha, 5))
print("count:", count_tail_witnesses(m, alpha, 5))
print("interval check:", numeric_sanity(m, IntPolynomial.parse("x^5-5x^2-4x-32")))

# %% The full report.
report = classify(m)
print(report.summary())
print("atoms:", report.atoms())

# %% Other outcomes.
for text in ["x^3-2x-5", "x^3-2x^2+2x-5", "x^3-2x^2+5x-20", "x^3+2x^2-5", "x^2+x-1", "x^3-x^2+2x-1"]:
    print(classify(IntPolynomial.parse(text)).summary())

# %% A search budget that is too small is reported as undecided, not as infinite.
print(classify(IntPolynomial.parse("x^3-5x^2+4x-1"), n_max=8).summary())
print(classify(IntPolynomial.parse("x^3-5x^2+4x-1"), n_max=13).summary())
