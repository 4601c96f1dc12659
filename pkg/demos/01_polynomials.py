"""
Exact integer polynomials: parsing, the positive/negative split, and monic division.

Run with ``python3 demos/01_polynomials.py``.
"""
# %%
from semiring_atlas import IntPolynomial, divrem, is_negative_tail, sign_variations, split_minimal_pair
from semiring_atlas.exactpoly import normalize_primitive, rational_root_screen

m = IntPolynomial.parse("x^3-3x^2+5x-8")
print("stored ascending:", m.coeffs)
print("canonical text:  ", m.to_canonical())
print("human text:      ", m.to_human())

# %% Coefficient lists on the command line and in JSON are leading-first.
assert IntPolynomial.parse("1,-3,5,-8") == m

# %% Every polynomial splits as p - q with nonnegative, disjointly supported parts.
pair = split_minimal_pair(IntPolynomial.parse("x^3+x^2-5x-10"))
print("p =", pair.positive_part, "  q =", pair.negative_part)

# %% Normalizing to a primitive polynomial with positive leading coefficient.
print(normalize_primitive(IntPolynomial.parse("-6x^2+12")))

# %% Descartes' rule needs the number of sign changes.
for text in ["x^3-3x^2+5x-8", "x^3-x^2-x-1", "x^3+x-2"]:
    print(f"{text:>16}: {sign_variations(IntPolynomial.parse(text))} sign changes")

# %% Division by a monic polynomial stays inside the integers.
H = IntPolynomial.parse("x^5-5x^2-4x-32")
q, r = divrem(H, m)
print(f"{H} = ({m})({q}) + {r or 0}")
print("negative tail?", is_negative_tail(H))

# %% For cubics the rational root test decides irreducibility.
for text in ["x^3+x^2-5x-10", "x^3+x^2-5x-2"]:
    print(text, "rational roots:", rational_root_screen(IntPolynomial.parse(text)))
