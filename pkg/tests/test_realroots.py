import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from sympy.polys.subresultants_qq_zz import res as sylvester_res
from hypothesis import given, settings, strategies as st

from semiring_atlas.exactpoly import IntPolynomial, rational_root_screen, sign_variations
from semiring_atlas.realroots import (
    AlgebraicReal,
    Comparison,
    RationalInterval,
    RootCountError,
    bisection_steps,
    cauchy_bound,
    compare_with_one,
    count_positive_roots,
    count_roots,
    is_weak_perron,
    isolate_real_roots,
    pair_product_polynomial,
    positive_roots,
    refine,
    resultant,
    sign_at,
    sturm_chain,
    unique_positive_root,
)

P = IntPolynomial.parse
x = sympy.Symbol("x")


def sym(p):
    return sympy.Poly(p.descending(), x)


def random_poly(rng, max_degree=6, span=10):
    while True:
        coeffs = [rng.randint(-span, span) for _ in range(rng.randint(1, max_degree) + 1)]
        p = IntPolynomial(coeffs)
        if p.degree >= 1:
            return p


def test_sturm_chain_examples():
    chain = sturm_chain(P("x^2-2"))
    assert chain[0] == P("x^2-2") and chain[1] == P("x")
    assert chain[2].degree == 0 and chain[2].leading > 0
    assert count_roots(P("x^2+1")) == 0
    assert count_roots(P("x^3-3x^2+5x-8")) == 1


def test_count_positive_roots_examples():
    assert count_positive_roots(P("x^3-3x^2+5x-8")).count == 1
    assert count_positive_roots(P("x^2-3x+2")) == (2, 2)
    assert count_positive_roots(P("x^2+1")).count == 0
    assert count_positive_roots(P("x^4-x^2")).count == 1


def test_unique_positive_root_examples():
    m = P("x^3-3x^2+5x-8")
    alpha = unique_positive_root(m)
    assert m(2) == -2 and m(3) == 7
    assert m.sign_at(alpha.lo) < 0 < m.sign_at(alpha.hi)
    narrow = refine(alpha, Fraction(1, 8))
    assert 2 < narrow.lo < narrow.hi < 3
    r2 = unique_positive_root(P("x^2-2"))
    assert r2.lo > 0 and r2.lo ** 2 < 2 < r2.hi ** 2
    with pytest.raises(RootCountError) as err:
        unique_positive_root(P("x^2-3x+2"))
    assert err.value.count == 2


def test_refine_examples():
    r2 = unique_positive_root(P("x^2-2"))
    narrow = refine(r2, Fraction(1, 4))
    assert narrow.interval.width <= Fraction(1, 4)
    assert narrow.lo ** 2 < 2 < narrow.hi ** 2
    m = P("x^3-3x^2+5x-8")
    a = refine(unique_positive_root(m), Fraction(1, 100))
    assert a.interval.width <= Fraction(1, 100)
    assert m(a.lo) < 0 < m(a.hi)
    assert refine(a, Fraction(1)) is a
    with pytest.raises(ValueError):
        refine(a, Fraction(0))


def test_refine_around_rational_root():
    a = unique_positive_root(P("x-2"))
    narrow = refine(a, Fraction(1, 1000))
    assert narrow.lo < 2 < narrow.hi
    assert narrow.is_rational() and narrow.exact_value() == 2


def test_compare_with_one_examples():
    assert compare_with_one(unique_positive_root(P("x^2+x-1"))) is Comparison.LESS
    assert compare_with_one(unique_positive_root(P("x^2-2"))) is Comparison.GREATER
    assert compare_with_one(unique_positive_root(P("x-1"))) is Comparison.EQUAL
    # roots close to 1 from both sides
    assert compare_with_one(unique_positive_root(P("1000x-1001"))) is Comparison.GREATER
    assert compare_with_one(unique_positive_root(P("x^2-x-1000000").reciprocal() * -1)) is Comparison.LESS


def test_interval_serialization():
    r = refine(unique_positive_root(P("x^2-2")), Fraction(1, 8))
    d = r.to_dict()
    assert Fraction(d["lo"]) == r.lo and Fraction(d["hi"]) == r.hi
    assert d["decimal_digits"] == 12 and d["decimal"].startswith("1.414213562")
    assert RationalInterval(Fraction(1), Fraction(3, 2)).to_dict() == {"lo": "1", "hi": "3/2"}


def test_weak_perron_examples():
    assert is_weak_perron(unique_positive_root(P("x^3-3x^2+5x-8")), "general")
    assert is_weak_perron(unique_positive_root(P("x^3-3x^2+5x-8")), "cubic")
    assert not is_weak_perron(unique_positive_root(P("x^3+x^2-4x-2")), "general")
    assert not is_weak_perron(unique_positive_root(P("x^3+x^2-4x-2")), "cubic")
    assert is_weak_perron(unique_positive_root(P("x-2")))
    # golden ratio: conjugate -0.618
    assert is_weak_perron(unique_positive_root(P("x^2-x-1")), "general")
    # x^2+x-1: conjugate -1.618 beats 0.618
    assert not is_weak_perron(unique_positive_root(P("x^2+x-1")), "general")


def test_weak_perron_boundary_is_exact():
    # x^4 - 2: conjugates +-i 2^(1/4) have modulus exactly alpha.
    assert is_weak_perron(unique_positive_root(P("x^4-2")), "general")
    # x^2 - 2: -sqrt 2 ties with sqrt 2.
    assert is_weak_perron(unique_positive_root(P("x^2-2")), "general")


@pytest.mark.parametrize("b", range(4, 21))
def test_negative_family_not_weak_perron(b):
    alpha = unique_positive_root(IntPolynomial.from_descending([1, 1, -b, -2]))
    assert not is_weak_perron(alpha, "general")
    assert not is_weak_perron(alpha, "cubic")


def numeric_weak_perron(p):
    roots = np.roots(p.descending())
    alpha = max(r.real for r in roots if abs(r.imag) < 1e-9 and r.real > 0)
    return max(abs(r) for r in roots), alpha


def test_weak_perron_cubic_fast_path_agrees_with_general_on_grid():
    checked = 0
    for a in range(1, 7):
        for b in range(1, 7):
            for c in range(1, 7):
                m = IntPolynomial.from_descending([1, -a, b, -c])
                if rational_root_screen(m) or count_positive_roots(m).count != 1:
                    continue
                alpha = unique_positive_root(m)
                general = is_weak_perron(alpha, "general").is_weak_perron
                assert general == (b**3 <= a**3 * c), m
                assert is_weak_perron(alpha, "cubic").is_weak_perron == general
                checked += 1
    assert checked > 100


def test_weak_perron_matches_numpy_away_from_ties():
    rng = random.Random(7)
    seen = 0
    while seen < 60:
        p = random_poly(rng, 5, 6)
        if p.leading < 0:
            p = -p
        if p.coeff(0) == 0 or rational_root_screen(p) or p.degree < 2:
            continue
        roots = positive_roots(p)
        if not roots:
            continue
        top, alpha = numeric_weak_perron(p)
        gap = top - alpha
        if abs(gap) < 1e-6:
            continue
        verdict = is_weak_perron(roots[-1], "general").is_weak_perron
        assert verdict == (gap <= 0), p
        seen += 1


def test_resultant_matches_sylvester_determinant():
    # sympy.resultant can differ in sign; res() is the plain Sylvester determinant.
    rng = random.Random(3)
    for _ in range(40):
        f, g = random_poly(rng, 4), random_poly(rng, 4)
        assert resultant(f, g) == sylvester_res(sym(f).as_expr(), sym(g).as_expr(), x)
    assert resultant(P("4x-10"), P("x^3")) == 1000
    assert resultant(P("x-1"), P("x-2")) == -1


def test_pair_product_roots():
    # roots of x^2 - 2 are +-sqrt 2; pair products are 2, -2, -2, 2
    g = pair_product_polynomial(P("x^2-2"))
    assert g(2) == 0 and g(-2) == 0
    m = P("x^3-3x^2+5x-8")
    g = pair_product_polynomial(m)
    rs = np.roots(m.descending())
    for i in range(3):
        for j in range(3):
            v = complex(np.polyval(np.array(g.descending(), dtype=float), rs[i] * rs[j]))
            scale = float(np.polyval(np.abs(np.array(g.descending(), dtype=float)), abs(rs[i] * rs[j])))
            assert abs(v) <= 1e-8 * scale


def test_sign_at_algebraic():
    alpha = unique_positive_root(P("x^2-2"))
    assert sign_at(alpha, P("x^2-2")) == 0
    assert sign_at(alpha, P("x-1")) == 1
    assert sign_at(alpha, P("2x-3")) == -1
    assert sign_at(alpha, P("x^4-4")) == 0


def test_isolate_real_roots_against_sympy():
    rng = random.Random(11)
    for _ in range(100):
        p = random_poly(rng, 6)
        iso = isolate_real_roots(p)
        exact = sympy.Poly(p.descending(), x).count_roots()
        distinct = len(set(sympy.real_roots(sym(p))))
        assert len(iso) == distinct <= exact
        for r in iso:
            assert r.lo < r.hi or r.is_rational()
        for a, b in zip(iso, iso[1:]):
            assert a.hi <= b.lo


def test_roots_inside_cauchy_bound():
    rng = random.Random(5)
    for _ in range(100):
        p = random_poly(rng, 6)
        bound = float(cauchy_bound(p))
        assert all(abs(r) < bound for r in np.roots(p.descending()))


def test_descartes_and_sturm_thousand_seeded():
    rng = random.Random(20240601)
    for _ in range(1000):
        p = random_poly(rng)
        count, bound = count_positive_roots(p)
        assert count <= bound == sign_variations(p)
        if p.coeff(0) != 0 and count == len([r for r in set(sympy.real_roots(sym(p))) if r > 0]):
            if all(sympy.Poly(p.descending(), x).sqf_list()[1][i][1] == 1
                   for i in range(len(sympy.Poly(p.descending(), x).sqf_list()[1]))):
                assert (bound - count) % 2 == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=6), st.integers(1, 40))
def test_refinement_keeps_bracket(coeffs, steps):
    p = IntPolynomial(coeffs)
    if p.degree < 1:
        return
    for root in isolate_real_roots(p):
        if root.is_rational():
            continue
        q = root.poly
        for k, step in zip(range(steps), bisection_steps(root)):
            assert q.sign_at(step.lo) * q.sign_at(step.hi) < 0
            assert step.interval.width <= root.interval.width / 2 ** (k + 1) * 2
