import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from semiring_atlas.exactpoly import IntPolynomial, rational_root_screen
from semiring_atlas.genengine import power_residues, tail_caps, tail_witnesses
from semiring_atlas.oracle import (
    OracleRefusal,
    box_caps,
    box_volume,
    brute_force_tail,
    numeric_sanity,
    residue_by_division,
    verify_witness,
)
from semiring_atlas.realroots import Comparison, compare_with_one, positive_roots, unique_positive_root

P = IntPolynomial.parse
M5 = P("x^3-3x^2+5x-8")


def test_brute_force_examples():
    a = unique_positive_root(M5)
    tails = brute_force_tail(M5, a, 5)
    assert len(tails) == 3
    assert tails[0] == (32, 4, 5, 0, 0)
    assert brute_force_tail(M5, a, 4) == []
    m = P("x^3-2x-5")
    assert (5, 2, 0) in brute_force_tail(m, unique_positive_root(m), 3)


def test_brute_force_tails_satisfy_the_residue_equation():
    m = P("x^3-2x^2+2x-5")
    a = unique_positive_root(m)
    for n in range(3, 7):
        for tail in brute_force_tail(m, a, n):
            H = IntPolynomial(tuple(-t for t in tail) + (1,))
            assert verify_witness(m, H)


def test_brute_force_matches_unfiltered_enumeration():
    # Small enough to loop over every coordinate including the low ones.
    import itertools
    m = P("x^2-x-1")
    a = unique_positive_root(m)
    for n in range(2, 6):
        caps = box_caps(a, n)
        res = [residue_by_division(m, i) for i in range(n + 1)]
        full = []
        for t in itertools.product(*(range(c + 1) for c in caps)):
            if all(sum(t[i] * res[i][k] for i in range(n)) == res[n][k] for k in range(2)):
                full.append(t)
        assert sorted(full, key=lambda t: t[::-1]) == brute_force_tail(m, a, n)


def test_residues_agree_with_engine():
    m = P("x^4-3x^3+x^2-7x-2")
    assert [residue_by_division(m, i) for i in range(12)] == power_residues(m, 11)


def test_refuses_large_boxes():
    m = P("x^3-2x^2+5x-20")
    a = unique_positive_root(m)
    with pytest.raises(OracleRefusal) as err:
        brute_force_tail(m, a, 9, max_volume=10**6)
    assert err.value.volume == box_volume(a, 9, 3)[0] > 10**6


def test_requires_alpha_above_one():
    m = P("x^3+x^2+x-1")
    with pytest.raises(ValueError):
        brute_force_tail(m, unique_positive_root(m), 4)


def test_verify_witness_examples():
    assert verify_witness(P("x^3+x^2-5x-10"), P("x^5-4x^3-3x^2-20"))
    assert verify_witness(P("x^2-2"), P("x^2-2"))
    assert not verify_witness(M5, P("x^5-5x^2-4x-31"))
    assert not verify_witness(M5, P("x^5+x^2-4x-32"))


def test_no_negative_tail_quartic_multiple():
    # every monic negative-tail quartic in the box fails
    a = unique_positive_root(M5)
    caps = box_caps(a, 4)
    import itertools
    for t in itertools.product(*(range(c + 1) for c in caps)):
        assert not verify_witness(M5, IntPolynomial(tuple(-v for v in t) + (1,)))


def test_numeric_sanity_examples():
    assert numeric_sanity(M5, P("x^5-5x^2-4x-32"), 20)
    assert numeric_sanity(P("x^2-2"), P("x^2-2"), 10)
    assert not numeric_sanity(M5, P("x^5-5x^2-4x-31"), 20)


def test_engine_witnesses_lie_in_oracle_box():
    for poly in ["x^3-3x^2+5x-8", "x^3-2x^2+5x-20", "x^3+x^2-5x-10", "x^3-5x^2+4x-1"]:
        m = P(poly)
        a = unique_positive_root(m)
        for n in range(3, 9):
            caps = box_caps(a, n)
            assert caps == tail_caps(a, n)
            for w in tail_witnesses(m, a, n):
                assert all(t <= c for t, c in zip(w.tail_coeffs, caps))


monic = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-6, -1)).map(
    lambda t: IntPolynomial.from_descending([1, t[0], t[1], t[2]]))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(monic)
def test_engine_and_oracle_agree(m):
    assume(not rational_root_screen(m))
    roots = positive_roots(m)
    assume(len(roots) == 1 and compare_with_one(roots[0]) is Comparison.GREATER)
    a = roots[0]
    for n in range(3, 6):
        assume(box_volume(a, n, 3)[0] <= 2 * 10**6)
        engine = [w.tail_coeffs for w in tail_witnesses(m, a, n)]
        assert engine == brute_force_tail(m, a, n)
