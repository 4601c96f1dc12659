import json

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from semiring_atlas.exactpoly import (
    ASSUMED,
    IntPolynomial,
    NonMonicDivisorError,
    ZeroPolynomialError,
    divrem,
    is_negative_tail,
    rational_root_screen,
)
from semiring_atlas.genengine import (
    NOT_FG_KINDS,
    REPORT_KEYS,
    Atomicity,
    Certificate,
    CertificateKind,
    FactorizationClass,
    Generation,
    TailWitness,
    UnsupportedInputError,
    classify,
    compute_sigma,
    count_tail_witnesses,
    decide_atomicity,
    infinite_generation_certificates,
    power_residues,
    tail_caps,
    tail_representation,
    tail_witnesses,
    verify_certificate,
)
from semiring_atlas.realroots import Comparison, compare_with_one, positive_roots, unique_positive_root

P = IntPolynomial.parse
M5 = P("x^3-3x^2+5x-8")


def alpha_of(m):
    return unique_positive_root(m)


def test_power_residue_examples():
    assert power_residues(P("x^2-2"), 4) == [(1, 0), (0, 1), (2, 0), (0, 2), (4, 0)]
    assert power_residues(P("x^3-2x-5"), 3)[3] == (5, 2, 0)
    assert power_residues(M5, 3)[3] == (8, -5, 3)
    with pytest.raises(NonMonicDivisorError):
        power_residues(P("2x^2-1"), 3)


def test_power_residues_match_long_division():
    m = P("x^4-x^3+2x^2-7x-3")
    for i, r in enumerate(power_residues(m, 15)):
        _, rem = divrem(IntPolynomial.monomial(i), m)
        assert r == tuple(rem.coeff(j) for j in range(4))


def test_tail_representation_examples():
    a = alpha_of(M5)
    assert tail_representation(M5, a, 3) is None
    assert tail_representation(M5, a, 4) is None
    w = tail_representation(M5, a, 5)
    assert w.product == P("x^5-5x^2-4x-32")
    assert w.cofactor == P("x^2+3x+4")
    assert w.tail_coeffs == (32, 4, 5, 0, 0)
    assert count_tail_witnesses(M5, a, 5) == 3

    m = P("x^3+x^2-5x-10")
    assert tail_representation(m, alpha_of(m), 5) is not None
    quintic = TailWitness.from_tail(m, [20, 0, 3, 4, 0])
    assert quintic.product == P("x^5-4x^3-3x^2-20")
    assert quintic.cofactor == P("x^2-x+2")
    assert quintic.verify(m)


def test_witnesses_in_canonical_order():
    a = alpha_of(M5)
    tails = [w.tail_coeffs for w in tail_witnesses(M5, a, 5)]
    assert tails == sorted(tails, key=lambda t: t[::-1])
    assert set(tails) == {(32, 4, 5, 0, 0), (24, 9, 2, 1, 0), (8, 11, 1, 0, 1)}


def test_search_preconditions():
    with pytest.raises(NonMonicDivisorError):
        tail_representation(P("2x^3-3x-5"), alpha_of(P("2x^3-3x-5")), 4)
    small = P("x^3+x^2+x-1")
    with pytest.raises(ValueError):
        tail_representation(small, alpha_of(small), 4)
    with pytest.raises(ValueError):
        tail_representation(M5, alpha_of(P("x^2-2")), 4)


def test_caps_are_certified_upper_bounds():
    a = alpha_of(M5)
    caps = tail_caps(a, 5)
    for i, cap in enumerate(caps):
        assert cap >= float(a) ** (5 - i)
    w = tail_representation(M5, a, 5)
    assert all(t <= c for t, c in zip(w.tail_coeffs, caps))


@pytest.mark.parametrize("poly, sigma", [
    ("x^3-2x-5", 3),
    ("x^3-3x^2+5x-8", 5),
    ("x^3-2x^2+5x-20", 7),
    ("x^3-2x^2+2x-5", 4),
    ("x^3+x^2-5x-10", 5),
])
def test_compute_sigma_examples(poly, sigma):
    m = P(poly)
    res = compute_sigma(m, alpha_of(m), 12)
    assert res.found and res.sigma == sigma
    assert res.witness.verify(m)
    if sigma == 3:
        assert res.witness.product == m


def test_compute_sigma_reports_exhaustion():
    m = P("x^3+x^2-4x-2")
    res = compute_sigma(m, alpha_of(m), 8)
    assert not res.found and str(res) == "NotFoundUpTo(8)"


def test_monotone_closure():
    for poly in ["x^3-3x^2+5x-8", "x^3-2x^2+5x-20", "x^3+x^2-7x-14", "x^3-2x-5"]:
        m = P(poly)
        w = compute_sigma(m, alpha_of(m), 12).witness
        for _ in range(2):
            w = w.extend()
            assert w.verify(m)
            assert tail_representation(m, alpha_of(m), w.n) is not None


def test_decide_atomicity_examples():
    m = P("x^3+x^2-5x-10")
    assert decide_atomicity(m, alpha_of(m)).status is Atomicity.ATOMIC
    r = decide_atomicity(P("x^2+x-1"), alpha_of(P("x^2+x-1")))
    assert r.status is Atomicity.ANTIMATTER and r.certificate.kind is CertificateKind.PMINUSC_ANTIMATTER
    assert decide_atomicity(P("x-2"), alpha_of(P("x-2"))).status is Atomicity.ATOMIC


def test_atomicity_below_one():
    # |m(0)| != 1 with alpha < 1
    m = P("3x^2+x-2")
    assert compare_with_one(alpha_of(m)) is Comparison.LESS
    r = decide_atomicity(m, alpha_of(m))
    assert r.status is Atomicity.ATOMIC and r.certificate.kind is CertificateKind.CONSTANT_TERM_UNIT
    # negative part x + 1 is not a constant, but 1 still decomposes
    m = P("x^3-x^2+2x-1")
    r = decide_atomicity(m, alpha_of(m))
    assert r.status is Atomicity.ANTIMATTER
    assert r.certificate.kind is CertificateKind.RECIPROCAL_TAIL_WITNESS
    assert verify_certificate(r.certificate, m)


def test_infinite_generation_certificate_examples():
    def kinds(poly):
        m = P(poly)
        return {c.kind for c in infinite_generation_certificates(m, positive_roots(m)[-1])}

    assert kinds("x^3+x^2-4x-2") == {CertificateKind.NOT_WEAK_PERRON}
    assert CertificateKind.PMINUSC_INFINITE in kinds("x^3+2x^2-5")
    assert kinds("x^3-2x-5") == set()
    assert CertificateKind.NON_MONIC_MINIMAL in kinds("2x^3-3x-5")
    assert {CertificateKind.MULTIPLE_POSITIVE_ROOTS, CertificateKind.TWO_SIGN_VARIATIONS} <= kinds("x^2-3x+1")
    assert CertificateKind.ALPHA_BELOW_ONE in kinds("x^3+x^2+x-1")


@pytest.mark.parametrize("poly, generation, sigma, fclass", [
    ("x^3-2x-5", Generation.FINITELY_GENERATED, 3, FactorizationClass.UFM),
    ("x^3-2x^2+2x-5", Generation.FINITELY_GENERATED, 4, FactorizationClass.PROPER_LFM),
    ("x^3+x^2-5x-10", Generation.FINITELY_GENERATED, 5, FactorizationClass.NOT_LFM),
    ("x^3-3x^2+5x-8", Generation.FINITELY_GENERATED, 5, FactorizationClass.NOT_LFM),
    ("x^3+2x^2-5", Generation.INFINITELY_GENERATED, None, FactorizationClass.NOT_LFM),
    ("x^3-x^2+3x-18", Generation.INFINITELY_GENERATED, None, FactorizationClass.NOT_LFM),
    ("x-3", Generation.FINITELY_GENERATED, 1, FactorizationClass.UFM),
    ("x^2-2", Generation.FINITELY_GENERATED, 2, FactorizationClass.UFM),
])
def test_classify_examples(poly, generation, sigma, fclass):
    r = classify(P(poly))
    assert r.generation is generation
    assert r.sigma == sigma
    assert r.factorization_class is fclass
    for cert in r.certificates:
        assert verify_certificate(cert, r.primitive_form), cert


def test_classify_ufm_lists_atoms():
    r = classify(P("x^3-2x-5"))
    assert r.atom_count == 3 and r.atoms() == ["alpha^0", "alpha^1", "alpha^2"]
    assert CertificateKind.NEGATIVE_TAIL_MINIMAL in r.kinds


def test_classify_antimatter_and_multiple_roots():
    for poly in ["x^2+x-1", "x^3+x^2+x-1"]:
        r = classify(P(poly))
        assert r.atomicity is Atomicity.ANTIMATTER and r.atom_count == 0
        assert r.factorization_class is FactorizationClass.NOT_APPLICABLE
    r = classify(P("x^2-3x+1"))
    assert r.generation is Generation.INFINITELY_GENERATED
    assert CertificateKind.MULTIPLE_POSITIVE_ROOTS in r.kinds
    assert r.alpha.lo > 1


def test_classify_normalizes_input():
    r = classify(P("-2x^3+6x^2-10x+16"))
    assert r.primitive_form == M5 and r.sigma == 5
    assert r.input == P("-2x^3+6x^2-10x+16")


def test_classify_rejections():
    with pytest.raises(ZeroPolynomialError):
        classify(IntPolynomial([]))
    with pytest.raises(UnsupportedInputError, match="positive integer"):
        classify(P("2x-3"))
    with pytest.raises(UnsupportedInputError, match="no positive root"):
        classify(P("x^2+x+1"))
    with pytest.raises(UnsupportedInputError, match="reducible"):
        classify(P("x^3+x^2-5x-2"))
    with pytest.raises(UnsupportedInputError):
        classify(P("7"))


def test_undecided_is_reported_honestly():
    # sigma = 13, so a budget of 8 cannot decide it
    r = classify(P("x^3-5x^2+4x-1"), n_max=8)
    assert r.generation is Generation.UNDECIDED_UP_TO
    assert r.atom_count == 9 and r.atom_count_kind == "lower_bound"
    assert r.to_dict()["undecided_up_to"] == 8
    assert CertificateKind.SEARCH_EXHAUSTED in r.kinds
    assert classify(P("x^3-5x^2+4x-1"), n_max=13).sigma == 13


def test_env_var_sets_default_budget(monkeypatch):
    monkeypatch.setenv("SEMIRING_ATLAS_NMAX", "6")
    r = classify(P("x^3-2x^2+5x-20"))
    assert r.generation is Generation.UNDECIDED_UP_TO and r.n_max == 6


def test_degree_four_reports_assumed_irreducibility():
    r = classify(P("x^4-2x-5"))
    assert r.irreducibility_status == ASSUMED
    assert r.generation is Generation.FINITELY_GENERATED and r.sigma == 4


def test_report_json_is_schema_stable():
    d = classify(M5).to_dict()
    assert tuple(d) == REPORT_KEYS
    assert d["sigma"] == 5 and d["atom_count"] == 5
    json.dumps(d)
    assert json.dumps(d, sort_keys=True) == json.dumps(classify(M5).to_dict(), sort_keys=True)


def test_certificate_verification_rejects_forgeries():
    m = P("x^3-2x-5")
    assert not verify_certificate(Certificate(CertificateKind.NEGATIVE_TAIL_MINIMAL, {}), M5)
    bogus = {"n": 5, "tail": [31, 4, 5, 0, 0], "product": "1,0,0,-5,-4,-31", "cofactor": "1,3,4"}
    assert not verify_certificate(Certificate(CertificateKind.TAIL_WITNESS_FOUND, bogus), M5)
    assert not verify_certificate(Certificate(CertificateKind.PMINUSC_INFINITE, {}), m)
    assert not verify_certificate(Certificate(CertificateKind.SEARCH_EXHAUSTED, {"n_max": 5}), M5)
    assert verify_certificate(Certificate(CertificateKind.SEARCH_EXHAUSTED, {"n_max": 4}), M5)


monic_cubics = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-8, -1)).map(
    lambda t: IntPolynomial.from_descending([1, t[0], t[1], t[2]]))


@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(monic_cubics)
def test_classify_invariants(m):
    assume(not rational_root_screen(m))
    r = classify(m, n_max=10)
    if r.generation is Generation.FINITELY_GENERATED:
        assert r.atomicity is Atomicity.ATOMIC
        assert r.atom_count == r.sigma
        assert not (r.kinds & NOT_FG_KINDS)
        w = r.certificate(CertificateKind.TAIL_WITNESS_FOUND).payload
        assert w["n"] == r.sigma
        for n in range(3, r.sigma):
            assert tail_representation(m, r.alpha, n) is None
    if r.generation is Generation.INFINITELY_GENERATED:
        assert r.atomicity is Atomicity.ANTIMATTER or r.kinds & NOT_FG_KINDS
    assert (r.factorization_class is FactorizationClass.UFM) == (r.sigma == 3) == is_negative_tail(m)
    assert (r.factorization_class is FactorizationClass.PROPER_LFM) == (r.sigma == 4)
    for cert in r.certificates:
        if cert.kind is not CertificateKind.SEARCH_EXHAUSTED:
            assert verify_certificate(cert, m)
