"""
Decision engine for the additive monoid N0[alpha].

The central computation is the search for a *tail witness*: a monic negative-tail
multiple ``H = m * Q`` of the minimal polynomial ``m``, of degree ``n``. Such an ``H``
exists exactly when ``alpha**n`` is a nonnegative integer combination of
``1, alpha, ..., alpha**(n-1)``; the least such ``n`` is ``sigma``.

Working in the power basis modulo ``m``, with residue vectors ``r_i = x^i mod m``,
the question at degree ``n`` is whether nonnegative integers ``a_0..a_{n-1}`` satisfy
``sum a_i r_i = r_n``. Because ``r_i`` is the i-th unit vector for ``i < d``, the low
coefficients are read off from the slack ``r_n - sum_{i>=d} a_i r_i``, which must be
componentwise nonnegative. The search branches on ``a_{n-1}, ..., a_d`` in that
order, ascending, and prunes with an exact LP relaxation of the remaining problem,
so the first witness found is the lexicographically minimal one.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import _lp
from .exactpoly import (
    ASSUMED,
    REDUCIBLE,
    IntPolynomial,
    NonMonicDivisorError,
    PolynomialError,
    ZeroPolynomialError,
    divrem,
    irreducibility_status,
    is_negative_tail,
    normalize_primitive,
    sign_variations,
    split_minimal_pair,
    squarefree_part,
)
from .realroots import (
    AlgebraicReal,
    Comparison,
    compare_with_one,
    count_positive_roots,
    is_weak_perron,
    positive_roots,
    refine,
    unique_positive_root,
)

ALPHA_REFINEMENT = Fraction(1, 2**32)
NMAX_ENV = "SEMIRING_ATLAS_NMAX"


class UnsupportedInputError(PolynomialError):
    """The input polynomial is outside what the engine classifies."""


# ---------------------------------------------------------------------------
# residues and witnesses


def power_residues(m: IntPolynomial, n: int) -> list[tuple[int, ...]]:
    """Coefficient vectors of x^0, ..., x^n modulo the monic polynomial m."""
    if not m.is_monic():
        raise NonMonicDivisorError(f"{m} is not monic")
    d = m.degree
    if d < 1:
        raise PolynomialError("modulus must have degree >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    low = [-c for c in m.coeffs[:-1]]
    out = []
    cur = (1,) + (0,) * (d - 1)
    for _ in range(n + 1):
        out.append(cur)
        top = cur[-1]
        shifted = (0,) + cur[:-1]
        cur = tuple(shifted[j] + top * low[j] for j in range(d))
    return out


@dataclass(frozen=True)
class TailWitness:
    """x^n - sum a_i x^i, a monic negative-tail multiple of m."""

    n: int
    tail_coeffs: tuple[int, ...]
    product: IntPolynomial
    cofactor: IntPolynomial

    @classmethod
    def from_tail(cls, m: IntPolynomial, tail: Sequence[int]) -> TailWitness:
        n = len(tail)
        product = IntPolynomial(tuple(-a for a in tail) + (1,))
        cofactor, rem = divrem(product, m)
        if not rem.is_zero():
            raise ValueError(f"{product} is not a multiple of {m}")
        return cls(n, tuple(tail), product, cofactor)

    def verify(self, m: IntPolynomial) -> bool:
        return (
            self.product == m * self.cofactor
            and is_negative_tail(self.product)
            and self.product.degree == self.n
            and self.product.coeffs[:-1] == tuple(-a for a in self.tail_coeffs)
        )

    def extend(self) -> TailWitness:
        """Witness at n + 1: multiply by (x + a_{n-1})."""
        factor = IntPolynomial((self.tail_coeffs[-1], 1))
        product = self.product * factor
        return TailWitness(self.n + 1, tuple(-c for c in product.coeffs[:-1]), product, self.cofactor * factor)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "tail": list(self.tail_coeffs),
            "product": self.product.to_canonical(),
            "cofactor": self.cofactor.to_canonical(),
        }


def _check_search_inputs(m: IntPolynomial, alpha: AlgebraicReal) -> None:
    if not m.is_monic():
        raise NonMonicDivisorError(f"tail search needs a monic polynomial, got {m}")
    if m.content() != 1:
        raise PolynomialError(f"{m} is not primitive")
    if alpha.poly != squarefree_part(m):
        raise ValueError(f"alpha is not a root of {m}")
    if compare_with_one(alpha) is not Comparison.GREATER:
        raise ValueError("tail search needs alpha > 1")


def tail_caps(alpha: AlgebraicReal, n: int) -> list[int]:
    """Certified caps a_i <= ceil(upper(alpha)^(n-i)), with alpha refined to width <= 2^-32."""
    hi = refine(alpha, ALPHA_REFINEMENT).hi
    return [math.ceil(hi ** (n - i)) for i in range(n)]


class _SearchStats:
    __slots__ = ("nodes", "lps")

    def __init__(self):
        self.nodes = 0
        self.lps = 0


def _search(residues: Sequence[tuple[int, ...]], n: int, d: int, caps: Sequence[int],
            stats: _SearchStats) -> Iterator[tuple[int, ...]]:
    target = residues[n]
    chosen = [0] * n

    def rec(i: int, slack: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        stats.nodes += 1
        if i < d:
            if all(v >= 0 for v in slack):
                chosen[:d] = slack
                yield tuple(chosen)
            return
        A = [[residues[j][row] for j in range(d, i + 1)] for row in range(d)]
        stats.lps += 1
        rng = _lp.variable_range(A, slack, i - d)
        if rng is None:
            return
        lo, hi = rng
        top = caps[i] if hi is None else min(caps[i], math.floor(hi))
        r = residues[i]
        for v in range(max(0, math.ceil(lo)), top + 1):
            chosen[i] = v
            yield from rec(i - 1, tuple(slack[k] - v * r[k] for k in range(d)))
        chosen[i] = 0

    yield from rec(n - 1, target)


def tail_witnesses(m: IntPolynomial, alpha: AlgebraicReal, n: int,
                   residues: Optional[Sequence[tuple[int, ...]]] = None,
                   stats: Optional[_SearchStats] = None) -> Iterator[TailWitness]:
    """Every tail witness of degree n, in canonical (lexicographic from a_{n-1}) order."""
    _check_search_inputs(m, alpha)
    d = m.degree
    if n < d:
        return
    if residues is None or len(residues) <= n:
        residues = power_residues(m, n)
    caps = tail_caps(alpha, n)
    for tail in _search(residues, n, d, caps, stats or _SearchStats()):
        yield TailWitness.from_tail(m, tail)


def tail_representation(m: IntPolynomial, alpha: AlgebraicReal, n: int) -> Optional[TailWitness]:
    """The canonical tail witness of degree n, or None when alpha^n is not representable."""
    return next(tail_witnesses(m, alpha, n), None)


def count_tail_witnesses(m: IntPolynomial, alpha: AlgebraicReal, n: int) -> int:
    return sum(1 for _ in tail_witnesses(m, alpha, n))


@dataclass(frozen=True)
class SigmaResult:
    found: bool
    sigma: Optional[int]
    witness: Optional[TailWitness]
    n_max: int
    nodes: int = 0

    def __str__(self) -> str:
        return f"Found({self.sigma})" if self.found else f"NotFoundUpTo({self.n_max})"


def compute_sigma(m: IntPolynomial, alpha: AlgebraicReal, n_max: int) -> SigmaResult:
    """Least n in [deg m, n_max] with a tail witness."""
    _check_search_inputs(m, alpha)
    d = m.degree
    if n_max < d:
        raise ValueError(f"n_max={n_max} is below the degree {d}")
    residues = power_residues(m, n_max)
    stats = _SearchStats()
    for n in range(d, n_max + 1):
        w = next(tail_witnesses(m, alpha, n, residues, stats), None)
        if w is not None:
            return SigmaResult(True, n, w, n_max, stats.nodes)
    return SigmaResult(False, None, None, n_max, stats.nodes)


# ---------------------------------------------------------------------------
# certificates


class CertificateKind(str, enum.Enum):
    NEGATIVE_TAIL_MINIMAL = "NegativeTailMinimal"
    TAIL_WITNESS_FOUND = "TailWitnessFound"
    NOT_WEAK_PERRON = "NotWeakPerron"
    MULTIPLE_POSITIVE_ROOTS = "MultiplePositiveRoots"
    NON_MONIC_MINIMAL = "NonMonicMinimal"
    ALPHA_BELOW_ONE = "AlphaBelowOne"
    ALPHA_ABOVE_ONE = "AlphaAboveOne"
    PMINUSC_INFINITE = "PMinusCInfinite"
    PMINUSC_ANTIMATTER = "PMinusCAntimatter"
    TWO_SIGN_VARIATIONS = "TwoSignVariations"
    CONSTANT_TERM_UNIT = "ConstantTermUnit"
    CUBIC_NECESSARY_FAIL = "CubicNecessaryFail"
    SEARCH_EXHAUSTED = "SearchExhausted"
    RECIPROCAL_TAIL_WITNESS = "ReciprocalTailWitness"


# Kinds that rule out finite generation.
NOT_FG_KINDS = frozenset({
    CertificateKind.NOT_WEAK_PERRON,
    CertificateKind.MULTIPLE_POSITIVE_ROOTS,
    CertificateKind.NON_MONIC_MINIMAL,
    CertificateKind.ALPHA_BELOW_ONE,
    CertificateKind.PMINUSC_INFINITE,
    CertificateKind.TWO_SIGN_VARIATIONS,
    CertificateKind.CUBIC_NECESSARY_FAIL,
})


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    payload: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "payload": self.payload}


def _interval_payload(x: AlgebraicReal) -> dict:
    return {"poly": x.poly.to_canonical(), "lo": str(x.lo), "hi": str(x.hi)}


def _alpha_from_payload(p: dict) -> AlgebraicReal:
    from .realroots import RationalInterval

    return AlgebraicReal(IntPolynomial.parse(p["poly"]), RationalInterval(Fraction(p["lo"]), Fraction(p["hi"])))


def verify_certificate(cert: Certificate, m: IntPolynomial) -> bool:
    """Re-check a certificate against m using only polynomial and root primitives."""
    kind, p = cert.kind, cert.payload
    pair = split_minimal_pair(m)
    if kind is CertificateKind.NEGATIVE_TAIL_MINIMAL:
        return is_negative_tail(m)
    if kind is CertificateKind.TAIL_WITNESS_FOUND:
        product = IntPolynomial.parse(p["product"])
        cofactor = IntPolynomial.parse(p["cofactor"])
        w = TailWitness(p["n"], tuple(p["tail"]), product, cofactor)
        return w.verify(m)
    if kind is CertificateKind.RECIPROCAL_TAIL_WITNESS:
        recip = _reciprocal_monic(m)
        if recip is None:
            return False
        product = IntPolynomial.parse(p["product"])
        cofactor = IntPolynomial.parse(p["cofactor"])
        return TailWitness(p["n"], tuple(p["tail"]), product, cofactor).verify(recip)
    if kind is CertificateKind.NOT_WEAK_PERRON:
        alpha = _alpha_from_payload(p["alpha"])
        return m(alpha.lo) * m(alpha.hi) < 0 and not is_weak_perron(alpha, "general").is_weak_perron
    if kind is CertificateKind.MULTIPLE_POSITIVE_ROOTS:
        return count_positive_roots(m).count == p["count"] >= 2
    if kind is CertificateKind.NON_MONIC_MINIMAL:
        return m.leading == p["leading"] != 1
    if kind in (CertificateKind.ALPHA_BELOW_ONE, CertificateKind.ALPHA_ABOVE_ONE):
        alpha = _alpha_from_payload(p["alpha"])
        if m(alpha.lo) * m(alpha.hi) >= 0:
            return False
        want = Comparison.LESS if kind is CertificateKind.ALPHA_BELOW_ONE else Comparison.GREATER
        return compare_with_one(alpha) is want
    if kind is CertificateKind.PMINUSC_INFINITE:
        q = pair.negative_part
        return q.degree == 0 and q.leading > 1 and not _is_monomial(pair.positive_part)
    if kind is CertificateKind.PMINUSC_ANTIMATTER:
        return pair.negative_part == IntPolynomial((1,)) and m.degree >= 2
    if kind is CertificateKind.TWO_SIGN_VARIATIONS:
        return sign_variations(m) == 2 and count_positive_roots(m).count >= 1
    if kind is CertificateKind.CONSTANT_TERM_UNIT:
        return m.degree >= 2 and abs(m.coeff(0)) != 1 and p["is_unit"] is False
    if kind is CertificateKind.CUBIC_NECESSARY_FAIL:
        a, b, c = p["a"], p["b"], p["c"]
        return m == IntPolynomial.from_descending([1, a, -b, -c]) and not (b >= a * a and b**3 >= a**3 * c)
    if kind is CertificateKind.SEARCH_EXHAUSTED:
        alpha = unique_positive_root(m)
        return not compute_sigma(m, alpha, p["n_max"]).found
    raise ValueError(f"unknown certificate kind {kind}")


def _is_monomial(f: IntPolynomial) -> bool:
    return len(f.support()) == 1 and f.leading == 1


def _reciprocal_monic(m: IntPolynomial) -> Optional[IntPolynomial]:
    if abs(m.coeff(0)) != 1:
        return None
    r = m.reciprocal()
    return r if r.leading == 1 else -r


# ---------------------------------------------------------------------------
# atomicity and infinite generation


class Atomicity(str, enum.Enum):
    ATOMIC = "atomic"
    ANTIMATTER = "antimatter"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AtomicityResult:
    status: Atomicity
    certificate: Optional[Certificate]
    note: str = ""


def default_n_max(degree: int) -> int:
    env = os.environ.get(NMAX_ENV)
    if env:
        return int(env)
    return degree + 21


def decide_atomicity(m: IntPolynomial, alpha: AlgebraicReal, n_max: Optional[int] = None) -> AtomicityResult:
    """Atomic / antimatter / unknown for N0[alpha], alpha a positive root of m."""
    if m.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    if m.degree == 1:
        if is_negative_tail(m):
            return AtomicityResult(Atomicity.ATOMIC, Certificate(CertificateKind.NEGATIVE_TAIL_MINIMAL,
                                                                  {"poly": m.to_canonical()}))
        raise UnsupportedInputError(f"root of {m} is not a positive integer")
    pair = split_minimal_pair(m)
    if pair.negative_part == IntPolynomial((1,)):
        return AtomicityResult(Atomicity.ANTIMATTER, Certificate(
            CertificateKind.PMINUSC_ANTIMATTER, {"positive_part": pair.positive_part.to_canonical()}))
    side = compare_with_one(alpha)
    if side is Comparison.GREATER:
        return AtomicityResult(Atomicity.ATOMIC, Certificate(
            CertificateKind.ALPHA_ABOVE_ONE, {"alpha": _interval_payload(alpha)}))
    roots = count_positive_roots(m).count
    if roots > 1:
        return AtomicityResult(Atomicity.ATOMIC, Certificate(
            CertificateKind.MULTIPLE_POSITIVE_ROOTS, {"count": roots}))
    if abs(m.coeff(0)) != 1:
        return AtomicityResult(Atomicity.ATOMIC, Certificate(
            CertificateKind.CONSTANT_TERM_UNIT, {"constant_term": m.coeff(0), "is_unit": False}))
    # alpha < 1 with |m(0)| = 1: 1 is not an atom iff (1/alpha)^N is a nonnegative
    # combination of lower powers of 1/alpha for some N.
    recip = _reciprocal_monic(m)
    beta = unique_positive_root(recip)
    limit = n_max if n_max is not None else default_n_max(m.degree)
    res = compute_sigma(recip, beta, max(limit, recip.degree))
    if res.found:
        payload = res.witness.to_dict()
        payload["reciprocal"] = recip.to_canonical()
        return AtomicityResult(Atomicity.ANTIMATTER, Certificate(CertificateKind.RECIPROCAL_TAIL_WITNESS, payload))
    return AtomicityResult(Atomicity.UNKNOWN, None,
                           f"no decomposition of 1 found via reciprocal search up to n={res.n_max}")


def infinite_generation_certificates(m: IntPolynomial, alpha: AlgebraicReal,
                                     weak_perron_method: str = "general") -> list[Certificate]:
    """Every certificate the engine knows that rules out finite generation."""
    certs = []
    pair = split_minimal_pair(m)
    roots = positive_roots(m)
    if not m.is_monic():
        certs.append(Certificate(CertificateKind.NON_MONIC_MINIMAL, {"leading": m.leading}))
    if len(roots) > 1:
        certs.append(Certificate(CertificateKind.MULTIPLE_POSITIVE_ROOTS, {
            "count": len(roots), "roots": [_interval_payload(r) for r in roots]}))
    if sign_variations(m) == 2 and roots:
        certs.append(Certificate(CertificateKind.TWO_SIGN_VARIATIONS, {"sign_variations": 2}))
    q = pair.negative_part
    if q.degree == 0 and q.leading > 1 and not _is_monomial(pair.positive_part):
        certs.append(Certificate(CertificateKind.PMINUSC_INFINITE, {
            "c": q.leading, "positive_part": pair.positive_part.to_canonical()}))
    if m.degree >= 2 and compare_with_one(alpha) is Comparison.LESS:
        certs.append(Certificate(CertificateKind.ALPHA_BELOW_ONE, {"alpha": _interval_payload(alpha)}))
    if len(roots) == 1:
        verdict = is_weak_perron(alpha, weak_perron_method)
        if not verdict.is_weak_perron:
            certs.append(Certificate(CertificateKind.NOT_WEAK_PERRON, {
                "alpha": _interval_payload(alpha), "method": verdict.method,
                "detail": verdict.margin_certificate}))
    return certs


# ---------------------------------------------------------------------------
# full classification


class Generation(str, enum.Enum):
    FINITELY_GENERATED = "finitely_generated"
    INFINITELY_GENERATED = "infinitely_generated"
    UNDECIDED_UP_TO = "undecided_up_to"


class FactorizationClass(str, enum.Enum):
    UFM = "UFM"
    PROPER_LFM = "ProperLFM"
    NOT_LFM = "NotLFM"
    NOT_APPLICABLE = "NotApplicable"
    UNDETERMINED = "Undetermined"


REPORT_KEYS = (
    "input", "primitive_form", "degree", "irreducibility_status", "alpha", "atomicity",
    "generation", "undecided_up_to", "sigma", "atom_count", "atom_count_kind", "atoms",
    "factorization_class", "certificates", "bounds_used", "extensions",
)


@dataclass(frozen=True)
class ClassificationReport:
    input: IntPolynomial
    primitive_form: IntPolynomial
    degree: int
    irreducibility_status: str
    alpha: Optional[AlgebraicReal]
    atomicity: Atomicity
    generation: Generation
    n_max: int
    sigma: Optional[int]
    atom_count: Optional[int]
    atom_count_kind: str
    factorization_class: FactorizationClass
    certificates: tuple[Certificate, ...]
    bounds_used: dict
    extensions: dict = field(default_factory=dict)

    def certificate(self, kind: CertificateKind) -> Optional[Certificate]:
        return next((c for c in self.certificates if c.kind is kind), None)

    @property
    def kinds(self) -> set[CertificateKind]:
        return {c.kind for c in self.certificates}

    def atoms(self) -> Optional[list[str]]:
        if self.atom_count_kind != "exact" or self.atom_count is None:
            return None
        return [f"alpha^{i}" for i in range(self.atom_count)]

    def to_dict(self) -> dict:
        out = {
            "input": self.input.to_canonical(),
            "primitive_form": self.primitive_form.to_canonical(),
            "degree": self.degree,
            "irreducibility_status": self.irreducibility_status,
            "alpha": self.alpha.to_dict() if self.alpha is not None else None,
            "atomicity": self.atomicity.value,
            "generation": self.generation.value,
            "undecided_up_to": self.n_max if self.generation is Generation.UNDECIDED_UP_TO else None,
            "sigma": self.sigma,
            "atom_count": self.atom_count,
            "atom_count_kind": self.atom_count_kind,
            "atoms": self.atoms(),
            "factorization_class": self.factorization_class.value,
            "certificates": [c.to_dict() for c in self.certificates],
            "bounds_used": self.bounds_used,
            "extensions": self.extensions,
        }
        assert tuple(out) == REPORT_KEYS
        return out

    def summary(self) -> str:
        if self.generation is Generation.FINITELY_GENERATED:
            gen = f"finitely generated, sigma = {self.sigma}"
        elif self.generation is Generation.INFINITELY_GENERATED:
            gen = "infinitely generated"
        else:
            gen = f"undecided up to n = {self.n_max}"
        kinds = ", ".join(c.kind.value for c in self.certificates)
        return (f"{self.primitive_form.to_human()}: {self.atomicity.value}, {gen}, "
                f"{self.factorization_class.value} [{kinds}]")


def classify(f: IntPolynomial, n_max: Optional[int] = None, weak_perron_method: str = "general",
             search_when_certified: bool = True) -> ClassificationReport:
    """Classify N0[alpha] where alpha is the positive root of f.

    When f has several positive roots the monoid is infinitely generated for each
    of them; the largest one is reported as alpha.
    """
    if f.is_zero():
        raise ZeroPolynomialError("cannot classify the zero polynomial")
    _, _, m = normalize_primitive(f)
    d = m.degree
    if d < 1:
        raise UnsupportedInputError("a nonzero constant has no roots")
    if n_max is None:
        n_max = default_n_max(d)
    if n_max < d:
        raise ValueError(f"n_max={n_max} is below the degree {d}")
    status = irreducibility_status(m)
    if status == REDUCIBLE:
        raise UnsupportedInputError(f"{m} is reducible over Q; a minimal polynomial is required")
    roots = positive_roots(m)
    if not roots:
        raise UnsupportedInputError(f"{m} has no positive root")
    alpha = roots[-1]
    bounds: dict = {"n_max": n_max, "alpha_refinement": str(ALPHA_REFINEMENT),
                    "weak_perron_method": weak_perron_method}

    if d == 1:
        atom = decide_atomicity(m, alpha)
        w = TailWitness.from_tail(m, [m.coeff(0) * -1])
        certs = (atom.certificate, Certificate(CertificateKind.TAIL_WITNESS_FOUND, w.to_dict()))
        return ClassificationReport(f, m, d, status, alpha, Atomicity.ATOMIC, Generation.FINITELY_GENERATED,
                                    n_max, 1, 1, "exact", FactorizationClass.UFM, certs, bounds)

    atom = decide_atomicity(m, alpha, n_max)
    certs: list[Certificate] = []
    if atom.certificate is not None:
        certs.append(atom.certificate)
    not_fg = infinite_generation_certificates(m, alpha, weak_perron_method)
    certs.extend(not_fg)

    sigma_res: Optional[SigmaResult] = None
    searchable = m.is_monic() and len(roots) == 1 and compare_with_one(alpha) is Comparison.GREATER
    assert searchable or not_fg, f"no certificate for unsearchable input {m}"
    if searchable and (search_when_certified or not not_fg):
        sigma_res = compute_sigma(m, alpha, n_max)
        bounds["search_nodes"] = sigma_res.nodes

    found = sigma_res is not None and sigma_res.found
    if found and not_fg:
        raise AssertionError(f"contradiction for {m}: witness at n={sigma_res.sigma} but "
                             f"{[c.kind.value for c in not_fg]}")
    if found and atom.status is not Atomicity.ATOMIC:
        raise AssertionError(f"contradiction for {m}: witness found for a non-atomic monoid")

    if atom.status is Atomicity.ANTIMATTER:
        generation = Generation.INFINITELY_GENERATED
        sigma, atom_count, kind = None, 0, "exact"
        fclass = FactorizationClass.NOT_APPLICABLE
    elif found:
        generation = Generation.FINITELY_GENERATED
        sigma = sigma_res.sigma
        atom_count, kind = sigma, "exact"
        if is_negative_tail(m):
            certs.append(Certificate(CertificateKind.NEGATIVE_TAIL_MINIMAL, {"poly": m.to_canonical()}))
        certs.append(Certificate(CertificateKind.TAIL_WITNESS_FOUND, sigma_res.witness.to_dict()))
        if sigma == d:
            fclass = FactorizationClass.UFM
        elif sigma == d + 1:
            fclass = FactorizationClass.PROPER_LFM
        else:
            fclass = FactorizationClass.NOT_LFM
    elif not_fg:
        generation = Generation.INFINITELY_GENERATED
        sigma = None
        if atom.status is Atomicity.ATOMIC:
            atom_count, kind, fclass = None, "infinite", FactorizationClass.NOT_LFM
        else:
            atom_count, kind, fclass = None, "unknown", FactorizationClass.NOT_APPLICABLE
    else:
        generation = Generation.UNDECIDED_UP_TO
        sigma = None
        certs.append(Certificate(CertificateKind.SEARCH_EXHAUSTED, {"n_max": n_max}))
        # alpha > 1 here, so alpha^0..alpha^{n_max} are all atoms.
        atom_count, kind = n_max + 1, "lower_bound"
        fclass = FactorizationClass.NOT_LFM if n_max >= d + 1 else FactorizationClass.UNDETERMINED

    if atom.note:
        bounds["atomicity_note"] = atom.note
    if sigma_res is not None and not found:
        bounds["sigma_search"] = f"no witness for n in [{d}, {n_max}]"
    if status == ASSUMED:
        bounds["irreducibility"] = "assumed, not verified"

    report = ClassificationReport(f, m, d, status, alpha, atom.status, generation, n_max, sigma,
                                  atom_count, kind, fclass, tuple(certs), bounds)
    _check_report(report)
    return report


def _check_report(r: ClassificationReport) -> None:
    if r.generation is Generation.FINITELY_GENERATED:
        assert r.sigma is not None and r.atom_count == r.sigma
    assert (r.factorization_class is FactorizationClass.UFM) == (r.sigma == r.degree)
    assert (r.factorization_class is FactorizationClass.PROPER_LFM) == (r.sigma == r.degree + 1)
    if r.factorization_class is FactorizationClass.UFM:
        assert is_negative_tail(r.primitive_form)


__all__ = [
    "ALPHA_REFINEMENT",
    "Atomicity",
    "AtomicityResult",
    "Certificate",
    "CertificateKind",
    "ClassificationReport",
    "FactorizationClass",
    "Generation",
    "NOT_FG_KINDS",
    "SigmaResult",
    "TailWitness",
    "UnsupportedInputError",
    "classify",
    "compute_sigma",
    "count_tail_witnesses",
    "decide_atomicity",
    "default_n_max",
    "infinite_generation_certificates",
    "power_residues",
    "tail_caps",
    "tail_representation",
    "tail_witnesses",
    "verify_certificate",
]
