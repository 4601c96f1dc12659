"""
Coefficient rules for monic cubics x^3 +- a x^2 +- b x - c.

Each verdict names the rule that produced it (see ``RULES``) and is checked
against the general engine by :func:`cross_check`. Fields a rule cannot settle are
taken from the engine and listed in ``CubicVerdict.delegated``.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exactpoly import IntPolynomial, PolynomialError, normalize_primitive, rational_root_screen
from .genengine import (
    Atomicity,
    Certificate,
    CertificateKind,
    ClassificationReport,
    FactorizationClass,
    Generation,
    classify,
)
from .realroots import AlgebraicReal, Comparison, compare_with_one, positive_roots

log = logging.getLogger(__name__)

# shape tag -> (sign of the x^2 coefficient, sign of the x coefficient); 0 = absent.
SHAPES: dict[str, tuple[int, int]] = {
    "x3-c": (0, 0),
    "x3+bx-c": (0, 1),
    "x3-bx-c": (0, -1),
    "x3+ax2-c": (1, 0),
    "x3-ax2-c": (-1, 0),
    "x3+ax2+bx-c": (1, 1),
    "x3-ax2-bx-c": (-1, -1),
    "x3+ax2-bx-c": (1, -1),
    "x3-ax2+bx-c": (-1, 1),
}

# Positive part minus a constant.
PMINUSC_SHAPES = frozenset({"x3-c", "x3+bx-c", "x3+ax2-c", "x3+ax2+bx-c"})
# Already negative-tail.
NEGATIVE_TAIL_SHAPES = frozenset({"x3-bx-c", "x3-ax2-c", "x3-ax2-bx-c"})

RULES: dict[str, str] = {
    "pminusc-antimatter": "m = p - 1: p(alpha) = 1, so 1 is not an atom and the monoid is antimatter",
    "pminusc-ufm": "m = x^3 - c with c > 1: negative-tail, so a UFM with atoms 1, alpha, alpha^2",
    "pminusc-infinite": "m = p - c with c > 1 and p not a monomial: atomic and infinitely generated",
    "negative-tail-ufm": "m is negative-tail: UFM, sigma = 3",
    "nonmonic": "m is not monic: not finitely generated (infinitely generated or antimatter)",
    "positive-constant": "m(0) > 0: zero or two positive roots, never a finitely generated case",
    "multiple-positive-roots": "more than one positive root: atomic and infinitely generated",
    "alpha-below-one": "alpha < 1: no power of alpha is a combination of lower powers",
    "coef-necessary-fail": "x^3+ax^2-bx-c with b < a^2 or b^3 < a^3 c: infinitely generated",
    "coef-necessary-hold": "x^3+ax^2-bx-c meeting b >= a^2 and b^3 >= a^3 c: never an LFM; "
                           "generation delegated to the engine",
    "perron-coef-fail": "x^3-ax^2+bx-c with b^3 > a^3 c: alpha is not weak Perron, infinitely generated",
    "proper-lfm-criterion": "x^3-ax^2+bx-c with b <= a^2 and b/a <= floor(c/b): proper LFM, sigma = 4",
    "not-proper-lfm": "x^3-ax^2+bx-c, weak Perron, proper-LFM criterion fails: NotLFM; "
                      "sigma delegated to the engine (at least 6 atoms claimed when b > a^2)",
}


class CubicFormError(PolynomialError):
    """The cubic does not match any monic x^3 +- a x^2 +- b x - c shape."""


class NonMonicCubicError(CubicFormError):
    pass


class PositiveConstantError(CubicFormError):
    pass


class CubicDisagreementError(AssertionError):
    """Coefficient rules and the engine reached contradictory definite verdicts."""


@dataclass(frozen=True)
class CubicForm:
    shape: str
    a: int
    b: int
    c: int

    def polynomial(self) -> IntPolynomial:
        sa, sb = SHAPES[self.shape]
        return IntPolynomial.from_descending([1, sa * self.a, sb * self.b, -self.c])


def cubic_form(m: IntPolynomial) -> CubicForm:
    if m.degree != 3:
        raise CubicFormError(f"{m} is not a cubic")
    if not m.is_monic():
        raise NonMonicCubicError(f"{m} is not monic")
    c0, c1, c2, _ = m.coeffs
    if c0 == 0 or rational_root_screen(m):
        raise CubicFormError(f"{m} is reducible over Q")
    if c0 > 0:
        raise PositiveConstantError(f"{m} has positive constant term")
    sa = (c2 > 0) - (c2 < 0)
    sb = (c1 > 0) - (c1 < 0)
    shape = next(tag for tag, signs in SHAPES.items() if signs == (sa, sb))
    return CubicForm(shape, abs(c2), abs(c1), -c0)


def proper_lfm_criterion(a: int, b: int, c: int) -> bool:
    """b <= a^2 and b/a <= floor(c/b), exactly."""
    return b <= a * a and Fraction(b, a) <= c // b


def coef_necessary_conditions(a: int, b: int, c: int) -> tuple[bool, bool]:
    """(b >= a^2, b^3 >= a^3 c)."""
    return b >= a * a, b**3 >= a**3 * c


@dataclass(frozen=True)
class CubicVerdict:
    polynomial: IntPolynomial
    form: Optional[CubicForm]
    rule_applied: str
    atomicity: Optional[Atomicity] = None
    finitely_generated: Optional[bool] = None
    sigma: Optional[int] = None
    factorization_class: Optional[FactorizationClass] = None
    atom_count_at_least: Optional[int] = None
    certificates: tuple[Certificate, ...] = ()
    delegated: tuple[str, ...] = ()
    engine: Optional[ClassificationReport] = None
    agrees_with_engine: Optional[bool] = None
    claims: dict = field(default_factory=dict)
    disagreements: tuple[str, ...] = ()
    flags: dict = field(default_factory=dict)

    @property
    def generation(self) -> Optional[Generation]:
        if self.finitely_generated is True:
            return Generation.FINITELY_GENERATED
        if self.finitely_generated is False:
            return Generation.INFINITELY_GENERATED
        if "generation" in self.delegated and self.engine is not None:
            return self.engine.generation
        return None

    def to_dict(self) -> dict:
        def val(x):
            return None if x is None else x.value
        gen = self.generation
        return {
            "poly": self.polynomial.to_canonical(),
            "shape": self.form.shape if self.form else None,
            "rule_applied": self.rule_applied,
            "atomicity": val(self.atomicity),
            "generation": val(gen),
            "sigma": self.effective_sigma,
            "factorization_class": val(self.factorization_class),
            "atom_count_at_least": self.atom_count_at_least,
            "delegated": list(self.delegated),
            "flags": dict(self.flags),
            "claims": dict(self.claims),
            "certificates": [c.to_dict() for c in self.certificates],
            "agrees_with_engine": self.agrees_with_engine,
            "disagreements": list(self.disagreements),
        }

    @property
    def effective_sigma(self) -> Optional[int]:
        if self.sigma is not None:
            return self.sigma
        if "sigma" in self.delegated and self.engine is not None:
            return self.engine.sigma
        return None


def classify_cubic(form: CubicForm, alpha: Optional[AlgebraicReal] = None,
                   engine_report: Optional[ClassificationReport] = None,
                   n_max: Optional[int] = None) -> CubicVerdict:
    """Apply the coefficient rules; consult the engine only for what they leave open."""
    m = form.polynomial()
    a, b, c = form.a, form.b, form.c

    if form.shape in PMINUSC_SHAPES:
        if c == 1:
            return CubicVerdict(m, form, "pminusc-antimatter", Atomicity.ANTIMATTER, False,
                                factorization_class=FactorizationClass.NOT_APPLICABLE)
        if form.shape == "x3-c":
            return CubicVerdict(m, form, "pminusc-ufm", Atomicity.ATOMIC, True, 3, FactorizationClass.UFM)
        return CubicVerdict(m, form, "pminusc-infinite", Atomicity.ATOMIC, False,
                            factorization_class=FactorizationClass.NOT_LFM)
    if form.shape in NEGATIVE_TAIL_SHAPES:
        return CubicVerdict(m, form, "negative-tail-ufm", Atomicity.ATOMIC, True, 3, FactorizationClass.UFM)

    roots = positive_roots(m)
    if len(roots) > 1:
        return CubicVerdict(m, form, "multiple-positive-roots", Atomicity.ATOMIC, False,
                            factorization_class=FactorizationClass.NOT_LFM)
    alpha = alpha if alpha is not None else roots[0]
    if compare_with_one(alpha) is Comparison.LESS:
        atomic = Atomicity.ATOMIC if c != 1 else None
        return CubicVerdict(m, form, "alpha-below-one", atomic, False,
                            factorization_class=FactorizationClass.NOT_LFM if atomic else None)

    # alpha > 1 from here, hence atomic.
    def delegate(rule: str, **kw) -> CubicVerdict:
        report = engine_report if engine_report is not None else classify(m, n_max)
        return CubicVerdict(m, form, rule, Atomicity.ATOMIC, delegated=("generation", "sigma"),
                            engine=report, **kw)

    if form.shape == "x3+ax2-bx-c":
        b_ge, b3_ge = coef_necessary_conditions(a, b, c)
        if not (b_ge and b3_ge):
            cert = Certificate(CertificateKind.CUBIC_NECESSARY_FAIL,
                               {"a": a, "b": b, "c": c, "b_ge_a2": b_ge, "b3_ge_a3c": b3_ge})
            return CubicVerdict(m, form, "coef-necessary-fail", Atomicity.ATOMIC, False,
                                factorization_class=FactorizationClass.NOT_LFM, certificates=(cert,))
        return delegate("coef-necessary-hold", factorization_class=FactorizationClass.NOT_LFM,
                        flags={"b_ge_a2": b_ge, "b3_ge_a3c": b3_ge})

    # x3-ax2+bx-c
    if b**3 > a**3 * c:
        return CubicVerdict(m, form, "perron-coef-fail", Atomicity.ATOMIC, False,
                            factorization_class=FactorizationClass.NOT_LFM)
    if proper_lfm_criterion(a, b, c):
        return CubicVerdict(m, form, "proper-lfm-criterion", Atomicity.ATOMIC, True, 4,
                            FactorizationClass.PROPER_LFM)
    return delegate("not-proper-lfm", factorization_class=FactorizationClass.NOT_LFM,
                    atom_count_at_least=6 if b > a * a else None)


def _engine_fg(report: ClassificationReport) -> Optional[bool]:
    if report.generation is Generation.FINITELY_GENERATED:
        return True
    if report.generation is Generation.INFINITELY_GENERATED:
        return False
    return None


def _compare(rule: CubicVerdict, report: ClassificationReport) -> tuple[list[str], dict]:
    problems = []
    if rule.atomicity is not None and report.atomicity is not Atomicity.UNKNOWN \
            and rule.atomicity is not report.atomicity:
        problems.append(f"atomicity: rule {rule.atomicity.value}, engine {report.atomicity.value}")
    efg = _engine_fg(report)
    if rule.finitely_generated is not None and efg is not None and rule.finitely_generated != efg:
        problems.append(f"generation: rule fg={rule.finitely_generated}, engine {report.generation.value}")
    if rule.finitely_generated is True and efg is None:
        problems.append(f"generation: rule says finitely generated with sigma={rule.sigma}, "
                        f"engine undecided up to {report.n_max}")
    if rule.sigma is not None and report.sigma is not None and rule.sigma != report.sigma:
        problems.append(f"sigma: rule {rule.sigma}, engine {report.sigma}")
    definite = (FactorizationClass.UFM, FactorizationClass.PROPER_LFM, FactorizationClass.NOT_LFM)
    if rule.factorization_class in definite and report.factorization_class in definite \
            and rule.factorization_class is not report.factorization_class:
        problems.append(f"factorization: rule {rule.factorization_class.value}, "
                        f"engine {report.factorization_class.value}")
    claims = {}
    if rule.atom_count_at_least is not None:
        if report.generation is Generation.FINITELY_GENERATED:
            holds = report.atom_count >= rule.atom_count_at_least
        else:
            # infinite, or at least n_max + 1 atoms
            holds = report.atom_count_kind == "infinite" or (report.atom_count or 0) >= rule.atom_count_at_least
        claims[f"atoms_at_least_{rule.atom_count_at_least}"] = holds
    return problems, claims


def cross_check(m: IntPolynomial, n_max: Optional[int] = None, strict: bool = True) -> CubicVerdict:
    """Run the coefficient rules and the engine on the same cubic and compare."""
    _, _, m = normalize_primitive(m)
    if m.degree != 3:
        raise CubicFormError(f"{m} is not a cubic")
    report = classify(m, n_max)
    try:
        form = cubic_form(m)
    except NonMonicCubicError:
        verdict = CubicVerdict(m, None, "nonmonic", finitely_generated=False)
    except PositiveConstantError:
        verdict = CubicVerdict(m, None, "positive-constant", Atomicity.ATOMIC, False,
                               factorization_class=FactorizationClass.NOT_LFM)
    else:
        verdict = classify_cubic(form, report.alpha, engine_report=report)
    problems, claims = _compare(verdict, report)
    verdict = CubicVerdict(
        verdict.polynomial, verdict.form, verdict.rule_applied, verdict.atomicity,
        verdict.finitely_generated, verdict.sigma, verdict.factorization_class,
        verdict.atom_count_at_least, verdict.certificates, verdict.delegated, report,
        not problems, claims, tuple(problems), verdict.flags)
    if problems:
        log.error("rule/engine disagreement on %s: %s", m, "; ".join(problems))
        if strict:
            raise CubicDisagreementError(f"{m}: " + "; ".join(problems))
    return verdict


# ---------------------------------------------------------------------------
# grid scans


@dataclass(frozen=True)
class ScanRow:
    shape: str
    a: int
    b: int
    c: int
    poly: str
    atomicity: str
    generation: str
    sigma_or_bound: str
    factorization_class: str
    rule: str
    agrees: bool

    FIELDS = ("shape", "a", "b", "c", "poly", "atomicity", "generation", "sigma_or_bound",
              "factorization_class", "rule", "agrees")

    def as_list(self) -> list:
        return [getattr(self, f) for f in self.FIELDS]


def scan_instances(shapes: Iterable[str], a_range: Sequence[int], b_range: Sequence[int],
                   c_range: Sequence[int]) -> list[CubicForm]:
    """Irreducible instances of the requested shapes, in (shape, a, b, c) order."""
    out = []
    for shape in sorted(shapes):
        sa, sb = SHAPES[shape]
        for a in (a_range if sa else [0]):
            for b in (b_range if sb else [0]):
                for c in c_range:
                    form = CubicForm(shape, a, b, c)
                    if not rational_root_screen(form.polynomial()):
                        out.append(form)
    return out


def _sigma_or_bound(report: ClassificationReport) -> str:
    if report.sigma is not None:
        return str(report.sigma)
    if report.generation is Generation.UNDECIDED_UP_TO:
        return f">{report.n_max}"
    if report.atom_count_kind == "infinite":
        return "inf"
    return ""


def scan_row(form: CubicForm, n_max: Optional[int] = None) -> tuple[ScanRow, CubicVerdict]:
    v = cross_check(form.polynomial(), n_max, strict=False)
    r = v.engine
    row = ScanRow(form.shape, form.a, form.b, form.c, r.primitive_form.to_canonical(), r.atomicity.value,
                  r.generation.value, _sigma_or_bound(r), r.factorization_class.value,
                  v.rule_applied, bool(v.agrees_with_engine))
    return row, v


def _scan_worker(args: tuple[CubicForm, Optional[int]]) -> tuple[ScanRow, CubicVerdict]:
    return scan_row(*args)


def scan(forms: Sequence[CubicForm], n_max: Optional[int] = None,
         jobs: int = 1) -> list[tuple[ScanRow, CubicVerdict]]:
    """Cross-check every form; results keep the input order whatever ``jobs`` is."""
    tasks = [(f, n_max) for f in forms]
    if jobs <= 1:
        return [_scan_worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_worker, tasks, chunksize=4))
