"""The criterion checker, its prime-element corollary form, and the
proof-trace engine.

Given a subtractive prime ideal P and f = a_n x^n + ... + a_0, the three
conditions are

    (1) a_n not in P,
    (2) a_i in P for every i < n,
    (3) a_0 not in P^2.

A Satisfied verdict certifies exactly one thing: f has no factorization
into two non-constant polynomials over the carrier.  NotApplicable makes
no claim about f either way; the criterion is sufficient, not necessary.

The trace engine replays the underlying argument on a concrete candidate
factorization g*h.  After normalizing roles so the b-factor has its
constant term outside P, it finds the least m with c_m outside P and
splits the product coefficient a_m into its convolution terms.  Every
term except b_0*c_m lies in P; when P is subtractive and prime that
forces a_m outside P, and when P is not subtractive the trace shows
exactly where the sum absorbed the non-member term.

Hypothesis certificates are carried verbatim in each report: exact on
finite carriers, and possibly bound-verified on infinite ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import (
    DegreeTooSmallError,
    HypothesisNotEstablishedError,
    NotPrimeElementError,
    SemiringMismatchError,
)
from .ideals import Ideal, IdealPredicateReport, principal_ideal
from .polynomials import Polynomial

DEFAULT_HYPOTHESIS_BOUND = 4096

ROUTE_IDEAL_CERTIFICATE = "ideal-certificate"
ROUTE_SEMIRING_FLAGS = "semiring-flags"


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    NOT_APPLICABLE = "not-applicable"
    HYPOTHESIS_NOT_ESTABLISHED = "hypothesis-not-established"


@dataclass(frozen=True, slots=True)
class ConditionEvidence:
    """Raw membership facts backing a verdict.  ``lower`` lists (index,
    value, in P) pairs for the coefficients below the degree, recorded in
    ascending order up to and including the first failure."""

    leading_in_ideal: bool | None = None
    lower: tuple = ()
    constant_in_square: bool | None = None


@dataclass(frozen=True, slots=True)
class EisensteinReport:
    polynomial: Polynomial
    ideal: Ideal
    verdict: Verdict
    failing_condition: int | None
    witness_index: int | None
    witness_value: object
    evidence: ConditionEvidence
    hypothesis: IdealPredicateReport
    hypothesis_failure: str | None
    hypothesis_bound: int
    hypothesis_route: str = ROUTE_IDEAL_CERTIFICATE

    @property
    def satisfied(self) -> bool:
        return self.verdict is Verdict.SATISFIED

    def as_dict(self) -> dict:
        S = self.polynomial.semiring
        fmt = S.format_value
        ev = self.evidence
        conditions = {}
        if ev.leading_in_ideal is not None:
            n = self.polynomial.degree
            conditions["1"] = {
                "coefficient_index": n,
                "value": fmt(self.polynomial.coeff_value(n)),
                "in_ideal": ev.leading_in_ideal,
                "holds": not ev.leading_in_ideal,
            }
        if ev.lower:
            conditions["2"] = {
                "memberships": [
                    {"index": i, "value": fmt(v), "in_ideal": ok} for i, v, ok in ev.lower
                ],
                "holds": all(ok for _, _, ok in ev.lower),
            }
        if ev.constant_in_square is not None:
            conditions["3"] = {
                "value": fmt(self.polynomial.coeff_value(0)),
                "in_ideal_square": ev.constant_in_square,
                "holds": not ev.constant_in_square,
            }
        return {
            "polynomial": self.polynomial.format(),
            "ideal": self.ideal.describe(),
            "verdict": self.verdict.value,
            "failing_condition": self.failing_condition,
            "witness_index": self.witness_index,
            "witness_value": None if self.witness_value is None else fmt(self.witness_value),
            "conditions": conditions,
            "hypothesis": self.hypothesis.as_dict(),
            "hypothesis_failure": self.hypothesis_failure,
            "hypothesis_bound": self.hypothesis_bound,
            "hypothesis_route": self.hypothesis_route,
        }


def evaluate_conditions(f: Polynomial, P: Ideal):
    """Membership checks only, without the hypothesis gate.  Returns
    (failing_condition or None, witness_index, witness_value, evidence).
    Conditions are checked in order and the first failure wins."""
    n = f.degree
    leading = f.coeff_value(n)
    leading_in = P.contains_value(leading)
    if leading_in:
        return 1, n, leading, ConditionEvidence(leading_in_ideal=True)
    lower = []
    for i in range(n):
        v = f.coeff_value(i)
        ok = P.contains_value(v)
        lower.append((i, v, ok))
        if not ok:
            return 2, i, v, ConditionEvidence(False, tuple(lower))
    constant = f.coeff_value(0)
    in_square = P.square().contains_value(constant)
    evidence = ConditionEvidence(False, tuple(lower), in_square)
    if in_square:
        return 3, 0, constant, evidence
    return None, None, None, evidence


def check_eisenstein(
    f: Polynomial, P: Ideal, hypothesis_bound: int = DEFAULT_HYPOTHESIS_BOUND
) -> EisensteinReport:
    """Full criterion check: certify P proper, prime and subtractive, then
    test the three conditions.

    Satisfied certifies that f cannot be written as a product of two
    non-constant polynomials.  NotApplicable carries the first failing
    condition and its witness.  A failed hypothesis is reported as the
    HypothesisNotEstablished verdict with the failing certificate.
    """
    if f.semiring != P.semiring:
        raise SemiringMismatchError(
            f"polynomial over {f.semiring.name}, ideal over {P.semiring.name}"
        )
    n = f.degree
    if n is None or n < 1:
        raise DegreeTooSmallError("the criterion needs a non-constant polynomial")
    hypothesis = P.predicates(hypothesis_bound)
    failure = hypothesis.first_failure()
    if failure is not None:
        name, _ = failure
        return EisensteinReport(
            f, P, Verdict.HYPOTHESIS_NOT_ESTABLISHED,
            failing_condition=None, witness_index=None, witness_value=None,
            evidence=ConditionEvidence(),
            hypothesis=hypothesis, hypothesis_failure=name,
            hypothesis_bound=hypothesis_bound,
        )
    failing, w_index, w_value, evidence = evaluate_conditions(f, P)
    verdict = Verdict.SATISFIED if failing is None else Verdict.NOT_APPLICABLE
    return EisensteinReport(
        f, P, verdict, failing, w_index, w_value, evidence,
        hypothesis=hypothesis, hypothesis_failure=None,
        hypothesis_bound=hypothesis_bound,
    )


def check_corollary(
    f: Polynomial, p, hypothesis_bound: int = DEFAULT_HYPOTHESIS_BOUND
) -> EisensteinReport:
    """Prime-element form: p does not divide a_n, p divides every a_i
    below the degree, and p^2 does not divide a_0.

    Lowers to the ideal form over (p), where p | a is membership in (p)
    and p^2 | a_0 is membership in (p)^2 = (p^2).  The subtractivity
    hypothesis is taken from the semiring flags when the carrier declares
    every prime ideal subtractive alongside factoriality; otherwise the
    per-ideal certificate for (p) is used.  The naturals need the second
    route: they are not weak Gaussian, but (p) itself is subtractive
    prime, which is all the argument uses.
    """
    S = f.semiring
    el = S.element(p)
    if el.value == S.zero_value:
        raise NotPrimeElementError("the corollary needs a nonzero element")
    if S.is_unit_value(el.value):
        raise NotPrimeElementError(
            "units are excluded from the prime-element role"
        )
    report = check_eisenstein(f, principal_ideal(S, el), hypothesis_bound)
    flags = S.flags
    if flags.is_weak_gaussian and flags.is_factorial and flags.is_semidomain:
        route = ROUTE_SEMIRING_FLAGS
    else:
        route = ROUTE_IDEAL_CERTIFICATE
    return replace(report, hypothesis_route=route)


# ---------------------------------------------------------------------------
# proof trace

OUTCOME_TRACED = "traced"
OUTCOME_CONSTANT_TERMS_IN_IDEAL = "constant-terms-in-ideal"


@dataclass(frozen=True, slots=True)
class TraceTerm:
    i: int
    j: int
    value: str
    in_ideal: bool

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "value": self.value, "in_ideal": self.in_ideal}


@dataclass(frozen=True, slots=True)
class TraceReport:
    outcome: str
    ideal: str
    b_factor: str
    c_factor: str
    product: str
    m: int | None
    terms: tuple[TraceTerm, ...]
    a_m: str | None
    a_m_in_ideal: bool | None
    subtractivity_used: bool
    nonmember_terms: tuple[int, ...]
    hypothesis_bound: int
    constant_product: str | None = None
    constant_product_in_square: bool | None = None

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "ideal": self.ideal,
            "hypothesis_bound": self.hypothesis_bound,
            "roles": {"b": self.b_factor, "c": self.c_factor},
            "product": self.product,
            "m": self.m,
            "terms": [t.as_dict() for t in self.terms],
            "a_m": self.a_m,
            "a_m_in_ideal": self.a_m_in_ideal,
            "subtractivity_used": self.subtractivity_used,
            "nonmember_terms": list(self.nonmember_terms),
            "constant_product": self.constant_product,
            "constant_product_in_square": self.constant_product_in_square,
        }


def proof_trace(
    g: Polynomial, h: Polynomial, P: Ideal,
    hypothesis_bound: int = DEFAULT_HYPOTHESIS_BOUND,
) -> TraceReport:
    """Replay the contradiction argument on the candidate product g*h.

    P must be certified proper and prime; subtractivity may fail, which is
    the instructive case.  Roles are normalized so the b-factor has its
    constant term outside P (g wins the role when both do).  If both
    constant terms lie in P the roles are unassignable and the report
    instead exhibits a_0 = b_0*c_0 inside P^2, the condition-(3) clash.
    """
    S = g.semiring
    if h.semiring != S or P.semiring != S:
        raise SemiringMismatchError("trace inputs live over different semirings")
    if g.degree is None or g.degree < 1 or h.degree is None or h.degree < 1:
        raise DegreeTooSmallError("trace factors must be non-constant")
    hypothesis = P.predicates(hypothesis_bound)
    if not (hypothesis.proper.holds and hypothesis.prime.holds):
        name, cert = hypothesis.first_failure()
        raise HypothesisNotEstablishedError(
            f"trace needs a proper prime ideal; {name} failed"
            + (f" with witness {cert.witness}" if cert.witness else "")
        )
    subtractive = hypothesis.subtractive.holds
    fmt = S.format_value
    product = g * h

    g0_in = P.contains_value(g.constant_value())
    h0_in = P.contains_value(h.constant_value())
    if g0_in and h0_in:
        a0 = product.coeff_value(0)
        return TraceReport(
            outcome=OUTCOME_CONSTANT_TERMS_IN_IDEAL,
            ideal=P.describe(),
            b_factor=g.format(),
            c_factor=h.format(),
            product=product.format(),
            m=None, terms=(), a_m=None, a_m_in_ideal=None,
            subtractivity_used=subtractive, nonmember_terms=(),
            hypothesis_bound=hypothesis_bound,
            constant_product=fmt(a0),
            constant_product_in_square=P.square().contains_value(a0),
        )

    b, c = (g, h) if not g0_in else (h, g)
    m = next(
        (k for k in range(c.degree + 1) if not P.contains_value(c.coeff_value(k))),
        None,
    )
    if m is None:
        raise ValueError(
            "the factor playing c has every coefficient in the ideal; "
            "no minimal index exists"
        )
    terms = []
    nonmembers = []
    for i in range(0, min(m, b.degree) + 1):
        j = m - i
        value = S.mul_values(b.coeff_value(i), c.coeff_value(j))
        in_ideal = P.contains_value(value)
        if not in_ideal:
            nonmembers.append(len(terms))
        terms.append(TraceTerm(i, j, fmt(value), in_ideal))
    a_m = product.coeff_value(m)
    return TraceReport(
        outcome=OUTCOME_TRACED,
        ideal=P.describe(),
        b_factor=b.format(),
        c_factor=c.format(),
        product=product.format(),
        m=m,
        terms=tuple(terms),
        a_m=fmt(a_m),
        a_m_in_ideal=P.contains_value(a_m),
        subtractivity_used=subtractive,
        nonmember_terms=tuple(nonmembers),
        hypothesis_bound=hypothesis_bound,
    )
