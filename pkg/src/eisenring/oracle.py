"""Independent brute-force verification of the criterion's conclusion.

``search_factorizations`` looks for f = g*h with both factors
non-constant.  Candidate degree pairs are r+s = n on entire carriers; on
carriers with zero divisors leading terms can cancel, so the pair window
widens to r+s in [max(2, n), n+window].  Mirrored pairs (r > s) are
skipped because multiplication is commutative.  Per-carrier coefficient
bounding rules, with their completeness status:

  finite tables   every coefficient tuple; complete within the window.
  nat             every convolution term is non-negative, so b_i * c_s
                  <= a_(i+s) and with c_s >= 1 every g coefficient is at
                  most max(f); extreme coefficients must divide a_n and
                  a_0 exactly; the cofactor is the unique quotient in
                  integer polynomials, derived top-down.  Complete.
  tropical-min    b_r + c_s = a_n and b_0 + c_0 = a_0 hold exactly;
                  middle candidates are capped at the largest finite
                  coefficient of f with inf included, since any larger
                  value can only avoid affecting minima the way inf
                  does.  Complete.
  gcd-nat         extreme coefficients run over divisor pairs of a_n and
                  a_0; degree-(1,1) splits are therefore complete.  For
                  longer factors the middle coefficients are unbounded
                  (the target is a gcd of terms), so candidates run over
                  divisors of the product of f's nonzero coefficients
                  and the search is a semi-decision: complete=False.

``verify_theorem`` exhausts a finite semiring: every ideal, every
subtractive prime, every polynomial up to a degree cap, and a complete
search behind every Satisfied verdict.  ``hunt_subtractivity`` streams
enumerated semirings looking for prime-but-not-subtractive ideals, for
genuine counterexamples to the criterion-without-subtractivity, and for
proof-trace near misses where a_m lands in the ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    DegreeTooLargeError,
    DegreeTooSmallError,
    OrderTooLargeError,
)
from .eisenstein import check_eisenstein, evaluate_conditions, proof_trace
from .ideals import FiniteSetIdeal
from .polynomials import Polynomial
from .semirings import INFINITY, CarrierKind, SemiringDescriptor, from_table
from .tables import enumerate_ideals, enumerate_semirings

DEFAULT_DEGREE_WINDOW = 2
DEFAULT_NODE_BUDGET = 2_000_000
MAX_VERIFY_ORDER = 4
MAX_VERIFY_DEGREE = 4
NEAR_MISS_CAP = 10

MIRROR_NOTE = "degree pairs with r > s are covered by commutativity"


@dataclass(frozen=True)
class FactorizationOutcome:
    """Either a verified witness pair or a bounded 'none found'."""

    g: Polynomial | None
    h: Polynomial | None
    complete: bool
    degree_pairs: tuple[tuple[int, int], ...]
    coefficient_bound: str
    nodes: int
    note: str = ""

    @property
    def found(self) -> bool:
        return self.g is not None

    def as_dict(self) -> dict:
        return {
            "result": "found" if self.found else "none-within-bounds",
            "g": self.g.format() if self.g is not None else None,
            "h": self.h.format() if self.h is not None else None,
            "complete": self.complete,
            "degree_pairs": [list(p) for p in self.degree_pairs],
            "coefficient_bound": self.coefficient_bound,
            "nodes": self.nodes,
            "note": self.note,
        }


class _NodeBudget:
    __slots__ = ("remaining", "used")

    def __init__(self, limit):
        self.remaining = limit
        self.used = 0

    def spend(self, k: int = 1) -> bool:
        """Consume k nodes; False once the budget is gone."""
        self.used += k
        if self.remaining is None:
            return True
        self.remaining -= k
        return self.remaining >= 0


def _divisors(v: int) -> list[int]:
    out = []
    d = 1
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            if d != v // d:
                out.append(v // d)
        d += 1
    out.sort()
    return out


def search_factorizations(
    f: Polynomial,
    window: int = DEFAULT_DEGREE_WINDOW,
    coeff_bound: int | None = None,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> FactorizationOutcome:
    """First factorization of f into two non-constant polynomials in a
    deterministic lexicographic order, else NoneWithinBounds.

    ``coeff_bound`` overrides the carrier's derived coefficient cap; a
    cap below the derived one demotes the outcome to complete=False.
    ``node_budget`` limits candidates examined; running out returns a
    partial outcome instead of raising.
    """
    S = f.semiring
    n = f.degree
    if n is None or n < 1:
        raise DegreeTooSmallError("factor search needs a non-constant polynomial")
    entire = S.flags.is_entire
    if entire:
        totals = [n]
    else:
        totals = list(range(max(2, n), n + window + 1))
    pairs = tuple(
        (r, t - r) for t in totals for r in range(1, t // 2 + 1)
    )
    if entire and n == 1:
        return FactorizationOutcome(
            None, None, True, (), "none needed", 0,
            "degree 1 over an entire carrier cannot split into two non-constant factors",
        )
    budget = _NodeBudget(node_budget)

    kind = S.kind
    if kind is CarrierKind.FINITE:
        found, bound_desc, complete = _finite_search(f, pairs, budget)
        if not entire:
            complete_note = f"all coefficient tuples within the degree window (window={window})"
        else:
            complete_note = "all coefficient tuples; degrees add exactly on an entire carrier"
    elif kind is CarrierKind.NATURALS:
        found, bound_desc, complete = _nat_search(f, pairs, coeff_bound, budget)
        complete_note = "derived cofactors make the divisor-pruned scan exhaustive"
    elif kind is CarrierKind.TROPICAL_MIN:
        found, bound_desc, complete = _tropical_search(f, pairs, coeff_bound, budget)
        complete_note = "middle coefficients above the cap behave like inf"
    else:
        found, bound_desc, complete = _gcd_search(f, pairs, budget)
        complete_note = (
            "divisor-pair splits are exhaustive for degree (1,1); longer "
            "factors have unbounded middles, so this is a semi-decision"
        )
    note = complete_note + "; " + MIRROR_NOTE
    if budget.remaining is not None and budget.remaining < 0:
        complete = False
        note = "node budget exhausted; " + note
    if found is not None:
        g, h = found
        if g * h != f:
            raise RuntimeError("internal error: candidate factorization failed re-verification")
        return FactorizationOutcome(g, h, complete, pairs, bound_desc, budget.used, note)
    return FactorizationOutcome(None, None, complete, pairs, bound_desc, budget.used, note)


def _finite_search(f: Polynomial, pairs, budget):
    S = f.semiring
    order = S.table.order
    z = S.table.zero_index
    for r, s in pairs:
        for g_tup in itertools.product(range(order), repeat=r + 1):
            if g_tup[r] == z:
                continue
            g = Polynomial(S, g_tup)
            for h_tup in itertools.product(range(order), repeat=s + 1):
                if h_tup[s] == z:
                    continue
                if not budget.spend():
                    return None, "all carrier elements", False
                h = Polynomial(S, h_tup)
                if g * h == f:
                    return (g, h), "all carrier elements", True
    return None, "all carrier elements", True


def _nat_search(f: Polynomial, pairs, coeff_bound, budget):
    a = f.coeffs
    n = f.degree
    derived = max(a)
    cap = derived if coeff_bound is None else coeff_bound
    complete = cap >= derived
    desc = f"coefficients <= {cap} (derived cap {derived} = max coefficient)"
    lead_divs = [d for d in _divisors(a[n]) if d <= cap]
    if a[0] > 0:
        const_cands = [d for d in _divisors(a[0]) if d <= cap]
    else:
        const_cands = list(range(cap + 1))
    mid_cands = list(range(cap + 1))
    for r, s in pairs:
        position_cands = [const_cands] + [mid_cands] * (r - 1) + [lead_divs]
        for g_tup in itertools.product(*position_cands):
            if not budget.spend():
                return None, desc, False
            c = _nat_cofactor(a, g_tup, n, r)
            if c is not None:
                g = Polynomial(f.semiring, g_tup)
                h = Polynomial(f.semiring, c)
                return (g, h), desc, complete
    return None, desc, complete


def _nat_cofactor(a, b, n, r):
    """Unique h with g*h = f over the naturals, if it exists: solve the
    convolution top-down (exact division in integer polynomials), then
    verify the remaining equations and non-negativity."""
    s = n - r
    br = b[r]
    q, rem = divmod(a[n], br)
    if rem:
        return None
    c = [0] * (s + 1)
    c[s] = q
    for k in range(n - 1, r - 1, -1):
        j0 = k - r
        acc = 0
        for j in range(j0 + 1, min(s, k) + 1):
            acc += b[k - j] * c[j]
        d = a[k] - acc
        if d < 0:
            return None
        q, rem = divmod(d, br)
        if rem:
            return None
        c[j0] = q
    for k in range(r - 1, -1, -1):
        acc = 0
        for j in range(0, min(s, k) + 1):
            acc += b[k - j] * c[j]
        if acc != a[k]:
            return None
    return tuple(c)


def _tropical_search(f: Polynomial, pairs, coeff_bound, budget):
    S = f.semiring
    a = f.coeffs
    n = f.degree
    finite_vals = [v for v in a if v != INFINITY]
    derived = max(finite_vals)  # the leading coefficient is finite
    cap = derived if coeff_bound is None else coeff_bound
    complete = cap >= derived
    desc = f"finite coefficients <= {cap} plus inf (derived cap {derived})"
    candidates = list(range(cap + 1)) + [INFINITY]
    lead_splits = [(t, a[n] - t) for t in range(a[n] + 1)]
    a0 = a[0] if a else INFINITY
    if a0 != INFINITY:
        const_splits = [(t, a0 - t) for t in range(a0 + 1)]
    else:
        const_splits = [(INFINITY, v) for v in candidates] + [
            (v, INFINITY) for v in candidates if v != INFINITY
        ]
    for r, s in pairs:
        for bl, cl in lead_splits:
            for b0, c0 in const_splits:
                for g_mid in itertools.product(candidates, repeat=r - 1):
                    g = Polynomial(S, (b0, *g_mid, bl))
                    if g.degree != r:
                        continue
                    for h_mid in itertools.product(candidates, repeat=s - 1):
                        if not budget.spend():
                            return None, desc, False
                        h = Polynomial(S, (c0, *h_mid, cl))
                        if h.degree != s:
                            continue
                        if g * h == f:
                            return (g, h), desc, complete
    return None, desc, complete


def _gcd_search(f: Polynomial, pairs, budget):
    S = f.semiring
    a = f.coeffs
    n = f.degree
    prod = 1
    for v in a:
        if v > 0:
            prod *= v
    mid_cands = [0] + _divisors(prod)
    desc = (
        "extreme coefficients over divisor pairs of the extreme target "
        "coefficients; middle coefficients over divisors of the product "
        "of the nonzero target coefficients"
    )
    complete = all(r == 1 and s == 1 for r, s in pairs)
    lead_pairs = [(d, a[n] // d) for d in _divisors(a[n])]
    if a[0] > 0:
        const_pairs = [(d, a[0] // d) for d in _divisors(a[0])]
    else:
        const_pairs = [(0, v) for v in mid_cands] + [(v, 0) for v in mid_cands if v != 0]
    for r, s in pairs:
        for bl, cl in lead_pairs:
            for b0, c0 in const_pairs:
                for g_mid in itertools.product(mid_cands, repeat=r - 1):
                    g = Polynomial(S, (b0, *g_mid, bl)) if r > 1 else Polynomial(S, (b0, bl))
                    if g.degree != r:
                        continue
                    for h_mid in itertools.product(mid_cands, repeat=s - 1):
                        if not budget.spend():
                            return None, desc, False
                        h = (
                            Polynomial(S, (c0, *h_mid, cl))
                            if s > 1
                            else Polynomial(S, (c0, cl))
                        )
                        if h.degree != s:
                            continue
                        if g * h == f:
                            return (g, h), desc, complete
    return None, desc, complete


# ---------------------------------------------------------------------------
# whole-theorem validation over a finite semiring

@dataclass(frozen=True)
class ViolationWitness:
    polynomial: str
    ideal: str
    g: str
    h: str

    def as_dict(self) -> dict:
        return {"polynomial": self.polynomial, "ideal": self.ideal, "g": self.g, "h": self.h}


@dataclass(frozen=True)
class TheoremStats:
    semiring_id: str
    order: int
    max_degree: int
    window: int
    ideals_found: int
    subtractive_primes: int
    subtractive_prime_sets: tuple[str, ...]
    polynomials_scanned: int
    criterion_applicable: int
    violations: int
    violation_witnesses: tuple[ViolationWitness, ...]

    def as_dict(self) -> dict:
        return {
            "semiring_id": self.semiring_id,
            "order": self.order,
            "max_degree": self.max_degree,
            "window": self.window,
            "ideals_found": self.ideals_found,
            "subtractive_primes": self.subtractive_primes,
            "subtractive_prime_sets": list(self.subtractive_prime_sets),
            "polynomials_scanned": self.polynomials_scanned,
            "criterion_applicable": self.criterion_applicable,
            "violations": self.violations,
            "violation_witnesses": [w.as_dict() for w in self.violation_witnesses],
        }


def _all_polynomials(S: SemiringDescriptor, max_degree: int):
    """Every canonical polynomial of degree 1..max_degree over a finite
    carrier, in a fixed lexicographic order."""
    order = S.table.order
    z = S.table.zero_index
    for d in range(1, max_degree + 1):
        for tup in itertools.product(range(order), repeat=d + 1):
            if tup[d] == z:
                continue
            yield Polynomial(S, tup)


def verify_theorem(
    semiring, max_degree: int, window: int = DEFAULT_DEGREE_WINDOW
) -> TheoremStats:
    """Exhaustive validation harness for one finite semiring.

    Every Satisfied verdict is answered with a complete windowed search;
    any factorization found is a violation witness and re-checks end to
    end.  The expected count is zero; a non-zero count is a finding to
    investigate, not an assertion failure here.
    """
    order = semiring.table.order if isinstance(semiring, SemiringDescriptor) else semiring.order
    if order > MAX_VERIFY_ORDER:
        raise OrderTooLargeError(
            f"verify_theorem supports order <= {MAX_VERIFY_ORDER}, got {order}"
        )
    S = semiring if isinstance(semiring, SemiringDescriptor) else from_table(semiring)
    fs = S.table
    if max_degree > MAX_VERIFY_DEGREE or max_degree < 1:
        raise DegreeTooLargeError(
            f"verify_theorem supports max_degree in 1..{MAX_VERIFY_DEGREE}, got {max_degree}"
        )
    ideal_sets = enumerate_ideals(fs)
    ideals = [FiniteSetIdeal(S, subset) for subset in ideal_sets]
    sub_primes = [i for i in ideals if i.predicates().all_hold]
    polynomials = list(_all_polynomials(S, max_degree))
    applicable = 0
    witnesses = []
    for ideal in sub_primes:
        for f in polynomials:
            report = check_eisenstein(f, ideal)
            if not report.satisfied:
                continue
            applicable += 1
            outcome = search_factorizations(f, window=window, node_budget=None)
            if outcome.found:
                witnesses.append(
                    ViolationWitness(
                        f.format(), ideal.describe(), outcome.g.format(), outcome.h.format()
                    )
                )
    return TheoremStats(
        semiring_id=fs.digest(),
        order=fs.order,
        max_degree=max_degree,
        window=window,
        ideals_found=len(ideals),
        subtractive_primes=len(sub_primes),
        subtractive_prime_sets=tuple(i.describe() for i in sub_primes),
        polynomials_scanned=len(polynomials),
        criterion_applicable=applicable,
        violations=len(witnesses),
        violation_witnesses=tuple(witnesses),
    )


# ---------------------------------------------------------------------------
# hunting the necessity of subtractivity

KIND_NON_SUBTRACTIVE_PRIME = "non-subtractive-prime"
KIND_CRITERION_COUNTEREXAMPLE = "criterion-counterexample"
KIND_TRACE_NEAR_MISS = "trace-near-miss"


@dataclass(frozen=True)
class Finding:
    kind: str
    order: int
    semiring_id: str
    add_table: tuple
    mul_table: tuple
    ideal: str
    detail: dict

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "semiring_id": self.semiring_id,
            "add_table": [list(r) for r in self.add_table],
            "mul_table": [list(r) for r in self.mul_table],
            "ideal": self.ideal,
            "detail": dict(self.detail),
        }


@dataclass(frozen=True)
class HuntReport:
    findings: tuple[Finding, ...]
    partial: bool
    orders: tuple[int, ...]
    semirings_examined: int

    def counterexamples(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.kind == KIND_CRITERION_COUNTEREXAMPLE)

    def as_dict(self) -> dict:
        return {
            "findings": [f.as_dict() for f in self.findings],
            "partial": self.partial,
            "orders": list(self.orders),
            "semirings_examined": self.semirings_examined,
        }


def hunt_subtractivity(
    max_order: int, max_degree: int, budget: int | None = None
) -> HuntReport:
    """Probe whether subtractivity is a needed hypothesis.

    For every enumerated semiring up to ``max_order``, every proper prime
    ideal that is NOT subtractive is reported.  Against each such ideal the
    hunt looks for a polynomial meeting all three conditions that still
    factors (a genuine counterexample to the criterion without the
    subtractivity hypothesis) and records proof traces whose a_m lands in
    the ideal (near misses showing where subtractivity would have bitten).
    Nothing found within budget is reported as exactly that: no claim.
    """
    if max_order < 2:
        raise ValueError(f"max_order must be at least 2, got {max_order}")
    if max_order > MAX_VERIFY_ORDER:
        raise OrderTooLargeError(
            f"hunt supports max_order <= {MAX_VERIFY_ORDER}, got {max_order}"
        )
    if max_degree < 1 or max_degree > MAX_VERIFY_DEGREE:
        raise DegreeTooLargeError(
            f"hunt supports max_degree in 1..{MAX_VERIFY_DEGREE}, got {max_degree}"
        )
    remaining = [budget]

    def spend(k: int = 1):
        if remaining[0] is None:
            return
        remaining[0] -= k
        if remaining[0] < 0:
            raise BudgetExceededError("hunt budget exhausted")

    findings: list[Finding] = []
    examined = 0
    partial = False
    orders = tuple(range(2, max_order + 1))
    try:
        for order in orders:
            for fs in enumerate_semirings(order):
                spend()
                examined += 1
                S = from_table(fs)
                for subset in enumerate_ideals(fs):
                    ideal = FiniteSetIdeal(S, subset)
                    preds = ideal.predicates()
                    if not (preds.proper.holds and preds.prime.holds):
                        continue
                    if preds.subtractive.holds:
                        continue
                    base = dict(
                        kind=KIND_NON_SUBTRACTIVE_PRIME,
                        order=order,
                        semiring_id=fs.digest(),
                        add_table=fs.add_table,
                        mul_table=fs.mul_table,
                        ideal=ideal.describe(),
                    )
                    findings.append(
                        Finding(
                            **base,
                            detail={
                                "subtractivity_witness": list(preds.subtractive.witness),
                            },
                        )
                    )
                    _hunt_counterexamples(S, ideal, max_degree, spend, findings, base)
                    _hunt_near_misses(S, ideal, max_degree, spend, findings, base)
    except BudgetExceededError:
        partial = True
    return HuntReport(tuple(findings), partial, orders, examined)


def _hunt_counterexamples(S, ideal, max_degree, spend, findings, base):
    for f in _all_polynomials(S, max_degree):
        spend()
        failing, _, _, _ = evaluate_conditions(f, ideal)
        if failing is not None:
            continue
        outcome = search_factorizations(f, window=DEFAULT_DEGREE_WINDOW, node_budget=None)
        if outcome.found:
            findings.append(
                Finding(
                    **{**base, "kind": KIND_CRITERION_COUNTEREXAMPLE},
                    detail={
                        "polynomial": f.format(),
                        "g": outcome.g.format(),
                        "h": outcome.h.format(),
                    },
                )
            )


def _hunt_near_misses(S, ideal, max_degree, spend, findings, base):
    recorded = 0
    top = min(2, max_degree)
    order = S.table.order
    z = S.table.zero_index
    for dg in range(1, top + 1):
        for dh in range(1, top + 1):
            for g_tup in itertools.product(range(order), repeat=dg + 1):
                if g_tup[dg] == z:
                    continue
                g = Polynomial(S, g_tup)
                for h_tup in itertools.product(range(order), repeat=dh + 1):
                    if h_tup[dh] == z:
                        continue
                    spend()
                    h = Polynomial(S, h_tup)
                    g0_in = ideal.contains_value(g.constant_value())
                    h0_in = ideal.contains_value(h.constant_value())
                    if g0_in and h0_in:
                        continue
                    c = h if not g0_in else g
                    if all(
                        ideal.contains_value(c.coeff_value(k))
                        for k in range(c.degree + 1)
                    ):
                        continue
                    trace = proof_trace(g, h, ideal)
                    if not trace.a_m_in_ideal:
                        continue
                    findings.append(
                        Finding(
                            **{**base, "kind": KIND_TRACE_NEAR_MISS},
                            detail={
                                "g": g.format(),
                                "h": h.format(),
                                "m": trace.m,
                                "a_m": trace.a_m,
                                "nonmember_terms": list(trace.nonmember_terms),
                            },
                        )
                    )
                    recorded += 1
                    if recorded >= NEAR_MISS_CAP:
                        return
