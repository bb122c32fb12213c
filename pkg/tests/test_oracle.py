import itertools
import random

import pytest

from eisenring import (
    INFINITY,
    Polynomial,
    boolean_table,
    hunt_subtractivity,
    mod2_table,
    mod3_table,
    n3_saturating_table,
    search_factorizations,
    verify_theorem,
)
from eisenring.errors import DegreeTooLargeError, DegreeTooSmallError, OrderTooLargeError
from eisenring.oracle import (
    KIND_CRITERION_COUNTEREXAMPLE,
    KIND_NON_SUBTRACTIVE_PRIME,
    KIND_TRACE_NEAR_MISS,
)


def naive_nat_search(coeffs, cap):
    """Independent reference search over the naturals: explicit nested loops
    over both factor tuples with coefficients <= cap, checking the raw
    convolution equations directly.  Existence only; mirrored splits are
    equivalent by commutativity."""
    n = len(coeffs) - 1
    if n == 2:
        a0, a1, a2 = coeffs
        for b1 in range(1, cap + 1):
            for c1 in range(1, cap + 1):
                if b1 * c1 != a2:
                    continue
                for b0 in range(cap + 1):
                    for c0 in range(cap + 1):
                        if b0 * c0 != a0:
                            continue
                        if b0 * c1 + b1 * c0 == a1:
                            return (b0, b1), (c0, c1)
        return None
    if n == 3:
        a0, a1, a2, a3 = coeffs
        for b1 in range(1, cap + 1):
            for c2 in range(1, cap + 1):
                if b1 * c2 != a3:
                    continue
                for b0 in range(cap + 1):
                    for c0 in range(cap + 1):
                        if b0 * c0 != a0:
                            continue
                        for c1 in range(cap + 1):
                            if b0 * c2 + b1 * c1 == a2 and b0 * c1 + b1 * c0 == a1:
                                return (b0, b1), (c0, c1, c2)
        return None
    raise NotImplementedError(n)


class TestSearchExamples:
    def test_nat_found(self, nat):
        outcome = search_factorizations(Polynomial.parse("x^2 + 3*x + 2", nat))
        assert outcome.found
        assert outcome.g.format() == "x + 1"
        assert outcome.h.format() == "x + 2"

    def test_nat_complete_none(self, nat):
        outcome = search_factorizations(Polynomial.parse("x^2 + 2*x + 2", nat))
        assert not outcome.found and outcome.complete

    def test_bool_idempotent_square(self, boolean):
        outcome = search_factorizations(Polynomial.parse("x^2 + x + 1", boolean))
        assert outcome.found
        assert outcome.g.format() == "x + 1"
        assert outcome.h.format() == "x + 1"

    def test_degree_one_entire(self, nat):
        outcome = search_factorizations(Polynomial.parse("x + 2", nat))
        assert not outcome.found and outcome.complete
        assert outcome.degree_pairs == ()

    def test_degree_zero_rejected(self, nat):
        with pytest.raises(DegreeTooSmallError):
            search_factorizations(Polynomial.parse("4", nat))

    def test_criterion_not_necessary(self, nat):
        # x^2 + 4 has no factorization yet fails condition 3 for (2)
        outcome = search_factorizations(Polynomial.parse("x^2 + 4", nat))
        assert not outcome.found and outcome.complete


class TestFoundInvariant:
    def test_products_reverify(self, nat, tropical, boolean, gcdnat):
        rng = random.Random(13)
        for S in (nat, tropical, boolean, gcdnat):
            if S.flags.is_finite:
                pool = list(range(S.table.order))
            elif S.name == "tropical-min":
                pool = list(range(0, 6)) + [INFINITY]
            else:
                pool = list(range(0, 6))
            nonzero = [v for v in pool if v != S.zero_value]
            for _ in range(40):
                g = Polynomial(S, [rng.choice(pool), rng.choice(nonzero)])
                h = Polynomial(S, [rng.choice(pool), rng.choice(nonzero)])
                f = g * h
                if f.degree is None or f.degree < 2:
                    continue
                outcome = search_factorizations(f)
                if S.name == "gcd-nat" and f.degree > 2:
                    continue  # semi-decision zone
                assert outcome.found, f"{S.name}: {f.format()} = ({g.format()})({h.format()})"
                assert outcome.g * outcome.h == f
                assert outcome.g.degree >= 1 and outcome.h.degree >= 1

    def test_gcd_found(self, gcdnat):
        g = Polynomial(gcdnat, (2, 1))
        h = Polynomial(gcdnat, (1, 6))
        f = g * h
        outcome = search_factorizations(f)
        assert outcome.found and outcome.g * outcome.h == f


class TestWindow:
    def test_degree_can_collapse_on_zero_divisors(self, nilpotent3):
        S = nilpotent3
        # pick a nilpotent element a (a*a = 0) and square a*x + 1
        a = next(
            v
            for v in range(1, S.table.order)
            if S.mul_values(v, v) == S.zero_value
        )
        g = Polynomial(S, (S.one_value, a))
        f = g * g
        assert f.degree is not None and f.degree < 2
        outcome = search_factorizations(f, window=2)
        assert outcome.found
        assert outcome.g * outcome.h == f
        assert outcome.g.degree >= 1 and outcome.h.degree >= 1

    def test_window_zero_misses_collapse(self, nilpotent3):
        S = nilpotent3
        a = next(
            v for v in range(1, S.table.order) if S.mul_values(v, v) == S.zero_value
        )
        g = Polynomial(S, (S.one_value, a))
        f = g * g
        if f.degree == 1:
            outcome = search_factorizations(f, window=0)
            # pairs r+s in [2, 1] is empty only if window makes totals empty;
            # totals = [max(2, 1)..1+0] = [] so nothing is searched
            assert not outcome.found


class TestCompleteness:
    def test_nat_degree2_exhaustive_cross_check(self, nat):
        for a0, a1 in itertools.product(range(7), repeat=2):
            for a2 in range(1, 7):
                coeffs = (a0, a1, a2)
                f = Polynomial(nat, coeffs)
                outcome = search_factorizations(f)
                naive = naive_nat_search(coeffs, 36)
                assert outcome.found == (naive is not None), coeffs

    def test_nat_degree3_sampled_cross_check(self, nat):
        rng = random.Random(31)
        for _ in range(60):
            coeffs = (
                rng.randrange(0, 7),
                rng.randrange(0, 7),
                rng.randrange(0, 7),
                rng.randrange(1, 7),
            )
            f = Polynomial(nat, coeffs)
            outcome = search_factorizations(f)
            naive = naive_nat_search(coeffs, 36)
            assert outcome.found == (naive is not None), coeffs

    def test_custom_coeff_bound_demotes_completeness(self, nat):
        f = Polynomial.parse("x^2 + 5*x + 6", nat)
        outcome = search_factorizations(f, coeff_bound=1)
        assert not outcome.found and not outcome.complete

    def test_node_budget_partial(self, boolean):
        f = Polynomial.parse("x^2 + x + 1", boolean)
        outcome = search_factorizations(f, node_budget=0)
        assert not outcome.found and not outcome.complete
        assert "budget" in outcome.note


class TestDeterminism:
    def test_search_stable(self, nat):
        f = Polynomial.parse("x^4 + 5*x^2 + 4", nat)
        first = search_factorizations(f).as_dict()
        second = search_factorizations(f).as_dict()
        assert first == second

    def test_verify_stable(self):
        a = verify_theorem(n3_saturating_table(), 3).as_dict()
        b = verify_theorem(n3_saturating_table(), 3).as_dict()
        assert a == b


class TestVerifyTheorem:
    def test_n3(self):
        stats = verify_theorem(n3_saturating_table(), 3)
        assert stats.subtractive_prime_sets == ("{0}",)
        assert stats.criterion_applicable == 0
        assert stats.violations == 0
        assert stats.polynomials_scanned == 78
        assert stats.ideals_found == 3

    def test_bool_and_rings(self):
        for table in (boolean_table(), mod2_table(), mod3_table()):
            stats = verify_theorem(table, 3)
            assert stats.criterion_applicable == 0
            assert stats.violations == 0

    def test_limits(self):
        from eisenring.tables import FiniteSemiring

        with pytest.raises(DegreeTooLargeError):
            verify_theorem(boolean_table(), 5)
        n = 5
        add = tuple(tuple(min(i + j, n - 1) for j in range(n)) for i in range(n))
        mul = tuple(tuple(min(i * j, n - 1) for j in range(n)) for i in range(n))
        big = FiniteSemiring(n, tuple(map(str, range(n))), add, mul)
        with pytest.raises(OrderTooLargeError):
            verify_theorem(big, 2)


class TestHunt:
    def test_order_two_empty(self):
        report = hunt_subtractivity(2, 3)
        assert report.findings == ()
        assert not report.partial

    def test_order_three_findings(self):
        report = hunt_subtractivity(3, 3)
        assert not report.partial
        n3_id = n3_saturating_table().digest()
        primes = [f for f in report.findings if f.kind == KIND_NON_SUBTRACTIVE_PRIME]
        assert any(f.semiring_id == n3_id and f.ideal == "{0, 2}" for f in primes)
        near = [
            f
            for f in report.findings
            if f.kind == KIND_TRACE_NEAR_MISS and f.semiring_id == n3_id
        ]
        assert near[0].detail["g"] == "x + 1"
        assert near[0].detail["h"] == "x + 2"
        assert near[0].detail["m"] == 1
        assert near[0].detail["a_m"] == "2"
        assert not any(
            f.kind == KIND_CRITERION_COUNTEREXAMPLE for f in report.findings
        )

    def test_budget_zero(self):
        report = hunt_subtractivity(3, 3, budget=0)
        assert report.findings == ()
        assert report.partial

    def test_order_four_counterexamples_reverify(self):
        # at order 4 the hunt finds polynomials meeting all three conditions
        # against a prime-but-not-subtractive ideal that nonetheless factor;
        # re-check every reported witness end to end
        from eisenring import FiniteSemiring, Polynomial, from_table
        from eisenring.eisenstein import evaluate_conditions
        from eisenring.ideals import FiniteSetIdeal

        report = hunt_subtractivity(4, 3, budget=2_000_000)
        assert not report.partial
        counterexamples = report.counterexamples()
        assert counterexamples  # subtractivity is a load-bearing hypothesis
        for finding in counterexamples:
            fs = FiniteSemiring(
                finding.order,
                tuple(str(i) for i in range(finding.order)),
                tuple(tuple(r) for r in finding.add_table),
                tuple(tuple(r) for r in finding.mul_table),
            )
            S = from_table(fs)
            members = {
                S.parse_literal(tok)
                for tok in finding.ideal.strip("{}").split(", ")
            }
            ideal = FiniteSetIdeal(S, members)
            preds = ideal.predicates()
            assert preds.proper.holds and preds.prime.holds
            assert not preds.subtractive.holds
            f = Polynomial.parse(finding.detail["polynomial"], S)
            failing, _, _, _ = evaluate_conditions(f, ideal)
            assert failing is None  # all three conditions hold
            g = Polynomial.parse(finding.detail["g"], S)
            h = Polynomial.parse(finding.detail["h"], S)
            assert g.degree >= 1 and h.degree >= 1
            assert g * h == f
