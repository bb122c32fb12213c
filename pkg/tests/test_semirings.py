import itertools

import pytest

from eisenring import (
    INFINITY,
    builtin_semiring,
    classify_element,
    enumerate_semirings,
    from_table,
    semidomain_check,
)
from eisenring.errors import (
    BoundRequiredError,
    LiteralError,
    SemiringMismatchError,
    UnknownSemiringError,
)

# fixed sample grids for the law checks; "<= 64" is the sampling range
SAMPLE_NATURALS = [0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 64]


def sample_values(S):
    if S.flags.is_finite:
        return list(range(S.table.order))
    vals = list(SAMPLE_NATURALS)
    if S.name == "tropical-min":
        vals.append(INFINITY)
    return vals


class TestBuiltins:
    def test_bool_descriptor(self, boolean):
        assert boolean.format_value(boolean.zero_value) == "0"
        assert boolean.format_value(boolean.one_value) == "1"
        assert boolean.flags.is_finite

    def test_tropical_identities(self, tropical):
        assert tropical.zero_value == INFINITY
        assert tropical.one_value == 0

    def test_gcd_nat_flags(self, gcdnat):
        assert gcdnat.flags.all_ideals_subtractive
        assert gcdnat.flags.is_factorial
        assert gcdnat.flags.is_weak_gaussian

    def test_nat_flags(self, nat):
        assert nat.flags.is_semidomain
        assert nat.flags.is_entire
        assert nat.flags.is_factorial
        assert not nat.flags.is_weak_gaussian
        assert not nat.flags.all_ideals_subtractive
        assert nat.flag_notes["is_weak_gaussian"]

    def test_unknown_name(self):
        with pytest.raises(UnknownSemiringError):
            builtin_semiring("integers")

    def test_builtins_are_cached(self):
        assert builtin_semiring("nat") is builtin_semiring("nat")


class TestArithmetic:
    def test_bool_idempotent_or(self, boolean):
        assert boolean.add(1, 1).value == 1

    def test_tropical_min_plus(self, tropical):
        assert tropical.mul(2, 3).value == 5
        assert tropical.add(2, 3).value == 2

    def test_gcd_nat_ops(self, gcdnat):
        assert gcdnat.add(6, 10).value == 2
        assert gcdnat.mul(6, 10).value == 60

    def test_cross_semiring_rejected(self, nat, gcdnat):
        two = nat.element(2)
        with pytest.raises(SemiringMismatchError):
            gcdnat.add(two, 3)

    def test_value_validation(self, nat, tropical, boolean):
        with pytest.raises(LiteralError):
            nat.element(-1)
        with pytest.raises(LiteralError):
            nat.element(INFINITY)
        assert tropical.element(INFINITY).value == INFINITY
        with pytest.raises(LiteralError):
            boolean.element(2)


class TestLaws:
    @pytest.mark.parametrize("name", ["nat", "bool", "tropical-min", "gcd-nat"])
    def test_semiring_laws_on_samples(self, name):
        S = builtin_semiring(name)
        vals = sample_values(S)
        zero, one = S.zero_value, S.one_value
        add, mul = S.add_values, S.mul_values
        for a in vals:
            assert add(a, zero) == a
            assert mul(a, one) == a
            assert mul(a, zero) == zero
            for b in vals:
                assert add(a, b) == add(b, a)
                assert mul(a, b) == mul(b, a)
        # associativity and distributivity on a thinner triple grid
        triple = vals[::2] + [vals[-1]]
        for a in triple:
            for b in triple:
                for c in triple:
                    assert add(add(a, b), c) == add(a, add(b, c))
                    assert mul(mul(a, b), c) == mul(a, mul(b, c))
                    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


class TestDivides:
    def test_nat(self, nat):
        assert nat.divides(3, 12)
        assert not nat.divides(5, 12)
        assert nat.divides(0, 0)
        assert not nat.divides(0, 3)

    def test_tropical(self, tropical):
        assert tropical.divides(1, 3)
        assert tropical.divides(2, INFINITY)
        assert not tropical.divides(INFINITY, 2)
        assert tropical.divides(INFINITY, INFINITY)

    def test_bool_absorbing(self, boolean):
        assert boolean.divides(1, 0)

    @pytest.mark.parametrize("name", ["nat", "bool", "tropical-min", "gcd-nat"])
    def test_transitivity(self, name):
        S = builtin_semiring(name)
        vals = sample_values(S)
        for a, b, c in itertools.product(vals, repeat=3):
            if S.divides_values(a, b) and S.divides_values(b, c):
                assert S.divides_values(a, c)


class TestClassify:
    def test_nat_unit(self, nat):
        cls = classify_element(nat, 1, bound=32)
        assert cls.is_unit and not cls.is_irreducible and not cls.is_prime_element

    def test_nat_two(self, nat):
        cls = classify_element(nat, 2, bound=32)
        assert cls.is_irreducible and cls.is_prime_element and cls.exact

    def test_gcd_six_reducible(self, gcdnat):
        cls = classify_element(gcdnat, 6, bound=32)
        assert not cls.is_irreducible
        assert cls.factorization_witness == ("2", "3")
        s1, s2 = (int(w) for w in cls.factorization_witness)
        assert s1 * s2 == 6

    def test_nat_zero_is_prime_element(self, nat):
        cls = classify_element(nat, 0, bound=8)
        assert cls.is_zero and cls.is_prime_element and not cls.is_irreducible

    def test_tropical_one(self, tropical):
        cls = classify_element(tropical, 1, bound=32)
        assert cls.is_irreducible and cls.is_prime_element
        assert not cls.exact and cls.bound == 32

    def test_tropical_composite(self, tropical):
        cls = classify_element(tropical, 5, bound=32)
        assert not cls.is_prime_element
        assert cls.nonprime_witness == ("4", "4")
        assert cls.factorization_witness == ("1", "4")

    def test_finite_two_in_n3(self, n3):
        cls = classify_element(n3, 2)
        assert not cls.is_irreducible  # 2 = 2*2 with 2 a non-unit
        assert cls.is_prime_element  # (2) = {0, 2} is a prime ideal
        assert cls.exact

    def test_bound_required(self, nat):
        with pytest.raises(BoundRequiredError):
            classify_element(nat, 7)

    @pytest.mark.parametrize(
        "name,p", [("nat", 2), ("nat", 3), ("tropical-min", 1), ("gcd-nat", 5)]
    )
    def test_prime_elements_behave_primely(self, name, p):
        # p | xy must force p | x or p | y on sampled pairs
        S = builtin_semiring(name)
        assert classify_element(S, p, bound=64).is_prime_element
        vals = sample_values(S)
        for x, y in itertools.product(vals, repeat=2):
            if S.divides_values(p, S.mul_values(x, y)):
                assert S.divides_values(p, x) or S.divides_values(p, y)


class TestSemidomain:
    def test_nat(self, nat):
        verdict = semidomain_check(nat, bound=16)
        assert verdict.holds and verdict.counterexample is None

    def test_bool(self, boolean):
        verdict = semidomain_check(boolean)
        assert verdict.holds and verdict.exhaustive

    def test_n3_counterexample(self, n3):
        verdict = semidomain_check(n3)
        assert not verdict.holds and verdict.exhaustive
        a, b, c = verdict.counterexample
        av, bv, cv = (n3.parse_literal(t) for t in (a, b, c))
        assert av != n3.zero_value and bv != cv
        assert n3.mul_values(av, bv) == n3.mul_values(av, cv)

    def test_bound_required(self, tropical):
        with pytest.raises(BoundRequiredError):
            semidomain_check(tropical)


class TestFiniteFlags:
    def test_semidomain_implies_entire(self):
        for order in (2, 3):
            for fs in enumerate_semirings(order):
                flags = from_table(fs).flags
                if flags.is_semidomain:
                    assert flags.is_entire

    def test_n3_flags(self, n3):
        assert not n3.flags.is_semidomain
        assert n3.flags.is_entire
        assert not n3.flags.is_weak_gaussian  # {0,2} is prime, not subtractive

    def test_mod3_is_field_like(self):
        from eisenring import mod3_table

        flags = from_table(mod3_table()).flags
        assert flags.is_semidomain and flags.is_factorial and flags.is_weak_gaussian
