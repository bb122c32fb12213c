import itertools

import pytest

from eisenring import (
    boolean_table,
    canonical_form,
    check_axioms,
    enumerate_ideals,
    enumerate_semirings,
    format_semiring_file,
    mod2_table,
    mod3_table,
    n3_saturating_table,
    parse_semiring_file,
)
from eisenring.errors import (
    BudgetExceededError,
    MissingSectionError,
    OrderTooLargeError,
    TableShapeError,
    TableSyntaxError,
)
from eisenring.tables import FiniteSemiring

N3_TEXT = """\
# saturating semiring
order 3
elements 0 1 2
add
0 1 2
1 2 2
2 2 2
mul
0 0 0
0 1 2
0 2 2
"""


def mutate(fs: FiniteSemiring, which: str, i: int, j: int, v: int) -> FiniteSemiring:
    """Replace one cell (and its mirror, keeping the table commutative)."""
    table = list(list(row) for row in (fs.add_table if which == "add" else fs.mul_table))
    table[i][j] = v
    table[j][i] = v
    table = tuple(tuple(row) for row in table)
    if which == "add":
        return FiniteSemiring(fs.order, fs.element_names, table, fs.mul_table)
    return FiniteSemiring(fs.order, fs.element_names, fs.add_table, table)


class TestParsing:
    def test_n3_parses_and_passes(self):
        fs = parse_semiring_file(N3_TEXT)
        assert fs.order == 3
        assert fs.zero_index == 0 and fs.one_index == 1
        assert check_axioms(fs).all_pass

    def test_bool_file(self):
        fs = parse_semiring_file(format_semiring_file(boolean_table()))
        assert fs == boolean_table()

    def test_row_too_long(self):
        bad = N3_TEXT.replace("1 2 2\n2 2 2\nmul", "1 2 2 2\n2 2 2\nmul")
        with pytest.raises(TableShapeError):
            parse_semiring_file(bad)

    def test_missing_mul_section(self):
        bad = N3_TEXT.split("mul")[0]
        with pytest.raises(MissingSectionError):
            parse_semiring_file(bad)

    def test_unknown_element_name(self):
        bad = N3_TEXT.replace("0 2 2\n", "0 2 q\n", 1)
        with pytest.raises(TableShapeError):
            parse_semiring_file(bad)

    def test_reserved_name_rejected(self):
        bad = N3_TEXT.replace("elements 0 1 2", "elements 0 1 x")
        with pytest.raises(TableSyntaxError):
            parse_semiring_file(bad)

    def test_bad_order_line(self):
        with pytest.raises(TableSyntaxError):
            parse_semiring_file("order three\nelements a b\n")

    def test_error_carries_line_number(self):
        bad = N3_TEXT.replace("1 2 2\n", "1 2 2 2\n", 1)
        with pytest.raises(TableShapeError) as err:
            parse_semiring_file(bad)
        assert err.value.line == 6

    @pytest.mark.parametrize(
        "table", [boolean_table, mod2_table, mod3_table, n3_saturating_table]
    )
    def test_round_trip(self, table):
        fs = table()
        assert parse_semiring_file(format_semiring_file(fs)) == fs


class TestAxioms:
    def test_reference_tables_pass(self):
        for fs in (boolean_table(), mod2_table(), mod3_table(), n3_saturating_table()):
            assert check_axioms(fs).all_pass

    def test_absorbing_mutation(self):
        # bool with 1*0 forced to 1
        fs = mutate(boolean_table(), "mul", 1, 0, 1)
        report = check_axioms(fs)
        result = report.result("zero-absorbing")
        assert not result.holds
        assert result.counterexample == (1,)

    def test_add_identity_mutation(self):
        # bool with 0+1 forced to 0
        fs = mutate(boolean_table(), "add", 0, 1, 0)
        report = check_axioms(fs)
        result = report.result("add-identity")
        assert not result.holds
        (a,) = result.counterexample
        assert fs.add_table[a][fs.zero_index] != a

    def test_single_cell_commutativity_break(self):
        add = ((0, 1, 2), (1, 2, 2), (0, 2, 2))  # only add[2][0] changed
        fs = FiniteSemiring(3, ("0", "1", "2"), add, n3_saturating_table().mul_table)
        report = check_axioms(fs)
        assert not report.result("add-commutative").holds


class TestIdealEnumeration:
    def test_bool(self):
        assert enumerate_ideals(boolean_table()) == [(0,), (0, 1)]

    def test_n3(self):
        assert enumerate_ideals(n3_saturating_table()) == [(0,), (0, 2), (0, 1, 2)]

    def test_mod3(self):
        assert enumerate_ideals(mod3_table()) == [(0,), (0, 1, 2)]

    def test_cap(self):
        fs = mod3_table()
        with pytest.raises(OrderTooLargeError):
            enumerate_ideals(fs, cap=2)

    def test_agreement_with_definition(self):
        # definitional closure re-check, written out independently here
        for fs in (boolean_table(), mod3_table(), n3_saturating_table()):
            emitted = set(enumerate_ideals(fs))
            n = fs.order
            for k in range(n + 1):
                for subset in itertools.combinations(range(n), k):
                    s = set(subset)
                    is_ideal = (
                        fs.zero_index in s
                        and all(fs.add_table[a][b] in s for a in s for b in s)
                        and all(fs.mul_table[t][a] in s for a in s for t in range(n))
                    )
                    assert (tuple(sorted(s)) in emitted) == is_ideal


class TestEnumeration:
    def test_order_two_ground_truth(self):
        found = list(enumerate_semirings(2))
        assert len(found) == 2
        assert all(check_axioms(fs).all_pass for fs in found)
        forms = {canonical_form(fs) for fs in found}
        assert forms == {canonical_form(boolean_table()), canonical_form(mod2_table())}

    def test_order_three_contains_references(self):
        forms = [canonical_form(fs) for fs in enumerate_semirings(3)]
        assert canonical_form(mod3_table()) in forms
        assert canonical_form(n3_saturating_table()) in forms
        assert len(forms) == len(set(forms))  # pairwise non-isomorphic

    def test_all_emitted_pass_axioms(self):
        for order in (2, 3):
            for fs in enumerate_semirings(order):
                assert check_axioms(fs).all_pass

    def test_order_five_rejected(self):
        with pytest.raises(OrderTooLargeError):
            list(enumerate_semirings(5))

    def test_order_one_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_semirings(1))

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            list(enumerate_semirings(3, budget=5))
        # everything yielded before exhaustion is still valid
        collected = []
        gen = enumerate_semirings(3, budget=40)
        try:
            for fs in gen:
                collected.append(fs)
        except BudgetExceededError:
            pass
        assert all(check_axioms(fs).all_pass for fs in collected)

    def test_deterministic(self):
        first = [fs.digest() for fs in enumerate_semirings(3)]
        second = [fs.digest() for fs in enumerate_semirings(3)]
        assert first == second


class TestStructuralValidation:
    def test_entry_out_of_range(self):
        with pytest.raises(TableShapeError):
            FiniteSemiring(2, ("0", "1"), ((0, 1), (1, 5)), ((0, 0), (0, 1)))

    def test_duplicate_names(self):
        with pytest.raises(TableShapeError):
            FiniteSemiring(2, ("0", "0"), ((0, 1), (1, 1)), ((0, 0), (0, 1)))
