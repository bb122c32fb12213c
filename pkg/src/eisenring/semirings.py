"""Semiring descriptors: built-in carriers, element arithmetic, flags.

A semiring here is a commutative addition monoid with identity 0, a
commutative multiplication monoid with identity 1 != 0, distributivity,
and 0 absorbing under multiplication.  Four built-ins are registered:

    nat          (N, +, *, 0, 1)
    bool         ({0,1}, OR, AND)            realized as a finite table
    tropical-min (N u {inf}, min, +, zero=inf, one=0)
    gcd-nat      (N, gcd, *, zero=0, one=1)  the ideal semiring of Z

Finite carriers get every capability flag computed from their tables.
Infinite built-ins carry declared flags, each with a written
justification in ``flag_notes``.  Naturals are Python ints, so there is
no overflow anywhere; the tropical infinity is ``math.inf``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BoundRequiredError,
    OrderTooLargeError,
    SemiringMismatchError,
    AxiomCheckFailedError,
    LiteralError,
    UndecidableDivisibilityError,
    UnknownSemiringError,
)
from .tables import (
    FiniteSemiring,
    check_axioms,
    enumerate_ideals,
    prime_violation,
    subtractive_violation,
)

INFINITY = math.inf

FLAG_COMPUTATION_ORDER_CAP = 10  # 2^n subset scans back the ideal-based flags

BUILTIN_NAMES = ("nat", "bool", "tropical-min", "gcd-nat")


class CarrierKind(enum.Enum):
    FINITE = "finite-table"
    NATURALS = "naturals"
    TROPICAL_MIN = "tropical-min"
    GCD_NATURALS = "gcd-naturals"


@dataclass(frozen=True)
class CapabilityFlags:
    is_finite: bool
    is_semidomain: bool
    is_entire: bool
    decidable_divisibility: bool
    all_ideals_subtractive: bool
    is_factorial: bool
    is_weak_gaussian: bool

    def as_dict(self) -> dict:
        return {
            "is_finite": self.is_finite,
            "is_semidomain": self.is_semidomain,
            "is_entire": self.is_entire,
            "decidable_divisibility": self.decidable_divisibility,
            "all_ideals_subtractive": self.all_ideals_subtractive,
            "is_factorial": self.is_factorial,
            "is_weak_gaussian": self.is_weak_gaussian,
        }


@dataclass(frozen=True)
class Element:
    """A value tagged with its semiring; cross-semiring use is rejected."""

    semiring: "SemiringDescriptor"
    value: object

    def __repr__(self):
        return f"<{self.semiring.name}:{self.semiring.format_value(self.value)}>"

    def __str__(self):
        return self.semiring.format_value(self.value)


class SemiringDescriptor:
    """A usable semiring instance: carrier, operations, 0, 1 and flags.

    Descriptors are immutable after construction and all operations are
    pure queries, so instances are safe to share freely.
    """

    __slots__ = ("name", "kind", "table", "flags", "flag_notes", "_zero", "_one", "_key")

    def __init__(self, name: str, kind: CarrierKind, table: FiniteSemiring | None,
                 flags: CapabilityFlags, flag_notes: dict):
        self.name = name
        self.kind = kind
        self.table = table
        self.flags = flags
        self.flag_notes = dict(flag_notes)
        self._zero = Element(self, self.zero_value)
        self._one = Element(self, self.one_value)
        self._key = (name, kind, table)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SemiringDescriptor) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"SemiringDescriptor({self.name!r})"

    # -- distinguished values -----------------------------------------------

    @property
    def zero_value(self):
        if self.kind is CarrierKind.FINITE:
            return self.table.zero_index
        if self.kind is CarrierKind.TROPICAL_MIN:
            return INFINITY
        return 0

    @property
    def one_value(self):
        if self.kind is CarrierKind.FINITE:
            return self.table.one_index
        if self.kind is CarrierKind.TROPICAL_MIN:
            return 0
        return 1

    @property
    def zero(self) -> Element:
        return self._zero

    @property
    def one(self) -> Element:
        return self._one

    # -- element construction -----------------------------------------------

    def check_value(self, v):
        """Validate a raw carrier value, returning its normal form."""
        if self.kind is CarrierKind.FINITE:
            if isinstance(v, bool) or not isinstance(v, int):
                raise LiteralError(f"finite-carrier values are indices, got {v!r}")
            if not 0 <= v < self.table.order:
                raise LiteralError(f"index {v} out of range for order {self.table.order}")
            return v
        if self.kind is CarrierKind.TROPICAL_MIN:
            if isinstance(v, float) and math.isinf(v) and v > 0:
                return INFINITY
            if isinstance(v, int) and v >= 0:
                return int(v)
            raise LiteralError(f"tropical values are naturals or inf, got {v!r}")
        if isinstance(v, int) and v >= 0:
            return int(v)
        raise LiteralError(f"values of {self.name} are naturals, got {v!r}")

    def element(self, v) -> Element:
        if isinstance(v, Element):
            if v.semiring != self:
                raise SemiringMismatchError(
                    f"element of {v.semiring.name} used in {self.name}"
                )
            return v
        return Element(self, self.check_value(v))

    def elements(self):
        """All elements, finite carriers only."""
        if self.kind is not CarrierKind.FINITE:
            raise BoundRequiredError(f"{self.name} is infinite; use sample_values")
        return [Element(self, i) for i in range(self.table.order)]

    def sample_values(self, bound: int):
        """Raw values with magnitude <= bound (all of them when finite)."""
        if self.kind is CarrierKind.FINITE:
            return list(range(self.table.order))
        vals = list(range(bound + 1))
        if self.kind is CarrierKind.TROPICAL_MIN:
            vals.append(INFINITY)
        return vals

    # -- arithmetic -----------------------------------------------------------

    def add_values(self, x, y):
        k = self.kind
        if k is CarrierKind.NATURALS:
            return x + y
        if k is CarrierKind.FINITE:
            return self.table.add_table[x][y]
        if k is CarrierKind.TROPICAL_MIN:
            return x if x <= y else y
        return math.gcd(x, y)

    def mul_values(self, x, y):
        k = self.kind
        if k is CarrierKind.NATURALS or k is CarrierKind.GCD_NATURALS:
            return x * y
        if k is CarrierKind.FINITE:
            return self.table.mul_table[x][y]
        return x + y  # tropical multiplication; inf is absorbing

    def add(self, a, b) -> Element:
        a, b = self.element(a), self.element(b)
        return Element(self, self.add_values(a.value, b.value))

    def mul(self, a, b) -> Element:
        a, b = self.element(a), self.element(b)
        return Element(self, self.mul_values(a.value, b.value))

    def divides_values(self, x, y) -> bool:
        """x | y, i.e. some s has y = s*x."""
        k = self.kind
        if k is CarrierKind.NATURALS or k is CarrierKind.GCD_NATURALS:
            if x == 0:
                return y == 0
            return y % x == 0
        if k is CarrierKind.TROPICAL_MIN:
            if y == INFINITY:
                return True
            return x != INFINITY and y >= x
        if k is CarrierKind.FINITE:
            row = self.table.mul_table
            return any(row[s][x] == y for s in range(self.table.order))
        raise UndecidableDivisibilityError(self.name)

    def divides(self, a, b) -> bool:
        a, b = self.element(a), self.element(b)
        return self.divides_values(a.value, b.value)

    # -- literals -------------------------------------------------------------

    def format_value(self, v) -> str:
        if self.kind is CarrierKind.FINITE:
            return self.table.element_names[v]
        if self.kind is CarrierKind.TROPICAL_MIN and v == INFINITY:
            return "inf"
        return str(v)

    def parse_literal(self, text: str):
        if self.kind is CarrierKind.FINITE:
            if text in self.table.element_names:
                return self.table.element_names.index(text)
            raise LiteralError(f"{text!r} is not an element of {self.name}")
        if text == "inf":
            if self.kind is CarrierKind.TROPICAL_MIN:
                return INFINITY
            raise LiteralError(f"'inf' is not a value of {self.name}")
        if text.isdigit():
            return int(text)
        raise LiteralError(f"{text!r} is not a value of {self.name}")

    def is_zero_value(self, v) -> bool:
        return v == self.zero_value

    def is_unit_value(self, v) -> bool:
        """v divides one, i.e. v has a multiplicative inverse."""
        return self.divides_values(v, self.one_value)


# ---------------------------------------------------------------------------
# built-in registry

_NAT_NOTES = {
    "is_semidomain": "ab = ac with a != 0 cancels in the naturals",
    "is_entire": "no zero divisors among the naturals",
    "decidable_divisibility": "integer remainder test; 0 | b only for b = 0",
    "all_ideals_subtractive": (
        "fails: N minus {1} is an ideal (sums avoid 1, scalings avoid 1) "
        "but 2 + 1 = 3 and 2 lie in it while 1 does not"
    ),
    "is_factorial": "unique factorization of integers; the only unit is 1",
    "is_weak_gaussian": (
        "fails: N minus {1} is a prime ideal (a, b outside it force ab = 1 "
        "outside it) that is not subtractive, witness a = 2, b = 1"
    ),
}

_GCD_NOTES = {
    "is_semidomain": "multiplication is the ordinary integer product",
    "is_entire": "ordinary product of nonzero naturals is nonzero",
    "decidable_divisibility": "integer remainder test",
    "all_ideals_subtractive": (
        "every ideal: b is a multiple of gcd(a, b), so gcd(a, b) in I "
        "forces b in I by scaling closure"
    ),
    "is_factorial": (
        "the multiplicative monoid is ordinary integer factorization; "
        "irreducibles are the prime numbers and each generates a prime ideal"
    ),
    "is_weak_gaussian": "implied: every ideal is subtractive",
}

_TROPICAL_NOTES = {
    "is_semidomain": "min-plus product is addition: a + b = a + c cancels for finite a",
    "is_entire": "a + b = inf forces a = inf or b = inf",
    "decidable_divisibility": "b = s + a is solvable iff b = inf or b >= a with a finite",
    "all_ideals_subtractive": (
        "every ideal is upward closed (scaling adds arbitrary naturals) and "
        "contains inf; min(a, b) in I with b >= min(a, b) forces b in I"
    ),
    "is_factorial": (
        "the only unit is 0 and the only irreducible is 1; every finite "
        "k >= 1 is the k-fold product of 1, and (1) is a prime ideal"
    ),
    "is_weak_gaussian": "implied: every ideal is subtractive",
}

_COMPUTED_NOTE = "computed exhaustively from the operation tables"


def _finite_flags(fs: FiniteSemiring) -> CapabilityFlags:
    """Compute every capability flag from the tables.  The ideal-based flags
    need a subset scan, so very large tables are refused."""
    if fs.order > FLAG_COMPUTATION_ORDER_CAP:
        raise OrderTooLargeError(
            f"flag computation supports order <= {FLAG_COMPUTATION_ORDER_CAP}, got {fs.order}"
        )
    n = fs.order
    rng = range(n)
    add, mul = fs.add_table, fs.mul_table
    z, o = fs.zero_index, fs.one_index

    entire = all(mul[a][b] != z for a in rng for b in rng if a != z and b != z)
    semidomain = all(
        mul[a][b] != mul[a][c]
        for a in rng
        if a != z
        for b in rng
        for c in rng
        if b < c
    )
    ideals = enumerate_ideals(fs, cap=FLAG_COMPUTATION_ORDER_CAP)
    all_subtractive = all(subtractive_violation(fs, i) is None for i in ideals)
    weak_gaussian = all(
        subtractive_violation(fs, i) is None
        for i in ideals
        if len(i) < n and prime_violation(fs, i) is None
    )

    units = {a for a in rng if any(mul[s][a] == o for s in rng)}
    nonunits = [a for a in rng if a != z and a not in units]
    irreducibles = {
        a
        for a in nonunits
        if all(s1 in units or s2 in units for s1 in rng for s2 in rng if mul[s1][s2] == a)
    }
    primes = set()
    for p in rng:
        if p == o:
            continue
        principal = frozenset(mul[s][p] for s in rng)
        if len(principal) < n and prime_violation(fs, principal) is None:
            primes.add(p)
    reachable = set(irreducibles)
    frontier = set(irreducibles)
    while frontier:
        frontier = {
            mul[a][i] for a in reachable for i in irreducibles
        } - reachable
        reachable |= frontier
    factorial = (
        semidomain
        and irreducibles <= primes
        and all(a in reachable for a in nonunits)
    )
    return CapabilityFlags(
        is_finite=True,
        is_semidomain=semidomain,
        is_entire=entire,
        decidable_divisibility=True,
        all_ideals_subtractive=all_subtractive,
        is_factorial=factorial,
        is_weak_gaussian=weak_gaussian,
    )


def from_table(fs: FiniteSemiring, name: str | None = None) -> SemiringDescriptor:
    """Build a usable descriptor from a table, verifying the axioms first."""
    report = check_axioms(fs)
    if not report.all_pass:
        failed = ", ".join(r.name for r in report.failures())
        raise AxiomCheckFailedError(f"axioms failed: {failed}", report=report)
    flags = _finite_flags(fs)
    notes = {flag: _COMPUTED_NOTE for flag in flags.as_dict()}
    return SemiringDescriptor(
        name or f"finite-{fs.digest()}", CarrierKind.FINITE, fs, flags, notes
    )


@lru_cache(maxsize=None)
def builtin_semiring(name: str) -> SemiringDescriptor:
    """The registered built-in semirings: nat, bool, tropical-min, gcd-nat."""
    if name == "nat":
        flags = CapabilityFlags(False, True, True, True, False, True, False)
        return SemiringDescriptor("nat", CarrierKind.NATURALS, None, flags, _NAT_NOTES)
    if name == "bool":
        from .tables import boolean_table

        return from_table(boolean_table(), name="bool")
    if name == "tropical-min":
        flags = CapabilityFlags(False, True, True, True, True, True, True)
        return SemiringDescriptor(
            "tropical-min", CarrierKind.TROPICAL_MIN, None, flags, _TROPICAL_NOTES
        )
    if name == "gcd-nat":
        flags = CapabilityFlags(False, True, True, True, True, True, True)
        return SemiringDescriptor(
            "gcd-nat", CarrierKind.GCD_NATURALS, None, flags, _GCD_NOTES
        )
    raise UnknownSemiringError(
        f"unknown semiring {name!r}; choose one of {', '.join(BUILTIN_NAMES)}"
    )


# ---------------------------------------------------------------------------
# element classification

@dataclass(frozen=True)
class ElementClassification:
    value: str
    is_zero: bool
    is_unit: bool
    is_irreducible: bool
    is_prime_element: bool
    factorization_witness: tuple[str, str] | None
    nonprime_witness: tuple[str, str] | None
    exact: bool
    bound: int | None
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "is_zero": self.is_zero,
            "is_unit": self.is_unit,
            "is_irreducible": self.is_irreducible,
            "is_prime_element": self.is_prime_element,
            "factorization_witness": list(self.factorization_witness)
            if self.factorization_witness
            else None,
            "nonprime_witness": list(self.nonprime_witness)
            if self.nonprime_witness
            else None,
            "exact": self.exact,
            "bound": self.bound,
            "notes": list(self.notes),
        }


def _is_prime_int(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _smallest_factor_pair(a: int):
    d = 2
    while d * d <= a:
        if a % d == 0:
            return (d, a // d)
        d += 1
    return None


def classify_element(S: SemiringDescriptor, a, bound: int = 0) -> ElementClassification:
    """Zero/unit/irreducible/prime-element verdicts with explicit witnesses.

    Finite carriers are classified exactly by exhaustive scan.  On nat and
    gcd-nat the multiplication is the ordinary product, so irreducibility
    and primality reduce to integer primality and are exact.  On other
    infinite carriers positive verdicts are only certified up to ``bound``;
    negative verdicts always carry a concrete witness.
    """
    el = S.element(a)
    v = el.value
    fmt = S.format_value
    notes = []

    if S.kind is CarrierKind.FINITE:
        fs = S.table
        n = fs.order
        rng = range(n)
        mul = fs.mul_table
        z, o = fs.zero_index, fs.one_index
        units = {x for x in rng if any(mul[s][x] == o for s in rng)}
        is_zero = v == z
        is_unit = v in units
        fact_witness = None
        irreducible = False
        if not is_zero and not is_unit:
            irreducible = True
            for s1 in rng:
                for s2 in rng:
                    if mul[s1][s2] == v and s1 not in units and s2 not in units:
                        fact_witness = (fmt(s1), fmt(s2))
                        irreducible = False
                        break
                if fact_witness:
                    break
        prime = False
        nonprime_witness = None
        if v != o:
            principal = frozenset(mul[s][v] for s in rng)
            if len(principal) == n:
                notes.append("principal ideal is improper")
            else:
                violation = prime_violation(fs, principal)
                if violation is None:
                    prime = True
                else:
                    nonprime_witness = (fmt(violation[0]), fmt(violation[1]))
        else:
            notes.append("the multiplicative identity is excluded from primality")
        return ElementClassification(
            fmt(v), is_zero, is_unit, irreducible, prime,
            fact_witness, nonprime_witness, exact=True, bound=None,
            notes=tuple(notes),
        )

    if bound <= 0:
        raise BoundRequiredError(
            f"classification over {S.name} needs a positive search bound"
        )

    if S.kind in (CarrierKind.NATURALS, CarrierKind.GCD_NATURALS):
        is_zero = v == 0
        is_unit = v == 1
        pair = None if v < 2 else _smallest_factor_pair(v)
        irreducible = v >= 2 and pair is None
        fact_witness = (fmt(pair[0]), fmt(pair[1])) if pair else None
        if is_zero:
            prime = True
            nonprime_witness = None
            notes.append("(0) = {0} is prime because the carrier has no zero divisors")
        elif is_unit:
            prime = False
            nonprime_witness = None
            notes.append("the multiplicative identity is excluded from primality")
        elif _is_prime_int(v):
            prime = True
            nonprime_witness = None
        else:
            prime = False
            nonprime_witness = fact_witness
        return ElementClassification(
            fmt(v), is_zero, is_unit, irreducible, prime,
            fact_witness, nonprime_witness,
            exact=True, bound=None, notes=tuple(notes),
        )

    # tropical-min: the only unit is 0 and the only irreducible is 1, but
    # positive verdicts are reported as bound-verified, not asserted.
    is_zero = v == INFINITY
    is_unit = v == 0
    irreducible = False
    fact_witness = None
    prime = False
    nonprime_witness = None
    exact = True
    if not is_zero and not is_unit:
        if v >= 2:
            fact_witness = (fmt(1), fmt(v - 1))
        else:
            irreducible = True
            exact = False
    if is_zero:
        prime = True
        exact = False
        notes.append("(inf) = {inf} is prime: a + b = inf forces a factor inf")
    elif is_unit:
        notes.append("the multiplicative identity is excluded from primality")
    elif v == 1:
        prime = True
        exact = False
        notes.append("min(a, b) >= 1 forces a >= 1 or b >= 1")
    else:
        nonprime_witness = (fmt(v - 1), fmt(v - 1))
    return ElementClassification(
        fmt(v), is_zero, is_unit, irreducible, prime,
        fact_witness, nonprime_witness,
        exact=exact, bound=None if exact else bound, notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# semidomain check

@dataclass(frozen=True)
class SemidomainVerdict:
    holds: bool
    exhaustive: bool
    bound: int | None
    counterexample: tuple[str, str, str] | None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "exhaustive": self.exhaustive,
            "bound": self.bound,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def semidomain_check(S: SemiringDescriptor, bound: int = 0) -> SemidomainVerdict:
    """Cancellation test: ab = ac with a != 0 must force b = c.

    Finite carriers are decided exhaustively with a counterexample triple on
    failure.  Infinite built-ins return the declared flag after re-verifying
    it on all triples with values <= bound.
    """
    if S.kind is not CarrierKind.FINITE and bound <= 0:
        raise BoundRequiredError(
            f"semidomain check over {S.name} needs a positive sampling bound"
        )
    vals = S.sample_values(bound)
    zero = S.zero_value
    fmt = S.format_value
    for a in vals:
        if a == zero:
            continue
        products = {}
        for b in vals:
            ab = S.mul_values(a, b)
            if ab in products and products[ab] != b:
                return SemidomainVerdict(
                    False,
                    S.kind is CarrierKind.FINITE,
                    None if S.kind is CarrierKind.FINITE else bound,
                    (fmt(a), fmt(products[ab]), fmt(b)),
                )
            products[ab] = b
    if S.kind is CarrierKind.FINITE:
        return SemidomainVerdict(True, True, None, None)
    return SemidomainVerdict(S.flags.is_semidomain, False, bound, None)
