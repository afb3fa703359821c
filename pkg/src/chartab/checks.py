"""Formal validation, Sylow-structure queries, and pseudo-table screening.

The validator enforces the arithmetical axioms a genuine table must satisfy
(orthogonality, integrality, an all-ones row).  `pseudo_check` goes one step
further on rows that vanish outside two classes: such a row forces a minimal
normal subgroup of prime power order and a rigid factorization of the degree,
and a formally valid table can fail those constraints, proving no group has
it.  Passing every check certifies consistency, never existence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import p_part, prime_power
from .cyclo import Cyclotomic, format_cyclotomic
from .errors import NoIdentityColumn
from .table import (
    CharacterTable,
    class_data,
    element_orders,
    identify_identity_column,
)


@dataclass
class Violation:
    rule: str
    location: tuple | None
    detail: str

    def to_dict(self) -> dict:
        return {"rule": self.rule, "location": self.location, "detail": self.detail}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, rule: str, location, detail: str):
        self.violations.append(Violation(rule, location, detail))

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "violations": [v.to_dict() for v in self.violations]}


@dataclass
class PseudoVerdict:
    verdict: str  # "genuine-consistent" | "pseudo" | "not-applicable"
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness}


@dataclass
class Sylow2AbIndex:
    """Index of the derived subgroup in a Sylow 2-subgroup, as far as the table tells.

    status is "exact", "lower-bound" (value certifies index > 4), or
    "undecidable"; undecidable results carry the two open interpretations.
    """

    status: str
    value: int | None = None
    strategy: str | None = None
    candidates: tuple[str, ...] = ()


def validate(table: CharacterTable) -> ValidationReport:
    """Check the formal axioms; failures are report entries, never exceptions."""
    report = ValidationReport()
    k = table.k
    rows = table.entries

    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if not x.is_algebraic_integer():
                report.add("algebraic-integer", (i + 1, j + 1),
                           f"entry {format_cyclotomic(x)} is not an algebraic integer")

    if not any(all(x == 1 for x in row) for row in rows):
        report.add("trivial-row", None, "no all-ones row")

    try:
        ident = min(identify_identity_column(rows))
    except NoIdentityColumn:
        report.add("identity-column", None,
                   "no column of positive integers dominating all entries")
        ident = None

    norms = []
    for s in range(k):
        total = Cyclotomic.from_rational(0)
        for row in rows:
            total = total + row[s].abs_squared()
        norms.append(total)
    for s in range(k):
        for t in range(s + 1, k):
            total = Cyclotomic.from_rational(0)
            for row in rows:
                total = total + row[s] * row[t].conjugate()
            if not total.is_zero():
                report.add("column-orthogonality", (s + 1, t + 1),
                           f"columns have inner product {format_cyclotomic(total)}")

    cent = []
    for s, norm in enumerate(norms):
        q = norm.as_rational()
        if q is None or q.denominator != 1 or q <= 0:
            report.add("column-norm", (s + 1, s + 1),
                       f"column norm {format_cyclotomic(norm)} is not a positive integer")
            cent.append(None)
        else:
            cent.append(int(q))

    if ident is None or cent[ident] is None:
        return report

    degrees = [row[ident].as_rational() for row in rows]
    for i, d in enumerate(degrees):
        if d is None or d.denominator != 1 or d <= 0:
            report.add("degrees", (i + 1, ident + 1), f"degree {d} is not a positive integer")
            return report
    order = int(sum(d * d for d in degrees))

    sizes = []
    for s, c in enumerate(cent):
        if c is None:
            sizes.append(None)
            continue
        if order % c:
            report.add("centralizer-divisibility", (s + 1,),
                       f"centralizer order {c} does not divide |G| = {order}")
            sizes.append(None)
        else:
            sizes.append(order // c)
    if all(z is not None for z in sizes) and sum(sizes) != order:
        report.add("class-size-sum", None,
                   f"class sizes sum to {sum(sizes)}, not |G| = {order}")

    if all(z is not None for z in sizes):
        for a in range(k):
            for b in range(a, k):
                total = Cyclotomic.from_rational(0)
                for j in range(k):
                    total = total + sizes[j] * (rows[a][j] * rows[b][j].conjugate())
                expected = order if a == b else 0
                if total != expected:
                    report.add("row-orthogonality", (a + 1, b + 1),
                               f"weighted inner product is {format_cyclotomic(total)}, "
                               f"expected {expected}")
    return report


def sylow_is_cyclic(table: CharacterTable, q: int) -> bool:
    """True iff some class order is divisible by the full q-part of the group order.

    An element of that order generates a Sylow q-subgroup; conversely a
    cyclic Sylow q-subgroup contains one.  When the q-part is trivial or
    prime the answer needs no metadata at all.
    """
    order = class_data(table).group_order
    if order % q:
        raise ValueError(f"{q} does not divide the group order {order}")
    part = p_part(order, q)
    if part == 1 or part == q:
        return True
    return any(o % part == 0 for o in element_orders(table))


def sylow2_abelianization_index(table: CharacterTable,
                                hint: int | None = None) -> Sylow2AbIndex:
    """|P : P'| for P a Sylow 2-subgroup, by the first applicable strategy.

    S1: for a 2-group the answer is the number of degree-1 rows.
    S2: the 2-part of the number of degree-1 rows divides |P:P'|; if it
        exceeds 4 that already certifies the "> 4" side.
    S3: trust an explicit hint.
    Anything else is undecidable from the table alone here.
    """
    data = class_data(table)
    ident = data.identity_column
    linear = sum(1 for row in table.entries if row[ident] == 1)
    if data.group_order == p_part(data.group_order, 2):
        return Sylow2AbIndex("exact", linear, "S1")
    two_part = p_part(linear, 2)
    if two_part > 4:
        return Sylow2AbIndex("lower-bound", two_part, "S2")
    if hint is not None:
        return Sylow2AbIndex("exact", hint, "S3")
    return Sylow2AbIndex("undecidable", None, None,
                         ("equal-4", "greater-than-4"))


def _two_class_rows(table: CharacterTable, ident: int) -> list[tuple[int, int]]:
    """(row, class) pairs for rows vanishing outside the identity and one class."""
    out = []
    for i, row in enumerate(table.entries):
        support = [j for j, x in enumerate(row) if not x.is_zero()]
        if len(support) == 2 and ident in support:
            g = support[0] if support[1] == ident else support[1]
            out.append((i, g))
    return out


def pseudo_check(table: CharacterTable) -> PseudoVerdict:
    """Screen rows supported on two classes against the forced normal-subgroup arithmetic.

    Requires a table that already passes `validate`.  Verdicts:
    "not-applicable" (no such row), "pseudo" (some constraint fails, with a
    witness), or "genuine-consistent".
    """
    data = class_data(table)
    rows = _two_class_rows(table, data.identity_column)
    if not rows:
        return PseudoVerdict("not-applicable")
    order = data.group_order
    for i, g in rows:
        d = int(table.entries[i][data.identity_column].as_rational())

        def witness(constraint: str, lhs, rhs, extra=None) -> PseudoVerdict:
            w = {"row": i + 1, "class": g + 1, "degree": d,
                 "constraint": constraint, "lhs": lhs, "rhs": rhs}
            if extra:
                w.update(extra)
            return PseudoVerdict("pseudo", w)

        h = order - d * d
        if h <= 0 or order % h:
            return witness("quotient-order-divides", h, order)
        n = order // h
        pp = prime_power(n)
        if pp is None:
            return witness("normal-subgroup-prime-power", n, None)
        p = pp[0]
        d_p = p_part(d, p)
        if d // d_p != h // p_part(h, p):
            return witness("degree-p-prime-part", d // d_p, h // p_part(h, p), {"p": p})
        if d_p * d_p != p_part(h, p):
            return witness("degree-p-part-squared", d_p * d_p, p_part(h, p), {"p": p})
        if h % (n - 1):
            return witness("orbit-count-divides", n - 1, h)
        if data.class_sizes[g] != n - 1:
            return witness("class-size", data.class_sizes[g], n - 1)
    return PseudoVerdict("genuine-consistent")
