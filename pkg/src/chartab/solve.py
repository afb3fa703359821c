"""Reconstruction of a deleted row or column from the rest of a character table.

Missing column: the deleted column spans the orthogonal complement of the
given columns (which have full rank), so an exact nullspace plus a
normalization against the all-ones row(s) pins it down.

Missing row: with gamma_st the inner product of given columns s and t, the
full-table orthogonality relations force chi(g_s) = -conj(gamma_1s)/d where
d = chi(1).  Either some gamma_st with s, t away from the identity is nonzero
and d is solved directly (case 1), or the missing row vanishes outside the
identity and a single class r, the column of r duplicates the identity
column, and deleting it exposes a quotient table whose Sylow structure
determines d (case 2, branches 2.1 / cyclic-sylow-2 / 2.2 / 2.3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import int_sqrt, p_part, pprime_part, prime_factors, prime_power
from .checks import (
    ValidationReport,
    sylow2_abelianization_index,
    sylow_is_cyclic,
    validate,
)
from .cyclo import Cyclotomic, ONE, ZERO, format_cyclotomic
from .errors import (
    InvalidPartial,
    MoreThanTwoOnesRows,
    NeedsHint,
    NotCompletable,
    RankDeficient,
)
from .table import (
    CharacterTable,
    PartialTable,
    conjugate_closure_gap,
    group_order,
    identify_identity_column,
    quotient_table,
)

__all__ = [
    "CaseTrace", "SolveOutcome", "gamma", "int_sqrt",
    "solve_missing_column", "solve_missing_row",
]


@dataclass
class CaseTrace:
    """Which branch of the reconstruction fired, with every intermediate quantity.

    Indices (r, s, t, rows) are 1-based positions for reporting.
    """

    kind: str
    s: int | None = None
    t: int | None = None
    gamma_1s: Cyclotomic | None = None
    gamma_1t: Cyclotomic | None = None
    gamma_st: Cyclotomic | None = None
    d_squared: int | None = None
    r: int | None = None
    quotient_order: int | None = None
    branch: str | None = None
    p: int | None = None
    e: int | None = None
    normal_order: int | None = None
    d: int | None = None
    plus_row: int | None = None
    minus_row: int | None = None
    conjugate_of_row: int | None = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        for key in ("s", "t", "d_squared", "r", "quotient_order", "branch", "p",
                    "e", "normal_order", "d", "plus_row", "minus_row",
                    "conjugate_of_row"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        for key in ("gamma_1s", "gamma_1t", "gamma_st"):
            value = getattr(self, key)
            if value is not None:
                out[key] = format_cyclotomic(value)
        return out


@dataclass
class SolveOutcome:
    vector: tuple[Cyclotomic, ...]
    trace: CaseTrace
    validation: ValidationReport

    def to_dict(self) -> dict:
        return {"vector": [format_cyclotomic(x) for x in self.vector],
                "trace": self.trace.to_dict(),
                "validation": self.validation.to_dict()}


def gamma(partial: PartialTable, s: int, t: int) -> Cyclotomic:
    """Sum over the given rows of c_is * conj(c_it); columns are 0-based."""
    if partial.missing != "row":
        raise InvalidPartial("gamma is defined for puzzles missing a row")
    total = ZERO
    for row in partial.entries:
        total = total + row[s] * row[t].conjugate()
    return total


# --- missing column ----------------------------------------------------------

def _nullspace_vector(equations: list[list[Cyclotomic]], ncols: int) -> list[Cyclotomic]:
    """The one-dimensional nullspace of the equation rows, by exact elimination.

    Raises RankDeficient unless the nullity is exactly 1.
    """
    mat = [list(eq) for eq in equations]
    pivot_of_col: dict[int, int] = {}
    pivot_row = 0
    for col in range(ncols):
        src = next((r for r in range(pivot_row, len(mat)) if not mat[r][col].is_zero()), None)
        if src is None:
            continue
        mat[pivot_row], mat[src] = mat[src], mat[pivot_row]
        inv = mat[pivot_row][col]
        mat[pivot_row] = [x / inv for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[pivot_row])]
        pivot_of_col[col] = pivot_row
        pivot_row += 1
    free = [c for c in range(ncols) if c not in pivot_of_col]
    if len(free) != 1:
        raise RankDeficient(
            f"given columns span a space of dimension {pivot_row}, expected {ncols - 1}")
    f = free[0]
    vec = [ZERO] * ncols
    vec[f] = ONE
    for col, row in pivot_of_col.items():
        vec[col] = -mat[row][f]
    return vec


def solve_missing_column(partial: PartialTable) -> SolveOutcome:
    """Reconstruct the deleted column of a k x (k-1) puzzle."""
    if partial.missing != "column":
        raise InvalidPartial("solve_missing_column expects a puzzle missing a column")
    k = partial.k
    if k == 1:
        table = CharacterTable(partial.name + "-completed", ((ONE,),))
        return SolveOutcome((ONE,), CaseTrace("column-generic"), validate(table))

    ones_rows = [i for i, row in enumerate(partial.entries) if all(x == 1 for x in row)]
    if len(ones_rows) > 2:
        raise MoreThanTwoOnesRows(f"{len(ones_rows)} all-ones rows")
    if not ones_rows:
        raise NotCompletable("no all-ones row among the given rows")

    ncols = k - 1
    equations = [[partial.entries[i][s] for i in range(k)] for s in range(ncols)]
    w = _nullspace_vector(equations, k)
    d = [x.conjugate() for x in w]

    if len(ones_rows) == 1:
        pivot = d[ones_rows[0]]
        if pivot.is_zero():
            raise NotCompletable("the trivial character cannot vanish")
        d = [x / pivot for x in d]
        trace = CaseTrace("column-generic")
    else:
        i1, i2 = ones_rows
        pivot = d[i1]
        if pivot.is_zero():
            raise NotCompletable("nullspace vector vanishes on an all-ones row")
        scaled = [x / pivot for x in d]
        target = [ZERO] * k
        target[i1] = ONE
        target[i2] = -ONE
        if scaled != target:
            raise NotCompletable("nullspace vector is not of the (1, -1, 0...) shape")
        d = target
        trace = CaseTrace("column-two-ones-special", plus_row=i1 + 1, minus_row=i2 + 1)

    norm = ZERO
    for x in d:
        norm = norm + x.abs_squared()
    q = norm.as_rational()
    if q is None or q.denominator != 1 or q <= 0:
        raise NotCompletable(f"column norm {format_cyclotomic(norm)} is not a positive integer")

    entries = tuple(tuple(row) + (d[i],) for i, row in enumerate(partial.entries))
    table = CharacterTable(partial.name + "-completed", entries)
    report = validate(table)
    if not report.passed:
        raise NotCompletable("completed table fails validation: "
                             + "; ".join(v.detail for v in report.violations[:3]))
    if group_order(table) % int(q):
        raise NotCompletable(f"column norm {q} does not divide the group order")
    return SolveOutcome(tuple(d), trace, report)


# --- missing row --------------------------------------------------------------

def _finish_row(partial: PartialTable, vector: list[Cyclotomic],
                trace: CaseTrace) -> SolveOutcome:
    entries = tuple(partial.entries) + (tuple(vector),)
    table = CharacterTable(partial.name + "-completed", entries,
                           partial.orders, partial.powermaps)
    report = validate(table)
    if not report.passed:
        raise InvalidPartial("completed table fails validation: "
                             + "; ".join(v.detail for v in report.violations[:3]))
    return SolveOutcome(tuple(vector), trace, report)


def _case2_candidate(h_order: int, branch: str) -> tuple[int, int] | None:
    """(d, e) for a case-2 branch, or None when the branch is arithmetically impossible."""
    h2 = p_part(h_order, 2)
    if branch == "2.2":
        e = int_sqrt(h2)
        if e is None:
            return None
        return h_order // e, e
    if branch == "2.3-small":
        return (h_order // 2, 2) if h2 == 4 else None
    if branch == "2.3-large":
        return (h_order, 1) if h2 >= 8 else None
    raise ValueError(branch)


def _case2_row(partial: PartialTable, ident: int, r: int, g1r: Cyclotomic,
               h_order: int, d: int, e: int, branch: str,
               expect_p: int | None) -> tuple[list[Cyclotomic], CaseTrace] | str:
    """Assemble and screen a case-2 row; returns the row or a rejection reason."""
    if d * d % h_order:
        return f"d^2 = {d * d} is not a multiple of |G/N| = {h_order}"
    n_order = 1 + d * d // h_order
    pp = prime_power(n_order)
    if pp is None:
        return f"|N| = {n_order} is not a prime power"
    p = pp[0]
    if expect_p is not None and p != expect_p:
        return f"|N| = {n_order} is not a power of p = {expect_p}"
    if h_order % (n_order - 1):
        return f"|N| - 1 = {n_order - 1} does not divide |G/N| = {h_order}"
    k = partial.k
    vector = [ZERO] * k
    vector[ident] = Cyclotomic.from_rational(d)
    vector[r] = -(g1r.conjugate() / d)
    trace = CaseTrace("row-case2", r=r + 1, quotient_order=h_order, branch=branch,
                      p=p, e=e, normal_order=n_order, d=d)
    return vector, trace


def solve_missing_row(partial: PartialTable,
                      hints: dict | None = None) -> SolveOutcome:
    """Reconstruct the deleted row of a (k-1) x k puzzle.

    ``hints`` may carry ``sylow2_ab`` (the index |P:P'| for a Sylow
    2-subgroup of the quotient) for puzzles whose case-2 branch cannot be
    decided from the given entries alone.
    """
    if partial.missing != "row":
        raise InvalidPartial("solve_missing_row expects a puzzle missing a row")
    k = partial.k
    hints = hints or {}

    # (0) A table always has an all-ones row; if none is given, it is the answer.
    if not any(all(x == 1 for x in row) for row in partial.entries):
        return _finish_row(partial, [ONE] * k, CaseTrace("row-trivial-missing"))

    # (1) If some given row's conjugate is absent, the answer is that conjugate.
    gap = conjugate_closure_gap(partial)
    if gap is not None:
        row = [x.conjugate() for x in partial.entries[gap]]
        return _finish_row(partial, row, CaseTrace("row-conjugate-shortcut",
                                                   conjugate_of_row=gap + 1))

    # (2) Locate the identity column.
    idents = identify_identity_column(partial.entries)
    ident = min(idents)

    gammas_1 = {s: gamma(partial, ident, s) for s in range(k) if s != ident}
    others = [s for s in range(k) if s != ident]

    # (3) Case 1: some gamma_st away from the identity is nonzero.
    case1_pairs = []
    for a in range(len(others)):
        for b in range(a + 1, len(others)):
            s, t = others[a], others[b]
            g = gamma(partial, s, t)
            if not g.is_zero():
                case1_pairs.append((s, t, g))
    if case1_pairs:
        if len(idents) > 1:
            raise InvalidPartial(
                "duplicate identity candidates cannot occur when the missing row "
                "takes nonzero values on two non-identity classes")
        d_squared = None
        first = None
        for s, t, g_st in case1_pairs:
            value = -(gammas_1[s] * gammas_1[t] / g_st)
            q = value.as_rational()
            if q is None or q.denominator != 1 or q <= 0:
                raise InvalidPartial(
                    f"degree^2 candidate {format_cyclotomic(value)} from columns "
                    f"({s + 1}, {t + 1}) is not a positive integer")
            if d_squared is None:
                d_squared = int(q)
                first = (s, t, g_st)
            elif int(q) != d_squared:
                raise InvalidPartial(
                    f"inconsistent degree^2 candidates {d_squared} and {int(q)}")
        d = int_sqrt(d_squared)
        if d is None:
            raise InvalidPartial(f"degree^2 = {d_squared} is not a perfect square")
        vector = [ZERO] * k
        vector[ident] = Cyclotomic.from_rational(d)
        for s in others:
            vector[s] = -(gammas_1[s].conjugate() / d)
        s, t, g_st = first
        trace = CaseTrace("row-case1", s=s + 1, t=t + 1,
                          gamma_1s=gammas_1[s], gamma_1t=gammas_1[t],
                          gamma_st=g_st, d_squared=d_squared)
        return _finish_row(partial, vector, trace)

    # (4) Case 2: the missing row lives on the identity and a single class r.
    nonzero = [s for s in others if not gammas_1[s].is_zero()]
    if len(nonzero) != 1:
        raise InvalidPartial(
            f"expected exactly one class with nonzero gamma against the identity, "
            f"found {len(nonzero)}")
    r = nonzero[0]
    if any(row[r] != row[ident] for row in partial.entries):
        raise InvalidPartial(f"column {r + 1} does not duplicate the identity column")
    g1r = gammas_1[r]

    quotient = quotient_table(partial, r)
    h_order = group_order(quotient)
    g11 = gamma(partial, ident, ident).as_rational()
    if g11 != h_order:
        raise InvalidPartial(f"gamma_11 = {g11} disagrees with the quotient order {h_order}")

    odd_noncyclic = [q for q in prime_factors(h_order)
                     if q != 2 and not sylow_is_cyclic(quotient, q)]
    if odd_noncyclic:
        # Branch 2.1: a unique prime must dominate the quotient order.
        dominating = [p for p in prime_factors(h_order)
                      if p_part(h_order, p) > pprime_part(h_order, p)]
        if len(dominating) != 1:
            raise InvalidPartial(
                f"no unique prime dominates |G/N| = {h_order} despite a non-cyclic "
                f"odd Sylow subgroup")
        p = dominating[0]
        e = int_sqrt(p_part(h_order, p))
        if e is None:
            raise InvalidPartial(f"|G/N|_p = {p_part(h_order, p)} is not a perfect square")
        made = _case2_row(partial, ident, r, g1r, h_order, h_order // e, e, "2.1", p)
        if isinstance(made, str):
            raise InvalidPartial(made)
        return _finish_row(partial, *made)

    h2 = p_part(h_order, 2)
    if h2 == 1 or sylow_is_cyclic(quotient, 2):
        made = _case2_row(partial, ident, r, g1r, h_order, h_order, 1,
                          "cyclic-sylow-2", None)
        if isinstance(made, str):
            raise InvalidPartial(made)
        return _finish_row(partial, *made)

    s2 = sylow2_abelianization_index(quotient, hints.get("sylow2_ab"))
    if s2.status == "exact":
        if s2.value > 4:
            branch = "2.2"
        elif s2.value == 4:
            branch = "2.3-small" if h2 == 4 else "2.3-large"
        else:
            raise InvalidPartial(
                f"|P:P'| = {s2.value} is impossible for a non-cyclic Sylow 2-subgroup")
        de = _case2_candidate(h_order, branch)
        if de is None:
            raise InvalidPartial(f"branch {branch} is arithmetically impossible here")
        made = _case2_row(partial, ident, r, g1r, h_order, de[0], de[1], branch,
                          2 if branch in ("2.2", "2.3-small") else None)
        if isinstance(made, str):
            raise InvalidPartial(made)
        return _finish_row(partial, *made)
    if s2.status == "lower-bound":
        de = _case2_candidate(h_order, "2.2")
        if de is None:
            raise InvalidPartial(
                f"|P:P'| > 4 forces |G/N|_2 = {h2} to be a perfect square")
        made = _case2_row(partial, ident, r, g1r, h_order, de[0], de[1], "2.2", 2)
        if isinstance(made, str):
            raise InvalidPartial(made)
        return _finish_row(partial, *made)

    # Undecidable: try both readings of |P:P'|; keep the ones that survive
    # the arithmetic and full validation.
    survivors = []
    for branch in ("2.2", "2.3-small" if h2 == 4 else "2.3-large"):
        de = _case2_candidate(h_order, branch)
        if de is None:
            continue
        made = _case2_row(partial, ident, r, g1r, h_order, de[0], de[1], branch,
                          2 if branch in ("2.2", "2.3-small") else None)
        if isinstance(made, str):
            continue
        try:
            survivors.append(_finish_row(partial, *made))
        except InvalidPartial:
            continue
    unique_vectors = {tuple(s.vector) for s in survivors}
    if not survivors:
        raise InvalidPartial("no reading of the Sylow-2 abelianization index completes the table")
    if len(unique_vectors) == 1:
        return survivors[0]
    raise NeedsHint(
        "the table alone does not determine |P:P'| for the quotient's Sylow "
        "2-subgroup; pass a sylow2_ab hint",
        [(s.vector, s.trace) for s in survivors])
