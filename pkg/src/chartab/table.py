"""Character-table data model and the structural operations the solvers rely on.

Rows are irreducible characters, columns are conjugacy classes.  Class
metadata (element orders, prime power maps) is optional input: it cannot in
general be recomputed from the bare matrix, so operations that need it raise
InsufficientData instead of guessing.  All indices in this module are
0-based; the file format and CLI use 1-based positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisors, prime_factors
from .cyclo import Cyclotomic, format_cyclotomic
from .errors import (
    InconsistentData,
    InsufficientData,
    InvalidTable,
    MalformedInput,
    NoIdentityColumn,
    NotDuplicate,
)

Matrix = tuple[tuple[Cyclotomic, ...], ...]


def _freeze_entries(entries) -> Matrix:
    return tuple(tuple(row) for row in entries)


@dataclass
class CharacterTable:
    """A square matrix of cyclotomic integers plus optional class metadata.

    powermaps maps a prime p to the tuple of class indices of g^p, one per
    column.
    """

    name: str
    entries: Matrix
    orders: tuple[int, ...] | None = None
    powermaps: dict[int, tuple[int, ...]] | None = None

    def __post_init__(self):
        self.entries = _freeze_entries(self.entries)
        k = len(self.entries)
        if k == 0 or any(len(row) != k for row in self.entries):
            raise InvalidTable(f"{self.name}: entries must form a nonempty square matrix")
        if self.orders is not None:
            self.orders = tuple(self.orders)
            if len(self.orders) != k:
                raise InvalidTable(f"{self.name}: orders length {len(self.orders)} != {k}")
        if self.powermaps is not None:
            self.powermaps = {int(p): tuple(m) for p, m in self.powermaps.items()}
            for p, m in self.powermaps.items():
                if len(m) != k or any(not 0 <= j < k for j in m):
                    raise InvalidTable(f"{self.name}: power map for {p} is out of range")

    @property
    def k(self) -> int:
        return len(self.entries)


@dataclass
class PartialTable:
    """A table with exactly one row or one column deleted.

    Metadata is per class, so it stays legal input when a row is missing; with
    a missing column it can only describe the classes still present.
    """

    name: str
    entries: Matrix
    missing: str  # "row" | "column"
    orders: tuple[int, ...] | None = None
    powermaps: dict[int, tuple[int, ...]] | None = None

    def __post_init__(self):
        self.entries = _freeze_entries(self.entries)
        if self.missing not in ("row", "column"):
            raise InvalidTable(f"{self.name}: missing must be 'row' or 'column'")
        ncols = len(self.entries[0]) if self.entries else (1 if self.missing == "row" else 0)
        if any(len(row) != ncols for row in self.entries):
            raise InvalidTable(f"{self.name}: ragged matrix")
        nrows = len(self.entries)
        if self.missing == "row":
            if nrows + 1 != ncols:
                raise InvalidTable(f"{self.name}: a {nrows}x{ncols} matrix is not one row short")
        elif nrows != ncols + 1:
            raise InvalidTable(f"{self.name}: a {nrows}x{ncols} matrix is not one column short")
        if self.orders is not None:
            self.orders = tuple(self.orders)
            if len(self.orders) != ncols:
                raise InvalidTable(f"{self.name}: orders length mismatch")
        if self.powermaps is not None:
            self.powermaps = {int(p): tuple(m) for p, m in self.powermaps.items()}
            for p, m in self.powermaps.items():
                if len(m) != ncols or any(not 0 <= j < ncols for j in m):
                    raise InvalidTable(f"{self.name}: power map for {p} is out of range")

    @property
    def k(self) -> int:
        """Class count of the completed table."""
        if self.missing == "row":
            return len(self.entries[0]) if self.entries else 1
        return len(self.entries)


@dataclass
class ClassData:
    group_order: int
    centralizer_orders: tuple[int, ...]
    class_sizes: tuple[int, ...]
    identity_column: int


def _positive_integer(x: Cyclotomic) -> int | None:
    q = x.as_rational()
    if q is None or q.denominator != 1 or q <= 0:
        return None
    return int(q)


def identify_identity_column(rows) -> list[int]:
    """Columns of positive integers that dominate every entry in absolute value.

    Returns all qualifying column indices (they are provably identical
    columns); callers take the lowest.  Raises NoIdentityColumn when no
    column qualifies.
    """
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        raise NoIdentityColumn("empty matrix")
    ncols = len(rows[0])
    norms = [[entry.abs_squared() for entry in row] for row in rows]
    found = []
    for t in range(ncols):
        col = [row[t] for row in rows]
        ints = [_positive_integer(x) for x in col]
        if any(v is None for v in ints):
            continue
        ok = True
        for i, row in enumerate(rows):
            bound = Cyclotomic.from_rational(ints[i] * ints[i])
            for s in range(ncols):
                if (bound - norms[i][s]).real_sign() < 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(t)
    if not found:
        raise NoIdentityColumn("no all-positive-integer column dominates the matrix")
    return found


def group_order(table: CharacterTable) -> int:
    """Sum of squared degrees, read off the identity column."""
    ident = min(identify_identity_column(table.entries))
    total = sum(row[ident].as_rational() ** 2 for row in table.entries)
    if total.denominator != 1 or total <= 0:
        raise InvalidTable(f"{table.name}: squared degrees sum to {total}")
    return int(total)


def centralizer_orders(table: CharacterTable) -> tuple[int, ...]:
    """Column norms; every one must be a positive integer dividing the group order."""
    order = group_order(table)
    out = []
    for t in range(table.k):
        norm = Cyclotomic.from_rational(0)
        for row in table.entries:
            norm = norm + row[t].abs_squared()
        value = _positive_integer(norm)
        if value is None:
            raise InvalidTable(f"{table.name}: column {t + 1} norm {norm} is not a positive integer")
        if order % value:
            raise InvalidTable(f"{table.name}: centralizer order {value} does not divide {order}")
        out.append(value)
    return tuple(out)


def class_data(table: CharacterTable) -> ClassData:
    order = group_order(table)
    cents = centralizer_orders(table)
    sizes = tuple(order // c for c in cents)
    if sum(sizes) != order:
        raise InvalidTable(f"{table.name}: class sizes sum to {sum(sizes)}, not {order}")
    return ClassData(order, cents, sizes, min(identify_identity_column(table.entries)))


def _orders_from_powermaps(table: CharacterTable, order: int, identity: int) -> tuple[int, ...]:
    maps = table.powermaps or {}
    needed = prime_factors(order)
    if any(p not in maps for p in needed):
        missing = [p for p in needed if p not in maps]
        raise InsufficientData(f"{table.name}: no power map for prime(s) {missing}")
    for p in needed:
        if maps[p][identity] != identity:
            raise InconsistentData(f"{table.name}: power map for {p} moves the identity class")

    def power_class(c: int, m: int) -> int:
        for p in prime_factors(m):
            steps = 0
            mm = m
            while mm % p == 0:
                mm //= p
                steps += 1
            for _ in range(steps):
                c = maps[p][c]
        return c

    out = []
    for c in range(table.k):
        for n in divisors(order):
            if power_class(c, n) == identity:
                out.append(n)
                break
        else:
            raise InconsistentData(f"{table.name}: class {c + 1} never reaches the identity")
    return tuple(out)


def element_orders(table: CharacterTable) -> tuple[int, ...]:
    """Element orders per class: stored values after consistency checks, or
    derived by iterating the prime power maps."""
    data = class_data(table)
    if table.orders is not None:
        orders = table.orders
        if orders[data.identity_column] != 1:
            raise InconsistentData(f"{table.name}: identity class must have order 1")
        for j, n in enumerate(orders):
            if n < 1 or data.centralizer_orders[j] % n:
                raise InconsistentData(
                    f"{table.name}: order {n} of class {j + 1} does not divide "
                    f"the centralizer order {data.centralizer_orders[j]}")
            conductor = math.lcm(*(row[j].conductor for row in table.entries))
            if n % conductor:
                raise InconsistentData(
                    f"{table.name}: class {j + 1} has values of conductor {conductor}, "
                    f"impossible for order {n}")
        return orders
    if table.powermaps:
        return _orders_from_powermaps(table, data.group_order, data.identity_column)
    raise InsufficientData(f"{table.name}: neither orders nor power maps available")


def quotient_table(partial: PartialTable, r: int) -> CharacterTable:
    """Delete duplicate column r of a missing-row puzzle, exposing a quotient table.

    Metadata is remapped through the projection that sends class r to the
    identity; orders are recomputed from the remapped power maps, never
    copied, because orders can drop in the quotient.
    """
    if partial.missing != "row":
        raise InvalidTable("quotient_table expects a puzzle with a missing row")
    ident = min(identify_identity_column(partial.entries))
    if r == ident or any(row[r] != row[ident] for row in partial.entries):
        raise NotDuplicate(f"column {r + 1} is not a duplicate of the identity column {ident + 1}")
    keep = [j for j in range(partial.k) if j != r]
    new_index = {old: new for new, old in enumerate(keep)}
    entries = tuple(tuple(row[j] for j in keep) for row in partial.entries)

    powermaps = None
    if partial.powermaps:
        def project(j: int) -> int:
            return ident if j == r else j
        powermaps = {
            p: tuple(new_index[project(m[j])] for j in keep)
            for p, m in partial.powermaps.items()
        }
    quotient = CharacterTable(f"{partial.name}-quotient", entries, None, powermaps)
    if powermaps:
        order = group_order(quotient)
        if all(p in powermaps for p in prime_factors(order)):
            quotient.orders = _orders_from_powermaps(
                quotient, order, min(identify_identity_column(entries)))
    return quotient


def conjugate_closure_gap(partial: PartialTable) -> int | None:
    """None when the given rows are closed under conjugation as a multiset;
    otherwise the index of the unique row whose conjugate row is absent."""
    if partial.missing != "row":
        raise InvalidTable("conjugate_closure_gap expects a puzzle with a missing row")
    rows = [tuple(row) for row in partial.entries]
    counts: dict[tuple, int] = {}
    for row in rows:
        counts[row] = counts.get(row, 0) + 1
    deficits = []
    for row, c in counts.items():
        conj = tuple(x.conjugate() for x in row)
        short = c - counts.get(conj, 0)
        if short > 0:
            deficits.extend([row] * short)
    if not deficits:
        return None
    if len(deficits) > 1:
        raise MalformedInput(f"{partial.name}: {len(deficits)} rows lack conjugates")
    return rows.index(deficits[0])


def _column_multiset_key(entries: Matrix, j: int) -> tuple:
    vals = sorted(format_cyclotomic(row[j]) for row in entries)
    return tuple(vals)


def tables_equivalent(a: CharacterTable, b: CharacterTable) -> bool:
    """Equality up to permuting rows and columns, respecting metadata both carry."""
    if a.k != b.k:
        return False
    k = a.k
    try:
        ident_a = min(identify_identity_column(a.entries))
        ident_b = min(identify_identity_column(b.entries))
    except NoIdentityColumn:
        ident_a = ident_b = None

    def norm(t: CharacterTable, j: int) -> Cyclotomic:
        total = Cyclotomic.from_rational(0)
        for row in t.entries:
            total = total + row[j].abs_squared()
        return total

    norms_a = [norm(a, j) for j in range(k)]
    norms_b = [norm(b, j) for j in range(k)]
    keys_a = [_column_multiset_key(a.entries, j) for j in range(k)]
    keys_b = [_column_multiset_key(b.entries, j) for j in range(k)]

    candidates = []
    for j in range(k):
        opts = []
        for m in range(k):
            if norms_a[j] != norms_b[m] or keys_a[j] != keys_b[m]:
                continue
            if ident_a is not None and ((j == ident_a) != (m == ident_b)):
                continue
            if a.orders is not None and b.orders is not None and a.orders[j] != b.orders[m]:
                continue
            opts.append(m)
        if not opts:
            return False
        candidates.append(opts)

    order = sorted(range(k), key=lambda j: len(candidates[j]))
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def powermaps_ok() -> bool:
        if not a.powermaps or not b.powermaps:
            return True
        for p in set(a.powermaps) & set(b.powermaps):
            ma, mb = a.powermaps[p], b.powermaps[p]
            for j, m in assignment.items():
                if ma[j] in assignment and assignment[ma[j]] != mb[m]:
                    return False
        return True

    def row_key(row: tuple) -> tuple:
        return tuple(format_cyclotomic(x) for x in row)

    def extend(i: int) -> bool:
        if i == k:
            perm = [assignment[j] for j in range(k)]
            rows_a = sorted((tuple(row) for row in a.entries), key=row_key)
            rows_bp = sorted((tuple(row[perm[j]] for j in range(k)) for row in b.entries),
                             key=row_key)
            return rows_a == rows_bp
        j = order[i]
        for m in candidates[j]:
            if m in used:
                continue
            assignment[j] = m
            used.add(m)
            if powermaps_ok() and extend(i + 1):
                return True
            del assignment[j]
            used.discard(m)
        return False

    return extend(0)
