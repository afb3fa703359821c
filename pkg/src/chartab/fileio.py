"""The table file format (JSON with cyclotomic literal entries) and the fixture corpus.

A table file is a JSON object:

    {
      "name": "M9",
      "rows": [["1", "1", ...], ...],      # cyclotomic literals
      "orders": [1, 3, ...],               # optional, one per column
      "powermaps": {"2": [1, 2, ...]},     # optional, prime -> 1-based class of g^p
      "missing": "row"                     # optional; inferred from the shape
    }

A (k-1) x k matrix is one row short, k x (k-1) one column short; an explicit
"missing" field must agree with the shape.  Serialization of a full table is
canonical: columns identity-first then sorted by (order, centralizer order,
value multiset), rows by (degree, approximate values); puzzles keep their
author's layout.
"""

from __future__ import annotations

import json
import os
from importlib import resources

from .arith import is_prime
from .cyclo import Cyclotomic, format_cyclotomic, parse_cyclotomic
from .errors import DimensionMismatch, LiteralError, NoIdentityColumn, ParseError
from .table import CharacterTable, PartialTable, identify_identity_column

CORPUS = ("trivial", "c2", "c3", "c4", "c2xc2", "s3", "d8", "q8", "a4",
          "sl23", "s4", "a5", "m9")
PUZZLES = ("pseudo_6x6", "i_matrix_1", "i_matrix_2", "i_matrix_3",
           "m9_missing_row", "s3_missing_column", "challenge_8x8")


def corpus_names() -> tuple[str, ...]:
    return CORPUS


def puzzle_names() -> tuple[str, ...]:
    return PUZZLES


def _parse_rows(raw_rows) -> tuple[tuple[Cyclotomic, ...], ...]:
    rows = []
    for i, raw in enumerate(raw_rows):
        if not isinstance(raw, list):
            raise ParseError(f"row {i + 1} is not a list")
        row = []
        for j, cell in enumerate(raw):
            if not isinstance(cell, str):
                raise ParseError(f"entry ({i + 1}, {j + 1}) is not a string literal")
            try:
                row.append(parse_cyclotomic(cell))
            except LiteralError as exc:
                raise ParseError(f"entry ({i + 1}, {j + 1}): {exc}") from exc
        rows.append(tuple(row))
    return tuple(rows)


def _parse_metadata(data, ncols):
    orders = data.get("orders")
    if orders is not None:
        if (not isinstance(orders, list) or len(orders) != ncols
                or any(not isinstance(v, int) or v < 1 for v in orders)):
            raise ParseError(f"orders must be {ncols} positive integers")
        orders = tuple(orders)
    powermaps = data.get("powermaps")
    if powermaps is not None:
        if not isinstance(powermaps, dict):
            raise ParseError("powermaps must be an object keyed by primes")
        parsed = {}
        for key, mapping in powermaps.items():
            try:
                p = int(key)
            except ValueError:
                raise ParseError(f"powermap key {key!r} is not a prime") from None
            if not is_prime(p):
                raise ParseError(f"powermap key {key!r} is not a prime")
            if (not isinstance(mapping, list) or len(mapping) != ncols
                    or any(not isinstance(v, int) or not 1 <= v <= ncols for v in mapping)):
                raise ParseError(
                    f"powermap for {p} must list {ncols} class positions in 1..{ncols}")
            parsed[p] = tuple(v - 1 for v in mapping)
        powermaps = parsed
    return orders, powermaps


def parse_table_file(text: str, name: str | None = None) -> CharacterTable | PartialTable:
    """Parse a table file; returns a CharacterTable or a PartialTable."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "rows" not in data or not isinstance(data["rows"], list):
        raise ParseError("expected an object with a 'rows' matrix")
    entries = _parse_rows(data["rows"])
    nrows = len(entries)
    widths = {len(row) for row in entries}
    if len(widths) > 1:
        raise ParseError("rows have inconsistent lengths")

    missing = data.get("missing")
    if missing not in (None, "row", "column"):
        raise ParseError(f"missing must be 'row' or 'column', got {missing!r}")
    if nrows == 0:
        if missing != "row":
            raise DimensionMismatch("an empty matrix is only legal with missing: 'row'")
        ncols = 1
    else:
        ncols = widths.pop()

    if missing is None:
        if nrows == ncols:
            missing = "full"
        elif nrows + 1 == ncols:
            missing = "row"
        elif nrows == ncols + 1:
            missing = "column"
        else:
            raise DimensionMismatch(f"a {nrows}x{ncols} matrix is not a table "
                                    f"nor one row or column short")
    else:
        if missing == "row" and nrows + 1 != ncols:
            raise DimensionMismatch(
                f"a {nrows}x{ncols} matrix cannot be missing a row "
                f"(that needs {ncols - 1}x{ncols})")
        if missing == "column" and nrows != ncols + 1:
            raise DimensionMismatch(
                f"a {nrows}x{ncols} matrix cannot be missing a column "
                f"(that needs {nrows}x{nrows - 1})")

    table_name = data.get("name") or name or "table"
    orders, powermaps = _parse_metadata(data, ncols)
    if missing == "full":
        return CharacterTable(table_name, entries, orders, powermaps)
    return PartialTable(table_name, entries, missing, orders, powermaps)


def _canonical_permutations(table: CharacterTable) -> tuple[list[int], list[int]]:
    """(row order, column order) for canonical serialization."""
    k = table.k
    try:
        ident = min(identify_identity_column(table.entries))
    except NoIdentityColumn:
        ident = None

    def column_key(j):
        norm = sum((row[j].abs_squared().approx_complex().real for row in table.entries))
        values = sorted(format_cyclotomic(row[j]) for row in table.entries)
        order = table.orders[j] if table.orders is not None else 0
        return (j != ident, order, round(norm, 6), values)

    cols = sorted(range(k), key=column_key)

    def row_key(i):
        row = table.entries[i]
        deg = row[ident].as_rational() if ident is not None else 0
        approx = []
        for j in cols:
            z = row[j].approx_complex()
            approx.append((round(z.real, 9), round(z.imag, 9)))
        return (deg, approx)

    rows = sorted(range(k), key=row_key)
    return rows, cols


def serialize_table(table: CharacterTable | PartialTable) -> str:
    """Canonical text form; parse(serialize(t)) reproduces t."""
    if isinstance(table, CharacterTable):
        row_order, col_order = _canonical_permutations(table)
    else:
        row_order = list(range(len(table.entries)))
        col_order = list(range(len(table.entries[0]) if table.entries else 0))
    data: dict = {"name": table.name}
    data["rows"] = [[format_cyclotomic(table.entries[i][j]) for j in col_order]
                    for i in row_order]
    if table.orders is not None:
        data["orders"] = [table.orders[j] for j in col_order]
    if table.powermaps is not None:
        inverse = {old: new for new, old in enumerate(col_order)}
        data["powermaps"] = {
            str(p): [inverse[m[j]] + 1 for j in col_order]
            for p, m in sorted(table.powermaps.items())
        }
    if isinstance(table, PartialTable):
        data["missing"] = table.missing
    return json.dumps(data, indent=2) + "\n"


def load_path(path) -> CharacterTable | PartialTable:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    stem = os.path.splitext(os.path.basename(str(path)))[0]
    return parse_table_file(text, name=stem)


def fixture_path(name: str):
    """Filesystem path of a shipped fixture (corpus table or puzzle)."""
    return resources.files("chartab") / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> CharacterTable | PartialTable:
    ref = fixture_path(name)
    return parse_table_file(ref.read_text(encoding="utf-8"), name=name)
