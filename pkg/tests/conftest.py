"""Shared helpers: puzzle builders, random value sampling, synthetic tables."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from chartab import (
    ONE,
    ZERO,
    CharacterTable,
    Cyclotomic,
    PartialTable,
    corpus_names,
    identify_identity_column,
    load_fixture,
    root_of_unity,
    validate,
)


@pytest.fixture(scope="session")
def corpus():
    return [(name, load_fixture(name)) for name in corpus_names()]


def delete_row(table: CharacterTable, i: int) -> PartialTable:
    rows = tuple(r for j, r in enumerate(table.entries) if j != i)
    return PartialTable(f"{table.name}-minus-row{i}", rows, "row",
                        table.orders, table.powermaps)


def delete_column(table: CharacterTable, j: int) -> PartialTable:
    k = table.k
    rows = tuple(tuple(x for m, x in enumerate(r) if m != j) for r in table.entries)
    orders = tuple(o for m, o in enumerate(table.orders) if m != j) if table.orders else None
    powermaps = None
    if table.powermaps:
        keep = [m for m in range(k) if m != j]
        if all(table.powermaps[p][m] != j for p in table.powermaps for m in keep):
            new = {old: idx for idx, old in enumerate(keep)}
            powermaps = {p: tuple(new[table.powermaps[p][m]] for m in keep)
                         for p in table.powermaps}
    return PartialTable(f"{table.name}-minus-col{j}", rows, "column", orders, powermaps)


def random_cyclotomic(rng: random.Random,
                      conductors=(1, 1, 3, 4, 5, 8, 9, 12),
                      max_terms: int = 3) -> Cyclotomic:
    n = rng.choice(conductors)
    x = ZERO
    for _ in range(rng.randint(1, max_terms)):
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        x = x + c * root_of_unity(n, rng.randrange(n))
    return x


def tensor_tables(a: CharacterTable, b: CharacterTable, name: str) -> CharacterTable:
    """Character table of a direct product (values only, no metadata)."""
    entries = tuple(
        tuple(xa * xb for xa in row_a for xb in row_b)
        for row_a in a.entries for row_b in b.entries
    )
    return CharacterTable(name, entries)


def frobenius_48_table() -> CharacterTable:
    """The 48-element Frobenius group (C4 x C4) : C3, built from the action.

    The order-3 matrix (x, y) -> (-y, x - y) acts on C4 x C4 without fixed
    points; kernel classes are its orbits, and the degree-3 characters are
    orbit sums of kernel characters.  The construction is validated before
    being returned.
    """
    def act(v):
        return (-v[1] % 4, (v[0] - v[1]) % 4)

    def act_dual(w):
        return (w[1] % 4, (-w[0] - w[1]) % 4)

    def orbits(step):
        seen, out = set(), []
        for start in ((a, b) for a in range(4) for b in range(4) if (a, b) != (0, 0)):
            if start in seen:
                continue
            orbit = [start]
            v = step(start)
            while v != start:
                orbit.append(v)
                v = step(v)
            seen.update(orbit)
            out.append(orbit)
        return out

    kernel_orbits = orbits(act)
    dual_orbits = orbits(act_dual)
    assert len(kernel_orbits) == len(dual_orbits) == 5

    i = root_of_unity(4)
    omega = root_of_unity(3)
    rows = []
    for j in range(3):
        rows.append([ONE] * 6 + [omega**j, omega ** (2 * j)])
    for dual in dual_orbits:
        row = [Cyclotomic.from_rational(3)]
        for orbit in kernel_orbits:
            v = orbit[0]
            val = ZERO
            for a, b in dual:
                val = val + i ** ((a * v[0] + b * v[1]) % 4)
            row.append(val)
        row.extend([ZERO, ZERO])
        rows.append(row)

    def class_of(v):
        if v == (0, 0):
            return 0
        for idx, orbit in enumerate(kernel_orbits):
            if v in orbit:
                return idx + 1
        raise AssertionError(v)

    orders = [1] + [4 if any(c % 2 for c in orbit[0]) else 2 for orbit in kernel_orbits]
    orders += [3, 3]
    pm2 = [0] + [class_of(((2 * o[0][0]) % 4, (2 * o[0][1]) % 4)) for o in kernel_orbits]
    pm2 += [7, 6]
    pm3 = [0] + [class_of(((-o[0][0]) % 4, (-o[0][1]) % 4)) for o in kernel_orbits]
    pm3 += [0, 0]
    table = CharacterTable("frobenius48", tuple(tuple(r) for r in rows),
                           tuple(orders), {2: tuple(pm2), 3: tuple(pm3)})
    report = validate(table)
    assert report.passed, report.violations
    return table


def gagola_extension(table: CharacterTable, name: str) -> PartialTable:
    """A missing-row puzzle whose quotient is the given table.

    The identity column is duplicated at position 1; power maps carry a
    self-map entry for the new class, which the row solver never consults.
    """
    ident = min(identify_identity_column(table.entries))
    assert ident == 0
    entries = tuple((row[0], row[0]) + tuple(row[1:]) for row in table.entries)
    powermaps = None
    if table.powermaps:
        def shift(j):
            return 0 if j == 0 else j + 1
        powermaps = {p: (0, 1) + tuple(shift(m[j]) for j in range(1, table.k))
                     for p, m in table.powermaps.items()}
    return PartialTable(name, entries, "row", None, powermaps)
