"""Seeded randomized property checks for the exact arithmetic.

The full-size suite (10^4+ samples) runs from the acceptance module via
`run_property_suite`; the test here keeps a quicker smoke configuration.
"""

from __future__ import annotations

import cmath
import math
import random

from conftest import random_cyclotomic

from chartab import format_cyclotomic, parse_cyclotomic
from chartab.arith import units


def _float_eval(x) -> complex:
    # Independent of approx_complex's implementation path: plain exp sum.
    return sum(float(c) * cmath.exp(2j * cmath.pi * e / x.conductor)
               for e, c in x.coeffs().items())


def run_property_suite(seed: int, ring: int, conj: int, galois: int, absf: int,
                       tol: float = 1e-9) -> int:
    """Run all families; returns the number of random samples drawn."""
    rng = random.Random(seed)
    samples = 0

    for _ in range(ring):
        a = random_cyclotomic(rng)
        b = random_cyclotomic(rng)
        c = random_cyclotomic(rng)
        samples += 3
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    for _ in range(conj):
        a = random_cyclotomic(rng)
        b = random_cyclotomic(rng)
        samples += 2
        assert a.conjugate().conjugate() == a
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        sq = a.abs_squared()
        assert sq == a * a.conjugate()
        assert sq.approx_complex().real >= -tol

    for _ in range(galois):
        a = random_cyclotomic(rng)
        b = random_cyclotomic(rng)
        samples += 2
        n = a.conductor
        us = units(n) or [1]
        j1 = rng.choice(us)
        j2 = rng.choice(us)
        assert a.galois_apply(j1).galois_apply(j2) == a.galois_apply((j1 * j2) % n or 1)
        # One automorphism of the compositum restricts to every operand.
        big = math.lcm(a.conductor, b.conductor)
        j = rng.choice(units(big) or [1])
        assert (a + b).galois_apply(j) == a.galois_apply(j) + b.galois_apply(j)
        assert (a * b).galois_apply(j) == a.galois_apply(j) * b.galois_apply(j)

    for _ in range(absf):
        a = random_cyclotomic(rng)
        samples += 1
        approx = a.approx_complex()
        assert abs(approx - _float_eval(a)) < tol
        assert abs(a.abs_squared().approx_complex() - abs(approx) ** 2) < tol
        assert parse_cyclotomic(format_cyclotomic(a)) == a

    return samples


def test_property_suite_smoke():
    assert run_property_suite(seed=20260809, ring=300, conj=300, galois=300, absf=300) > 0
