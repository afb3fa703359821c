"""Arithmetic around groups with a large character degree.

A group of order n = d(d + e) with an irreducible character of degree d and
e >= 2 satisfies n <= e^4 - e^3, which makes the candidate pairs (d, n) per e
a finite list.  `feasible_ramifications` enumerates the factorizations
d = k * e * theta(1) compatible with the standard restriction/induction
inequalities over a normal subgroup of order m; an empty result proves that
no such configuration exists.  These are necessary conditions only: group
existence is never decided here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import divisors
from .errors import BadDivisibility, EOutOfRange


@dataclass
class DegreePair:
    e: int
    d: int
    n: int

    def __post_init__(self):
        if self.n != self.d * (self.d + self.e):
            raise ValueError(f"({self.d}, {self.n}) is not of the form d(d+e) for e={self.e}")


@dataclass
class RamificationTriple:
    """A factorization d = k * e * t surviving the inequality system.

    k is the orbit size of the inducing character, e the ramification index,
    t its degree.
    """

    k: int
    e: int
    t: int


@dataclass
class ScenarioResult:
    label: str
    description: str
    order: int
    degree: int
    normal_order: int
    options: dict
    triples: list[RamificationTriple]
    expected: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return [(t.k, t.e, t.t) for t in self.triples] == self.expected

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "description": self.description,
            "order": self.order,
            "degree": self.degree,
            "normal_order": self.normal_order,
            "options": self.options,
            "triples": [[t.k, t.e, t.t] for t in self.triples],
            "expected": [list(t) for t in self.expected],
            "ok": self.ok,
        }


def hls_max_order(e: int) -> int:
    """The bound e^4 - e^3 on the order of a group of order d(d+e), e >= 2."""
    if e < 2:
        raise EOutOfRange(f"the bound needs e >= 2, got {e}")
    return e**4 - e**3


def enumerate_pairs(e: int) -> list[DegreePair]:
    """All (d, n = d(d+e)) with n within the bound, ascending in d.

    Arithmetic candidates only; which of them belong to actual groups is not
    decided here.
    """
    bound = hls_max_order(e)
    out = []
    d = 1
    while d * (d + e) <= bound:
        out.append(DegreePair(e, d, d * (d + e)))
        d += 1
    return out


def feasible_ramifications(n: int, d: int, m: int, *,
                           n_abelian: bool = False,
                           n_central: bool = False,
                           coprime_extension: bool = False) -> list[RamificationTriple]:
    """Triples (k, e, t) with d = k*e*t compatible with a normal subgroup of order m.

    Constraints: k divides n/m; e divides (n/m)/k and e^2 <= (n/m)/k;
    k*t^2 < m; with n_abelian, t = 1; with n_central, k = t = 1; with
    coprime_extension and gcd(m, (n/m)/k) = 1, e = 1.  An empty list means
    the configuration is impossible.
    """
    if m <= 1 or m >= n:
        raise BadDivisibility(f"normal subgroup order {m} must satisfy 1 < m < {n}")
    if n % m:
        raise BadDivisibility(f"{m} does not divide {n}")
    index = n // m
    out = []
    for k in divisors(index):
        if d % k:
            continue
        stab_index = index // k
        for e in divisors(stab_index):
            if (d // k) % e:
                continue
            t = d // (k * e)
            if e * e > stab_index:
                continue
            if k * t * t >= m:
                continue
            if n_abelian and t != 1:
                continue
            if n_central and (k != 1 or t != 1):
                continue
            if coprime_extension and math.gcd(m, stab_index) == 1 and e != 1:
                continue
            assert d * d * t * t <= index * (m - 1), "implied global inequality failed"
            out.append(RamificationTriple(k, e, t))
    out.sort(key=lambda triple: (triple.k, triple.e))
    return out


def lemma_scenarios() -> list[ScenarioResult]:
    """The scripted infeasibility suites for the hand-settled degree pairs.

    (i)   d=32,  e=8:  a 2-group normal subgroup of order 64..256 never fits.
    (ii)  d=48,  e=8:  an abelian normal subgroup of order 2, 4, 8 never fits.
    (iii) d=54,  e=9:  a normal subgroup of order 7 admits exactly (6, 9, 1),
          which dies once coprime extension forces e = 1.
    """
    out = []
    for m in (64, 128, 256):
        out.append(ScenarioResult(
            "(i)", f"d=32 e=8 |N|={m}", 1280, 32, m, {},
            feasible_ramifications(1280, 32, m), []))
    for m in (2, 4, 8):
        out.append(ScenarioResult(
            "(ii)", f"d=48 e=8 |N|={m} abelian", 2688, 48, m, {"n_abelian": True},
            feasible_ramifications(2688, 48, m, n_abelian=True), []))
    out.append(ScenarioResult(
        "(iii)", "d=54 e=9 |N|=7 abelian", 3402, 54, 7, {"n_abelian": True},
        feasible_ramifications(3402, 54, 7, n_abelian=True), [(6, 9, 1)]))
    out.append(ScenarioResult(
        "(iii)", "d=54 e=9 |N|=7 abelian, coprime extension", 3402, 54, 7,
        {"n_abelian": True, "coprime_extension": True},
        feasible_ramifications(3402, 54, 7, n_abelian=True, coprime_extension=True), []))
    return out
