"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Every value is a rational linear combination of roots of unity, stored in a
canonical integral basis of its field (a Zumbroich-style basis) with the
conductor minimized after each operation.  Two values are therefore equal
exactly when their (conductor, coefficient) data coincide, and a value is an
algebraic integer exactly when all coefficients are integers.

The basis of Q(zeta_n): write n = prod p^v(p) and split an exponent e into
its Chinese-remainder coordinates j_p = e * (n/p^v)^{-1} mod p^v, so that
zeta_n^e = prod_p zeta_{p^v}^{j_p}.  The basis consists of the zeta_n^e whose
coordinates satisfy, per prime,

    p = 2:  0 <= j_2 < 2^(v-1)
    p odd:  p^(v-1) <= j_p < p^v

Rewriting into the basis uses zeta_{2^v}^j = -zeta_{2^v}^(j - 2^(v-1)) and,
for odd p, zeta_{p^v}^j = -sum_b zeta_{p^v}^(j + b p^(v-1)), b = 1..p-1.
Adding a multiple of n/p^v to e shifts j_p by that multiple and leaves every
other coordinate alone, which makes both rules one-step in exponent space.

Nothing in this module touches floating point except the explicitly
approximate helpers (`approx_complex`) and the sign test for totally real
values (`real_sign`), which evaluates with enough guaranteed precision that
the resulting sign is still exact.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .arith import factorize, phi, units
from .errors import LiteralError, NotCoprime

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def _layout(n: int):
    """Per-prime reduction data for conductor n: (p, p^v, p^(v-1), n/p^v, crt_inverse)."""
    out = []
    for p, v in factorize(n):
        pv = p**v
        m = n // pv
        out.append((p, pv, pv // p, m, pow(m, -1, pv)))
    return tuple(out)


def _reduce(n: int, terms) -> dict:
    """Rewrite an arbitrary exponent->coefficient map into the canonical basis of Q(zeta_n)."""
    layout = _layout(n)
    out: dict[int, Fraction] = {}
    for e, coeff in terms.items():
        if not coeff:
            continue
        e %= n
        shifts = []
        sign = 1
        for p, pv, half, m, inv in layout:
            j = (e * inv) % pv
            if p == 2:
                if j >= half:
                    sign = -sign
                    shifts.append((-half * m,))
            elif j < half:
                sign = -sign
                shifts.append(tuple(b * half * m for b in range(1, p)))
        if not shifts:
            c = out.get(e, _ZERO) + coeff
            if c:
                out[e] = c
            else:
                out.pop(e, None)
            continue
        val = coeff if sign > 0 else -coeff
        for combo in itertools.product(*shifts):
            e2 = (e + sum(combo)) % n
            c = out.get(e2, _ZERO) + val
            if c:
                out[e2] = c
            else:
                out.pop(e2, None)
    return out


def _minimize(n: int, coeffs: dict) -> tuple[int, dict]:
    """Descend a canonical representation to its minimal conductor (never 2 mod 4)."""
    if not coeffs:
        return 1, {}
    changed = True
    while changed and n > 1:
        changed = False
        for p, pv, half, m, inv in _layout(n):
            if pv > p or p == 2:
                # The p-coordinate of e is divisible by p iff e is; halving the
                # prime's level then just divides every exponent by p.
                if all(e % p == 0 for e in coeffs):
                    coeffs = {e // p: c for e, c in coeffs.items()}
                    n //= p
                    changed = True
                    break
            else:
                # Removing an odd prime of level one: group terms sharing all
                # other coordinates; each group must carry all p-1 nonzero
                # p-coordinates with one common coefficient c, and then it
                # collapses to -c times the group's p-coordinate-zero member.
                groups: dict[int, dict] = {}
                for e, c in coeffs.items():
                    groups.setdefault(e % m, {})[e] = c
                ok = True
                newc = {}
                for key, grp in groups.items():
                    if len(grp) != p - 1 or len(set(grp.values())) != 1:
                        ok = False
                        break
                    b0 = (-key * pow(m, -1, p)) % p
                    estar = key + b0 * m
                    newc[estar // p] = -next(iter(grp.values()))
                if ok:
                    coeffs = newc
                    n = m
                    changed = True
                    break
    return n, coeffs


def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected an integer or Fraction, got {type(q).__name__}")


class Cyclotomic:
    """An exact element of some cyclotomic field, always in canonical form.

    Instances are immutable; all operations return new values.  Mixed
    arithmetic with int and Fraction works; float operands are rejected.
    """

    __slots__ = ("_n", "_c")

    def __init__(self, n: int, coeffs: dict, _canonical: bool = False):
        if not _canonical:
            coeffs = {e: _as_fraction(c) for e, c in coeffs.items()}
            n, coeffs = _minimize(n, _reduce(n, coeffs))
        self._n = n
        self._c = coeffs

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "Cyclotomic":
        q = _as_fraction(q)
        return Cyclotomic(1, {0: q} if q else {}, _canonical=True)

    # -- basic queries -----------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    def coeffs(self) -> dict:
        """Copy of the canonical exponent -> Fraction map."""
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_rational(self) -> bool:
        return self._n == 1

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction, or None when it is irrational."""
        if self._n != 1:
            return None
        return self._c.get(0, _ZERO)

    def is_algebraic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self._c.values())

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._n == 1 and other._n == 1:
            return Cyclotomic.from_rational(
                self._c.get(0, _ZERO) + other._c.get(0, _ZERO))
        n = math.lcm(self._n, other._n)
        merged = dict(self._lifted(n))
        for e, c in other._lifted(n).items():
            s = merged.get(e, _ZERO) + c
            if s:
                merged[e] = s
            else:
                del merged[e]
        n, merged = _minimize(n, merged)
        return Cyclotomic(n, merged, _canonical=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Cyclotomic(self._n, {e: -c for e, c in self._c.items()}, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._n == 1:
            return other._scaled(self._c.get(0, _ZERO))
        if other._n == 1:
            return self._scaled(other._c.get(0, _ZERO))
        n = math.lcm(self._n, other._n)
        a = self._lifted(n)
        b = other._lifted(n)
        prod: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1 + e2) % n
                s = prod.get(e, _ZERO) + c1 * c2
                if s:
                    prod[e] = s
                else:
                    del prod[e]
        n, prod = _minimize(n, _reduce(n, prod))
        return Cyclotomic(n, prod, _canonical=True)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic")
        if other._n == 1:
            return self._scaled(1 / other._c[0])
        # Multiply by every nontrivial conjugate of the divisor; the divisor
        # times that product is its field norm, a nonzero rational.
        num = _ONE
        for j in units(other._n):
            if j != 1:
                num = num * other.galois_apply(j)
        norm = (other * num).as_rational()
        if norm is None or norm == 0:
            raise ArithmeticError("field norm computation failed")
        return (self * num)._scaled(1 / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return _ONE / self.__pow__(-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- field symmetries ----------------------------------------------------

    def galois_apply(self, j: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^j; j must be coprime to the conductor."""
        n = self._n
        if math.gcd(j, n) != 1:
            raise NotCoprime(f"{j} is not coprime to the conductor {n}")
        if n == 1:
            return self
        c = _reduce(n, {(e * j) % n: co for e, co in self._c.items()})
        # Automorphisms preserve every cyclotomic subfield, so the conductor
        # is already minimal.
        return Cyclotomic(n, c, _canonical=True)

    def conjugate(self) -> "Cyclotomic":
        if self._n == 1:
            return self
        return self.galois_apply(self._n - 1)

    def abs_squared(self) -> "Cyclotomic":
        """x * conj(x); totally real, rational whenever x is."""
        return self * self.conjugate()

    # -- approximate views -------------------------------------------------

    def approx_complex(self, digits: int = 12) -> complex:
        """Floating approximation good to 10**-digits (diagnostics only)."""
        n = self._n
        if digits <= 12:
            return sum(
                (float(c) * cmath.exp(2j * cmath.pi * e / n) for e, c in self._c.items()),
                complex(0),
            )
        import mpmath

        with mpmath.workdps(digits + 15):
            tau = 2 * mpmath.pi
            val = mpmath.fsum((mpmath.mpf(c.numerator) / c.denominator)
                              * mpmath.cos(tau * e / n) for e, c in self._c.items())
            ival = mpmath.fsum((mpmath.mpf(c.numerator) / c.denominator)
                               * mpmath.sin(tau * e / n) for e, c in self._c.items())
            return complex(float(val), float(ival))

    def real_sign(self) -> int:
        """Exact sign (-1, 0, 1) of a totally real value.

        Decided numerically but with guaranteed precision: a nonzero value t
        with denominator bound D satisfies |t| >= 1 / (D^phi * prod of
        conjugate bounds), so evaluating well below that separation makes the
        sign certain.
        """
        if self.is_zero():
            return 0
        if self._n == 1:
            q = self._c[0]
            return 1 if q > 0 else -1
        if not self.is_real():
            raise ValueError("real_sign is only defined for real values")
        import mpmath

        n = self._n
        den = math.lcm(*(c.denominator for c in self._c.values()))
        log2_bound = phi(n) * math.log2(den) if den > 1 else 0.0
        for j in units(n):
            if j == 1:
                continue
            s = sum(abs(c) for c in self.galois_apply(j)._c.values())
            log2_bound += math.log2(float(s)) if s > 1 else 0.0
        own = sum(abs(c) for c in self._c.values())
        prec = int(log2_bound + (math.log2(float(own)) if own > 1 else 0)) + 64 + 4 * len(self._c)
        with mpmath.workprec(prec):
            tau = 2 * mpmath.pi
            val = mpmath.fsum((mpmath.mpf(c.numerator) / c.denominator)
                              * mpmath.cos(tau * e / n) for e, c in self._c.items())
            threshold = mpmath.mpf(2) ** (-int(log2_bound) - 8)
            if val > threshold:
                return 1
            if val < -threshold:
                return -1
        raise ArithmeticError("sign evaluation fell below the separation bound")

    # -- plumbing ------------------------------------------------------------

    def _lifted(self, n: int) -> dict:
        if n == self._n:
            return self._c
        q = n // self._n
        return _reduce(n, {e * q: c for e, c in self._c.items()})

    def _scaled(self, q: Fraction) -> "Cyclotomic":
        if not q:
            return ZERO
        if q == 1:
            return self
        return Cyclotomic(self._n, {e: c * q for e, c in self._c.items()}, _canonical=True)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._n == other._n and self._c == other._c

    def __hash__(self):
        return hash((self._n, frozenset(self._c.items())))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return format_cyclotomic(self)


ZERO = Cyclotomic(1, {}, _canonical=True)
_ONE = Cyclotomic(1, {0: Fraction(1)}, _canonical=True)
ONE = _ONE


def _coerce(x) -> Cyclotomic | None:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.from_rational(x)
    return None


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form; the conductor divides n."""
    if n < 1:
        raise ValueError(f"root_of_unity needs n >= 1, got {n}")
    return Cyclotomic(n, {k % n: Fraction(1)})


# --- literal grammar ---------------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := atom ('^' INT)?
# atom   := INT | INT '/' INT | 'E(' INT ')' | '(' expr ')' | '-' atom


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise LiteralError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, allow_sign=False) -> int:
        self.skip_ws()
        start = self.pos
        if allow_sign and self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self) -> Cyclotomic:
        value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> Cyclotomic:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> Cyclotomic:
        value = self.atom()
        if self.peek() == "^":
            self.pos += 1
            value = value ** self.integer(allow_sign=True)
        return value

    def atom(self) -> Cyclotomic:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.take(")")
            return value
        if ch == "E":
            self.pos += 1
            self.take("(")
            n = self.integer()
            self.take(")")
            if n < 1:
                self.error("E(n) needs n >= 1")
            return root_of_unity(n)
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                return Cyclotomic.from_rational(Fraction(num, den))
            return Cyclotomic.from_rational(num)
        self.error("expected a value")


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse a literal like "1", "-1/2", "E(4)", "E(8)+E(8)^3", "1/2*E(3)"."""
    p = _Parser(text)
    value = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing characters")
    return value


def _format_term(n: int, e: int, c: Fraction, leading: bool) -> str:
    if e == 0:
        return str(c)
    base = f"E({n})" if e == 1 else f"E({n})^{e}"
    if c == 1:
        return base
    if c == -1:
        # "-E(n)^k" would parse as (-E(n))^k since unary minus binds at the
        # atom level; a leading term needs the coefficient spelled out.
        return f"-1*{base}" if leading and e != 1 else "-" + base
    return f"{c}*{base}"


def format_cyclotomic(x: Cyclotomic) -> str:
    """Canonical literal; rationals print as plain fractions ("-1", not "E(2)")."""
    if x.is_zero():
        return "0"
    if x.conductor == 1:
        return str(x.as_rational())
    items = sorted(x.coeffs().items())
    parts = [_format_term(x.conductor, e, c, i == 0) for i, (e, c) in enumerate(items)]
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out
