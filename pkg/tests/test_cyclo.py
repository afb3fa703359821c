import math
from fractions import Fraction

import pytest

from chartab import (
    ONE,
    ZERO,
    Cyclotomic,
    format_cyclotomic,
    parse_cyclotomic,
    root_of_unity,
)
from chartab.errors import LiteralError, NotCoprime


def test_root_of_unity_identity():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(1, 0).conductor == 1


def test_root_of_unity_i():
    i = root_of_unity(4, 1)
    assert i.conductor == 4
    assert i * i == -1


def test_zeta2_is_rational_minus_one():
    z = root_of_unity(2, 1)
    assert z == -1
    assert z.conductor == 1


def test_conductor_is_minimized():
    assert root_of_unity(6).conductor == 3
    assert root_of_unity(12, 3).conductor == 4
    assert root_of_unity(8, 2) == root_of_unity(4)


def test_add_primitive_cube_roots():
    assert root_of_unity(3) + root_of_unity(3, 2) == -1


def test_additive_inverse():
    x = root_of_unity(7) + Fraction(1, 2)
    assert x + (-x) == ZERO
    assert (x - x).is_zero()


def test_conjugate_of_root():
    assert root_of_unity(8).conjugate() == root_of_unity(8, 7)


def test_conjugate_fixes_rationals_and_is_involution():
    r = Cyclotomic.from_rational(Fraction(-7, 3))
    assert r.conjugate() == r
    x = root_of_unity(5) + 2 * root_of_unity(8, 3)
    assert x.conjugate().conjugate() == x


def test_galois_on_root():
    assert root_of_unity(5).galois_apply(2) == root_of_unity(5, 2)


def test_galois_identity_and_rational_fixed():
    x = root_of_unity(9) + 1
    assert x.galois_apply(1) == x
    y = root_of_unity(3) + root_of_unity(3, 2)
    assert y.galois_apply(2) == y == -1


def test_galois_not_coprime():
    with pytest.raises(NotCoprime):
        root_of_unity(9).galois_apply(3)


def test_abs_squared():
    assert (1 + root_of_unity(4)).abs_squared() == 2
    assert ZERO.abs_squared() == ZERO
    assert root_of_unity(7, 3).abs_squared() == 1


def test_as_rational():
    assert (root_of_unity(3) + root_of_unity(3, 2)).as_rational() == -1
    assert root_of_unity(5).as_rational() is None
    assert ZERO.as_rational() == 0


def test_is_algebraic_integer():
    assert not Cyclotomic.from_rational(Fraction(1, 2)).is_algebraic_integer()
    assert (root_of_unity(8) + root_of_unity(8, 3)).is_algebraic_integer()
    assert (root_of_unity(5) / 3).is_algebraic_integer() is False


def test_approx_complex():
    assert abs(root_of_unity(4).approx_complex() - 1j) < 1e-12
    assert abs(Cyclotomic.from_rational(-1).approx_complex() - (-1.0)) < 1e-12


def test_division_exact():
    a = 3 + root_of_unity(5)
    b = root_of_unity(5, 2) - 2
    assert (a / b) * b == a
    assert (a * 7) / a == 7
    with pytest.raises(ZeroDivisionError):
        a / ZERO


def test_golden_ratio_arithmetic():
    x = root_of_unity(5) + root_of_unity(5, 4)
    assert x * x + x == 1


def test_sqrt2():
    s = root_of_unity(8) + root_of_unity(8, 7)
    assert s * s == 2


def test_pow():
    z = root_of_unity(7)
    assert z**7 == 1
    assert z**-1 == z.conjugate()
    assert (2 * ONE) ** 5 == 32


def test_real_sign():
    phi = -(root_of_unity(5, 2) + root_of_unity(5, 3))
    assert (3 - phi).real_sign() == 1
    assert (phi - 3).real_sign() == -1
    assert ZERO.real_sign() == 0
    with pytest.raises(ValueError):
        root_of_unity(3).real_sign()


def test_canonical_basis_forms():
    # 1 in Q(zeta_3) is -z - z^2, so the plain exponent never appears.
    assert root_of_unity(9).coeffs() == {4: Fraction(-1), 7: Fraction(-1)}
    assert root_of_unity(12).coeffs() == {7: Fraction(-1)}


@pytest.mark.parametrize("text,value", [
    ("1", ONE),
    ("-1", -ONE),
    ("E(4)", root_of_unity(4)),
    ("E(8)+E(8)^3", root_of_unity(8) + root_of_unity(8, 3)),
    ("1/2*E(3)", Fraction(1, 2) * root_of_unity(3)),
    ("2/4", Cyclotomic.from_rational(Fraction(1, 2))),
    ("-(E(5)^2)", -root_of_unity(5, 2)),
    ("(1+E(4))*(1-E(4))", Cyclotomic.from_rational(2)),
    ("-1*E(5)^2", -root_of_unity(5, 2)),
])
def test_parse_literals(text, value):
    assert parse_cyclotomic(text) == value


def test_unary_minus_binds_at_atom_level():
    # "-E(5)^2" is (-E(5))^2 by the grammar.
    assert parse_cyclotomic("-E(5)^2") == root_of_unity(5, 2)


@pytest.mark.parametrize("text", ["", "E(", "E(0)", "1/0", "1+", "E(4)^", "2 2", "x"])
def test_parse_errors(text):
    with pytest.raises(LiteralError):
        parse_cyclotomic(text)


def test_serialize_rational_normal_form():
    assert format_cyclotomic(parse_cyclotomic("E(2)")) == "-1"
    assert format_cyclotomic(root_of_unity(4)) == "E(4)"
    assert format_cyclotomic(ZERO) == "0"


def test_serialize_parse_round_trip_examples():
    for text in ("E(4)", "E(8)+E(8)^3", "-1*E(9)^4-E(9)^7", "5/3", "-2"):
        x = parse_cyclotomic(text)
        assert parse_cyclotomic(format_cyclotomic(x)) == x


def test_lcm_conductor_arithmetic():
    x = root_of_unity(3) * root_of_unity(4)
    assert x.conductor == 12
    assert x == root_of_unity(12, 7)
    assert math.gcd(x.conductor, 2) == 2
