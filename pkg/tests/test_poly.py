from fractions import Fraction

import pytest

from mfcat import QQ, PrimeField, RingContext, parse_poly


ZX = RingContext(QQ, ("z", "x"))


def test_parse_and_format_roundtrip():
    p = parse_poly(ZX, "3/2*z*x - 1")
    assert str(p) == "3/2*z*x - 1"
    assert parse_poly(ZX, str(p)) == p


def test_parse_over_prime_field():
    ctx = RingContext(PrimeField(7), ("z", "x"))
    p = parse_poly(ctx, "3/2*z*x - 1")
    # 3/2 = 3 * inv(2) = 5 and -1 = 6 in F_7
    assert str(p) == "5*z*x + 6"


def test_parse_errors_carry_positions():
    with pytest.raises(ValueError, match=r"parse-error.*position"):
        parse_poly(ZX, "z + * x")
    with pytest.raises(ValueError, match=r"unknown-variable: 'q' at position 0"):
        parse_poly(ZX, "q + 1")
    with pytest.raises(ValueError, match="malformed-exponent"):
        parse_poly(ZX, "z^")
    with pytest.raises(ValueError, match="malformed-exponent"):
        parse_poly(ZX, "z^-2")
    with pytest.raises(ValueError, match="non-invertible-denominator"):
        parse_poly(ZX, "1/0")


def test_parse_accepts_whitespace_and_parens():
    assert parse_poly(ZX, "(z + 1)*(z - 1)") == parse_poly(ZX, "z^2 - 1")
    assert parse_poly(ZX, "  z ^ 2  -  1 ") == parse_poly(ZX, "z^2-1")
    assert parse_poly(ZX, "-(z - x)") == parse_poly(ZX, "x - z")


def test_arithmetic():
    z = ZX.variable("z")
    x = ZX.variable("x")
    p = (z + x) * (z - x)
    assert p == z**2 - x**2
    assert (p - p).is_zero()
    assert (z + 1) ** 3 == parse_poly(ZX, "z^3 + 3*z^2 + 3*z + 1")
    assert z * 0 == ZX.zero()
    assert (2 * z).scale(Fraction(1, 2)) == z


def test_degree_and_weighted_degree():
    ctx = RingContext(QQ, ("z", "x", "y"), weights=(2, 3, 3))
    w = parse_poly(ctx, "z^3 + x*y")
    assert w.degree() == 3
    assert w.weighted_degree() == 6
    assert w.is_quasi_homogeneous()
    bad = parse_poly(ctx, "z^3 + x")
    assert not bad.is_quasi_homogeneous()
    assert bad.weighted_degrees() == {6, 3}


def test_partial_derivative():
    ctx = RingContext(QQ, ("z", "x"))
    p = parse_poly(ctx, "z^3*x - 2*z + x^2")
    assert p.partial_derivative("z") == parse_poly(ctx, "3*z^2*x - 2")
    assert p.partial_derivative("x") == parse_poly(ctx, "z^3 + 2*x")
    with pytest.raises(ValueError, match="unknown-variable"):
        p.partial_derivative("q")


def test_term_order_is_graded():
    # Higher total degree prints first; ties broken lexicographically.
    p = parse_poly(ZX, "1 + z + x^2 + z*x")
    assert str(p) == "z*x + x^2 + z + 1"


def test_univariate_coefficients():
    ctx = RingContext(QQ, ("z",))
    p = parse_poly(ctx, "z^3 - 3*z")
    coeffs = p.univariate_coefficients("z")
    assert list(coeffs) == [0, -3, 0, 1]
    multi = parse_poly(ZX, "z*x")
    with pytest.raises(ValueError):
        multi.univariate_coefficients("z")


def test_context_mismatch_rejected():
    other = RingContext(QQ, ("z",))
    with pytest.raises(ValueError, match="context-mismatch"):
        parse_poly(ZX, "z") + parse_poly(other, "z")


def test_context_validation():
    with pytest.raises(ValueError, match="variable-collision"):
        RingContext(QQ, ("z", "z"))
    with pytest.raises(ValueError, match="shape-mismatch"):
        RingContext(QQ, ("z", "x"), weights=(1,))
    with pytest.raises(ValueError, match="shape-mismatch"):
        RingContext(QQ, ("z",), weights=(0,))
    with pytest.raises(ValueError, match="unknown-variable"):
        RingContext(QQ, ("2bad",))


def test_exponent_limit():
    ctx = RingContext(QQ, ("z",))
    with pytest.raises(ValueError, match="malformed-exponent"):
        parse_poly(ctx, "z^9999999999")
