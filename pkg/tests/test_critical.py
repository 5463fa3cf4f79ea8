from fractions import Fraction

import pytest

from mfcat import QQ, PrimeField, RingContext, critical_values, parse_poly


CTX = RingContext(QQ, ("z",))
F = Fraction


def test_cubic_with_two_rational_values():
    vals, has_irr = critical_values(parse_poly(CTX, "z^3 - 3*z"))
    assert vals == [F(-2), F(2)]
    assert not has_irr


def test_constant_shift_moves_values():
    vals, has_irr = critical_values(parse_poly(CTX, "z^3 - 3*z + 1"))
    assert vals == [F(-1), F(3)]
    assert not has_irr


def test_pure_power():
    vals, has_irr = critical_values(parse_poly(CTX, "z^5"))
    assert vals == [F(0)]
    assert not has_irr


def test_degenerate_critical_point():
    # z = 0 is a double critical point of z^4 - 2z^2; values are 0 and -1
    vals, has_irr = critical_values(parse_poly(CTX, "z^4 - 2*z^2"))
    assert vals == [F(-1), F(0)]
    assert not has_irr


def test_rational_coefficients():
    # W = z^2 - z has its only critical point at z = 1/2
    vals, has_irr = critical_values(parse_poly(CTX, "z^2 - z"))
    assert vals == [F(-1, 4)]
    assert not has_irr


def test_irrational_remainder_detected():
    # critical points of z^4 - 4z are the cube roots of unity; only z = 1
    # gives a rational value
    vals, has_irr = critical_values(parse_poly(CTX, "z^4 - 4*z"))
    assert vals == [F(-3)]
    assert has_irr


def test_all_values_irrational():
    # z^3 - z has critical points +-1/sqrt(3)
    vals, has_irr = critical_values(parse_poly(CTX, "z^3 - z"))
    assert vals == []
    assert has_irr


def test_input_validation():
    with pytest.raises(ValueError, match="constant-superpotential"):
        critical_values(parse_poly(CTX, "7"))
    with pytest.raises(ValueError, match="constant-superpotential"):
        critical_values(parse_poly(CTX, "0"))
    two_vars = RingContext(QQ, ("z", "x"))
    with pytest.raises(ValueError, match="not-univariate"):
        critical_values(parse_poly(two_vars, "z*x"))
    fp = RingContext(PrimeField(5), ("z",))
    with pytest.raises(ValueError, match="context-mismatch"):
        critical_values(parse_poly(fp, "z^3"))


def test_values_verified_against_fiber():
    # every reported value really is singular: gcd(W - v, W') nonconstant
    from mfcat import univariate as uni

    w = parse_poly(CTX, "z^3 - 3*z")
    vals, _ = critical_values(w)
    coeffs = uni.from_poly(w, "z")
    deriv = uni.derivative(QQ, coeffs)
    for v in vals:
        shifted = list(coeffs)
        shifted[0] -= v
        g = uni.gcd(QQ, shifted, deriv)
        assert uni.deg(g) >= 1
