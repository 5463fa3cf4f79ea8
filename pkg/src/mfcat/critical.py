"""Critical values of a univariate superpotential over the rationals.

The values w where the fiber W - w is singular are the roots of the
discriminant-type resultant R(w) = Res_z(W - w, W').  R is computed by
evaluating the resultant at enough sample values of w and interpolating;
its rational roots are found by the rational root theorem and each one is
verified directly through a gcd computation on the fiber.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from . import univariate as uni
from .fields import QQ, RationalField
from .poly import Poly


def _integer_divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    out.sort()
    return out


def _rational_roots(field: RationalField, coeffs: List[Fraction]) -> List[Fraction]:
    """All rational roots of the polynomial with the given coefficients."""
    coeffs = uni.trim(field, coeffs)
    if not coeffs:
        raise ValueError("zero-superpotential: resultant vanished identically")
    # Strip powers of w dividing the polynomial; they contribute the root 0.
    low = 0
    while field.is_zero(coeffs[low]):
        low += 1
    roots = []
    if low > 0:
        roots.append(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return roots
    # Clear denominators to get integer coefficients.
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    content = 0
    for c in ints:
        content = _gcd(content, abs(c))
    if content > 1:
        ints = [c // content for c in ints]
    lead = ints[-1]
    const = ints[0]
    for p in _integer_divisors(const):
        for q in _integer_divisors(lead):
            for sign in (1, -1):
                cand = Fraction(sign * p, q)
                if cand in roots:
                    continue
                if _eval_int_poly(ints, cand) == 0:
                    roots.append(cand)
    roots.sort()
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _eval_int_poly(coeffs: List[int], value: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


def critical_values(w: Poly) -> Tuple[List[Fraction], bool]:
    """Rational critical values of w, plus a flag for irrational ones.

    Returns (values, has_irrational) where values lists the rational roots
    of Res_z(W - t, W') in increasing order, each verified by checking
    that gcd(W - value, W') is nonconstant.
    """
    ctx = w.ctx
    if not isinstance(ctx.field, RationalField):
        raise ValueError("context-mismatch: critical values need the rational field")
    if len(ctx.variables) != 1:
        raise ValueError("not-univariate: critical values need one variable")
    if w.is_zero() or w.is_constant():
        raise ValueError("constant-superpotential: no critical fiber structure")
    field = ctx.field
    wc = uni.from_poly(w, ctx.variables[0])
    deriv = uni.derivative(field, wc)
    if uni.is_zero(deriv):
        raise ValueError("constant-superpotential: derivative vanishes identically")
    # R(t) = Res_z(W - t, W') has degree at most deg(W') in t; sample at
    # deg(W') + 2 points and interpolate.
    npoints = (uni.deg(deriv) or 0) + 2
    points = []
    for k in range(npoints):
        t = field.from_int(k)
        shifted = list(wc)
        shifted[0] = field.sub(shifted[0], t)
        points.append((t, uni.resultant(field, shifted, deriv)))
    r_coeffs = uni.lagrange_interpolate(field, points)
    roots = _rational_roots(field, r_coeffs)
    verified = []
    for value in roots:
        shifted = list(wc)
        shifted[0] = field.sub(shifted[0], field.coerce(value))
        g = uni.gcd(field, shifted, deriv)
        if (uni.deg(g) or 0) >= 1:
            verified.append(value)
    # Roots of the resultant not explained by rational critical values
    # signal irrational ones: divide out each verified root completely.
    work = uni.trim(field, r_coeffs)
    for value in verified:
        factor = [field.sub(field.zero(), field.coerce(value)), field.one()]
        while (uni.deg(work) or 0) >= 1:
            quot, rem = uni.divmod_poly(field, work, factor)
            if uni.is_zero(rem):
                work = quot
            else:
                break
    has_irrational = (uni.deg(work) or 0) >= 1
    return verified, has_irrational
