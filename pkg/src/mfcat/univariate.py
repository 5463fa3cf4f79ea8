"""Dense univariate polynomial helpers over an exact field.

Internal representation: list of coefficients [c0, c1, ...] with no
trailing zeros (the zero polynomial is the empty list).  These lists feed
the Smith reduction, cokernel extraction, and resultant computations.
"""

from __future__ import annotations

from .fields import Field
from .poly import Poly, RingContext


def trim(field: Field, coeffs):
    out = list(coeffs)
    while out and field.is_zero(out[-1]):
        out.pop()
    return out

def is_zero(coeffs) -> bool:
    return not coeffs

def deg(coeffs):
    """Degree, or None for the zero polynomial."""
    return len(coeffs) - 1 if coeffs else None

def add(field: Field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero()
        y = b[i] if i < len(b) else field.zero()
        out.append(field.add(x, y))
    return trim(field, out)

def neg(field: Field, a):
    return [field.neg(x) for x in a]

def sub(field: Field, a, b):
    return add(field, a, neg(field, b))

def mul(field: Field, a, b):
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not field.is_zero(y):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return trim(field, out)

def scale(field: Field, c, a):
    return trim(field, [field.mul(c, x) for x in a])

def divmod_poly(field: Field, a, b):
    """Euclidean division: a = q*b + r with deg r < deg b."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    q = [field.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(r) >= len(b) and trim(field, r):
        r = trim(field, r)
        if len(r) < len(b):
            break
        shift = len(r) - len(b)
        factor = field.mul(r[-1], inv_lead)
        q[shift] = field.add(q[shift], factor)
        for i, y in enumerate(b):
            r[shift + i] = field.sub(r[shift + i], field.mul(factor, y))
    return trim(field, q), trim(field, r)

def mod(field: Field, a, b):
    return divmod_poly(field, a, b)[1]

def monic(field: Field, a):
    if not a:
        return []
    inv = field.inv(a[-1])
    return [field.mul(inv, x) for x in a]

def gcd(field: Field, a, b):
    a, b = trim(field, a), trim(field, b)
    while b:
        a, b = b, mod(field, a, b)
    return monic(field, a)

def divides(field: Field, a, b) -> bool:
    """Whether a divides b."""
    if not a:
        return not b
    return not mod(field, b, a)

def eval_at(field: Field, a, x):
    acc = field.zero()
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc

def derivative(field: Field, a):
    return trim(
        field, [field.mul(field.from_int(i), a[i]) for i in range(1, len(a))]
    )


def from_poly(p: Poly, var: str):
    return trim(p.ctx.field, p.univariate_coefficients(var))

def to_poly(ctx: RingContext, var: str, coeffs) -> Poly:
    i = ctx.var_index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        if not ctx.field.is_zero(c):
            exp = tuple(k if j == i else 0 for j in range(ctx.nvars))
            terms[exp] = c
    return Poly(ctx, terms)


def resultant(field: Field, f, g):
    """Resultant of two univariate polynomials via the Euclidean chain.

    Uses res(f, g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * res(g, r)
    with r = f mod g, plus the base cases for constants.
    """
    f, g = trim(field, f), trim(field, g)
    if not f or not g:
        return field.zero()
    acc = field.one()
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            # res(f, c) = c^deg f
            acc = field.mul(acc, _power(field, g[0], df))
            return acc
        r = mod(field, f, g)
        if not r:
            return field.zero()
        dr = len(r) - 1
        sign = field.one() if (df * dg) % 2 == 0 else field.neg(field.one())
        acc = field.mul(acc, field.mul(sign, _power(field, g[-1], df - dr)))
        f, g = g, r

def _power(field: Field, c, n: int):
    out = field.one()
    for _ in range(n):
        out = field.mul(out, c)
    return out


def lagrange_interpolate(field: Field, points):
    """The unique polynomial of degree < len(points) through the points.

    points: list of (x, y) with distinct x.
    """
    result = []
    for i, (xi, yi) in enumerate(points):
        basis = [field.one()]
        denom = field.one()
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = mul(field, basis, [field.neg(xj), field.one()])
            denom = field.mul(denom, field.sub(xi, xj))
        factor = field.div(yi, denom)
        result = add(field, result, scale(field, factor, basis))
    return result
