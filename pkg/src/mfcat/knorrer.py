"""Stabilization by one hyperbolic plane: tensoring a factorization of W
with the rank-one factorization (x, y) of x*y produces a factorization of
W + x*y in two more variables.  On morphism spaces this operation is an
equivalence, which the verification helpers check dimension by dimension.
"""

from __future__ import annotations

import math
from typing import Optional, Tuple

from .factorization import MatrixFactorization, MFMorphism, mf_new, morphism_new
from .matrices import PolyMatrix
from .poly import Poly, RingContext


def extended_context(
    ctx: RingContext, x_var: str, y_var: str, dw: Optional[int]
) -> RingContext:
    """Context with the two hyperbolic variables appended.

    With weights configured the new variables split the fiber degree dw as
    evenly as integers allow, keeping x*y homogeneous of degree dw; that
    needs dw >= 2.
    """
    if x_var == y_var or x_var in ctx.variables or y_var in ctx.variables:
        raise ValueError(
            f"variable-collision: {x_var!r}, {y_var!r} against {ctx.variables}"
        )
    variables = ctx.variables + (x_var, y_var)
    weights = None
    if ctx.weights is not None:
        if dw is None or dw < 2:
            raise ValueError(
                "non-quasi-homogeneous: hyperbolic extension needs fiber degree >= 2"
            )
        weights = ctx.weights + (math.ceil(dw / 2), math.floor(dw / 2))
    return RingContext(field=ctx.field, variables=variables, weights=weights, w0=ctx.w0)


def knorrer(
    m: MatrixFactorization, x_var: str = "x", y_var: str = "y"
) -> MatrixFactorization:
    """Tensor with the rank-one factorization (x, y) of x*y.

    Sends (p1, p0) of rank n to the rank-2n factorization
        k1 = [[p1, -y], [x, p0]],   k0 = [[p0, y], [-x, p1]]
    of W + x*y over the extended ring.
    """
    ctx = m.ctx
    dw = None
    if ctx.weights is not None:
        if not m.w.is_quasi_homogeneous():
            raise ValueError("non-quasi-homogeneous: fiber polynomial")
        dw = m.w.weighted_degree()
    big = extended_context(ctx, x_var, y_var, dw)

    def lift(mat: PolyMatrix) -> PolyMatrix:
        rows = [
            [
                Poly(big, {exp + (0, 0): c for exp, c in p.terms.items()})
                for p in row
            ]
            for row in mat.entries
        ]
        return PolyMatrix(big, rows, cols=mat.cols)

    n = m.rank
    xm = PolyMatrix.scalar(big, big.variable(x_var), n)
    ym = PolyMatrix.scalar(big, big.variable(y_var), n)
    p1 = lift(m.p1)
    p0 = lift(m.p0)
    k1 = PolyMatrix.block([[p1, -ym], [xm, p0]])
    k0 = PolyMatrix.block([[p0, ym], [-xm, p1]])
    w_total = Poly(big, {exp + (0, 0): c for exp, c in m.w.terms.items()})
    w_total = w_total + big.variable(x_var) * big.variable(y_var) + big.constant(big.w0)
    return mf_new(big, w_total, k1, k0)


def knorrer_morphism(
    f: MFMorphism, x_var: str = "x", y_var: str = "y"
) -> MFMorphism:
    """The functor on morphisms: block-diagonal extension (f1 + f0 on odd,
    f0 + f1 on even)."""
    kx = knorrer(f.source, x_var, y_var)
    ky = knorrer(f.target, x_var, y_var)
    big = kx.ctx

    def lift(mat: PolyMatrix) -> PolyMatrix:
        rows = [
            [
                Poly(big, {exp + (0, 0): c for exp, c in p.terms.items()})
                for p in row
            ]
            for row in mat.entries
        ]
        return PolyMatrix(big, rows, cols=mat.cols)

    f1 = lift(f.f1)
    f0 = lift(f.f0)
    zero_tf = PolyMatrix.zero(big, f.target.rank, f.source.rank)
    g1 = PolyMatrix.block([[f1, zero_tf], [zero_tf, f0]])
    g0 = PolyMatrix.block([[f0, zero_tf], [zero_tf, f1]])
    return morphism_new(kx, ky, g1, g0)
