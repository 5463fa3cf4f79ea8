"""Matrix factorizations of a shifted superpotential and their morphisms.

An object is a pair of square polynomial matrices (p1, p0) of equal rank
with p1 * p0 = p0 * p1 = (W - w0) * I.  Rank zero is the zero object.
Morphisms are pairs (f1, f0) satisfying f1 * p0 = q0 * f0 and
q1 * f1 = f0 * p1; a homotopy (s, t) between f and g certifies
f - g = (q0 t + s p1, t p0 + q1 s).  The translation X[1] swaps the two
modules and negates both maps; on morphisms it swaps the components, and
applying it twice is literally the identity.

The mapping cone of f : X -> Y is the factorization

    c1 = [[q1, f0], [0, -p0]]       c0 = [[q0, f1], [0, -p1]]

on Y1 + X0 and Y0 + X1, with the inclusion g = (id, 0) and the projection
h = (0, -id) onto X[1]; these identities are verified exactly wherever
they are constructed.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .matrices import PolyMatrix
from .poly import Poly, RingContext


class MatrixFactorization:
    """Pair of matrices multiplying to (W - w0) times the identity."""

    __slots__ = ("ctx", "w", "rank", "p1", "p0")

    def __init__(self, ctx: RingContext, w: Poly, rank: int, p1: PolyMatrix, p0: PolyMatrix):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p0", p0)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixFactorization is immutable")

    def is_zero_object(self) -> bool:
        return self.rank == 0

    def __eq__(self, other):
        if not isinstance(other, MatrixFactorization):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.w == other.w
            and self.rank == other.rank
            and self.p1 == other.p1
            and self.p0 == other.p0
        )

    def __repr__(self):
        return f"MatrixFactorization(rank={self.rank}, W={self.w})"


def mf_new(ctx: RingContext, w_total: Poly, p1: PolyMatrix, p0: PolyMatrix) -> MatrixFactorization:
    """Validate and build a factorization of W - w0 over the context.

    `w_total` is the unshifted superpotential; the stored fiber polynomial
    is W - w0 and must be nonzero.
    """
    if w_total.ctx != ctx:
        raise ValueError("context-mismatch: W from a different context")
    if p1.ctx != ctx or p0.ctx != ctx:
        raise ValueError("context-mismatch: matrices from a different context")
    w = w_total - ctx.constant(ctx.w0)
    if w.is_zero():
        raise ValueError("zero-superpotential: W - w0 must be nonzero")
    if p1.rows != p1.cols or p0.rows != p0.cols or p1.rows != p0.rows:
        raise ValueError(
            f"invalid-shape: need equal square shapes, got {p1.rows}x{p1.cols} and {p0.rows}x{p0.cols}"
        )
    rank = p1.rows
    w_ident = PolyMatrix.scalar(ctx, w, rank)
    prod10 = p1 @ p0
    if prod10 != w_ident:
        raise ValueError(
            "not-a-factorization: p1 * p0 differs from (W - w0) * I; "
            f"first offending entry {_first_difference(prod10, w_ident)}"
        )
    prod01 = p0 @ p1
    if prod01 != w_ident:
        raise ValueError(
            "not-a-factorization: p0 * p1 differs from (W - w0) * I; "
            f"first offending entry {_first_difference(prod01, w_ident)}"
        )
    return MatrixFactorization(ctx, w, rank, p1, p0)


def _first_difference(a: PolyMatrix, b: PolyMatrix) -> str:
    for i in range(a.rows):
        for j in range(a.cols):
            if a.entries[i][j] != b.entries[i][j]:
                return f"({i},{j}): {a.entries[i][j] - b.entries[i][j]}"
    return "(none)"


def mf_from_polys(ctx: RingContext, w_total: Poly, p1_entries, p0_entries) -> MatrixFactorization:
    p1 = PolyMatrix(ctx, [[_as_poly(ctx, e) for e in row] for row in p1_entries])
    p0 = PolyMatrix(ctx, [[_as_poly(ctx, e) for e in row] for row in p0_entries])
    return mf_new(ctx, w_total, p1, p0)


def _as_poly(ctx: RingContext, e) -> Poly:
    if isinstance(e, Poly):
        return e
    if isinstance(e, str):
        return ctx.parse(e)
    return ctx.constant(e)


def mf_zero_object(ctx: RingContext, w_total: Poly) -> MatrixFactorization:
    empty = PolyMatrix(ctx, [], cols=0)
    return mf_new(ctx, w_total, empty, empty)


def rank_one(ctx: RingContext, w_total: Poly, a: Poly, b: Poly) -> MatrixFactorization:
    """The rank-one factorization (a, b) with a * b = W - w0."""
    return mf_new(ctx, w_total, PolyMatrix(ctx, [[a]]), PolyMatrix(ctx, [[b]]))


def unshifted_w(x: MatrixFactorization) -> Poly:
    return x.w + x.ctx.constant(x.ctx.w0)


def mf_shift(x: MatrixFactorization) -> MatrixFactorization:
    """The translation X[1] = (P0, P1, -p0, -p1)."""
    return MatrixFactorization(x.ctx, x.w, x.rank, -x.p0, -x.p1)


def mf_direct_sum(x: MatrixFactorization, y: MatrixFactorization) -> MatrixFactorization:
    _check_same_fiber(x, y)
    z01 = PolyMatrix.zero(x.ctx, x.rank, y.rank)
    z10 = PolyMatrix.zero(x.ctx, y.rank, x.rank)
    p1 = PolyMatrix.block([[x.p1, z01], [z10, y.p1]])
    p0 = PolyMatrix.block([[x.p0, z01], [z10, y.p0]])
    return MatrixFactorization(x.ctx, x.w, x.rank + y.rank, p1, p0)


def _check_same_fiber(x: MatrixFactorization, y: MatrixFactorization):
    if x.ctx != y.ctx:
        raise ValueError("context-mismatch: factorizations over different contexts")
    if x.w != y.w:
        raise ValueError("superpotential-mismatch: factorizations of different fibers")


class MFMorphism:
    """Morphism (f1, f0) between factorizations of the same fiber."""

    __slots__ = ("source", "target", "f1", "f0")

    def __init__(self, source, target, f1: PolyMatrix, f0: PolyMatrix):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f0", f0)

    def __setattr__(self, name, value):
        raise AttributeError("MFMorphism is immutable")

    def __eq__(self, other):
        if not isinstance(other, MFMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.f1 == other.f1
            and self.f0 == other.f0
        )

    def is_zero(self) -> bool:
        return self.f1.is_zero() and self.f0.is_zero()

    def __repr__(self):
        return f"MFMorphism({self.source.rank} -> {self.target.rank})"


def morphism_new(x: MatrixFactorization, y: MatrixFactorization, f1: PolyMatrix, f0: PolyMatrix) -> MFMorphism:
    _check_same_fiber(x, y)
    if f1.rows != y.rank or f1.cols != x.rank or f0.rows != y.rank or f0.cols != x.rank:
        raise ValueError(
            f"invalid-shape: morphism components must be {y.rank}x{x.rank}, "
            f"got {f1.rows}x{f1.cols} and {f0.rows}x{f0.cols}"
        )
    lhs = f1 @ x.p0
    rhs = y.p0 @ f0
    if lhs != rhs:
        raise ValueError(
            "not-a-morphism: f1 * p0 differs from q0 * f0; "
            f"first offending entry {_first_difference(lhs, rhs)}"
        )
    lhs2 = y.p1 @ f1
    rhs2 = f0 @ x.p1
    if lhs2 != rhs2:
        raise ValueError(
            "not-a-morphism: q1 * f1 differs from f0 * p1; "
            f"first offending entry {_first_difference(lhs2, rhs2)}"
        )
    return MFMorphism(x, y, f1, f0)


def morphism_from_polys(x, y, f1_entries, f0_entries) -> MFMorphism:
    ctx = x.ctx
    f1 = PolyMatrix(ctx, [[_as_poly(ctx, e) for e in row] for row in f1_entries], cols=x.rank)
    f0 = PolyMatrix(ctx, [[_as_poly(ctx, e) for e in row] for row in f0_entries], cols=x.rank)
    return morphism_new(x, y, f1, f0)


def identity_morphism(x: MatrixFactorization) -> MFMorphism:
    ident = PolyMatrix.identity(x.ctx, x.rank)
    return MFMorphism(x, x, ident, ident)


def zero_morphism(x: MatrixFactorization, y: MatrixFactorization) -> MFMorphism:
    _check_same_fiber(x, y)
    z = PolyMatrix.zero(x.ctx, y.rank, x.rank)
    return MFMorphism(x, y, z, z)


def compose(g: MFMorphism, f: MFMorphism) -> MFMorphism:
    """g after f."""
    if f.target != g.source:
        raise ValueError("not-composable: target of f is not source of g")
    return MFMorphism(f.source, g.target, g.f1 @ f.f1, g.f0 @ f.f0)


def morphism_add(f: MFMorphism, g: MFMorphism) -> MFMorphism:
    if f.source != g.source or f.target != g.target:
        raise ValueError("not-composable: morphisms between different objects")
    return MFMorphism(f.source, f.target, f.f1 + g.f1, f.f0 + g.f0)


def morphism_sub(f: MFMorphism, g: MFMorphism) -> MFMorphism:
    if f.source != g.source or f.target != g.target:
        raise ValueError("not-composable: morphisms between different objects")
    return MFMorphism(f.source, f.target, f.f1 - g.f1, f.f0 - g.f0)


def morphism_scale(f: MFMorphism, c) -> MFMorphism:
    return MFMorphism(f.source, f.target, f.f1.scale(c), f.f0.scale(c))


def shift_morphism(f: MFMorphism) -> MFMorphism:
    """f[1] = (f0, f1) between the shifted objects."""
    return MFMorphism(mf_shift(f.source), mf_shift(f.target), f.f0, f.f1)


def direct_sum_morphism(f: MFMorphism, g: MFMorphism) -> MFMorphism:
    src = mf_direct_sum(f.source, g.source)
    dst = mf_direct_sum(f.target, g.target)
    ctx = f.source.ctx
    z01 = PolyMatrix.zero(ctx, f.target.rank, g.source.rank)
    z10 = PolyMatrix.zero(ctx, g.target.rank, f.source.rank)
    f1 = PolyMatrix.block([[f.f1, z01], [z10, g.f1]])
    f0 = PolyMatrix.block([[f.f0, z01], [z10, g.f0]])
    return MFMorphism(src, dst, f1, f0)


class Homotopy:
    """Pair (s, t) with s : P0 -> Q1 and t : P1 -> Q0.

    Its boundary is the morphism (q0 t + s p1, t p0 + q1 s); a homotopy
    witnesses that the morphism it bounds is zero in the homotopy
    category.
    """

    __slots__ = ("source", "target", "s", "t")

    def __init__(self, source, target, s: PolyMatrix, t: PolyMatrix):
        if s.rows != target.rank or s.cols != source.rank or t.rows != target.rank or t.cols != source.rank:
            raise ValueError(
                f"invalid-shape: homotopy components must be {target.rank}x{source.rank}"
            )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    def __setattr__(self, name, value):
        raise AttributeError("Homotopy is immutable")

    def boundary(self) -> MFMorphism:
        x, y = self.source, self.target
        f1 = y.p0 @ self.t + self.s @ x.p1
        f0 = self.t @ x.p0 + y.p1 @ self.s
        return MFMorphism(x, y, f1, f0)

    def bounds(self, f: MFMorphism) -> bool:
        """Exact check that this homotopy exhibits f as null-homotopic."""
        b = self.boundary()
        return b.f1 == f.f1 and b.f0 == f.f0


def cone(f: MFMorphism) -> MatrixFactorization:
    """The mapping cone of f : X -> Y."""
    x, y = f.source, f.target
    ctx = x.ctx
    z = PolyMatrix.zero(ctx, x.rank, y.rank)
    c1 = PolyMatrix.block([[y.p1, f.f0], [z, -x.p0]])
    c0 = PolyMatrix.block([[y.p0, f.f1], [z, -x.p1]])
    w_ident = PolyMatrix.scalar(ctx, x.w, x.rank + y.rank)
    if c1 @ c0 != w_ident or c0 @ c1 != w_ident:
        raise ValueError("not-a-factorization: cone blocks fail the product identity")
    return MatrixFactorization(ctx, x.w, x.rank + y.rank, c1, c0)


def standard_triangle(f: MFMorphism) -> Tuple[MatrixFactorization, MFMorphism, MFMorphism]:
    """The cone with its inclusion g = (id, 0) and projection h = (0, -id).

    Returns (cone, g : Y -> cone, h : cone -> X[1]); both maps are
    validated as morphisms.
    """
    x, y = f.source, f.target
    ctx = x.ctx
    c = cone(f)
    ident_y = PolyMatrix.identity(ctx, y.rank)
    zx = PolyMatrix.zero(ctx, x.rank, y.rank)
    g = morphism_new(
        y,
        c,
        PolyMatrix.block([[ident_y], [zx]]),
        PolyMatrix.block([[ident_y], [zx]]),
    )
    xs = mf_shift(x)
    ident_x = PolyMatrix.identity(ctx, x.rank)
    zy = PolyMatrix.zero(ctx, x.rank, y.rank)
    h = morphism_new(
        c,
        xs,
        PolyMatrix.block([[zy, -ident_x]]),
        PolyMatrix.block([[zy, -ident_x]]),
    )
    return c, g, h


def cone_inclusion_homotopy(f: MFMorphism) -> Homotopy:
    """Explicit witness that g composed with f is null-homotopic."""
    x, y = f.source, f.target
    ctx = x.ctx
    c, g, _ = standard_triangle(f)
    zero_block = PolyMatrix.zero(ctx, y.rank, x.rank)
    ident = PolyMatrix.identity(ctx, x.rank)
    s = PolyMatrix.block([[zero_block], [ident]])
    t = PolyMatrix.block([[zero_block], [ident]])
    h = Homotopy(x, c, s, t)
    if not h.bounds(compose(g, f)):
        raise ValueError("not-a-morphism: cone inclusion witness failed")
    return h


def multiplication_morphism(x: MatrixFactorization, factor: Poly) -> MFMorphism:
    """Multiplication by a polynomial as an endomorphism of X."""
    m1 = PolyMatrix.scalar(x.ctx, factor, x.rank)
    return MFMorphism(x, x, m1, m1)


def partial_derivative_homotopy(x: MatrixFactorization, var: str) -> Tuple[MFMorphism, Homotopy]:
    """Multiplication by dW/d(var) with its explicit contracting homotopy.

    Differentiating p0 p1 = (W - w0) I in the variable gives the witness
    (s, t) = (d p0, d p1); the pair is checked exactly before returning.
    """
    f = multiplication_morphism(x, x.w.partial_derivative(var))
    h = Homotopy(x, x, x.p0.partial_derivative(var), x.p1.partial_derivative(var))
    if not h.bounds(f):
        raise ValueError("not-a-morphism: derivative homotopy identity failed")
    return f, h


def w_multiplication_homotopy(x: MatrixFactorization) -> Tuple[MFMorphism, Homotopy]:
    """Multiplication by the fiber polynomial is contracted by (p0, 0)."""
    f = multiplication_morphism(x, x.w)
    h = Homotopy(x, x, x.p0, PolyMatrix.zero(x.ctx, x.rank, x.rank))
    if not h.bounds(f):
        raise ValueError("not-a-morphism: fiber multiplication witness failed")
    return f, h
