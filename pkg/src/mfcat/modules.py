"""Finite-dimensional modules over the singular fiber ring k[z]/(W).

A module is a pair (W, Z): a univariate fiber polynomial W and a square
scalar matrix Z giving the action of z, with W(Z) = 0.  Morphisms are the
scalar matrices commuting with the actions.  The stable morphism space
divides out everything that factors through a free module, tested against
the fixed surjection from a free cover with one generator per basis
vector of the target.

This side of the engine is deliberately elementary (finite exact linear
algebra only) so it can serve as an independent check of the homotopy
category computations.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg, univariate as uni
from .factorization import MatrixFactorization, mf_new
from .fields import Field
from .matrices import PolyMatrix
from .poly import Poly, RingContext
from .smith import smith_normal_form


class QuotModule:
    """Module over k[z]/(W) given by the z-action matrix on a k-basis."""

    __slots__ = ("ctx", "w", "dim", "z_action")

    def __init__(self, ctx: RingContext, w: Poly, z_rows: Sequence[Sequence]):
        if ctx.nvars != 1:
            raise ValueError(f"not-univariate: context has variables {ctx.variables}")
        if not isinstance(w, Poly) or w.ctx != ctx:
            raise ValueError("context-mismatch: W must live in the module context")
        if w.is_zero():
            raise ValueError("zero-superpotential: fiber polynomial is zero")
        field = ctx.field
        dim = len(z_rows)
        rows = []
        for r in z_rows:
            row = [field.coerce(x) for x in r]
            if len(row) != dim:
                raise ValueError(f"wrong-arity: Z must be {dim}x{dim}, got a row of {len(row)}")
            rows.append(tuple(row))
        z = tuple(rows)
        wz = _eval_on_matrix(field, uni.from_poly(w, ctx.variables[0]), [list(r) for r in z])
        if not linalg.mat_is_zero(field, wz):
            raise ValueError("superpotential-mismatch: W(Z) is not zero")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "z_action", z)

    def __setattr__(self, name, value):
        raise AttributeError("QuotModule is immutable")

    @property
    def field(self) -> Field:
        return self.ctx.field

    @property
    def var(self) -> str:
        return self.ctx.variables[0]

    def z_matrix(self) -> List[List]:
        return [list(r) for r in self.z_action]

    def __eq__(self, other):
        if not isinstance(other, QuotModule):
            return NotImplemented
        return self.ctx == other.ctx and self.w == other.w and self.z_action == other.z_action

    def __repr__(self):
        return f"QuotModule(W={self.w}, dim={self.dim})"


def _eval_on_matrix(field: Field, coeffs, z):
    """W(Z) by Horner's rule on a scalar matrix."""
    n = len(z)
    acc = linalg.mat_zero(field, n, n)
    for c in reversed(coeffs):
        acc = linalg.mat_mul(field, acc, z)
        for i in range(n):
            acc[i][i] = field.add(acc[i][i], c)
    return acc


def module_new(w: Poly, z_rows: Sequence[Sequence]) -> QuotModule:
    ctx = w.ctx
    if ctx.w0 != ctx.field.zero():
        ctx = ctx.shifted(w0=ctx.field.zero())
        w = Poly(ctx, dict(w.terms))
    return QuotModule(ctx, w, z_rows)


def zn_context(field: Field, var: str = "z") -> RingContext:
    return RingContext(field=field, variables=(var,), weights=(1,))


def cyclic_module(field: Field, n: int, mu: int, var: str = "z") -> QuotModule:
    """The quotient k[z]/(z^mu) as a module over k[z]/(z^n), 0 <= mu <= n."""
    if not (0 <= mu <= n):
        raise ValueError(f"index-out-of-range: need 0 <= {mu} <= {n}")
    ctx = zn_context(field, var)
    w = ctx.variable(var) ** n
    z = [[field.zero()] * mu for _ in range(mu)]
    for i in range(mu - 1):
        z[i + 1][i] = field.one()
    return QuotModule(ctx, w, z)


def direct_sum_modules(m: QuotModule, n: QuotModule) -> QuotModule:
    if m.ctx != n.ctx or m.w != n.w:
        raise ValueError("superpotential-mismatch: cannot sum modules over different fibers")
    field = m.field
    d = m.dim + n.dim
    z = linalg.mat_zero(field, d, d)
    for i in range(m.dim):
        for j in range(m.dim):
            z[i][j] = m.z_action[i][j]
    for i in range(n.dim):
        for j in range(n.dim):
            z[m.dim + i][m.dim + j] = n.z_action[i][j]
    return QuotModule(m.ctx, m.w, z)


# -- morphisms ---------------------------------------------------------


def hom_space(m: QuotModule, n: QuotModule) -> List[List[List]]:
    """Basis of the space of module morphisms M -> N (scalar matrices)."""
    if m.ctx != n.ctx or m.w != n.w:
        raise ValueError("superpotential-mismatch: modules over different fibers")
    field = m.field
    nm, nn = m.dim, n.dim
    if nm == 0 or nn == 0:
        return []
    # Unknown F is nn x nm; rows of the system: entries of F Zm - Zn F.
    nunk = nn * nm
    rows = []
    for i in range(nn):
        for j in range(nm):
            row = [field.zero()] * nunk
            for k in range(nm):
                row[i * nm + k] = field.add(row[i * nm + k], m.z_action[k][j])
            for k in range(nn):
                row[k * nm + j] = field.sub(row[k * nm + j], n.z_action[i][k])
            rows.append(row)
    basis = linalg.nullspace(field, rows)
    return [_unflatten(v, nn, nm) for v in basis]


def _unflatten(vec, rows, cols):
    return [[vec[i * cols + j] for j in range(cols)] for i in range(rows)]


def _flatten(mat):
    return [x for row in mat for x in row]


def is_module_morphism(m: QuotModule, n: QuotModule, f) -> bool:
    field = m.field
    lhs = linalg.mat_mul(field, f, m.z_matrix())
    rhs = linalg.mat_mul(field, n.z_matrix(), f)
    return linalg.mat_eq(field, lhs, rhs)


class StableHom:
    """Hom(M, N) together with the subspace factoring through a free cover.

    The free cover of N has one generator per k-basis vector of N; a
    morphism is stably zero exactly when it lies in the image of
    Hom(M, A^g) -> Hom(M, N) under the fixed surjection.  For the zero
    target the cover has no generators and nothing is divided out.
    """

    def __init__(self, m: QuotModule, n: QuotModule):
        if m.ctx != n.ctx or m.w != n.w:
            raise ValueError("superpotential-mismatch: modules over different fibers")
        field = m.field
        self.source = m
        self.target = n
        self.field = field
        self.hom_basis = hom_space(m, n)
        wc = uni.from_poly(m.w, m.var)
        free_rank_one = _ring_as_module(m.ctx, wc)
        hom_to_free = hom_space(m, free_rank_one)
        # pi_j : A -> N sends the class of z^k to Z_N^k applied to basis j.
        factoring = []
        zn = n.z_matrix()
        deg_w = len(wc) - 1
        powers = [linalg.mat_identity(field, n.dim)]
        for _ in range(max(0, deg_w - 1)):
            powers.append(linalg.mat_mul(field, zn, powers[-1]))
        for j in range(n.dim):
            pj = [[powers[k][i][j] for k in range(deg_w)] for i in range(n.dim)]
            for h in hom_to_free:
                factoring.append(linalg.mat_mul(field, pj, h))
        self.factoring_span = [_flatten(f) for f in factoring]
        if self.factoring_span:
            red, pivots = linalg.rref(field, self.factoring_span)
            self.factoring_rref = red[: len(pivots)]
        else:
            self.factoring_rref = []
        self.dim = len(self.hom_basis) - len(self.factoring_rref)
        # Quotient basis: hom basis vectors independent modulo the factoring span.
        quotient = []
        acc = [list(r) for r in self.factoring_rref]
        acc_rank = len(self.factoring_rref)
        for h in self.hom_basis:
            v = _flatten(h)
            cand = acc + [v]
            r = linalg.rank(field, cand)
            if r > acc_rank:
                quotient.append(h)
                acc = cand
                acc_rank = r
        self.quotient_basis = quotient

    def is_stably_zero(self, f) -> bool:
        if not is_module_morphism(self.source, self.target, f):
            raise ValueError("not-a-morphism: matrix does not intertwine the actions")
        return linalg.row_space_contains(self.field, self.factoring_rref, _flatten(f))

    def stable_coordinates(self, f):
        """Coordinates of the stable class of f in the quotient basis."""
        if not is_module_morphism(self.source, self.target, f):
            raise ValueError("not-a-morphism: matrix does not intertwine the actions")
        field = self.field
        columns = [_flatten(q) for q in self.quotient_basis] + [
            list(r) for r in self.factoring_rref
        ]
        if not columns:
            if any(not field.is_zero(x) for x in _flatten(f)):
                raise ValueError("not-a-morphism: nonzero map in a zero Hom space")
            return []
        a = [[col[i] for col in columns] for i in range(len(columns[0]))]
        sol = linalg.solve(field, a, _flatten(f))
        if sol is None:
            raise ValueError("not-a-morphism: map outside the Hom space")
        return sol[: len(self.quotient_basis)]


def _ring_as_module(ctx: RingContext, wc) -> QuotModule:
    """k[z]/(W) as a module over itself (companion matrix of monic W)."""
    field = ctx.field
    w_monic = uni.monic(field, wc)
    d = len(w_monic) - 1
    z = linalg.mat_zero(field, d, d)
    for i in range(d - 1):
        z[i + 1][i] = field.one()
    for i in range(d):
        z[i][d - 1] = field.neg(w_monic[i])
    w = uni.to_poly(ctx, ctx.variables[0], wc)
    return QuotModule(ctx, w, z)


def stable_hom(m: QuotModule, n: QuotModule) -> StableHom:
    return StableHom(m, n)


# -- Jordan decomposition over a nilpotent fiber -----------------------


def decompose(m: QuotModule) -> Dict[int, int]:
    """Multiplicities of the cyclic summands when W is a pure power z^n."""
    terms = list(m.w.terms.items())
    if len(terms) != 1 or sum(terms[0][0]) == 0:
        raise ValueError(f"not-nilpotent-form: fiber polynomial {m.w} is not a pure power")
    n = sum(terms[0][0])
    field = m.field
    z = m.z_matrix()
    ranks = [m.dim]
    power = linalg.mat_identity(field, m.dim)
    for _ in range(n + 1):
        power = linalg.mat_mul(field, power, z)
        ranks.append(linalg.rank(field, power))
    out: Dict[int, int] = {}
    for mu in range(1, n + 1):
        mult = ranks[mu - 1] - 2 * ranks[mu] + ranks[mu + 1]
        if mult < 0:
            raise ValueError("not-nilpotent-form: inconsistent rank profile")
        if mult:
            out[mu] = mult
    return out


# -- the cokernel functor ----------------------------------------------


class CokPresentation:
    """Cokernel of p1 in Smith-normal coordinates, with transport maps.

    The module is the direct sum of k[z]/(d_i) over the nonunit diagonal
    entries; `class_of` sends a polynomial column vector to its class and
    `induced_map` pushes a factorization morphism to a module morphism.
    """

    def __init__(self, x: MatrixFactorization):
        ctx = x.ctx
        if ctx.nvars != 1:
            raise ValueError(f"not-univariate: context has variables {ctx.variables}")
        field = ctx.field
        var = ctx.variables[0]
        self.ctx = ctx
        self.field = field
        self.var = var
        self.source = x
        grid = [
            [uni.from_poly(x.p1.entries[i][j], var) for j in range(x.rank)]
            for i in range(x.rank)
        ]
        self.snf = smith_normal_form(field, grid)
        wc = uni.from_poly(x.w, var)
        self.blocks: List[Tuple[int, List]] = []  # (start index in the module basis, d_i)
        offset = 0
        for d in self.snf.diagonal:
            if uni.is_zero(d):
                raise ValueError("not-a-factorization: p1 is singular")
            if not uni.divides(field, d, wc):
                raise ValueError("superpotential-mismatch: invariant factor outside the fiber")
            if uni.deg(d) >= 1:
                self.blocks.append((offset, d))
                offset += uni.deg(d)
        self.dim = offset
        z = linalg.mat_zero(field, offset, offset)
        for start, d in self.blocks:
            k = uni.deg(d)
            for i in range(k - 1):
                z[start + i + 1][start + i] = field.one()
            for i in range(k):
                z[start + i][start + k - 1] = field.neg(d[i])
        w = uni.to_poly(ctx if ctx.w0 == field.zero() else ctx.shifted(w0=field.zero()), var, wc)
        self.module = QuotModule(w.ctx, w, z)

    def class_of(self, column: Sequence[Poly]):
        """Class in the module of a column vector over k[z]."""
        field = self.field
        dense = [uni.from_poly(p, self.var) for p in column]
        pushed = []
        for row in self.snf.u:
            acc = []
            for c, e in zip(row, dense):
                acc = uni.add(field, acc, uni.mul(field, c, e))
            pushed.append(acc)
        out = [field.zero()] * self.dim
        nonunit_index = 0
        for i, d in enumerate(self.snf.diagonal):
            rem = uni.mod(field, pushed[i], d)
            if uni.deg(d) >= 1:
                start, _ = self.blocks[nonunit_index]
                for k, c in enumerate(rem):
                    out[start + k] = c
                nonunit_index += 1
        return out

    def lift_of_basis(self, index: int) -> List[Poly]:
        """A polynomial column vector representing the given basis class."""
        field = self.field
        nonunit_positions = [
            i for i, dd in enumerate(self.snf.diagonal) if (uni.deg(dd) or 0) >= 1
        ]
        for block_row, (start, d) in enumerate(self.blocks):
            if start <= index < start + uni.deg(d):
                power = index - start
                diag_index = nonunit_positions[block_row]
                column = []
                for r in range(self.snf.rows):
                    c = self.snf.u_inv[r][diag_index]
                    column.append(uni.mul(field, c, [field.zero()] * power + [field.one()]))
                return [uni.to_poly(self.ctx, self.var, c) for c in column]
        raise ValueError(f"index-out-of-range: {index} not below {self.dim}")


def cok(x: MatrixFactorization) -> CokPresentation:
    return CokPresentation(x)


def cok_induced_map(src: CokPresentation, dst: CokPresentation, f) -> List[List]:
    """Matrix of the induced module morphism cok(X) -> cok(Y) of f = (f1, f0)."""
    if src.ctx != dst.ctx:
        raise ValueError("context-mismatch: presentations over different contexts")
    columns = []
    for b in range(src.dim):
        lift = src.lift_of_basis(b)
        col = PolyMatrix(src.ctx, [[p] for p in lift], cols=1)
        image = f.f0 @ col
        columns.append(dst.class_of([image.entries[i][0] for i in range(image.rows)]))
    return [[columns[j][i] for j in range(src.dim)] for i in range(dst.dim)]


# -- stabilization ------------------------------------------------------


def stabilize(m: QuotModule) -> MatrixFactorization:
    """A factorization of W whose cokernel recovers the module.

    The kernel of the surjection k[z]^dim ->> M sending generators to the
    k-basis is free with basis the columns of z*I - Z, so p1 = z*I - Z;
    p0 solves p1 * p0 = W * I exactly via the divided difference
    (W(z) - W(y)) / (z - y) evaluated at y = Z, and both products are
    verified by the factorization constructor.
    """
    ctx = m.ctx
    field = ctx.field
    var = ctx.variables[0]
    d = m.dim
    zvar = ctx.variable(var)
    p1_rows = []
    for i in range(d):
        row = []
        for j in range(d):
            e = zvar if i == j else ctx.zero()
            row.append(e - ctx.constant(m.z_action[i][j]))
        p1_rows.append(row)
    p1 = PolyMatrix(ctx, p1_rows, cols=d)
    wc = uni.from_poly(m.w, var)
    n = len(wc) - 1
    powers = [linalg.mat_identity(field, d)]
    for _ in range(max(0, n - 1)):
        powers.append(linalg.mat_mul(field, m.z_matrix(), powers[-1]))
    # p0 = sum_i z^i * B_i with B_i = sum_{k > i} c_k Z^(k-1-i).
    p0_rows = [[ctx.zero() for _ in range(d)] for _ in range(d)]
    for i in range(n):
        b = linalg.mat_zero(field, d, d)
        for k in range(i + 1, n + 1):
            b = linalg.mat_add(field, b, linalg.mat_scale(field, wc[k], powers[k - 1 - i]))
        zi = zvar**i
        for r in range(d):
            for c in range(d):
                if not field.is_zero(b[r][c]):
                    p0_rows[r][c] = p0_rows[r][c] + zi.scale(b[r][c])
    p0 = PolyMatrix(ctx, p0_rows, cols=d)
    return mf_new(ctx, m.w, p1, p0)
