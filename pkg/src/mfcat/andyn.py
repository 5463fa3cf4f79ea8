"""Closed-form catalogue of the singularity category for W = z^n.

Indecomposable objects are V_mu = k[z]/(z^mu) for 1 <= mu <= n-1 (the free
module V_n is the zero object).  Between V_mu and V_nu there is a basis of
morphisms indexed by an integer peak lam with
max(mu, nu) <= lam <= min(mu + nu - 1, n - 1); the element with peak lam
is "multiply by z^(lam-mu)" on the module side, which factors through
V_lam.  Compositions rewrite to this basis through three rules: a
composite through a middle index m is the basis element with peak
lam_a + lam_b - m, it vanishes when the peak reaches mu + nu (the map
factors through a valley of non-positive index), and it vanishes when the
peak reaches n (the map factors through the free module).

The catalogue also knows the translation (shift) action, the End rings,
and for each basis morphism an exact triangle with explicit third object
and connecting maps.  Everything here can be realized as honest matrix
factorizations and certified against the cone construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .factorization import (
    MatrixFactorization,
    MFMorphism,
    compose,
    mf_shift,
    mf_zero_object,
    morphism_new,
    rank_one,
    standard_triangle,
    zero_morphism,
)
from .fields import QQ, Field
from .homotopy import LinearSystem, monomials_up_to_degree, _two_sided_inverse
from .matrices import PolyMatrix
from .poly import Poly, RingContext


def _check_n(n: int):
    if n < 2:
        raise ValueError(f"index-out-of-range: need n >= 2, got {n}")


def _check_index(n: int, mu: int):
    _check_n(n)
    if not 1 <= mu <= n - 1:
        raise ValueError(f"index-out-of-range: {mu} not in 1..{n - 1}")


def pad(n: int, mu: int) -> int:
    """Reduce an object index modulo n into 0..n-1, with 0 the zero object."""
    return ((mu % n) + n) % n


def an_depth(n: int, mu: int) -> int:
    _check_index(n, mu)
    return min(mu, n - mu)


def an_hom_dim(n: int, mu: int, nu: int) -> int:
    return min(an_depth(n, mu), an_depth(n, nu))


def an_hom_basis(n: int, mu: int, nu: int) -> List[int]:
    """Peaks of the basis morphisms V_mu -> V_nu, in increasing order."""
    _check_index(n, mu)
    _check_index(n, nu)
    return list(range(max(mu, nu), min(mu + nu - 1, n - 1) + 1))


def _basis_padded(n: int, mu: int, nu: int) -> List[int]:
    if mu == 0 or nu == 0:
        return []
    return an_hom_basis(n, mu, nu)


def an_hom_table(n: int) -> List[List[int]]:
    _check_n(n)
    return [
        [an_hom_dim(n, mu, nu) for nu in range(1, n)] for mu in range(1, n)
    ]


class AnMorphism:
    """A morphism V_mu -> V_nu as coefficients over the peak basis.

    Index 0 for source or target stands for the zero object (empty basis).
    """

    __slots__ = ("field", "n", "mu", "nu", "peaks", "coeffs")

    def __init__(self, field: Field, n: int, mu: int, nu: int, coeffs: Sequence):
        _check_n(n)
        if not 0 <= mu <= n - 1 or not 0 <= nu <= n - 1:
            raise ValueError(f"index-out-of-range: ({mu}, {nu}) for n={n}")
        peaks = _basis_padded(n, mu, nu)
        if len(coeffs) != len(peaks):
            raise ValueError(
                f"shape-mismatch: {len(peaks)} basis peaks, {len(coeffs)} coefficients"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "peaks", tuple(peaks))
        object.__setattr__(self, "coeffs", tuple(field.coerce(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("AnMorphism is immutable")

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, AnMorphism)
            and self.field == other.field
            and (self.n, self.mu, self.nu) == (other.n, other.mu, other.nu)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.mu, self.nu, self.coeffs))

    def __repr__(self):
        terms = [
            f"{self.field.format(c)}*a[{lam}]"
            for lam, c in zip(self.peaks, self.coeffs)
            if not self.field.is_zero(c)
        ]
        body = " + ".join(terms) if terms else "0"
        return f"AnMorphism(V_{self.mu} -> V_{self.nu}, {body})"


def an_zero(field: Field, n: int, mu: int, nu: int) -> AnMorphism:
    return AnMorphism(field, n, mu, nu, [field.zero()] * len(_basis_padded(n, mu, nu)))


def an_basis_morphism(field: Field, n: int, mu: int, nu: int, lam: int) -> AnMorphism:
    peaks = _basis_padded(n, mu, nu)
    if lam not in peaks:
        raise ValueError(f"index-out-of-range: peak {lam} not in basis {peaks}")
    coeffs = [field.one() if p == lam else field.zero() for p in peaks]
    return AnMorphism(field, n, mu, nu, coeffs)


def an_generator(field: Field, n: int, mu: int, nu: int) -> AnMorphism:
    """The projection (mu >= nu) or z-power injection (nu >= mu): the
    basis element with the smallest peak max(mu, nu)."""
    if mu == 0 or nu == 0:
        return an_zero(field, n, mu, nu)
    return an_basis_morphism(field, n, mu, nu, max(mu, nu))


def an_identity(field: Field, n: int, mu: int) -> AnMorphism:
    return an_generator(field, n, mu, mu)


def an_add(a: AnMorphism, b: AnMorphism) -> AnMorphism:
    if (a.n, a.mu, a.nu, a.field) != (b.n, b.mu, b.nu, b.field):
        raise ValueError("shape-mismatch: adding morphisms of different types")
    field = a.field
    return AnMorphism(
        field, a.n, a.mu, a.nu,
        [field.add(x, y) for x, y in zip(a.coeffs, b.coeffs)],
    )


def an_scale(a: AnMorphism, c) -> AnMorphism:
    field = a.field
    cc = field.coerce(c)
    return AnMorphism(field, a.n, a.mu, a.nu, [field.mul(cc, x) for x in a.coeffs])


def an_compose(a: AnMorphism, b: AnMorphism) -> AnMorphism:
    """a after b: b goes V_mu -> V_mid, a goes V_mid -> V_nu."""
    if a.field != b.field or a.n != b.n or a.mu != b.nu:
        raise ValueError(
            f"not-composable: V_{b.mu}->V_{b.nu} then V_{a.mu}->V_{a.nu}"
        )
    field = a.field
    n = a.n
    mid = a.mu
    mu, nu = b.mu, a.nu
    result = list(an_zero(field, n, mu, nu).coeffs)
    peaks = _basis_padded(n, mu, nu)
    for lam_a, ca in zip(a.peaks, a.coeffs):
        if field.is_zero(ca):
            continue
        for lam_b, cb in zip(b.peaks, b.coeffs):
            if field.is_zero(cb):
                continue
            peak = lam_a + lam_b - mid
            # Vanishes through a non-positive valley or through the free module.
            if peak >= mu + nu or peak >= n:
                continue
            idx = peaks.index(peak)
            result[idx] = field.add(result[idx], field.mul(ca, cb))
    return AnMorphism(field, n, mu, nu, result)


def an_translate_index(n: int, mu: int) -> int:
    _check_n(n)
    if not 0 <= mu <= n - 1:
        raise ValueError(f"index-out-of-range: {mu} for n={n}")
    return 0 if mu == 0 else n - mu


def an_translate(a: AnMorphism) -> AnMorphism:
    """Shift action: V_mu -> V_{n-mu} on objects, peak lam -> n+lam-mu-nu."""
    n = a.n
    return AnMorphism(
        a.field,
        n,
        an_translate_index(n, a.mu),
        an_translate_index(n, a.nu),
        a.coeffs,
    )


def an_end_ring(field: Field, n: int, mu: int) -> dict:
    """End(V_mu) as k[x]/(x^d): d, the generator, and its powers."""
    d = an_depth(n, mu)
    powers = [an_identity(field, n, mu)]
    if d > 1:
        x = an_basis_morphism(field, n, mu, mu, mu + 1)
        for _ in range(d - 1):
            powers.append(an_compose(x, powers[-1]))
    x = powers[1] if d > 1 else an_zero(field, n, mu, mu)
    x_d = an_compose(x, powers[-1]) if d > 1 else x
    if not x_d.is_zero():
        raise ValueError("relation-violated: generator power x^d is nonzero")
    if powers[-1].is_zero():
        raise ValueError("relation-violated: generator power x^(d-1) vanished")
    return {"n": n, "mu": mu, "d": d, "generator": x, "powers": powers}


# -- realization as matrix factorizations ------------------------------


def an_context(field: Field = QQ, var: str = "z") -> RingContext:
    return RingContext(field=field, variables=(var,), weights=(1,))


def an_w(ctx: RingContext, n: int) -> Poly:
    _check_n(n)
    z = ctx.variable(ctx.variables[0])
    return z ** n


def realize_an_object(ctx: RingContext, n: int, mu: int) -> MatrixFactorization:
    w = an_w(ctx, n)
    if pad(n, mu) == 0:
        return mf_zero_object(ctx, w)
    mu = pad(n, mu)
    z = ctx.variable(ctx.variables[0])
    return rank_one(ctx, w, z ** mu, z ** (n - mu))


def realize_an_sum(ctx: RingContext, n: int, indices: Sequence[int]) -> MatrixFactorization:
    parts = [pad(n, i) for i in indices if pad(n, i) != 0]
    if not parts:
        return mf_zero_object(ctx, an_w(ctx, n))
    z = ctx.variable(ctx.variables[0])
    rank = len(parts)
    p1 = [
        [z ** parts[i] if i == j else ctx.zero() for j in range(rank)]
        for i in range(rank)
    ]
    p0 = [
        [z ** (n - parts[i]) if i == j else ctx.zero() for j in range(rank)]
        for i in range(rank)
    ]
    from .factorization import mf_new

    return mf_new(
        ctx,
        an_w(ctx, n),
        PolyMatrix(ctx, p1, cols=rank),
        PolyMatrix(ctx, p0, cols=rank),
    )


def realize_an_morphism(a: AnMorphism, ctx: RingContext) -> MFMorphism:
    """The basis element with peak lam becomes (z^(lam-nu), z^(lam-mu))."""
    n = a.n
    x = realize_an_object(ctx, n, a.mu)
    y = realize_an_object(ctx, n, a.nu)
    if x.rank == 0 or y.rank == 0:
        return zero_morphism(x, y)
    z = ctx.variable(ctx.variables[0])
    field = ctx.field
    f1 = ctx.zero()
    f0 = ctx.zero()
    for lam, c in zip(a.peaks, a.coeffs):
        if field.is_zero(c):
            continue
        f1 = f1 + (z ** (lam - a.nu)).scale(c)
        f0 = f0 + (z ** (lam - a.mu)).scale(c)
    return morphism_new(
        x, y, PolyMatrix(ctx, [[f1]], cols=1), PolyMatrix(ctx, [[f0]], cols=1)
    )


def shift_identification(ctx: RingContext, n: int, mu: int) -> MFMorphism:
    """The strict isomorphism V_mu[1] -> V_{n-mu}, components (-1, 1).

    Either component sign pattern gives a strict isomorphism; this is the
    one under which the catalogue triangles certify with their stated
    signs.  It is its own inverse.
    """
    _check_index(n, mu)
    shifted = mf_shift(realize_an_object(ctx, n, mu))
    target = realize_an_object(ctx, n, n - mu)
    one = PolyMatrix.identity(ctx, 1)
    return morphism_new(shifted, target, -one, one)


# -- module realization -------------------------------------------------


def an_module(field: Field, n: int, mu: int):
    from .modules import cyclic_module

    _check_index(n, mu)
    return cyclic_module(field, n, mu)


def an_module_map(a: AnMorphism) -> List[List]:
    """The morphism as a nu x mu scalar matrix in the power bases."""
    field = a.field
    if a.mu == 0 or a.nu == 0:
        return [[field.zero()] * a.mu for _ in range(a.nu)]
    mat = [[field.zero()] * a.mu for _ in range(a.nu)]
    for lam, c in zip(a.peaks, a.coeffs):
        if field.is_zero(c):
            continue
        shiftexp = lam - a.mu
        for i in range(a.mu):
            j = shiftexp + i
            if j < a.nu:
                mat[j][i] = field.add(mat[j][i], c)
    return mat


# -- exact triangles ---------------------------------------------------


@dataclass
class AnTriangle:
    """Catalogue triangle V_mu -> V_nu -> third -> V_{n-mu}.

    third lists the padded summand indices (0 entries are zero summands);
    g and h hold one catalogue morphism per summand, signs included.
    """

    field: Field
    n: int
    f: AnMorphism
    lam: int
    third: Tuple[int, ...]
    g: Tuple[AnMorphism, ...]
    h: Tuple[AnMorphism, ...]


def an_triangle(f: AnMorphism) -> AnTriangle:
    """The exact triangle on a basis morphism.

    For the smallest peak (the plain generator) the third object is
    V_(nu-mu) and the connecting map gets a minus sign exactly when
    nu - mu < 0.  For a higher peak lam the third object is the sum
    V_(lam-mu) + V_(nu-lam) with connecting maps (+, -).
    """
    field = f.field
    n, mu, nu = f.n, f.mu, f.nu
    if mu == 0 or nu == 0:
        raise ValueError("invalid-shape: triangles need nonzero endpoints")
    unit = [
        (lam, c)
        for lam, c in zip(f.peaks, f.coeffs)
        if not field.is_zero(c)
    ]
    if len(unit) != 1 or unit[0][1] != field.one():
        raise ValueError("invalid-shape: triangle input must be a basis morphism")
    lam = unit[0][0]
    if lam == max(mu, nu):
        t = pad(n, nu - mu)
        g = (an_generator(field, n, nu, t),)
        sign = -1 if nu - mu < 0 else 1
        h = (an_scale(an_generator(field, n, t, pad(n, -mu)), sign),)
        return AnTriangle(field, n, f, lam, (t,), g, h)
    t1 = lam - mu
    t2 = pad(n, nu - lam)
    g = (an_generator(field, n, nu, t1), an_generator(field, n, nu, t2))
    h = (
        an_generator(field, n, t1, pad(n, -mu)),
        an_scale(an_generator(field, n, t2, pad(n, -mu)), -1),
    )
    return AnTriangle(field, n, f, lam, (t1, t2), g, h)


def _stack_vertical(ctx, components: Sequence[MFMorphism], source) -> Tuple[PolyMatrix, PolyMatrix]:
    rows1 = []
    rows0 = []
    for comp in components:
        rows1.extend(list(r) for r in comp.f1.entries)
        rows0.extend(list(r) for r in comp.f0.entries)
    return (
        PolyMatrix(ctx, rows1, cols=source.rank),
        PolyMatrix(ctx, rows0, cols=source.rank),
    )


def _stack_horizontal(ctx, components: Sequence[MFMorphism], target) -> Tuple[PolyMatrix, PolyMatrix]:
    rows1 = [[] for _ in range(target.rank)]
    rows0 = [[] for _ in range(target.rank)]
    for comp in components:
        for i in range(target.rank):
            rows1[i].extend(comp.f1.entries[i])
            rows0[i].extend(comp.f0.entries[i])
    cols = sum(comp.source.rank for comp in components)
    return (
        PolyMatrix(ctx, rows1, cols=cols),
        PolyMatrix(ctx, rows0, cols=cols),
    )


def realize_an_triangle(tri: AnTriangle, ctx: RingContext):
    """The triangle as matrix factorizations: (X, Y, T, f, g, h) where h
    lands in the shift X[1] through the standard identification."""
    n = tri.n
    f = realize_an_morphism(tri.f, ctx)
    x, y = f.source, f.target
    t = realize_an_sum(ctx, n, tri.third)
    g_parts = [realize_an_morphism(gi, ctx) for gi in tri.g]
    h_parts = [realize_an_morphism(hi, ctx) for hi in tri.h]
    g1, g0 = _stack_vertical(ctx, g_parts, y)
    g = morphism_new(y, t, g1, g0)
    back = realize_an_object(ctx, n, pad(n, -tri.f.mu))
    h1, h0 = _stack_horizontal(ctx, h_parts, back)
    h_to_back = morphism_new(t, back, h1, h0)
    # Reroute h into X[1] through the strict identification V_{n-mu} = X[1];
    # the identification (-1, 1) is its own inverse.
    iota = shift_identification(ctx, n, tri.f.mu)
    shifted = iota.source
    ident_back = morphism_new(back, shifted, iota.f1, iota.f0)
    h = compose(ident_back, h_to_back)
    return x, y, t, f, g, h


def certify_an_triangle(
    tri: AnTriangle, ctx: Optional[RingContext] = None, bound: Optional[int] = None
) -> dict:
    """Certify the catalogue triangle against the cone of its first map.

    Solves for a comparison map w: T -> cone(f) making both squares
    commute up to explicit homotopies, then checks that w is invertible
    in the homotopy category.  Returns a certificate dict; "certified"
    is False when no invertible comparison map was found.
    """
    if ctx is None:
        ctx = an_context(tri.field)
    n = tri.n
    x, y, t, f, g, h = realize_an_triangle(tri, ctx)
    cone_obj, g_std, h_std = standard_triangle(f)
    if bound is None:
        bound = 2 * n
    support = monomials_up_to_degree(ctx.nvars, bound)
    system = LinearSystem(ctx)
    w1 = system.unknown("w1", cone_obj.rank, t.rank, lambda r, c: support)
    w0 = system.unknown("w0", cone_obj.rank, t.rank, lambda r, c: support)
    sg = system.unknown("sg", cone_obj.rank, y.rank, lambda r, c: support)
    tg = system.unknown("tg", cone_obj.rank, y.rank, lambda r, c: support)
    sh = system.unknown("sh", x.rank, t.rank, lambda r, c: support)
    th = system.unknown("th", x.rank, t.rank, lambda r, c: support)
    shifted = h.target
    # w is a morphism T -> cone.
    system.add_matrix_equation(
        [(None, w1, t.p0, 1), (cone_obj.p0, w0, None, -1)],
        None,
        (cone_obj.rank, t.rank),
    )
    system.add_matrix_equation(
        [(cone_obj.p1, w1, None, 1), (None, w0, t.p1, -1)],
        None,
        (cone_obj.rank, t.rank),
    )
    # First square: w g - g_std = D(sg, tg) as maps Y -> cone.
    system.add_matrix_equation(
        [
            (None, w1, g.f1, 1),
            (cone_obj.p0, tg, None, -1),
            (None, sg, y.p1, -1),
        ],
        g_std.f1,
        (cone_obj.rank, y.rank),
    )
    system.add_matrix_equation(
        [
            (None, w0, g.f0, 1),
            (None, tg, y.p0, -1),
            (cone_obj.p1, sg, None, -1),
        ],
        g_std.f0,
        (cone_obj.rank, y.rank),
    )
    # Second square: h_std w - h = D(sh, th) as maps T -> X[1].
    system.add_matrix_equation(
        [
            (h_std.f1, w1, None, 1),
            (shifted.p0, th, None, -1),
            (None, sh, t.p1, -1),
        ],
        h.f1,
        (x.rank, t.rank),
    )
    system.add_matrix_equation(
        [
            (h_std.f0, w0, None, 1),
            (None, th, t.p0, -1),
            (shifted.p1, sh, None, -1),
        ],
        h.f0,
        (x.rank, t.rank),
    )
    certificate = {
        "n": n,
        "mu": tri.f.mu,
        "nu": tri.f.nu,
        "lam": tri.lam,
        "third": list(tri.third),
        "certified": False,
        "candidates_tried": 0,
    }
    particular = system.solve()
    if particular is None:
        certificate["reason"] = "no comparison map up to the degree bound"
        return certificate
    candidates = [(particular["w1"], particular["w0"])]
    kernel = system.homogeneous_nullspace()
    for assignment in kernel[:8]:
        for c in (1, -1):
            candidates.append(
                (
                    particular["w1"] + assignment["w1"].scale(ctx.field.coerce(c)),
                    particular["w0"] + assignment["w0"].scale(ctx.field.coerce(c)),
                )
            )
    for cand1, cand0 in candidates[:40]:
        certificate["candidates_tried"] += 1
        try:
            w = morphism_new(t, cone_obj, cand1, cand0)
        except ValueError:
            continue
        found = _two_sided_inverse(w, bound)
        if found is not None:
            certificate["certified"] = True
            certificate["w1"] = [[str(p) for p in row] for row in cand1.entries]
            certificate["w0"] = [[str(p) for p in row] for row in cand0.entries]
            return certificate
    certificate["reason"] = "comparison maps found but none invertible"
    return certificate


# -- cross verification -------------------------------------------------


def an_verify(
    n: int,
    field: Field = QQ,
    lst_sample: str = "all",
    with_triangles: bool = True,
) -> dict:
    """Cross-check the catalogue against the module and factorization
    engines: dimensions, composition, translation, and triangles.

    Returns {"n", "ok", "checks": [record...]} with one record per check.
    """
    from .modules import cok, cok_induced_map, stable_hom

    _check_n(n)
    ctx = an_context(field)
    checks: List[dict] = []
    modules = {mu: an_module(field, n, mu) for mu in range(1, n)}
    stable = {}

    def stable_for(mu, nu):
        if (mu, nu) not in stable:
            stable[(mu, nu)] = stable_hom(modules[mu], modules[nu])
        return stable[(mu, nu)]

    for mu in range(1, n):
        for nu in range(1, n):
            want = an_hom_dim(n, mu, nu)
            got = stable_for(mu, nu).dim
            checks.append(
                {
                    "check": "hom-dim",
                    "params": {"mu": mu, "nu": nu},
                    "ok": want == got,
                    "catalogue": want,
                    "module_side": got,
                }
            )

    # Composition tables against stable classes of module maps.
    for mu in range(1, n):
        for mid in range(1, n):
            for nu in range(1, n):
                sh = stable_for(mu, nu)
                ok = True
                for lam_b in an_hom_basis(n, mu, mid):
                    for lam_a in an_hom_basis(n, mid, nu):
                        a = an_basis_morphism(field, n, mid, nu, lam_a)
                        b = an_basis_morphism(field, n, mu, mid, lam_b)
                        cat = an_compose(a, b)
                        ma = an_module_map(a)
                        mb = an_module_map(b)
                        prod = [
                            [
                                _dot(field, ma[i], [mb[k][j] for k in range(len(mb))])
                                for j in range(mu)
                            ]
                            for i in range(nu)
                        ]
                        lhs = sh.stable_coordinates(prod)
                        rhs = sh.stable_coordinates(an_module_map(cat))
                        if lhs != rhs:
                            ok = False
                checks.append(
                    {
                        "check": "compose",
                        "params": {"mu": mu, "mid": mid, "nu": nu},
                        "ok": ok,
                    }
                )

    # Translation against the shift functor through cok.
    for mu in range(1, n):
        for nu in range(1, n):
            ok = True
            for lam in an_hom_basis(n, mu, nu):
                a = an_basis_morphism(field, n, mu, nu, lam)
                fa = realize_an_morphism(a, ctx)
                from .factorization import shift_morphism

                shifted = shift_morphism(fa)
                src = cok(shifted.source)
                dst = cok(shifted.target)
                induced = cok_induced_map(src, dst, shifted)
                expected = an_module_map(an_translate(a))
                if induced != expected:
                    ok = False
            checks.append(
                {
                    "check": "translate",
                    "params": {"mu": mu, "nu": nu},
                    "ok": ok,
                }
            )

    if with_triangles:
        for mu in range(1, n):
            for nu in range(1, n):
                tri = an_triangle(an_generator(field, n, mu, nu))
                cert = certify_an_triangle(tri, ctx)
                checks.append(
                    {
                        "check": "triangle-fst",
                        "params": {"mu": mu, "nu": nu},
                        "ok": cert["certified"],
                        "certificate": cert,
                    }
                )
                peaks = an_hom_basis(n, mu, nu)[1:]
                if lst_sample == "first" and peaks:
                    peaks = peaks[:1]
                for lam in peaks:
                    tri = an_triangle(an_basis_morphism(field, n, mu, nu, lam))
                    cert = certify_an_triangle(tri, ctx)
                    checks.append(
                        {
                            "check": "triangle-lst",
                            "params": {"mu": mu, "nu": nu, "lam": lam},
                            "ok": cert["certified"],
                            "certificate": cert,
                        }
                    )

    return {"n": n, "ok": all(c["ok"] for c in checks), "checks": checks}


def _dot(field, row, col):
    acc = field.zero()
    for a, b in zip(row, col):
        acc = field.add(acc, field.mul(a, b))
    return acc
