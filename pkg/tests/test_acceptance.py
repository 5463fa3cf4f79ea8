"""End-to-end checks of the package's headline guarantees.

One test per criterion; each prints a single "criterion N: PASS/FAIL"
line so a full run doubles as a checklist.  Everything here is exact
arithmetic; there are no tolerances anywhere.
"""

import random
from collections import Counter
from functools import reduce

from mfcat import (
    QQ,
    PolyMatrix,
    PrimeField,
    RingContext,
    SearchPolicy,
    compose,
    cone,
    find_null_homotopy,
    graded_stable_hom_dim,
    identity_morphism,
    is_contractible,
    is_iso_in_db,
    knorrer,
    mf_shift,
    parse_poly,
    rank_one,
    standard_triangle,
    unshifted_w,
)
from mfcat.factorization import (
    Homotopy,
    cone_inclusion_homotopy,
    multiplication_morphism,
    shift_morphism,
)
from mfcat.modules import (
    cok,
    cok_induced_map,
    cyclic_module,
    decompose,
    direct_sum_modules,
    module_new,
    stable_hom,
    stabilize,
)
from mfcat.critical import critical_values
from mfcat.andyn import (
    an_basis_morphism,
    an_context,
    an_generator,
    an_hom_basis,
    an_scale,
    an_triangle,
    certify_an_triangle,
    realize_an_morphism,
    realize_an_object,
    realize_an_sum,
)


def _report(capsys, idx, ok):
    with capsys.disabled():
        print(f"criterion {idx}: {'PASS' if ok else 'FAIL'}")


def _depth(n, mu):
    return min(mu, n - mu)


# -- reusable bodies (criterion 9 repeats 1, 2, 4 over prime fields) ----


def hom_table_failures(field, ns):
    bad = []
    for n in ns:
        mods = {mu: cyclic_module(field, n, mu) for mu in range(1, n)}
        for mu in range(1, n):
            for nu in range(1, n):
                want = min(_depth(n, mu), _depth(n, nu))
                got = stable_hom(mods[mu], mods[nu]).dim
                if got != want:
                    bad.append(("hom-table", n, mu, nu, want, got))
    return bad


def cok_bridge_failures(field, ns):
    bad = []
    ctx = an_context(field)
    z = ctx.variable("z")
    for n in ns:
        objs = {mu: realize_an_object(ctx, n, mu) for mu in range(1, n)}
        pres = {mu: cok(objs[mu]) for mu in range(1, n)}
        for mu in range(1, n):
            for nu in range(1, n):
                gdim, _ = graded_stable_hom_dim(objs[mu], objs[nu])
                mdim = stable_hom(pres[mu].module, pres[nu].module).dim
                if gdim != mdim:
                    bad.append(("dims", n, mu, nu, gdim, mdim))
                sh = stable_hom(pres[mu].module, pres[nu].module)
                for a, b in ((0, 0), (1, 0), (0, 2)):
                    s = PolyMatrix(ctx, [[z ** a]], cols=1)
                    t = PolyMatrix(ctx, [[z ** b]], cols=1)
                    boundary = Homotopy(objs[mu], objs[nu], s, t).boundary()
                    induced = cok_induced_map(pres[mu], pres[nu], boundary)
                    if not sh.is_stably_zero(induced):
                        bad.append(("null-to-stably-zero", n, mu, nu, a, b))
    return bad


def triangulated_failures(field, ns):
    bad = []
    ctx = an_context(field)
    graded = SearchPolicy(mode="graded")
    rotation_policy = SearchPolicy(mode="bounded", bound=4)
    for n in ns:
        objs = {mu: realize_an_object(ctx, n, mu) for mu in range(1, n)}
        for mu in range(1, n):
            x = objs[mu]
            twice = mf_shift(mf_shift(x))
            if twice.p1 != x.p1 or twice.p0 != x.p0:
                bad.append(("shift-involution", n, mu))
            cone_id, _, _ = standard_triangle(identity_morphism(x))
            if not is_contractible(cone_id, graded).found:
                bad.append(("cone-id-contractible", n, mu))
        for mu in range(1, n):
            for nu in range(1, n):
                f = realize_an_morphism(an_generator(field, n, mu, nu), ctx)
                ftwice = shift_morphism(shift_morphism(f))
                if ftwice.f1 != f.f1 or ftwice.f0 != f.f0:
                    bad.append(("shift-involution-morphism", n, mu, nu))
                _, g, _ = standard_triangle(f)
                if not cone_inclusion_homotopy(f).bounds(compose(g, f)):
                    bad.append(("g-after-f-null", n, mu, nu))
                rot = is_iso_in_db(cone(g), mf_shift(f.source), rotation_policy)
                if rot.status != "iso":
                    bad.append(("rotation", n, mu, nu, rot.status))
    return bad


# -- the criteria ------------------------------------------------------


def test_criterion_1(capsys):
    bad = hom_table_failures(QQ, range(2, 9))
    _report(capsys, 1, not bad)
    assert not bad, bad[:5]


def test_criterion_2(capsys):
    bad = cok_bridge_failures(QQ, range(2, 7))
    _report(capsys, 2, not bad)
    assert not bad, bad[:5]


def test_criterion_3(capsys):
    bad = []
    sample = knorrer(realize_an_object(an_context(), 3, 1))
    if sample.ctx.variables != ("z", "x", "y"):
        bad.append(("variables", sample.ctx.variables))
    if unshifted_w(sample) != parse_poly(sample.ctx, "z^3 + x*y"):
        bad.append(("fiber", str(unshifted_w(sample))))
    for n in (2, 3, 4):
        ctx = an_context()
        lifted = {mu: knorrer(realize_an_object(ctx, n, mu)) for mu in range(1, n)}
        for mu in range(1, n):
            for nu in range(1, n):
                want = min(_depth(n, mu), _depth(n, nu))
                got, _ = graded_stable_hom_dim(lifted[mu], lifted[nu])
                if got != want:
                    bad.append(("knorrer-dim", n, mu, nu, want, got))
    _report(capsys, 3, not bad)
    assert not bad, bad[:5]


def test_criterion_4(capsys):
    bad = triangulated_failures(QQ, range(2, 6))
    _report(capsys, 4, not bad)
    assert not bad, bad[:5]


def test_criterion_5(capsys):
    bad = []
    for n in range(2, 7):
        for mu in range(1, n):
            for nu in range(1, n):
                tri = an_triangle(an_generator(QQ, n, mu, nu))
                want_sign = -1 if nu - mu < 0 else 1
                stated = an_scale(
                    an_generator(QQ, n, tri.third[0], (n - mu) % n or n - mu), want_sign
                )
                if tri.h[0] != stated:
                    bad.append(("fst-sign", n, mu, nu))
                if not certify_an_triangle(tri)["certified"]:
                    bad.append(("fst", n, mu, nu))
    for n in range(2, 6):
        for mu in range(1, n):
            for nu in range(1, n):
                for lam in an_hom_basis(n, mu, nu)[1:]:
                    tri = an_triangle(an_basis_morphism(QQ, n, mu, nu, lam))
                    if not certify_an_triangle(tri)["certified"]:
                        bad.append(("lst", n, mu, nu, lam))
    _report(capsys, 5, not bad)
    assert not bad, bad[:5]


def test_criterion_6(capsys):
    rng = random.Random(20260821)
    ctx = an_context()
    bad = []
    lifted_count = 0
    for i in range(100):
        n = rng.randint(2, 6)
        indices = [rng.randint(1, n - 1) for _ in range(rng.randint(1, 3))]
        x = realize_an_sum(ctx, n, indices)
        if rng.random() < 0.5:
            x = mf_shift(x)
        if rng.random() < 0.3:
            x = knorrer(x)
            lifted_count += 1
        for var in x.ctx.variables:
            s = x.p0.partial_derivative(var)
            t = x.p1.partial_derivative(var)
            boundary = Homotopy(x, x, s, t).boundary()
            target = multiplication_morphism(x, x.w.partial_derivative(var))
            if boundary.f1 != target.f1 or boundary.f0 != target.f0:
                bad.append((i, var))
    if not 0 < lifted_count < 100:
        bad.append(("mix", lifted_count))
    _report(capsys, 6, not bad)
    assert not bad, bad[:5]


def test_criterion_7(capsys):
    bad = []
    ctx = RingContext(QQ, ("z",))
    x = rank_one(
        ctx,
        parse_poly(ctx, "z^2 - 1"),
        parse_poly(ctx, "z - 1"),
        parse_poly(ctx, "z + 1"),
    )
    r = find_null_homotopy(identity_morphism(x))
    if not r.found:
        bad.append("identity-not-null")
    elif (
        r.homotopy.s.entries[0][0] != parse_poly(ctx, "-1/2")
        or r.homotopy.t.entries[0][0] != parse_poly(ctx, "1/2")
    ):
        bad.append(("witness", str(r.homotopy.s.entries[0][0])))
    values, has_irrational = critical_values(parse_poly(ctx, "z^3 - 3*z"))
    if set(values) != {QQ.from_int(2), QQ.from_int(-2)} or has_irrational:
        bad.append(("critical", values, has_irrational))
    w = parse_poly(ctx, "z^3 - 3*z")
    zero, one, three = QQ.zero(), QQ.one(), QQ.from_int(3)
    block1 = [[zero]]
    block2 = [[zero, three], [one, zero]]
    for a in range(5):
        for b in range(3):
            if a + 2 * b == 0 or a + 2 * b > 4:
                continue
            dim = a + 2 * b
            z = [[zero] * dim for _ in range(dim)]
            offset = 0
            for block in [block1] * a + [block2] * b:
                for i in range(len(block)):
                    for j in range(len(block)):
                        z[offset + i][offset + j] = block[i][j]
                offset += len(block)
            m = module_new(w, z)
            if stable_hom(m, m).dim != 0:
                bad.append(("smooth-end", a, b))
    _report(capsys, 7, not bad)
    assert not bad, bad[:5]


def _partitions(max_total, max_part):
    out = []

    def rec(prefix, remaining, cap):
        for part in range(1, min(cap, remaining) + 1):
            cur = prefix + [part]
            out.append(cur)
            rec(cur, remaining - part, part)

    rec([], max_total, max_part)
    return out


def test_criterion_8(capsys):
    bad = []
    for n in range(2, 6):
        for parts in _partitions(6, n):
            m = reduce(
                direct_sum_modules, [cyclic_module(QQ, n, p) for p in parts]
            )
            back = decompose(cok(stabilize(m)).module)
            want = Counter(p for p in parts if p != n)
            got = {k: v for k, v in back.items() if k != n}
            if got != dict(want):
                bad.append(("roundtrip", n, tuple(parts), back))
    ctx = an_context()
    policy = SearchPolicy(mode="bounded", bound=3)
    for n in range(2, 6):
        for mu in range(1, n):
            lifted = stabilize(cyclic_module(QQ, n, mu))
            model = realize_an_object(ctx, n, mu)
            r = is_iso_in_db(lifted, model, policy)
            if r.status != "iso":
                bad.append(("stabilize-iso", n, mu, r.status))
    _report(capsys, 8, not bad)
    assert not bad, bad[:5]


def test_criterion_9(capsys):
    bad = []
    for field in (PrimeField(5), PrimeField(101)):
        p = field.p
        bad += hom_table_failures(field, [n for n in range(2, 9) if n % p])
        bad += cok_bridge_failures(field, [n for n in range(2, 7) if n % p])
        bad += triangulated_failures(field, [n for n in range(2, 6) if n % p])
    _report(capsys, 9, not bad)
    assert not bad, bad[:5]
