"""Command line front end.

Files in, files out: every subcommand reads the JSON formats, prints a
deterministic report to stdout, and materializes witnesses (homotopies,
comparison isomorphisms, certificates) as files under --out so that
negative results stay auditable.  Exit status 0 means every check passed,
1 means a mathematical failure with a witness, 2 means unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import andyn, critical, formats, homotopy
from .factorization import mf_shift, standard_triangle
from .fields import field_from_token
from .knorrer import knorrer
from .modules import cok, decompose, stabilize, stable_hom
from .poly import RingContext

USAGE_ERROR_PREFIXES = (
    "parse-error",
    "unknown-variable",
    "malformed-exponent",
    "non-invertible-denominator",
    "invalid-shape",
    "wrong-arity",
    "variable-collision",
    "not-univariate",
    "index-out-of-range",
    "context-mismatch",
    "superpotential-mismatch",
    "policy-infeasible",
    "zero-superpotential",
    "constant-superpotential",
    "not-composable",
    "shape-mismatch",
)


def _stem(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _outdir(args) -> str:
    out = getattr(args, "out", None) or "."
    os.makedirs(out, exist_ok=True)
    return out


def _emit(path: str) -> str:
    print(f"wrote {path}")
    return path


def _abs(path: str) -> str:
    return os.path.abspath(path)


# -- subcommand handlers -----------------------------------------------


def cmd_validate(args) -> int:
    kind, data = formats.classify_file(args.file)
    base = os.path.dirname(os.path.abspath(args.file))
    if kind == "factorization":
        x = formats.mf_from_dict(data)
        print(f"valid factorization: rank {x.rank}, W = {formats.unshifted_w(x)}")
    elif kind == "morphism":
        f = formats.morphism_from_dict(data, base)
        print(
            f"valid morphism: rank {f.source.rank} -> rank {f.target.rank}, "
            f"W = {formats.unshifted_w(f.source)}"
        )
    elif kind == "homotopy":
        h = formats.homotopy_from_dict(data, base)
        h.boundary()
        print(f"valid homotopy: rank {h.source.rank} -> rank {h.target.rank}")
    else:
        m = formats.module_from_dict(data)
        print(f"valid module: dim {m.dim} over fiber {m.w}")
    return 0


def cmd_shift(args) -> int:
    x = formats.load_mf(args.file)
    out = os.path.join(_outdir(args), f"{_stem(args.file)}-shift.json")
    formats.save_mf(out, mf_shift(x))
    _emit(out)
    return 0


def cmd_cone(args) -> int:
    f = formats.load_morphism(args.file)
    with open(args.file) as fh:
        refs = json.load(fh)
    base = os.path.dirname(os.path.abspath(args.file))
    source_ref = _abs(formats._resolve(base, refs["source"]))
    target_ref = _abs(formats._resolve(base, refs["target"]))
    cone_obj, g, h = standard_triangle(f)
    outdir = _outdir(args)
    stem = _stem(args.file)
    cone_path = _abs(os.path.join(outdir, f"{stem}-cone.json"))
    shift_path = _abs(os.path.join(outdir, f"{stem}-source-shift.json"))
    formats.save_mf(cone_path, cone_obj)
    formats.save_mf(shift_path, h.target)
    g_path = os.path.join(outdir, f"{stem}-cone-g.json")
    h_path = os.path.join(outdir, f"{stem}-cone-h.json")
    formats.save_morphism(g_path, g, target_ref, cone_path)
    formats.save_morphism(h_path, h, cone_path, shift_path)
    for p in (cone_path, shift_path, g_path, h_path):
        _emit(p)
    return 0


def cmd_knorrer(args) -> int:
    x = formats.load_mf(args.file)
    k = knorrer(x, args.x, args.y)
    out = os.path.join(_outdir(args), f"{_stem(args.file)}-knorrer.json")
    formats.save_mf(out, k)
    _emit(out)
    return 0


def cmd_hom(args) -> int:
    x = formats.load_mf(args.left)
    y = formats.load_mf(args.right)
    if x.ctx != y.ctx:
        raise ValueError("context-mismatch: the two factorization files differ in ring data")
    if x.w != y.w:
        raise ValueError("superpotential-mismatch: the two files factor different fibers")
    outdir = _outdir(args)
    stem = f"{_stem(args.left)}-{_stem(args.right)}"
    if args.bound is not None:
        dim = homotopy.bounded_stable_hom_estimate(x, y, args.bound)
        print(f"dim {dim} (degree bound {args.bound}, not certified)")
        return 0
    use_graded = args.graded or (x.ctx.weights is not None and not args.bounded)
    if use_graded:
        dim, cert = homotopy.graded_stable_hom_dim(x, y)
        path = os.path.join(outdir, f"{stem}-hom-certificate.json")
        with open(path, "w") as fh:
            fh.write(formats.canonical_json(cert))
        print(f"dim {dim}")
        _emit(path)
        return 0
    bound = homotopy.resolve_bound(None, x, y)
    dim = homotopy.bounded_stable_hom_estimate(x, y, bound)
    print(f"dim {dim} (degree bound {bound}, not certified)")
    return 0


def cmd_stable_hom(args) -> int:
    m = formats.load_module(args.left)
    n = formats.load_module(args.right)
    sh = stable_hom(m, n)
    print(f"dim {sh.dim}")
    outdir = _outdir(args)
    path = os.path.join(
        outdir, f"{_stem(args.left)}-{_stem(args.right)}-stable-hom.json"
    )
    witness = {
        "dim": sh.dim,
        "hom_dim": len(sh.hom_basis),
        "quotient_basis": [
            [[formats.scalar_to_str(m.field, c) for c in row] for row in mat]
            for mat in sh.quotient_basis
        ],
    }
    with open(path, "w") as fh:
        fh.write(formats.canonical_json(witness))
    _emit(path)
    return 0


def cmd_cok(args) -> int:
    x = formats.load_mf(args.file)
    pres = cok(x)
    print(f"dim {pres.module.dim}")
    from . import univariate as uni

    for start, d in pres.blocks:
        print(f"block at {start}: {uni.to_poly(x.ctx, x.ctx.variables[0], d)}")
    out = os.path.join(_outdir(args), f"{_stem(args.file)}-cok.json")
    formats.save_module(out, pres.module)
    _emit(out)
    return 0


def cmd_stabilize(args) -> int:
    m = formats.load_module(args.file)
    x = stabilize(m)
    out = os.path.join(_outdir(args), f"{_stem(args.file)}-stabilize.json")
    formats.save_mf(out, x)
    _emit(out)
    return 0


def cmd_decompose(args) -> int:
    m = formats.load_module(args.file)
    mults = decompose(m)
    for mu in sorted(mults):
        print(f"V_{mu}: {mults[mu]}")
    return 0


def cmd_critical_values(args) -> int:
    ctx = RingContext(variables=(args.var,))
    w = ctx.parse(args.poly)
    values, has_irrational = critical.critical_values(w)
    for v in values:
        print(v)
    print(f"irrational-remainder: {'yes' if has_irrational else 'no'}")
    return 0


def cmd_an_table(args) -> int:
    field = field_from_token(args.field)
    table = andyn.an_hom_table(args.n)
    sep = "," if args.csv else " "
    for row in table:
        print(sep.join(str(v) for v in row))
    return 0


def cmd_an_verify(args) -> int:
    field = field_from_token(args.field)
    outdir = _outdir(args)
    report = andyn.an_verify(args.n, field, lst_sample=args.lst_sample)
    failures = 0
    for check in report["checks"]:
        params = ",".join(f"{k}={v}" for k, v in sorted(check["params"].items()))
        status = "PASS" if check["ok"] else "FAIL"
        witness = "-"
        if "certificate" in check:
            name = f"an{args.n}-{check['check']}-" + "-".join(
                str(v) for _, v in sorted(check["params"].items())
            )
            witness = os.path.join(outdir, f"{name}.json")
            with open(witness, "w") as fh:
                fh.write(formats.canonical_json(check["certificate"]))
        print(f"{check['check']} {params} {status} {witness}")
        if not check["ok"]:
            failures += 1
    print(f"checks {len(report['checks'])}, failures {failures}")
    return 0 if failures == 0 else 1


def cmd_verify_knorrer(args) -> int:
    field = field_from_token(args.field)
    n = args.n
    ctx = andyn.an_context(field)
    pairs = []
    for mu in range(1, n):
        for nu in range(1, n):
            if args.pairs == "diag" and mu != nu:
                continue
            pairs.append((mu, nu))
    failures = 0
    records = []
    for mu, nu in pairs:
        kx = knorrer(andyn.realize_an_object(ctx, n, mu))
        ky = knorrer(andyn.realize_an_object(ctx, n, nu))
        got, cert = homotopy.graded_stable_hom_dim(kx, ky)
        want = andyn.an_hom_dim(n, mu, nu)
        ok = got == want
        if not ok:
            failures += 1
        records.append(
            {"mu": mu, "nu": nu, "want": want, "got": got, "ok": ok, "scan": cert}
        )
        print(f"pair mu={mu} nu={nu} want {want} got {got} {'PASS' if ok else 'FAIL'}")
    outdir = _outdir(args)
    path = os.path.join(outdir, f"verify-knorrer-{n}-{args.pairs}.json")
    with open(path, "w") as fh:
        fh.write(formats.canonical_json(records))
    _emit(path)
    print(f"pairs {len(pairs)}, failures {failures}")
    return 0 if failures == 0 else 1


# -- parser and dispatch -----------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mfcat",
        description="Exact computations with matrix factorizations of a superpotential.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_out(p):
        p.add_argument("--out", default=None, help="directory for emitted files")
        return p

    p = sub.add_parser("validate", help="check a factorization/morphism/homotopy/module file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = with_out(sub.add_parser("shift", help="translate a factorization"))
    p.add_argument("file")
    p.set_defaults(func=cmd_shift)

    p = with_out(sub.add_parser("cone", help="mapping cone and its standard triangle"))
    p.add_argument("file")
    p.set_defaults(func=cmd_cone)

    p = with_out(sub.add_parser("knorrer", help="tensor with the hyperbolic (x, y) factorization"))
    p.add_argument("file")
    p.add_argument("--x", default="x", help="first new variable name")
    p.add_argument("--y", default="y", help="second new variable name")
    p.set_defaults(func=cmd_knorrer)

    p = with_out(sub.add_parser("hom", help="stable morphism dimension between factorizations"))
    p.add_argument("left")
    p.add_argument("right")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--graded", action="store_true", help="certified graded scan")
    mode.add_argument("--bounded", action="store_true", help="non-certified bounded search")
    mode.add_argument("--bound", type=int, default=None, help="explicit degree bound")
    p.set_defaults(func=cmd_hom)

    p = with_out(sub.add_parser("stable-hom", help="stable Hom dimension between modules"))
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_stable_hom)

    p = with_out(sub.add_parser("cok", help="cokernel module of a factorization"))
    p.add_argument("file")
    p.set_defaults(func=cmd_cok)

    p = with_out(sub.add_parser("stabilize", help="factorization presenting a module"))
    p.add_argument("file")
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("decompose", help="Jordan multiplicities of a module over z^n")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("critical-values", help="rational critical values of a superpotential")
    p.add_argument("poly")
    p.add_argument("--var", default="z")
    p.set_defaults(func=cmd_critical_values)

    p = sub.add_parser("an-table", help="Hom dimension grid for W = z^n")
    p.add_argument("n", type=int)
    p.add_argument("--field", default="Q")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_an_table)

    p = with_out(sub.add_parser("an-verify", help="cross-check the z^n catalogue"))
    p.add_argument("n", type=int)
    p.add_argument("--field", default="Q")
    p.add_argument("--lst-sample", choices=("all", "first"), default="all")
    p.set_defaults(func=cmd_an_verify)

    p = with_out(sub.add_parser("verify-knorrer", help="check hom dimensions across the hyperbolic tensor"))
    p.add_argument("n", type=int)
    p.add_argument("--pairs", choices=("all", "diag"), default="all")
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_verify_knorrer)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as e:
        print(f"parse error: line {e.lineno}, column {e.colno}: {e.msg}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"no such file: {e.filename}", file=sys.stderr)
        return 2
    except ValueError as e:
        message = str(e)
        print(message, file=sys.stderr)
        if message.startswith(USAGE_ERROR_PREFIXES):
            return 2
        return 1


if __name__ == "__main__":
    sys.exit(run())
