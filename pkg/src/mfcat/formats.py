"""Reading and writing the JSON file formats.

Factorization files carry their own ring description: field, variables,
optional weights, the base value w0, the full superpotential W, and the
two matrices as polynomial strings.  Morphism and homotopy files point at
two factorization files (paths resolved relative to the referencing file)
and carry their component matrices.  Module files carry the fiber
polynomial and the matrix of the variable action.  Emission is canonical:
fixed key order, canonical polynomial strings, two-space indent, trailing
newline, so identical inputs produce byte-identical outputs.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import List, Optional, Tuple

from .factorization import (
    Homotopy,
    MatrixFactorization,
    MFMorphism,
    mf_new,
    morphism_new,
    unshifted_w,
)
from .fields import Field, PrimeField, QQ, RationalField
from .matrices import PolyMatrix
from .modules import QuotModule, module_new
from .poly import Poly, RingContext


def field_to_json(field: Field):
    if isinstance(field, RationalField):
        return "Q"
    if isinstance(field, PrimeField):
        return {"Fp": field.p}
    raise ValueError(f"context-mismatch: unknown field {field!r}")


def field_from_json(obj) -> Field:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return PrimeField(int(obj["Fp"]))
    raise ValueError(f"parse-error: bad field description {obj!r}")


def scalar_to_str(field: Field, c) -> str:
    return field.format(c)


def scalar_from_json(field: Field, s):
    if isinstance(s, int):
        return field.from_int(s)
    if isinstance(s, str):
        try:
            fr = Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"parse-error: bad scalar {s!r}") from e
        return field.from_fraction(fr.numerator, fr.denominator)
    raise ValueError(f"parse-error: bad scalar {s!r}")


def _matrix_to_strings(m: PolyMatrix) -> List[List[str]]:
    return [[str(p) for p in row] for row in m.entries]


def _matrix_from_strings(ctx: RingContext, rows, cols: int) -> PolyMatrix:
    entries = [[ctx.parse(s) for s in row] for row in rows]
    return PolyMatrix(ctx, entries, cols=cols)


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- factorization files -----------------------------------------------


def mf_to_dict(x: MatrixFactorization) -> dict:
    ctx = x.ctx
    out = {"field": field_to_json(ctx.field), "vars": list(ctx.variables)}
    if ctx.weights is not None:
        out["weights"] = list(ctx.weights)
    out["w0"] = scalar_to_str(ctx.field, ctx.w0)
    out["W"] = str(unshifted_w(x))
    out["rank"] = x.rank
    out["p1"] = _matrix_to_strings(x.p1)
    out["p0"] = _matrix_to_strings(x.p0)
    return out


def context_from_dict(d: dict) -> RingContext:
    field = field_from_json(d["field"])
    variables = tuple(d["vars"])
    weights = tuple(d["weights"]) if "weights" in d and d["weights"] is not None else None
    w0 = scalar_from_json(field, d.get("w0", "0"))
    return RingContext(field=field, variables=variables, weights=weights, w0=w0)


def mf_from_dict(d: dict) -> MatrixFactorization:
    for key in ("field", "vars", "W", "rank", "p1", "p0"):
        if key not in d:
            raise ValueError(f"parse-error: factorization file missing {key!r}")
    ctx = context_from_dict(d)
    rank = int(d["rank"])
    if len(d["p1"]) != rank or len(d["p0"]) != rank:
        raise ValueError("invalid-shape: matrix row count differs from rank")
    p1 = _matrix_from_strings(ctx, d["p1"], rank)
    p0 = _matrix_from_strings(ctx, d["p0"], rank)
    w = ctx.parse(d["W"])
    return mf_new(ctx, w, p1, p0)


def save_mf(path: str, x: MatrixFactorization) -> str:
    with open(path, "w") as fh:
        fh.write(canonical_json(mf_to_dict(x)))
    return path


def load_mf(path: str) -> MatrixFactorization:
    with open(path) as fh:
        return mf_from_dict(json.load(fh))


# -- morphism and homotopy files ---------------------------------------


def morphism_to_dict(f: MFMorphism, source_ref: str, target_ref: str) -> dict:
    return {
        "source": source_ref,
        "target": target_ref,
        "f1": _matrix_to_strings(f.f1),
        "f0": _matrix_to_strings(f.f0),
    }


def _resolve(base_dir: Optional[str], ref: str) -> str:
    if os.path.isabs(ref) or base_dir is None:
        return ref
    return os.path.join(base_dir, ref)


def morphism_from_dict(d: dict, base_dir: Optional[str] = None) -> MFMorphism:
    for key in ("source", "target", "f1", "f0"):
        if key not in d:
            raise ValueError(f"parse-error: morphism file missing {key!r}")
    x = load_mf(_resolve(base_dir, d["source"]))
    y = load_mf(_resolve(base_dir, d["target"]))
    f1 = _matrix_from_strings(y.ctx, d["f1"], x.rank)
    f0 = _matrix_from_strings(y.ctx, d["f0"], x.rank)
    return morphism_new(x, y, f1, f0)


def save_morphism(path: str, f: MFMorphism, source_ref: str, target_ref: str) -> str:
    with open(path, "w") as fh:
        fh.write(canonical_json(morphism_to_dict(f, source_ref, target_ref)))
    return path


def load_morphism(path: str) -> MFMorphism:
    with open(path) as fh:
        d = json.load(fh)
    return morphism_from_dict(d, os.path.dirname(os.path.abspath(path)))


def homotopy_to_dict(h: Homotopy, source_ref: str, target_ref: str) -> dict:
    return {
        "source": source_ref,
        "target": target_ref,
        "s": _matrix_to_strings(h.s),
        "t": _matrix_to_strings(h.t),
    }


def homotopy_from_dict(d: dict, base_dir: Optional[str] = None) -> Homotopy:
    for key in ("source", "target", "s", "t"):
        if key not in d:
            raise ValueError(f"parse-error: homotopy file missing {key!r}")
    x = load_mf(_resolve(base_dir, d["source"]))
    y = load_mf(_resolve(base_dir, d["target"]))
    s = _matrix_from_strings(y.ctx, d["s"], x.rank)
    t = _matrix_from_strings(y.ctx, d["t"], x.rank)
    return Homotopy(x, y, s, t)


def save_homotopy(path: str, h: Homotopy, source_ref: str, target_ref: str) -> str:
    with open(path, "w") as fh:
        fh.write(canonical_json(homotopy_to_dict(h, source_ref, target_ref)))
    return path


def load_homotopy(path: str) -> Homotopy:
    with open(path) as fh:
        d = json.load(fh)
    return homotopy_from_dict(d, os.path.dirname(os.path.abspath(path)))


# -- module files ------------------------------------------------------


def module_to_dict(m: QuotModule) -> dict:
    field = m.field
    out = {"field": field_to_json(field)}
    if m.ctx.variables != ("z",):
        out["vars"] = list(m.ctx.variables)
    out["W"] = str(m.w)
    out["dim"] = m.dim
    out["Z"] = [[scalar_to_str(field, c) for c in row] for row in m.z_matrix()]
    return out


def module_from_dict(d: dict) -> QuotModule:
    for key in ("field", "W", "dim", "Z"):
        if key not in d:
            raise ValueError(f"parse-error: module file missing {key!r}")
    field = field_from_json(d["field"])
    variables = tuple(d.get("vars", ["z"]))
    if len(variables) != 1:
        raise ValueError("not-univariate: module files use one variable")
    ctx = RingContext(field=field, variables=variables)
    w = ctx.parse(d["W"])
    dim = int(d["dim"])
    z_rows = d["Z"]
    if len(z_rows) != dim or any(len(r) != dim for r in z_rows):
        raise ValueError("invalid-shape: action matrix must be dim x dim")
    z = [[scalar_from_json(field, c) for c in row] for row in z_rows]
    return module_new(w, z)


def save_module(path: str, m: QuotModule) -> str:
    with open(path, "w") as fh:
        fh.write(canonical_json(module_to_dict(m)))
    return path


def load_module(path: str) -> QuotModule:
    with open(path) as fh:
        return module_from_dict(json.load(fh))


# -- kind sniffing for validate ----------------------------------------


def classify_file(path: str) -> Tuple[str, dict]:
    """Identify a JSON file as factorization, morphism, homotopy, or module."""
    with open(path) as fh:
        d = json.load(fh)
    if not isinstance(d, dict):
        raise ValueError("parse-error: expected a JSON object")
    keys = set(d)
    if {"p1", "p0"} <= keys:
        return "factorization", d
    if {"f1", "f0"} <= keys:
        return "morphism", d
    if {"s", "t"} <= keys:
        return "homotopy", d
    if {"Z", "dim"} <= keys:
        return "module", d
    raise ValueError("parse-error: unrecognized file contents")
