"""Exact computations with matrix factorizations of a polynomial
superpotential: the homotopy category (shift, cones, triangles), the
equivalence with the stable module category of the singular fiber, the
hyperbolic tensor functor, and the closed-form z^n catalogue.
"""

from .fields import QQ, Field, PrimeField, RationalField, field_from_token
from .poly import Poly, RingContext
from .parse import parse_poly
from .matrices import PolyMatrix
from .factorization import (
    Homotopy,
    MatrixFactorization,
    MFMorphism,
    compose,
    cone,
    cone_inclusion_homotopy,
    identity_morphism,
    mf_direct_sum,
    mf_from_polys,
    mf_new,
    mf_shift,
    mf_zero_object,
    morphism_add,
    morphism_from_polys,
    morphism_new,
    morphism_scale,
    morphism_sub,
    multiplication_morphism,
    partial_derivative_homotopy,
    rank_one,
    shift_morphism,
    standard_triangle,
    unshifted_w,
    w_multiplication_homotopy,
    zero_morphism,
)
from .homotopy import (
    IsoResult,
    SearchPolicy,
    SearchResult,
    bounded_stable_hom_estimate,
    find_null_homotopy,
    graded_stable_hom_dim,
    homotopy_equal,
    infer_generator_degrees,
    is_contractible,
    is_iso_in_db,
    morphism_space_basis,
)
from .knorrer import knorrer, knorrer_morphism
from .modules import (
    QuotModule,
    StableHom,
    cok,
    cok_induced_map,
    cyclic_module,
    decompose,
    direct_sum_modules,
    hom_space,
    module_new,
    stabilize,
    stable_hom,
)
from .critical import critical_values
from . import andyn, formats

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "Field",
    "PrimeField",
    "RationalField",
    "field_from_token",
    "Poly",
    "RingContext",
    "parse_poly",
    "PolyMatrix",
    "Homotopy",
    "MatrixFactorization",
    "MFMorphism",
    "compose",
    "cone",
    "cone_inclusion_homotopy",
    "identity_morphism",
    "mf_direct_sum",
    "mf_from_polys",
    "mf_new",
    "mf_shift",
    "mf_zero_object",
    "morphism_add",
    "morphism_from_polys",
    "morphism_new",
    "morphism_scale",
    "morphism_sub",
    "multiplication_morphism",
    "partial_derivative_homotopy",
    "rank_one",
    "shift_morphism",
    "standard_triangle",
    "unshifted_w",
    "w_multiplication_homotopy",
    "zero_morphism",
    "IsoResult",
    "SearchPolicy",
    "SearchResult",
    "bounded_stable_hom_estimate",
    "find_null_homotopy",
    "graded_stable_hom_dim",
    "homotopy_equal",
    "infer_generator_degrees",
    "is_contractible",
    "is_iso_in_db",
    "morphism_space_basis",
    "knorrer",
    "knorrer_morphism",
    "QuotModule",
    "StableHom",
    "cok",
    "cok_induced_map",
    "cyclic_module",
    "decompose",
    "direct_sum_modules",
    "hom_space",
    "module_new",
    "stabilize",
    "stable_hom",
    "critical_values",
    "andyn",
    "formats",
]
