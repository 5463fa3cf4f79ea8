"""Sparse multivariate polynomials over an exact coefficient field.

A polynomial is a map from exponent tuples to nonzero scalars, tied to a
``RingContext`` that fixes the field, the variable names, optional positive
integer weights, and the base point w0 used to shift a superpotential.

Canonical serialization emits terms in graded-lexicographic order: higher
total degree first, ties broken by the lexicographic order on exponent
tuples (variables in context order).  Printing then parsing is the
identity on polynomials, and parsing then printing canonicalizes any
accepted expression, which is what makes file formats diff-stable.

The zero polynomial has no degree: ``degree``/``weighted_degree`` raise on
it rather than returning a sentinel value.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from .fields import Field, QQ, Scalar

# Exponents live in machine range; arithmetic checks sums explicitly.
EXPONENT_LIMIT = 2**31 - 1

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class RingContext:
    """Fixes field, variables, optional weights, and the base point w0."""

    field: Field = QQ
    variables: Tuple[str, ...] = ("z",)
    weights: Optional[Tuple[int, ...]] = None
    w0: Scalar = dc_field(default=Fraction(0))

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"variable-collision: duplicate names in {self.variables}")
        for v in self.variables:
            if not v or not (v[0].isalpha() or v[0] == "_") or not all(
                ch.isalnum() or ch == "_" for ch in v
            ):
                raise ValueError(f"unknown-variable: {v!r} is not a valid name")
        if self.weights is not None:
            if len(self.weights) != len(self.variables):
                raise ValueError(
                    "shape-mismatch: weights must match variables "
                    f"({len(self.weights)} vs {len(self.variables)})"
                )
            if any((not isinstance(w, int)) or w <= 0 for w in self.weights):
                raise ValueError(f"shape-mismatch: weights must be positive integers, got {self.weights}")
        object.__setattr__(self, "w0", self.field.coerce(self.w0))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown-variable: {name!r} not in {self.variables}") from None

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(self.field.one())

    def constant(self, c) -> "Poly":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Poly":
        i = self.var_index(name)
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {exp: self.field.one()})

    def monomial(self, exponents: Iterable[int], coeff=1) -> "Poly":
        exp = tuple(exponents)
        if len(exp) != self.nvars:
            raise ValueError(f"shape-mismatch: exponent tuple {exp} for {self.nvars} variables")
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero()
        _check_exponents(exp)
        return Poly(self, {exp: c})

    def parse(self, text: str) -> "Poly":
        from .parse import parse_poly

        return parse_poly(self, text)

    def shifted(self, **changes) -> "RingContext":
        """A copy with some fields replaced (weights, w0, ...)."""
        data = {
            "field": self.field,
            "variables": self.variables,
            "weights": self.weights,
            "w0": self.w0,
        }
        data.update(changes)
        return RingContext(**data)


def _check_exponents(exp: Exponent) -> None:
    for e in exp:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"malformed-exponent: {e!r}")
        if e > EXPONENT_LIMIT:
            raise ValueError(f"malformed-exponent: {e} exceeds the machine-width bound")


def grlex_key(exp: Exponent):
    return (sum(exp), exp)


class Poly:
    """Immutable sparse polynomial attached to a RingContext."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RingContext, terms: Dict[Exponent, Scalar]):
        clean: Dict[Exponent, Scalar] = {}
        fld = ctx.field
        for exp, c in terms.items():
            if len(exp) != ctx.nvars:
                raise ValueError(
                    f"shape-mismatch: exponent tuple {exp} for {ctx.nvars} variables"
                )
            _check_exponents(exp)
            if not fld.is_zero(c):
                clean[exp] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("constant-superpotential: polynomial is not constant")
        zero_exp = (0,) * self.ctx.nvars
        return self.terms.get(zero_exp, self.ctx.field.zero())

    # -- degrees -------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def weighted_degree(self) -> int:
        w = self.ctx.weights
        if w is None:
            raise ValueError("no-weights-configured: context has no weights")
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(wi * ei for wi, ei in zip(w, e)) for e in self.terms)

    def weighted_degrees(self) -> set:
        """Set of weighted degrees of the individual terms."""
        w = self.ctx.weights
        if w is None:
            raise ValueError("no-weights-configured: context has no weights")
        return {sum(wi * ei for wi, ei in zip(w, e)) for e in self.terms}

    def is_quasi_homogeneous(self) -> bool:
        return len(self.weighted_degrees()) <= 1

    def homogeneous_components(self) -> Dict[int, "Poly"]:
        """Split into weighted-homogeneous parts, keyed by weighted degree."""
        w = self.ctx.weights
        if w is None:
            raise ValueError("no-weights-configured: context has no weights")
        parts: Dict[int, Dict[Exponent, Scalar]] = {}
        for e, c in self.terms.items():
            d = sum(wi * ei for wi, ei in zip(w, e))
            parts.setdefault(d, {})[e] = c
        return {d: Poly(self.ctx, t) for d, t in sorted(parts.items())}

    # -- arithmetic ----------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ValueError("context-mismatch: polynomials from different contexts")
            return other
        return self.ctx.constant(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce_other(other)
        fld = self.ctx.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = fld.add(terms.get(e, fld.zero()), c)
            if fld.is_zero(acc):
                terms.pop(e, None)
            else:
                terms[e] = acc
        return Poly(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        fld = self.ctx.field
        return Poly(self.ctx, {e: fld.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce_other(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce_other(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce_other(other)
        fld = self.ctx.field
        out: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                _check_exponents(e)
                acc = fld.add(out.get(e, fld.zero()), fld.mul(c1, c2))
                if fld.is_zero(acc):
                    out.pop(e, None)
                else:
                    out[e] = acc
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"malformed-exponent: {n!r}")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * self.ctx.constant(c)

    def partial_derivative(self, var: str) -> "Poly":
        i = self.ctx.var_index(var)
        fld = self.ctx.field
        out: Dict[Exponent, Scalar] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            coeff = fld.mul(c, fld.from_int(e[i]))
            if fld.is_zero(coeff):
                continue
            e2 = tuple(x - 1 if j == i else x for j, x in enumerate(e))
            out[e2] = fld.add(out.get(e2, fld.zero()), coeff) if e2 in out else coeff
        return Poly(self.ctx, out)

    # -- views ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * self.ctx.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.ctx.variables, used) if u)

    def univariate_coefficients(self, var: str):
        """Dense coefficient list [c0, c1, ...] in the named variable.

        Raises not-univariate if any other variable occurs.
        """
        i = self.ctx.var_index(var)
        others = [v for v in self.used_variables() if v != var]
        if others:
            raise ValueError(f"not-univariate: also uses {others}")
        fld = self.ctx.field
        if not self.terms:
            return []
        d = max(e[i] for e in self.terms)
        coeffs = [fld.zero()] * (d + 1)
        for e, c in self.terms.items():
            coeffs[e[i]] = c
        return coeffs

    # -- equality and printing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, tuple(self.sorted_terms())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        fld = self.ctx.field
        pieces = []
        for k, (exp, c) in enumerate(self.sorted_terms()):
            negative = fld.is_negative(c)
            mag = fld.abs(c)
            factors = []
            for name, e in zip(self.ctx.variables, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = fld.format(mag)
            elif fld.is_zero(fld.sub(mag, fld.one())):
                body = "*".join(factors)
            else:
                body = fld.format(mag) + "*" + "*".join(factors)
            if k == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"
