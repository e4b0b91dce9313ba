"""Finitely presented commutative algebras ``k[x_1..x_m]/(f_1..f_r)``.

Normal forms are only computed for univariate or monomial relation sets,
which avoids needing Gröbner bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

import numpy as np
import sympy
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication,
                                        parse_expr, standard_transformations)

from .algebras import FinDimAlgebra
from .errors import GuardError, ValidationError
from .fields import Field

Poly = dict  # {exponent tuple: nonzero field scalar}

_UNSET = object()

_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication)


def parse_polynomial(text: str, variables: Sequence[str], field: Field) -> Poly:
    syms = {v: sympy.Symbol(v) for v in variables}
    try:
        expr = parse_expr(text, local_dict=syms, transformations=_TRANSFORMS)
    except Exception as exc:  # sympy raises a zoo of exception types
        raise ValidationError(f"cannot parse relation {text!r}: {exc}",
                              field="relations") from None
    if not isinstance(expr, sympy.Expr) or expr.has(sympy.zoo, sympy.oo, sympy.nan):
        raise ValidationError(f"relation {text!r} is not a finite polynomial",
                              field="relations")
    extra = {str(s) for s in expr.free_symbols} - set(variables)
    if extra:
        raise ValidationError(f"relation {text!r} uses unknown variables "
                              f"{sorted(extra)}", field="relations")
    try:
        poly = sympy.Poly(expr, *[syms[v] for v in variables], domain="QQ") \
            if variables else None
    except (sympy.PolynomialError, sympy.polys.polyerrors.CoercionFailed) as exc:
        raise ValidationError(f"relation {text!r} is not a polynomial: {exc}",
                              field="relations") from None
    if poly is None:
        val = sympy.Rational(expr)
        terms = {(): Fraction(int(val.p), int(val.q))}
    else:
        terms = {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in poly.terms()}
    return _clean({e: field(c) for e, c in terms.items()})


def _clean(p: Poly) -> Poly:
    return {e: c for e, c in p.items() if c != 0}


def poly_to_str(p: Poly, variables: Sequence[str]) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, reverse=True):
        mono = "*".join(v if k == 1 else f"{v}^{k}"
                        for v, k in zip(variables, e) if k)
        c = p[e]
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


def derivative(p: Poly, i: int, field: Field) -> Poly:
    out = {}
    for e, c in p.items():
        if e[i]:
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[e2] = field(Fraction(c) * e[i]) if field.p == 0 else (c * e[i]) % field.p
    return _clean(out)


# ---- univariate helpers (coefficient lists, lowest degree first)


def _to_coeffs(p: Poly) -> list:
    if not p:
        return []
    deg = max(e[0] for e in p)
    out = [0] * (deg + 1)
    for e, c in p.items():
        out[e[0]] = c
    return out


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list, b: list, field: Field) -> list:
    a = _trim(list(a))
    lead = field.inv(b[-1])
    while len(a) >= len(b):
        q = a[-1] * lead
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            v = a[shift + i] - q * bc
            a[shift + i] = v % field.p if field.p else v
        _trim(a)
    return a


def _poly_gcd(a: list, b: list, field: Field) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, field)
    if a:
        inv = field.inv(a[-1])
        a = [(c * inv) % field.p if field.p else c * inv for c in a]
    return a


class CommRingPres:
    """``k[vars]/(relations)`` with relations given as strings or polynomials."""

    def __init__(self, field: Field, variables: Sequence[str],
                 relations: Sequence = (), name: str | None = None):
        self.field = field
        self.variables = tuple(str(v) for v in variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError("duplicate variable names", field="vars")
        polys = []
        for r in relations:
            p = parse_polynomial(r, self.variables, field) if isinstance(r, str) \
                else _clean({tuple(e): field(c) for e, c in dict(r).items()})
            if p:
                polys.append(p)
        self.relations: tuple[Poly, ...] = tuple(polys)
        self.name = name
        self._basis: list | None | object = _UNSET
        self._gen = None

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def kind(self) -> str:
        if self.nvars <= 1:
            return "univariate"
        if all(len(p) == 1 for p in self.relations):
            return "monomial"
        return "general"

    def _guard(self):
        if self.kind == "general":
            raise GuardError(
                "normal forms need univariate or monomial relations; "
                f"got {len(self.relations)} relations in {self.nvars} variables")

    def generator(self) -> list:
        """Monic generator of the ideal (univariate only), lowest degree first."""
        if self._gen is None:
            if self.nvars == 0:
                self._gen = [self.field(1)] if self.relations else []
            else:
                g: list = []
                for p in self.relations:
                    g = _poly_gcd(g, _to_coeffs(p), self.field)
                self._gen = g
        return self._gen

    def standard_monomials(self) -> list[tuple] | None:
        """Basis monomials of the quotient, or None if it is infinite."""
        self._guard()
        if self._basis is not _UNSET:
            return self._basis
        if self.nvars == 0:
            basis = [] if self.relations else [()]
        elif self.kind == "univariate":
            g = self.generator()
            if not g:
                basis = None
            else:
                basis = [(k,) for k in range(len(g) - 1)]
        else:
            monos = [next(iter(p)) for p in self.relations]
            bounds = []
            for i in range(self.nvars):
                pure = [e[i] for e in monos
                        if all(k == 0 for j, k in enumerate(e) if j != i)]
                bounds.append(min(pure) if pure else None)
            if any(all(k == 0 for k in e) for e in monos):
                basis = []
            elif any(b is None for b in bounds):
                basis = None
            else:
                basis = [e for e in iproduct(*[range(b) for b in bounds])
                         if not any(all(x >= y for x, y in zip(e, m)) for m in monos)]
                basis.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
        self._basis = basis
        return basis

    def is_finite(self) -> bool:
        return self.standard_monomials() is not None

    def dim(self) -> int | None:
        b = self.standard_monomials()
        return None if b is None else len(b)

    def reduce(self, p: Poly) -> np.ndarray:
        """Coordinates of the class of ``p`` in the standard-monomial basis."""
        basis = self.standard_monomials()
        if basis is None:
            raise GuardError("quotient is infinite-dimensional; no coordinates")
        f = self.field
        out = f.zeros((len(basis),))
        if not basis:
            return out
        if self.nvars == 0:
            out[0] = p.get((), 0)
            return out
        if self.kind == "univariate":
            rem = _poly_rem(_to_coeffs(p), self.generator(), f)
            for k, c in enumerate(rem):
                out[k] = c
            return out
        index = {e: i for i, e in enumerate(basis)}
        for e, c in p.items():
            if e in index:
                v = out[index[e]] + c
                out[index[e]] = v % f.p if f.p else v
        return out

    def to_algebra(self) -> FinDimAlgebra:
        basis = self.standard_monomials()
        if basis is None:
            raise GuardError("quotient is infinite-dimensional")
        f = self.field
        d = len(basis)
        c = f.zeros((d, d, d))
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                c[i, j] = self.reduce({tuple(x + y for x, y in zip(a, b)): f(1)})
        unit = self.reduce({(0,) * self.nvars: f(1)})
        return FinDimAlgebra(f, d, c, unit, name=self.name)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "vars": list(self.variables),
                "relations": [poly_to_str(p, self.variables) for p in self.relations]}

    def __repr__(self):
        rels = ", ".join(poly_to_str(p, self.variables) for p in self.relations)
        return f"{self.field.name}[{','.join(self.variables)}]/({rels})"


@dataclass(frozen=True)
class PresentedModule:
    """``A^m / (relations)`` over a presented commutative ring.

    ``relations[j][i]`` is the coefficient of generator ``i`` in relation ``j``.
    """

    ring: CommRingPres
    generators: tuple[str, ...]
    relations: tuple[tuple[Poly, ...], ...]

    def relation_span(self) -> np.ndarray:
        """k-basis (rows, RREF) of the A-submodule spanned by the relations,
        in coordinates ``generator * dim(A) + basis index``."""
        r = self.ring
        basis = r.standard_monomials()
        if basis is None:
            raise GuardError("k-dimensions need a finite-dimensional ring")
        f = r.field
        d, m = len(basis), len(self.generators)
        vecs = []
        for rel in self.relations:
            for b in basis:
                mono = {b: f(1)}
                vecs.append(np.concatenate(
                    [r.reduce(_mul(mono, rel[i], f)) for i in range(m)])
                    if m * d else f.zeros((0,)))
        if not vecs or not m * d:
            return f.zeros((0, m * d))
        rr, piv = f.rref(np.stack(vecs))
        return rr[:len(piv)]

    def k_dimension(self) -> int | None:
        if not self.ring.is_finite():
            return None
        return len(self.generators) * self.ring.dim() - self.relation_span().shape[0]

    def canonical(self):
        """Hashable canonical form (finite case) for comparing presentations."""
        span = self.relation_span()
        return (len(self.generators), self.ring.dim(),
                tuple(tuple(str(x) for x in row) for row in span))

    def is_free(self) -> bool:
        return all(not p for rel in self.relations for p in rel)

    def projection(self) -> np.ndarray:
        """Matrix of ``A^m -> Ω`` onto the complement of the relation span."""
        from .algebras import _complement_projection
        span = self.relation_span()
        n = len(self.generators) * self.ring.dim()
        proj, _ = _complement_projection(self.ring.field, span.T.copy(), n)
        return proj


def _mul(a: Poly, b: Poly, field: Field) -> Poly:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            out[e] = v % field.p if field.p else v
    return _clean(out)


def kaehler_differentials(r: CommRingPres) -> PresentedModule:
    """``Ω_{A/k}`` presented by generators ``dx_i`` and relations ``df_j``."""
    r._guard()
    gens = tuple(f"d{v}" for v in r.variables)
    rels = tuple(tuple(derivative(p, i, r.field) for i in range(r.nvars))
                 for p in r.relations)
    return PresentedModule(r, gens, rels)


def differential_matrix(r: CommRingPres) -> np.ndarray:
    """Matrix of the derivation ``d: A -> A^m`` (coordinates as in
    :meth:`PresentedModule.relation_span`)."""
    basis = r.standard_monomials()
    if basis is None:
        raise GuardError("quotient is infinite-dimensional")
    f = r.field
    d, m = len(basis), r.nvars
    out = f.zeros((m * d, d))
    for k, e in enumerate(basis):
        mono = {e: f(1)}
        for i in range(m):
            out[i * d:(i + 1) * d, k] = r.reduce(derivative(mono, i, f))
    return out


@dataclass(frozen=True)
class HypersurfaceCotangent:
    """Two-term complex ``A·e --(·f')--> A·dx`` for ``A = k[x]/(f)``."""

    algebra: FinDimAlgebra
    differential: np.ndarray
    d0_dim: int
    d1_dim: int
    d1_basis: np.ndarray
    d0_span: np.ndarray

    def d0_canonical(self):
        return (1, self.algebra.dim,
                tuple(tuple(str(x) for x in row) for row in self.d0_span))


def hypersurface_cotangent(r: CommRingPres) -> HypersurfaceCotangent:
    if r.nvars != 1 or len(r.relations) != 1:
        raise ValidationError("hypersurface model needs one variable and one "
                              "relation", field="relations")
    f = r.field
    g = r.relations[0]
    if max(e[0] for e in g) < 1:
        raise ValidationError("relation must have degree >= 1", field="relations")
    a = r.to_algebra()
    fp = r.reduce(derivative(g, 0, f)) if a.dim else f.zeros((0,))
    mat = a.left_matrix(fp) if a.dim else f.zeros((0, 0))
    rank = f.rank(mat) if a.dim else 0
    ker = f.kernel(mat) if a.dim else f.zeros((0, 0))
    if a.dim:
        rr, piv = f.rref(mat.T.copy())
        span = rr[:len(piv)]
    else:
        span = f.zeros((0, 0))
    return HypersurfaceCotangent(a, mat, a.dim - rank, ker.shape[1], ker, span)
