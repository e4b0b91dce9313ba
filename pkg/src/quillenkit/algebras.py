"""Finite-dimensional associative algebras, bimodules and Hochschild homology.

Structure constants are stored as ``c[i, j, k]`` with
``e_i e_j = Σ_k c[i, j, k] e_k``. Matrices act on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import config
from .errors import ValidationError
from .fields import Field
from .linalg import rank as int_rank


def _tdot(field: Field, a, b, axes):
    out = np.tensordot(a, b, axes=axes)
    return field.reduce(out) if field.p else out


def _lincomb(field: Field, coeffs, mats: Sequence[np.ndarray]) -> np.ndarray:
    out = field.zeros(mats[0].shape) if len(mats) else None
    for c, m in zip(coeffs, mats):
        if c != 0:
            out = out + c * m
    return field.reduce(out)


def _eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


class FinDimAlgebra:
    """Associative unital algebra over Q or F_p by structure constants."""

    __slots__ = ("field", "dim", "mul", "unit", "name")

    def __init__(self, field: Field, dim: int, mul, unit, name: str | None = None):
        self.field = field
        self.dim = int(dim)
        d = self.dim
        c = field.array(mul) if d else field.zeros((0, 0, 0))
        if c.shape != (d, d, d):
            raise ValidationError(f"structure constants have shape {c.shape}, "
                                  f"expected {(d, d, d)}", field="mul")
        u = field.array(unit) if d else field.zeros((0,))
        if u.shape != (d,):
            raise ValidationError("unit must have one coordinate per basis "
                                  "element", field="unit")
        c.setflags(write=False)
        u.setflags(write=False)
        self.mul = c
        self.unit = u
        self.name = name
        self._check()

    def _check(self):
        d, c, f = self.dim, self.mul, self.field
        if d == 0:
            return
        # (e_i e_j) e_k vs e_i (e_j e_k)
        lhs = _tdot(f, c, c, axes=([2], [0]))            # [i, j, k, out]
        rhs = _tdot(f, c, c, axes=([1], [2]))            # [i, out, j, k]
        rhs = np.transpose(rhs, (0, 2, 3, 1))
        if not _eq(lhs, rhs):
            bad = next(idx for idx in np.ndindex(lhs.shape) if lhs[idx] != rhs[idx])
            raise ValidationError(
                f"associativity fails on basis triple {bad[:3]}", field="mul")
        eye = f.eye(d)
        left_u = self.left_matrix(self.unit)
        right_u = self.right_matrix(self.unit)
        if not (_eq(left_u, eye) and _eq(right_u, eye)):
            raise ValidationError("unit law fails", field="unit")

    # ---- basic operations

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros((self.dim,))
        v[i] = self.field(1)
        return v

    def multiply(self, x, y) -> np.ndarray:
        t = _tdot(self.field, x, self.mul, axes=([0], [0]))     # [j, k]
        return _tdot(self.field, y, t, axes=([0], [0]))

    def left_matrix(self, a) -> np.ndarray:
        """Matrix of ``x ↦ a x``."""
        return _tdot(self.field, a, self.mul, axes=([0], [0])).T.copy()

    def right_matrix(self, b) -> np.ndarray:
        """Matrix of ``x ↦ x b``."""
        return _tdot(self.field, self.mul, b, axes=([1], [0])).T.copy()

    def left_matrices(self) -> list[np.ndarray]:
        return [self.left_matrix(self.basis_vector(i)) for i in range(self.dim)]

    def right_matrices(self) -> list[np.ndarray]:
        return [self.right_matrix(self.basis_vector(i)) for i in range(self.dim)]

    def power(self, x, n: int) -> np.ndarray:
        out = self.unit.copy()
        for _ in range(n):
            out = self.multiply(out, x)
        return out

    def is_commutative(self) -> bool:
        return _eq(self.mul, np.transpose(self.mul, (1, 0, 2)))

    def multiplication_matrix(self) -> np.ndarray:
        """``μ: A ⊗ A -> A`` with column ``i*d + j`` equal to ``e_i e_j``."""
        d = self.dim
        return self.mul.reshape(d * d, d).T.copy()

    def rebase(self, basis: np.ndarray) -> "FinDimAlgebra":
        """Same algebra in the basis given by the columns of ``basis``."""
        f, d = self.field, self.dim
        inv = f.solve(basis, f.eye(d))
        c = f.zeros((d, d, d))
        for i in range(d):
            for j in range(d):
                c[i, j] = f.reduce(inv @ self.multiply(basis[:, i], basis[:, j]))
        unit = f.reduce(inv @ self.unit)
        return FinDimAlgebra(f, d, c, unit, name=self.name)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "dim": self.dim,
                "mul": _jsonable(self.mul), "unit": _jsonable(self.unit)}

    def __repr__(self):
        return f"FinDimAlgebra({self.name or ''} dim={self.dim} over {self.field.name})"


def _jsonable(arr: np.ndarray):
    def conv(x):
        if isinstance(x, list):
            return [conv(y) for y in x]
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else str(x)
        return int(x)
    return conv(np.asarray(arr).tolist())


class Bimodule:
    """Finite-dimensional A-bimodule: ``left[i]`` and ``right[i]`` are the
    matrices of ``m ↦ e_i·m`` and ``m ↦ m·e_i``."""

    __slots__ = ("algebra", "dim", "left", "right")

    def __init__(self, algebra: FinDimAlgebra, dim: int,
                 left: Sequence, right: Sequence):
        f = algebra.field
        d = algebra.dim
        self.algebra = algebra
        self.dim = int(dim)
        self.left = tuple(f.array(x).reshape(dim, dim) for x in left)
        self.right = tuple(f.array(x).reshape(dim, dim) for x in right)
        if len(self.left) != d or len(self.right) != d:
            raise ValidationError("one action matrix per algebra basis element",
                                  field="left")
        self._check()

    def left_of(self, a) -> np.ndarray:
        if self.algebra.dim == 0:
            return self.algebra.field.zeros((self.dim, self.dim))
        return _lincomb(self.algebra.field, a, self.left)

    def right_of(self, a) -> np.ndarray:
        if self.algebra.dim == 0:
            return self.algebra.field.zeros((self.dim, self.dim))
        return _lincomb(self.algebra.field, a, self.right)

    def _check(self):
        a, f = self.algebra, self.algebra.field
        eye = f.eye(self.dim)
        if not (_eq(self.left_of(a.unit), eye) and _eq(self.right_of(a.unit), eye)):
            raise ValidationError("bimodule actions are not unital", field="left")
        for i in range(a.dim):
            for j in range(a.dim):
                prod = a.mul[i, j]
                if not _eq(f.matmul(self.left[i], self.left[j]), self.left_of(prod)):
                    raise ValidationError(f"left action not associative at "
                                          f"({i}, {j})", field="left")
                if not _eq(f.matmul(self.right[j], self.right[i]), self.right_of(prod)):
                    raise ValidationError(f"right action not associative at "
                                          f"({i}, {j})", field="right")
                if not _eq(f.matmul(self.left[i], self.right[j]),
                           f.matmul(self.right[j], self.left[i])):
                    raise ValidationError(f"left and right actions of {i}, {j} "
                                          "do not commute", field="right")

    def is_symmetric(self) -> bool:
        return all(_eq(l, r) for l, r in zip(self.left, self.right))

    def __repr__(self):
        return f"Bimodule(dim={self.dim} over {self.algebra!r})"


def regular_bimodule(a: FinDimAlgebra) -> Bimodule:
    return Bimodule(a, a.dim, a.left_matrices(), a.right_matrices())


def module_from_actions(r: FinDimAlgebra, actions: Sequence) -> Bimodule:
    """Module over a commutative algebra, viewed as a symmetric bimodule."""
    acts = list(actions)
    dim = np.asarray(acts[0], dtype=object).shape[0] if acts else 0
    return Bimodule(r, dim, acts, acts)


def is_algebra_hom(a: FinDimAlgebra, b: FinDimAlgebra, f: np.ndarray) -> bool:
    fld = a.field
    if not _eq(fld.reduce(f @ a.unit), b.unit):
        return False
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = fld.reduce(f @ a.mul[i, j])
            rhs = b.multiply(f[:, i], f[:, j])
            if not _eq(lhs, rhs):
                return False
    return True


# --------------------------------------------------------------------------
# standard algebras


def matrix_algebra(n: int, field: Field) -> FinDimAlgebra:
    d = n * n
    c = np.zeros((d, d, d), dtype=object)
    for a in range(n):
        for b in range(n):
            for e in range(n):
                c[a * n + b, b * n + e, a * n + e] = 1
    unit = [1 if i // n == i % n else 0 for i in range(d)]
    return FinDimAlgebra(field, d, c, unit, name=f"M{n}({field.name})")


def upper_triangular(field: Field) -> FinDimAlgebra:
    """Basis ``E11, E12, E22``."""
    pos = [(0, 0), (0, 1), (1, 1)]
    c = np.zeros((3, 3, 3), dtype=object)
    for i, (a, b) in enumerate(pos):
        for j, (b2, e) in enumerate(pos):
            if b == b2:
                c[i, j, pos.index((a, e))] = 1
    return FinDimAlgebra(field, 3, c, [1, 0, 1], name=f"T2({field.name})")


def product_of_fields(copies: int, field: Field) -> FinDimAlgebra:
    """``k × ... × k`` in the basis of primitive idempotents."""
    c = np.zeros((copies, copies, copies), dtype=object)
    for i in range(copies):
        c[i, i, i] = 1
    return FinDimAlgebra(field, copies, c, [1] * copies,
                         name="x".join([field.name] * copies))


def truncated_tensor_algebra(n: int, degree: int, field: Field) -> tuple[FinDimAlgebra, list]:
    """``T(x_1..x_n)`` modulo words longer than ``degree``; basis words sorted
    by length then lexicographically."""
    from itertools import product as iproduct
    words = [w for k in range(degree + 1) for w in iproduct(range(n), repeat=k)]
    index = {w: i for i, w in enumerate(words)}
    d = len(words)
    config.check_entries(d * d, d, what="structure constants")
    c = np.zeros((d, d, d), dtype=object)
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if len(u) + len(v) <= degree:
                c[i, j, index[u + v]] = 1
    unit = [1] + [0] * (d - 1)
    return FinDimAlgebra(field, d, c, unit, name=f"T{n}<= {degree}"), words


# --------------------------------------------------------------------------
# ideals, quotients and the commutator quotient


def _complement_projection(field: Field, span: np.ndarray, d: int):
    """Projection onto the coordinates complementary to an RREF of ``span``.

    Returns ``(proj, lift)``: ``proj`` is ``q x d`` with kernel the span,
    ``lift`` is ``d x q`` made of standard basis vectors, ``proj @ lift = 1``.
    """
    if span.shape[1]:
        r, piv = field.rref(span.T.copy())
        r = r[:len(piv)]
    else:
        r, piv = field.zeros((0, d)), []
    free = [i for i in range(d) if i not in piv]
    proj = field.zeros((len(free), d))
    for k in range(d):
        v = field.zeros((d,))
        v[k] = field(1)
        for row, pc in zip(r, piv):
            if v[pc] != 0:
                v = field.reduce(v - v[pc] * row)
        proj[:, k] = v[free]
    lift = field.zeros((d, len(free)))
    for t, i in enumerate(free):
        lift[i, t] = field(1)
    return proj, lift


def _close_under(field: Field, start: np.ndarray, ops: Sequence[np.ndarray]) -> np.ndarray:
    """Smallest subspace containing the columns of ``start`` stable under ``ops``."""
    basis = field.column_space(start) if start.shape[1] else start
    while True:
        gens = [basis] + [field.matmul(op, basis) for op in ops]
        new = field.column_space(np.concatenate(gens, axis=1)) \
            if basis.shape[1] else basis
        if new.shape[1] == basis.shape[1]:
            return basis
        basis = new


def two_sided_ideal(a: FinDimAlgebra, generators: np.ndarray) -> np.ndarray:
    """Basis (columns) of the two-sided ideal generated by the given columns."""
    return _close_under(a.field, generators, a.left_matrices() + a.right_matrices())


@dataclass(frozen=True)
class QuotientAlgebra:
    source: FinDimAlgebra
    algebra: FinDimAlgebra
    projection: np.ndarray
    lift: np.ndarray
    ideal: np.ndarray


def quotient_algebra(a: FinDimAlgebra, ideal: np.ndarray) -> QuotientAlgebra:
    f, d = a.field, a.dim
    proj, lift = _complement_projection(f, ideal, d)
    q = proj.shape[0]
    c = f.zeros((q, q, q))
    for i in range(q):
        for j in range(q):
            c[i, j] = f.reduce(proj @ a.multiply(lift[:, i], lift[:, j]))
    unit = f.reduce(proj @ a.unit)
    return QuotientAlgebra(a, FinDimAlgebra(f, q, c, unit), proj, lift, ideal)


def commutator_ideal(a: FinDimAlgebra) -> np.ndarray:
    f, d = a.field, a.dim
    cols = []
    for i in range(d):
        for j in range(i + 1, d):
            v = f.reduce(a.mul[i, j] - a.mul[j, i])
            if any(x != 0 for x in v):
                cols.append(v)
    gens = np.stack(cols, axis=1) if cols else f.zeros((d, 0))
    return two_sided_ideal(a, gens)


def commutator_quotient_map(a: FinDimAlgebra) -> QuotientAlgebra:
    """``A -> Com(A) = A/[A, A]`` with the ideal generated by commutators."""
    qa = quotient_algebra(a, commutator_ideal(a))
    if not qa.algebra.is_commutative():
        raise AssertionError("commutator quotient is not commutative")
    return qa


def commutator_quotient(a: FinDimAlgebra) -> FinDimAlgebra:
    return commutator_quotient_map(a).algebra


# --------------------------------------------------------------------------
# bimodules built from A


def mult_kernel_bimodule(a: FinDimAlgebra) -> Bimodule:
    """``I_A = ker(μ: A ⊗ A -> A)`` with ``a(x ⊗ y)b = ax ⊗ yb``."""
    f, d = a.field, a.dim
    if d == 0:
        return Bimodule(a, 0, [], [])
    basis = f.kernel(a.multiplication_matrix())
    k = basis.shape[1]
    eye = f.eye(d)
    left, right = [], []
    for i in range(d):
        lo = f.reduce(np.kron(a.left_matrix(a.basis_vector(i)), eye))
        ro = f.reduce(np.kron(eye, a.right_matrix(a.basis_vector(i))))
        left.append(f.solve(basis, f.matmul(lo, basis)) if k else f.zeros((0, 0)))
        right.append(f.solve(basis, f.matmul(ro, basis)) if k else f.zeros((0, 0)))
    return Bimodule(a, k, left, right)


def free_bimodule(a: FinDimAlgebra) -> Bimodule:
    """``A ⊗ A`` with outer actions."""
    f, d = a.field, a.dim
    eye = f.eye(d)
    left = [f.reduce(np.kron(a.left_matrix(a.basis_vector(i)), eye)) for i in range(d)]
    right = [f.reduce(np.kron(eye, a.right_matrix(a.basis_vector(i)))) for i in range(d)]
    return Bimodule(a, d * d, left, right)


@dataclass(frozen=True)
class CentralQuotient:
    """``CQ(M) = M / <a·m - m·a>`` (sub-bimodule generated)."""

    dim: int
    projection: np.ndarray
    lift: np.ndarray
    kernel: np.ndarray


def central_quotient(m: Bimodule) -> CentralQuotient:
    a, f = m.algebra, m.algebra.field
    gens = [f.reduce(l - r) for l, r in zip(m.left, m.right)]
    start = np.concatenate(gens, axis=1) if gens else f.zeros((m.dim, 0))
    if m.dim == 0:
        start = f.zeros((0, 0))
    sub = _close_under(f, start, list(m.left) + list(m.right)) if m.dim else start
    proj, lift = _complement_projection(f, sub, m.dim)
    return CentralQuotient(proj.shape[0], proj, lift, sub)


def central_quotient_module(m: Bimodule) -> tuple[QuotientAlgebra, Bimodule, CentralQuotient]:
    """``CQ(M)`` as a module over ``Com(A)`` (symmetric bimodule)."""
    qa = commutator_quotient_map(m.algebra)
    cq = central_quotient(m)
    f = m.algebra.field
    acts = []
    for t in range(qa.algebra.dim):
        lifted = qa.lift[:, t]
        act = f.reduce(cq.projection @ m.left_of(lifted) @ cq.lift) \
            if cq.dim else f.zeros((0, 0))
        acts.append(act)
    return qa, Bimodule(qa.algebra, cq.dim, acts, acts), cq


def same_action(qa: QuotientAlgebra, n: Bimodule) -> Bimodule:
    """View a ``Com(A)``-module as an A-bimodule acting through ``A -> Com(A)``."""
    proj = qa.projection
    acts = [n.left_of(proj[:, i]) for i in range(proj.shape[1])]
    return Bimodule(qa.source, n.dim, acts, acts)


# --------------------------------------------------------------------------
# Hochschild homology


def _integer_data(field: Field, arrays: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Integer arrays proportional (by one common factor) to the inputs."""
    if field.p:
        return [np.asarray(a, dtype=np.int64) for a in arrays]
    den = 1
    for arr in arrays:
        for x in arr.flat:
            den = lcm(den, Fraction(x).denominator)
    return [np.array([int(Fraction(x) * den) for x in arr.flat],
                     dtype=object).reshape(arr.shape) for arr in arrays]


def _unit_first_basis(a: FinDimAlgebra) -> np.ndarray:
    f, d = a.field, a.dim
    piv = next(i for i in range(d) if a.unit[i] != 0)
    cols = [a.unit] + [a.basis_vector(i) for i in range(d) if i != piv]
    return np.stack(cols, axis=1)


def hochschild_boundaries(a: FinDimAlgebra, m: Bimodule, top: int,
                          normalized: bool = False) -> list[np.ndarray]:
    """Boundaries ``b_1..b_top`` of ``C_n = M ⊗ A^{⊗n}`` (or ``M ⊗ Ā^{⊗n}``).

    Entries are integers for F_p (residues) and a common integer multiple of
    the true entries for Q; ranks are unaffected by the common factor.
    """
    f = a.field
    if m.algebra is not a and m.algebra.dim != a.dim:
        raise ValidationError("bimodule lives over a different algebra")
    if normalized and a.dim:
        basis = _unit_first_basis(a)
        a2 = a.rebase(basis)
        left = [m.left_of(basis[:, i]) for i in range(a.dim)]
        right = [m.right_of(basis[:, i]) for i in range(a.dim)]
        keep = list(range(1, a.dim))
        mu = a2.multiplication_matrix()
        d = a.dim
        mu = mu[1:][:, [i * d + j for i in keep for j in keep]]
        left = [left[i] for i in keep]
        right = [right[i] for i in keep]
    else:
        mu = a.multiplication_matrix()
        left, right = list(m.left), list(m.right)
    d = len(left)
    dm = m.dim
    # R_M: M ⊗ A -> M and L_M: A ⊗ M -> M
    rm = f.zeros((dm, dm * d))
    lm = f.zeros((dm, d * dm))
    for j in range(d):
        for mi in range(dm):
            rm[:, mi * d + j] = right[j][:, mi]
            lm[:, j * dm + mi] = left[j][:, mi]
    mu_i, rm_i, lm_i = _integer_data(f, [mu, rm, lm]) if dm * d else (mu, rm, lm)
    dtype = np.int64 if f.p else object
    mu_i, rm_i, lm_i = (np.asarray(x, dtype=dtype) for x in (mu_i, rm_i, lm_i))
    out = []
    for n in range(1, top + 1):
        rows, cols = dm * d ** (n - 1), dm * d ** n
        config.check_entries(rows, cols, what=f"Hochschild boundary b_{n}")
        b = np.zeros((rows, cols), dtype=dtype)
        if rows and cols:
            b += np.kron(rm_i, np.eye(d ** (n - 1), dtype=dtype))
            for i in range(1, n):
                term = np.kron(np.eye(dm * d ** (i - 1), dtype=dtype),
                               np.kron(mu_i, np.eye(d ** (n - i - 1), dtype=dtype)))
                b += (-1) ** i * term
            last = np.kron(lm_i, np.eye(d ** (n - 1), dtype=dtype))
            idx = np.indices((dm, d ** (n - 1), d)).reshape(3, -1)
            src = (idx[2] * dm + idx[0]) * d ** (n - 1) + idx[1]
            b += (-1) ** n * last[:, src]
        if f.p:
            b = np.mod(b, f.p)
        out.append(b)
    return out


def _rank(field: Field, b: np.ndarray) -> int:
    if not b.size:
        return 0
    return int_rank(b) if field.p == 0 else field.rank(b)


def hochschild_homology(a: FinDimAlgebra, m: Bimodule, max_degree: int,
                        normalized: bool = False) -> list[int]:
    """``[dim HH_0(A; M), ..., dim HH_max_degree(A; M)]``."""
    f = a.field
    bds = hochschild_boundaries(a, m, max_degree + 1, normalized)
    d = a.dim - 1 if normalized and a.dim else a.dim
    ranks = [0] + [_rank(f, b) for b in bds]
    dims = [m.dim * d ** n for n in range(max_degree + 2)]
    return [dims[n] - ranks[n] - ranks[n + 1] for n in range(max_degree + 1)]


# --------------------------------------------------------------------------
# square-zero extensions and nilradicals


def square_zero_extension(r: FinDimAlgebra, m: Bimodule) -> FinDimAlgebra:
    """``R ⊕ M`` with ``(r, m)(r', m') = (rr', r·m' + m·r')``; ``M`` occupies
    the last ``dim M`` coordinates."""
    f = r.field
    d, k = r.dim, m.dim
    n = d + k
    c = f.zeros((n, n, n))
    c[:d, :d, :d] = r.mul
    for i in range(d):
        for t in range(k):
            c[i, d + t, d:] = m.left[i][:, t]
            c[d + t, i, d:] = m.right[i][:, t]
    unit = np.concatenate([r.unit, f.zeros((k,))])
    return FinDimAlgebra(f, n, c, unit, name=f"{r.name or 'R'}+M")


def nilradical(a: FinDimAlgebra) -> np.ndarray:
    """Basis (columns) of the nilradical of a commutative algebra.

    Characteristic 0: radical of the trace form ``(x, y) ↦ Tr(L_{xy})``.
    Characteristic p: kernel of a Frobenius power ``x ↦ x^{p^k}`` with
    ``p^k >= dim``, which is F_p-linear on commutative algebras. Every basis
    vector found is confirmed nilpotent with exponent at most ``2·dim``.
    """
    f, d = a.field, a.dim
    if not a.is_commutative():
        raise ValidationError("nilradical is only computed for commutative algebras")
    if d == 0:
        return f.zeros((0, 0))
    if f.p == 0:
        gram = f.zeros((d, d))
        for i in range(d):
            for j in range(d):
                lm = a.left_matrix(a.mul[i, j])
                gram[i, j] = sum(lm[t, t] for t in range(d))
        basis = f.kernel(gram)
    else:
        e = 1
        while f.p ** e < d:
            e += 1
        frob = np.stack([a.power(a.basis_vector(i), f.p ** e) for i in range(d)],
                        axis=1)
        basis = f.kernel(frob)
    for t in range(basis.shape[1]):
        if any(x != 0 for x in a.power(basis[:, t], 2 * d)):
            raise AssertionError("nilradical candidate is not nilpotent")
    return basis


def is_reduced(a: FinDimAlgebra) -> bool:
    return nilradical(a).shape[1] == 0


@dataclass(frozen=True)
class NilradicalCheck:
    nil_dim: int
    module_dim: int
    contains_module: bool
    equals_module: bool
    reduced: bool


def square_zero_check(r: FinDimAlgebra, m: Bimodule) -> tuple[FinDimAlgebra, NilradicalCheck]:
    """Build ``R ⊕ M`` and compare its nilradical with ``M``."""
    ext = square_zero_extension(r, m)
    f = r.field
    nil = nilradical(ext)
    d, k = r.dim, m.dim
    mod_basis = f.zeros((d + k, k))
    for t in range(k):
        mod_basis[d + t, t] = f(1)
    nil_rank = nil.shape[1]
    joint = f.rank(np.concatenate([nil, mod_basis], axis=1)) if d + k else 0
    contains = joint == nil_rank
    equals = contains and nil_rank == k
    return ext, NilradicalCheck(nil_rank, k, contains, equals, nil_rank == 0)
