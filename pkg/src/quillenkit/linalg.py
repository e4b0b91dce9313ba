"""Exact integer matrices and Smith normal form.

Matrices are dense numpy arrays holding either ``int64`` (while every
intermediate value provably fits) or Python ``int`` objects. Every update
checks a magnitude bound first and promotes to object dtype before a
machine integer could overflow, so results are always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import check_entries

_LIMIT = 1 << 62


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def _coerce(a) -> np.ndarray:
    """Return an int64 array if all entries fit comfortably, else object."""
    arr = np.asarray(a)
    if arr.dtype == object:
        if arr.size and _maxabs(arr) >= _LIMIT:
            return arr.copy()
        return arr.astype(np.int64)
    if arr.dtype.kind not in "iub":
        raise TypeError(f"integer entries required, got dtype {arr.dtype}")
    return arr.astype(np.int64)


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    inner = a.shape[1] if a.ndim == 2 else 1
    if a.dtype != object and b.dtype != object:
        if _maxabs(a) * _maxabs(b) * max(inner, 1) < _LIMIT:
            return a @ b
    return _coerce(a.astype(object) @ b.astype(object))


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_a",)

    def __init__(self, data, rows: int | None = None, cols: int | None = None):
        if rows is not None and cols is not None:
            flat = list(data)
            if len(flat) != rows * cols:
                raise ValueError(
                    f"{len(flat)} entries given for a {rows}x{cols} matrix"
                )
            arr = np.array(flat, dtype=object).reshape(rows, cols)
        else:
            arr = np.asarray(data)
            if arr.ndim != 2:
                if arr.size == 0:
                    arr = arr.reshape(0, 0)
                else:
                    raise ValueError("IntMatrix needs a 2-dimensional array")
        check_entries(arr.shape[0], arr.shape[1])
        arr = _coerce(arr)
        arr.setflags(write=False)
        self._a = arr

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(0, cols or 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(np.array(rows, dtype=object).reshape(len(rows), width))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        check_entries(rows, cols)
        return cls(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        check_entries(n, n)
        return cls(np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a.ravel())

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def __getitem__(self, key):
        out = self._a[key]
        if isinstance(out, np.ndarray):
            return out
        return int(out)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return IntMatrix(exact_matmul(self._a, other._a))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(self._a.astype(object) + other._a.astype(object))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(self._a.astype(object) - other._a.astype(object))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(-self._a.astype(object))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self._a.T.copy())

    def is_zero(self) -> bool:
        return not bool(np.any(self._a))

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.tolist())


def hstack(mats: Iterable[IntMatrix], rows: int) -> IntMatrix:
    mats = list(mats)
    if not mats:
        return IntMatrix.zeros(rows, 0)
    return IntMatrix(np.hstack([m.array.astype(object) for m in mats]))


def vstack(mats: Iterable[IntMatrix], cols: int) -> IntMatrix:
    mats = list(mats)
    if not mats:
        return IntMatrix.zeros(0, cols)
    return IntMatrix(np.vstack([m.array.astype(object) for m in mats]))


def block_diag(*mats: IntMatrix) -> IntMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=object)
    r = c = 0
    for m in mats:
        out[r:r + m.rows, c:c + m.cols] = m.array
        r += m.rows
        c += m.cols
    return IntMatrix(out)


def bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --------------------------------------------------------------------------
# Smith normal form


class _Reduction:
    """Row/column elimination state with optional transform tracking.

    Maintains ``u @ m @ v == a`` (and ``u_inv``, ``v_inv`` as exact inverses)
    while ``a`` is driven to Smith form.
    """

    def __init__(self, m: np.ndarray, track: bool):
        self.a = _coerce(m).copy()
        self.track = track
        r, c = self.a.shape
        if track:
            # transforms share the dtype of a, so promotion stays all-or-nothing
            dt = self.a.dtype
            self.u = np.eye(r, dtype=np.int64).astype(dt)
            self.u_inv = np.eye(r, dtype=np.int64).astype(dt)
            self.v = np.eye(c, dtype=np.int64).astype(dt)
            self.v_inv = np.eye(c, dtype=np.int64).astype(dt)

    def _promote(self):
        self.a = self.a.astype(object)
        if self.track:
            self.u = self.u.astype(object)
            self.u_inv = self.u_inv.astype(object)
            self.v = self.v.astype(object)
            self.v_inv = self.v_inv.astype(object)

    def _guard(self, *pairs):
        if self.a.dtype == object:
            return
        for base, q, src in pairs:
            if _maxabs(base) + _maxabs(q) * _maxabs(src) * max(len(q), 1) >= _LIMIT:
                self._promote()
                return

    def swap_rows(self, i, k):
        if i == k:
            return
        self.a[[i, k]] = self.a[[k, i]]
        if self.track:
            self.u[[i, k]] = self.u[[k, i]]
            self.u_inv[:, [i, k]] = self.u_inv[:, [k, i]]

    def swap_cols(self, j, k):
        if j == k:
            return
        self.a[:, [j, k]] = self.a[:, [k, j]]
        if self.track:
            self.v[:, [j, k]] = self.v[:, [k, j]]
            self.v_inv[[j, k]] = self.v_inv[[k, j]]

    def negate_row(self, k):
        self.a[k] = -self.a[k]
        if self.track:
            self.u[k] = -self.u[k]
            self.u_inv[:, k] = -self.u_inv[:, k]

    def row_axpy(self, targets, q, k, start):
        """rows[targets] -= q[:, None] * row[k]."""
        checks = [(self.a[targets, start:], q, self.a[k, start:])]
        if self.track:
            checks += [(self.u[targets], q, self.u[k]),
                       (self.u_inv[:, k], q, self.u_inv[:, targets])]
        self._guard(*checks)
        self.a[targets, start:] -= np.outer(q, self.a[k, start:])
        if self.track:
            self.u[targets] -= np.outer(q, self.u[k])
            self.u_inv[:, k] += self.u_inv[:, targets] @ q

    def col_axpy(self, targets, q, k, start):
        """cols[targets] -= col[k] * q[None, :]."""
        checks = [(self.a[start:, targets], q, self.a[start:, k])]
        if self.track:
            checks += [(self.v[:, targets], q, self.v[:, k]),
                       (self.v_inv[k], q, self.v_inv[targets])]
        self._guard(*checks)
        self.a[start:, targets] -= np.outer(self.a[start:, k], q)
        if self.track:
            self.v[:, targets] -= np.outer(self.v[:, k], q)
            self.v_inv[k] += q @ self.v_inv[targets]

    def add_row(self, src, dst):
        """row[dst] += row[src]."""
        one = np.array([-1], dtype=self.a.dtype)
        self.row_axpy(np.array([dst]), one, src, 0)

    def run(self, divisibility: bool) -> int:
        """Diagonalize; return the rank."""
        a = self.a
        rows, cols = a.shape
        k = 0
        while k < min(rows, cols):
            sub = self.a[k:, k:]
            nz = sub != 0
            if not nz.any():
                break
            absub = np.where(nz, np.abs(sub), np.iinfo(np.int64).max
                             if sub.dtype != object else _maxabs(sub) + 1)
            flat = int(np.argmin(absub))
            i, j = divmod(flat, sub.shape[1])
            self.swap_rows(k, k + i)
            self.swap_cols(k, k + j)
            while True:
                col = self.a[k + 1:, k]
                nzr = np.nonzero(col)[0]
                if len(nzr):
                    p = self.a[k, k]
                    q = col[nzr] // p
                    self.row_axpy(k + 1 + nzr, q, k, k)
                    rem = self.a[k + 1:, k]
                    nzr = np.nonzero(rem)[0]
                    if len(nzr):
                        best = nzr[int(np.argmin(np.abs(rem[nzr])))]
                        self.swap_rows(k, k + 1 + best)
                        continue
                row = self.a[k, k + 1:]
                nzc = np.nonzero(row)[0]
                if len(nzc):
                    p = self.a[k, k]
                    q = row[nzc] // p
                    self.col_axpy(k + 1 + nzc, q, k, k)
                    rem = self.a[k, k + 1:]
                    nzc = np.nonzero(rem)[0]
                    if len(nzc):
                        best = nzc[int(np.argmin(np.abs(rem[nzc])))]
                        self.swap_cols(k, k + 1 + best)
                        continue
                if divisibility:
                    p = self.a[k, k]
                    rest = self.a[k + 1:, k + 1:]
                    bad = np.nonzero(np.any(rest % p != 0, axis=1))[0]
                    if len(bad):
                        self.add_row(k + 1 + int(bad[0]), k)
                        continue
                break
            if self.a[k, k] < 0:
                self.negate_row(k)
            k += 1
        return k


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_decomposition`: ``u @ m @ v == d``."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix
    rank: int

    @property
    def diagonal(self) -> list[int]:
        return [self.d[i, i] for i in range(self.rank)]


def smith_decomposition(m: IntMatrix) -> SmithForm:
    red = _Reduction(m.array, track=True)
    rank = red.run(divisibility=True)
    return SmithForm(
        u=IntMatrix(red.u), d=IntMatrix(red.a), v=IntMatrix(red.v),
        u_inv=IntMatrix(red.u_inv), v_inv=IntMatrix(red.v_inv), rank=rank,
    )


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(u, d, v)`` with ``u @ m @ v == d`` in Smith normal form.

    ``u`` and ``v`` are unimodular. Pivots are chosen as the entry of
    smallest absolute value, first in row-major order, so the output is a
    deterministic function of the input.
    """
    sf = smith_decomposition(m)
    return sf.u, sf.d, sf.v


def diagonal_entries(m: IntMatrix | np.ndarray) -> list[int]:
    """Nonzero entries of *a* diagonal form of ``m`` (no transforms kept).

    The multiset determines the cokernel up to isomorphism but need not
    satisfy the divisibility chain; pass it through
    :func:`quillenkit.abelian.FGAbelianGroup.from_orders` to canonicalize.
    """
    arr = m.array if isinstance(m, IntMatrix) else m
    red = _Reduction(arr, track=False)
    rank = red.run(divisibility=False)
    return [abs(int(red.a[i, i])) for i in range(rank)]


def rank(m: IntMatrix | np.ndarray) -> int:
    """Rank over the rationals."""
    return len(diagonal_entries(m))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the (saturated) integer kernel of ``m``."""
    sf = smith_decomposition(m)
    return IntMatrix(sf.v.array[:, sf.rank:].copy())


def image_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the column lattice ``m(Z^n)``."""
    sf = smith_decomposition(m)
    # m v = u_inv d, so the first rank columns of u_inv * d_i span the image.
    cols = sf.u_inv.array[:, :sf.rank].astype(object) * np.array(
        sf.diagonal, dtype=object)
    return IntMatrix(cols.reshape(m.rows, sf.rank))


def solve_in_lattice(basis: IntMatrix, y: IntMatrix) -> IntMatrix:
    """Solve ``basis @ x == y`` exactly over the integers.

    ``basis`` may be rank deficient, in which case one solution is returned.
    Raises ``ValueError`` if some column of ``y`` is not an integer
    combination of the columns of ``basis``.
    """
    sf = smith_decomposition(basis)
    # u b v = d  =>  b x = y  <=>  d (v_inv x) = u y
    uy = (sf.u @ y).array.astype(object)
    z = np.zeros((basis.cols, y.cols), dtype=object)
    for i, di in enumerate(sf.diagonal):
        qr = [divmod(int(x), di) for x in uy[i]]
        if any(r for _, r in qr):
            raise ValueError("vector is not in the lattice")
        z[i] = [q for q, _ in qr]
    if np.any(uy[sf.rank:] != 0):
        raise ValueError("vector is not in the lattice span")
    return sf.v @ IntMatrix(z)


def in_lattice(basis: IntMatrix, y: IntMatrix) -> bool:
    """Whether every column of ``y`` lies in the column lattice of ``basis``."""
    try:
        solve_in_lattice(basis, y)
    except ValueError:
        return False
    return True
