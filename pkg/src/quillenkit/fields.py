"""Exact linear algebra over the rationals and prime fields.

Vectors and matrices are numpy object arrays of ``Fraction`` (for Q) or
``int64`` arrays of residues in ``[0, p)`` (for F_p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import ValidationError
from .linalg import rank as int_rank

MAX_PRIME = 97


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class Field:
    """``Field(0)`` is Q; ``Field(p)`` is F_p for a prime ``p <= 97``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not (_is_prime(self.p) and self.p <= MAX_PRIME):
            raise ValidationError(
                f"field characteristic must be 0 or a prime <= {MAX_PRIME}, "
                f"got {self.p}", field="field")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"F_{self.p}"

    def to_json(self):
        return "Q" if self.p == 0 else {"Fp": self.p}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if obj == "Q":
            return cls(0)
        if isinstance(obj, dict) and set(obj) == {"Fp"}:
            return cls(int(obj["Fp"]))
        raise ValidationError(f"unknown field {obj!r}", field="field")

    # ---- scalars

    def __call__(self, x):
        if self.p == 0:
            return Fraction(x)
        x = Fraction(x)
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
        return (x.numerator * pow(den, -1, self.p)) % self.p

    def inv(self, x):
        if self.p == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        if self.p == 0:
            out = np.empty(arr.shape, dtype=object)
            out.flat[:] = [Fraction(x) for x in arr.flat]
            return out
        out = np.empty(arr.shape, dtype=np.int64)
        out.flat[:] = [self(x) for x in arr.flat]
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.p == 0:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0))
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self(1)
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Normalize the result of arithmetic back into the field."""
        if self.p == 0:
            return arr
        return np.mod(arr, self.p).astype(np.int64)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 0:
            return a @ b
        if a.shape[-1] * (self.p - 1) ** 2 < (1 << 62):
            return np.mod(a @ b, self.p)
        return np.mod(a.astype(object) @ b.astype(object), self.p).astype(np.int64)

    def is_zero(self, arr: np.ndarray) -> bool:
        return not any(x != 0 for x in np.asarray(arr).flat)

    # ---- elimination

    def rref(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        a = m.copy()
        if self.p == 0:
            a = a.astype(object)
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = [i for i in range(r, rows) if a[i, c] != 0]
            if not nz:
                continue
            i = nz[0]
            if i != r:
                a[[r, i]] = a[[i, r]]
            a[r] = self.reduce(a[r] * self.inv(a[r, c]))
            others = [i for i in range(rows) if i != r and a[i, c] != 0]
            if others:
                f = a[others, c].copy()
                a[others] = self.reduce(a[others] - np.outer(f, a[r]))
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self, m: np.ndarray) -> int:
        if m.size == 0:
            return 0
        if self.p == 0:
            return int_rank(_integerize_columns(m))
        return _rank_mod_p(m, self.p)

    def kernel(self, m: np.ndarray) -> np.ndarray:
        """Columns form a basis of ``{x : m x = 0}``."""
        rows, cols = m.shape
        r, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in pivots]
        basis = self.zeros((cols, len(free)))
        for k, f in enumerate(free):
            basis[f, k] = self(1)
            for i, pc in enumerate(pivots):
                basis[pc, k] = (-r[i, f]) % self.p if self.p else -r[i, f]
        return basis

    def column_space(self, m: np.ndarray) -> np.ndarray:
        """Columns form a basis of the span of the columns of ``m``."""
        r, pivots = self.rref(m.T.copy())
        return r[:len(pivots)].T.copy()

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """One solution ``x`` of ``a x = b``; raises ``ValueError`` if none."""
        rows, cols = a.shape
        b2 = b.reshape(rows, -1)
        aug = np.concatenate([a, b2], axis=1)
        if self.p == 0:
            aug = aug.astype(object)
        r, pivots = self.rref(aug)
        if any(pc >= cols for pc in pivots):
            raise ValueError("inconsistent linear system")
        x = self.zeros((cols, b2.shape[1]))
        for i, pc in enumerate(pivots):
            x[pc] = r[i, cols:]
        return x.reshape((cols,) + b.shape[1:])


def _integerize_columns(m: np.ndarray) -> np.ndarray:
    """Scale each column by the lcm of its denominators (rank-preserving)."""
    out = np.empty(m.shape, dtype=object)
    for j in range(m.shape[1]):
        col = [Fraction(x) for x in m[:, j]]
        den = lcm(*(x.denominator for x in col)) if col else 1
        out[:, j] = [int(x * den) for x in col]
    return out


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    a = np.mod(np.asarray(m, dtype=np.int64), p)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if not len(nz):
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if len(below):
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def field_kernel_cokernel(m, field: Field) -> tuple[np.ndarray, int]:
    """Kernel basis (as columns) and ``rows - rank`` for a matrix over ``field``."""
    arr = field.array(m)
    if arr.ndim != 2:
        raise ValueError("matrix expected")
    rk = len(field.rref(arr)[1])
    return field.kernel(arr), arr.shape[0] - rk


Q = Field(0)
