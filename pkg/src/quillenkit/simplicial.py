"""Truncated simplicial abelian groups with free levels.

Face and degeneracy maps are stored as integer matrices acting on column
vectors, so ``d_i d_j`` is the matrix product ``faces[n-1][i] @ faces[n][j]``.
Normalization follows the convention ``N_n = ∩_{i>=1} ker d_i`` with
boundary ``d_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .abelian import FGAbelianGroup
from .chains import ChainComplexZ, all_homology, chain_homology
from .errors import DegreeError, ValidationError
from .linalg import IntMatrix, block_diag, kernel_basis, solve_in_lattice, vstack


@dataclass(frozen=True)
class SimplicialZModule:
    """Levels ``0..N`` with ``faces[n]`` (``n+1`` maps ``n -> n-1``, empty
    for ``n = 0``) and ``degeneracies[n]`` (``n+1`` maps ``n -> n+1``, for
    ``n < N``)."""

    levels: tuple[int, ...]
    faces: tuple[tuple[IntMatrix, ...], ...]
    degeneracies: tuple[tuple[IntMatrix, ...], ...]

    def __post_init__(self):
        levels = tuple(int(x) for x in self.levels)
        faces = tuple(tuple(f) for f in self.faces)
        degs = tuple(tuple(s) for s in self.degeneracies)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "degeneracies", degs)
        top = len(levels) - 1
        if top < 0:
            raise ValidationError("need at least level 0", field="levels")
        if len(faces) != top + 1 or faces[0]:
            raise ValidationError("faces must be indexed by level 0..N "
                                  "with no faces on level 0", field="faces")
        if len(degs) != top:
            raise ValidationError("degeneracies must be indexed by level "
                                  "0..N-1", field="degeneracies")
        for n in range(1, top + 1):
            if len(faces[n]) != n + 1:
                raise ValidationError(f"level {n} needs {n + 1} faces",
                                      field="faces")
            for d in faces[n]:
                if d.shape != (levels[n - 1], levels[n]):
                    raise ValidationError(f"face on level {n} has shape "
                                          f"{d.shape}", field="faces")
        for n in range(top):
            if len(degs[n]) != n + 1:
                raise ValidationError(f"level {n} needs {n + 1} degeneracies",
                                      field="degeneracies")
            for s in degs[n]:
                if s.shape != (levels[n + 1], levels[n]):
                    raise ValidationError(f"degeneracy on level {n} has "
                                          f"shape {s.shape}",
                                          field="degeneracies")
        _check_identities(self)

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def d(self, n: int, i: int) -> IntMatrix:
        return self.faces[n][i]

    def s(self, n: int, i: int) -> IntMatrix:
        return self.degeneracies[n][i]


def _check_identities(x: SimplicialZModule) -> None:
    top = x.top
    eye = [IntMatrix.identity(r) for r in x.levels]

    def fail(msg):
        raise ValidationError(f"simplicial identity violated: {msg}",
                              field="faces")

    for n in range(2, top + 1):
        for j in range(n + 1):
            for i in range(j):
                if x.d(n - 1, i) @ x.d(n, j) != x.d(n - 1, j - 1) @ x.d(n, i):
                    fail(f"d_{i} d_{j} != d_{j - 1} d_{i} on level {n}")
    for n in range(top):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = x.d(n + 1, i) @ x.s(n, j)
                if i < j:
                    rhs = x.s(n - 1, j - 1) @ x.d(n, i)
                elif i in (j, j + 1):
                    rhs = eye[n]
                else:
                    rhs = x.s(n - 1, j) @ x.d(n, i - 1)
                if lhs != rhs:
                    fail(f"d_{i} s_{j} on level {n}")
    for n in range(top - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if x.s(n + 1, i) @ x.s(n, j) != x.s(n + 1, j + 1) @ x.s(n, i):
                    fail(f"s_{i} s_{j} != s_{j + 1} s_{i} on level {n}")


def moore_complex(x: SimplicialZModule) -> ChainComplexZ:
    """Normalized complex ``N_n = ∩_{i>=1} ker d_i`` with boundary ``d_0``,
    written in an explicit integer basis of each intersection."""
    bases = [IntMatrix.identity(x.levels[0])]
    for n in range(1, x.top + 1):
        if n == 1:
            bases.append(kernel_basis(x.d(1, 1)))
        else:
            stacked = vstack([x.d(n, i) for i in range(1, n + 1)],
                             cols=x.levels[n])
            bases.append(kernel_basis(stacked))
    ranks = [b.cols for b in bases]
    bds = []
    for n in range(1, x.top + 1):
        image = x.d(n, 0) @ bases[n]
        if bases[n - 1].cols == 0 or bases[n].cols == 0:
            bds.append(IntMatrix.zeros(ranks[n - 1], ranks[n]))
        else:
            bds.append(solve_in_lattice(bases[n - 1], image))
    return ChainComplexZ(tuple(ranks), tuple(bds))


def alternating_sum_complex(x: SimplicialZModule) -> ChainComplexZ:
    """Unnormalized complex with ``d = Σ (-1)^i d_i``."""
    bds = []
    for n in range(1, x.top + 1):
        acc = np.zeros((x.levels[n - 1], x.levels[n]), dtype=object)
        for i in range(n + 1):
            acc += (-1) ** i * x.d(n, i).array.astype(object)
        bds.append(IntMatrix(acc))
    return ChainComplexZ(x.levels, tuple(bds))


def simplicial_pi(x: SimplicialZModule, n: int) -> FGAbelianGroup:
    """``π_n`` as ``H_n`` of the Moore complex; valid for ``n <= N - 1``."""
    if not 0 <= n <= x.top - 1:
        raise DegreeError(
            f"π_{n} is not determined by a truncation at level {x.top}; "
            f"trustworthy range is 0..{x.top - 1}")
    return chain_homology(moore_complex(x), n)


def simplicial_homotopy(x: SimplicialZModule) -> list[FGAbelianGroup]:
    """``[π_0, ..., π_{N-1}]``."""
    if x.top < 1:
        return []
    return all_homology(moore_complex(x), x.top - 1)


# --------------------------------------------------------------------------
# builders


def constant(rank: int, top: int) -> SimplicialZModule:
    eye = IntMatrix.identity(rank)
    return SimplicialZModule(
        levels=(rank,) * (top + 1),
        faces=((),) + tuple((eye,) * (n + 1) for n in range(1, top + 1)),
        degeneracies=tuple((eye,) * (n + 1) for n in range(top)),
    )


def direct_sum(x: SimplicialZModule, y: SimplicialZModule) -> SimplicialZModule:
    if x.top != y.top:
        raise ValidationError("direct sum needs equal truncation levels")
    top = x.top
    return SimplicialZModule(
        levels=tuple(a + b for a, b in zip(x.levels, y.levels)),
        faces=((),) + tuple(
            tuple(block_diag(x.d(n, i), y.d(n, i)) for i in range(n + 1))
            for n in range(1, top + 1)),
        degeneracies=tuple(
            tuple(block_diag(x.s(n, i), y.s(n, i)) for i in range(n + 1))
            for n in range(top)),
    )


def change_basis(x: SimplicialZModule, mats: Sequence[IntMatrix],
                 inverses: Sequence[IntMatrix]) -> SimplicialZModule:
    """Conjugate every structure map by unimodular ``mats[n]`` on level ``n``."""
    for p, q in zip(mats, inverses):
        if p @ q != IntMatrix.identity(p.rows):
            raise ValidationError("inverses do not match")
    top = x.top
    return SimplicialZModule(
        levels=x.levels,
        faces=((),) + tuple(
            tuple(mats[n - 1] @ x.d(n, i) @ inverses[n] for i in range(n + 1))
            for n in range(1, top + 1)),
        degeneracies=tuple(
            tuple(mats[n + 1] @ x.s(n, i) @ inverses[n] for i in range(n + 1))
            for n in range(top)),
    )


def truncate(x: SimplicialZModule, top: int) -> SimplicialZModule:
    if not 0 <= top <= x.top:
        raise DegreeError(f"cannot truncate level {x.top} data at {top}")
    return SimplicialZModule(x.levels[:top + 1], x.faces[:top + 1],
                             x.degeneracies[:top])


def _surjections(n: int, k: int) -> list[tuple[int, ...]]:
    """Monotone surjections ``[n] -> [k]`` as value tuples, lexicographic."""
    out = []
    for steps in product((0, 1), repeat=n):
        if sum(steps) != k:
            continue
        vals = [0]
        for s in steps:
            vals.append(vals[-1] + s)
        out.append(tuple(vals))
    return sorted(out)


def dold_kan(c: ChainComplexZ) -> SimplicialZModule:
    """Inverse Dold-Kan functor: ``Γ(C)_n = ⊕_{[n] ->> [k]} C_k``.

    A simplicial operator ``θ`` sends the summand indexed by ``σ`` to the
    summand of the surjective part of ``σθ``, by the identity when the
    injective part is the identity, by the boundary when it is ``δ^0`` and by
    zero otherwise. The Moore complex of the result is isomorphic to ``c``.
    """
    top = c.top
    index = []
    for n in range(top + 1):
        offs = {}
        pos = 0
        for k in range(n + 1):
            for sig in _surjections(n, k):
                offs[sig] = pos
                pos += c.ranks[k]
        index.append((offs, pos))

    def operator(n, m, theta):
        """Matrix of θ^*: level n -> level m, θ: [m] -> [n] given by values."""
        offs_n, size_n = index[n]
        offs_m, size_m = index[m]
        out = np.zeros((size_m, size_n), dtype=object)
        for sig, col in offs_n.items():
            k = sig[-1]
            comp = tuple(sig[t] for t in theta)
            image = sorted(set(comp))
            tau = tuple(image.index(v) for v in comp)
            r = c.ranks[k]
            if image == list(range(k + 1)):
                row = offs_m[tau]
                out[row:row + r, col:col + r] = np.eye(r, dtype=np.int64)
            elif image == list(range(1, k + 1)):
                row = offs_m[tau]
                out[row:row + c.ranks[k - 1], col:col + r] = c.boundary(k).array
        return IntMatrix(out)

    faces = [()]
    for n in range(1, top + 1):
        faces.append(tuple(
            operator(n, n - 1, tuple(t if t < i else t + 1 for t in range(n)))
            for i in range(n + 1)))
    degs = []
    for n in range(top):
        degs.append(tuple(
            operator(n, n + 1, tuple(t if t <= i else t - 1 for t in range(n + 2)))
            for i in range(n + 1)))
    return SimplicialZModule(tuple(index[n][1] for n in range(top + 1)),
                             tuple(faces), tuple(degs))


def bar_construction(group, rep, top: int) -> SimplicialZModule:
    """Simplicial abelian group ``B_n = M ⊗ Z[G^n]`` computing ``H_*(G; M)``.

    ``group`` needs ``order``, ``mul(a, b)`` and ``inv(a)``; ``rep`` needs
    ``rank`` and ``action_matrix(g)``. Faces: ``d_0`` acts on ``m`` by
    ``g_1^{-1}``, inner faces multiply neighbours, ``d_n`` drops ``g_n``.
    Degeneracies insert the identity element.
    """
    order, rank = group.order, rep.rank
    acts = [rep.action_matrix(group.inv(g)).array for g in range(order)]

    def code(t):
        out = 0
        for g in t:
            out = out * order + g
        return out

    tuples = [list(product(range(order), repeat=n)) for n in range(top + 2)]

    def build(n_src, n_dst, fn):
        out = np.zeros((rank * order ** n_dst, rank * order ** n_src),
                       dtype=np.int64)
        for t in tuples[n_src]:
            tgt, mat = fn(t)
            c0, r0 = code(t) * rank, code(tgt) * rank
            out[r0:r0 + rank, c0:c0 + rank] += mat
        return IntMatrix(out)

    eye = np.eye(rank, dtype=np.int64)
    faces = [()]
    for n in range(1, top + 1):
        fs = [build(n, n - 1, lambda t: (t[1:], acts[t[0]]))]
        for i in range(1, n):
            fs.append(build(n, n - 1, lambda t, i=i: (
                t[:i - 1] + (group.mul(t[i - 1], t[i]),) + t[i + 1:], eye)))
        fs.append(build(n, n - 1, lambda t: (t[:-1], eye)))
        faces.append(tuple(fs))
    degs = []
    for n in range(top):
        degs.append(tuple(
            build(n, n + 1, lambda t, i=i: (t[:i] + (0,) + t[i:], eye))
            for i in range(n + 1)))
    return SimplicialZModule(tuple(rank * order ** n for n in range(top + 1)),
                             tuple(faces), tuple(degs))
