"""Random valid inputs for the property suites (numpy Generator driven)."""

import numpy as np

from quillenkit.builtins import builtin_group
from quillenkit.chains import ChainComplexZ
from quillenkit.groups import ZGRep, augmentation_ideal, regular_rep, trivial_rep
from quillenkit.linalg import IntMatrix, block_diag, kernel_basis
from quillenkit.simplicial import change_basis, constant, direct_sum, dold_kan


def random_matrix(rng, max_size=8, lo=-9, hi=9) -> IntMatrix:
    r, c = rng.integers(1, max_size + 1, size=2)
    return IntMatrix(rng.integers(lo, hi + 1, size=(r, c)))


def random_unimodular(rng, n: int, steps: int = 6) -> tuple[IntMatrix, IntMatrix]:
    """``(p, p^-1)`` built from elementary row operations."""
    p = np.eye(n, dtype=np.int64)
    q = np.eye(n, dtype=np.int64)
    for _ in range(steps if n > 1 else 0):
        i, j = rng.choice(n, size=2, replace=False)
        a = int(rng.integers(-2, 3))
        # p <- E p with E = 1 + a e_ij, and q <- q E^-1
        p[i] += a * p[j]
        q[:, j] -= a * q[:, i]
    if n and rng.random() < 0.5:
        p[0] *= -1
        q[:, 0] *= -1
    return IntMatrix(p), IntMatrix(q)


def random_chain_complex(rng, top: int, max_rank: int = 2) -> ChainComplexZ:
    ranks = [int(rng.integers(0, max_rank + 1)) for _ in range(top + 1)]
    bds = []
    prev = None
    for n in range(1, top + 1):
        rows, cols = ranks[n - 1], ranks[n]
        if prev is None:
            d = IntMatrix(rng.integers(-3, 4, size=(rows, cols)))
        else:
            # columns in the kernel of the previous boundary keep d d = 0
            k = kernel_basis(prev)
            coeffs = IntMatrix(rng.integers(-2, 3, size=(k.cols, cols)))
            d = k @ coeffs if k.cols else IntMatrix.zeros(rows, cols)
        bds.append(d)
        prev = d
    return ChainComplexZ(tuple(ranks), tuple(bds))


def random_simplicial(rng, max_level: int = 3, max_rank: int = 4):
    """A valid simplicial module with ``top <= max_level`` and level ranks
    ``<= max_rank``: Dold-Kan of a small complex, plus constants, conjugated
    by unimodular changes of basis."""
    while True:
        top = int(rng.integers(0, max_level + 1))
        x = dold_kan(random_chain_complex(rng, top, max_rank=1 + int(rng.integers(0, 2))))
        if rng.random() < 0.4:
            x = direct_sum(x, constant(int(rng.integers(1, 3)), top))
        if max(x.levels) > max_rank:
            continue
        if rng.random() < 0.7:
            pairs = [random_unimodular(rng, r) for r in x.levels]
            x = change_basis(x, [p for p, _ in pairs], [q for _, q in pairs])
        return x


_REPS = (trivial_rep, regular_rep, augmentation_ideal)


def _sum_reps(g, reps):
    rank = sum(r.rank for r in reps)
    acts = [block_diag(*[r.action_matrix(e) for r in reps]) for e in g.elements]
    return ZGRep(g, rank, acts)


def random_rep(rng, g) -> ZGRep:
    k = int(rng.integers(1, 3))
    return _sum_reps(g, [_REPS[int(rng.integers(0, 3))](g) for _ in range(k)])


def random_equivariant_map(rng, group_names=("C2", "C3", "C2xC2", "S3")):
    """``(f, m, n)`` with ``f`` a G-map obtained by averaging a random matrix
    ``x`` as ``Σ_g ρ_N(g) x ρ_M(g^-1)``."""
    g = builtin_group(group_names[int(rng.integers(0, len(group_names)))])
    m, n = random_rep(rng, g), random_rep(rng, g)
    x = IntMatrix(rng.integers(-2, 3, size=(n.rank, m.rank)))
    acc = IntMatrix.zeros(n.rank, m.rank).array.astype(object)
    for e in g.elements:
        acc = acc + (n.action_matrix(e) @ x @ m.action_matrix(g.inv(e))).array
    return IntMatrix(acc), m, n
