"""Finite chain complexes of free abelian groups and their homology."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import FGAbelianGroup, invariant_factors
from .errors import DegreeError, ValidationError
from .linalg import IntMatrix, diagonal_entries


@dataclass(frozen=True)
class ChainComplexZ:
    """``C_N -> ... -> C_1 -> C_0`` with ``C_n = Z^{ranks[n]}``.

    ``boundaries[n - 1]`` is the matrix of ``d_n: C_n -> C_{n-1}``
    (``ranks[n-1]`` rows, ``ranks[n]`` columns) for ``n = 1..N``.
    """

    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        bds = tuple(self.boundaries)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "boundaries", bds)
        if not ranks:
            raise ValidationError("a chain complex needs at least degree 0",
                                  field="ranks")
        if len(bds) != len(ranks) - 1:
            raise ValidationError(
                f"{len(ranks)} ranks need {len(ranks) - 1} boundaries, "
                f"got {len(bds)}", field="boundaries")
        for n, d in enumerate(bds, start=1):
            if d.shape != (ranks[n - 1], ranks[n]):
                raise ValidationError(
                    f"boundary {n} has shape {d.shape}, expected "
                    f"{(ranks[n - 1], ranks[n])}", field="boundaries")
        for n in range(1, len(bds)):
            if not (bds[n - 1] @ bds[n]).is_zero():
                raise ValidationError(
                    f"d_{n} d_{n + 1} != 0", field="boundaries")

    @classmethod
    def from_lists(cls, ranks: Sequence[int],
                   boundaries: Sequence[Sequence[Sequence[int]]]):
        mats = []
        for n, rows in enumerate(boundaries, start=1):
            if not rows:
                mats.append(IntMatrix.zeros(ranks[n - 1], ranks[n]))
            else:
                mats.append(IntMatrix.from_rows(rows))
        return cls(tuple(ranks), tuple(mats))

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, n: int) -> IntMatrix:
        """``d_n``; zero maps outside ``1..N``."""
        if 1 <= n <= self.top:
            return self.boundaries[n - 1]
        rows = self.ranks[n - 1] if 0 < n <= self.top + 1 else 0
        cols = self.ranks[n] if 0 <= n <= self.top else 0
        return IntMatrix.zeros(rows, cols)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * r for n, r in enumerate(self.ranks))


def _homology_from(rank_n: int, out_diag: list[int], in_diag: list[int]):
    free = rank_n - len(out_diag) - len(in_diag)
    return FGAbelianGroup(free, tuple(invariant_factors(in_diag)))


def chain_homology(c: ChainComplexZ, n: int) -> FGAbelianGroup:
    """``H_n = ker d_n / im d_{n+1}`` in canonical form."""
    if not 0 <= n <= c.top:
        raise DegreeError(f"degree {n} outside 0..{c.top}")
    out_diag = diagonal_entries(c.boundary(n)) if n >= 1 else []
    in_diag = diagonal_entries(c.boundary(n + 1)) if n < c.top else []
    return _homology_from(c.ranks[n], out_diag, in_diag)


def all_homology(c: ChainComplexZ, upto: int | None = None) -> list[FGAbelianGroup]:
    """``[H_0, ..., H_upto]``, reducing each boundary only once."""
    upto = c.top if upto is None else upto
    if not 0 <= upto <= c.top:
        raise DegreeError(f"degree {upto} outside 0..{c.top}")
    diags = [[]] + [diagonal_entries(d) for d in c.boundaries[:upto + 1]]
    diags.append([])
    return [_homology_from(c.ranks[n], diags[n], diags[n + 1])
            for n in range(upto + 1)]
